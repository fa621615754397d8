#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "brauerpaths/errors.hpp"

namespace brauerpaths {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Dense polynomial in q with exact integer coefficients. This is the
/// workhorse behind RationalFunctionQ: a rational-coefficient fraction is
/// kept as (rational scalar) * primitive-integer-poly / primitive-integer-poly
/// so that gcds run over Z[q] instead of Q[q].
class IntPolynomial {
public:
    IntPolynomial() = default;  // the zero polynomial
    explicit IntPolynomial(std::vector<BigInt> coeffs);

    static IntPolynomial constant(BigInt c);
    static IntPolynomial one() { return constant(1); }
    /// c * q^k, k >= 0
    static IntPolynomial monomial(int k, BigInt c = 1);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    BigInt coeff(int k) const;
    const BigInt& leading() const;
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    /// gcd of the coefficients, nonnegative; 0 for the zero polynomial.
    BigInt content() const;
    /// poly / content, with positive leading coefficient; zero stays zero.
    IntPolynomial primitive_part() const;

    IntPolynomial operator-() const;
    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const IntPolynomial& o) const { return !(*this == o); }

    /// Exact division; throws std::logic_error if the divisor does not divide.
    IntPolynomial exact_divide(const IntPolynomial& divisor) const;
    bool divisible_by(const IntPolynomial& divisor) const;

    /// Primitive-Euclid gcd, primitive with positive leading coefficient.
    static IntPolynomial gcd(IntPolynomial a, IntPolynomial b);

    BigRat eval(const BigRat& x) const;
    std::complex<double> eval(const std::complex<double>& x) const;

    std::string to_string() const;  // sparse `c*q^k` form

private:
    void trim();
    std::vector<BigInt> coeffs_;  // coeffs_[k] is the coefficient of q^k
};

/// The m-th cyclotomic polynomial (integer coefficients, cached).
const IntPolynomial& cyclotomic(int m);

/// Exact univariate rational function of q over the rationals.
///
/// Canonical form: zero is scale 0; otherwise num/den are coprime primitive
/// integer polynomials with positive leading coefficients and the sign plus
/// rational content live in `scale`. The (reduced fraction, monic
/// denominator) view over Q is exposed by canonical().
class RationalFunctionQ {
public:
    RationalFunctionQ() : scale_(0), num_(IntPolynomial::one()), den_(IntPolynomial::one()) {}
    RationalFunctionQ(const BigRat& r);
    RationalFunctionQ(long v) : RationalFunctionQ(BigRat(v)) {}
    RationalFunctionQ(int v) : RationalFunctionQ(BigRat(v)) {}
    RationalFunctionQ(IntPolynomial num, IntPolynomial den = IntPolynomial::one(),
                      BigRat scale = 1);

    static RationalFunctionQ from_coeffs(const std::vector<BigRat>& num_coeffs,
                                         const std::vector<BigRat>& den_coeffs = {BigRat(1)});
    static RationalFunctionQ q() { return RationalFunctionQ(IntPolynomial::monomial(1)); }
    /// q^k for any integer k (negative powers allowed).
    static RationalFunctionQ qpow(int k);

    bool is_zero() const { return scale_ == 0; }
    const BigRat& scale() const { return scale_; }
    const IntPolynomial& num() const { return num_; }
    const IntPolynomial& den() const { return den_; }

    RationalFunctionQ operator-() const;
    RationalFunctionQ operator+(const RationalFunctionQ& o) const;
    RationalFunctionQ operator-(const RationalFunctionQ& o) const;
    RationalFunctionQ operator*(const RationalFunctionQ& o) const;
    /// Throws ValidationError on division by the zero function.
    RationalFunctionQ operator/(const RationalFunctionQ& o) const;
    RationalFunctionQ& operator+=(const RationalFunctionQ& o) { return *this = *this + o; }
    RationalFunctionQ& operator-=(const RationalFunctionQ& o) { return *this = *this - o; }
    RationalFunctionQ& operator*=(const RationalFunctionQ& o) { return *this = *this * o; }

    bool operator==(const RationalFunctionQ& o) const;
    bool operator!=(const RationalFunctionQ& o) const { return !(*this == o); }

    /// {numerator coefficients, monic denominator coefficients} over Q,
    /// index = power of q; the reduced-fraction canonical form.
    std::pair<std::vector<BigRat>, std::vector<BigRat>> canonical() const;

    /// Value at a rational point, or nullopt at a pole.
    std::optional<BigRat> eval_at(const BigRat& q0) const;

    static constexpr int kValuationOfZero = std::numeric_limits<int>::max();

    /// Order of vanishing at q0 (negative = pole order); kValuationOfZero for
    /// the zero function. q0 must be nonzero to be meaningful for Laurent use.
    int valuation_at(const BigRat& q0) const;
    /// Order of vanishing at a primitive `order`-th root of unity.
    int valuation_at_root_of_unity(int order) const;
    /// Floating-point value at exp(2*pi*i/order); diagnostic only, and only
    /// meaningful when the valuation there is zero.
    std::complex<double> approx_at_root_of_unity(int order) const;

    /// Value-or-pole report at a primitive root of unity: exactly zero when
    /// the valuation is positive, a pole when negative, otherwise a nonzero
    /// value with a floating-point approximation.
    struct RootOfUnityEval {
        int valuation;
        std::complex<double> approx;  // meaningful only when valuation == 0

        bool is_zero() const { return valuation > 0; }
        bool is_pole() const { return valuation < 0; }
    };
    RootOfUnityEval eval_at_root_of_unity(int order) const;

    std::string to_string() const;  // "num / den" with sparse c*q^k terms

private:
    void canonicalize();
    BigRat scale_;
    IntPolynomial num_, den_;
};

/// Balanced quantum integer [h] = (q^h - q^-h)/(q - q^-1) as a rational
/// function: [0] = 0, [1] = 1, [2] = q + 1/q, [-h] = -[h].
RationalFunctionQ qint(int h);

}  // namespace brauerpaths
