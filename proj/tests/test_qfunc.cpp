#include <doctest.h>

#include <random>

#include "brauerpaths/qfunc.hpp"

using namespace brauerpaths;

namespace {

RationalFunctionQ random_function(std::mt19937& rng) {
    std::uniform_int_distribution<int> deg(0, 3), coeff(-4, 4);
    auto poly = [&](bool nonzero) {
        std::vector<BigInt> c(static_cast<std::size_t>(deg(rng)) + 1);
        for (auto& x : c) x = coeff(rng);
        IntPolynomial p{std::move(c)};
        if (nonzero && p.is_zero()) p = IntPolynomial::constant(1);
        return p;
    };
    return RationalFunctionQ(poly(false), poly(true));
}

}  // namespace

TEST_CASE("quantum integers expand to the balanced form") {
    CHECK(qint(0).is_zero());
    CHECK(qint(1) == RationalFunctionQ(1));
    // [2] = q + 1/q = (q^2 + 1)/q
    auto two = qint(2);
    CHECK(two == RationalFunctionQ::qpow(1) + RationalFunctionQ::qpow(-1));
    CHECK(two.to_string() == "(q^2 + 1) / (q)");
    CHECK(qint(-3) == -qint(3));
    for (int h = 1; h <= 6; ++h) {
        auto lhs = qint(h + 1) + qint(h - 1);
        auto rhs = (RationalFunctionQ::qpow(1) + RationalFunctionQ::qpow(-1)) * qint(h);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("arithmetic keeps the canonical form") {
    auto q = RationalFunctionQ::q();
    auto one = RationalFunctionQ(1);
    // (q-1)/q + 1/q = 1
    CHECK((q - one) / q + one / q == one);
    // (q^2-1)/(q-1) = q+1
    CHECK((q * q - one) / (q - one) == q + one);
    auto f = one / (q - one);
    CHECK((f - f).is_zero());
    CHECK((f - f) == RationalFunctionQ());
    CHECK_THROWS_AS(one / RationalFunctionQ(), ValidationError);
}

TEST_CASE("evaluation and valuations") {
    // [3] at q = 2 is (8 - 1/8)/(2 - 1/2) = 21/4
    auto v = qint(3).eval_at(BigRat(2));
    REQUIRE(v.has_value());
    CHECK(*v == BigRat(21, 4));

    // [2] vanishes at a primitive 4th root of unity (q = i)
    CHECK(qint(2).valuation_at_root_of_unity(4) == 1);
    CHECK((RationalFunctionQ(1) / qint(2)).valuation_at_root_of_unity(4) == -1);
    CHECK(qint(3).valuation_at_root_of_unity(6) == 1);  // [3] = 0 at primitive 6th roots

    // value-or-pole reports at roots of unity
    auto at_i = qint(2).eval_at_root_of_unity(4);
    CHECK(at_i.is_zero());
    auto pole_at_i = (RationalFunctionQ(1) / qint(2)).eval_at_root_of_unity(4);
    CHECK(pole_at_i.is_pole());
    CHECK(pole_at_i.valuation == -1);
    auto finite = qint(3).eval_at_root_of_unity(8);  // [3] at exp(i*pi/4) = q^2+1+q^-2 = 1
    CHECK(finite.valuation == 0);
    CHECK(std::abs(finite.approx - std::complex<double>(1.0, 0.0)) < 1e-9);

    // pole of 1/(q-2) at q=2
    auto q = RationalFunctionQ::q();
    auto pole = RationalFunctionQ(1) / (q - RationalFunctionQ(2));
    CHECK_FALSE(pole.eval_at(BigRat(2)).has_value());
    CHECK(pole.valuation_at(BigRat(2)) == -1);
    // removable: (q-2)^2/(q-2) evaluates to 0
    auto g = (q - RationalFunctionQ(2));
    auto removable = RationalFunctionQ(g.num() * g.num(), g.num());
    auto rv = removable.eval_at(BigRat(2));
    REQUIRE(rv.has_value());
    CHECK(*rv == 0);
    CHECK(RationalFunctionQ().valuation_at(BigRat(1)) == RationalFunctionQ::kValuationOfZero);
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic(1).to_string() == "q - 1");
    CHECK(cyclotomic(4).to_string() == "q^2 + 1");
    CHECK(cyclotomic(6).to_string() == "q^2 - q + 1");
    // product over divisors of 12 reassembles q^12 - 1
    IntPolynomial prod = IntPolynomial::one();
    for (int d : {1, 2, 3, 4, 6, 12}) prod = prod * cyclotomic(d);
    std::vector<BigInt> expect(13, BigInt(0));
    expect[0] = -1;
    expect[12] = 1;
    CHECK(prod == IntPolynomial(std::move(expect)));
}

TEST_CASE("field axioms hold on random functions") {
    std::mt19937 rng(20240811u);
    for (int trial = 0; trial < 200; ++trial) {
        auto a = random_function(rng), b = random_function(rng), c = random_function(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + RationalFunctionQ() == a);
        CHECK(a * RationalFunctionQ(1) == a);
        CHECK((a - a).is_zero());
        if (!b.is_zero()) CHECK(a / b * b == a);
    }
}

TEST_CASE("canonical form has a monic denominator") {
    auto f = RationalFunctionQ::from_coeffs({BigRat(1)}, {BigRat(2), BigRat(4)});  // 1/(4q+2)
    auto [n, d] = f.canonical();
    REQUIRE(d.size() == 2);
    CHECK(d[1] == 1);
    CHECK(d[0] == BigRat(1, 2));
    REQUIRE(n.size() == 1);
    CHECK(n[0] == BigRat(1, 4));
}
