#include "brauerpaths/qfunc.hpp"

#include <cmath>
#include <map>
#include <sstream>

namespace brauerpaths {

namespace {

BigInt int_gcd(BigInt a, BigInt b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        BigInt t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// cpp_rational's two-argument constructor rejects negative denominators.
BigRat make_rat(BigInt n, BigInt d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    return BigRat(std::move(n), std::move(d));
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::constant(BigInt c) {
    IntPolynomial p;
    if (c != 0) p.coeffs_.push_back(std::move(c));
    return p;
}

IntPolynomial IntPolynomial::monomial(int k, BigInt c) {
    IntPolynomial p;
    if (c != 0) {
        p.coeffs_.assign(static_cast<std::size_t>(k) + 1, BigInt(0));
        p.coeffs_.back() = std::move(c);
    }
    return p;
}

BigInt IntPolynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return BigInt(0);
    return coeffs_[static_cast<std::size_t>(k)];
}

const BigInt& IntPolynomial::leading() const {
    static const BigInt zero(0);
    return coeffs_.empty() ? zero : coeffs_.back();
}

BigInt IntPolynomial::content() const {
    BigInt g(0);
    for (const auto& c : coeffs_) {
        g = int_gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
    if (is_zero()) return *this;
    BigInt g = content();
    if (leading() < 0) g = -g;
    IntPolynomial out = *this;
    for (auto& c : out.coeffs_) c /= g;
    return out;
}

IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    IntPolynomial out;
    out.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()), BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out.coeffs_[i] += o.coeffs_[i];
    out.trim();
    return out;
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const { return *this + (-o); }

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return IntPolynomial();
    IntPolynomial out;
    out.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            out.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    out.trim();
    return out;
}

IntPolynomial IntPolynomial::exact_divide(const IntPolynomial& divisor) const {
    if (divisor.is_zero()) throw std::logic_error("polynomial division by zero");
    if (is_zero()) return IntPolynomial();
    std::vector<BigInt> rem = coeffs_;
    int dr = degree(), dd = divisor.degree();
    if (dr < dd) throw std::logic_error("polynomial division is not exact");
    std::vector<BigInt> quot(static_cast<std::size_t>(dr - dd) + 1, BigInt(0));
    for (int k = dr - dd; k >= 0; --k) {
        BigInt top = rem[static_cast<std::size_t>(k + dd)];
        if (top % divisor.leading() != 0) throw std::logic_error("polynomial division is not exact");
        BigInt f = top / divisor.leading();
        quot[static_cast<std::size_t>(k)] = f;
        if (f != 0)
            for (int i = 0; i <= dd; ++i)
                rem[static_cast<std::size_t>(k + i)] -= f * divisor.coeff(i);
    }
    for (const auto& c : rem)
        if (c != 0) throw std::logic_error("polynomial division is not exact");
    return IntPolynomial(std::move(quot));
}

bool IntPolynomial::divisible_by(const IntPolynomial& divisor) const {
    try {
        exact_divide(divisor);
        return true;
    } catch (const std::logic_error&) {
        return false;
    }
}

namespace {

// lc(b)^(deg a - deg b + 1) * a mod b, the classical pseudo-remainder.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> rem = a.coeffs();
    const int db = b.degree();
    const BigInt& lb = b.leading();
    int dr = a.degree();
    while (dr >= db) {
        BigInt f = rem[static_cast<std::size_t>(dr)];
        for (auto& c : rem) c *= lb;
        for (int i = 0; i <= db; ++i)
            rem[static_cast<std::size_t>(dr - db + i)] -= f * b.coeff(i);
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        dr = static_cast<int>(rem.size()) - 1;
    }
    return IntPolynomial(std::move(rem));
}

}  // namespace

IntPolynomial IntPolynomial::gcd(IntPolynomial a, IntPolynomial b) {
    a = a.primitive_part();
    b = b.primitive_part();
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPolynomial r = pseudo_remainder(a, b).primitive_part();
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

BigRat IntPolynomial::eval(const BigRat& x) const {
    BigRat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + BigRat(*it);
    return acc;
}

std::complex<double> IntPolynomial::eval(const std::complex<double>& x) const {
    std::complex<double> acc(0.0, 0.0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + std::complex<double>(static_cast<double>(*it), 0.0);
    return acc;
}

namespace {

std::string term_to_string(const std::string& coeff, int k, bool coeff_is_one) {
    if (k == 0) return coeff;
    std::string qk = (k == 1) ? "q" : "q^" + std::to_string(k);
    return coeff_is_one ? qk : coeff + "*" + qk;
}

template <typename Coeff>
std::string poly_to_string(const std::vector<Coeff>& coeffs) {
    if (coeffs.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k) {
        const Coeff& c = coeffs[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        Coeff abs_c = c < 0 ? Coeff(-c) : c;
        if (first) {
            out << (c < 0 ? "-" : "");
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        std::ostringstream cs;
        cs << abs_c;
        out << term_to_string(cs.str(), k, abs_c == 1);
    }
    if (first) return "0";
    return out.str();
}

}  // namespace

std::string IntPolynomial::to_string() const { return poly_to_string(coeffs_); }

const IntPolynomial& cyclotomic(int m) {
    if (m < 1) throw ValidationError("cyclotomic order must be positive");
    static std::map<int, IntPolynomial> cache;
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    // q^m - 1 = prod_{d | m} Phi_d
    std::vector<BigInt> c(static_cast<std::size_t>(m) + 1, BigInt(0));
    c[0] = -1;
    c.back() = 1;
    IntPolynomial phi{std::move(c)};
    for (int d = 1; d < m; ++d)
        if (m % d == 0) phi = phi.exact_divide(cyclotomic(d));
    return cache.emplace(m, std::move(phi)).first->second;
}

RationalFunctionQ::RationalFunctionQ(const BigRat& r)
    : scale_(r), num_(IntPolynomial::one()), den_(IntPolynomial::one()) {}

RationalFunctionQ::RationalFunctionQ(IntPolynomial num, IntPolynomial den, BigRat scale)
    : scale_(std::move(scale)), num_(std::move(num)), den_(std::move(den)) {
    canonicalize();
}

void RationalFunctionQ::canonicalize() {
    if (den_.is_zero()) throw ValidationError("rational function with zero denominator");
    if (num_.is_zero() || scale_ == 0) {
        scale_ = 0;
        num_ = IntPolynomial::one();
        den_ = IntPolynomial::one();
        return;
    }
    BigInt cn = num_.content(), cd = den_.content();
    if (num_.leading() < 0) cn = -cn;
    if (den_.leading() < 0) cd = -cd;
    scale_ *= make_rat(cn, cd);
    num_ = num_.primitive_part();
    den_ = den_.primitive_part();
    IntPolynomial g = IntPolynomial::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.exact_divide(g);
        den_ = den_.exact_divide(g);
    }
}

RationalFunctionQ RationalFunctionQ::from_coeffs(const std::vector<BigRat>& num_coeffs,
                                                 const std::vector<BigRat>& den_coeffs) {
    // Clear rational denominators into the scale.
    auto clear = [](const std::vector<BigRat>& cs, IntPolynomial& poly) -> BigInt {
        BigInt lcm(1);
        for (const auto& c : cs) {
            BigInt d = denominator(c);
            lcm = lcm / int_gcd(lcm, d) * d;
        }
        std::vector<BigInt> ic;
        ic.reserve(cs.size());
        for (const auto& c : cs) ic.push_back(numerator(c) * (lcm / denominator(c)));
        poly = IntPolynomial(std::move(ic));
        return lcm;
    };
    IntPolynomial n, d;
    BigInt ln = clear(num_coeffs, n), ld = clear(den_coeffs, d);
    return RationalFunctionQ(std::move(n), std::move(d), make_rat(ld, ln));
}

RationalFunctionQ RationalFunctionQ::qpow(int k) {
    if (k >= 0) return RationalFunctionQ(IntPolynomial::monomial(k));
    return RationalFunctionQ(IntPolynomial::one(), IntPolynomial::monomial(-k));
}

RationalFunctionQ RationalFunctionQ::operator-() const {
    RationalFunctionQ out = *this;
    out.scale_ = -out.scale_;
    return out;
}

RationalFunctionQ RationalFunctionQ::operator+(const RationalFunctionQ& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    // scale*n/d + scale'*n'/d' = (a*n*d' + b*n'*d) / (c*d*d') with integers a,b,c.
    BigInt p1 = numerator(scale_) * denominator(o.scale_);
    BigInt p2 = numerator(o.scale_) * denominator(scale_);
    BigInt dd = denominator(scale_) * denominator(o.scale_);
    IntPolynomial n = IntPolynomial::constant(p1) * num_ * o.den_ +
                      IntPolynomial::constant(p2) * o.num_ * den_;
    return RationalFunctionQ(std::move(n), den_ * o.den_, make_rat(1, dd));
}

RationalFunctionQ RationalFunctionQ::operator-(const RationalFunctionQ& o) const {
    return *this + (-o);
}

RationalFunctionQ RationalFunctionQ::operator*(const RationalFunctionQ& o) const {
    if (is_zero() || o.is_zero()) return RationalFunctionQ();
    // Cross-reduce before multiplying so gcds stay small.
    IntPolynomial g1 = IntPolynomial::gcd(num_, o.den_);
    IntPolynomial g2 = IntPolynomial::gcd(o.num_, den_);
    IntPolynomial n1 = g1.degree() > 0 ? num_.exact_divide(g1) : num_;
    IntPolynomial d2 = g1.degree() > 0 ? o.den_.exact_divide(g1) : o.den_;
    IntPolynomial n2 = g2.degree() > 0 ? o.num_.exact_divide(g2) : o.num_;
    IntPolynomial d1 = g2.degree() > 0 ? den_.exact_divide(g2) : den_;
    return RationalFunctionQ(n1 * n2, d1 * d2, scale_ * o.scale_);
}

RationalFunctionQ RationalFunctionQ::operator/(const RationalFunctionQ& o) const {
    if (o.is_zero()) throw ValidationError("division by the zero rational function");
    RationalFunctionQ inv(o.den_, o.num_, BigRat(1) / o.scale_);
    return *this * inv;
}

bool RationalFunctionQ::operator==(const RationalFunctionQ& o) const {
    return scale_ == o.scale_ && num_ == o.num_ && den_ == o.den_;
}

std::pair<std::vector<BigRat>, std::vector<BigRat>> RationalFunctionQ::canonical() const {
    std::vector<BigRat> n, d;
    if (is_zero()) {
        d.push_back(BigRat(1));
        return {n, d};
    }
    BigRat lead(den_.leading());
    BigRat nf = scale_ / lead;
    for (const auto& c : num_.coeffs()) n.push_back(nf * BigRat(c));
    for (const auto& c : den_.coeffs()) d.push_back(BigRat(c) / lead);
    return {n, d};
}

namespace {

// Multiplicity of the root q0 in p; deflates with exact rational synthetic division.
int rational_root_multiplicity(const IntPolynomial& p, const BigRat& q0) {
    std::vector<BigRat> cs;
    cs.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) cs.push_back(BigRat(c));
    int mult = 0;
    while (!cs.empty()) {
        // Horner: value and deflated quotient in one pass.
        BigRat acc(0);
        std::vector<BigRat> quot(cs.size() - 1);
        for (int k = static_cast<int>(cs.size()) - 1; k >= 1; --k) {
            acc = acc * q0 + cs[static_cast<std::size_t>(k)];
            quot[static_cast<std::size_t>(k - 1)] = acc;
        }
        if (acc * q0 + cs[0] != 0) break;
        ++mult;
        cs = std::move(quot);
    }
    return mult;
}

int poly_multiplicity(IntPolynomial p, const IntPolynomial& factor) {
    int mult = 0;
    while (p.divisible_by(factor)) {
        p = p.exact_divide(factor);
        ++mult;
    }
    return mult;
}

}  // namespace

std::optional<BigRat> RationalFunctionQ::eval_at(const BigRat& q0) const {
    if (is_zero()) return BigRat(0);
    BigRat dv = den_.eval(q0);
    if (dv != 0) return scale_ * num_.eval(q0) / dv;
    int v = valuation_at(q0);
    if (v < 0) return std::nullopt;  // pole
    // Zero denominator but no pole: deflate (q - q0)^m from both sides.
    int m = rational_root_multiplicity(den_, q0);
    std::vector<BigRat> n, d;
    for (const auto& c : num_.coeffs()) n.push_back(BigRat(c));
    for (const auto& c : den_.coeffs()) d.push_back(BigRat(c));
    auto deflate = [&](std::vector<BigRat>& cs) {
        std::vector<BigRat> quot(cs.size() - 1);
        BigRat acc(0);
        for (int k = static_cast<int>(cs.size()) - 1; k >= 1; --k) {
            acc = acc * q0 + cs[static_cast<std::size_t>(k)];
            quot[static_cast<std::size_t>(k - 1)] = acc;
        }
        cs = std::move(quot);
    };
    for (int i = 0; i < m; ++i) {
        deflate(n);
        deflate(d);
    }
    auto horner = [&](const std::vector<BigRat>& cs) {
        BigRat acc(0);
        for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * q0 + *it;
        return acc;
    };
    return scale_ * horner(n) / horner(d);
}

int RationalFunctionQ::valuation_at(const BigRat& q0) const {
    if (is_zero()) return kValuationOfZero;
    return rational_root_multiplicity(num_, q0) - rational_root_multiplicity(den_, q0);
}

int RationalFunctionQ::valuation_at_root_of_unity(int order) const {
    if (is_zero()) return kValuationOfZero;
    const IntPolynomial& phi = cyclotomic(order);
    return poly_multiplicity(num_, phi) - poly_multiplicity(den_, phi);
}

RationalFunctionQ::RootOfUnityEval RationalFunctionQ::eval_at_root_of_unity(int order) const {
    int v = valuation_at_root_of_unity(order);
    if (v != 0) return {v, {0.0, 0.0}};
    return {0, approx_at_root_of_unity(order)};
}

std::complex<double> RationalFunctionQ::approx_at_root_of_unity(int order) const {
    if (is_zero()) return {0.0, 0.0};
    const double theta = 2.0 * 3.14159265358979323846 / order;
    std::complex<double> z(std::cos(theta), std::sin(theta));
    double s = static_cast<double>(numerator(scale_)) / static_cast<double>(denominator(scale_));
    return s * num_.eval(z) / den_.eval(z);
}

std::string RationalFunctionQ::to_string() const {
    auto [n, d] = canonical();
    std::string ns = poly_to_string(n);
    if (d.size() == 1) return ns;  // monic constant denominator is 1
    std::string ds = poly_to_string(d);
    return "(" + ns + ") / (" + ds + ")";
}

RationalFunctionQ qint(int h) {
    if (h == 0) return RationalFunctionQ();
    if (h < 0) return -qint(-h);
    // [h] = q^(h-1) + q^(h-3) + ... + q^(1-h) = (sum_{k<h} q^(2k)) / q^(h-1)
    std::vector<BigInt> n(static_cast<std::size_t>(2 * (h - 1)) + 1, BigInt(0));
    for (int k = 0; k < h; ++k) n[static_cast<std::size_t>(2 * k)] = 1;
    return RationalFunctionQ(IntPolynomial(std::move(n)), IntPolynomial::monomial(h - 1));
}

}  // namespace brauerpaths
