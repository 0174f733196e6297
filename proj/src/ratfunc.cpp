#include <qtcat/ratfunc.hpp>

#include <algorithm>
#include <vector>

namespace qtcat {

namespace {

// Denominator atoms that dominate this domain: q^a - t^b and q^a t^b - 1
// (monomial factors are handled by exponent shifting).  Candidates are drawn
// from the degree span of the denominator, small total degree first.
std::vector<LaurentQT> atom_candidates(const LaurentQT& den) {
    std::vector<LaurentQT> out;
    int aq = std::max(0, den.max_q() - den.min_q());
    int at = std::max(0, den.max_t() - den.min_t());
    for (int s = 1; s <= aq + at; ++s)
        for (int a = std::max(0, s - at); a <= std::min(s, aq); ++a) {
            int b = s - a;
            if (a > 0 || b > 0) out.push_back(LaurentQT::q(a) - LaurentQT::t(b));
            if (a <= aq && b <= at && a + b > 0)
                out.push_back(LaurentQT::monomial(BigRat(1), a, b) - LaurentQT::one());
        }
    return out;
}

// Every atom above vanishes at q = t = 1, so a part with nonzero coefficient
// sum admits no atom factor.
bool vanishes_at_11(const LaurentQT& p) {
    BigRat s;
    for (const auto& [m, c] : p.terms()) s += c;
    return s.is_zero();
}

}  // namespace

RatQT::RatQT(const LaurentQT& num, const LaurentQT& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw std::domain_error("RatQT: zero denominator");
    normalize();
}

RatQT::RatQT(LaurentQT num, LaurentQT den, reduced_tag)
    : num_(std::move(num)), den_(std::move(den)) {
    canonical_scale();
}

void RatQT::canonical_scale() {
    if (num_.is_zero()) {
        den_ = LaurentQT::one();
        return;
    }
    int sq = std::min(num_.min_q(), den_.min_q());
    int st = std::min(num_.min_t(), den_.min_t());
    if (sq != 0 || st != 0) {
        num_ = num_.shifted(-sq, -st);
        den_ = den_.shifted(-sq, -st);
    }
    const BigRat& lc = den_.leading().second;
    if (!lc.is_one()) {
        BigRat inv = lc.inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

void RatQT::normalize() {
    if (num_.is_zero()) {
        den_ = LaurentQT::one();
        return;
    }
    // Strip the common monomial so both parts are plain polynomials with no
    // joint q or t factor.
    int sq = std::min(num_.min_q(), den_.min_q());
    int st = std::min(num_.min_t(), den_.min_t());
    num_ = num_.shifted(-sq, -st);
    den_ = den_.shifted(-sq, -st);

    if (!den_.is_monomial() && vanishes_at_11(den_) && vanishes_at_11(num_)) {
        for (const LaurentQT& atom : atom_candidates(den_)) {
            for (;;) {
                auto dq = den_.divided_by(atom);
                if (!dq) break;
                auto nq = num_.divided_by(atom);
                if (!nq) break;
                den_ = *dq;
                num_ = *nq;
            }
            if (den_.is_monomial() || !vanishes_at_11(den_) || !vanishes_at_11(num_))
                break;
        }
    }
    if (!den_.is_monomial() && !num_.is_monomial() &&
        !LaurentQT::coprime_certificate(num_, den_)) {
        LaurentQT g = LaurentQT::gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = *num_.divided_by(g);
            den_ = *den_.divided_by(g);
        }
    }
    canonical_scale();
}

RatQT RatQT::operator-() const {
    RatQT r = *this;
    r.num_ = -r.num_;
    return r;
}

namespace {

// Removes the common (non-monomial) factor of x and y in place; cheap
// certificate first, real gcd only when one may exist.
void cancel_common(LaurentQT& x, LaurentQT& y) {
    if (x.is_zero() || y.is_zero() || x.is_monomial() || y.is_monomial()) return;
    if (LaurentQT::coprime_certificate(x, y)) return;
    LaurentQT g = LaurentQT::gcd(x, y);
    if (g.is_constant()) return;
    x = *x.divided_by(g);
    y = *y.divided_by(g);
}

}  // namespace

RatQT operator+(const RatQT& a, const RatQT& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatQT(a.num_ + b.num_, a.den_);
    LaurentQT d1 = a.den_, d2 = b.den_;
    bool coprime = d1.is_monomial() || d2.is_monomial() ||
                   LaurentQT::coprime_certificate(d1, d2);
    if (coprime) {
        // n1 den2 + n2 den1 is automatically prime to den1 den2
        return RatQT(a.num_ * d2 + b.num_ * d1, d1 * d2, RatQT::reduced_tag{});
    }
    LaurentQT g = LaurentQT::gcd(d1, d2);
    if (g.is_constant())
        return RatQT(a.num_ * d2 + b.num_ * d1, d1 * d2, RatQT::reduced_tag{});
    LaurentQT d2r = *d2.divided_by(g);
    return RatQT(a.num_ * d2r + b.num_ * *d1.divided_by(g), d1 * d2r);
}

RatQT operator-(const RatQT& a, const RatQT& b) { return a + (-b); }

RatQT operator*(const RatQT& a, const RatQT& b) {
    if (a.is_zero() || b.is_zero()) return RatQT();
    LaurentQT n1 = a.num_, d1 = a.den_, n2 = b.num_, d2 = b.den_;
    cancel_common(n1, d2);
    cancel_common(n2, d1);
    return RatQT(n1 * n2, d1 * d2, RatQT::reduced_tag{});
}

RatQT operator/(const RatQT& a, const RatQT& b) {
    if (b.is_zero()) throw std::domain_error("RatQT: division by zero");
    return a * b.inverse();
}

RatQT RatQT::inverse() const {
    if (is_zero()) throw std::domain_error("RatQT: inverse of zero");
    return RatQT(den_, num_, reduced_tag{});
}

RatQT RatQT::pow(int e) const {
    if (e == 0) return RatQT(1);
    RatQT base = e > 0 ? *this : inverse();
    RatQT r(1);
    for (int i = 0; i < (e > 0 ? e : -e); ++i) r *= base;
    return r;
}

RatQT RatQT::substitute_powers(int k) const {
    return RatQT(num_.substitute_powers(k), den_.substitute_powers(k));
}

BigRat RatQT::eval(const BigRat& q0, const BigRat& t0) const {
    BigRat d = den_.eval(q0, t0);
    if (d.is_zero()) throw std::domain_error("RatQT: pole at evaluation point");
    return num_.eval(q0, t0) / d;
}

std::string RatQT::str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace qtcat
