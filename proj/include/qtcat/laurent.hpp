#ifndef QTCAT_LAURENT_HPP
#define QTCAT_LAURENT_HPP

#include <qtcat/rational.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qtcat {

/// Exponent pair of a monomial q^q t^t; exponents may be negative.
struct QTMonomial {
    int q = 0;
    int t = 0;

    friend bool operator==(const QTMonomial& a, const QTMonomial& b) {
        return a.q == b.q && a.t == b.t;
    }
    friend QTMonomial operator+(const QTMonomial& a, const QTMonomial& b) {
        return {a.q + b.q, a.t + b.t};
    }
    friend QTMonomial operator-(const QTMonomial& a, const QTMonomial& b) {
        return {a.q - b.q, a.t - b.t};
    }
};

/// Graded lexicographic order with q > t: total degree first, then q-exponent.
/// Returns <0, 0, >0 like a comparator.
inline int mono_cmp(const QTMonomial& a, const QTMonomial& b) {
    int da = a.q + a.t, db = b.q + b.t;
    if (da != db) return da < db ? -1 : 1;
    if (a.q != b.q) return a.q < b.q ? -1 : 1;
    return 0;
}

/// Sparse Laurent polynomial in q and t over BigRat.  Terms are kept sorted
/// descending under mono_cmp with no zero coefficients, so equal values have
/// identical term vectors.
class LaurentQT {
public:
    using Term = std::pair<QTMonomial, BigRat>;

    LaurentQT() = default;
    LaurentQT(long c) {
        if (c != 0) terms_.push_back({{0, 0}, BigRat(c)});
    }
    explicit LaurentQT(const BigRat& c) {
        if (!c.is_zero()) terms_.push_back({{0, 0}, c});
    }

    static LaurentQT monomial(const BigRat& c, int eq, int et) {
        LaurentQT p;
        if (!c.is_zero()) p.terms_.push_back({{eq, et}, c});
        return p;
    }
    static LaurentQT q(int e = 1) { return monomial(BigRat(1), e, 0); }
    static LaurentQT t(int e = 1) { return monomial(BigRat(1), 0, e); }
    static LaurentQT one() { return LaurentQT(1); }

    /// Builds from an arbitrary term list (merges duplicates, strips zeros).
    static LaurentQT from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].first == QTMonomial{0, 0});
    }
    bool is_one() const {
        return terms_.size() == 1 && terms_[0].first == QTMonomial{0, 0} &&
               terms_[0].second.is_one();
    }
    bool is_monomial() const { return terms_.size() == 1; }

    /// Leading term under the fixed monomial order.  Polynomial must be nonzero.
    const Term& leading() const { return terms_.front(); }

    int min_q() const;
    int max_q() const;
    int min_t() const;
    int max_t() const;

    LaurentQT operator-() const;
    friend LaurentQT operator+(const LaurentQT& a, const LaurentQT& b);
    friend LaurentQT operator-(const LaurentQT& a, const LaurentQT& b);
    friend LaurentQT operator*(const LaurentQT& a, const LaurentQT& b);
    LaurentQT& operator+=(const LaurentQT& o) { return *this = *this + o; }
    LaurentQT& operator-=(const LaurentQT& o) { return *this = *this - o; }
    LaurentQT& operator*=(const LaurentQT& o) { return *this = *this * o; }

    friend bool operator==(const LaurentQT& a, const LaurentQT& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentQT& a, const LaurentQT& b) { return !(a == b); }

    LaurentQT scaled(const BigRat& c) const;
    /// Multiply by the monomial q^eq t^et.
    LaurentQT shifted(int eq, int et) const;

    /// p_k substitution on the q,t alphabet: every exponent pair scales by k.
    LaurentQT substitute_powers(int k) const;

    /// Exact evaluation; negative exponents require a nonzero base.
    BigRat eval(const BigRat& q0, const BigRat& t0) const;

    /// Positive gcd of all coefficients times the sign of the leading one;
    /// zero polynomial has content 0.
    BigRat content() const;

    /// Quotient if b divides *this exactly in the Laurent ring, else nullopt.
    std::optional<LaurentQT> divided_by(const LaurentQT& b) const;

    /// gcd up to a rational unit; result has content 1 and positive leading
    /// coefficient, gcd(0,g) = normalized g.
    static LaurentQT gcd(const LaurentQT& a, const LaurentQT& b);

    /// True certifies gcd(a,b) is a monomial (modular specialization proof);
    /// false is inconclusive.  Inputs need not be shifted.
    static bool coprime_certificate(const LaurentQT& a, const LaurentQT& b);

    /// "q^2*t - 2*q + 1": terms descending under the monomial order.
    std::string str() const;

private:
    std::vector<Term> terms_;
};

}  // namespace qtcat

#endif
