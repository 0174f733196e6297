#ifndef QTCAT_RATFUNC_HPP
#define QTCAT_RATFUNC_HPP

#include <qtcat/laurent.hpp>

#include <string>

namespace qtcat {

/// Rational function in q,t over the rationals, kept in a canonical reduced
/// form: num and den are plain polynomials with no common factor, not both
/// divisible by q or t, and den has leading coefficient 1.  Value equality is
/// representation equality.
///
/// Reduction cancels the structured denominator atoms of this domain
/// (monomials, q^a - t^b, q^a t^b - 1) first and finishes with a bivariate gcd.
class RatQT {
public:
    RatQT() : num_(), den_(LaurentQT::one()) {}
    RatQT(long c) : num_(c), den_(LaurentQT::one()) {}
    explicit RatQT(const BigRat& c) : num_(c), den_(LaurentQT::one()) {}
    explicit RatQT(const LaurentQT& p) : num_(p), den_(LaurentQT::one()) {}
    RatQT(const LaurentQT& num, const LaurentQT& den);

    const LaurentQT& num() const { return num_; }
    const LaurentQT& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    RatQT operator-() const;
    friend RatQT operator+(const RatQT& a, const RatQT& b);
    friend RatQT operator-(const RatQT& a, const RatQT& b);
    friend RatQT operator*(const RatQT& a, const RatQT& b);
    friend RatQT operator/(const RatQT& a, const RatQT& b);
    RatQT& operator+=(const RatQT& o) { return *this = *this + o; }
    RatQT& operator-=(const RatQT& o) { return *this = *this - o; }
    RatQT& operator*=(const RatQT& o) { return *this = *this * o; }
    RatQT& operator/=(const RatQT& o) { return *this = *this / o; }

    friend bool operator==(const RatQT& a, const RatQT& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatQT& a, const RatQT& b) { return !(a == b); }

    RatQT inverse() const;
    RatQT pow(int e) const;
    RatQT scaled(const BigRat& c) const { return RatQT(num_.scaled(c), den_); }

    /// q -> q^k, t -> t^k on both numerator and denominator.
    RatQT substitute_powers(int k) const;

    /// Exact evaluation; throws std::domain_error on a pole.
    BigRat eval(const BigRat& q0, const BigRat& t0) const;

    /// "(num)/(den)", "/(den)" omitted when den = 1.
    std::string str() const;

private:
    struct reduced_tag {};
    RatQT(LaurentQT num, LaurentQT den, reduced_tag);

    void normalize();
    /// Monomial shift and monic denominator only; parts already coprime.
    void canonical_scale();

    LaurentQT num_;
    LaurentQT den_;
};

inline RatQT operator*(const RatQT& a, const BigRat& c) { return a.scaled(c); }
inline RatQT operator*(const BigRat& c, const RatQT& a) { return a.scaled(c); }

}  // namespace qtcat

#endif
