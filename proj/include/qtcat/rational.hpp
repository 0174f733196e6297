#ifndef QTCAT_RATIONAL_HPP
#define QTCAT_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qtcat {

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator (GMP canonical form).
class BigRat {
public:
    BigRat() : v_(0) {}
    BigRat(long n) : v_(n) {}
    BigRat(long n, long d) {
        if (d == 0) throw std::domain_error("BigRat: zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }
    explicit BigRat(const mpz_class& z) : v_(z) {}
    BigRat(const mpz_class& n, const mpz_class& d) {
        if (d == 0) throw std::domain_error("BigRat: zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }
    explicit BigRat(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    /// Parses "123", "-4/7".
    explicit BigRat(const std::string& s) : v_(s) {
        if (v_.get_den() == 0) throw std::domain_error("BigRat: zero denominator");
        v_.canonicalize();
    }

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    BigRat operator-() const { return BigRat(mpq_class(-v_)); }
    BigRat& operator+=(const BigRat& o) { v_ += o.v_; return *this; }
    BigRat& operator-=(const BigRat& o) { v_ -= o.v_; return *this; }
    BigRat& operator*=(const BigRat& o) { v_ *= o.v_; return *this; }
    BigRat& operator/=(const BigRat& o) {
        if (o.is_zero()) throw std::domain_error("BigRat: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend BigRat operator+(BigRat a, const BigRat& b) { return a += b; }
    friend BigRat operator-(BigRat a, const BigRat& b) { return a -= b; }
    friend BigRat operator*(BigRat a, const BigRat& b) { return a *= b; }
    friend BigRat operator/(BigRat a, const BigRat& b) { return a /= b; }

    friend bool operator==(const BigRat& a, const BigRat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const BigRat& a, const BigRat& b) { return a.v_ != b.v_; }
    friend bool operator<(const BigRat& a, const BigRat& b) { return a.v_ < b.v_; }
    friend bool operator>(const BigRat& a, const BigRat& b) { return a.v_ > b.v_; }

    BigRat inverse() const {
        if (is_zero()) throw std::domain_error("BigRat: inverse of zero");
        return BigRat(mpq_class(1) / v_);
    }

    /// Integer power; negative exponents invert (zero base rejected).
    BigRat pow(long e) const {
        if (e == 0) return BigRat(1);
        if (is_zero()) {
            if (e < 0) throw std::domain_error("BigRat: 0 to a negative power");
            return BigRat();
        }
        BigRat base = e > 0 ? *this : inverse();
        unsigned long k = e > 0 ? static_cast<unsigned long>(e)
                                : static_cast<unsigned long>(-e);
        mpz_class n, d;
        mpz_pow_ui(n.get_mpz_t(), base.v_.get_num().get_mpz_t(), k);
        mpz_pow_ui(d.get_mpz_t(), base.v_.get_den().get_mpz_t(), k);
        return BigRat(n, d);
    }

    BigRat abs() const { return sign() < 0 ? -*this : *this; }

    /// gcd(a/b, c/d) = gcd(a,c)/lcm(b,d); nonnegative, gcd(0,x) = |x|.
    static BigRat gcd(const BigRat& a, const BigRat& b) {
        if (a.is_zero()) return b.abs();
        if (b.is_zero()) return a.abs();
        mpz_class n, d;
        mpz_gcd(n.get_mpz_t(), a.num().get_mpz_t(), b.num().get_mpz_t());
        mpz_lcm(d.get_mpz_t(), a.den().get_mpz_t(), b.den().get_mpz_t());
        return BigRat(n, d);
    }

    std::string str() const { return v_.get_str(); }
    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

}  // namespace qtcat

#endif
