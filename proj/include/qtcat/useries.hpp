#ifndef QTCAT_USERIES_HPP
#define QTCAT_USERIES_HPP

#include <map>
#include <stdexcept>
#include <utility>

namespace qtcat {

/// Raised when a coefficient of a truncated series is requested outside the
/// window in which it is exactly determined.
struct window_error : std::runtime_error {
    explicit window_error(const std::string& what) : std::runtime_error(what) {}
};

/// Laurent series in a formal variable u with coefficients in an arbitrary
/// ring T (needs default-construction to zero, is_zero(), + and *).
///
/// The window [lo, hi] brackets the exponents whose coefficients are exactly
/// known.  A complete (non-truncated) series has no terms beyond hi at all; a
/// truncated one has unknown coefficients there, and arithmetic shrinks the
/// window so that extraction stays exact.
template <class T>
class USeries {
public:
    USeries() = default;
    USeries(int lo, int hi, bool truncated) : lo_(lo), hi_(hi), truncated_(truncated) {
        if (lo > hi) throw std::invalid_argument("USeries: empty window");
    }

    int lo() const { return lo_; }
    int hi() const { return hi_; }
    bool truncated() const { return truncated_; }
    const std::map<int, T>& coeffs() const { return coeffs_; }

    void set(int e, T v) {
        if (e < lo_ || e > hi_) throw std::invalid_argument("USeries: exponent outside window");
        if (v.is_zero())
            coeffs_.erase(e);
        else
            coeffs_[e] = std::move(v);
    }

    /// Exact coefficient of u^e; throws window_error outside the window.
    const T& extract(int e) const {
        if (e < lo_ || e > hi_)
            throw window_error("USeries: coefficient of u^" + std::to_string(e) +
                               " outside exact window [" + std::to_string(lo_) + "," +
                               std::to_string(hi_) + "]");
        auto it = coeffs_.find(e);
        return it == coeffs_.end() ? zero_ : it->second;
    }

    friend USeries operator+(const USeries& a, const USeries& b) {
        int lo = a.lo_ < b.lo_ ? a.lo_ : b.lo_;
        int hi;
        bool trunc = a.truncated_ || b.truncated_;
        if (!trunc)
            hi = a.hi_ > b.hi_ ? a.hi_ : b.hi_;
        else if (a.truncated_ && b.truncated_)
            hi = a.hi_ < b.hi_ ? a.hi_ : b.hi_;
        else
            hi = a.truncated_ ? a.hi_ : b.hi_;
        USeries r(lo, hi, trunc);
        for (const auto& [e, v] : a.coeffs_)
            if (e <= hi) r.coeffs_[e] = v;
        for (const auto& [e, v] : b.coeffs_) {
            if (e > hi) continue;
            auto it = r.coeffs_.find(e);
            if (it == r.coeffs_.end())
                r.coeffs_[e] = v;
            else {
                it->second = it->second + v;
                if (it->second.is_zero()) r.coeffs_.erase(it);
            }
        }
        return r;
    }

    friend USeries operator*(const USeries& a, const USeries& b) {
        int lo = a.lo_ + b.lo_;
        long hi = static_cast<long>(a.hi_) + b.hi_;
        bool trunc = a.truncated_ || b.truncated_;
        if (a.truncated_) hi = std::min(hi, static_cast<long>(a.hi_) + b.lo_);
        if (b.truncated_) hi = std::min(hi, static_cast<long>(b.hi_) + a.lo_);
        USeries r(lo, static_cast<int>(hi), trunc);
        for (const auto& [ea, va] : a.coeffs_)
            for (const auto& [eb, vb] : b.coeffs_) {
                int e = ea + eb;
                if (e > r.hi_) continue;
                T prod = va * vb;
                if (prod.is_zero()) continue;
                auto it = r.coeffs_.find(e);
                if (it == r.coeffs_.end())
                    r.coeffs_[e] = std::move(prod);
                else {
                    it->second = it->second + prod;
                    if (it->second.is_zero()) r.coeffs_.erase(it);
                }
            }
        return r;
    }

private:
    std::map<int, T> coeffs_;
    int lo_ = 0, hi_ = 0;
    bool truncated_ = false;
    inline static const T zero_{};
};

}  // namespace qtcat

#endif
