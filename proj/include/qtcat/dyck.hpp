#ifndef QTCAT_DYCK_HPP
#define QTCAT_DYCK_HPP

#include <qtcat/laurent.hpp>
#include <qtcat/partition.hpp>

#include <array>
#include <functional>
#include <gmpxx.h>
#include <map>
#include <string>
#include <vector>

namespace qtcat {

/// Dyck path of n vertical steps, encoded by its area sequence:
/// a_1 = 0 and 0 <= a_{i+1} <= a_i + 1.
class DyckPath {
public:
    DyckPath() = default;
    explicit DyckPath(std::vector<int> area_seq);

    int rows() const { return static_cast<int>(area_.size()); }
    const std::vector<int>& area_seq() const { return area_; }
    long area() const;

    /// Row indices (0-based) ordered from the highest diagonal to the lowest
    /// and right to left (descending row index) within a diagonal.
    std::vector<int> reading_order() const;

    /// b_i counts the diagonal inversions between the i-th vertical step in
    /// reading order and all earlier ones; the sum is dinv.
    std::vector<int> b_sequence() const;
    long dinv() const;

    /// Row i (0-based) is a double rise when the next row goes up one diagonal;
    /// the last row is always a peak.
    bool is_double_rise(int row) const;

    /// Segment lengths between returns to the diagonal.
    Composition touch_composition() const;

    friend bool operator==(const DyckPath& a, const DyckPath& b) { return a.area_ == b.area_; }
    friend bool operator!=(const DyckPath& a, const DyckPath& b) { return !(a == b); }

    /// Streams every path of size n in lexicographic area-sequence order.
    static void enumerate(int n, const std::function<void(const DyckPath&)>& fn);
    static std::vector<DyckPath> all(int n);

private:
    std::vector<int> area_;
};

/// Dyck path with a subset of rows marked; the first row in reading order
/// (always a peak) can never be marked.
class DecoratedPath {
public:
    DecoratedPath(DyckPath path, std::vector<bool> decorated);

    const DyckPath& path() const { return path_; }
    const std::vector<bool>& decorated() const { return decorated_; }
    bool is_decorated(int row) const { return decorated_[row]; }

    friend bool operator==(const DecoratedPath& a, const DecoratedPath& b) {
        return a.path_ == b.path_ && a.decorated_ == b.decorated_;
    }

    /// Streams the 2^(n-1) decorations of one path (masks in increasing order).
    static void enumerate(const DyckPath& path,
                          const std::function<void(const DecoratedPath&)>& fn);
    /// Streams all decorated paths of size n.
    static void enumerate_all(int n, const std::function<void(const DecoratedPath&)>& fn);

private:
    DyckPath path_;
    std::vector<bool> decorated_;
};

struct PathStats {
    long area = 0, dinv = 0;
    long area_circ = 0, dinv_circ = 0;
    int peak_circ = 0, rise_circ = 0;
    std::vector<int> b_seq;  // in reading order
};

PathStats path_stats(const DecoratedPath& dp);

/// Touch composition with the decorated double rises of each segment
/// discounted; a composition of n - rise_circ.
Composition rise_touch_composition(const DecoratedPath& dp);

/// Data needed to invert a rotation: how many rows of the first segment moved
/// to the end, and whether the deleted first row was decorated.
struct RotationInfo {
    int moved_rows = 0;
    bool removed_decorated = false;
};

/// Cyclic rotation: deletes the first vertical step and the horizontal step
/// returning to the diagonal, moving the rest of the first segment to the
/// end.  The b-sequence of the result is the input's without its last entry.
std::pair<DecoratedPath, RotationInfo> rotate(const DecoratedPath& dp);
DecoratedPath unrotate(const DecoratedPath& dp, const RotationInfo& info);

/// Polynomial in q,t,z,w with integer coefficients and nonnegative exponents;
/// terms kept sorted descending lexicographically by exponent tuple.
class MultiPoly {
public:
    using Exps = std::array<int, 4>;  // q, t, z, w

    MultiPoly() = default;
    static MultiPoly one();

    bool is_zero() const { return terms_.empty(); }
    const std::map<Exps, mpz_class, std::greater<Exps>>& terms() const { return terms_; }

    void add_term(const Exps& e, const mpz_class& c);
    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    MultiPoly& operator+=(const MultiPoly& o);
    /// Multiply by the monomial c * q^e0 t^e1 z^e2 w^e3 (exponents may dip
    /// negative transiently; the result must stay polynomial).
    MultiPoly shifted(const Exps& e, const mpz_class& c) const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    BigRat eval(const BigRat& q, const BigRat& t, const BigRat& z, const BigRat& w) const;

    /// Restriction to q,t (z- and w-exponents must be zero).
    LaurentQT to_laurent_qt() const;

    std::string str() const;
    /// {"vars":["q","t","z","w"],"terms":[[[eq,et,ez,ew],"<int>"]]}.
    std::string to_json() const;

private:
    std::map<Exps, mpz_class, std::greater<Exps>> terms_;
};

/// Generating polynomial of decorated paths of size |alpha| + ell with k
/// decorated peaks and rise-touch composition alpha, in q (restricted dinv)
/// and t (restricted area).
MultiPoly cat_rise(const Composition& alpha, int k, int ell);

enum class CatMethod { DecoratedSum, ProductForm };

/// Four-variable Catalan polynomial of size n, by either the decorated-path
/// sum or the peak/rise product expansion; the two agree.
MultiPoly cat_poly(int n, CatMethod method);

}  // namespace qtcat

#endif
