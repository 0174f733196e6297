#ifndef QTCAT_PARTITION_HPP
#define QTCAT_PARTITION_HPP

#include <qtcat/rational.hpp>

#include <string>
#include <vector>

namespace qtcat {

/// Integer partition: weakly decreasing positive parts, possibly empty.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return i < length() ? parts_[i] : 0; }

    Partition conjugate() const;
    /// Componentwise containment of Young diagrams.
    bool contains(const Partition& inner) const;
    /// Multiplicity of a given part value.
    int multiplicity(int value) const;

    /// Partitions obtained by adding one cell (results are larger by 1).
    std::vector<Partition> add_cell() const;
    /// Partitions obtained by removing one cell.
    std::vector<Partition> remove_cell() const;

    /// Removes one part equal to `value`; caller guarantees it is present.
    Partition without_part(int value) const;
    Partition with_part(int value) const;

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.parts_ == b.parts_;
    }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

    std::string str() const;  // "[2,1]"

private:
    std::vector<int> parts_;
};

/// Canonical strict order: larger size first, then lexicographically larger
/// first.  Used for map keys and for display term order.
struct PartitionOrder {
    bool operator()(const Partition& a, const Partition& b) const;
};

/// Dominance: a >= b (both must be partitions of the same size).
bool dominates(const Partition& a, const Partition& b);

/// All partitions of n in descending lexicographic order.
std::vector<Partition> partitions_of(int n);

/// z_mu = prod_r r^(m_r) m_r! — the centralizer order of the cycle type.
BigRat z_weight(const Partition& mu);

/// Composition: ordered sequence of positive parts, possibly empty.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;
    bool empty() const { return parts_.empty(); }

    Composition concat(const Composition& tail) const;
    Composition prepend(int part) const;
    Composition append(int part) const;

    friend bool operator==(const Composition& a, const Composition& b) {
        return a.parts_ == b.parts_;
    }
    friend bool operator!=(const Composition& a, const Composition& b) { return !(a == b); }
    friend bool operator<(const Composition& a, const Composition& b) {
        return a.parts_ < b.parts_;
    }

    std::string str() const;  // "(2,1)"

private:
    std::vector<int> parts_;
};

/// All compositions of n in descending lexicographic order (first part
/// largest first); compositions_of(0) = { () }.
std::vector<Composition> compositions_of(int n);

}  // namespace qtcat

#endif
