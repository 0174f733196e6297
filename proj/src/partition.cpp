#include <qtcat/partition.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qtcat {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> conj(parts_[0], 0);
    for (int p : parts_)
        for (int i = 0; i < p; ++i) ++conj[i];
    return Partition(std::move(conj));
}

bool Partition::contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (int i = 0; i < inner.length(); ++i)
        if (parts_[i] < inner.parts_[i]) return false;
    return true;
}

int Partition::multiplicity(int value) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

std::vector<Partition> Partition::add_cell() const {
    std::vector<Partition> out;
    for (int i = 0; i <= length(); ++i) {
        int cur = part(i);
        int above = i == 0 ? cur + 2 : parts_[i - 1];  // row above must stay >=
        if (cur + 1 > above) continue;
        std::vector<int> next = parts_;
        if (i == length())
            next.push_back(1);
        else
            ++next[i];
        out.push_back(Partition(std::move(next)));
    }
    return out;
}

std::vector<Partition> Partition::remove_cell() const {
    std::vector<Partition> out;
    for (int i = 0; i < length(); ++i) {
        int below = i + 1 < length() ? parts_[i + 1] : 0;
        if (parts_[i] - 1 < below) continue;
        std::vector<int> next = parts_;
        if (--next[i] == 0) next.erase(next.begin() + i);
        out.push_back(Partition(std::move(next)));
    }
    return out;
}

Partition Partition::without_part(int value) const {
    std::vector<int> next = parts_;
    auto it = std::find(next.begin(), next.end(), value);
    if (it == next.end()) throw std::invalid_argument("Partition: part not present");
    next.erase(it);
    return Partition(std::move(next));
}

Partition Partition::with_part(int value) const {
    std::vector<int> next = parts_;
    auto it = std::upper_bound(next.begin(), next.end(), value, std::greater<int>());
    next.insert(it, value);
    return Partition(std::move(next));
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < length(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    os << "]";
    return os.str();
}

bool PartitionOrder::operator()(const Partition& a, const Partition& b) const {
    int sa = a.size(), sb = b.size();
    if (sa != sb) return sa > sb;
    return a.parts() > b.parts();
}

bool dominates(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return false;
    int pa = 0, pb = 0;
    int n = std::max(a.length(), b.length());
    for (int i = 0; i < n; ++i) {
        pa += a.part(i);
        pb += b.part(i);
        if (pa < pb) return false;
    }
    return true;
}

namespace {

void gen_partitions(int remaining, int maxpart, std::vector<int>& acc,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(acc));
        return;
    }
    for (int p = std::min(remaining, maxpart); p >= 1; --p) {
        acc.push_back(p);
        gen_partitions(remaining - p, p, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative n");
    std::vector<Partition> out;
    std::vector<int> acc;
    gen_partitions(n, n, acc, out);
    if (n == 0) out = {Partition()};
    return out;
}

BigRat z_weight(const Partition& mu) {
    BigRat z(1);
    int prev = -1, run = 0;
    auto flush = [&](int val, int count) {
        for (int i = 0; i < count; ++i) z *= BigRat(val);
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), count);
        z *= BigRat(f);
    };
    for (int p : mu.parts()) {
        if (p == prev)
            ++run;
        else {
            if (prev > 0) flush(prev, run);
            prev = p;
            run = 1;
        }
    }
    if (prev > 0) flush(prev, run);
    return z;
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p < 1) throw std::invalid_argument("Composition: parts must be positive");
}

int Composition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Composition Composition::concat(const Composition& tail) const {
    std::vector<int> next = parts_;
    next.insert(next.end(), tail.parts_.begin(), tail.parts_.end());
    return Composition(std::move(next));
}

Composition Composition::prepend(int part) const {
    std::vector<int> next;
    next.reserve(parts_.size() + 1);
    next.push_back(part);
    next.insert(next.end(), parts_.begin(), parts_.end());
    return Composition(std::move(next));
}

Composition Composition::append(int part) const {
    std::vector<int> next = parts_;
    next.push_back(part);
    return Composition(std::move(next));
}

std::string Composition::str() const {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < length(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    os << ")";
    return os.str();
}

namespace {

void gen_compositions(int remaining, std::vector<int>& acc, std::vector<Composition>& out) {
    if (remaining == 0) {
        out.push_back(Composition(acc));
        return;
    }
    for (int p = remaining; p >= 1; --p) {
        acc.push_back(p);
        gen_compositions(remaining - p, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Composition> compositions_of(int n) {
    if (n < 0) throw std::invalid_argument("compositions_of: negative n");
    std::vector<Composition> out;
    std::vector<int> acc;
    gen_compositions(n, acc, out);
    return out;
}

}  // namespace qtcat
