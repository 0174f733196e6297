// Test-only oracles, independent of the library's conversion machinery:
// brute-force expansion of symmetric functions into actual polynomials in a
// finite variable set, plus direct combinatorial statistics on paths.
#ifndef QTCAT_TESTS_ORACLES_HPP
#define QTCAT_TESTS_ORACLES_HPP

#include <qtcat/dyck.hpp>
#include <qtcat/symfunc.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

namespace oracle {

using qtcat::BigRat;
using qtcat::Partition;

/// Polynomial in N commuting variables with rational coefficients.
using Expansion = std::map<std::vector<int>, BigRat>;

inline Expansion expansion_one(int nvars) { return {{std::vector<int>(nvars, 0), BigRat(1)}}; }

inline Expansion mul(const Expansion& a, const Expansion& b) {
    Expansion out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            auto [it, fresh] = out.emplace(std::move(e), ca * cb);
            if (!fresh) {
                it->second += ca * cb;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    return out;
}

inline void add_into(Expansion& a, const Expansion& b, const BigRat& scale = BigRat(1)) {
    for (const auto& [e, c] : b) {
        auto [it, fresh] = a.emplace(e, c * scale);
        if (!fresh) {
            it->second += c * scale;
            if (it->second.is_zero()) a.erase(it);
        }
    }
}

inline Expansion expand_e(int k, int nvars) {
    Expansion out;
    if (k == 0) return expansion_one(nvars);
    if (k < 0 || k > nvars) return out;
    std::vector<int> idx(k);
    std::function<void(int, int)> rec = [&](int pos, int start) {
        if (pos == k) {
            std::vector<int> e(nvars, 0);
            for (int i : idx) e[i] = 1;
            out.emplace(std::move(e), BigRat(1));
            return;
        }
        for (int i = start; i < nvars; ++i) {
            idx[pos] = i;
            rec(pos + 1, i + 1);
        }
    };
    rec(0, 0);
    return out;
}

inline Expansion expand_h(int k, int nvars) {
    Expansion out;
    if (k == 0) return expansion_one(nvars);
    if (k < 0) return out;
    std::vector<int> e(nvars, 0);
    std::function<void(int, int)> rec = [&](int var, int left) {
        if (var == nvars - 1) {
            e[var] = left;
            out.emplace(e, BigRat(1));
            e[var] = 0;
            return;
        }
        for (int j = 0; j <= left; ++j) {
            e[var] = j;
            rec(var + 1, left - j);
        }
        e[var] = 0;
    };
    if (nvars == 0) return out;
    rec(0, k);
    return out;
}

inline Expansion expand_p(int k, int nvars) {
    Expansion out;
    if (k == 0) return expansion_one(nvars);
    for (int i = 0; i < nvars; ++i) {
        std::vector<int> e(nvars, 0);
        e[i] = k;
        out.emplace(std::move(e), BigRat(1));
    }
    return out;
}

inline Expansion expand_m(const Partition& lam, int nvars) {
    Expansion out;
    if (lam.length() > nvars) return out;
    std::vector<int> e(lam.parts());
    e.resize(nvars, 0);
    std::sort(e.begin(), e.end());
    do {
        out.emplace(e, BigRat(1));
    } while (std::next_permutation(e.begin(), e.end()));
    return out;
}

/// Schur function via the h-determinant (Jacobi-Trudi), Leibniz expansion.
inline Expansion expand_s(const Partition& lam, int nvars) {
    int L = lam.length();
    if (L == 0) return expansion_one(nvars);
    std::vector<int> perm(L);
    for (int i = 0; i < L; ++i) perm[i] = i;
    Expansion out;
    do {
        int inversions = 0;
        for (int i = 0; i < L; ++i)
            for (int j = i + 1; j < L; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Expansion term = expansion_one(nvars);
        bool zero = false;
        for (int i = 0; i < L && !zero; ++i) {
            int deg = lam.parts()[i] - (i + 1) + (perm[i] + 1);
            Expansion hi = expand_h(deg, nvars);
            if (hi.empty()) zero = true;
            else term = mul(term, hi);
        }
        if (!zero) add_into(out, term, BigRat(inversions % 2 == 0 ? 1 : -1));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

inline Expansion expand_element(qtcat::Basis b, const Partition& lam, int nvars) {
    using qtcat::Basis;
    switch (b) {
        case Basis::Monomial: return expand_m(lam, nvars);
        case Basis::Schur: return expand_s(lam, nvars);
        default: break;
    }
    Expansion out = expansion_one(nvars);
    for (int part : lam.parts()) {
        Expansion f;
        if (b == Basis::Elementary) f = expand_e(part, nvars);
        else if (b == Basis::Homogeneous) f = expand_h(part, nvars);
        else f = expand_p(part, nvars);
        out = mul(out, f);
    }
    return out;
}

/// Coefficients of the monomial basis read off an expansion: the coefficient
/// of m_lambda is the coefficient of the weakly decreasing exponent vector.
inline std::map<Partition, BigRat, qtcat::PartitionOrder> monomial_coeffs(const Expansion& f) {
    std::map<Partition, BigRat, qtcat::PartitionOrder> out;
    for (const auto& [e, c] : f) {
        std::vector<int> sorted = e;
        std::sort(sorted.begin(), sorted.end(), std::greater<int>());
        if (sorted != e) continue;
        while (!sorted.empty() && sorted.back() == 0) sorted.pop_back();
        out.emplace(Partition(sorted), c);
    }
    return out;
}

/// Direct pairwise diagonal-inversion count.
inline long brute_dinv(const qtcat::DyckPath& p) {
    long d = 0;
    const auto& a = p.area_seq();
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = i + 1; j < a.size(); ++j)
            if (a[i] == a[j] || a[i] == a[j] + 1) ++d;
    return d;
}

}  // namespace oracle

#endif
