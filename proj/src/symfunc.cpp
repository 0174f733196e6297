#include <qtcat/symfunc.hpp>

#include <algorithm>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace qtcat {

namespace {

// ---------------------------------------------------------------------------
// Per-degree base-change data for the classical bases, built once on demand.
// Everything routes through the power-sum basis: h and e expand by the
// z-weighted formulas, Schur functions by Murnaghan-Nakayama characters, and
// the monomial basis through the Kostka matrix.
// ---------------------------------------------------------------------------

using QMatrix = std::vector<std::vector<BigRat>>;

QMatrix qmatrix_inverse(const QMatrix& m) {
    size_t n = m.size();
    QMatrix a = m;
    QMatrix inv(n, std::vector<BigRat>(n));
    for (size_t i = 0; i < n; ++i) inv[i][i] = BigRat(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) throw std::runtime_error("qmatrix_inverse: singular matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        BigRat d = a[col][col].inverse();
        for (size_t j = 0; j < n; ++j) {
            a[col][j] *= d;
            inv[col][j] *= d;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            BigRat f = a[r][col];
            for (size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

// Murnaghan-Nakayama via beta-sets: chi^lambda(mu) counts signed rim-hook
// removals.  beta is kept strictly decreasing.
long long mn_character(std::vector<int> beta, const std::vector<int>& mu, size_t mu_pos) {
    if (mu_pos == mu.size()) return 1;
    int r = mu[mu_pos];
    long long total = 0;
    for (size_t i = 0; i < beta.size(); ++i) {
        int target = beta[i] - r;
        if (target < 0) continue;
        bool clash = false;
        int between = 0;
        for (size_t j = 0; j < beta.size(); ++j) {
            if (j == i) continue;
            if (beta[j] == target) {
                clash = true;
                break;
            }
            if (beta[j] > target && beta[j] < beta[i]) ++between;
        }
        if (clash) continue;
        std::vector<int> next = beta;
        next[i] = target;
        std::sort(next.begin(), next.end(), std::greater<int>());
        long long sub = mn_character(std::move(next), mu, mu_pos + 1);
        total += (between % 2 == 0) ? sub : -sub;
    }
    return total;
}

long long character_value(const Partition& lambda, const Partition& mu) {
    int len = lambda.length();
    std::vector<int> beta(len);
    for (int i = 0; i < len; ++i) beta[i] = lambda.parts()[i] + (len - 1 - i);
    return mn_character(std::move(beta), mu.parts(), 0);
}

int basis_slot(Basis b) {
    switch (b) {
        case Basis::Monomial: return 0;
        case Basis::Elementary: return 1;
        case Basis::Homogeneous: return 2;
        case Basis::Schur: return 3;
        default: break;
    }
    throw std::invalid_argument("classical basis expected");
}

struct DegreeTables {
    std::vector<Partition> parts;
    std::map<Partition, int, PartitionOrder> index;
    std::vector<BigRat> z;
    // to_p[slot]: column lam = expansion of basis element lam in p.
    // from_p[slot]: column mu = expansion of p_mu in the basis.
    QMatrix to_p[4], from_p[4];
};

class TableRegistry {
public:
    const DegreeTables& get(int n) {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = tables_.find(n);
        if (it != tables_.end()) return *it->second;
        auto t = build(n);
        auto* raw = t.get();
        tables_.emplace(n, std::move(t));
        return *raw;
    }

private:
    static std::unique_ptr<DegreeTables> build(int n) {
        auto t = std::make_unique<DegreeTables>();
        t->parts = partitions_of(n);
        size_t P = t->parts.size();
        for (size_t i = 0; i < P; ++i) t->index.emplace(t->parts[i], static_cast<int>(i));
        t->z.resize(P);
        for (size_t i = 0; i < P; ++i) t->z[i] = z_weight(t->parts[i]);

        // characters chi[lam][mu]
        QMatrix chi(P, std::vector<BigRat>(P));
        for (size_t l = 0; l < P; ++l)
            for (size_t m = 0; m < P; ++m)
                chi[l][m] = BigRat(static_cast<long>(character_value(t->parts[l], t->parts[m])));

        // s <-> p
        QMatrix& s_to_p = t->to_p[basis_slot(Basis::Schur)];
        QMatrix& p_to_s = t->from_p[basis_slot(Basis::Schur)];
        s_to_p.assign(P, std::vector<BigRat>(P));
        p_to_s.assign(P, std::vector<BigRat>(P));
        for (size_t m = 0; m < P; ++m)
            for (size_t l = 0; l < P; ++l) {
                s_to_p[m][l] = chi[l][m] / t->z[m];  // coeff of p_mu in s_lam
                p_to_s[l][m] = chi[l][m];            // coeff of s_lam in p_mu
            }

        // h, e -> p by multiplying single-row expansions.
        auto expand_products = [&](bool elementary) {
            QMatrix mat(P, std::vector<BigRat>(P));
            for (size_t col = 0; col < P; ++col) {
                std::map<Partition, BigRat, PartitionOrder> acc;
                acc.emplace(Partition(), BigRat(1));
                for (int part : t->parts[col].parts()) {
                    std::map<Partition, BigRat, PartitionOrder> next;
                    for (const Partition& mu : partitions_of(part)) {
                        BigRat c = BigRat(1) / z_weight(mu);
                        if (elementary && (part - mu.length()) % 2 != 0) c = -c;
                        for (const auto& [nu, v] : acc) {
                            Partition merged = nu;
                            for (int p : mu.parts()) merged = merged.with_part(p);
                            auto [it, fresh] = next.emplace(merged, v * c);
                            if (!fresh) it->second += v * c;
                        }
                    }
                    acc = std::move(next);
                }
                for (const auto& [mu, v] : acc) mat[t->index.at(mu)][col] = v;
            }
            return mat;
        };
        t->to_p[basis_slot(Basis::Homogeneous)] = expand_products(false);
        t->to_p[basis_slot(Basis::Elementary)] = expand_products(true);
        t->from_p[basis_slot(Basis::Homogeneous)] =
            qmatrix_inverse(t->to_p[basis_slot(Basis::Homogeneous)]);
        t->from_p[basis_slot(Basis::Elementary)] =
            qmatrix_inverse(t->to_p[basis_slot(Basis::Elementary)]);

        // Kostka: coeff of m_mu in s_lam equals coeff of s_lam in h_mu.
        QMatrix s_to_m(P, std::vector<BigRat>(P));
        const QMatrix& h_to_p = t->to_p[basis_slot(Basis::Homogeneous)];
        for (size_t lam = 0; lam < P; ++lam)
            for (size_t mu = 0; mu < P; ++mu) {
                BigRat k;
                for (size_t nu = 0; nu < P; ++nu) k += chi[lam][nu] * h_to_p[nu][mu];
                s_to_m[mu][lam] = k;
            }
        QMatrix m_to_s = qmatrix_inverse(s_to_m);
        // m -> p = (s -> p) . (m -> s);  p -> m = (s -> m) . (p -> s)
        QMatrix& m_to_p = t->to_p[basis_slot(Basis::Monomial)];
        QMatrix& p_to_m = t->from_p[basis_slot(Basis::Monomial)];
        m_to_p.assign(P, std::vector<BigRat>(P));
        p_to_m.assign(P, std::vector<BigRat>(P));
        for (size_t i = 0; i < P; ++i)
            for (size_t j = 0; j < P; ++j) {
                BigRat a, b;
                for (size_t k = 0; k < P; ++k) {
                    a += s_to_p[i][k] * m_to_s[k][j];
                    b += s_to_m[i][k] * p_to_s[k][j];
                }
                m_to_p[i][j] = a;
                p_to_m[i][j] = b;
            }
        return t;
    }

    std::mutex mu_;
    std::map<int, std::unique_ptr<DegreeTables>> tables_;
};

TableRegistry& registry() {
    static TableRegistry r;
    return r;
}

void require_classical(const SymFunc& f, const char* who) {
    if (f.basis() == Basis::MacdonaldH)
        throw std::invalid_argument(std::string(who) +
                                    ": Macdonald basis is handled by the operator toolkit");
}

Partition union_parts(const Partition& a, const Partition& b) {
    std::vector<int> merged;
    merged.reserve(a.length() + b.length());
    merged.insert(merged.end(), a.parts().begin(), a.parts().end());
    merged.insert(merged.end(), b.parts().begin(), b.parts().end());
    std::sort(merged.begin(), merged.end(), std::greater<int>());
    return Partition(std::move(merged));
}

}  // namespace

void prebuild_basis_tables(int n) {
    for (int d = 0; d <= n; ++d) registry().get(d);
}

// --------------------------------- SymFunc ---------------------------------

int SymFunc::max_degree() const {
    int d = 0;
    for (const auto& [lam, c] : coeffs_) d = std::max(d, lam.size());
    return d;
}

RatQT SymFunc::coeff(const Partition& lam) const {
    auto it = coeffs_.find(lam);
    return it == coeffs_.end() ? RatQT() : it->second;
}

SymFunc SymFunc::homogeneous_part(int d) const {
    SymFunc out(basis_);
    for (const auto& [lam, c] : coeffs_)
        if (lam.size() == d) out.coeffs_.emplace(lam, c);
    return out;
}

std::vector<int> SymFunc::degrees() const {
    std::vector<int> ds;
    for (const auto& [lam, c] : coeffs_) ds.push_back(lam.size());
    std::sort(ds.begin(), ds.end());
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
    return ds;
}

void SymFunc::add_term(const Partition& lam, const RatQT& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = coeffs_.emplace(lam, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

SymFunc SymFunc::scaled(const RatQT& c) const {
    SymFunc out(basis_);
    if (c.is_zero()) return out;
    for (const auto& [lam, v] : coeffs_) out.coeffs_.emplace(lam, v * c);
    return out;
}

SymFunc SymFunc::operator-() const { return scaled(RatQT(-1)); }

SymFunc operator+(const SymFunc& a, const SymFunc& b) {
    SymFunc rhs = (a.basis_ == b.basis_) ? b : convert(b, a.basis_);
    SymFunc out = a;
    for (const auto& [lam, c] : rhs.coeffs_) out.add_term(lam, c);
    return out;
}

SymFunc operator-(const SymFunc& a, const SymFunc& b) { return a + (-b); }

SymFunc operator*(const SymFunc& a, const SymFunc& b) {
    require_classical(a, "product");
    require_classical(b, "product");
    SymFunc pa = convert(a, Basis::PowerSum);
    SymFunc pb = convert(b, Basis::PowerSum);
    SymFunc out(Basis::PowerSum);
    for (const auto& [la, ca] : pa.coeffs())
        for (const auto& [lb, cb] : pb.coeffs()) out.add_term(union_parts(la, lb), ca * cb);
    return a.basis_ == Basis::PowerSum ? out : convert(out, a.basis_);
}

std::string SymFunc::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [lam, c] : coeffs_) {
        std::string cs = c.str();
        bool neg = cs.size() > 1 && cs[0] == '-' && cs.find(' ') == std::string::npos &&
                   cs.find('+') == std::string::npos;
        if (first) {
            first = false;
            if (neg) {
                os << "-";
                cs = cs.substr(1);
            }
        } else {
            if (neg) {
                os << " - ";
                cs = cs.substr(1);
            } else {
                os << " + ";
            }
        }
        bool needs_parens = cs.find(' ') != std::string::npos;
        std::string name(1, static_cast<char>(basis_));
        name += lam.str();
        if (cs == "1")
            os << name;
        else if (needs_parens)
            os << "(" << cs << ")*" << name;
        else
            os << cs << "*" << name;
    }
    return os.str();
}

SymFunc sf_e(int k) {
    if (k < 0) return SymFunc(Basis::Elementary);
    if (k == 0) return SymFunc::one(Basis::Elementary);
    return SymFunc::element(Basis::Elementary, Partition({k}));
}
SymFunc sf_h(int k) {
    if (k < 0) return SymFunc(Basis::Homogeneous);
    if (k == 0) return SymFunc::one(Basis::Homogeneous);
    return SymFunc::element(Basis::Homogeneous, Partition({k}));
}
SymFunc sf_p(int k) {
    if (k < 0) return SymFunc(Basis::PowerSum);
    if (k == 0) return SymFunc::one(Basis::PowerSum);
    return SymFunc::element(Basis::PowerSum, Partition({k}));
}
SymFunc sf_s(const Partition& lam) { return SymFunc::element(Basis::Schur, lam); }

// ------------------------------- conversions -------------------------------

SymFunc convert(const SymFunc& f, Basis target) {
    require_classical(f, "convert");
    if (target == Basis::MacdonaldH)
        throw std::invalid_argument("convert: Macdonald basis is handled by the operator toolkit");
    if (f.basis() == target) return f;

    SymFunc out(target);
    for (int d : f.degrees()) {
        const DegreeTables& t = registry().get(d);
        size_t P = t.parts.size();
        std::vector<RatQT> v(P);
        for (const SymFunc hp_ = f.homogeneous_part(d);
             const auto& [lam, c] : hp_.coeffs()) v[t.index.at(lam)] = c;

        auto apply = [&](const QMatrix& m, const std::vector<RatQT>& x) {
            std::vector<RatQT> y(P);
            for (size_t i = 0; i < P; ++i) {
                RatQT s;
                for (size_t j = 0; j < P; ++j) {
                    if (x[j].is_zero() || m[i][j].is_zero()) continue;
                    s += x[j] * m[i][j];
                }
                y[i] = s;
            }
            return y;
        };

        if (f.basis() != Basis::PowerSum) v = apply(t.to_p[basis_slot(f.basis())], v);
        if (target != Basis::PowerSum) v = apply(t.from_p[basis_slot(target)], v);
        for (size_t i = 0; i < P; ++i)
            if (!v[i].is_zero()) out.add_term(t.parts[i], v[i]);
    }
    return out;
}

bool same_symfunc(const SymFunc& a, const SymFunc& b) {
    if (a.basis() == b.basis()) return a.coeffs() == b.coeffs();
    return convert(a, Basis::Schur).coeffs() == convert(b, Basis::Schur).coeffs();
}

RatQT hall_inner(const SymFunc& f, const SymFunc& g) {
    SymFunc pf = convert(f, Basis::PowerSum);
    SymFunc pg = convert(g, Basis::PowerSum);
    const SymFunc& small = pf.coeffs().size() <= pg.coeffs().size() ? pf : pg;
    const SymFunc& large = pf.coeffs().size() <= pg.coeffs().size() ? pg : pf;
    RatQT out;
    for (const auto& [lam, c] : small.coeffs()) {
        RatQT d = large.coeff(lam);
        if (d.is_zero()) continue;
        out += c * d * RatQT(z_weight(lam));
    }
    return out;
}

SymFunc perp(const SymFunc& g, const SymFunc& f) {
    SymFunc pg = convert(g, Basis::PowerSum);
    SymFunc pf = convert(f, Basis::PowerSum);
    SymFunc out(Basis::PowerSum);
    for (const auto& [lam, cg] : pg.coeffs()) {
        SymFunc cur = pf;
        // p_r-perp acts as z-weighted part removal.
        for (int r : lam.parts()) {
            SymFunc next(Basis::PowerSum);
            for (const auto& [nu, c] : cur.coeffs()) {
                int mult = nu.multiplicity(r);
                if (mult == 0) continue;
                next.add_term(nu.without_part(r), c * RatQT(BigRat(r * mult)));
            }
            cur = std::move(next);
            if (cur.is_zero()) break;
        }
        if (!cur.is_zero()) out += cur.scaled(cg);
    }
    return f.basis() == Basis::PowerSum ? out : convert(out, f.basis());
}

SymFunc omega_involution(const SymFunc& f) {
    SymFunc pf = convert(f, Basis::PowerSum);
    SymFunc out(Basis::PowerSum);
    for (const auto& [lam, c] : pf.coeffs()) {
        bool flip = (lam.size() - lam.length()) % 2 != 0;
        out.add_term(lam, flip ? -c : c);
    }
    return f.basis() == Basis::PowerSum ? out : convert(out, f.basis());
}

// -------------------------------- plethysm ---------------------------------

RatQT pleth_eval(const SymFunc& f, const RatQT& alphabet) {
    SymFunc pf = convert(f, Basis::PowerSum);
    RatQT out;
    for (const auto& [lam, c] : pf.coeffs()) {
        RatQT term = c;
        for (int r : lam.parts()) term *= alphabet.substitute_powers(r);
        out += term;
    }
    return out;
}

RatQT pleth_eval(const SymFunc& f, const LaurentQT& alphabet) {
    return pleth_eval(f, RatQT(alphabet));
}

SymFunc pleth_scale(const SymFunc& f, const RatQT& c, bool epsilon) {
    SymFunc pf = convert(f, Basis::PowerSum);
    SymFunc out(Basis::PowerSum);
    for (const auto& [lam, v] : pf.coeffs()) {
        RatQT factor(1);
        for (int r : lam.parts()) {
            factor *= c.substitute_powers(r);
            if (epsilon && r % 2 != 0) factor = -factor;
        }
        out.add_term(lam, v * factor);
    }
    return f.basis() == Basis::PowerSum ? out : convert(out, f.basis());
}

SymFunc pleth_shift(const SymFunc& f, const VirtualAlphabet& A) {
    SymFunc pf = convert(f, Basis::PowerSum);
    SymFunc out(Basis::PowerSum);
    RatQT scalar_rq(A.scalar);
    for (const auto& [lam, v] : pf.coeffs()) {
        // expand prod_i (a_{r_i} p_{r_i} + b_{r_i}) over subsets of parts
        SymFunc expanded = SymFunc::constant(Basis::PowerSum, v);
        for (int r : lam.parts()) {
            RatQT a = A.x_scale.substitute_powers(r);
            if (A.epsilon && r % 2 != 0) a = -a;
            RatQT b = scalar_rq.substitute_powers(r);
            SymFunc next(Basis::PowerSum);
            for (const auto& [nu, c] : expanded.coeffs()) {
                if (!a.is_zero()) next.add_term(nu.with_part(r), c * a);
                if (!b.is_zero()) next.add_term(nu, c * b);
            }
            expanded = std::move(next);
            if (expanded.is_zero()) break;
        }
        out += expanded;
    }
    return f.basis() == Basis::PowerSum ? out : convert(out, f.basis());
}

AlphaSeries pleth_shift_u(const SymFunc& f, const std::vector<RatQT>& scalar_by_degree) {
    SymFunc pf = convert(f, Basis::PowerSum);
    int D = pf.max_degree();
    AlphaSeries out(-D, 0, false);
    // coefficient map: u-exponent -> SymFunc in p
    std::map<int, SymFunc> acc;
    for (const auto& [lam, v] : pf.coeffs()) {
        std::map<int, SymFunc> cur;
        cur.emplace(0, SymFunc::constant(Basis::PowerSum, v));
        for (int r : lam.parts()) {
            const RatQT& b = scalar_by_degree.at(static_cast<size_t>(r));
            std::map<int, SymFunc> next;
            for (const auto& [ue, g] : cur) {
                for (const auto& [nu, c] : g.coeffs()) {
                    auto [it, fresh] = next.emplace(ue, SymFunc(Basis::PowerSum));
                    it->second.add_term(nu.with_part(r), c);
                    if (!b.is_zero()) {
                        auto [it2, fresh2] = next.emplace(ue - r, SymFunc(Basis::PowerSum));
                        it2->second.add_term(nu, c * b);
                    }
                }
            }
            cur = std::move(next);
        }
        for (auto& [ue, g] : cur) {
            auto [it, fresh] = acc.emplace(ue, std::move(g));
            if (!fresh) it->second += g;
        }
    }
    for (auto& [ue, g] : acc)
        if (!g.is_zero()) out.set(ue, std::move(g));
    return out;
}

AlphaSeries omega_series(OmegaKind kind, int degree_bound) {
    if (degree_bound < 0) throw std::invalid_argument("omega_series: negative bound");
    AlphaSeries out(0, degree_bound, true);
    for (int k = 0; k <= degree_bound; ++k) {
        SymFunc term;
        switch (kind) {
            case OmegaKind::CreationB:
                term = convert(sf_e(k), Basis::PowerSum);
                break;
            case OmegaKind::CreationC: {
                term = convert(sf_h(k), Basis::PowerSum)
                           .scaled(RatQT(LaurentQT::monomial(BigRat(k % 2 ? -1 : 1), -k, 0)));
                break;
            }
            case OmegaKind::DualB:
            case OmegaKind::DualC: {
                RatQT inv1mt = RatQT(LaurentQT::one(),
                                     LaurentQT::one() - LaurentQT::t());
                term = pleth_scale(convert(sf_e(k), Basis::PowerSum), inv1mt, false);
                if (k % 2 != 0) term = -term;
                break;
            }
        }
        out.set(k, std::move(term));
    }
    return out;
}

// ----------------------------- hook coefficients ----------------------------

RatQT hook_coefficient(const SymFunc& f, int k, int d) {
    if (k < 0 || k > d - 1) throw std::invalid_argument("hook_coefficient: need 0 <= k <= d-1");
    std::vector<int> parts;
    parts.push_back(k + 1);
    for (int i = 0; i < d - k - 1; ++i) parts.push_back(1);
    SymFunc fs = convert(f.homogeneous_part(d), Basis::Schur);
    return fs.coeff(Partition(std::move(parts)));
}

RatQT hook_coefficient_via_he(const SymFunc& f, int k, int d) {
    if (k < 0 || k > d - 1) throw std::invalid_argument("hook_coefficient: need 0 <= k <= d-1");
    SymFunc fd = f.homogeneous_part(d);
    RatQT out;
    for (int r = 0; r + k + 1 <= d; ++r) {
        SymFunc he = sf_h(k + 1 + r) * convert(sf_e(d - k - 1 - r), Basis::Homogeneous);
        RatQT v = hall_inner(fd, he);
        out += (r % 2 == 0) ? v : -v;
    }
    return out;
}

}  // namespace qtcat
