#include <qtcat/macdonald.hpp>

#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <mutex>
#include <sstream>

namespace qtcat {

namespace {

using nlohmann::json;

// ------------------------------- hook data ---------------------------------

int arm(const Partition& mu, int row, int col) { return mu.parts()[row] - col - 1; }

int leg(const Partition& mu, int row, int col) {
    int n = 0;
    for (int r = row + 1; r < mu.length(); ++r)
        if (mu.parts()[r] >= col + 1) ++n;
    return n;
}

}  // namespace

HookData hook_data(const Partition& mu) {
    HookData h;
    h.mu = mu;
    h.B = LaurentQT();
    h.T = LaurentQT::one();
    h.w = LaurentQT::one();
    for (int row = 0; row < mu.length(); ++row)
        for (int col = 0; col < mu.parts()[row]; ++col) {
            h.B += LaurentQT::monomial(BigRat(1), col, row);  // co-arm, co-leg
            h.T = h.T * LaurentQT::monomial(BigRat(1), col, row);
            int a = arm(mu, row, col), l = leg(mu, row, col);
            h.w = h.w * (LaurentQT::q(a) - LaurentQT::t(l + 1)) *
                  (LaurentQT::t(l) - LaurentQT::q(a + 1));
        }
    h.D = m_poly() * h.B - LaurentQT::one();
    return h;
}

// --------------------- fraction-free linear system solve --------------------

namespace {

// Bareiss elimination on the augmented matrix (last column is the right-hand
// side); rows >= unknowns, unique solution expected.  Pivots favor sparse
// entries to keep the minors small.
std::vector<RatQT> solve_poly_system(std::vector<std::vector<LaurentQT>> rows, size_t ncols) {
    size_t R = rows.size();
    if (R < ncols) throw std::runtime_error("solve_poly_system: underdetermined");
    LaurentQT prev = LaurentQT::one();
    for (size_t col = 0; col < ncols; ++col) {
        size_t best = R;
        size_t best_terms = 0;
        for (size_t i = col; i < R; ++i) {
            if (rows[i][col].is_zero()) continue;
            size_t nt = rows[i][col].terms().size();
            if (best == R || nt < best_terms) {
                best = i;
                best_terms = nt;
            }
        }
        if (best == R) throw std::runtime_error("solve_poly_system: singular system");
        std::swap(rows[col], rows[best]);
        const LaurentQT piv = rows[col][col];
        for (size_t i = col + 1; i < R; ++i) {
            if (rows[i][col].is_zero()) {
                if (!prev.is_one())
                    for (size_t j = col + 1; j <= ncols; ++j) {
                        if (rows[i][j].is_zero()) continue;
                        auto d = (piv * rows[i][j]).divided_by(prev);
                        if (!d) throw std::runtime_error("solve_poly_system: inexact division");
                        rows[i][j] = *d;
                    }
                else
                    for (size_t j = col + 1; j <= ncols; ++j)
                        if (!rows[i][j].is_zero()) rows[i][j] = piv * rows[i][j];
                continue;
            }
            const LaurentQT lik = rows[i][col];
            for (size_t j = col + 1; j <= ncols; ++j) {
                LaurentQT v = piv * rows[i][j] - lik * rows[col][j];
                if (!prev.is_one() && !v.is_zero()) {
                    auto d = v.divided_by(prev);
                    if (!d) throw std::runtime_error("solve_poly_system: inexact division");
                    v = *d;
                }
                rows[i][j] = std::move(v);
            }
            rows[i][col] = LaurentQT();
        }
        prev = piv;
    }
    // consistency of the extra rows
    for (size_t i = ncols; i < R; ++i)
        if (!rows[i][ncols].is_zero())
            throw std::runtime_error("solve_poly_system: inconsistent system");
    // back substitution over the fraction field
    std::vector<RatQT> x(ncols);
    for (size_t ii = ncols; ii-- > 0;) {
        RatQT s(rows[ii][ncols]);
        for (size_t j = ii + 1; j < ncols; ++j)
            if (!rows[ii][j].is_zero() && !x[j].is_zero()) s -= RatQT(rows[ii][j]) * x[j];
        x[ii] = s / RatQT(rows[ii][ii]);
    }
    return x;
}

void finalize_table(HtildeTable& t) {
    size_t P = t.mus.size();
    t.index.clear();
    for (size_t i = 0; i < P; ++i) t.index.emplace(t.mus[i], static_cast<int>(i));
    t.columns_s.assign(P, SymFunc(Basis::Schur));
    t.columns_p.clear();
    t.w.resize(P);
    t.T.resize(P);
    for (size_t m = 0; m < P; ++m) {
        SymFunc col(Basis::Schur);
        for (size_t l = 0; l < P; ++l) col.add_term(t.mus[l], t.schur_coeff[l][m]);
        t.columns_s[m] = col;
        HookData h = hook_data(t.mus[m]);
        t.w[m] = RatQT(h.w);
        t.T[m] = h.T;
    }
    for (size_t m = 0; m < P; ++m) t.columns_p.push_back(convert(t.columns_s[m], Basis::PowerSum));
}

RatQT star_inner_p(const SymFunc& pf, const SymFunc& pg) {
    RatQT out;
    for (const auto& [lam, c] : pf.coeffs()) {
        RatQT d = pg.coeff(lam);
        if (d.is_zero()) continue;
        LaurentQT factor = LaurentQT::one();
        for (int r : lam.parts())
            factor = factor * (LaurentQT::one() - LaurentQT::q(r)) *
                     (LaurentQT::one() - LaurentQT::t(r));
        BigRat z = z_weight(lam);
        if ((lam.size() - lam.length()) % 2 != 0) z = -z;
        out += c * d * RatQT(factor).scaled(z);
    }
    return out;
}

void validate_orthogonality(const HtildeTable& t) {
    size_t P = t.mus.size();
    for (size_t a = 0; a < P; ++a)
        for (size_t b = a; b < P; ++b) {
            RatQT v = star_inner_p(t.columns_p[a], t.columns_p[b]);
            RatQT expect = a == b ? t.w[a] : RatQT();
            if (v != expect)
                throw std::runtime_error(
                    "Macdonald table degree " + std::to_string(t.degree) +
                    ": star orthogonality failed at " + t.mus[a].str() + "," + t.mus[b].str());
        }
}

}  // namespace

HtildeTable build_htilde_table(int n) {
    HtildeTable t;
    t.degree = n;
    t.mus = partitions_of(n);
    size_t P = t.mus.size();

    // Substitution matrices X -> X(1-q) and X -> X(1-t) on the Schur basis.
    RatQT one_minus_q(LaurentQT::one() - LaurentQT::q());
    RatQT one_minus_t(LaurentQT::one() - LaurentQT::t());
    std::vector<std::vector<LaurentQT>> Sq(P, std::vector<LaurentQT>(P));
    std::vector<std::vector<LaurentQT>> St(P, std::vector<LaurentQT>(P));
    std::map<Partition, int, PartitionOrder> idx;
    for (size_t i = 0; i < P; ++i) idx.emplace(t.mus[i], static_cast<int>(i));
    for (size_t nu = 0; nu < P; ++nu) {
        SymFunc q_img = convert(pleth_scale(sf_s(t.mus[nu]), one_minus_q), Basis::Schur);
        SymFunc t_img = convert(pleth_scale(sf_s(t.mus[nu]), one_minus_t), Basis::Schur);
        for (const auto& [lam, c] : q_img.coeffs()) {
            if (!c.is_polynomial()) throw std::runtime_error("substitution image not polynomial");
            Sq[idx.at(lam)][nu] = c.num();
        }
        for (const auto& [lam, c] : t_img.coeffs()) {
            if (!c.is_polynomial()) throw std::runtime_error("substitution image not polynomial");
            St[idx.at(lam)][nu] = c.num();
        }
    }

    int row_n = idx.at(Partition(n > 0 ? std::vector<int>{n} : std::vector<int>{}));
    t.schur_coeff.assign(P, std::vector<RatQT>(P));
    for (size_t m = 0; m < P; ++m) {
        const Partition& mu = t.mus[m];
        Partition muc = mu.conjugate();
        std::vector<std::vector<LaurentQT>> rows;
        {
            // normalization first: coefficient of s_(n) is 1
            std::vector<LaurentQT> row(P + 1);
            row[row_n] = LaurentQT::one();
            row[P] = LaurentQT::one();
            rows.push_back(std::move(row));
        }
        for (size_t lam = 0; lam < P; ++lam) {
            if (!dominates(t.mus[lam], mu)) {
                std::vector<LaurentQT> row(P + 1);
                for (size_t nu = 0; nu < P; ++nu) row[nu] = Sq[lam][nu];
                rows.push_back(std::move(row));
            }
            if (!dominates(t.mus[lam], muc)) {
                std::vector<LaurentQT> row(P + 1);
                for (size_t nu = 0; nu < P; ++nu) row[nu] = St[lam][nu];
                rows.push_back(std::move(row));
            }
        }
        std::vector<RatQT> x;
        try {
            x = solve_poly_system(std::move(rows), P);
        } catch (const std::exception& e) {
            throw std::runtime_error("Macdonald table construction failed at degree " +
                                     std::to_string(n) + ", column " + mu.str() + ": " + e.what());
        }
        for (size_t lam = 0; lam < P; ++lam) t.schur_coeff[lam][m] = x[lam];
    }
    finalize_table(t);
    validate_orthogonality(t);
    return t;
}

// ----------------------------- serialization --------------------------------

namespace {

json laurent_to_json(const LaurentQT& p) {
    json terms = json::array();
    for (const auto& [m, c] : p.terms()) terms.push_back({m.q, m.t, c.str()});
    return terms;
}

LaurentQT laurent_from_json(const json& j) {
    std::vector<LaurentQT::Term> terms;
    for (const auto& t : j)
        terms.push_back({{t.at(0).get<int>(), t.at(1).get<int>()},
                         BigRat(t.at(2).get<std::string>())});
    return LaurentQT::from_terms(std::move(terms));
}

}  // namespace

std::string HtildeTable::to_json() const {
    json j;
    j["format"] = "1";
    j["degree"] = degree;
    json parts = json::array();
    for (const Partition& mu : mus) parts.push_back(mu.parts());
    j["partitions"] = parts;
    json mat = json::array();
    for (const auto& row : schur_coeff) {
        json jrow = json::array();
        for (const RatQT& c : row)
            jrow.push_back({{"n", laurent_to_json(c.num())}, {"d", laurent_to_json(c.den())}});
        mat.push_back(jrow);
    }
    j["matrix"] = mat;
    return j.dump();
}

HtildeTable HtildeTable::from_json(const std::string& text) {
    json j = json::parse(text);
    if (j.at("format").get<std::string>() != "1")
        throw std::runtime_error("HtildeTable: unsupported format version");
    HtildeTable t;
    t.degree = j.at("degree").get<int>();
    for (const auto& p : j.at("partitions")) t.mus.push_back(Partition(p.get<std::vector<int>>()));
    size_t P = t.mus.size();
    const json& mat = j.at("matrix");
    if (mat.size() != P) throw std::runtime_error("HtildeTable: bad matrix shape");
    t.schur_coeff.assign(P, std::vector<RatQT>(P));
    for (size_t l = 0; l < P; ++l) {
        if (mat[l].size() != P) throw std::runtime_error("HtildeTable: bad matrix shape");
        for (size_t m = 0; m < P; ++m) {
            LaurentQT num = laurent_from_json(mat[l][m].at("n"));
            LaurentQT den = laurent_from_json(mat[l][m].at("d"));
            t.schur_coeff[l][m] = RatQT(num, den);
        }
    }
    finalize_table(t);
    return t;
}

// ------------------------------- registry ----------------------------------

namespace {

class HtildeRegistry {
public:
    const HtildeTable& get(int n) {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = tables_.find(n);
        if (it != tables_.end()) return *it->second;
        std::unique_ptr<HtildeTable> t;
        if (!cache_dir_.empty()) t = try_load(n);
        if (!t) {
            t = std::make_unique<HtildeTable>(build_htilde_table(n));
            if (!cache_dir_.empty()) store(*t);
        }
        auto* raw = t.get();
        tables_.emplace(n, std::move(t));
        return *raw;
    }

    void set_dir(const std::string& dir) {
        std::lock_guard<std::mutex> lock(mu_);
        cache_dir_ = dir;
    }
    std::string dir() {
        std::lock_guard<std::mutex> lock(mu_);
        return cache_dir_;
    }
    std::vector<std::string> take_warnings() {
        std::lock_guard<std::mutex> lock(mu_);
        return std::move(warnings_);
    }
    void drop_memory() {
        std::lock_guard<std::mutex> lock(mu_);
        tables_.clear();
    }

private:
    static uint64_t fnv1a(const std::string& bytes) {
        uint64_t h = 1469598103934665603ull;
        for (unsigned char c : bytes) {
            h ^= c;
            h *= 1099511628211ull;
        }
        return h;
    }

    static std::string hex64(uint64_t v) {
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
        return buf;
    }

    std::filesystem::path table_path(int n) const {
        return std::filesystem::path(cache_dir_) / ("htilde_" + std::to_string(n) + ".json");
    }
    std::filesystem::path manifest_path() const {
        return std::filesystem::path(cache_dir_) / "manifest.json";
    }

    json read_manifest() const {
        std::ifstream in(manifest_path());
        if (!in) return json{{"format", "1"}, {"entries", json::object()}};
        json j = json::parse(in, nullptr, false);
        if (j.is_discarded() || !j.contains("entries") ||
            j.value("format", std::string()) != "1")
            return json{{"format", "1"}, {"entries", json::object()}};
        return j;
    }

    static void atomic_write(const std::filesystem::path& path, const std::string& content) {
        std::filesystem::path tmp = path;
        tmp += ".tmp";
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            if (!out) throw std::runtime_error("cache: cannot write " + tmp.string());
            out << content;
            if (!out) throw std::runtime_error("cache: write failed for " + tmp.string());
        }
        std::filesystem::rename(tmp, path);
    }

    std::unique_ptr<HtildeTable> try_load(int n) {
        auto path = table_path(n);
        std::ifstream in(path, std::ios::binary);
        if (!in) return nullptr;
        std::ostringstream ss;
        ss << in.rdbuf();
        std::string bytes = ss.str();
        json manifest = read_manifest();
        std::string fname = path.filename().string();
        auto& entries = manifest.at("entries");
        if (!entries.contains(fname) ||
            entries.at(fname).get<std::string>() != hex64(fnv1a(bytes))) {
            warnings_.push_back("cache: digest mismatch for " + fname + ", rebuilding");
            return nullptr;
        }
        try {
            auto t = std::make_unique<HtildeTable>(HtildeTable::from_json(bytes));
            if (t->degree != n) throw std::runtime_error("degree mismatch");
            return t;
        } catch (const std::exception& e) {
            warnings_.push_back("cache: failed to parse " + fname + " (" + e.what() +
                                "), rebuilding");
            return nullptr;
        }
    }

    void store(const HtildeTable& t) {
        std::filesystem::create_directories(cache_dir_);
        std::string bytes = t.to_json();
        auto path = table_path(t.degree);
        atomic_write(path, bytes);
        json manifest = read_manifest();
        manifest["entries"][path.filename().string()] = hex64(fnv1a(bytes));
        atomic_write(manifest_path(), manifest.dump(1));
    }

    std::mutex mu_;
    std::map<int, std::unique_ptr<HtildeTable>> tables_;
    std::string cache_dir_;
    std::vector<std::string> warnings_;
};

HtildeRegistry& htable_registry() {
    static HtildeRegistry r;
    return r;
}

SymFunc to_power_sum(const SymFunc& f) {
    if (f.basis() != Basis::MacdonaldH) return convert(f, Basis::PowerSum);
    SymFunc out(Basis::PowerSum);
    for (int d : f.degrees()) {
        const HtildeTable& t = htilde_table(d);
        for (const SymFunc hp_ = f.homogeneous_part(d);
             const auto& [mu, c] : hp_.coeffs())
            out += t.columns_p[t.index.at(mu)].scaled(c);
    }
    return out;
}

}  // namespace

const HtildeTable& htilde_table(int n) { return htable_registry().get(n); }

void set_htilde_cache_dir(const std::string& dir) { htable_registry().set_dir(dir); }
std::string htilde_cache_dir() { return htable_registry().dir(); }

namespace detail {
std::vector<std::string> take_htilde_cache_warnings() { return htable_registry().take_warnings(); }
void drop_htilde_memory_cache() { htable_registry().drop_memory(); }
}  // namespace detail

// ------------------------------- operators ---------------------------------

RatQT star_inner(const SymFunc& f, const SymFunc& g) {
    return star_inner_p(to_power_sum(f), to_power_sum(g));
}

SymFunc to_htilde(const SymFunc& f) {
    if (f.basis() == Basis::MacdonaldH) return f;
    SymFunc pf = convert(f, Basis::PowerSum);
    SymFunc out(Basis::MacdonaldH);
    for (int d : pf.degrees()) {
        const HtildeTable& t = htilde_table(d);
        SymFunc part = pf.homogeneous_part(d);
        for (size_t m = 0; m < t.mus.size(); ++m) {
            RatQT c = star_inner_p(part, t.columns_p[m]) / t.w[m];
            out.add_term(t.mus[m], c);
        }
    }
    return out;
}

SymFunc from_htilde(const SymFunc& f, Basis target) {
    if (f.basis() != Basis::MacdonaldH)
        return target == f.basis() ? f : convert(f, target);
    SymFunc out(Basis::Schur);
    for (int d : f.degrees()) {
        const HtildeTable& t = htilde_table(d);
        for (const SymFunc hp_ = f.homogeneous_part(d);
             const auto& [mu, c] : hp_.coeffs())
            out += t.columns_s[t.index.at(mu)].scaled(c);
    }
    return target == Basis::Schur ? out : convert(out, target);
}

SymFunc nabla(const SymFunc& f, int power) {
    if (power != 1 && power != -1) throw std::invalid_argument("nabla: power must be +1 or -1");
    Basis b = f.basis();
    SymFunc h = to_htilde(f);
    SymFunc out(Basis::MacdonaldH);
    for (int d : h.degrees()) {
        const HtildeTable& t = htilde_table(d);
        for (const SymFunc hp_ = h.homogeneous_part(d);
             const auto& [mu, c] : hp_.coeffs()) {
            const LaurentQT& T = t.T[t.index.at(mu)];
            RatQT eig = power == 1 ? RatQT(T) : RatQT(LaurentQT::one(), T);
            out.add_term(mu, c * eig);
        }
    }
    return b == Basis::MacdonaldH ? out : from_htilde(out, b);
}

SymFunc delta_op(const SymFunc& g, const SymFunc& f) {
    Basis b = f.basis();
    SymFunc h = to_htilde(f);
    SymFunc out(Basis::MacdonaldH);
    for (int d : h.degrees()) {
        const HtildeTable& t = htilde_table(d);
        for (const SymFunc hp_ = h.homogeneous_part(d);
             const auto& [mu, c] : hp_.coeffs()) {
            HookData hd = hook_data(mu);
            RatQT eig = pleth_eval(g, hd.B);
            out.add_term(mu, c * eig);
        }
    }
    return b == Basis::MacdonaldH ? out : from_htilde(out, b);
}

PieriData pieri(const Partition& mu) {
    PieriData out;
    out.mu = mu;
    const HtildeTable& t = htilde_table(mu.size());
    const SymFunc& col = t.columns_p[t.index.at(mu)];
    SymFunc up = to_htilde(sf_p(1) * col);
    for (const auto& [nu, c] : up.coeffs()) out.up.emplace(nu, c);
    if (mu.size() > 0) {
        SymFunc down = to_htilde(perp(sf_p(1), col));
        for (const auto& [nu, c] : down.coeffs()) out.down.emplace(nu, c);
    }
    return out;
}

RatQT pieri_sum_rhs(const Partition& gamma, int s, bool e_kind) {
    if (s < 0) throw std::invalid_argument("pieri_sum_rhs: s must be nonnegative");
    PieriData pd = pieri(gamma);
    LaurentQT Tg = hook_data(gamma).T;
    RatQT out;
    if (e_kind) {
        for (const auto& [nu, d] : pd.up) {
            RatQT ratio(hook_data(nu).T, Tg);
            out += d * ratio.pow(s);
        }
        if (s % 2 == 0) out = -out;  // (-1)^(s-1)
        if (s == 0) out += RatQT(1);
    } else {
        for (const auto& [tau, c] : pd.down) {
            RatQT ratio(Tg, hook_data(tau).T);
            out += c * ratio.pow(s);
        }
        out *= RatQT(m_poly() * LaurentQT::monomial(BigRat(1), s, s));
        if (s == 0) out -= RatQT(1);
    }
    return out;
}

std::map<Partition, RatQT, PartitionOrder> gen_pieri(const SymFunc& f, const Partition& nu,
                                                     bool up) {
    const HtildeTable& t = htilde_table(nu.size());
    const SymFunc& col = t.columns_p[t.index.at(nu)];
    SymFunc pf = convert(f, Basis::PowerSum);
    SymFunc image = up ? to_htilde(pf * col) : to_htilde(perp(pf, col));
    std::map<Partition, RatQT, PartitionOrder> out;
    for (const auto& [lam, c] : image.coeffs()) out.emplace(lam, c);
    return out;
}

bool gen_pieri_relation_check(const SymFunc& f, const Partition& mu) {
    int a = f.max_degree();
    auto down = gen_pieri(f, mu, false);
    SymFunc wf_star = pleth_scale(omega_involution(f), RatQT(LaurentQT::one(), m_poly()));
    RatQT wmu = RatQT(hook_data(mu).w);
    for (const Partition& nu : partitions_of(mu.size() - a)) {
        RatQT c;
        auto it = down.find(nu);
        if (it != down.end()) c = it->second;
        auto up = gen_pieri(wf_star, nu, true);
        RatQT d;
        auto it2 = up.find(mu);
        if (it2 != up.end()) d = it2->second;
        RatQT wnu = RatQT(hook_data(nu).w);
        if (c * wnu != d * wmu) return false;
    }
    return true;
}

SymFunc pleth_affine(const SymFunc& f, const std::function<RatQT(int)>& xcoef,
                     const std::function<RatQT(int)>& scalar) {
    SymFunc pf = convert(f, Basis::PowerSum);
    SymFunc out(Basis::PowerSum);
    for (const auto& [lam, v] : pf.coeffs()) {
        SymFunc expanded = SymFunc::constant(Basis::PowerSum, v);
        for (int r : lam.parts()) {
            RatQT a = xcoef(r), b = scalar(r);
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
    return out;
}

bool gen_pieri_sum_check(const Partition& mu, const SymFunc& g, int d, int m) {
    auto down = gen_pieri(g, mu, false);
    RatQT lhs;
    for (const auto& [nu, c] : down)
        if (nu.size() >= m - d && nu.size() <= m) lhs += c;

    // (omega g)[(X - eps)/M]: p_k -> (p_k - (-1)^k)/M(q^k,t^k)
    SymFunc wg = omega_involution(g);
    RatQT Mr(m_poly());
    SymFunc shifted = pleth_affine(
        wg, [&](int k) { return RatQT(1) / Mr.substitute_powers(k); },
        [&](int k) {
            RatQT v = RatQT(k % 2 == 0 ? -1 : 1);
            return v / Mr.substitute_powers(k);
        });
    SymFunc kern = nabla(shifted, -1);
    RatQT rhs = pleth_eval(kern, hook_data(mu).D);
    return lhs == rhs;
}

bool reciprocity_check(const Partition& mu, const Partition& nu) {
    const HtildeTable& tm = htilde_table(mu.size());
    const HtildeTable& tn = htilde_table(nu.size());
    HookData hm = hook_data(mu), hn = hook_data(nu);
    RatQT lhs = pleth_eval(tm.columns_p[tm.index.at(mu)], hn.D);
    RatQT rhs = pleth_eval(tn.columns_p[tn.index.at(nu)], hm.D) * RatQT(hm.T, hn.T);
    if ((mu.size() + nu.size()) % 2 != 0) rhs = -rhs;
    return lhs == rhs;
}

}  // namespace qtcat
