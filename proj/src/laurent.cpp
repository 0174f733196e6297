#include <qtcat/laurent.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace qtcat {

namespace {

struct MonoDesc {
    bool operator()(const QTMonomial& a, const QTMonomial& b) const {
        return mono_cmp(a, b) > 0;
    }
};

}  // namespace

LaurentQT LaurentQT::from_terms(std::vector<Term> terms) {
    std::map<QTMonomial, BigRat, MonoDesc> acc;
    for (auto& [m, c] : terms) {
        if (c.is_zero()) continue;
        auto it = acc.find(m);
        if (it == acc.end())
            acc.emplace(m, std::move(c));
        else {
            it->second += c;
            if (it->second.is_zero()) acc.erase(it);
        }
    }
    LaurentQT p;
    p.terms_.assign(acc.begin(), acc.end());
    return p;
}

int LaurentQT::min_q() const {
    int m = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first || e.q < m) m = e.q;
        first = false;
    }
    return m;
}
int LaurentQT::max_q() const {
    int m = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first || e.q > m) m = e.q;
        first = false;
    }
    return m;
}
int LaurentQT::min_t() const {
    int m = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first || e.t < m) m = e.t;
        first = false;
    }
    return m;
}
int LaurentQT::max_t() const {
    int m = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first || e.t > m) m = e.t;
        first = false;
    }
    return m;
}

LaurentQT LaurentQT::operator-() const {
    LaurentQT r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

LaurentQT operator+(const LaurentQT& a, const LaurentQT& b) {
    LaurentQT r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto ia = a.terms_.begin(), ea = a.terms_.end();
    auto ib = b.terms_.begin(), eb = b.terms_.end();
    while (ia != ea && ib != eb) {
        int c = mono_cmp(ia->first, ib->first);
        if (c > 0)
            r.terms_.push_back(*ia++);
        else if (c < 0)
            r.terms_.push_back(*ib++);
        else {
            BigRat s = ia->second + ib->second;
            if (!s.is_zero()) r.terms_.push_back({ia->first, std::move(s)});
            ++ia;
            ++ib;
        }
    }
    r.terms_.insert(r.terms_.end(), ia, ea);
    r.terms_.insert(r.terms_.end(), ib, eb);
    return r;
}

LaurentQT operator-(const LaurentQT& a, const LaurentQT& b) { return a + (-b); }

LaurentQT operator*(const LaurentQT& a, const LaurentQT& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (b.is_monomial()) {
        LaurentQT r;
        r.terms_.reserve(a.terms_.size());
        const auto& [mb, cb] = b.terms_[0];
        for (const auto& [ma, ca] : a.terms_) r.terms_.push_back({ma + mb, ca * cb});
        return r;  // monomial shift preserves order
    }
    std::map<QTMonomial, BigRat, MonoDesc> acc;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            QTMonomial m = ma + mb;
            auto it = acc.find(m);
            if (it == acc.end())
                acc.emplace(m, ca * cb);
            else {
                it->second += ca * cb;
                if (it->second.is_zero()) acc.erase(it);
            }
        }
    LaurentQT r;
    r.terms_.assign(acc.begin(), acc.end());
    return r;
}

LaurentQT LaurentQT::scaled(const BigRat& c) const {
    if (c.is_zero()) return {};
    LaurentQT r = *this;
    for (auto& [m, v] : r.terms_) v *= c;
    return r;
}

LaurentQT LaurentQT::shifted(int eq, int et) const {
    LaurentQT r = *this;
    for (auto& [m, v] : r.terms_) {
        m.q += eq;
        m.t += et;
    }
    return r;
}

LaurentQT LaurentQT::substitute_powers(int k) const {
    LaurentQT r = *this;
    for (auto& [m, v] : r.terms_) {
        m.q *= k;
        m.t *= k;
    }
    // order is preserved for k >= 1
    return r;
}

BigRat LaurentQT::eval(const BigRat& q0, const BigRat& t0) const {
    BigRat s;
    for (const auto& [m, c] : terms_) s += c * q0.pow(m.q) * t0.pow(m.t);
    return s;
}

BigRat LaurentQT::content() const {
    if (is_zero()) return BigRat();
    BigRat g;
    for (const auto& [m, c] : terms_) g = BigRat::gcd(g, c);
    if (leading().second.sign() < 0) g = -g;
    return g;
}

std::optional<LaurentQT> LaurentQT::divided_by(const LaurentQT& b) const {
    if (b.is_zero()) throw std::domain_error("LaurentQT: division by zero");
    if (is_zero()) return LaurentQT();
    if (b.is_monomial()) {
        const auto& [mb, cb] = b.terms_[0];
        LaurentQT r = *this;
        for (auto& [m, c] : r.terms_) {
            m = m - mb;
            c /= cb;
        }
        return r;
    }
    // Shift both to plain polynomials; q- and t-valuations are multiplicative,
    // so Laurent divisibility reduces to polynomial divisibility of the shifts.
    LaurentQT A = shifted(-min_q(), -min_t());
    LaurentQT B = b.shifted(-b.min_q(), -b.min_t());
    LaurentQT quo;
    while (!A.is_zero()) {
        const auto& [ma, ca] = A.leading();
        const auto& [mb, cb] = B.leading();
        if (ma.q < mb.q || ma.t < mb.t) return std::nullopt;
        LaurentQT term = monomial(ca / cb, ma.q - mb.q, ma.t - mb.t);
        quo += term;
        A -= term * B;
    }
    return quo.shifted(min_q() - b.min_q(), min_t() - b.min_t());
}

namespace {

// Helpers for the bivariate gcd: view a (shifted, polynomial) LaurentQT as a
// univariate polynomial in q whose coefficients live in Q[t].

int deg_q(const LaurentQT& f) { return f.max_q(); }

LaurentQT coeff_of_q(const LaurentQT& f, int d) {
    std::vector<LaurentQT::Term> out;
    for (const auto& [m, c] : f.terms())
        if (m.q == d) out.push_back({{0, m.t}, c});
    return LaurentQT::from_terms(std::move(out));
}

// Euclidean gcd in Q[t] for t-only polynomials, normalized monic.
LaurentQT gcd_t_only(LaurentQT a, LaurentQT b) {
    while (!b.is_zero()) {
        // remainder of a by b
        while (!a.is_zero() && a.max_t() >= b.max_t()) {
            const auto& la = a.leading();
            const auto& lb = b.leading();
            LaurentQT term =
                LaurentQT::monomial(la.second / lb.second, 0, la.first.t - lb.first.t);
            a -= term * b;
        }
        if (!a.is_zero()) a = a.scaled(a.content().inverse());
        std::swap(a, b);
    }
    if (a.is_zero()) return a;
    return a.scaled(a.content().inverse());
}

LaurentQT content_in_t(const LaurentQT& f) {
    LaurentQT g;
    for (int d = 0; d <= deg_q(f); ++d) {
        LaurentQT c = coeff_of_q(f, d);
        if (!c.is_zero()) g = gcd_t_only(g, c);
        if (!g.is_zero() && g.is_constant()) return LaurentQT::one();
    }
    return g.is_zero() ? LaurentQT::one() : g;
}

LaurentQT primitive_part_q(const LaurentQT& f) {
    LaurentQT c = content_in_t(f);
    if (c.is_one()) {
        BigRat k = f.content();
        return k.is_one() ? f : f.scaled(k.inverse());
    }
    LaurentQT pp = *f.divided_by(c);
    return pp.scaled(pp.content().inverse());
}

// Pseudo-remainder of a by b with respect to q (deg_q a >= deg_q b > 0).
// Rational content is stripped along the way; only divisibility matters.
LaurentQT pseudo_rem_q(LaurentQT a, const LaurentQT& b) {
    int db = deg_q(b);
    LaurentQT lb = coeff_of_q(b, db);
    while (!a.is_zero() && deg_q(a) >= db) {
        int da = deg_q(a);
        LaurentQT la = coeff_of_q(a, da);
        a = a * lb - b * la.shifted(da - db, 0);
        if (!a.is_zero()) a = a.scaled(a.content().inverse());
    }
    return a;
}

}  // namespace

namespace {

// Modular coprimality certificate.  A common factor h with positive q-degree
// survives specialization t -> t0 over F_p whenever lc_q(f)(t0) != 0 mod p,
// because lc_q(h) divides lc_q(f).  So a trivial specialized gcd in F_p[q]
// proves deg_q(gcd) = 0; with the symmetric t-side check the gcd must be a
// monomial.
constexpr long kPrime = 2147483629;  // < 2^31

long mod_of(const mpz_class& z) {
    long r = mpz_fdiv_ui(z.get_mpz_t(), kPrime);
    return r;
}

long mod_inv(long a) {
    long r = 1, base = a % kPrime, e = kPrime - 2;
    while (e) {
        if (e & 1) r = static_cast<long>((__int128)r * base % kPrime);
        base = static_cast<long>((__int128)base * base % kPrime);
        e >>= 1;
    }
    return r;
}

long mod_pow(long a, long e) {
    a %= kPrime;
    if (a < 0) a += kPrime;
    if (e < 0) {
        a = mod_inv(a);
        e = -e;
    }
    long r = 1;
    while (e) {
        if (e & 1) r = static_cast<long>((__int128)r * a % kPrime);
        a = static_cast<long>((__int128)a * a % kPrime);
        e >>= 1;
    }
    return r;
}

// f(q, t0) mod p as a dense vector in q; nullopt if a coefficient denominator
// vanishes mod p.
std::optional<std::vector<long>> specialize_t(const LaurentQT& f, long t0) {
    int lo = f.min_q(), hi = f.max_q();
    std::vector<long> out(static_cast<size_t>(hi - lo + 1), 0);
    for (const auto& [m, c] : f.terms()) {
        long d = mod_of(c.den());
        if (d == 0) return std::nullopt;
        long v = static_cast<long>((__int128)mod_of(c.num()) * mod_inv(d) % kPrime);
        v = static_cast<long>((__int128)v * mod_pow(t0, m.t) % kPrime);
        size_t i = static_cast<size_t>(m.q - lo);
        out[i] = (out[i] + v) % kPrime;
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::optional<std::vector<long>> specialize_q(const LaurentQT& f, long q0) {
    int lo = f.min_t(), hi = f.max_t();
    std::vector<long> out(static_cast<size_t>(hi - lo + 1), 0);
    for (const auto& [m, c] : f.terms()) {
        long d = mod_of(c.den());
        if (d == 0) return std::nullopt;
        long v = static_cast<long>((__int128)mod_of(c.num()) * mod_inv(d) % kPrime);
        v = static_cast<long>((__int128)v * mod_pow(q0, m.q) % kPrime);
        size_t i = static_cast<size_t>(m.t - lo);
        out[i] = (out[i] + v) % kPrime;
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

bool dense_gcd_is_constant(std::vector<long> a, std::vector<long> b) {
    while (!b.empty()) {
        // a mod b
        while (a.size() >= b.size() && !a.empty()) {
            long f = static_cast<long>((__int128)a.back() * mod_inv(b.back()) % kPrime);
            size_t off = a.size() - b.size();
            for (size_t i = 0; i < b.size(); ++i)
                a[off + i] = static_cast<long>(
                    ((a[off + i] - (__int128)f * b[i]) % kPrime + kPrime) % kPrime);
            while (!a.empty() && a.back() == 0) a.pop_back();
        }
        std::swap(a, b);
    }
    return a.size() == 1;
}

// Leading q-coefficient of f (shifted rep), as a t-only polynomial.
LaurentQT lead_coeff_q_poly(const LaurentQT& f) {
    int d = f.max_q();
    std::vector<LaurentQT::Term> out;
    for (const auto& [m, c] : f.terms())
        if (m.q == d) out.push_back({{0, m.t}, c});
    return LaurentQT::from_terms(std::move(out));
}

LaurentQT lead_coeff_t_poly(const LaurentQT& f) {
    int d = f.max_t();
    std::vector<LaurentQT::Term> out;
    for (const auto& [m, c] : f.terms())
        if (m.t == d) out.push_back({{m.q, 0}, c});
    return LaurentQT::from_terms(std::move(out));
}

}  // namespace

bool LaurentQT::coprime_certificate(const LaurentQT& a, const LaurentQT& b) {
    if (a.is_zero() || b.is_zero()) return false;
    if (a.is_monomial() || b.is_monomial()) return true;

    auto eval_mod = [](const LaurentQT& f, long q0, long t0) -> std::optional<long> {
        long s = 0;
        for (const auto& [m, c] : f.terms()) {
            long d = mod_of(c.den());
            if (d == 0) return std::nullopt;
            long v = static_cast<long>((__int128)mod_of(c.num()) * mod_inv(d) % kPrime);
            v = static_cast<long>((__int128)v * mod_pow(q0, m.q) % kPrime);
            v = static_cast<long>((__int128)v * mod_pow(t0, m.t) % kPrime);
            s = (s + v) % kPrime;
        }
        return s;
    };

    // q-side: deg_q(gcd) = 0 unless both have positive q-span.
    bool q_done = (a.max_q() - a.min_q() == 0) || (b.max_q() - b.min_q() == 0);
    if (!q_done) {
        LaurentQT lc = lead_coeff_q_poly(a);
        for (long t0 = 1; t0 <= 16 && !q_done; ++t0) {
            auto lval = eval_mod(lc, 1, t0);
            if (!lval) return false;
            if (*lval == 0) continue;  // bad specialization point, try next
            auto ua = specialize_t(a, t0);
            auto ub = specialize_t(b, t0);
            if (!ua || !ub) return false;
            if (ua->empty() || ub->empty()) continue;
            if (!dense_gcd_is_constant(*ua, *ub)) return false;
            q_done = true;
        }
        if (!q_done) return false;
    }
    // t-side, symmetric.
    bool t_done = (a.max_t() - a.min_t() == 0) || (b.max_t() - b.min_t() == 0);
    if (!t_done) {
        LaurentQT lc = lead_coeff_t_poly(a);
        for (long q0 = 1; q0 <= 16 && !t_done; ++q0) {
            auto lval = eval_mod(lc, q0, 1);
            if (!lval) return false;
            if (*lval == 0) continue;
            auto ua = specialize_q(a, q0);
            auto ub = specialize_q(b, q0);
            if (!ua || !ub) return false;
            if (ua->empty() || ub->empty()) continue;
            if (!dense_gcd_is_constant(*ua, *ub)) return false;
            t_done = true;
        }
        if (!t_done) return false;
    }
    return true;
}

LaurentQT LaurentQT::gcd(const LaurentQT& a0, const LaurentQT& b0) {
    auto normalize = [](const LaurentQT& f) {
        if (f.is_zero()) return f;
        return f.scaled(f.content().inverse());
    };
    if (a0.is_zero()) return normalize(b0);
    if (b0.is_zero()) return normalize(a0);
    if (a0.is_monomial() || b0.is_monomial()) return one();

    LaurentQT A = a0.shifted(-a0.min_q(), -a0.min_t());
    LaurentQT B = b0.shifted(-b0.min_q(), -b0.min_t());
    LaurentQT contA = content_in_t(A), contB = content_in_t(B);
    LaurentQT c = gcd_t_only(contA, contB);
    LaurentQT F = primitive_part_q(A), G = primitive_part_q(B);
    if (deg_q(F) < deg_q(G)) std::swap(F, G);
    // primitive PRS
    while (!G.is_zero() && deg_q(G) > 0) {
        LaurentQT R = pseudo_rem_q(F, G);
        F = G;
        G = R.is_zero() ? R : primitive_part_q(R);
    }
    LaurentQT H;
    if (G.is_zero())
        H = F;
    else
        H = one();  // common divisor of a primitive poly and a q-constant
    if (deg_q(H) == 0) H = one();
    return normalize(c.is_constant() ? H : c * H);
}

std::string LaurentQT::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        BigRat a = c;
        if (first) {
            if (a.sign() < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        first = false;
        bool has_mono = m.q != 0 || m.t != 0;
        if (!a.is_one() || !has_mono) {
            os << a.str();
            if (has_mono) os << "*";
        }
        if (m.q != 0) {
            os << "q";
            if (m.q != 1) os << "^" << m.q;
        }
        if (m.t != 0) {
            if (m.q != 0) os << "*";
            os << "t";
            if (m.t != 1) os << "^" << m.t;
        }
    }
    return os.str();
}

}  // namespace qtcat
