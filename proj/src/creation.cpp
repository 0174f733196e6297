#include <qtcat/creation.hpp>

#include <map>
#include <mutex>

namespace qtcat {

namespace {

RatQT q_power(int e) { return RatQT(LaurentQT::monomial(BigRat(1), e, 0)); }
RatQT t_power(int e) { return RatQT(LaurentQT::monomial(BigRat(1), 0, e)); }

RatQT inv_m() { return RatQT(LaurentQT::one(), m_poly()); }

// Scalar lists for the alphabet shifts P[X + c/u]; entry k is the coefficient
// of u^{-k} in p_k of the added alphabet.
std::vector<RatQT> creation_shift_scalars(int maxdeg) {
    // p_k[eps(1-q)/u] = (-1)^k (1-q^k) u^{-k}
    std::vector<RatQT> out(static_cast<size_t>(maxdeg) + 1);
    for (int k = 1; k <= maxdeg; ++k) {
        RatQT v(LaurentQT::one() - LaurentQT::q(k));
        out[k] = (k % 2 != 0) ? -v : v;
    }
    return out;
}

std::vector<RatQT> dual_b_shift_scalars(int maxdeg) {
    // p_k[M/u] = (1-q^k)(1-t^k) u^{-k}
    std::vector<RatQT> out(static_cast<size_t>(maxdeg) + 1);
    for (int k = 1; k <= maxdeg; ++k)
        out[k] = RatQT((LaurentQT::one() - LaurentQT::q(k)) *
                       (LaurentQT::one() - LaurentQT::t(k)));
    return out;
}

std::vector<RatQT> dual_c_shift_scalars(int maxdeg) {
    // p_k[-M/(qu)] = -(1-q^k)(1-t^k) q^{-k} u^{-k}
    std::vector<RatQT> out(static_cast<size_t>(maxdeg) + 1);
    for (int k = 1; k <= maxdeg; ++k)
        out[k] = -RatQT((LaurentQT::one() - LaurentQT::q(k)) *
                        (LaurentQT::one() - LaurentQT::t(k))) *
                 q_power(-k);
    return out;
}

SymFunc apply_creation(OmegaKind kind, int m, const SymFunc& f, bool negate_q) {
    if (f.is_zero()) return SymFunc(Basis::Schur);
    SymFunc pf = convert(f, Basis::PowerSum);
    int D = pf.max_degree();
    bool dual = (kind == OmegaKind::DualB || kind == OmegaKind::DualC);
    int extract = dual ? -m : m;
    if (!dual && m + D < 0) return SymFunc(Basis::Schur);
    std::vector<RatQT> scalars;
    switch (kind) {
        case OmegaKind::CreationB:
        case OmegaKind::CreationC: scalars = creation_shift_scalars(D); break;
        case OmegaKind::DualB: scalars = dual_b_shift_scalars(D); break;
        case OmegaKind::DualC: scalars = dual_c_shift_scalars(D); break;
    }
    int bound = dual ? D : m + D;
    if (bound < 0) return SymFunc(Basis::Schur);
    AlphaSeries shifted = pleth_shift_u(pf, scalars);
    AlphaSeries product = shifted * omega_series(kind, bound);
    if (extract < product.lo() || extract > product.hi()) return SymFunc(Basis::Schur);
    SymFunc out = product.extract(extract);
    if (negate_q) out = out.scaled(-q_power(1));
    return convert(out, Basis::Schur);
}

}  // namespace

SymFunc creation_b(int m, const SymFunc& f) {
    return apply_creation(OmegaKind::CreationB, m, f, false);
}

SymFunc creation_c(int m, const SymFunc& f) {
    return apply_creation(OmegaKind::CreationC, m, f, true);
}

SymFunc dual_creation_b(int m, const SymFunc& f) {
    return apply_creation(OmegaKind::DualB, m, f, false);
}

SymFunc dual_creation_c(int m, const SymFunc& f) {
    return apply_creation(OmegaKind::DualC, m, f, true);
}

SymFunc c_alpha(const Composition& alpha) {
    static std::mutex mu;
    static std::map<std::vector<int>, SymFunc> memo;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find(alpha.parts());
        if (it != memo.end()) return it->second;
    }
    SymFunc out = SymFunc::one(Basis::Schur);
    for (auto it = alpha.parts().rbegin(); it != alpha.parts().rend(); ++it)
        out = creation_c(*it, out);
    std::lock_guard<std::mutex> lock(mu);
    memo.emplace(alpha.parts(), out);
    return out;
}

bool bc_relation_check(const Composition& alpha, int m) {
    if (m < 1) throw std::invalid_argument("bc_relation_check: m must be positive");
    SymFunc lhs = creation_b(m, c_alpha(alpha));
    SymFunc rhs;
    for (const Composition& beta : compositions_of(m)) rhs += c_alpha(alpha.concat(beta));
    rhs = rhs.scaled(q_power(alpha.length()));
    return same_symfunc(lhs, rhs);
}

SymFunc e_star(int r) { return pleth_scale(sf_e(r), inv_m()); }
SymFunc h_star(int r) { return pleth_scale(sf_h(r), inv_m()); }

SymFunc delta_h_nabla(int d, const SymFunc& f) {
    if (d < 0 || f.is_zero()) return SymFunc(Basis::Schur);
    return delta_op(sf_h(d), nabla(f));
}

SymFunc kernel_expression(int d, int r, int n) {
    if (r < 0 || n < 0) return SymFunc(Basis::Schur);
    return delta_h_nabla(d, e_star(r) * h_star(n));
}

SymFunc kernel_expression_sum(int d, int r, int n) {
    if (r < 0 || n < 0 || d < 0) return SymFunc(Basis::Schur);
    SymFunc out(Basis::Schur);
    RatQT invM = inv_m();
    for (int a = 0; a <= d; ++a) {
        RatQT hd = pleth_eval(sf_h(d - a), invM);
        if (hd.is_zero()) continue;
        for (int g = 0; g <= n + a; ++g)
            for (const Partition& gamma : partitions_of(g)) {
                RatQT hneg = pleth_eval(sf_h(n + a - g), -invM);
                if (hneg.is_zero()) continue;
                HookData hk = hook_data(gamma);
                RatQT coeff = hd * hneg * RatQT(hk.T, hk.w) * pleth_eval(sf_e(a), hk.B);
                if ((r + a) % 2 != 0) coeff = -coeff;
                if (coeff.is_zero()) continue;
                SymFunc term = pleth_scale(sf_e(n + r), RatQT(hk.D, m_poly()));
                out += convert(term.scaled(coeff), Basis::Schur);
            }
    }
    return out;
}

bool kernel_two_route_check(int d, int r, int n) {
    return same_symfunc(kernel_expression(d, r, n), kernel_expression_sum(d, r, n));
}

bool hook_expansion_check(const Partition& mu, const Partition& nu, int d) {
    const HtildeTable& tm = htilde_table(mu.size());
    const SymFunc& hmu = tm.columns_p[tm.index.at(mu)];
    HookData hn = hook_data(nu), hm = hook_data(mu);
    RatQT lhs = RatQT(hn.T, hn.w) * pleth_eval(sf_h(d), hm.B) * pleth_eval(hmu, hn.D);

    RatQT invM = inv_m();
    RatQT rhs;
    for (int a = 0; a <= d; ++a) {
        RatQT hd = pleth_eval(sf_h(d - a), invM);
        if (hd.is_zero()) continue;
        if (a % 2 != 0) hd = -hd;
        for (const Partition& gamma : partitions_of(nu.size() + a)) {
            if (!gamma.contains(nu)) continue;
            auto down = gen_pieri(sf_e(a), gamma, false);
            auto it = down.find(nu);
            if (it == down.end() || it->second.is_zero()) continue;
            HookData hg = hook_data(gamma);
            rhs += hd * pleth_eval(hmu, hg.D) * RatQT(hg.T, hg.w) * it->second;
        }
    }
    return lhs == rhs;
}

bool dual_c_kernel_check(const Partition& gamma, int c, int m) {
    HookData hg = hook_data(gamma);
    RatQT scaleDg = RatQT(hg.D, m_poly());
    SymFunc lhs = dual_creation_c(m, pleth_scale(sf_e(c), scaleDg));

    RatQT inv1mt(LaurentQT::one(), LaurentQT::one() - LaurentQT::t());
    SymFunc rhs(Basis::Schur);
    for (int b = std::max(0, m); b <= c; ++b) {
        RatQT coeff = q_power(1 - b) * pleth_eval(sf_h(b), hg.D);
        if ((m + 1) % 2 != 0) coeff = -coeff;
        if (coeff.is_zero()) continue;
        SymFunc term = pleth_scale(sf_e(c - b), scaleDg) * pleth_scale(sf_e(b - m), inv1mt);
        rhs += convert(term.scaled(coeff), Basis::Schur);
    }
    return same_symfunc(lhs, rhs);
}

bool dual_b_kernel_check(int m, int d, int r, int n) {
    SymFunc lhs = dual_creation_b(m, kernel_expression(d, r, n));

    RatQT invM = inv_m();
    RatQT inv1mt(LaurentQT::one(), LaurentQT::one() - LaurentQT::t());
    SymFunc rhs(Basis::Schur);
    for (int a = 0; a <= d; ++a) {
        RatQT hd = pleth_eval(sf_h(d - a), invM);
        if (hd.is_zero()) continue;
        for (int b = std::max(0, m); b <= n + r; ++b)
            for (int g = 0; g <= n + a; ++g)
                for (const Partition& tau : partitions_of(g)) {
                    RatQT hneg = pleth_eval(sf_h(n + a - g), -invM);
                    if (hneg.is_zero()) continue;
                    HookData ht = hook_data(tau);
                    RatQT coeff = pleth_eval(sf_e(b), ht.D) * hd * hneg * RatQT(ht.T, ht.w) *
                                  pleth_eval(sf_e(a), ht.B);
                    if ((r + a + b + m) % 2 != 0) coeff = -coeff;
                    if (coeff.is_zero()) continue;
                    SymFunc term = pleth_scale(sf_e(n + r - b), RatQT(ht.D, m_poly())) *
                                   pleth_scale(sf_e(b - m), inv1mt);
                    rhs += convert(term.scaled(coeff), Basis::Schur);
                }
    }
    return same_symfunc(lhs, rhs);
}

bool main_recurrence_check(int k, int d, int r, int m) {
    if (k < 0) throw std::invalid_argument("main_recurrence_check: k must be nonnegative");
    SymFunc lhs = dual_creation_c(k + 1, kernel_expression(d, r, m));
    SymFunc rhs = dual_creation_b(k, kernel_expression(d, r, m - 1)).scaled(t_power(k));
    rhs += dual_creation_b(k + 1, kernel_expression(d - 1, r, m)).scaled(t_power(k));
    if (k == 0) rhs += kernel_expression(d, r - 1, m);
    return same_symfunc(lhs, rhs);
}

}  // namespace qtcat
