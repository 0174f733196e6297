#ifndef QTCAT_MACDONALD_HPP
#define QTCAT_MACDONALD_HPP

#include <qtcat/symfunc.hpp>

#include <functional>
#include <map>
#include <string>

namespace qtcat {

/// Hook polynomials of a partition: B the biexponent sum, T the biexponent
/// product, w the two-sided hook normalization, D = M*B - 1 with
/// M = (1-q)(1-t).
struct HookData {
    Partition mu;
    LaurentQT T, B, D, w;
};

HookData hook_data(const Partition& mu);

inline LaurentQT m_poly() {
    return (LaurentQT::one() - LaurentQT::q()) * (LaurentQT::one() - LaurentQT::t());
}

/// Change-of-basis table between the Schur basis and the modified Macdonald
/// basis at one degree, plus data derived from it.
struct HtildeTable {
    int degree = 0;
    std::vector<Partition> mus;                      // canonical order
    std::map<Partition, int, PartitionOrder> index;
    std::vector<std::vector<RatQT>> schur_coeff;     // [lambda][mu]
    std::vector<SymFunc> columns_s;                  // H~_mu in Schur basis
    std::vector<SymFunc> columns_p;                  // H~_mu in power-sum basis
    std::vector<RatQT> w;                            // star norms
    std::vector<LaurentQT> T;

    std::string to_json() const;
    static HtildeTable from_json(const std::string& text);
};

/// Per-degree table, built on first use (or loaded from the configured cache
/// directory) and then shared read-only.
const HtildeTable& htilde_table(int n);

/// Directory for htilde_<n>.json files; empty disables disk caching.
void set_htilde_cache_dir(const std::string& dir);
std::string htilde_cache_dir();

/// Builds the table from the triangularity characterization, ignoring any
/// cache.  Deterministic; used by the cache layer and by tests.
HtildeTable build_htilde_table(int n);

/// Deformed scalar product under which the modified Macdonald basis is
/// orthogonal with norms w_mu:
///   <p_l, p_l>_* = z_l (-1)^(|l|-len(l)) prod_i (1-q^(l_i))(1-t^(l_i)).
RatQT star_inner(const SymFunc& f, const SymFunc& g);

/// Expansion in the modified Macdonald basis via star-orthogonal projection.
SymFunc to_htilde(const SymFunc& f);
SymFunc from_htilde(const SymFunc& f, Basis target = Basis::Schur);

/// nabla: eigenvalue T_mu^power on the Macdonald basis; power in {-1, 1}.
SymFunc nabla(const SymFunc& f, int power = 1);

/// Delta_g: eigenvalue g[B_mu].
SymFunc delta_op(const SymFunc& g, const SymFunc& f);

/// One-cell Pieri coefficients of h_1 and h_1-perp in the Macdonald basis:
/// up[mu'] is the coefficient of H~_mu' in h_1*H~_mu, down[nu] the coefficient
/// of H~_nu in h_1-perp H~_mu.
struct PieriData {
    Partition mu;
    std::map<Partition, RatQT, PartitionOrder> up;
    std::map<Partition, RatQT, PartitionOrder> down;
};

PieriData pieri(const Partition& mu);

/// Right-hand sides of the two Pieri summation formulas:
///   e-kind: e_(s-1)[D_gamma] = (-1)^(s-1) sum_{nu <- gamma} d (T_nu/T_gamma)^s + chi(s=0)
///   h-kind: h_(s+1)[D_gamma] = M t^s q^s sum_{tau -> gamma} c (T_gamma/T_tau)^s - chi(s=0)
RatQT pieri_sum_rhs(const Partition& gamma, int s, bool e_kind);

/// Generalized Pieri coefficients: up gives the expansion of f*H~_nu, down the
/// expansion of f-perp H~_nu, both as Macdonald-basis coefficient maps.
std::map<Partition, RatQT, PartitionOrder> gen_pieri(const SymFunc& f, const Partition& nu,
                                                     bool up);

/// d- and c-coefficient relation: c^{f-perp}_{mu,nu} w_nu = d^{(omega f)*}_{mu,nu} w_mu
/// for all nu <= mu with the right degree drop.
bool gen_pieri_relation_check(const SymFunc& f, const Partition& mu);

/// Summation formula for perp coefficients against the nabla-inverse kernel:
/// sum of c^{g-perp}_{mu,nu} over m-d <= |nu| <= m equals
/// nabla^{-1}((omega g)[(X-eps)/M]) evaluated at X -> D_mu.
bool gen_pieri_sum_check(const Partition& mu, const SymFunc& g, int d, int m);

/// H~_mu[D_nu] = (-1)^(|mu|+|nu|) H~_nu[D_mu] T_mu/T_nu.
bool reciprocity_check(const Partition& mu, const Partition& nu);

/// Per-degree affine substitution p_k -> xcoef(k) p_k + scalar(k); the engine
/// behind alphabet shifts that need k-dependent signs.
SymFunc pleth_affine(const SymFunc& f, const std::function<RatQT(int)>& xcoef,
                     const std::function<RatQT(int)>& scalar);

namespace detail {
/// Warnings accumulated by the table disk cache (digest mismatches etc.);
/// retrieving clears them.
std::vector<std::string> take_htilde_cache_warnings();
/// Drops in-memory tables so the next access exercises the disk path.
void drop_htilde_memory_cache();
}  // namespace detail

}  // namespace qtcat

#endif
