#ifndef QTCAT_CREATION_HPP
#define QTCAT_CREATION_HPP

#include <qtcat/macdonald.hpp>

namespace qtcat {

/// Creation operators: the coefficient of u^m in the alphabet-shifted input
/// times the matching Omega factor,
///   B_m P = P[X + eps(1-q)/u] Omega[-eps u X]            |_{u^m}
///   C_m P = (-q) P[X + eps(1-q)/u] Omega[eps u X / q]    |_{u^m}
SymFunc creation_b(int m, const SymFunc& f);
SymFunc creation_c(int m, const SymFunc& f);

/// Star-duals, extracting the coefficient of u^{-m}:
///   B*_m P = P[X + M/u]      Omega[-u X/(1-t)] |_{u^-m}
///   C*_m P = (-q) P[X - M/(qu)] Omega[-u X/(1-t)] |_{u^-m}
SymFunc dual_creation_b(int m, const SymFunc& f);
SymFunc dual_creation_c(int m, const SymFunc& f);

/// C_alpha = C_{a1} C_{a2} ... C_{al}(1), applied right to left.  Memoized.
SymFunc c_alpha(const Composition& alpha);

/// B_m(C_alpha) = q^len(alpha) * sum over beta |= m of C_{alpha.beta}, m >= 1.
bool bc_relation_check(const Composition& alpha, int m);

/// e_r[X/M], h_r[X/M].
SymFunc e_star(int r);
SymFunc h_star(int r);

/// Delta_{h_d} nabla f, with the convention that a negative d annihilates.
SymFunc delta_h_nabla(int d, const SymFunc& f);

/// Delta_{h_d} nabla(e_r* h_n*) by direct operator application.
SymFunc kernel_expression(int d, int r, int n);

/// The same kernel through the partition-sum expansion
///   sum_{a>=0} sum_{|gamma| <= n+a} (-1)^{r+a} e_{n+r}[X D_gamma / M]
///     h_{d-a}[1/M] h_{n+a-|gamma|}[-1/M] (T_gamma/w_gamma) e_a[B_gamma],
/// used as the independent oracle for the direct route.
SymFunc kernel_expression_sum(int d, int r, int n);

bool kernel_two_route_check(int d, int r, int n);

/// (T_nu/w_nu) h_d[B_mu] H~_mu[D_nu] expanded through reciprocity and the
/// generalized Pieri coefficients:
///   sum_{a>=0} (-1)^a h_{d-a}[1/M] sum_{gamma >= nu, |gamma|=|nu|+a}
///     H~_mu[D_gamma] (T_gamma/w_gamma) c^{e_a perp}_{gamma,nu}.
bool hook_expansion_check(const Partition& mu, const Partition& nu, int d);

/// C*_m e_c[X D_gamma / M] = sum_{b} q^{1-b} (-1)^{m+1}
///   e_{c-b}[X D_gamma/M] h_b[D_gamma] e_{b-m}[X/(1-t)].
bool dual_c_kernel_check(const Partition& gamma, int c, int m);

/// B*_m on the kernel: the closed summation with e_b[D_tau] factors.
bool dual_b_kernel_check(int m, int d, int r, int n);

/// The symmetric-function recurrence that mirrors the path rotation:
///   C*_{k+1} D_{h_d} nabla(e_r* h_m*) =
///     t^k B*_k     D_{h_d}     nabla(e_r* h_{m-1}*)
///   + t^k B*_{k+1} D_{h_{d-1}} nabla(e_r* h_m*)
///   + chi(k=0)    D_{h_d}     nabla(e_{r-1}* h_m*).
bool main_recurrence_check(int k, int d, int r, int m);

}  // namespace qtcat

#endif
