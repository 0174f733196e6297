#ifndef QTCAT_SYMFUNC_HPP
#define QTCAT_SYMFUNC_HPP

#include <qtcat/partition.hpp>
#include <qtcat/ratfunc.hpp>
#include <qtcat/useries.hpp>

#include <map>
#include <string>
#include <vector>

namespace qtcat {

enum class Basis : char {
    Monomial = 'm',
    Elementary = 'e',
    Homogeneous = 'h',
    PowerSum = 'p',
    Schur = 's',
    MacdonaldH = 'H',
};

/// Symmetric function over Q(q,t): a basis tag plus a finite partition-indexed
/// coefficient map with no stored zeros.  Mixed homogeneous degrees are
/// allowed.  Values are immutable in spirit; the mutating helpers are for
/// construction.
class SymFunc {
public:
    using Coeffs = std::map<Partition, RatQT, PartitionOrder>;

    SymFunc() : basis_(Basis::Schur) {}
    explicit SymFunc(Basis b) : basis_(b) {}

    static SymFunc one(Basis b = Basis::Schur) { return constant(b, RatQT(1)); }
    static SymFunc constant(Basis b, const RatQT& c) {
        SymFunc f(b);
        f.add_term(Partition(), c);
        return f;
    }
    static SymFunc element(Basis b, const Partition& lam) {
        SymFunc f(b);
        f.add_term(lam, RatQT(1));
        return f;
    }

    Basis basis() const { return basis_; }
    const Coeffs& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int max_degree() const;
    RatQT coeff(const Partition& lam) const;
    SymFunc homogeneous_part(int d) const;
    /// Distinct homogeneous degrees present, ascending.
    std::vector<int> degrees() const;

    void add_term(const Partition& lam, const RatQT& c);
    SymFunc scaled(const RatQT& c) const;

    SymFunc operator-() const;
    friend SymFunc operator+(const SymFunc& a, const SymFunc& b);
    friend SymFunc operator-(const SymFunc& a, const SymFunc& b);
    /// Product; result carries the left operand's basis.
    friend SymFunc operator*(const SymFunc& a, const SymFunc& b);
    SymFunc& operator+=(const SymFunc& o) { return *this = *this + o; }
    SymFunc& operator-=(const SymFunc& o) { return *this = *this - o; }
    SymFunc& operator*=(const SymFunc& o) { return *this = *this * o; }

    /// Representational equality (same basis, same coefficients).
    friend bool operator==(const SymFunc& a, const SymFunc& b) {
        return a.basis_ == b.basis_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const SymFunc& a, const SymFunc& b) { return !(a == b); }

    /// "s[2] + q*s[1,1]"; terms in degree-descending, then lex-descending order.
    std::string str() const;

private:
    Basis basis_;
    Coeffs coeffs_;
};

/// e_k, h_k, p_k as single elements; k < 0 gives 0 and k = 0 gives 1.
SymFunc sf_e(int k);
SymFunc sf_h(int k);
SymFunc sf_p(int k);
SymFunc sf_s(const Partition& lam);

/// Change of basis among {m,e,h,p,s}; the Macdonald basis is handled by the
/// operator toolkit, not here.
SymFunc convert(const SymFunc& f, Basis target);

/// Equality as symmetric functions (compares in a common classical basis).
bool same_symfunc(const SymFunc& a, const SymFunc& b);

/// Hall scalar product: Schur functions orthonormal, <p_l,p_m> = z_l chi(l=m).
RatQT hall_inner(const SymFunc& f, const SymFunc& g);

/// Adjoint of multiplication by g: <g*a, b> = <a, perp(g, b)> for all a, b.
SymFunc perp(const SymFunc& g, const SymFunc& f);

/// Fundamental involution: e_k -> h_k, p_k -> (-1)^(k-1) p_k, s_l -> s_l'.
SymFunc omega_involution(const SymFunc& f);

/// Evaluation rule p_k -> xScale(q^k,t^k) * (-1)^(k*eps) * p_k + scalar(q^k,t^k).
struct VirtualAlphabet {
    RatQT x_scale;
    LaurentQT scalar;
    bool epsilon = false;
};

/// f at a purely scalar alphabet: p_k -> A(q^k, t^k).
RatQT pleth_eval(const SymFunc& f, const LaurentQT& alphabet);
RatQT pleth_eval(const SymFunc& f, const RatQT& alphabet);

/// f[cX] with optional epsilon twist: p_k -> c(q^k,t^k) * (-1)^(k*eps) * p_k.
SymFunc pleth_scale(const SymFunc& f, const RatQT& c, bool epsilon = false);

/// Alphabet shift f[xScale*X + scalar] per the VirtualAlphabet rule.
SymFunc pleth_shift(const SymFunc& f, const VirtualAlphabet& A);

/// Series of symmetric functions in the formal variable u.
using AlphaSeries = USeries<SymFunc>;

/// f[X + c/u] where p_k[c/u] = sign_k * c_k * u^{-k}; c_k is supplied per
/// degree (epsilon folds into the supplier).  Complete window [-deg f, 0].
AlphaSeries pleth_shift_u(const SymFunc& f, const std::vector<RatQT>& scalar_by_degree);

/// Truncated expansions of the Omega factors used by the creation operators
/// and their duals.
enum class OmegaKind { CreationB, CreationC, DualB, DualC };
AlphaSeries omega_series(OmegaKind kind, int degree_bound);

/// <f, s_{k+1,1^(d-k-1)}>, the hook Schur coefficient of the degree-d part.
RatQT hook_coefficient(const SymFunc& f, int k, int d);
/// Same value through the alternating h*e expansion of the hook Schur function.
RatQT hook_coefficient_via_he(const SymFunc& f, int k, int d);

/// Build the classical base-change tables for all degrees <= n up front
/// (they are otherwise created lazily under a lock).
void prebuild_basis_tables(int n);

}  // namespace qtcat

#endif
