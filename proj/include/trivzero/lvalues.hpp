#pragma once

// Classical L-values at s = 0 (exact, via partial zeta values and generalized
// Bernoulli numbers) and Kubota–Leopoldt p-adic L-functions at finite
// precision, including the derivative at the trivial zero and the resulting
// L-invariant.

#include "trivzero/bigint.hpp"
#include "trivzero/characters.hpp"
#include "trivzero/cyclotomic.hpp"
#include "trivzero/errors.hpp"
#include "trivzero/padic.hpp"
#include "trivzero/unramified.hpp"

#include <string>

namespace trivzero {

// value of the partial zeta function sum_{n = a mod M, n > 0} n^{-s} at s = 0
struct PartialZetaValue {
    long a;       // 1 <= a <= M
    long M;
    BigRat value; // 1/2 - a/M
};

PartialZetaValue partial_zeta_value(long a, long M);
BigRat partial_zeta_0(long a, long M);  // UsageError unless 1 <= a <= M

// exact check, in Q(zeta_M) with t = zeta_M^j != 1, of
//   t/(t-1) = - sum_{a=1}^{M} (1/2 - a/M) t^a.
// The left side is computed by generic field inversion so the two sides are
// independent routes. PoleError when M | j.
bool geometric_identity_check(long M, long j);

const BigRat& bernoulli_number(long n);          // B_0 = 1, B_1 = -1/2, ...
BigRat bernoulli_poly(long k, const BigRat& x);  // B_k(x)

// B_{k,chi} = M^{k-1} sum_{a=1}^{M} chi(a) B_k(a/M), exact at level ord(chi)
CycloElt bernoulli_generalized(long k, const DirichletChar& chi);

// L(0,chi) = sum_i chi(i)(1/2 - i/M) = -B_{1,chi}; both routes are computed
// and must agree. PoleError for trivial chi.
CycloElt dirichlet_L_at_0(const DirichletChar& chi);

// Kubota–Leopoldt L_p(s, psi) for even nontrivial psi with p not dividing
// ord(psi), evaluated by the convergent double sum over a in [1,F], p ∤ a,
// F = lcm(cond(psi), p), with <a>^{1-s} via the binomial series. The result
// lands in Z_p[zeta_ord(psi)] at precision min(k, prec(s)+1) (less when s-1
// is close to 0; PoleError when s = 1 at working precision). Odd psi raises
// HypothesisError, as does trivial psi.
UnramifiedElt kubota_leopoldt(const PadicInt& s, const DirichletChar& psi,
                              long p, long k);

// symmetric difference quotient (L_p(h,chi*omega) - L_p(-h,chi*omega))/(2h)
// at h = p^(k/2); requires is_exceptional(chi,p). Achieved precision is
// min(k, 2*(k/2)).
UnramifiedElt lp_derivative_at_0(const DirichletChar& chi, long p, long k);

struct LInvariantResult {
    std::string chi_label;
    long p;
    UnramifiedElt l_invariant;     // L'_p(0,chi*omega) / L(0,chi)
    UnramifiedElt derivative;      // L'_p(0,chi*omega)
    long achieved_precision;
    bool nonvanishing_certified;   // L(chi) != 0 visible at this precision
};

LInvariantResult l_invariant(const DirichletChar& chi, long p, long k);

} // namespace trivzero
