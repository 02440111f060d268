#pragma once

// The exceptional-zero cup-product values: Coleman-map evaluations, the exact
// Galois trace sum they reduce to, and the closed p-adic forms for the
// pairings against ell and against p, with the unit adjustment factor and the
// nontriviality threshold.

#include "trivzero/bigint.hpp"
#include "trivzero/characters.hpp"
#include "trivzero/cyclotomic.hpp"
#include "trivzero/errors.hpp"
#include "trivzero/lvalues.hpp"
#include "trivzero/padic.hpp"
#include "trivzero/unramified.hpp"

#include <string>

namespace trivzero {

// delta g evaluated at T = zeta_{p^r} - 1 for the Coleman power series
// g(T) = zeta_N^{G_N} (1+T)^e - 1, e the Teichmueller lift of g_p mod p^r:
//   delta g = e * t/(t-1),  t = zeta_N^{G_N} zeta_{p^r}^e.
// Computed both by symbolic differentiation (generic inversion) and by the
// closed form (power-sum identity); the two must agree exactly.
CycloElt coleman_delta(long G_N, long g_p, long N, long p, long r);

struct ColemanData {
    long G_N;   // exponent on zeta_N
    long g_p;   // unit mod p
    long r;
    CycloElt delta;
};

ColemanData coleman_eval(long G_N, long g_p, long N, long p, long r);

// S = sum_{G_N} chi(G_N^{-1}) sum_{G in (Z/p^r)^x} t/(t-1),
// t = zeta_N^{G_N} zeta_{p^r}^{G}, exact in Q(zeta_{N p^r}); equals
// phi(p^r) * tau(chi^{-1}) * L(0,chi), which trace_sum_identity_check tests.
CycloElt trace_sum_exact(const DirichletChar& chi, long p, long r);

bool trace_sum_identity_check(const DirichletChar& chi, long p, long r);

// chain expansion: for each unit g_p mod p, the chi-weighted partial traces
// of coleman_delta reproduce e(g_p) * trace_sum_exact
bool chain_expansion_check(const DirichletChar& chi, long p, long r);

// the case analysis of the trace sum over a in Z/Np^r: the N | a branch dies
// by orthogonality, the v_p(a) <= r-2 branches die as primitive-root sums,
// and what survives reassembles S
struct VanishingBranchReport {
    bool orthogonality_branch_vanishes;  // N | a
    bool root_sum_branches_vanish;       // v_p(a) <= r-2, N coprime part
    bool total_reconstructs;             // remaining branches sum to S
    bool all() const {
        return orthogonality_branch_vanishes && root_sum_branches_vanish &&
               total_reconstructs;
    }
};

VanishingBranchReport vanishing_branch_check(const DirichletChar& chi, long p, long r);

// theta(x)^{-1} for x = p_{r,N} p^r + N, p_{r,N} the inverse of p^r mod N;
// x is 1 mod N and N mod p, so this is theta evaluated "at N" on the p side
CycloElt adjustment_factor_exact(long N, long p, long r, const DirichletChar& theta);
UnramifiedElt adjustment_factor(long N, long p, long r, const DirichletChar& theta,
                                long k = 8);

struct CupProductValue {
    long q;                    // prime the pairing is taken against (ell or p)
    long N;
    long p;
    long r;
    std::string chi_label;
    UnramifiedElt value;       // adjusted normalization, reduced mod p^r
    UnramifiedElt value_plain; // variant without the adjustment unit, mod p^r
    UnramifiedElt value_full;  // adjusted value at the working precision
    UnramifiedElt adjustment;  // the unit theta(x)^{-1} that separates the two
    long valuation;            // v_p at working precision; -1 if all digits 0
    long threshold_r0;         // valuation + 1, or 0 when undetermined
    std::string embedding;     // ring tag fixing the convention
};

// (p-1) log_p(ell) / (p phi(N)) * theta(x)^{-1} tau(chi^{-1}) L(0,chi),
// integral because v_p(log_p(ell)) >= 1; k = 0 means working precision r+4
CupProductValue cup_ell(long ell, const DirichletChar& chi, long p, long r, long k = 0);

// (p-1) / (p phi(N)) * theta(x)^{-1} tau(chi^{-1}) * L'_p(0, chi omega),
// using L'_p = L-invariant times L(0,chi); integral since v_p(L'_p) >= 1
CupProductValue cup_p(const DirichletChar& chi, long p, long r, long k = 0);

// smallest r with nonzero image mod p^r; UndeterminedError when the value
// vanished at working precision
long nontriviality_threshold(const CupProductValue& v);

// embed(trace sum) * (p-1) log_p(ell) / (p^r phi(Np)) against the plain
// closed form, compared mod p^{r-1} (one digit is spent dividing by p^r)
bool embedding_consistency_check(const DirichletChar& chi, long p, long r, long ell);

// cup_p * log_p(ell) = cup_ell * L-invariant, compared mod p^r
bool bdp_ratio_check(const DirichletChar& chi, long p, long r, long ell);

} // namespace trivzero
