#include "trivzero/reciprocity.hpp"

#include <algorithm>
#include <vector>

namespace trivzero {

namespace {

long checked_prime_power(long p, long r) {
    if (r < 1) throw UsageError("r must be >= 1");
    BigInt v = pow_int(BigInt(p), static_cast<unsigned long>(r));
    if (v > (BigInt(1) << 40))
        throw BudgetError("p^r too large for exact cyclotomic work");
    return v.convert_to<long>();
}

void require_exceptional(const DirichletChar& chi, long p) {
    auto rep = is_exceptional(chi, p);
    if (!rep.exceptional)
        throw HypothesisError("(chi, p) is not an exceptional pair: " + rep.reason);
}

CycloElt cyclo_pow(const CycloElt& x, long e) {
    if (e < 0) throw UsageError("negative cyclotomic power");
    CycloElt r{BigRat(1)};
    CycloElt base = x;
    while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

// working level for a cup value: everything exact is multiplied out in
// Q(zeta_L) and embedded once
long common_level(long N, const DirichletChar& theta) {
    return normalize_level(llcm(N, theta.order()));
}

} // namespace

CycloElt coleman_delta(long G_N, long g_p, long N, long p, long r) {
    if (N < 1) throw UsageError("N must be >= 1");
    if (!is_prime_l(p) || N % p == 0)
        throw UsageError("p must be a prime not dividing N");
    if (mod_reduce_l(g_p, p) == 0)
        throw UnitRequiredError("g_p must be a unit mod p");
    long pr = checked_prime_power(p, r);
    long M = N * pr;

    long e = teichmuller(BigInt(g_p), p, r).rep().convert_to<long>();
    long idx = mod_reduce_l(mod_reduce_l(G_N, N) * pr + e * N, M);
    if (idx == 0) throw PoleError("coleman delta has a pole at t = 1");

    // closed form: e * t/(t-1) through the power-sum identity
    CycloElt closed = unit_ratio(M, idx) * BigRat(e);

    // symbolic route: evaluate (1+T) g'(T) / g(T) at T = zeta_{p^r} - 1 with
    // generic field inversion
    CycloElt u = root_of_unity(pr, 1);
    CycloElt zN = root_of_unity(N, G_N);
    CycloElt g_val = zN * cyclo_pow(u, e) - CycloElt(BigRat(1));
    CycloElt g_deriv = zN * cyclo_pow(u, e - 1) * BigRat(e);
    CycloElt symbolic = u * g_deriv * g_val.inverse();

    if (closed != symbolic)
        throw Error("internal: the two coleman delta routes disagree");
    return closed;
}

ColemanData coleman_eval(long G_N, long g_p, long N, long p, long r) {
    return ColemanData{mod_reduce_l(G_N, N), mod_reduce_l(g_p, p), r,
                       coleman_delta(G_N, g_p, N, p, r)};
}

CycloElt trace_sum_exact(const DirichletChar& chi, long p, long r) {
    if (!is_prime_l(p)) throw UsageError("p must be prime");
    if (!chi.is_primitive())
        throw HypothesisError("trace sum requires a primitive character");
    if (!chi.is_odd())
        throw HypothesisError("trace sum requires an odd character");
    long N = chi.modulus();
    if (N % p == 0) throw UsageError("p must not divide the conductor");
    long pr = checked_prime_power(p, r);
    long M = N * pr;
    if (M > 500000)
        throw BudgetError("trace sum at level " + std::to_string(M) +
                          " exceeds the desk scale");

    long n = chi.order();
    // For each chi-weight class, accumulate the power-sum expansion of
    // t/(t-1) = 1 + (1/M) sum_j j t^j over all (G_N, G) with that weight;
    // raw 64-bit exponent bins, one polynomial reduction per class.
    std::vector<long long> counts(static_cast<size_t>(n), 0);
    std::vector<std::vector<long long>> bins(
        static_cast<size_t>(n), std::vector<long long>(static_cast<size_t>(M), 0));
    for (long GN = 1; GN < N; ++GN) {
        if (chi.vanishes_at(GN)) continue;
        auto w = static_cast<size_t>(chi.exponent(mod_inverse_l(GN, N)));
        auto& bin = bins[w];
        for (long G = 1; G < pr; ++G) {
            if (G % p == 0) continue;
            long idx = mod_reduce_l(GN * pr + G * N, M);
            ++counts[w];
            long cur = 0;
            for (long j = 1; j < M; ++j) {
                cur += idx;
                if (cur >= M) cur -= M;
                bin[static_cast<size_t>(cur)] += j;
            }
        }
    }

    CycloElt S;
    for (long w = 0; w < n; ++w) {
        std::vector<BigRat> coeffs(static_cast<size_t>(M));
        for (long i = 0; i < M; ++i)
            coeffs[static_cast<size_t>(i)] = BigRat(bins[static_cast<size_t>(w)]
                                                        [static_cast<size_t>(i)], M);
        CycloElt cls = CycloElt(BigRat(counts[static_cast<size_t>(w)])) +
                       CycloElt(M, std::move(coeffs));
        S = S + root_of_unity(n, w) * cls;
    }
    return S;
}

// S = -phi(p^r) tau(chi^{-1}) L(0,chi).  The sign comes from the partial-zeta
// expansion t/(t-1) = -sum_a (1/2 - a/M) t^a: after both character sums the
// only surviving branch is a = p^r b, whose inner sum over G gives +phi(p^r)
// and whose G_N-sum gives tau(chi^{-1}) chi(b); the leading minus survives
// since sum_b chi(b)(1/2 - b/N) = +L(0,chi).  (The a = p^{r-1}b' branch dies
// by orthogonality of chi over the submodulus, chi being primitive mod N.)
bool trace_sum_identity_check(const DirichletChar& chi, long p, long r) {
    CycloElt S = trace_sum_exact(chi, p, r);
    long pr = checked_prime_power(p, r);
    BigRat phi_pr(pr / p * (p - 1));
    CycloElt rhs = gauss_sum(chi.inverse()) * dirichlet_L_at_0(chi) * phi_pr;
    return S == rhs * BigRat(-1);
}

bool chain_expansion_check(const DirichletChar& chi, long p, long r) {
    long N = chi.modulus();
    CycloElt S = trace_sum_exact(chi, p, r);
    for (long gp = 1; gp < p; ++gp) {
        long e = teichmuller(BigInt(gp), p, r).rep().convert_to<long>();
        CycloElt lhs;
        for (long GN = 1; GN < N; ++GN) {
            if (chi.vanishes_at(GN)) continue;
            CycloElt weight = chi.value(mod_inverse_l(GN, N));
            lhs = lhs + weight * partial_trace_p(coleman_delta(GN, gp, N, p, r), N, p, r);
        }
        if (lhs != S * BigRat(e)) return false;
    }
    return true;
}

VanishingBranchReport vanishing_branch_check(const DirichletChar& chi, long p, long r) {
    long N = chi.modulus();
    long pr = checked_prime_power(p, r);
    long M = N * pr;
    CycloElt S = trace_sum_exact(chi, p, r);

    // X_N(c) = sum_{G_N} chi(G_N^{-1}) zeta_N^{G_N c}, one per residue c mod N
    std::vector<CycloElt> XN(static_cast<size_t>(N));
    for (long c = 0; c < N; ++c) {
        CycloElt acc;
        for (long GN = 1; GN < N; ++GN) {
            if (chi.vanishes_at(GN)) continue;
            acc = acc + chi.value(mod_inverse_l(GN, N)) * root_of_unity(N, GN * c);
        }
        XN[static_cast<size_t>(c)] = acc;
    }
    // X_p(d) = sum over units G mod p^r of zeta_{p^r}^{G d}, per residue d
    std::vector<CycloElt> Xp(static_cast<size_t>(pr));
    for (long d = 0; d < pr; ++d) {
        std::vector<BigRat> acc(static_cast<size_t>(pr));
        for (long G = 1; G < pr; ++G) {
            if (G % p == 0) continue;
            acc[static_cast<size_t>(mod_reduce_l(G * d, pr))] += 1;
        }
        Xp[static_cast<size_t>(d)] = CycloElt(pr, std::move(acc));
    }

    CycloElt branch_N;                                        // N | a
    std::vector<CycloElt> branch_v(static_cast<size_t>(r));   // v_p(a) = i, i <= r-2
    CycloElt branch_rest;                                     // v_p(a) >= r-1
    for (long a = 1; a <= M; ++a) {
        CycloElt term = XN[static_cast<size_t>(a % N)] * Xp[static_cast<size_t>(a % pr)] *
                        (-partial_zeta_0(a, M));
        if (a % N == 0) {
            branch_N = branch_N + term;
            continue;
        }
        long v = 0, t = a;
        while (t % p == 0) { t /= p; ++v; }
        if (v <= r - 2)
            branch_v[static_cast<size_t>(v)] = branch_v[static_cast<size_t>(v)] + term;
        else
            branch_rest = branch_rest + term;
    }

    VanishingBranchReport rep;
    rep.orthogonality_branch_vanishes = branch_N.is_zero();
    rep.root_sum_branches_vanish = true;
    CycloElt total = branch_N + branch_rest;
    for (long i = 0; i + 2 <= r; ++i) {
        if (!branch_v[static_cast<size_t>(i)].is_zero())
            rep.root_sum_branches_vanish = false;
        total = total + branch_v[static_cast<size_t>(i)];
    }
    rep.total_reconstructs = (total == S);
    return rep;
}

CycloElt adjustment_factor_exact(long N, long p, long r, const DirichletChar& theta) {
    if (N < 1 || !is_prime_l(p) || N % p == 0)
        throw UsageError("need gcd(N, p) = 1 with p prime");
    long pr = checked_prime_power(p, r);
    long prN = N == 1 ? 0 : mod_inverse_l(mod_reduce_l(pr, N), N);
    long x = prN * pr + N;
    long w = theta.exponent(x);
    return root_of_unity(theta.order(), -w);
}

UnramifiedElt adjustment_factor(long N, long p, long r, const DirichletChar& theta,
                                long k) {
    return embed_unramified(adjustment_factor_exact(N, p, r, theta), p, k);
}

namespace {

CupProductValue assemble_cup(long q, long N, long p, long r,
                             const DirichletChar& chi, const UnramifiedElt& master_adj,
                             const UnramifiedElt& master_plain,
                             const UnramifiedElt& adjustment) {
    long val = master_adj.is_zero() ? -1 : master_adj.valuation();
    auto Rr = unramified_ring(p, r, master_adj.ring()->m);
    UnramifiedElt at_r(Rr, master_adj.coeffs(), r);
    UnramifiedElt at_r_plain(Rr, master_plain.coeffs(), r);
    return CupProductValue{q,
                           N,
                           p,
                           r,
                           chi.label(),
                           at_r,
                           at_r_plain,
                           master_adj,
                           adjustment,
                           val,
                           val >= 0 ? val + 1 : 0,
                           embedding_tag(*Rr)};
}

} // namespace

CupProductValue cup_ell(long ell, const DirichletChar& chi, long p, long r, long k) {
    require_exceptional(chi, p);
    long N = chi.conductor();
    if (!is_prime_l(ell)) throw UsageError("ell must be prime");
    if (N % ell != 0) throw UsageError("ell must divide the conductor");
    checked_prime_power(p, r);
    if (k <= 0) k = r + 4;
    k = std::max(k, r + 2);

    DirichletChar theta = theta_from_chi(chi, p);
    long L = common_level(N, theta);
    CycloElt adj = adjustment_factor_exact(N, p, r, theta);
    CycloElt plain = gauss_sum(chi.inverse()) * dirichlet_L_at_0(chi);
    UnramifiedElt E_adj = embed_unramified(to_level(plain * adj, L), p, k);
    UnramifiedElt E_plain = embed_unramified(to_level(plain, L), p, k);

    // (p-1) log_p(ell) / (p phi(N)): the log carries at least one factor p,
    // so dividing by p keeps everything integral
    PadicInt scale = (padic_log(PadicInt(p, k, BigInt(ell)), k) * PadicInt(p, k, BigInt(p - 1)))
                         .div_exact_p(1) *
                     PadicInt(p, k, BigInt(euler_phi(N))).inverse();

    return assemble_cup(ell, N, p, r, chi, E_adj * scale, E_plain * scale,
                        embed_unramified(to_level(adj, L), p, k));
}

CupProductValue cup_p(const DirichletChar& chi, long p, long r, long k) {
    require_exceptional(chi, p);
    long N = chi.conductor();
    checked_prime_power(p, r);
    if (k <= 0) k = r + 4;
    k = std::max(k, r + 2);
    if (k % 2) ++k;  // the derivative wants an even digit budget

    DirichletChar theta = theta_from_chi(chi, p);
    long L = common_level(N, theta);
    LInvariantResult li = l_invariant(chi, p, k);
    UnramifiedElt deriv = transport_up(li.derivative, L);  // L'_p = L(chi) L(0,chi)

    CycloElt adj = adjustment_factor_exact(N, p, r, theta);
    CycloElt tau = gauss_sum(chi.inverse());
    UnramifiedElt E_adj = embed_unramified(to_level(tau * adj, L), p, deriv.prec());
    UnramifiedElt E_plain = embed_unramified(to_level(tau, L), p, deriv.prec());

    PadicInt pm1(p, deriv.prec(), BigInt(p - 1));
    PadicInt phiN_inv = PadicInt(p, deriv.prec(), BigInt(euler_phi(N))).inverse();
    UnramifiedElt master_adj = (E_adj * deriv * (pm1 * phiN_inv)).div_exact_p(1);
    UnramifiedElt master_plain = (E_plain * deriv * (pm1 * phiN_inv)).div_exact_p(1);

    return assemble_cup(p, N, p, r, chi, master_adj, master_plain,
                        embed_unramified(to_level(adj, L), p, deriv.prec()));
}

long nontriviality_threshold(const CupProductValue& v) {
    if (v.threshold_r0 == 0)
        throw UndeterminedError("cup value vanishes at working precision; "
                                "recompute with more digits");
    return v.threshold_r0;
}

bool embedding_consistency_check(const DirichletChar& chi, long p, long r, long ell) {
    require_exceptional(chi, p);
    if (r < 2) throw UsageError("consistency check needs r >= 2");
    long N = chi.conductor();
    if (N % ell != 0) throw UsageError("ell must divide the conductor");
    long k = r + 4;

    CycloElt S = trace_sum_exact(chi, p, r);
    UnramifiedElt ES = embed_unramified(S, p, k);
    PadicInt logl = padic_log(PadicInt(p, k, BigInt(ell)), k);
    // (p-1)/phi(Np) = 1/phi(N); v_p(embed(S) log) = r exactly
    PadicInt phiN_inv = PadicInt(p, k, BigInt(euler_phi(N))).inverse();
    UnramifiedElt lhs = (ES * (logl * phiN_inv)).div_exact_p(r);

    // embed(S) carries the trace-sum orientation S = -phi(p^r) tau L(0,chi),
    // so the closed form enters with a minus (see trace_sum_identity_check).
    long Lc = normalize_level(llcm(N, chi.order()));
    CycloElt plain = gauss_sum(chi.inverse()) * dirichlet_L_at_0(chi) * BigRat(-1);
    UnramifiedElt rhs = embed_unramified(to_level(plain, Lc), p, k) *
                        ((logl * PadicInt(p, k, BigInt(p - 1))).div_exact_p(1) * phiN_inv);

    long c = std::min<long>({r - 1, lhs.prec(), rhs.prec()});
    return lhs.with_prec(c) == rhs.with_prec(c);
}

bool bdp_ratio_check(const DirichletChar& chi, long p, long r, long ell) {
    CupProductValue cl = cup_ell(ell, chi, p, r);
    CupProductValue cp = cup_p(chi, p, r);
    long k = std::max<long>(r + 4, cp.value_full.prec());
    LInvariantResult li = l_invariant(chi, p, k % 2 ? k + 1 : k);
    UnramifiedElt lin = transport_up(li.l_invariant, cl.value_full.ring()->m);
    PadicInt logl = padic_log(PadicInt(p, k, BigInt(ell)), k);
    UnramifiedElt lhs = cp.value_full * logl;
    UnramifiedElt rhs = cl.value_full * lin;
    long c = std::min<long>({r, lhs.prec(), rhs.prec()});
    if (c < r)
        throw PrecisionError("ratio comparison fell short of p^r", c);
    return lhs.with_prec(c) == rhs.with_prec(c);
}

} // namespace trivzero
