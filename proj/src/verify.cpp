#include "trivzero/verify.hpp"

#include "trivzero/characters.hpp"
#include "trivzero/cyclotomic.hpp"
#include "trivzero/eisenstein.hpp"
#include "trivzero/lvalues.hpp"
#include "trivzero/reciprocity.hpp"

#include <atomic>
#include <functional>
#include <thread>

namespace trivzero {

namespace {

struct DeskPair {
    long N;
    long p;
    long ell;  // the prime divisor of N used for cup_ell
    const char* label;
};

const DeskPair kDesk[] = {{3, 7, 3, "3:[1]"}, {4, 5, 2, "4:[1]"}, {7, 11, 7, "7:[3]"}};

// run fn(0..n-1) on `threads` workers; callers store results by index
void parallel_cases(long n, long threads, const std::function<void(long)>& fn) {
    threads = std::min(std::max(threads, 1L), n);
    if (threads <= 1) {
        for (long i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<long> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    for (long t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (long i = next++; i < n; i = next++) fn(i);
        });
    for (auto& th : pool) th.join();
}

// ok[i] empty = pass, otherwise the failure note; first failure (in case
// order) goes into the detail
CheckResult gather(std::string name, const std::vector<std::string>& ok,
                   const std::string& scope) {
    for (size_t i = 0; i < ok.size(); ++i)
        if (!ok[i].empty())
            return {std::move(name), false,
                    "case " + std::to_string(i) + " failed: " + ok[i]};
    return {std::move(name), true, std::to_string(ok.size()) + " cases, " + scope};
}

CheckResult run_check(std::string name, const std::function<std::string()>& body) {
    try {
        std::string detail = body();
        return {std::move(name), true, std::move(detail)};
    } catch (const std::exception& e) {
        return {std::move(name), false, e.what()};
    }
}

std::string note(bool pass, const std::string& why) { return pass ? "" : why; }

SuiteResult suite_lemma41(long max_m, long threads) {
    SuiteResult s;
    s.suite = "lemma41";

    {
        std::vector<std::pair<long, long>> cases;
        for (long M = 2; M <= max_m; ++M)
            for (long j = 1; j < M; ++j) cases.emplace_back(M, j);
        std::vector<std::string> ok(cases.size());
        parallel_cases(static_cast<long>(cases.size()), threads, [&](long i) {
            auto [M, j] = cases[static_cast<size_t>(i)];
            try {
                ok[static_cast<size_t>(i)] =
                    note(geometric_identity_check(M, j),
                         "M=" + std::to_string(M) + " j=" + std::to_string(j));
            } catch (const std::exception& e) {
                ok[static_cast<size_t>(i)] = e.what();
            }
        });
        s.checks.push_back(gather("t/(t-1) + sum_{a mod M} (1/2 - a/M) t^a = 0", ok,
                                  "M <= " + std::to_string(max_m)));
    }

    {
        // zeta_{a p^r (N p^r)}(0) = zeta_{a (N)}(0) for every N p^r <= 200
        long n_cases = 0;
        std::string bad;
        for (long p = 2; p <= 100; ++p) {
            if (!is_prime_l(p)) continue;
            for (long pr = p, r = 1; pr <= 100; pr *= p, ++r) {
                for (long N = 1; N * pr <= 200; ++N) {
                    for (long a = 1; a <= N; ++a) {
                        ++n_cases;
                        if (partial_zeta_0(a * pr, N * pr) != partial_zeta_0(a, N) &&
                            bad.empty())
                            bad = "N=" + std::to_string(N) + " p^r=" + std::to_string(pr) +
                                  " a=" + std::to_string(a);
                    }
                }
            }
        }
        s.checks.push_back({"zeta_{a p^r (N p^r)}(0) = zeta_{a (N)}(0)", bad.empty(),
                            bad.empty() ? std::to_string(n_cases) + " cases, N p^r <= 200"
                                        : bad});
    }

    {
        std::string bad;
        long n_cases = 0;
        for (long p : {5L, 7L, 11L}) {
            long pr = 1;
            for (long r = 1; r <= 3; ++r) {
                pr *= p;
                ++n_cases;
                CycloElt sum;
                for (long j = 1; j < pr; ++j)
                    if (j % p != 0) sum = sum + root_of_unity(pr, j);
                CycloElt expect = r == 1 ? CycloElt(BigRat(-1)) : CycloElt();
                if (sum != expect && bad.empty())
                    bad = "p=" + std::to_string(p) + " r=" + std::to_string(r);
            }
        }
        s.checks.push_back({"sum of primitive p^r-th roots of unity = -1 (r=1) / 0 (r>1)",
                            bad.empty(),
                            bad.empty() ? std::to_string(n_cases) + " cases, p in {5,7,11}, r <= 3"
                                        : bad});
    }
    return s;
}

SuiteResult suite_reciprocity(long threads) {
    SuiteResult s;
    s.suite = "reciprocity";

    {
        std::vector<std::pair<const DeskPair*, long>> cases;
        for (const auto& d : kDesk)
            for (long r = 1; r <= 2; ++r) cases.emplace_back(&d, r);
        std::vector<std::string> ok(cases.size());
        parallel_cases(static_cast<long>(cases.size()), threads, [&](long i) {
            auto [d, r] = cases[static_cast<size_t>(i)];
            try {
                DirichletChar chi = DirichletChar::from_label(d->label);
                ok[static_cast<size_t>(i)] =
                    note(trace_sum_identity_check(chi, d->p, r),
                         std::string(d->label) + " r=" + std::to_string(r));
            } catch (const std::exception& e) {
                ok[static_cast<size_t>(i)] = e.what();
            }
        });
        s.checks.push_back(gather("trace sum = -phi(p^r) tau(chi^{-1}) L(0,chi)", ok,
                                  "desk set, r in {1,2}"));
    }

    s.checks.push_back(run_check(
        "chi-weighted partial traces of the coleman series rebuild the trace sum", [&] {
            for (const auto& d : kDesk)
                if (!chain_expansion_check(DirichletChar::from_label(d.label), d.p, 1))
                    throw Error(std::string("failed at ") + d.label + " r=1");
            if (!chain_expansion_check(DirichletChar::from_label("3:[1]"), 7, 2))
                throw Error("failed at 3:[1] r=2");
            return std::string("desk set at r=1, 3:[1] at r=2");
        }));

    s.checks.push_back(run_check(
        "branch-by-branch vanishing rebuilds the trace sum", [&] {
            auto rep = vanishing_branch_check(DirichletChar::from_label("3:[1]"), 7, 2);
            if (!rep.all())
                throw Error(std::string("orthogonality=") +
                            (rep.orthogonality_branch_vanishes ? "ok" : "bad") +
                            " root-sums=" + (rep.root_sum_branches_vanish ? "ok" : "bad") +
                            " total=" + (rep.total_reconstructs ? "ok" : "bad"));
            return std::string("N|a branch, v_p(a) < r branches, and the full rebuild, (3,7) r=2");
        }));

    s.checks.push_back(run_check(
        "embedded trace sum matches the closed p-adic form mod p^{r-1}", [&] {
            if (!embedding_consistency_check(DirichletChar::from_label("3:[1]"), 7, 3, 3))
                throw Error("mismatch at (3,7) r=3 ell=3");
            return std::string("(3,7) r=3, ell=3");
        }));

    {
        std::vector<std::string> ok(std::size(kDesk));
        parallel_cases(static_cast<long>(std::size(kDesk)), threads, [&](long i) {
            const auto& d = kDesk[static_cast<size_t>(i)];
            try {
                ok[static_cast<size_t>(i)] =
                    note(bdp_ratio_check(DirichletChar::from_label(d.label), d.p, 2, d.ell),
                         std::string("failed at ") + d.label);
            } catch (const std::exception& e) {
                ok[static_cast<size_t>(i)] = e.what();
            }
        });
        s.checks.push_back(gather("cup_p * log_p(ell) = cup_ell * L-invariant", ok,
                                  "desk set, r=2"));
    }

    s.checks.push_back(run_check(
        "cup values are integral and reduce compatibly from r=3 to r=1", [&] {
            for (const auto& d : kDesk) {
                DirichletChar chi = DirichletChar::from_label(d.label);
                for (int use_p = 0; use_p < 2; ++use_p) {
                    CupProductValue c1 = use_p ? cup_p(chi, d.p, 1) : cup_ell(d.ell, chi, d.p, 1);
                    CupProductValue c2 = use_p ? cup_p(chi, d.p, 2) : cup_ell(d.ell, chi, d.p, 2);
                    CupProductValue c3 = use_p ? cup_p(chi, d.p, 3) : cup_ell(d.ell, chi, d.p, 3);
                    if (c1.value.valuation() < 0 || c2.value.valuation() < 0 ||
                        c3.value.valuation() < 0)
                        throw Error(std::string("non-integral value at ") + d.label);
                    if (c3.value != c2.value || c2.value != c1.value)
                        throw Error(std::string("reduction mismatch at ") + d.label +
                                    " q=" + std::to_string(use_p ? d.p : d.ell));
                }
            }
            return std::string("desk set, q in {ell, p}, r = 3 -> 2 -> 1");
        }));
    return s;
}

SuiteResult suite_lp(long threads) {
    SuiteResult s;
    s.suite = "lp";
    const long k = 8;

    {
        std::vector<std::pair<const DeskPair*, long>> cases;
        for (const auto& d : kDesk)
            for (long kp = 1; kp <= 5; ++kp) cases.emplace_back(&d, kp);
        std::vector<std::string> ok(cases.size());
        parallel_cases(static_cast<long>(cases.size()), threads, [&](long i) {
            auto [d, kp] = cases[static_cast<size_t>(i)];
            try {
                DirichletChar chi = DirichletChar::from_label(d->label);
                DirichletChar theta = theta_from_chi(chi, d->p);
                DirichletChar tw =
                    (theta * teichmuller_char(d->p).power(-kp)).primitive_part();
                UnramifiedElt lhs =
                    kubota_leopoldt(PadicInt(d->p, k + 4, BigInt(1 - kp)), theta, d->p, k);
                CycloElt b = bernoulli_generalized(kp, tw) * BigRat(-1, kp);
                CycloElt euler =
                    CycloElt(BigRat(1)) -
                    tw.value(d->p) *
                        BigRat(pow_int(BigInt(d->p), static_cast<unsigned long>(kp - 1)));
                UnramifiedElt rhs =
                    embed_unramified(to_level(euler * b, lhs.ring()->m), d->p, k);
                ok[static_cast<size_t>(i)] =
                    note(lhs == rhs, std::string(d->label) + " k'=" + std::to_string(kp));
            } catch (const std::exception& e) {
                ok[static_cast<size_t>(i)] = e.what();
            }
        });
        s.checks.push_back(gather(
            "L_p(1-k', theta) = -(1 - theta omega^{-k'}(p) p^{k'-1}) B_{k'}(theta omega^{-k'}) / k'",
            ok, "desk set, k' = 1..5, precision 8"));
    }

    s.checks.push_back(run_check("L_p(0, chi omega) vanishes at the trivial zero", [&] {
        std::string vals;
        for (const auto& d : kDesk) {
            DirichletChar theta = theta_from_chi(DirichletChar::from_label(d.label), d.p);
            UnramifiedElt at0 = kubota_leopoldt(PadicInt(d.p, k + 4, BigInt(0)), theta, d.p, k);
            if (at0.valuation() < k - 2)
                throw Error(std::string("v_p = ") + std::to_string(at0.valuation()) +
                            " < " + std::to_string(k - 2) + " at " + d.label);
            vals += std::string(vals.empty() ? "" : ", ") + d.label + ": v >= " +
                    std::to_string(at0.valuation());
        }
        return vals;
    }));

    s.checks.push_back(run_check("1 <= v_p(L_p'(0, chi omega)) < k-2", [&] {
        std::string vals;
        for (const auto& d : kDesk) {
            UnramifiedElt der = lp_derivative_at_0(DirichletChar::from_label(d.label), d.p, k);
            long v = der.valuation();
            if (v < 1 || v >= k - 2)
                throw Error(std::string("v_p = ") + std::to_string(v) + " at " + d.label);
            vals += std::string(vals.empty() ? "" : ", ") + d.label + ": v = " +
                    std::to_string(v);
        }
        return vals;
    }));

    s.checks.push_back(run_check("L-invariant certified nonzero", [&] {
        for (const auto& d : kDesk) {
            auto li = l_invariant(DirichletChar::from_label(d.label), d.p, k);
            if (!li.nonvanishing_certified)
                throw Error(std::string("not certified at ") + d.label);
        }
        return std::string("desk set, precision ") + std::to_string(k);
    }));
    (void)threads;
    return s;
}

SuiteResult suite_eisenstein(long threads) {
    SuiteResult s;
    s.suite = "eisenstein";
    DirichletChar theta3 = theta_from_chi(DirichletChar::from_label("3:[1]"), 7);
    DirichletChar theta4 = theta_from_chi(DirichletChar::from_label("4:[1]"), 5);
    const long D3 = 7, D4 = 9, k = 6;

    for (long w = 2; w <= 4; ++w) {
        std::vector<std::string> ok(50);
        parallel_cases(50, threads, [&](long i) {
            long n = i + 1;
            try {
                UnramifiedElt lhs = specialize(eisenstein_coeff(n, theta3, 7, D3, k), w);
                UnramifiedElt rhs = classical_weight_coeff(n, theta3, 7, w, k);
                ok[static_cast<size_t>(i)] = note(lhs == rhs, "n=" + std::to_string(n));
            } catch (const std::exception& e) {
                ok[static_cast<size_t>(i)] = e.what();
            }
        });
        s.checks.push_back(
            gather("A_n(kappa^{w-2} - 1) = sum_{d|n, p∤d} theta omega^{2-w}(d) d^{w-1}, w=" +
                       std::to_string(w),
                   ok, "(3,7), n <= 50, precision 6"));
    }

    {
        std::vector<std::string> ok(20);
        parallel_cases(20, threads, [&](long i) {
            long n = i + 1;
            try {
                UnramifiedElt lhs = specialize(eisenstein_coeff(n, theta4, 5, D4, k), 3);
                UnramifiedElt rhs = classical_weight_coeff(n, theta4, 5, 3, k);
                ok[static_cast<size_t>(i)] = note(lhs == rhs, "n=" + std::to_string(n));
            } catch (const std::exception& e) {
                ok[static_cast<size_t>(i)] = e.what();
            }
        });
        s.checks.push_back(gather(
            "A_n(kappa^{w-2} - 1) = sum_{d|n, p∤d} theta omega^{2-w}(d) d^{w-1}, w=3", ok,
            "(4,5), n <= 20, precision 6"));
    }

    s.checks.push_back(run_check("xi vanishes at T = kappa - 1 with nonzero derivative", [&] {
        std::string vals;
        struct Case { const DirichletChar* th; long p; long D; const char* tag; };
        for (auto c : {Case{&theta3, 7, D3, "(3,7)"}, Case{&theta4, 5, D4, "(4,5)"}}) {
            auto tz = xi_trivial_zero(*c.th, c.p, c.D, k);
            if (!tz.value.is_zero() || tz.vanishing_precision < 4)
                throw Error(std::string("value not zero to 4 digits at ") + c.tag);
            if (!tz.derivative_nonzero)
                throw Error(std::string("derivative vanishes at ") + c.tag);
            vals += std::string(vals.empty() ? "" : "; ") + c.tag + ": zero to " +
                    std::to_string(tz.vanishing_precision) + " digits, v_p(xi') = " +
                    std::to_string(tz.derivative.valuation());
        }
        return vals;
    }));

    {
        std::vector<std::pair<long, long>> pairs;
        for (long m = 1; m <= 12; ++m)
            for (long n = m + 1; n <= 12; ++n)
                if (lgcd(m, n) == 1) pairs.emplace_back(m, n);
        std::vector<std::string> ok(pairs.size());
        parallel_cases(static_cast<long>(pairs.size()), threads, [&](long i) {
            auto [m, n] = pairs[static_cast<size_t>(i)];
            try {
                TruncatedSeries lhs = eisenstein_coeff(m, theta3, 7, D3, k) *
                                      eisenstein_coeff(n, theta3, 7, D3, k);
                ok[static_cast<size_t>(i)] =
                    note(lhs == eisenstein_coeff(m * n, theta3, 7, D3, k),
                         "m=" + std::to_string(m) + " n=" + std::to_string(n));
            } catch (const std::exception& e) {
                ok[static_cast<size_t>(i)] = e.what();
            }
        });
        s.checks.push_back(gather("A_m A_n = A_{mn} for coprime m, n", ok,
                                  "(3,7), m < n <= 12"));
    }

    s.checks.push_back(run_check(
        "G_theta interpolates: specialize(G, w) = L_p(1-w, theta omega^2)", [&] {
            TruncatedSeries G = g_theta_series(theta3, 7, D3, k);
            DirichletChar psi = theta3 * teichmuller_char(7).power(2);
            for (long w = 2; w <= 4; ++w) {
                UnramifiedElt direct = transport_up(
                    kubota_leopoldt(PadicInt(7, k + 6, BigInt(1 - w)), psi, 7, k),
                    G.ring()->m);
                if (specialize(G, w) != direct)
                    throw Error("node mismatch at w=" + std::to_string(w));
            }
            return std::string(
                "(3,7), w = 2..4; held-out node self-check runs inside every construction");
        }));

    s.checks.push_back(run_check("constant term: specialize(A_0, w) = L_p(1-w)/2", [&] {
        TruncatedSeries A0 = eisenstein_coeff(0, theta3, 7, D3, k);
        DirichletChar psi = theta3 * teichmuller_char(7).power(2);
        for (long w = 2; w <= 4; ++w) {
            UnramifiedElt direct = transport_up(
                kubota_leopoldt(PadicInt(7, k + 6, BigInt(1 - w)), psi, 7, k),
                A0.ring()->m);
            if (specialize(A0, w) != direct * PadicInt(7, k, BigInt(2)).inverse())
                throw Error("mismatch at w=" + std::to_string(w));
        }
        return std::string("(3,7), w = 2..4");
    }));
    return s;
}

void tally(SuiteResult& s) {
    for (const auto& c : s.checks) (c.pass ? s.passed : s.failed)++;
}

} // namespace

std::vector<SuiteResult> run_verify(const std::string& suite, long max_m, long threads) {
    if (max_m < 2) throw UsageError("--max-m must be >= 2");
    if (threads < 1) throw UsageError("--threads must be >= 1");
    std::vector<SuiteResult> out;
    if (suite == "lemma41" || suite == "all") out.push_back(suite_lemma41(max_m, threads));
    if (suite == "reciprocity" || suite == "all") out.push_back(suite_reciprocity(threads));
    if (suite == "lp" || suite == "all") out.push_back(suite_lp(threads));
    if (suite == "eisenstein" || suite == "all") out.push_back(suite_eisenstein(threads));
    if (out.empty())
        throw UsageError("unknown suite '" + suite +
                         "' (expected lemma41, reciprocity, lp, eisenstein, or all)");
    for (auto& s : out) tally(s);
    return out;
}

} // namespace trivzero
