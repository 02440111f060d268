// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
// argv[1] is the path to the command-line binary (used by criterion 8).

#include "trivzero/characters.hpp"
#include "trivzero/cyclotomic.hpp"
#include "trivzero/eisenstein.hpp"
#include "trivzero/errors.hpp"
#include "trivzero/lvalues.hpp"
#include "trivzero/padic.hpp"
#include "trivzero/reciprocity.hpp"
#include "trivzero/unramified.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

using namespace trivzero;
using Clock = std::chrono::steady_clock;

namespace {

int g_failed = 0;

void report(const char* tag, bool pass, double secs, double limit,
            const std::string& note = "") {
    bool in_time = limit <= 0 || secs <= limit;
    bool ok = pass && in_time;
    std::string line = std::string("[") + (ok ? "PASS" : "FAIL") + "] " + tag;
    char buf[48];
    std::snprintf(buf, sizeof buf, " (%.2fs", secs);
    line += buf;
    if (limit > 0) line += ", limit " + std::to_string(static_cast<long>(limit)) + "s";
    line += ")";
    if (pass && !in_time) line += " -- exceeded the time limit";
    if (!note.empty()) line += " -- " + note;
    std::puts(line.c_str());
    if (!ok) ++g_failed;
    std::fflush(stdout);
}

struct Timer {
    Clock::time_point t0 = Clock::now();
    double secs() const {
        return std::chrono::duration<double>(Clock::now() - t0).count();
    }
};

const struct DeskCase {
    long N, p, ell;
    const char* chi;
} kDesk[] = {{3, 7, 3, "3:[1]"}, {4, 5, 2, "4:[1]"}, {7, 11, 7, "7:[3]"}};

// ---------------------------------------------------------------- criterion 1
void criterion1() {
    Timer t;
    std::string note;
    bool ok = true;

    // geometric identity for every unit at every canonical level <= 30
    for (long M = 2; M <= 30 && ok; ++M) {
        if (normalize_level(M) != M) continue;
        for (long j = 1; j < M; ++j) {
            if (std::gcd(j, M) != 1) continue;
            if (!geometric_identity_check(M, j)) {
                ok = false;
                note = "geometric identity fails at M=" + std::to_string(M) +
                       ", j=" + std::to_string(j);
                break;
            }
        }
    }

    // partial zeta values are stable under scaling the level by p^r
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
        if (!ok) break;
        for (long pr = p; pr <= 200; pr *= p) {
            for (long N = 1; N * pr <= 200 && ok; ++N) {
                for (long a = 1; a <= N; ++a) {
                    if (partial_zeta_0(a * pr, N * pr) != partial_zeta_0(a, N)) {
                        ok = false;
                        note = "scaling fails at a=" + std::to_string(a) +
                               ", N=" + std::to_string(N) + ", pr=" + std::to_string(pr);
                        break;
                    }
                }
            }
        }
    }

    // sums over the unit roots of level p^r collapse to mu(p^r)
    for (long p : {5L, 7L, 11L}) {
        if (!ok) break;
        long pr = 1;
        for (long r = 1; r <= 3 && ok; ++r) {
            pr *= p;
            CycloElt s;
            for (long j = 1; j < pr; ++j)
                if (j % p != 0) s = s + root_of_unity(pr, j);
            if (s != CycloElt(BigRat(r == 1 ? -1 : 0))) {
                ok = false;
                note = "root sum wrong at p^r=" + std::to_string(pr);
            }
        }
    }
    report("C1 partial-zeta and root-of-unity identities (exact)", ok, t.secs(), 10, note);
}

// ---------------------------------------------------------------- criterion 2
void criterion2() {
    Timer t;
    bool ok = true;
    std::string note;
    for (const auto& d : kDesk) {
        DirichletChar chi = DirichletChar::from_label(d.chi);
        for (long r = 1; r <= 2; ++r) {
            if (!trace_sum_identity_check(chi, d.p, r)) {
                ok = false;
                note = "identity fails at (" + std::string(d.chi) + ", p=" +
                       std::to_string(d.p) + ", r=" + std::to_string(r) + ")";
            }
        }
    }
    report("C2 trace sum = -phi(p^r) tau(chi^-1) L(0,chi), desk cases, r=1,2 (exact)",
           ok, t.secs(), 60, note);
}

// ---------------------------------------------------------------- criterion 3
void criterion3() {
    Timer t;
    bool ok = true;
    std::string note;
    const long k = 8;
    for (const auto& d : kDesk) {
        if (d.N > 4) continue;  // the two residue-degree-one pairs
        DirichletChar chi = DirichletChar::from_label(d.chi);
        DirichletChar theta = theta_from_chi(chi, d.p);
        DirichletChar om = teichmuller_char(d.p);
        for (long kp = 1; kp <= 5 && ok; ++kp) {
            UnramifiedElt lhs =
                kubota_leopoldt(PadicInt(d.p, k + 4, BigInt(1 - kp)), theta, d.p, k);
            DirichletChar tw = (theta * om.power(-kp)).primitive_part();
            CycloElt euler = CycloElt(BigRat(1)) -
                             tw.value(d.p) * BigRat(pow_int(BigInt(d.p), kp - 1));
            CycloElt rhs = bernoulli_generalized(kp, tw) * BigRat(-1, kp) * euler;
            PadicInt want = embed_unramified(rhs, d.p, k).as_scalar().with_prec(k - 2);
            if (lhs.as_scalar().with_prec(k - 2) != want) {
                ok = false;
                note = "interpolation fails at p=" + std::to_string(d.p) +
                       ", k'=" + std::to_string(kp);
            }
        }
    }
    report("C3 interpolation vs generalized Bernoulli, k'=1..5, mod p^(k-2)", ok,
           t.secs(), 60, note);
}

// ---------------------------------------------------------------- criterion 4
void criterion4() {
    Timer t;
    bool ok = true;
    std::string note;
    const long k = 8;
    for (const auto& d : kDesk) {
        if (d.N > 4) continue;
        DirichletChar chi = DirichletChar::from_label(d.chi);
        DirichletChar theta = theta_from_chi(chi, d.p);
        long v0 =
            kubota_leopoldt(PadicInt(d.p, k + 4, BigInt(0)), theta, d.p, k).valuation();
        long v1 = lp_derivative_at_0(chi, d.p, k).valuation();
        if (v0 < k - 2) {
            ok = false;
            note = "value at 0 only has valuation " + std::to_string(v0);
        }
        if (v1 < 1 || v1 >= k - 2) {
            ok = false;
            note = "derivative valuation " + std::to_string(v1) + " out of [1, k-2)";
        }
    }
    report("C4 trivial zero: v(L_p(0)) >= k-2 and 1 <= v(L_p'(0)) < k-2", ok, t.secs(),
           0, note);
}

// ---------------------------------------------------------------- criterion 5
void criterion5() {
    Timer t;
    bool ok = true;
    std::string note;
    if (!embedding_consistency_check(DirichletChar::from_label("3:[1]"), 7, 3, 3)) {
        ok = false;
        note = "trace embedding disagrees with the closed form at (3,7,r=3)";
    }
    for (const auto& d : kDesk) {
        DirichletChar chi = DirichletChar::from_label(d.chi);
        if (!bdp_ratio_check(chi, d.p, 2, d.ell)) {
            ok = false;
            note = "cup ratio fails at (" + std::string(d.chi) + ", p=" +
                   std::to_string(d.p) + ")";
        }
    }
    report("C5 embedded trace vs closed form mod p^(r-1); cup_p log = cup_ell Linv", ok,
           t.secs(), 0, note);
}

// ---------------------------------------------------------------- criterion 6
void criterion6() {
    Timer t;
    bool ok = true;
    std::string note;
    for (const auto& d : kDesk) {
        DirichletChar chi = DirichletChar::from_label(d.chi);
        for (long q : {d.ell, d.p}) {
            std::vector<CupProductValue> v;
            for (long r = 1; r <= 3; ++r)
                v.push_back(q == d.p ? cup_p(chi, d.p, r) : cup_ell(q, chi, d.p, r));
            for (const auto& c : v)
                if (c.value_full.valuation() < 0) ok = false;  // cannot happen: integral
            if (!(v[2].value.with_prec(2) == v[1].value &&
                  v[1].value.with_prec(1) == v[0].value)) {
                ok = false;
                note = "reduction mismatch at (" + std::string(d.chi) + ", q=" +
                       std::to_string(q) + ")";
            }
        }
    }
    report("C6 cup values integral and compatible under p^3 -> p^2 -> p reduction", ok,
           t.secs(), 0, note);
}

// ---------------------------------------------------------------- criterion 7
void criterion7() {
    Timer t;
    bool ok = true;
    std::string note;
    const long p = 7, D = 7, k = 6;
    DirichletChar theta = theta_from_chi(DirichletChar::from_label("3:[1]"), p);
    DirichletChar fam =
        (theta * teichmuller_char(p).power(2)).primitive_part();
    PadicInt half = PadicInt::from_rational(BigRat(1, 2), p, k);

    for (long n = 0; n <= 50 && ok; ++n) {
        TruncatedSeries an = eisenstein_coeff(n, theta, p, D, k);
        for (long w : {2L, 3L, 4L}) {
            UnramifiedElt got = specialize(an, w);
            UnramifiedElt want =
                n == 0 ? transport_up(kubota_leopoldt(PadicInt(p, k + 4, BigInt(1 - w)),
                                                      fam, p, k),
                                      an.ring()->m) *
                             half
                       : classical_weight_coeff(n, theta, p, w, k);
            if (got != want) {
                ok = false;
                note = "weight " + std::to_string(w) + " specialization fails at n=" +
                       std::to_string(n);
                break;
            }
        }
    }

    TrivialZeroReport rep = xi_trivial_zero(theta, p, D, k);
    if (rep.vanishing_precision < 4) {
        ok = false;
        note = "xi only vanishes to " + std::to_string(rep.vanishing_precision) +
               " digits";
    }
    if (!rep.derivative_nonzero) {
        ok = false;
        note = "xi' vanishes at the trivial zero";
    }
    report("C7 family specializes to weights 2,3,4 for n<=50; xi zero of exact order 1",
           ok, t.secs(), 120, note);
}

// ---------------------------------------------------------------- criterion 8
std::string run_cli(const std::string& cli, const std::string& args, int& rc) {
    std::string cmd = "\"" + cli + "\" " + args + " 2>/dev/null";
    FILE* fp = popen(cmd.c_str(), "r");
    if (!fp) {
        rc = -1;
        return "";
    }
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, fp)) > 0) out.append(buf, n);
    rc = pclose(fp);
    return out;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void criterion8(const char* cli_path) {
    Timer t;
    bool ok = true;
    std::string note;
    if (!cli_path) {
        report("C8 command-line output is deterministic", false, t.secs(), 0,
               "no CLI path supplied");
        return;
    }
    std::string cli(cli_path);
    int rc0 = 0, rc1 = 0, rc2 = 0, rc3 = 0;
    std::string a = run_cli(cli, "verify all", rc0);
    std::string b = run_cli(cli, "verify all", rc1);
    std::string c = run_cli(cli, "verify all --threads 1", rc2);
    std::string d = run_cli(cli, "verify all --threads 8", rc3);
    if (rc0 || rc1 || rc2 || rc3) {
        ok = false;
        note = "verify all exited nonzero";
    } else if (a.empty() || a != b || a != c || a != d) {
        ok = false;
        note = "outputs differ between runs or thread counts";
    } else if (a.find("\"failed\": 0") == std::string::npos) {
        ok = false;
        note = "verify all reports failures";
    }

#ifdef TRIVZERO_FIXTURE_DIR
    if (ok) {
        struct Snap {
            const char* args;
            const char* file;
        } snaps[] = {
            {"cup --n 3 --p 7 --chi '3:[1]' --q 3 --r 2", "/cup_3_7_q3_r2.json"},
            {"eisenstein --n 3 --p 7 --chi '3:[1]' --weight 2 --terms 12",
             "/eis_3_7_w2.json"},
        };
        for (const auto& s : snaps) {
            int rc = 0;
            std::string got = run_cli(cli, s.args, rc);
            std::string want = slurp(std::string(TRIVZERO_FIXTURE_DIR) + s.file);
            if (rc != 0 || want.empty() || got != want) {
                ok = false;
                note = std::string("snapshot mismatch for `") + s.args + "`";
                break;
            }
        }
    }
#endif
    report("C8 command-line output byte-identical across runs and thread counts", ok,
           t.secs(), 0, note);
}

}  // namespace

int main(int argc, char** argv) {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8(argc > 1 ? argv[1] : nullptr);

    std::printf("%s: %d of 8 criteria failed\n", g_failed ? "FAIL" : "OK", g_failed);
    return g_failed ? 1 : 0;
}
