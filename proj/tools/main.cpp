// Command-line surface. Four subcommands:
//
//   scan       list exceptional characters (N, chi) for a prime p
//   cup        one cup-product value (q, 1 - zeta_{Np^r}) with diagnostics
//   verify     run a named exact-identity suite
//   eisenstein weight-w specialization of the ordinary Eisenstein family
//
// stdout carries a single JSON document with fixed key order; anything human
// (diagnostics, timing) goes to stderr. Exit codes: 0 ok, 1 a verification
// check failed, 2 bad usage, 3 a mathematical hypothesis fails or a pole was
// hit, 4 precision/degree budget cannot be met. The thread count never
// changes the bytes on stdout.

#include "trivzero/characters.hpp"
#include "trivzero/eisenstein.hpp"
#include "trivzero/report.hpp"
#include "trivzero/verify.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <cstdio>
#include <string>

namespace {

using trivzero::json;

trivzero::DirichletChar parse_chi(const std::string& label, long n) {
    std::string full = label.find(':') == std::string::npos
                           ? std::to_string(n) + ":" + label
                           : label;
    trivzero::DirichletChar chi = trivzero::DirichletChar::from_label(full);
    if (chi.modulus() != n)
        throw trivzero::UsageError("--chi modulus " + std::to_string(chi.modulus()) +
                                   " does not match --n " + std::to_string(n));
    return chi;
}

int cmd_scan(long p, long nmax) {
    if (!trivzero::is_prime_l(p) || p < 5)
        throw trivzero::UsageError("--p must be a prime >= 5");
    if (nmax < 1) throw trivzero::UsageError("--nmax must be >= 1");

    json params;
    params["p"] = p;
    params["nmax"] = nmax;
    json out = trivzero::make_envelope("scan", params);
    json hits = json::array();
    for (long N = 1; N <= nmax; ++N) {
        std::vector<std::pair<std::string, long>> rows;
        for (const auto& chi : trivzero::enumerate_characters(N))
            if (trivzero::is_exceptional(chi, p).exceptional)
                rows.emplace_back(chi.label(), chi.order());
        std::sort(rows.begin(), rows.end());
        for (const auto& [label, order] : rows) {
            json row;
            row["n"] = N;
            row["chi"] = label;
            row["order"] = order;
            hits.push_back(std::move(row));
        }
    }
    out["exceptional"] = std::move(hits);
    std::fputs((out.dump(2) + "\n").c_str(), stdout);
    return 0;
}

int cmd_cup(long n, long p, const std::string& chi_label, long q, long r,
            long precision) {
    trivzero::DirichletChar chi = parse_chi(chi_label, n);
    if (!trivzero::is_prime_l(q) || (n * p) % q != 0)
        throw trivzero::UsageError("--q must be a prime dividing N*p");

    long k = precision > 0 ? precision : r + 4;
    json params;
    params["n"] = n;
    params["p"] = p;
    params["chi"] = chi.label();
    params["q"] = q;
    params["r"] = r;
    params["precision"] = k;
    json out = trivzero::make_envelope("cup", params);

    trivzero::CupProductValue v = (q == p)
                                      ? trivzero::cup_p(chi, p, r, precision)
                                      : trivzero::cup_ell(q, chi, p, r, precision);
    out["embedding"] = v.embedding;
    out["cup"] = trivzero::encode_cup(v);
    if (q == p)
        out["l_invariant"] =
            trivzero::encode_l_invariant(trivzero::l_invariant(chi, p, k % 2 ? k + 1 : k));
    std::fputs((out.dump(2) + "\n").c_str(), stdout);
    return 0;
}

int cmd_verify(const std::string& suite, long max_m, long threads) {
    auto suites = trivzero::run_verify(suite, max_m, threads);

    json params;
    params["suite"] = suite;
    params["max_m"] = max_m;
    json out = trivzero::make_envelope("verify", params);
    json js = json::array();
    long passed = 0, failed = 0;
    for (const auto& s : suites) {
        json one;
        one["suite"] = s.suite;
        json checks = json::array();
        for (const auto& c : s.checks) {
            json jc;
            jc["name"] = c.name;
            jc["pass"] = c.pass;
            jc["detail"] = c.detail;
            checks.push_back(std::move(jc));
        }
        one["checks"] = std::move(checks);
        one["passed"] = s.passed;
        one["failed"] = s.failed;
        passed += s.passed;
        failed += s.failed;
        js.push_back(std::move(one));
    }
    out["suites"] = std::move(js);
    out["total_passed"] = passed;
    out["total_failed"] = failed;
    std::fputs((out.dump(2) + "\n").c_str(), stdout);
    return failed == 0 ? 0 : 1;
}

int cmd_eisenstein(long n, long p, const std::string& chi_label, long weight,
                   long terms, long degree, long precision) {
    trivzero::DirichletChar chi = parse_chi(chi_label, n);
    if (weight < 2) throw trivzero::UsageError("--weight must be >= 2");
    if (terms < 1) throw trivzero::UsageError("--terms must be >= 1");
    trivzero::DirichletChar theta = trivzero::theta_from_chi(chi, p);
    long k = precision > 0 ? precision : 6;
    // smallest degree passing the tail bound (D+1)(p-2) >= k(p-1), and at
    // least weight-2 so the evaluation point is admissible
    long D = degree > 0 ? degree
                        : std::max(weight - 2, (k * (p - 1) + p - 3) / (p - 2) - 1);

    json params;
    params["n"] = n;
    params["p"] = p;
    params["chi"] = chi.label();
    params["weight"] = weight;
    params["terms"] = terms;
    params["degree"] = D;
    params["precision"] = k;
    json out = trivzero::make_envelope("eisenstein", params);

    trivzero::UnramifiedElt c0 =
        trivzero::specialize(trivzero::eisenstein_coeff(0, theta, p, D, k), weight);
    out["embedding"] = trivzero::embedding_tag(*c0.ring());
    out["constant_term"] = trivzero::encode_unramified(c0);
    json coeffs = json::array();
    for (long m = 1; m <= terms; ++m)
        coeffs.push_back(trivzero::encode_unramified(
            trivzero::specialize(trivzero::eisenstein_coeff(m, theta, p, D, k), weight)));
    out["coefficients"] = std::move(coeffs);
    std::fputs((out.dump(2) + "\n").c_str(), stdout);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exceptional-zero cup products, p-adic L-values, and the "
                 "ordinary Eisenstein family at desk scale"};
    app.require_subcommand(1);
    app.fallthrough();  // let `--threads` appear after the subcommand too
    long threads = 1;
    app.add_option("--threads", threads, "worker threads for independent cases");

    auto* scan = app.add_subcommand("scan", "list exceptional characters");
    long scan_p = 0, scan_nmax = 0;
    scan->add_option("--p", scan_p, "prime p")->required();
    scan->add_option("--nmax", scan_nmax, "largest conductor N")->required();

    auto* cup = app.add_subcommand("cup", "compute one cup-product value");
    long cup_n = 0, cup_p_ = 0, cup_q = 0, cup_r = 1, cup_prec = 0;
    std::string cup_chi;
    cup->add_option("--n", cup_n, "conductor N of chi")->required();
    cup->add_option("--p", cup_p_, "prime p")->required();
    cup->add_option("--chi", cup_chi, "character label, e.g. 3:[1]")->required();
    cup->add_option("--q", cup_q, "prime q | Np to pair with")->required();
    cup->add_option("--r", cup_r, "layer r >= 1");
    cup->add_option("--precision", cup_prec, "working digits (default r+4)");

    auto* verify = app.add_subcommand("verify", "run an identity suite");
    std::string suite;
    long max_m = 30;
    verify->add_option("suite", suite, "lemma41 | reciprocity | lp | eisenstein | all")
        ->required();
    verify->add_option("--max-m", max_m, "bound for the geometric-identity sweep");

    auto* eis = app.add_subcommand("eisenstein", "specialize the Eisenstein family");
    long eis_n = 0, eis_p = 0, eis_w = 0, eis_terms = 20, eis_deg = 0, eis_prec = 0;
    std::string eis_chi;
    eis->add_option("--n", eis_n, "conductor N of chi")->required();
    eis->add_option("--p", eis_p, "prime p")->required();
    eis->add_option("--chi", eis_chi, "character label")->required();
    eis->add_option("--weight", eis_w, "specialization weight >= 2")->required();
    eis->add_option("--terms", eis_terms, "number of q-expansion coefficients");
    eis->add_option("--degree", eis_deg, "truncation degree in T");
    eis->add_option("--precision", eis_prec, "p-adic digits (default 6)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    auto t0 = std::chrono::steady_clock::now();
    int rc = 0;
    try {
        if (*scan) rc = cmd_scan(scan_p, scan_nmax);
        if (*cup) rc = cmd_cup(cup_n, cup_p_, cup_chi, cup_q, cup_r, cup_prec);
        if (*verify) rc = cmd_verify(suite, max_m, threads);
        if (*eis) rc = cmd_eisenstein(eis_n, eis_p, eis_chi, eis_w, eis_terms,
                                      eis_deg, eis_prec);
    } catch (const trivzero::UsageError& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 2;
    } catch (const trivzero::HypothesisError& e) {
        std::fprintf(stderr, "hypothesis violated: %s\n", e.what());
        return 3;
    } catch (const trivzero::PoleError& e) {
        std::fprintf(stderr, "pole: %s\n", e.what());
        return 3;
    } catch (const trivzero::UnitRequiredError& e) {
        std::fprintf(stderr, "non-unit: %s\n", e.what());
        return 3;
    } catch (const trivzero::PrecisionError& e) {
        std::fprintf(stderr, "precision: %s (achievable: %ld digits)\n", e.what(),
                     e.achievable);
        return 4;
    } catch (const trivzero::BudgetError& e) {
        std::fprintf(stderr, "budget: %s\n", e.what());
        return 4;
    } catch (const trivzero::UndeterminedError& e) {
        std::fprintf(stderr, "undetermined: %s\n", e.what());
        return 4;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::fprintf(stderr, "completed in %lld ms\n", static_cast<long long>(ms));
    return rc;
}
