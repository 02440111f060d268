#include "trivzero/lvalues.hpp"

#include <algorithm>
#include <mutex>
#include <vector>

namespace trivzero {

namespace {

BigInt binomial_int(long n, long k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (long i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

// v_p(n!) by Legendre's formula
long factorial_valuation(long n, long p) {
    long v = 0;
    for (long q = p; q <= n; q *= p) {
        v += n / q;
        if (q > n / p) break;  // avoid overflow on the next q *= p
    }
    return v;
}

} // namespace

PartialZetaValue partial_zeta_value(long a, long M) {
    if (M < 1 || a < 1 || a > M)
        throw UsageError("partial zeta residue must satisfy 1 <= a <= M");
    return PartialZetaValue{a, M, BigRat(1, 2) - BigRat(a, M)};
}

BigRat partial_zeta_0(long a, long M) { return partial_zeta_value(a, M).value; }

bool geometric_identity_check(long M, long j) {
    if (M < 1) throw UsageError("geometric identity needs M >= 1");
    if (mod_reduce_l(j, M) == 0)
        throw PoleError("geometric identity has a pole at t = 1");
    CycloElt t = root_of_unity(M, j);
    // left side by generic field inversion, independent of the power-sum form
    CycloElt lhs = t * (t - CycloElt(BigRat(1))).inverse();
    std::vector<BigRat> coeffs(static_cast<size_t>(M), BigRat(0));
    for (long a = 1; a <= M; ++a)
        coeffs[static_cast<size_t>(mod_reduce_l(a * j, M))] += BigRat(a, M) - BigRat(1, 2);
    CycloElt rhs(M, std::move(coeffs));
    return lhs == rhs;
}

const BigRat& bernoulli_number(long n) {
    static std::vector<BigRat> table{BigRat(1), BigRat(-1, 2)};
    static std::mutex mtx;
    if (n < 0) throw UsageError("Bernoulli index must be >= 0");
    std::lock_guard<std::mutex> lock(mtx);
    while (static_cast<long>(table.size()) <= n) {
        long m = static_cast<long>(table.size());
        if (m % 2 == 1) {
            table.emplace_back(0);
            continue;
        }
        // B_m = -1/(m+1) * sum_{i<m} C(m+1, i) B_i
        BigRat acc(0);
        for (long i = 0; i < m; ++i)
            acc += BigRat(binomial_int(m + 1, i)) * table[static_cast<size_t>(i)];
        table.push_back(-acc / BigRat(m + 1));
    }
    return table[static_cast<size_t>(n)];
}

BigRat bernoulli_poly(long k, const BigRat& x) {
    if (k < 0) throw UsageError("Bernoulli degree must be >= 0");
    BigRat acc(0);
    // B_k(x) = sum_i C(k,i) B_i x^(k-i), accumulated by Horner in x
    for (long i = 0; i <= k; ++i)
        acc = acc * x + BigRat(binomial_int(k, i)) * bernoulli_number(i);
    return acc;
}

CycloElt bernoulli_generalized(long k, const DirichletChar& chi) {
    if (k < 1) throw UsageError("generalized Bernoulli number needs k >= 1");
    long M = chi.modulus();
    long n = chi.order();
    std::vector<BigRat> by_exponent(static_cast<size_t>(std::max<long>(n, 1)), BigRat(0));
    for (long a = 1; a <= M; ++a) {
        if (M > 1 && chi.vanishes_at(a)) continue;
        by_exponent[static_cast<size_t>(chi.exponent(a))] += bernoulli_poly(k, BigRat(a, M));
    }
    BigRat scale(pow_int(BigInt(M), static_cast<unsigned long>(k - 1)));
    return CycloElt(n, std::move(by_exponent)) * scale;
}

CycloElt dirichlet_L_at_0(const DirichletChar& chi) {
    if (chi.is_trivial())
        throw PoleError("L(s, trivial) has a pole at s = 1; no value at 0 here");
    long M = chi.modulus();
    long n = chi.order();
    std::vector<BigRat> by_exponent(static_cast<size_t>(n), BigRat(0));
    for (long a = 1; a < M; ++a) {
        if (chi.vanishes_at(a)) continue;
        by_exponent[static_cast<size_t>(chi.exponent(a))] += partial_zeta_0(a, M);
    }
    CycloElt via_partial_zetas(n, std::move(by_exponent));
    CycloElt via_bernoulli = -bernoulli_generalized(1, chi);
    if (via_partial_zetas != via_bernoulli)
        throw Error("internal: partial-zeta and Bernoulli routes to L(0,chi) disagree");
    return via_partial_zetas;
}

UnramifiedElt kubota_leopoldt(const PadicInt& s, const DirichletChar& psi, long p, long k) {
    if (s.prime() != p)
        throw UsageError("s lives at a different prime than the requested L_p");
    if (k < 1) throw UsageError("precision must be >= 1");
    if (psi.is_trivial())
        throw HypothesisError("p-adic L-function of the trivial character is excluded");
    if (psi.is_odd())
        throw HypothesisError("p-adic L-function of an odd character vanishes identically; "
                              "rejected to surface caller bugs");
    DirichletChar prim = psi.primitive_part();
    long n = prim.order();
    if (n % p == 0)
        throw HypothesisError("character order divisible by p: values would be ramified");
    long cond = prim.conductor();
    long F = llcm(cond, p);
    long vF = 0;
    long uF = F;
    while (uF % p == 0) { uF /= p; ++vF; }

    // s enters through <a>^(1-s); congruent s give results agreeing one digit
    // deeper, so the input precision caps what is determined.
    long vs1 = 0;
    {
        PadicInt s1 = s - PadicInt(p, s.prec(), BigInt(1));
        if (s1.is_zero())
            throw PoleError("L_p has its pole at s = 1");
        vs1 = s1.valuation();
    }
    long k_eff = std::min(k, s.prec() + 1 - 2 * vs1);
    if (k_eff < 1)
        throw PrecisionError("input precision of s cannot support the request",
                             std::max<long>(k_eff, 0));

    // working precision: cover the j! divisions, 1/F, and 1/(s-1)
    long K = k_eff + 2;
    while (K - factorial_valuation(K + 1, p) - vF - 2 * vs1 < k_eff) ++K;

    PadicInt one(p, K, BigInt(1));
    PadicInt e = PadicInt(p, K, BigInt(1) - s.rep());  // 1-s, rep taken exactly
    PadicInt s1 = -e;
    PadicInt s1_unit = s1.div_exact_p(vs1);

    // c_j = C(1-s, j) * B_j * F^j; the inner sum over j is then a polynomial
    // in 1/a evaluated by Horner. C(1-s,j) is a p-adic integer, so dividing
    // the running numerator product by j! is exact.
    std::vector<PadicInt> c;
    c.reserve(static_cast<size_t>(K + 1));
    c.push_back(one);
    PadicInt num = one;
    BigInt ufact = 1;
    long vfact = 0;
    BigInt F_pow = 1;
    for (long j = 1; j <= K; ++j) {
        num = num * (e - PadicInt(p, K, BigInt(j - 1)));
        long ju = j;
        while (ju % p == 0) { ju /= p; ++vfact; }
        ufact = mod_reduce(ufact * ju, num.modulus());
        F_pow *= F;
        const BigRat& B = bernoulli_number(j);
        if (B == 0) {
            c.push_back(PadicInt(p, K, BigInt(0)));
            continue;
        }
        PadicInt binom = num.div_exact_p(vfact) * PadicInt(p, K, mod_inverse(ufact, num.modulus()));
        c.push_back(binom * PadicInt::from_rational(B * BigRat(F_pow), p, K));
    }

    auto R = unramified_ring(p, K, n);
    UnramifiedElt w = embed_unramified(root_of_unity(n, 1), p, K);
    std::vector<UnramifiedElt> wpow;
    wpow.reserve(static_cast<size_t>(n));
    wpow.push_back(UnramifiedElt::from_scalar(R, one));
    for (long t = 1; t < n; ++t) wpow.push_back(wpow.back() * w);

    UnramifiedElt total = UnramifiedElt::from_scalar(R, PadicInt(p, K, BigInt(0)));
    for (long a = 1; a <= F; ++a) {
        if (a % p == 0 || prim.vanishes_at(a)) continue;
        PadicInt ainv = PadicInt(p, K, BigInt(a)).inverse();
        PadicInt inner = c.back();
        for (size_t j = c.size() - 1; j-- > 0;) inner = inner * ainv + c[j];
        PadicInt pw = binomial_power(angle_part(BigInt(a), p, K), e, K);
        total = total + wpow[static_cast<size_t>(prim.exponent(a))] * (pw * inner);
    }

    PadicInt scalars = PadicInt(p, K, mod_inverse(BigInt(uF), one.modulus())) * s1_unit.inverse();
    UnramifiedElt res = (total * scalars).div_exact_p(vF + vs1);
    if (res.prec() < k_eff)
        throw PrecisionError("working precision fell short of the target", res.prec());
    auto Rk = unramified_ring(p, k_eff, n);
    return UnramifiedElt(Rk, res.coeffs(), k_eff);
}

UnramifiedElt lp_derivative_at_0(const DirichletChar& chi, long p, long k) {
    auto rep = is_exceptional(chi, p);
    if (!rep.exceptional)
        throw HypothesisError("derivative at the trivial zero needs an exceptional pair: " +
                              rep.reason);
    if (k < 2) throw UsageError("derivative needs precision >= 2");
    long m = k / 2;
    long K = k + m;
    DirichletChar theta = theta_from_chi(chi, p);
    PadicInt h(p, K, pow_int(BigInt(p), static_cast<unsigned long>(m)));
    UnramifiedElt above = kubota_leopoldt(h, theta, p, K);
    UnramifiedElt below = kubota_leopoldt(-h, theta, p, K);
    UnramifiedElt diff = (above - below) * PadicInt::from_rational(BigRat(1, 2), p, K);
    UnramifiedElt res = diff.div_exact_p(m);
    // the h^2 truncation term caps certainty at 2m digits
    long fp = std::min<long>({res.prec(), 2 * m, k});
    auto Rf = unramified_ring(p, fp, theta.order());
    return UnramifiedElt(Rf, res.coeffs(), fp);
}

LInvariantResult l_invariant(const DirichletChar& chi, long p, long k) {
    UnramifiedElt deriv = lp_derivative_at_0(chi, p, k);
    CycloElt L0 = dirichlet_L_at_0(chi);
    if (L0.is_zero())
        throw HypothesisError("L(0,chi) vanishes; no L-invariant");
    UnramifiedElt L0e = embed_unramified(to_level(L0, deriv.ring()->m), p, deriv.prec());
    long v0 = L0e.is_unit() ? 0 : L0e.valuation();
    UnramifiedElt linv = deriv.div_exact_p(v0) * L0e.div_exact_p(v0).inverse();
    bool certified = !linv.is_zero();
    return LInvariantResult{chi.label(), p, linv, deriv, linv.prec(), certified};
}

} // namespace trivzero
