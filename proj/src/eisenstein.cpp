#include "trivzero/eisenstein.hpp"

#include "trivzero/lvalues.hpp"

#include <algorithm>

namespace trivzero {

namespace {

long factorial_valuation(long n, long p) {
    long v = 0;
    for (long q = p; q <= n; q *= p) v += n / q;
    return v;
}

// even, primitive, conductor divisible by p exactly once
void require_family_character(const DirichletChar& theta, long p) {
    if (!is_prime_l(p) || p < 5) throw UsageError("p must be a prime >= 5");
    if (theta.is_trivial()) throw HypothesisError("theta must be non-trivial");
    if (theta.is_odd()) throw HypothesisError("theta must be even");
    if (!theta.is_primitive()) throw HypothesisError("theta must be primitive");
    long c = theta.conductor();
    if (c % p != 0 || (c / p) % p == 0)
        throw HypothesisError("theta must have conductor divisible by p exactly once");
}

// all series attached to theta share one ring level: large enough for the
// values of theta and for the L-values of theta*omega^2
long series_level(const DirichletChar& theta, long p) {
    DirichletChar psi = theta * teichmuller_char(p).power(2);
    return normalize_level(llcm(theta.order(), psi.order()));
}

UnramifiedElt ring_zero(const std::shared_ptr<const UnramifiedRing>& R, long prec) {
    return UnramifiedElt::from_scalar(R, PadicInt(R->p, prec, BigInt(0)));
}

} // namespace

TruncatedSeries::TruncatedSeries(std::vector<UnramifiedElt> coeffs, long kappa)
    : c_(std::move(coeffs)), kappa_(kappa) {
    if (c_.empty()) throw UsageError("series needs at least the constant term");
    if (kappa_ < 2) throw UsageError("kappa must exceed 1");
    for (const auto& x : c_)
        if (x.ring() != c_.front().ring())
            throw UsageError("series coefficients must share one ring");
}

long TruncatedSeries::prec() const {
    long k = c_.front().prec();
    for (const auto& x : c_) k = std::min(k, x.prec());
    return k;
}

const UnramifiedElt& TruncatedSeries::coeff(long i) const {
    if (i < 0 || i > degree()) throw UsageError("coefficient index out of range");
    return c_[static_cast<size_t>(i)];
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    if (ring() != o.ring()) throw UsageError("series rings differ");
    size_t n = std::max(c_.size(), o.c_.size());
    std::vector<UnramifiedElt> r;
    r.reserve(n);
    UnramifiedElt z = ring_zero(ring(), ring()->k);
    for (size_t i = 0; i < n; ++i) {
        const UnramifiedElt& a = i < c_.size() ? c_[i] : z;
        const UnramifiedElt& b = i < o.c_.size() ? o.c_[i] : z;
        r.push_back(a + b);
    }
    return TruncatedSeries(std::move(r), kappa_);
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    if (ring() != o.ring()) throw UsageError("series rings differ");
    size_t n = std::max(c_.size(), o.c_.size());
    std::vector<UnramifiedElt> r(n, ring_zero(ring(), ring()->k));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size() && i + j < n; ++j)
            r[i + j] = r[i + j] + c_[i] * o.c_[j];
    return TruncatedSeries(std::move(r), kappa_);
}

TruncatedSeries TruncatedSeries::scale(const UnramifiedElt& s) const {
    std::vector<UnramifiedElt> r;
    r.reserve(c_.size());
    for (const auto& x : c_) r.push_back(x * s);
    return TruncatedSeries(std::move(r), kappa_);
}

TruncatedSeries TruncatedSeries::compose(const TruncatedSeries& u) const {
    if (ring() != u.ring()) throw UsageError("series rings differ");
    if (!u.c_.front().is_zero())
        throw UsageError("composition needs a series without constant term");
    TruncatedSeries res({c_.back()}, kappa_);
    for (long m = degree() - 1; m >= 0; --m)
        res = res * u + TruncatedSeries({c_[static_cast<size_t>(m)]}, kappa_);
    return res;
}

UnramifiedElt TruncatedSeries::evaluate(const PadicInt& t) const {
    if (t.prime() != prime()) throw UsageError("evaluation point at the wrong prime");
    if (t.is_zero()) return c_.front();
    long v = t.valuation();
    if (v < 1) throw UsageError("evaluation requires |t|_p < 1");
    UnramifiedElt acc = c_.back();
    for (long m = degree() - 1; m >= 0; --m)
        acc = acc * t + c_[static_cast<size_t>(m)];
    long cap = (degree() + 1) * v;  // tail of the represented series
    return cap < acc.prec() ? acc.with_prec(cap) : acc;
}

TruncatedSeries TruncatedSeries::derivative() const {
    std::vector<UnramifiedElt> r;
    if (degree() == 0) {
        r.push_back(ring_zero(ring(), c_.front().prec()));
    } else {
        r.reserve(c_.size() - 1);
        for (long m = 1; m <= degree(); ++m) {
            const UnramifiedElt& cm = c_[static_cast<size_t>(m)];
            r.push_back(cm * PadicInt(prime(), cm.prec(), BigInt(m)));
        }
    }
    return TruncatedSeries(std::move(r), kappa_);
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
    size_t n = std::max(c_.size(), o.c_.size());
    UnramifiedElt za = ring_zero(ring(), ring()->k);
    UnramifiedElt zb = ring_zero(o.ring(), o.ring()->k);
    for (size_t i = 0; i < n; ++i) {
        const UnramifiedElt& a = i < c_.size() ? c_[i] : za;
        const UnramifiedElt& b = i < o.c_.size() ? o.c_[i] : zb;
        if (a != b) return false;
    }
    return true;
}

TruncatedSeries g_theta_series(const DirichletChar& theta, long p, long D, long k) {
    require_family_character(theta, p);
    if (D < 0) throw UsageError("truncation degree must be >= 0");
    if (k < 1) throw UsageError("precision must be >= 1");
    long K = k + D * (D + 1) / 2;
    if (K > 64)
        throw BudgetError("interpolation needs working precision " +
                          std::to_string(K) + " digits; the budget is 64");

    DirichletChar psi = theta * teichmuller_char(p).power(2);
    long mT = series_level(theta, p);

    // node values L_p(-j-1, theta omega^2) at the working precision
    std::vector<BigInt> Tn(static_cast<size_t>(D) + 2);
    for (long j = 0; j <= D + 1; ++j)
        Tn[static_cast<size_t>(j)] = pow_int(BigInt(p + 1), static_cast<unsigned long>(j)) - 1;
    std::vector<UnramifiedElt> dd;
    dd.reserve(static_cast<size_t>(D) + 1);
    for (long j = 0; j <= D; ++j) {
        long sprec = K + 1 + 2 * valuation(BigInt(j + 2), BigInt(p));
        PadicInt s(p, sprec, BigInt(-(j + 1)));
        dd.push_back(transport_up(kubota_leopoldt(s, psi, p, K), mT));
    }

    // divided differences in place; T_j - T_{j-m} = kappa^{j-m}(kappa^m - 1)
    for (long m = 1; m <= D; ++m) {
        for (long j = D; j >= m; --j) {
            UnramifiedElt num = dd[static_cast<size_t>(j)] - dd[static_cast<size_t>(j - 1)];
            BigInt den = Tn[static_cast<size_t>(j)] - Tn[static_cast<size_t>(j - m)];
            long vd = valuation(den, BigInt(p));
            num = num.div_exact_p(vd);
            PadicInt du(p, num.prec(), den / pow_int(BigInt(p), static_cast<unsigned long>(vd)));
            dd[static_cast<size_t>(j)] = num * du.inverse();
        }
    }

    // expand the Newton basis into monomials (exact integer polynomials)
    auto RW = dd.front().ring();
    std::vector<UnramifiedElt> c(static_cast<size_t>(D) + 1, ring_zero(RW, K));
    std::vector<BigInt> nm{BigInt(1)};
    for (long m = 0; m <= D; ++m) {
        const UnramifiedElt& w = dd[static_cast<size_t>(m)];
        for (long i = 0; i <= m; ++i)
            c[static_cast<size_t>(i)] =
                c[static_cast<size_t>(i)] + w * PadicInt(p, w.prec(), nm[static_cast<size_t>(i)]);
        if (m < D) {
            nm.push_back(BigInt(0));
            for (size_t i = nm.size() - 1; i > 0; --i)
                nm[i] = nm[i - 1] - Tn[static_cast<size_t>(m)] * nm[i];
            nm[0] = -Tn[static_cast<size_t>(m)] * nm[0];
        }
    }

    auto Rk = unramified_ring(p, k, mT);
    std::vector<UnramifiedElt> out;
    out.reserve(c.size());
    for (const auto& x : c)
        out.emplace_back(Rk, x.coeffs(), std::min(k, x.prec()));
    TruncatedSeries S(std::move(out), p + 1);

    // self-check at the held-out node s = D+1: interpolation of an integral
    // series misses by at most prod_j (T_{D+1} - T_j), i.e. by
    // (D+1) + v_p((D+1)!) digits
    UnramifiedElt pred = S.evaluate(PadicInt(p, k + 2, Tn[static_cast<size_t>(D) + 1]));
    long sp = k + 1 + 2 * valuation(BigInt(D + 3), BigInt(p));
    UnramifiedElt direct =
        transport_up(kubota_leopoldt(PadicInt(p, sp, BigInt(-(D + 2))), psi, p, k), mT);
    long lim = std::min({pred.prec(), direct.prec(),
                         D + 1 + factorial_valuation(D + 1, p)});
    if (pred.with_prec(lim) != direct.with_prec(lim))
        throw Error("interpolation failed to reproduce the held-out node");
    return S;
}

TruncatedSeries xi_theta(const DirichletChar& theta, long p, long D, long k) {
    TruncatedSeries G = g_theta_series(theta.inverse(), p, D, k);
    // u(T) = (1+T)^{-1} - 1 = -T + T^2 - T^3 + ...
    std::vector<UnramifiedElt> u{ring_zero(G.ring(), k)};
    for (long m = 1; m <= D; ++m)
        u.push_back(UnramifiedElt::from_scalar(
            G.ring(), PadicInt(p, k, BigInt(m % 2 ? -1 : 1))));
    return G.compose(TruncatedSeries(std::move(u), p + 1));
}

TruncatedSeries eisenstein_coeff(long n, const DirichletChar& theta, long p,
                                 long D, long k) {
    require_family_character(theta, p);
    if (n < 0) throw UsageError("coefficient index must be >= 0");
    if (D < 0) throw UsageError("truncation degree must be >= 0");
    if (k < 1) throw UsageError("precision must be >= 1");
    if (n == 0) {
        TruncatedSeries G = g_theta_series(theta, p, D, k);
        return G.scale(UnramifiedElt::from_rational(G.ring(), BigRat(1, 2)));
    }

    long mT = series_level(theta, p);
    long W = k + factorial_valuation(D, p) + 1;
    auto RW = unramified_ring(p, W, mT);
    long nt = theta.order();
    UnramifiedElt zE = embed_unramified(to_level(root_of_unity(nt, 1), mT), p, W);
    std::vector<UnramifiedElt> wp{UnramifiedElt::from_scalar(RW, PadicInt(p, W, BigInt(1)))};
    for (long e = 1; e < nt; ++e) wp.push_back(wp.back() * zE);

    KappaChoice kap = KappaChoice::canonical(p);
    std::vector<UnramifiedElt> c(static_cast<size_t>(D) + 1, ring_zero(RW, W));
    for (long d : divisors_of(n)) {
        if (d % p == 0 || theta.vanishes_at(d)) continue;
        UnramifiedElt wd =
            wp[static_cast<size_t>(theta.exponent(d))] * PadicInt(p, W, BigInt(d));
        c[0] = c[0] + wd;
        if (D == 0) continue;
        // binomial row C(s(d), j), built by j <- j+1 steps; each quotient is
        // p-integral, so dividing out j is exact
        PadicInt s = s_exponent(BigInt(d), kap, W + 2);
        PadicInt b(p, s.prec(), BigInt(1));
        for (long j = 1; j <= D; ++j) {
            b = b * (s - PadicInt(p, s.prec(), BigInt(j - 1)));
            long vj = valuation(BigInt(j), BigInt(p));
            if (vj) b = b.div_exact_p(vj);
            long ju = j;
            while (ju % p == 0) ju /= p;
            if (ju > 1) b = b * PadicInt(p, b.prec(), BigInt(ju)).inverse();
            c[static_cast<size_t>(j)] = c[static_cast<size_t>(j)] + wd * b;
        }
    }

    auto Rk = unramified_ring(p, k, mT);
    std::vector<UnramifiedElt> out;
    out.reserve(c.size());
    for (const auto& x : c)
        out.emplace_back(Rk, x.coeffs(), std::min(k, x.prec()));
    return TruncatedSeries(std::move(out), p + 1);
}

UnramifiedElt specialize(const TruncatedSeries& F, long w) {
    if (w < 2) throw UsageError("weight must be >= 2");
    long D = F.degree();
    long p = F.prime();
    long k = F.prec();
    if (w - 2 > D)
        throw BudgetError("weight " + std::to_string(w) +
                          " needs truncation degree >= " + std::to_string(w - 2));
    // discarded tail: coefficient j contributes at least j - v_p(j!) >=
    // j(p-2)/(p-1) digits, so degree D suffices for k digits only when
    // (D+1)(p-2) >= k(p-1)
    if (w > 2 && (D + 1) * (p - 2) < k * (p - 1))
        throw BudgetError("truncation degree too small for " + std::to_string(k) +
                          " digits: need D >= " +
                          std::to_string((k * (p - 1) + p - 3) / (p - 2) - 1));
    BigInt T = pow_int(BigInt(F.kappa()), static_cast<unsigned long>(w - 2)) - 1;
    return F.evaluate(PadicInt(p, k + 2, T));
}

UnramifiedElt classical_weight_coeff(long n, const DirichletChar& theta, long p,
                                     long w, long k) {
    require_family_character(theta, p);
    if (n < 1) throw UsageError("coefficient index must be >= 1");
    if (w < 2) throw UsageError("weight must be >= 2");
    DirichletChar psiw = theta * teichmuller_char(p).power(mod_reduce_l(2 - w, p - 1));
    long mT = series_level(theta, p);
    if (mT % normalize_level(psiw.order()) != 0)
        throw Error("weight twist does not land in the series ring");
    auto Rk = unramified_ring(p, k, mT);
    UnramifiedElt zE = embed_unramified(to_level(root_of_unity(psiw.order(), 1), mT), p, k);
    std::vector<UnramifiedElt> wp{UnramifiedElt::from_scalar(Rk, PadicInt(p, k, BigInt(1)))};
    for (long e = 1; e < psiw.order(); ++e) wp.push_back(wp.back() * zE);
    UnramifiedElt acc = ring_zero(Rk, k);
    for (long d : divisors_of(n)) {
        if (d % p == 0 || psiw.vanishes_at(d)) continue;
        acc = acc + wp[static_cast<size_t>(psiw.exponent(d))] *
                        PadicInt(p, k, pow_int(BigInt(d), static_cast<unsigned long>(w - 1)));
    }
    return acc;
}

TrivialZeroReport xi_trivial_zero(const DirichletChar& theta, long p, long D, long k) {
    TruncatedSeries xi = xi_theta(theta, p, D, k);
    PadicInt t(p, k + 2, BigInt(xi.kappa()) - 1);
    UnramifiedElt value = xi.evaluate(t);
    UnramifiedElt deriv = xi.derivative().evaluate(t);
    long vanish = value.is_zero() ? value.prec() : value.valuation();
    return TrivialZeroReport{value, deriv, vanish, !deriv.is_zero()};
}

} // namespace trivzero
