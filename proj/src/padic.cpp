#include "trivzero/padic.hpp"

#include <sstream>

namespace trivzero {

static void check_prime_arg(long p) {
    if (p < 2 || !is_prime_l(p))
        throw UsageError("p must be a prime (got " + std::to_string(p) + ")");
}

PadicInt::PadicInt(long p, long prec, const BigInt& value) : p_(p), prec_(prec) {
    check_prime_arg(p);
    if (prec < 1) throw UsageError("precision must be >= 1");
    pk_ = pow_int(BigInt(p), static_cast<unsigned long>(prec));
    v_ = mod_reduce(value, pk_);
}

PadicInt PadicInt::from_rational(const BigRat& q, long p, long prec) {
    BigInt den = denominator(q);
    if (den % p == 0)
        throw UnitRequiredError("rational has p in the denominator");
    BigInt pk = pow_int(BigInt(p), static_cast<unsigned long>(prec));
    BigInt v = mod_mul(mod_reduce(numerator(q), pk), mod_inverse(den, pk), pk);
    return PadicInt(p, prec, v);
}

void PadicInt::check_same(const PadicInt& o) const {
    if (p_ != o.p_) throw UsageError("mixed primes in p-adic arithmetic");
}

long PadicInt::valuation() const {
    if (v_ == 0) return prec_;
    return trivzero::valuation(v_, BigInt(p_));
}

PadicInt PadicInt::operator-() const { return PadicInt(p_, prec_, pk_ - v_); }

PadicInt PadicInt::operator+(const PadicInt& o) const {
    check_same(o);
    long k = std::min(prec_, o.prec_);
    return PadicInt(p_, k, v_ + o.v_);
}

PadicInt PadicInt::operator-(const PadicInt& o) const {
    check_same(o);
    long k = std::min(prec_, o.prec_);
    return PadicInt(p_, k, v_ - o.v_);
}

PadicInt PadicInt::operator*(const PadicInt& o) const {
    check_same(o);
    long k = std::min(prec_, o.prec_);
    return PadicInt(p_, k, v_ * o.v_);
}

PadicInt PadicInt::inverse() const {
    if (!is_unit()) throw UnitRequiredError("inverse of a non-unit");
    return PadicInt(p_, prec_, mod_inverse(v_, pk_));
}

PadicInt PadicInt::div_exact_p(long j) const {
    if (j == 0) return *this;
    if (j < 0) return shift_up(-j);
    if (prec_ - j < 1)
        throw PrecisionError("division by p^" + std::to_string(j) +
                                 " exhausts the precision budget",
                             std::max<long>(prec_ - j, 0));
    BigInt pj = pow_int(BigInt(p_), static_cast<unsigned long>(j));
    if (v_ % pj != 0)
        throw UnitRequiredError("value not divisible by p^" + std::to_string(j));
    return PadicInt(p_, prec_ - j, v_ / pj);
}

PadicInt PadicInt::shift_up(long j) const {
    if (j == 0) return *this;
    if (j < 0) return div_exact_p(-j);
    BigInt pj = pow_int(BigInt(p_), static_cast<unsigned long>(j));
    return PadicInt(p_, prec_ + j, v_ * pj);
}

PadicInt PadicInt::pow(unsigned long e) const {
    return PadicInt(p_, prec_, mod_pow(v_, BigInt(e), pk_));
}

PadicInt PadicInt::with_prec(long k) const {
    if (k > prec_)
        throw PrecisionError("cannot raise precision of a finite-precision value", prec_);
    return PadicInt(p_, k, v_);
}

bool PadicInt::operator==(const PadicInt& o) const {
    if (p_ != o.p_) return false;
    long k = std::min(prec_, o.prec_);
    BigInt pk = pow_int(BigInt(p_), static_cast<unsigned long>(k));
    return mod_reduce(v_, pk) == mod_reduce(o.v_, pk);
}

std::vector<long> PadicInt::digits() const {
    std::vector<long> d;
    BigInt v = v_;
    for (long i = 0; i < prec_; ++i) {
        d.push_back(static_cast<long>((v % p_).convert_to<long>()));
        v /= p_;
    }
    return d;
}

std::string PadicInt::str() const {
    std::ostringstream os;
    os << v_ << " + O(" << p_ << "^" << prec_ << ")";
    return os.str();
}

KappaChoice::KappaChoice(long p, const BigInt& kappa) : p_(p), kappa_(kappa) {
    check_prime_arg(p);
    BigInt p2 = BigInt(p) * p;
    if (mod_reduce(kappa, BigInt(p)) != 1)
        throw HypothesisError("kappa must be congruent to 1 mod p");
    if (mod_reduce(kappa, p2) == 1)
        throw HypothesisError("kappa must not be congruent to 1 mod p^2");
}

PadicInt teichmuller(const BigInt& a, long p, long prec) {
    check_prime_arg(p);
    if (prec < 1) throw UsageError("precision must be >= 1");
    if (mod_reduce(a, BigInt(p)) == 0)
        throw UnitRequiredError("teichmuller lift needs a unit");
    BigInt pk = pow_int(BigInt(p), static_cast<unsigned long>(prec));
    BigInt x = mod_reduce(a, pk);
    // x -> x^p converges quadratically-in-digits to the root of unity
    for (long i = 0; i < prec; ++i) x = mod_pow(x, BigInt(p), pk);
    return PadicInt(p, prec, x);
}

PadicInt teichmuller(const PadicInt& u) {
    if (!u.is_unit()) throw UnitRequiredError("teichmuller lift needs a unit");
    return teichmuller(u.rep(), u.prime(), u.prec());
}

PadicInt angle_part(const PadicInt& u) {
    return u * teichmuller(u).inverse();
}

PadicInt angle_part(const BigInt& a, long p, long prec) {
    return angle_part(PadicInt(p, prec, a));
}

PadicInt padic_log(const PadicInt& u, long prec) {
    const long p = u.prime();
    if (u.is_zero())
        throw UnitRequiredError("log of a value that vanishes to working precision");
    // Iwasawa branch: discard the p-power part
    PadicInt unit_part = u;
    long v = u.valuation();
    if (v > 0) unit_part = u.div_exact_p(v);  // costs v digits, tracked honestly
    const long achievable = unit_part.prec();
    if (prec > achievable)
        throw PrecisionError("padic_log: input precision supports only " +
                                 std::to_string(achievable) + " digits",
                             achievable);

    const long K = prec;
    const BigInt pK = pow_int(BigInt(p), static_cast<unsigned long>(K));
    PadicInt one_angle = angle_part(unit_part);
    // w = (<u> - 1)/p, known mod p^(achievable-1); we only need it mod p^K
    BigInt w = mod_reduce((one_angle.rep() - 1) / p, pK);

    // terms p^(n - v_p(n)) * w^n / (n / p^v): each individually good mod p^K.
    // For n > K + log_p(K) + 1 the term valuation n - v_p(n) is >= K.
    BigInt acc = 0;
    BigInt wn = 1;
    long guard = 1;
    while (pow_int(BigInt(p), static_cast<unsigned long>(guard)) <= K) ++guard;
    const long n_max = K + guard;
    for (long n = 1; n <= n_max; ++n) {
        wn = mod_mul(wn, w, pK);
        long e = 0;
        long nn = n;
        while (nn % p == 0) { nn /= p; ++e; }
        if (n - e >= K) continue;  // term vanishes mod p^K
        BigInt term = mod_mul(wn, mod_inverse(BigInt(nn), pK), pK);
        term = mod_mul(term, pow_int(BigInt(p), static_cast<unsigned long>(n - e)), pK);
        if (n % 2 == 0) term = pK - term;
        acc = mod_reduce(acc + term, pK);
    }
    return PadicInt(p, K, acc);
}

PadicInt s_exponent(const BigInt& d, const KappaChoice& kappa, long prec) {
    const long p = kappa.prime();
    if (mod_reduce(d, BigInt(p)) == 0)
        throw UnitRequiredError("s_exponent needs gcd(d, p) = 1");
    PadicInt log_d = padic_log(PadicInt(p, prec + 1, d), prec + 1);
    PadicInt log_k = padic_log(kappa.at(prec + 1), prec + 1);
    // both logs are divisible by p; log kappa exactly once
    return log_d.div_exact_p(1) * log_k.div_exact_p(1).inverse();
}

PadicInt binomial_power(const PadicInt& base, const PadicInt& exponent, long prec) {
    const long p = base.prime();
    if (exponent.prime() != p) throw UsageError("mixed primes in binomial_power");
    if (mod_reduce(base.rep(), BigInt(p)) != 1)
        throw HypothesisError("binomial_power needs base ≡ 1 (mod p)");
    const long K0 = std::min(exponent.prec(), base.prec() - 1);
    const long achieved = K0 + 1;
    if (prec > achieved)
        throw PrecisionError("binomial_power: inputs support only " +
                                 std::to_string(achieved) + " digits",
                             achieved);

    const long K = prec;
    const BigInt pK = pow_int(BigInt(p), static_cast<unsigned long>(K));
    const BigInt w = mod_reduce((base.rep() - 1) / p, pK);

    // term_j = [e(e-1)...(e-j+1)] * (pw)^j / j!; v_p(term_j) >= j - v_p(j!).
    // v_p(j!) <= (j-1)/(p-1), so terms with j >= K(p-1)/(p-2) + 2 all vanish mod p^K.
    const long j_stop = (K * (p - 1)) / (p - 2) + 2;
    BigInt acc = 1;  // j = 0
    BigInt num = 1;  // running product e(e-1)...(e-j+1) mod p^K
    BigInt wj = 1;
    long fact_val = 0;         // v_p(j!)
    BigInt fact_unit = 1;      // j!/p^fact_val mod p^K
    for (long j = 1; j <= j_stop; ++j) {
        long jj = j;
        while (jj % p == 0) { jj /= p; ++fact_val; }
        fact_unit = mod_mul(fact_unit, BigInt(jj), pK);
        num = mod_mul(num, mod_reduce(exponent.rep() - (j - 1), pK), pK);
        wj = mod_mul(wj, w, pK);
        if (j - fact_val >= K) continue;
        BigInt term = mod_mul(mod_mul(num, wj, pK), mod_inverse(fact_unit, pK), pK);
        term = mod_mul(term, pow_int(BigInt(p), static_cast<unsigned long>(j - fact_val)), pK);
        acc = mod_reduce(acc + term, pK);
    }
    return PadicInt(p, K, acc);
}

} // namespace trivzero
