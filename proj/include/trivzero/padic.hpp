#pragma once

// Z_p arithmetic with absolute-precision tracking. A PadicInt models an
// element of Z/p^k together with the claim "the true value is congruent to
// this representative mod p^k". Binary operations take the min of the two
// precisions; dividing out p^j costs j digits; multiplying by p^j gains them.

#include "trivzero/bigint.hpp"
#include "trivzero/errors.hpp"

#include <string>
#include <vector>

namespace trivzero {

class PadicInt {
public:
    PadicInt(long p, long prec, const BigInt& value);

    static PadicInt from_rational(const BigRat& q, long p, long prec);

    long prime() const { return p_; }
    long prec() const { return prec_; }
    const BigInt& rep() const { return v_; }        // canonical rep in [0, p^prec)
    const BigInt& modulus() const { return pk_; }   // p^prec

    bool is_zero() const { return v_ == 0; }        // zero *at this precision*
    bool is_unit() const { return v_ % p_ != 0; }

    // v_p, capped at prec for values that vanish at this precision
    long valuation() const;

    PadicInt operator-() const;
    PadicInt operator+(const PadicInt& o) const;
    PadicInt operator-(const PadicInt& o) const;
    PadicInt operator*(const PadicInt& o) const;

    PadicInt inverse() const;                 // UnitRequiredError if not a unit
    PadicInt div_exact_p(long j) const;       // divide by p^j; costs j digits
    PadicInt shift_up(long j) const;          // multiply by p^j; gains j digits
    PadicInt pow(unsigned long e) const;

    PadicInt with_prec(long k) const;         // reduce (or error on raise)

    bool operator==(const PadicInt& o) const; // compared at min precision
    bool operator!=(const PadicInt& o) const { return !(*this == o); }

    std::vector<long> digits() const;         // little-endian, length prec
    std::string str() const;

private:
    long p_;
    long prec_;
    BigInt pk_;
    BigInt v_;

    void check_same(const PadicInt& o) const;
};

// choice of topological generator data: kappa with kappa ≡ 1 (mod p),
// kappa ≢ 1 (mod p^2); the canonical pick is 1+p
class KappaChoice {
public:
    KappaChoice(long p, const BigInt& kappa);
    static KappaChoice canonical(long p) { return KappaChoice(p, BigInt(p) + 1); }

    long prime() const { return p_; }
    const BigInt& kappa_int() const { return kappa_; }
    PadicInt at(long prec) const { return PadicInt(p_, prec, kappa_); }

private:
    long p_;
    BigInt kappa_;
};

// omega(a): the unique (p-1)-th root of unity congruent to a mod p
PadicInt teichmuller(const BigInt& a, long p, long prec);
PadicInt teichmuller(const PadicInt& u);

// <u> = u / omega(u); congruent to 1 mod p
PadicInt angle_part(const PadicInt& u);
PadicInt angle_part(const BigInt& a, long p, long prec);

// Iwasawa logarithm. p-power part of u is discarded (log_p(p) := 0); the
// series runs on the angle part. Requested precision beyond what the input
// precision supports raises PrecisionError carrying the achievable precision.
PadicInt padic_log(const PadicInt& u, long prec);

// s(d) = log_p(d) / log_p(kappa), for gcd(d, p) = 1
PadicInt s_exponent(const BigInt& d, const KappaChoice& kappa, long prec);

// base^exponent for base ≡ 1 (mod p), exponent in Z_p, via the binomial series
PadicInt binomial_power(const PadicInt& base, const PadicInt& exponent, long prec);

} // namespace trivzero
