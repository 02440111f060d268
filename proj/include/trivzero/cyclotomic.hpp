#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_M): elements are rational
// coefficient vectors on the power basis 1, z, ..., z^(phi(M)-1), kept
// reduced mod the M-th cyclotomic polynomial. Stored levels are canonical:
// 1, or M >= 3 with M % 4 != 2 (Q(zeta_2m) = Q(zeta_m) for odd m, so nothing
// is lost and lcm-lifts stay small).

#include "trivzero/bigint.hpp"
#include "trivzero/errors.hpp"
#include "trivzero/poly.hpp"

#include <memory>
#include <string>
#include <vector>

namespace trivzero {

std::vector<BigInt> cyclotomic_polynomial(long M);

struct CycloField {
    long level;
    long phi;
    std::vector<BigInt> Phi;    // monic, degree phi
    std::vector<BigRat> PhiQ;   // same thing with rational coefficients
};

// cached, thread-safe
std::shared_ptr<const CycloField> cyclo_field(long M);

// canonical level for constructions: strips the factor 2 of M ≡ 2 (mod 4)
long normalize_level(long M);

class CycloElt {
public:
    CycloElt() : CycloElt(BigRat(0)) {}
    explicit CycloElt(const BigRat& q);
    CycloElt(long level, std::vector<BigRat> power_coeffs);  // reduces mod Phi

    long level() const { return F_->level; }
    const std::vector<BigRat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    BigRat rational_value() const;  // UsageError if not rational

    CycloElt operator-() const;
    CycloElt operator+(const CycloElt& o) const;
    CycloElt operator-(const CycloElt& o) const;
    CycloElt operator*(const CycloElt& o) const;
    CycloElt operator*(const BigRat& q) const;
    CycloElt operator/(const CycloElt& o) const;

    CycloElt inverse() const;  // extended Euclid mod Phi; PoleError on zero

    bool operator==(const CycloElt& o) const;
    bool operator!=(const CycloElt& o) const { return !(*this == o); }

    std::string str() const;

private:
    std::shared_ptr<const CycloField> F_;
    std::vector<BigRat> c_;

    friend CycloElt to_level(const CycloElt& x, long target);
};

// zeta_M^j; the level of the result is canonical (so e.g. level 6 input
// comes back at level 3, and -1 at level 1)
CycloElt root_of_unity(long M, long j);

// zeta_M^e / (zeta_M^e - 1) via the exact power-sum form
//   t/(t-1) = 1 + (1/M) * sum_{j=1}^{M-1} j t^j      (valid for t != 1);
// PoleError when M | e
CycloElt unit_ratio(long M, long e);

// lift into a bigger field or rewrite in a subfield (HypothesisError if the
// value does not actually lie there)
CycloElt to_level(const CycloElt& x, long target);

struct GaloisElement {
    long level;
    long j;  // reduced mod level, coprime to it
    GaloisElement(long level_, long j_);
};

GaloisElement compose(const GaloisElement& a, const GaloisElement& b);

// sigma_j: zeta -> zeta^j; x is lifted to g.level first if needed
CycloElt galois_apply(const GaloisElement& g, const CycloElt& x);

// sum of sigma over the Galois group of Q(zeta_{N p^r}) / Q(zeta_N):
// fixes zeta_N, sends zeta_{p^r} through all unit powers
CycloElt partial_trace_p(const CycloElt& x, long N, long p, long r);

class DirichletChar;

// tau(chi) = sum chi(a) zeta_N^a over a mod N, chi primitive of conductor N
CycloElt gauss_sum(const DirichletChar& chi);

} // namespace trivzero
