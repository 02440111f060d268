#pragma once

// Unramified extensions of Z_p at finite precision: Z_p[zeta_m]/p^k for
// gcd(m, p) = 1, realized as Z/p^k[x] modulo one monic degree-f factor h of
// Phi_m (f = order of p mod m). The factor is chosen canonically: among the
// irreducible factors of Phi_m mod p, take the one whose "root key"
// sum_{i<f} c_i p^i is smallest, where x^f - h = sum c_i x^i with canonical
// representatives in [0, p); for f = 1 the key is the root itself. That
// factor is then Hensel-lifted to precision k. Elements carry their own
// absolute precision (<= k) so arithmetic can report honest digit counts.

#include "trivzero/bigint.hpp"
#include "trivzero/cyclotomic.hpp"
#include "trivzero/errors.hpp"
#include "trivzero/padic.hpp"

#include <memory>
#include <string>
#include <vector>

namespace trivzero {

struct UnramifiedRing {
    long p;
    long k;
    long m;   // canonical prime-to-p level
    long f;   // residue degree = ord of p mod m
    BigInt pk;
    std::vector<BigInt> h;        // monic, degree f, coefficients in [0, p^k)
    std::vector<BigInt> h_mod_p;  // the canonical factor tag
};

// cached, thread-safe; m is brought to canonical level internally
std::shared_ptr<const UnramifiedRing> unramified_ring(long p, long k, long m);

class UnramifiedElt {
public:
    UnramifiedElt(std::shared_ptr<const UnramifiedRing> R, std::vector<BigInt> coeffs,
                  long prec);
    static UnramifiedElt from_scalar(const std::shared_ptr<const UnramifiedRing>& R,
                                     const PadicInt& x);
    static UnramifiedElt from_rational(const std::shared_ptr<const UnramifiedRing>& R,
                                       const BigRat& q);  // denominator prime to p

    const std::shared_ptr<const UnramifiedRing>& ring() const { return R_; }
    long p() const { return R_->p; }
    long f() const { return R_->f; }
    long prec() const { return prec_; }
    const std::vector<BigInt>& coeffs() const { return c_; }  // size f

    bool is_zero() const;       // mod p^prec
    bool is_unit() const;       // nonzero residue in F_{p^f}
    long valuation() const;     // min coefficient valuation, capped at prec

    UnramifiedElt operator-() const;
    UnramifiedElt operator+(const UnramifiedElt& o) const;
    UnramifiedElt operator-(const UnramifiedElt& o) const;
    UnramifiedElt operator*(const UnramifiedElt& o) const;
    UnramifiedElt operator*(const PadicInt& s) const;

    UnramifiedElt inverse() const;        // UnitRequiredError on non-units
    UnramifiedElt div_exact_p(long j) const;
    UnramifiedElt shift_up(long j) const;
    UnramifiedElt with_prec(long k2) const;

    // same p and m, compared mod p^min(prec, o.prec); rings may differ in k
    bool operator==(const UnramifiedElt& o) const;
    bool operator!=(const UnramifiedElt& o) const { return !(*this == o); }

    PadicInt as_scalar() const;  // UsageError if not in the prime subring
    std::string str() const;

private:
    std::shared_ptr<const UnramifiedRing> R_;
    long prec_;
    std::vector<BigInt> c_;

    void reduce();
};

// Ring homomorphism Q(zeta_M) -> Z_p[zeta_m]/p^k determined by the canonical
// factor choice, where m is the prime-to-p part of M (the input must lie in
// that subfield; coefficients must be p-integral).
UnramifiedElt embed_unramified(const CycloElt& x, long p, long k);

// The canonical-factor choices at different levels need not be compatible, so
// values from Z_p[zeta_m] are moved into Z_p[zeta_M] (m | M) by rewriting them
// on the image of zeta_m under the level-M embedding. This commutes with
// embed_unramified on exact inputs, which is the only sense of "the same
// element" the library uses.
UnramifiedElt transport_up(const UnramifiedElt& x, long target_m);

// short deterministic description of the ring for output tagging
std::string embedding_tag(const UnramifiedRing& R);

} // namespace trivzero
