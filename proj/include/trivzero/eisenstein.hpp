#pragma once

// Truncated Iwasawa-algebra arithmetic and the ordinary Eisenstein family.
//
// A TruncatedSeries holds c_0..c_D in one unramified ring Z_p[zeta_m]/p^k and
// stands for a power series in T known modulo (T^{D+1}, p^k). Evaluation is
// restricted to |T|_p < 1, where the discarded tail of an integrally-bounded
// series contributes valuation >= (D+1)*v_p(T); evaluate() caps the reported
// precision accordingly, so results stay honest about both error sources.
//
// The series of interest interpolates p-adic L-values along the cyclotomic
// tower: G_theta(kappa^s - 1) = L_p(-s-1, theta*omega^2) with kappa = 1 + p.
// From it: xi_theta(T) = G_{theta^{-1}}((1+T)^{-1} - 1), whose zero at
// T = kappa - 1 is the trivial zero, and the Eisenstein coefficients
// A_n(T) = sum_{d|n, p∤d} theta(d) (1+T)^{s(d)} d with constant term
// 2^{-1} G_theta(T). Specializing T -> kappa^{w-2} - 1 recovers the classical
// weight-w coefficient sum_{d|n, p∤d} theta*omega^{2-w}(d) d^{w-1}.

#include "trivzero/characters.hpp"
#include "trivzero/errors.hpp"
#include "trivzero/padic.hpp"
#include "trivzero/unramified.hpp"

#include <vector>

namespace trivzero {

class TruncatedSeries {
public:
    // coefficients c_0..c_D, all in the same ring; kappa is the chosen
    // topological generator (an integer, canonically 1 + p)
    TruncatedSeries(std::vector<UnramifiedElt> coeffs, long kappa);

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    long prime() const { return c_.front().p(); }
    long kappa() const { return kappa_; }
    long prec() const;  // min over coefficient precisions
    const std::shared_ptr<const UnramifiedRing>& ring() const {
        return c_.front().ring();
    }
    const UnramifiedElt& coeff(long i) const;  // 0 <= i <= degree

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;  // truncated
    TruncatedSeries scale(const UnramifiedElt& s) const;

    // this(u(T)) for u with u(0) = 0, truncated at max(degrees)
    TruncatedSeries compose(const TruncatedSeries& u) const;

    // T -> t; requires v_p(t) >= 1 (or t = 0); precision is capped at
    // (D+1)*v_p(t) for the unseen tail
    UnramifiedElt evaluate(const PadicInt& t) const;

    TruncatedSeries derivative() const;

    // same p and level, coefficient-wise at min precision (shorter series
    // padded with zero)
    bool operator==(const TruncatedSeries& o) const;
    bool operator!=(const TruncatedSeries& o) const { return !(*this == o); }

private:
    std::vector<UnramifiedElt> c_;
    long kappa_;
};

// Newton interpolation of L_p(-s-1, theta*omega^2) through s = 0..D, carried
// out at working precision k + D(D+1)/2 and returned at precision k; verifies
// itself against a directly computed value at the held-out node s = D+1.
// theta must be even, primitive, of conductor exactly divisible by p once.
TruncatedSeries g_theta_series(const DirichletChar& theta, long p, long D, long k);

// G_{theta^{-1}}((1+T)^{-1} - 1)
TruncatedSeries xi_theta(const DirichletChar& theta, long p, long D, long k);

// A_n(T); n = 0 gives 2^{-1} G_theta(T)
TruncatedSeries eisenstein_coeff(long n, const DirichletChar& theta, long p,
                                 long D, long k);

// F(kappa^{w-2} - 1) for weight w >= 2; enforces w - 2 <= D and, for w > 2,
// the conservative tail bound (D+1)(p-2) >= k(p-1)
UnramifiedElt specialize(const TruncatedSeries& F, long w);

// independent target for the specialization identity:
// sum_{d|n, p∤d} theta*omega^{2-w}(d) d^{w-1}, in the same ring the series use
UnramifiedElt classical_weight_coeff(long n, const DirichletChar& theta, long p,
                                     long w, long k);

struct TrivialZeroReport {
    UnramifiedElt value;       // xi_theta at T = kappa - 1
    UnramifiedElt derivative;  // xi_theta' there
    long vanishing_precision;  // digits to which the value is zero
    bool derivative_nonzero;
};

TrivialZeroReport xi_trivial_zero(const DirichletChar& theta, long p, long D,
                                  long k);

} // namespace trivzero
