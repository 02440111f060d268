#include "trivzero/unramified.hpp"

#include "trivzero/poly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

namespace trivzero {

namespace {

// ---- F_p[y] helpers on top of poly.hpp ----

std::vector<BigInt> poly_gcd_fp(std::vector<BigInt> a, std::vector<BigInt> b,
                                const BigInt& p) {
    a = poly_mod(std::move(a), p);
    b = poly_mod(std::move(b), p);
    while (poly_deg(b) >= 0) {
        auto [q, r] = poly_divmod_fp(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::vector<BigInt> poly_powmod_fp(const std::vector<BigInt>& base, BigInt e,
                                   const std::vector<BigInt>& mod_poly, const BigInt& p) {
    std::vector<BigInt> result{1};
    std::vector<BigInt> b = poly_divmod_fp(base, mod_poly, p).second;
    while (e > 0) {
        if ((e & 1) != 0)
            result = poly_divmod_fp(poly_mod(poly_mul(result, b), p), mod_poly, p).second;
        b = poly_divmod_fp(poly_mod(poly_mul(b, b), p), mod_poly, p).second;
        e >>= 1;
    }
    return result;
}

// A(B) mod (mod_poly, p)
std::vector<BigInt> poly_compose_fp(const std::vector<BigInt>& A, const std::vector<BigInt>& B,
                                    const std::vector<BigInt>& mod_poly, const BigInt& p) {
    std::vector<BigInt> r;
    for (size_t i = A.size(); i-- > 0;) {
        r = poly_divmod_fp(poly_mod(poly_mul(r, B), p), mod_poly, p).second;
        if (A[i] != 0) {
            if (r.empty()) r.push_back(0);
            r[0] = mod_reduce(r[0] + A[i], p);
        }
        poly_trim(r);
    }
    return r;
}

bool is_irreducible_fp(const std::vector<BigInt>& g, long f, const BigInt& p) {
    const std::vector<BigInt> x{0, 1};
    std::vector<BigInt> frob = poly_powmod_fp(x, p, g, p);  // x^p
    std::vector<BigInt> xq = frob;                          // x^{p^j}
    std::vector<long> prime_divs;
    for (auto& [q, e] : factorize(f)) prime_divs.push_back(q);
    for (long j = 1; j < f; ++j) {
        // at j = f/q for prime q | f, require gcd(x^{p^j} - x, g) = 1
        if (std::find(prime_divs.begin(), prime_divs.end(), f / j) != prime_divs.end() &&
            f % j == 0) {
            auto d = poly_gcd_fp(poly_sub(xq, x), g, p);
            if (poly_deg(d) != 0) return false;
        }
        xq = poly_compose_fp(xq, frob, g, p);
    }
    return xq == x;  // x^{p^f} = x
}

// element of F_{p^f} encoded as base-p digits of n
std::vector<BigInt> decode_fp_elt(BigInt n, long f, const BigInt& p) {
    std::vector<BigInt> c;
    while (n > 0 && static_cast<long>(c.size()) < f) {
        c.push_back(n % p);
        n /= p;
    }
    poly_trim(c);
    return c;
}

// canonical minimal factor of Phi_m mod p (monic, degree f)
std::vector<BigInt> canonical_factor_mod_p(long m, long p, long f) {
    const BigInt P(p);
    auto Phi = poly_mod(cyclotomic_polynomial(m), P);
    if (f == 1) {
        for (long a = 0; a < p; ++a) {
            if (poly_eval(Phi, BigInt(a)) % P == 0)
                return {mod_reduce(BigInt(-a), P), BigInt(1)};
        }
        throw std::logic_error("no root of Phi_m mod p although f = 1");
    }
    // build F_{p^f} = F_p[y]/(g) from the first irreducible g in code order
    std::vector<BigInt> g;
    {
        BigInt code = 0;
        for (;; ++code) {
            g = decode_fp_elt(code, f, P);
            g.resize(f + 1, BigInt(0));
            g[f] = 1;
            if (is_irreducible_fp(g, f, P)) break;
            if (code > pow_int(P, f))
                throw std::logic_error("irreducible polynomial search exhausted");
        }
    }
    // primitive element gamma, then beta = gamma^{(p^f-1)/m} of exact order m
    BigInt Q = pow_int(P, f) - 1;
    if (Q > (BigInt(1) << 40)) throw BudgetError("residue field too large");
    const long Ql = Q.convert_to<long>();
    std::vector<long> qdivs;
    for (auto& [q, e] : factorize(Ql)) qdivs.push_back(q);
    std::vector<BigInt> gamma;
    for (BigInt code = 2;; ++code) {
        gamma = decode_fp_elt(code, f, P);
        bool primitive = true;
        for (long q : qdivs) {
            auto t = poly_powmod_fp(gamma, Q / q, g, P);
            if (t == std::vector<BigInt>{1}) { primitive = false; break; }
        }
        if (primitive) break;
        if (code > Q) throw std::logic_error("no primitive element found");
    }
    auto beta = poly_powmod_fp(gamma, Q / m, g, P);

    // Frobenius orbits of the primitive m-th roots beta^t, t in (Z/m)^x
    std::vector<char> seen(m, 0);
    std::vector<BigInt> best;
    BigInt best_key(-1);
    for (long t0 = 1; t0 < m; ++t0) {
        if (seen[t0] || lgcd(t0, m) != 1) continue;
        std::vector<long> orbit;
        long t = t0;
        do {
            seen[t] = 1;
            orbit.push_back(t);
            t = static_cast<long>((BigInt(t) * p % m).convert_to<long>());
        } while (t != t0);
        if (static_cast<long>(orbit.size()) != f)
            throw std::logic_error("Frobenius orbit size != f");
        // min-poly: product of (X - beta^t) over the orbit, in F_{p^f}[X]
        std::vector<std::vector<BigInt>> poly{{BigInt(1)}};
        for (long s : orbit) {
            auto root = poly_powmod_fp(beta, BigInt(s), g, P);
            std::vector<std::vector<BigInt>> next(poly.size() + 1);
            for (size_t i = 0; i < poly.size(); ++i) {
                // X * coeff
                next[i + 1] = poly_add(next[i + 1], poly[i]);
                // (-root) * coeff
                auto t2 = poly_divmod_fp(poly_mod(poly_mul(poly[i], root), P), g, P).second;
                next[i] = poly_mod(poly_sub(next[i], t2), P);
            }
            for (auto& c : next) c = poly_mod(std::move(c), P);
            poly = std::move(next);
        }
        std::vector<BigInt> h(f + 1, BigInt(0));
        for (size_t i = 0; i < poly.size(); ++i) {
            if (poly_deg(poly[i]) > 0)
                throw std::logic_error("min-poly coefficient not in F_p");
            h[i] = poly[i].empty() ? BigInt(0) : poly[i][0];
        }
        if (h[f] != 1) throw std::logic_error("min-poly not monic");
        BigInt key = 0;
        for (long i = f - 1; i >= 0; --i) key = key * P + mod_reduce(-h[i], P);
        if (best_key < 0 || key < best_key) {
            best_key = key;
            best = std::move(h);
        }
    }
    return best;
}

// lift h (a factor of Phi mod p) to a factor of Phi mod p^k
std::vector<BigInt> hensel_lift_factor(const std::vector<BigInt>& Phi,
                                       std::vector<BigInt> h, long p, long k) {
    const BigInt P(p);
    auto [g, rem] = poly_divmod_fp(poly_mod(Phi, P), h, P);
    if (!rem.empty()) throw std::logic_error("candidate does not divide Phi mod p");
    std::vector<BigInt> gg, s, t;
    poly_ext_gcd_fp(h, g, P, gg, s, t);
    if (poly_deg(gg) != 0) throw std::logic_error("factor not coprime to cofactor");
    // poly_ext_gcd_fp returns monic gcd, i.e. s*h + t*g = 1 mod p
    BigInt pj(1);
    for (long j = 1; j < k; ++j) {
        pj *= P;
        const BigInt pj1 = pj * P;
        auto diff = poly_sub(Phi, poly_mul(h, g));
        std::vector<BigInt> e(diff.size());
        for (size_t i = 0; i < diff.size(); ++i) {
            BigInt q = mod_reduce(diff[i], pj1);
            if (q % pj != 0) throw std::logic_error("Hensel invariant broken");
            e[i] = mod_reduce(q / pj, P);
        }
        poly_trim(e);
        auto a = poly_divmod_fp(poly_mod(poly_mul(e, t), P), h, P).second;
        auto [b, r2] = poly_divmod_fp(poly_mod(poly_sub(e, poly_mul(a, g)), P), h, P);
        if (!r2.empty()) throw std::logic_error("Hensel correction not divisible");
        auto bump = [&](std::vector<BigInt>& target, const std::vector<BigInt>& delta) {
            if (target.size() < delta.size()) target.resize(delta.size(), BigInt(0));
            for (size_t i = 0; i < delta.size(); ++i)
                target[i] = mod_reduce(target[i] + pj * delta[i], pj1);
            for (auto& c : target) c = mod_reduce(c, pj1);
        };
        bump(h, a);
        bump(g, b);
    }
    return h;
}

std::mutex g_ring_mutex;
std::map<std::tuple<long, long, long>, std::shared_ptr<const UnramifiedRing>> g_ring_cache;

} // namespace

std::shared_ptr<const UnramifiedRing> unramified_ring(long p, long k, long m) {
    if (!is_prime_l(p)) throw UsageError("unramified ring: p must be prime");
    if (k < 1) throw UsageError("unramified ring: precision must be >= 1");
    m = normalize_level(m);
    if (lgcd(m, p) != 1) throw UsageError("unramified ring: level must be prime to p");
    const auto cache_key = std::make_tuple(p, k, m);
    {
        std::lock_guard<std::mutex> lk(g_ring_mutex);
        auto it = g_ring_cache.find(cache_key);
        if (it != g_ring_cache.end()) return it->second;
    }
    auto R = std::make_shared<UnramifiedRing>();
    R->p = p;
    R->k = k;
    R->m = m;
    R->f = (m == 1) ? 1 : mult_order(p, m);
    R->pk = pow_int(BigInt(p), k);
    R->h_mod_p = canonical_factor_mod_p(m, p, R->f);
    R->h = hensel_lift_factor(cyclotomic_polynomial(m), R->h_mod_p, p, k);
    std::lock_guard<std::mutex> lk(g_ring_mutex);
    auto [it, inserted] = g_ring_cache.emplace(cache_key, std::move(R));
    return it->second;
}

void UnramifiedElt::reduce() {
    const BigInt pe = pow_int(BigInt(R_->p), prec_);
    poly_rem_monic_inplace(c_, R_->h);
    c_.resize(R_->f, BigInt(0));
    for (auto& x : c_) x = mod_reduce(x, pe);
}

UnramifiedElt::UnramifiedElt(std::shared_ptr<const UnramifiedRing> R,
                             std::vector<BigInt> coeffs, long prec)
    : R_(std::move(R)), prec_(prec), c_(std::move(coeffs)) {
    if (prec_ < 1 || prec_ > R_->k)
        throw UsageError("unramified element: precision out of range for its ring");
    reduce();
}

UnramifiedElt UnramifiedElt::from_scalar(const std::shared_ptr<const UnramifiedRing>& R,
                                         const PadicInt& x) {
    if (x.prime() != R->p) throw UsageError("prime mismatch");
    return UnramifiedElt(R, {x.rep()}, std::min(x.prec(), R->k));
}

UnramifiedElt UnramifiedElt::from_rational(const std::shared_ptr<const UnramifiedRing>& R,
                                           const BigRat& q) {
    return from_scalar(R, PadicInt::from_rational(q, R->p, R->k));
}

bool UnramifiedElt::is_zero() const {
    for (auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool UnramifiedElt::is_unit() const {
    for (auto& x : c_)
        if (x % R_->p != 0) return true;
    return false;
}

long UnramifiedElt::valuation() const {
    long v = prec_;
    for (auto& x : c_)
        if (x != 0) v = std::min(v, trivzero::valuation(x, BigInt(R_->p)));
    return v;
}

UnramifiedElt UnramifiedElt::operator-() const {
    UnramifiedElt r = *this;
    const BigInt pe = pow_int(BigInt(R_->p), prec_);
    for (auto& x : r.c_) x = mod_reduce(-x, pe);
    return r;
}

namespace {
void check_compatible(const UnramifiedRing& a, const UnramifiedRing& b) {
    if (a.p != b.p || a.m != b.m)
        throw UsageError("unramified arithmetic requires matching p and level");
}
} // namespace

UnramifiedElt UnramifiedElt::operator+(const UnramifiedElt& o) const {
    check_compatible(*R_, *o.R_);
    UnramifiedElt r = *this;
    r.prec_ = std::min(prec_, o.prec_);
    r.c_ = poly_add(c_, o.c_);
    r.reduce();
    return r;
}

UnramifiedElt UnramifiedElt::operator-(const UnramifiedElt& o) const {
    check_compatible(*R_, *o.R_);
    UnramifiedElt r = *this;
    r.prec_ = std::min(prec_, o.prec_);
    r.c_ = poly_sub(c_, o.c_);
    r.reduce();
    return r;
}

UnramifiedElt UnramifiedElt::operator*(const UnramifiedElt& o) const {
    check_compatible(*R_, *o.R_);
    UnramifiedElt r = *this;
    r.prec_ = std::min(prec_, o.prec_);
    r.c_ = poly_mul(c_, o.c_);
    r.reduce();
    return r;
}

UnramifiedElt UnramifiedElt::operator*(const PadicInt& s) const {
    if (s.prime() != R_->p) throw UsageError("prime mismatch");
    UnramifiedElt r = *this;
    r.prec_ = std::min(prec_, s.prec());
    for (auto& x : r.c_) x *= s.rep();
    r.reduce();
    return r;
}

UnramifiedElt UnramifiedElt::inverse() const {
    if (!is_unit()) throw UnitRequiredError("inverse of a non-unit unramified element");
    const BigInt P(R_->p);
    // inverse mod (h, p) by extended Euclid, then Newton lifting
    std::vector<BigInt> g, u, v;
    poly_ext_gcd_fp(c_, R_->h, P, g, u, v);
    if (poly_deg(g) != 0) throw std::logic_error("unit has nontrivial gcd with h");
    std::vector<BigInt> inv = poly_divmod_fp(u, R_->h, P).second;
    long have = 1;
    while (have < prec_) {
        have = std::min(2 * have, prec_);
        const BigInt pe = pow_int(P, have);
        // inv <- inv * (2 - c * inv) mod (h, p^have)
        auto t = poly_mul(c_, inv);
        poly_rem_monic_inplace(t, R_->h);
        t = poly_mod(std::move(t), pe);
        std::vector<BigInt> two_minus{BigInt(2)};
        t = poly_sub(two_minus, t);
        auto next = poly_mul(inv, t);
        poly_rem_monic_inplace(next, R_->h);
        inv = poly_mod(std::move(next), pe);
    }
    UnramifiedElt r = *this;
    r.c_ = std::move(inv);
    r.reduce();
    return r;
}

UnramifiedElt UnramifiedElt::div_exact_p(long j) const {
    if (j < 0) throw UsageError("negative power");
    if (j == 0) return *this;
    if (j >= prec_)
        throw PrecisionError("division by p^" + std::to_string(j) +
                                 " exhausts tracked precision",
                             0);
    const BigInt pj = pow_int(BigInt(R_->p), j);
    UnramifiedElt r = *this;
    r.prec_ = prec_ - j;
    for (auto& x : r.c_) {
        if (x % pj != 0)
            throw UnitRequiredError("div_exact_p: coefficient not divisible by p^" +
                                    std::to_string(j));
        x /= pj;
    }
    r.reduce();
    return r;
}

UnramifiedElt UnramifiedElt::shift_up(long j) const {
    if (j < 0) throw UsageError("negative power");
    UnramifiedElt r = *this;
    r.prec_ = std::min(prec_ + j, R_->k);
    const BigInt pj = pow_int(BigInt(R_->p), j);
    for (auto& x : r.c_) x *= pj;
    r.reduce();
    return r;
}

UnramifiedElt UnramifiedElt::with_prec(long k2) const {
    if (k2 < 1) throw UsageError("precision must be >= 1");
    if (k2 > prec_)
        throw PrecisionError("cannot raise precision of an unramified element", prec_);
    UnramifiedElt r = *this;
    r.prec_ = k2;
    r.reduce();
    return r;
}

bool UnramifiedElt::operator==(const UnramifiedElt& o) const {
    if (R_->p != o.R_->p || R_->m != o.R_->m) return false;
    const long pr = std::min(prec_, o.prec_);
    const BigInt pe = pow_int(BigInt(R_->p), pr);
    for (long i = 0; i < R_->f; ++i)
        if (mod_reduce(c_[i], pe) != mod_reduce(o.c_[i], pe)) return false;
    return true;
}

PadicInt UnramifiedElt::as_scalar() const {
    const BigInt pe = pow_int(BigInt(R_->p), prec_);
    for (long i = 1; i < R_->f; ++i)
        if (mod_reduce(c_[i], pe) != 0)
            throw UsageError("unramified element does not lie in Z_p");
    return PadicInt(R_->p, prec_, c_[0]);
}

std::string UnramifiedElt::str() const {
    std::ostringstream os;
    os << "[p=" << R_->p << " f=" << R_->f << " prec=" << prec_ << "]";
    for (long i = 0; i < R_->f; ++i) {
        if (i) os << " + " << c_[i] << "*w^" << i;
        else os << " " << c_[0];
    }
    return os.str();
}

UnramifiedElt embed_unramified(const CycloElt& x, long p, long k) {
    if (!is_prime_l(p)) throw UsageError("embed: p must be prime");
    long m = x.level();
    bool has_p_part = (m % p == 0);
    while (m % p == 0) m /= p;
    // an element at level divisible by p must actually lie in the
    // prime-to-p subfield (to_level certifies that)
    const CycloElt y = has_p_part ? to_level(x, normalize_level(m)) : x;
    auto R = unramified_ring(p, k, y.level());
    const BigInt pk = R->pk;
    auto embed_rat = [&](const BigRat& q) -> BigInt {
        BigInt den = boost::multiprecision::denominator(q);
        if (den % p == 0)
            throw HypothesisError("embedding requires p-integral coefficients");
        return mod_reduce(boost::multiprecision::numerator(q) *
                              mod_inverse(mod_reduce(den, pk), pk),
                          pk);
    };
    // root power ladder: acc = sum c_i * root^i
    std::vector<BigInt> acc(R->f, BigInt(0));
    std::vector<BigInt> pw{1};
    const std::vector<BigInt> root{0, 1};
    const auto& c = y.coeffs();
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] != 0) {
            BigInt s = embed_rat(c[i]);
            for (size_t t = 0; t < pw.size(); ++t) {
                if (t >= acc.size()) acc.resize(t + 1, BigInt(0));
                acc[t] = mod_reduce(acc[t] + s * pw[t], pk);
            }
        }
        if (i + 1 < c.size()) {
            pw = poly_mul(pw, root);
            poly_rem_monic_inplace(pw, R->h);
            pw = poly_mod(std::move(pw), pk);
        }
    }
    return UnramifiedElt(R, std::move(acc), k);
}

UnramifiedElt transport_up(const UnramifiedElt& x, long target_m) {
    long M = normalize_level(target_m);
    long m = x.ring()->m;
    if (m == M) return x;
    if (M % m != 0)
        throw UsageError("transport_up: source level must divide the target level");
    long p = x.p();
    long k = x.ring()->k;
    // The rewrite below is a Z_p-algebra map exactly when the image chosen
    // for the source generator is a root of the source ring's own factor h.
    // The primitive m-th roots of unity in the target ring are the Galois
    // twists w0^t; scan them for a root of h.  (For f = 1 the coefficient
    // vector has length one and the map is the scalar inclusion whatever w
    // is, but the scan still succeeds and keeps the invariant uniform.)
    UnramifiedElt w0 = embed_unramified(to_level(root_of_unity(m, 1), M), p, k);
    auto R = w0.ring();
    const auto& h = x.ring()->h;
    auto eval_h = [&](const UnramifiedElt& z) {
        UnramifiedElt v = UnramifiedElt::from_scalar(R, PadicInt(p, k, h.back()));
        for (size_t i = h.size() - 1; i-- > 0;)
            v = v * z + UnramifiedElt::from_scalar(R, PadicInt(p, k, h[i]));
        return v;
    };
    UnramifiedElt w = w0;
    bool found = false;
    UnramifiedElt cur = w0;
    for (long t = 1; t <= m; ++t) {
        if (lgcd(t, m) == 1 && eval_h(cur).is_zero()) {
            w = cur;
            found = true;
            break;
        }
        cur = cur * w0;
    }
    if (!found)
        throw Error("transport_up: no power of the target root reduces to the source root");
    UnramifiedElt acc = UnramifiedElt::from_scalar(R, PadicInt(p, k, x.coeffs().back()));
    for (size_t i = x.coeffs().size() - 1; i-- > 0;)
        acc = acc * w + UnramifiedElt::from_scalar(R, PadicInt(p, k, x.coeffs()[i]));
    return acc.with_prec(x.prec());
}

std::string embedding_tag(const UnramifiedRing& R) {
    std::ostringstream os;
    os << "Z_" << R.p << "[zeta_" << R.m << "], f=" << R.f << ", root of [";
    for (size_t i = 0; i < R.h_mod_p.size(); ++i)
        os << (i ? "," : "") << R.h_mod_p[i];
    os << "] mod " << R.p;
    return os.str();
}

} // namespace trivzero
