#pragma once

// Dense univariate polynomial helpers on std::vector coefficients
// (index = power). Enough for cyclotomic polynomials, reduction mod a
// monic modulus, and small extended-Euclid runs over Q.

#include "trivzero/bigint.hpp"

#include <vector>

namespace trivzero {

template <class T>
void poly_trim(std::vector<T>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

template <class T>
long poly_deg(const std::vector<T>& a) {
    return static_cast<long>(a.size()) - 1;  // -1 for the zero polynomial
}

template <class T>
std::vector<T> poly_add(const std::vector<T>& a, const std::vector<T>& b) {
    std::vector<T> r(std::max(a.size(), b.size()), T(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    poly_trim(r);
    return r;
}

template <class T>
std::vector<T> poly_sub(const std::vector<T>& a, const std::vector<T>& b) {
    std::vector<T> r(std::max(a.size(), b.size()), T(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    poly_trim(r);
    return r;
}

template <class T>
std::vector<T> poly_mul(const std::vector<T>& a, const std::vector<T>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<T> r(a.size() + b.size() - 1, T(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) r[i + j] += a[i] * b[j];
    }
    poly_trim(r);
    return r;
}

template <class T>
std::vector<T> poly_scale(std::vector<T> a, const T& c) {
    for (auto& x : a) x *= c;
    poly_trim(a);
    return a;
}

// in-place remainder by a *monic* modulus; exact over any commutative ring
template <class T>
void poly_rem_monic_inplace(std::vector<T>& a, const std::vector<T>& m) {
    const long dm = poly_deg(m);
    while (poly_deg(a) >= dm) {
        const long da = poly_deg(a);
        T lead = a[da];
        if (lead != 0) {
            const long shift = da - dm;
            for (long i = 0; i < dm; ++i)
                if (m[i] != 0) a[shift + i] -= lead * m[i];
        }
        a.pop_back();
    }
    poly_trim(a);
}

template <class T>
std::vector<T> poly_rem_monic(std::vector<T> a, const std::vector<T>& m) {
    poly_rem_monic_inplace(a, m);
    return a;
}

// quotient+remainder by a monic divisor
template <class T>
std::pair<std::vector<T>, std::vector<T>> poly_divmod_monic(std::vector<T> a,
                                                            const std::vector<T>& m) {
    const long dm = poly_deg(m);
    const long da = poly_deg(a);
    if (da < dm) return {{}, a};
    std::vector<T> q(da - dm + 1, T(0));
    while (poly_deg(a) >= dm) {
        const long d = poly_deg(a);
        T lead = a[d];
        if (lead != 0) {
            q[d - dm] = lead;
            const long shift = d - dm;
            for (long i = 0; i < dm; ++i)
                if (m[i] != 0) a[shift + i] -= lead * m[i];
        }
        a.pop_back();
    }
    poly_trim(a);
    poly_trim(q);
    return {q, a};
}

// exact division (asserts zero remainder); used for cyclotomic polynomials
inline std::vector<BigInt> poly_div_exact(const std::vector<BigInt>& a,
                                          const std::vector<BigInt>& b_monic) {
    auto [q, r] = poly_divmod_monic(a, b_monic);
    if (!r.empty()) throw std::logic_error("poly_div_exact: nonzero remainder");
    return q;
}

template <class T, class S>
S poly_eval(const std::vector<T>& a, const S& x) {
    S r(0);
    for (size_t i = a.size(); i-- > 0;) r = r * x + S(a[i]);
    return r;
}

template <class T>
std::vector<T> poly_derivative(const std::vector<T>& a) {
    std::vector<T> r;
    for (size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * T(static_cast<long>(i)));
    poly_trim(r);
    return r;
}

// --- field-coefficient division (BigRat) ---------------------------------

inline std::pair<std::vector<BigRat>, std::vector<BigRat>> poly_divmod_q(
    std::vector<BigRat> a, const std::vector<BigRat>& b) {
    const long db = poly_deg(b);
    if (db < 0) throw std::domain_error("poly_divmod_q: division by zero polynomial");
    const BigRat inv_lead = BigRat(1) / b[db];
    const long da = poly_deg(a);
    if (da < db) return {{}, a};
    std::vector<BigRat> q(da - db + 1, BigRat(0));
    while (poly_deg(a) >= db) {
        const long d = poly_deg(a);
        BigRat c = a[d] * inv_lead;
        if (c != 0) {
            q[d - db] = c;
            for (long i = 0; i <= db; ++i)
                if (b[i] != 0) a[d - db + i] -= c * b[i];
        }
        a.resize(d);  // leading term is now zero by construction
        poly_trim(a);
    }
    poly_trim(q);
    return {q, a};
}

// extended Euclid over Q: g = a*u + b*v with g monic (or zero)
inline void poly_ext_gcd_q(std::vector<BigRat> a, std::vector<BigRat> b,
                           std::vector<BigRat>& g, std::vector<BigRat>& u,
                           std::vector<BigRat>& v) {
    std::vector<BigRat> old_u{BigRat(1)}, cur_u{};
    std::vector<BigRat> old_v{}, cur_v{BigRat(1)};
    while (!b.empty()) {
        auto [q, r] = poly_divmod_q(a, b);
        a.swap(b); b = r;
        auto nu = poly_sub(old_u, poly_mul(q, cur_u));
        old_u.swap(cur_u); cur_u = nu;
        auto nv = poly_sub(old_v, poly_mul(q, cur_v));
        old_v.swap(cur_v); cur_v = nv;
    }
    g = a; u = old_u; v = old_v;
    if (!g.empty() && g.back() != 1) {
        BigRat c = BigRat(1) / g.back();
        g = poly_scale(g, c); u = poly_scale(u, c); v = poly_scale(v, c);
    }
}

// --- (Z/p^k)[x] helpers ----------------------------------------------------

inline std::vector<BigInt> poly_mod(std::vector<BigInt> a, const BigInt& m) {
    for (auto& c : a) c = mod_reduce(c, m);
    poly_trim(a);
    return a;
}

inline std::vector<BigInt> poly_mul_mod(const std::vector<BigInt>& a,
                                        const std::vector<BigInt>& b, const BigInt& m) {
    return poly_mod(poly_mul(a, b), m);
}

inline std::vector<BigInt> poly_rem_monic_mod(std::vector<BigInt> a,
                                              const std::vector<BigInt>& mod_poly,
                                              const BigInt& m) {
    poly_rem_monic_inplace(a, mod_poly);
    return poly_mod(std::move(a), m);
}

// divide a by b over F_p (b nonzero); returns {quotient, remainder}
inline std::pair<std::vector<BigInt>, std::vector<BigInt>> poly_divmod_fp(
    std::vector<BigInt> a, const std::vector<BigInt>& b, const BigInt& p) {
    const long db = poly_deg(b);
    if (db < 0) throw std::domain_error("poly_divmod_fp: zero divisor");
    const BigInt inv_lead = mod_inverse(b[db], p);
    if (poly_deg(a) < db) return {{}, a};
    std::vector<BigInt> q(poly_deg(a) - db + 1, BigInt(0));
    while (poly_deg(a) >= db) {
        const long d = poly_deg(a);
        BigInt c = mod_mul(a[d], inv_lead, p);
        if (c != 0) {
            q[d - db] = c;
            for (long i = 0; i <= db; ++i)
                a[d - db + i] = mod_reduce(a[d - db + i] - c * b[i], p);
        }
        a.resize(d);
        poly_trim(a);
    }
    poly_trim(q);
    return {q, a};
}

// extended Euclid in F_p[x]; returns monic g with a*u + b*v = g (mod p)
inline void poly_ext_gcd_fp(std::vector<BigInt> a, std::vector<BigInt> b, const BigInt& p,
                            std::vector<BigInt>& g, std::vector<BigInt>& u,
                            std::vector<BigInt>& v) {
    a = poly_mod(std::move(a), p);
    b = poly_mod(std::move(b), p);
    std::vector<BigInt> old_u{BigInt(1)}, cur_u{};
    std::vector<BigInt> old_v{}, cur_v{BigInt(1)};
    while (!b.empty()) {
        auto [q, r] = poly_divmod_fp(a, b, p);
        a.swap(b);
        b = r;
        auto nu = poly_mod(poly_sub(old_u, poly_mul(q, cur_u)), p);
        old_u.swap(cur_u); cur_u = nu;
        auto nv = poly_mod(poly_sub(old_v, poly_mul(q, cur_v)), p);
        old_v.swap(cur_v); cur_v = nv;
    }
    g = a; u = old_u; v = old_v;
    if (!g.empty() && g.back() != 1) {
        BigInt c = mod_inverse(g.back(), p);
        for (auto& x : g) x = mod_mul(x, c, p);
        for (auto& x : u) x = mod_mul(x, c, p);
        for (auto& x : v) x = mod_mul(x, c, p);
        poly_trim(g); poly_trim(u); poly_trim(v);
    }
}

} // namespace trivzero
