#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <vector>

namespace trivzero {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt numerator(const BigRat& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const BigRat& q) { return boost::multiprecision::denominator(q); }

// canonical representative in [0, m)
inline BigInt mod_reduce(const BigInt& a, const BigInt& m) {
    BigInt r = a % m;
    if (r < 0) r += m;
    return r;
}

inline BigInt mod_mul(const BigInt& a, const BigInt& b, const BigInt& m) {
    return mod_reduce(a * b, m);
}

inline BigInt mod_pow(const BigInt& base, const BigInt& exp, const BigInt& m) {
    if (exp < 0) throw std::invalid_argument("mod_pow: negative exponent");
    if (m == 1) return 0;
    return boost::multiprecision::powm(mod_reduce(base, m), exp, m);
}

// extended gcd: returns g and writes x,y with a*x + b*y = g
inline BigInt ext_gcd(const BigInt& a, const BigInt& b, BigInt& x, BigInt& y) {
    BigInt old_r = a, r = b, old_x = 1, xx = 0, old_y = 0, yy = 1;
    while (r != 0) {
        BigInt q = old_r / r;
        BigInt t = old_r - q * r; old_r = r; r = t;
        t = old_x - q * xx; old_x = xx; xx = t;
        t = old_y - q * yy; old_y = yy; yy = t;
    }
    x = old_x; y = old_y;
    return old_r;
}

inline BigInt mod_inverse(const BigInt& a, const BigInt& m) {
    BigInt x, y;
    BigInt g = ext_gcd(mod_reduce(a, m), m, x, y);
    if (g != 1 && g != -1) throw std::domain_error("mod_inverse: not invertible");
    return mod_reduce(x, m);
}

inline BigInt pow_int(const BigInt& b, unsigned long e) {
    BigInt r = 1, base = b;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

// v_p(a) for a != 0; the caller handles zero (conventionally "infinite")
inline long valuation(BigInt a, const BigInt& p) {
    if (a == 0) throw std::invalid_argument("valuation of 0");
    long v = 0;
    while (a % p == 0) { a /= p; ++v; }
    return v;
}

inline long lgcd(long a, long b) {
    while (b) { long t = a % b; a = b; b = t; }
    return a < 0 ? -a : a;
}

inline long llcm(long a, long b) { return a / lgcd(a, b) * b; }

inline long mod_reduce_l(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

inline long mod_inverse_l(long a, long m) {
    return static_cast<long>(mod_inverse(BigInt(a), BigInt(m)).convert_to<long>());
}

inline std::vector<long> divisors_of(long n) {
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

inline std::vector<std::pair<long, int>> factorize(long n) {
    std::vector<std::pair<long, int>> f;
    for (long q = 2; q * q <= n; ++q) {
        if (n % q) continue;
        int e = 0;
        while (n % q == 0) { n /= q; ++e; }
        f.emplace_back(q, e);
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

inline long euler_phi(long n) {
    long r = n;
    for (auto& [q, e] : factorize(n)) r = r / q * (q - 1);
    return r;
}

inline bool is_prime_l(long n) {
    if (n < 2) return false;
    for (long q = 2; q * q <= n; ++q)
        if (n % q == 0) return false;
    return true;
}

// multiplicative order of a mod m, gcd(a,m) = 1
inline long mult_order(long a, long m) {
    if (m == 1) return 1;
    long ord = 1;
    BigInt x = mod_reduce(BigInt(a), BigInt(m));
    if (boost::multiprecision::gcd(x, BigInt(m)) != 1)
        throw std::invalid_argument("mult_order: not a unit");
    BigInt cur = x;
    while (cur != 1) { cur = mod_mul(cur, x, BigInt(m)); ++ord; }
    return ord;
}

} // namespace trivzero
