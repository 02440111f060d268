#include "trivzero/characters.hpp"

#include <algorithm>
#include <sstream>

namespace trivzero {

long smallest_primitive_root(long q, int e) {
    long m = 1;
    for (int i = 0; i < e; ++i) m *= q;
    long target = euler_phi(m);
    for (long g = 2; g < m; ++g) {
        if (lgcd(g, m) != 1) continue;
        if (mult_order(g, m) == target) return g;
    }
    throw std::logic_error("no primitive root found");  // unreachable for odd prime powers
}

std::vector<std::pair<long, long>> unit_group_generators(long M) {
    if (M < 1) throw UsageError("modulus must be positive");
    std::vector<std::pair<long, long>> gens;  // (generator mod M, order)
    auto fac = factorize(M);
    for (auto& [q, e] : fac) {
        long qe = 1;
        for (int i = 0; i < e; ++i) qe *= q;
        std::vector<std::pair<long, long>> local;  // generators mod q^e
        if (q == 2) {
            if (e == 2) local.emplace_back(3, 2);
            else if (e >= 3) {
                local.emplace_back(qe - 1, 2);
                local.emplace_back(5, 1L << (e - 2));
            }
            // e == 1: trivial component
        } else {
            local.emplace_back(smallest_primitive_root(q, e), euler_phi(qe));
        }
        // CRT lift: x = g mod q^e, x = 1 mod M/q^e
        long rest = M / qe;
        for (auto& [g, d] : local) {
            if (rest == 1) {
                gens.emplace_back(g, d);
            } else {
                BigInt inv = mod_inverse(BigInt(rest), BigInt(qe));
                BigInt x = mod_reduce(BigInt(1) + BigInt(rest) * inv * (BigInt(g) - 1), BigInt(M));
                gens.emplace_back(static_cast<long>(x.convert_to<long>()), d);
            }
        }
    }
    return gens;
}

namespace {

// walk the whole unit group as an odometer over generator powers, calling
// f(element, exponent_tuple) once per element
template <class F>
void walk_units(long M, const std::vector<std::pair<long, long>>& gens, F&& f) {
    std::vector<long> x(gens.size(), 0);
    std::vector<long> powers(gens.size(), 1);
    long a = 1;
    while (true) {
        f(a, x);
        size_t i = 0;
        for (; i < gens.size(); ++i) {
            ++x[i];
            a = static_cast<long>(mod_mul(BigInt(a), BigInt(gens[i].first), BigInt(M)).convert_to<long>());
            if (x[i] < gens[i].second) break;
            // roll over: undo d_i multiplications happens automatically since g^d = 1
            x[i] = 0;
        }
        if (i == gens.size()) break;
    }
}

long conductor_of_table(long M, const std::vector<long>& expo) {
    for (long d : divisors_of(M)) {
        bool ok = true;
        for (long a = 1; a < M && ok; ++a) {
            if (expo[a] < 0) continue;
            if (a % d == 1 % d && expo[a] != 0) ok = false;  // a = 1 mod d
        }
        if (ok || d == M) return d;
    }
    return M;
}

} // namespace

DirichletChar::DirichletChar(long M, long n, std::vector<long> expo)
    : M_(M), n_(n), expo_(std::move(expo)) {
    conductor_ = conductor_of_table(M_, expo_);
}

DirichletChar DirichletChar::trivial(long modulus) {
    if (modulus < 1) throw UsageError("modulus must be positive");
    std::vector<long> expo(modulus, -1);
    if (modulus == 1) expo[0] = 0;
    for (long a = 1; a < modulus; ++a)
        if (lgcd(a, modulus) == 1) expo[a] = 0;
    return DirichletChar(modulus, 1, std::move(expo));
}

DirichletChar DirichletChar::from_generator_exponents(long modulus,
                                                      const std::vector<long>& gen_exps) {
    auto gens = unit_group_generators(modulus);
    if (gen_exps.size() != gens.size())
        throw UsageError("generator exponent count mismatch: expected " +
                         std::to_string(gens.size()));
    long E = 1;
    for (auto& [g, d] : gens) E = llcm(E, d);
    std::vector<long> expo(std::max<long>(modulus, 1), -1);
    if (modulus == 1) { expo[0] = 0; return DirichletChar(1, 1, std::move(expo)); }
    long common = E;  // gcd of all exponents and E, to normalize the order
    walk_units(modulus, gens, [&](long a, const std::vector<long>& x) {
        long e = 0;
        for (size_t i = 0; i < gens.size(); ++i) {
            long ei = mod_reduce_l(gen_exps[i], gens[i].second);
            e = mod_reduce_l(e + x[i] * ei % E * (E / gens[i].second), E);
        }
        expo[a] = e;
        common = lgcd(common, e);
    });
    long n = common == 0 ? 1 : E / common;
    long scale = E / n;
    for (long a = 0; a < modulus; ++a)
        if (expo[a] > 0) expo[a] /= scale;
    return DirichletChar(modulus, n, std::move(expo));
}

long DirichletChar::exponent(long a) const {
    long r = mod_reduce_l(a, M_);
    if (expo_[r] < 0)
        throw UsageError("character argument shares a factor with the modulus");
    return expo_[r];
}

CycloElt DirichletChar::value(long a) const {
    long r = mod_reduce_l(a, M_);
    if (expo_[r] < 0) return CycloElt(BigRat(0));
    // keep every value in the character's own cyclotomic field: values of
    // smaller order would otherwise drop to a lower level, and lower levels
    // carry their own canonical unramified embeddings, which need not agree
    // with the restriction of this character's embedding
    return to_level(root_of_unity(n_, expo_[r]), normalize_level(n_));
}

bool DirichletChar::is_odd() const {
    if (M_ <= 2) return false;  // chi(-1) = chi(1) = 1
    long e = expo_[M_ - 1];
    // chi(-1) = ±1 always; -1 corresponds to exponent n/2
    return n_ % 2 == 0 && e == n_ / 2;
}

DirichletChar DirichletChar::primitive_part() const {
    long c = conductor_;
    if (c == M_) return *this;
    std::vector<long> expo(std::max<long>(c, 1), -1);
    if (c == 1) { expo[0] = 0; return DirichletChar(1, 1, std::move(expo)); }
    for (long b = 0; b < c; ++b) {
        if (lgcd(b, c) != 1) continue;
        long a = b;
        while (lgcd(a, M_) != 1) a += c;  // terminates: some lift is a unit mod M
        expo[b] = expo_[a];
    }
    return DirichletChar(c, n_, std::move(expo));
}

DirichletChar DirichletChar::induce(long new_modulus) const {
    if (new_modulus % M_ != 0)
        throw UsageError("can only induce to a multiple of the modulus");
    std::vector<long> expo(new_modulus, -1);
    if (new_modulus == 1) { expo = {0}; return DirichletChar(1, 1, std::move(expo)); }
    for (long a = 1; a < new_modulus; ++a)
        if (lgcd(a, new_modulus) == 1) expo[a] = expo_[a % M_];
    // order can only stay or shrink? (it stays: same value set)
    return DirichletChar(new_modulus, n_, std::move(expo));
}

DirichletChar DirichletChar::operator*(const DirichletChar& o) const {
    long M = llcm(M_, o.M_);
    long n = llcm(n_, o.n_);
    std::vector<long> expo(std::max<long>(M, 1), -1);
    if (M == 1) { expo[0] = 0; return DirichletChar(1, 1, std::move(expo)); }
    long common = n;
    for (long a = 1; a < M; ++a) {
        if (lgcd(a, M) != 1) continue;
        long e = mod_reduce_l(expo_[a % M_] * (n / n_) + o.expo_[a % o.M_] * (n / o.n_), n);
        expo[a] = e;
        common = lgcd(common, e);
    }
    long nn = common == 0 ? 1 : n / common;
    for (long a = 0; a < M; ++a)
        if (expo[a] > 0) expo[a] /= (n / nn);
    return DirichletChar(M, nn, std::move(expo));
}

DirichletChar DirichletChar::inverse() const { return power(-1); }

DirichletChar DirichletChar::power(long t) const {
    long tt = mod_reduce_l(t, n_);
    std::vector<long> expo(expo_);
    long common = n_;
    for (long a = 0; a < M_; ++a) {
        if (expo[a] < 0) continue;
        expo[a] = mod_reduce_l(expo[a] * tt, n_);
        common = lgcd(common, expo[a]);
    }
    long nn = common == 0 ? 1 : n_ / common;
    for (long a = 0; a < M_; ++a)
        if (expo[a] > 0) expo[a] /= (n_ / nn);
    return DirichletChar(M_, nn, std::move(expo));
}

std::string DirichletChar::label() const {
    auto gens = unit_group_generators(M_);
    std::ostringstream os;
    os << M_ << ":[";
    for (size_t i = 0; i < gens.size(); ++i) {
        long e = expo_[gens[i].first % M_];
        // rewrite as an exponent relative to the generator order d_i
        long d = gens[i].second;
        os << (i ? "," : "") << mod_reduce_l(e * d / n_, d);
    }
    os << "]";
    return os.str();
}

DirichletChar DirichletChar::from_label(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos || s.size() < colon + 3 || s[colon + 1] != '[' ||
        s.back() != ']')
        throw UsageError("character label must look like M:[e1,e2,...]");
    long M;
    try {
        M = std::stol(s.substr(0, colon));
    } catch (...) {
        throw UsageError("bad modulus in character label");
    }
    std::vector<long> exps;
    std::string body = s.substr(colon + 2, s.size() - colon - 3);
    if (!body.empty()) {
        std::istringstream is(body);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            try {
                exps.push_back(std::stol(tok));
            } catch (...) {
                throw UsageError("bad exponent in character label");
            }
        }
    }
    return from_generator_exponents(M, exps);
}

std::vector<DirichletChar> enumerate_characters(long M) {
    auto gens = unit_group_generators(M);
    std::vector<DirichletChar> out;
    std::vector<long> t(gens.size(), 0);
    while (true) {
        out.push_back(DirichletChar::from_generator_exponents(M, t));
        size_t i = 0;
        for (; i < gens.size(); ++i) {
            if (++t[i] < gens[i].second) break;
            t[i] = 0;
        }
        if (i == gens.size()) break;
    }
    return out;
}

DirichletChar teichmuller_char(long p) {
    if (!is_prime_l(p)) throw UsageError("teichmuller character needs a prime modulus");
    if (p == 2) return DirichletChar::trivial(2);
    // Pin omega to the generator b whose image under the canonical unramified
    // embedding is its own Teichmueller lift: b is the mod-p residue of the
    // canonically embedded zeta_{p-1}.  The value field Q(zeta_{p-1}) has
    // canonical level m = normalize_level(p-1); the embedding sends zeta_m to
    // the Hensel lift of the smallest order-m residue a0, and for p = 3 mod 4
    // zeta_{p-1} = -zeta_m^{(m+1)/2}.  With omega(b) := zeta_{p-1}, the
    // embedding of omega(a) equals teichmuller(a) for every unit a.
    const long m = normalize_level(p - 1);
    long a0 = 0;
    for (long a = 1; a < p; ++a)
        if (mult_order(a, p) == m) { a0 = a; break; }
    long b;
    if ((p - 1) % 4 == 2) {
        long t = static_cast<long>(
            mod_pow(BigInt(a0), BigInt((m + 1) / 2), BigInt(p)).convert_to<long>());
        b = (p - t) % p;
    } else {
        b = a0;
    }
    const long g = unit_group_generators(p)[0].first;
    long e = 0;
    for (long cur = 1; cur != g; ++e)
        cur = static_cast<long>((BigInt(cur) * b % p).convert_to<long>());
    return DirichletChar::from_generator_exponents(p, {e});
}

ExceptionalityReport is_exceptional(const DirichletChar& chi, long p) {
    if (p < 5 || !is_prime_l(p)) return {false, "p-not-an-odd-prime-at-least-5"};
    if (!chi.is_primitive()) return {false, "chi-not-primitive"};
    long N = chi.conductor();
    if (lgcd(N, p) != 1) return {false, "p-divides-conductor"};
    if (euler_phi(N) % p == 0) return {false, "p-divides-phi-of-conductor"};
    if (!chi.is_odd()) return {false, "chi-not-odd"};
    if (chi.exponent(p) != 0) return {false, "chi-at-p-not-1"};
    return {true, ""};
}

DirichletChar theta_from_chi(const DirichletChar& chi, long p) {
    auto rep = is_exceptional(chi, p);
    if (!rep.exceptional)
        throw HypothesisError("theta requires an exceptional character (" + rep.reason + ")");
    DirichletChar theta = chi * teichmuller_char(p);
    if (theta.conductor() != chi.conductor() * p)
        throw std::logic_error("theta is unexpectedly imprimitive");
    return theta;
}

} // namespace trivzero
