#include "trivzero/cyclotomic.hpp"

#include "trivzero/characters.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace trivzero {

namespace {

// Phi_m for squarefree m, by exact division over ascending divisors
std::vector<BigInt> cyclo_squarefree(long m) {
    std::map<long, std::vector<BigInt>> table;
    for (long d : divisors_of(m)) {
        std::vector<BigInt> f(d + 1, BigInt(0));
        f[0] = -1;
        f[d] = 1;  // x^d - 1
        for (long e : divisors_of(d))
            if (e < d) f = poly_div_exact(f, table[e]);
        table[d] = std::move(f);
    }
    return table[m];
}

std::mutex g_phi_mutex;
std::map<long, std::vector<BigInt>> g_phi_cache;

std::mutex g_field_mutex;
std::map<long, std::shared_ptr<const CycloField>> g_field_cache;

} // namespace

std::vector<BigInt> cyclotomic_polynomial(long M) {
    if (M < 1) throw UsageError("cyclotomic polynomial index must be >= 1");
    {
        std::lock_guard<std::mutex> lk(g_phi_mutex);
        auto it = g_phi_cache.find(M);
        if (it != g_phi_cache.end()) return it->second;
    }
    long rad = 1;
    for (auto& [q, e] : factorize(M)) rad *= q;
    std::vector<BigInt> base = (M == 1) ? std::vector<BigInt>{-1, 1} : cyclo_squarefree(rad);
    std::vector<BigInt> out;
    const long stretch = M / rad;
    if (stretch == 1) {
        out = std::move(base);
    } else {
        // Phi_M(x) = Phi_rad(x^{M/rad})
        out.assign((base.size() - 1) * stretch + 1, BigInt(0));
        for (size_t i = 0; i < base.size(); ++i) out[i * stretch] = base[i];
    }
    std::lock_guard<std::mutex> lk(g_phi_mutex);
    g_phi_cache.emplace(M, out);
    return out;
}

long normalize_level(long M) {
    if (M < 1) throw UsageError("level must be >= 1");
    if (M % 4 == 2) return M / 2;
    return M;
}

std::shared_ptr<const CycloField> cyclo_field(long M) {
    if (M != normalize_level(M))
        throw UsageError("internal: non-canonical level " + std::to_string(M));
    {
        std::lock_guard<std::mutex> lk(g_field_mutex);
        auto it = g_field_cache.find(M);
        if (it != g_field_cache.end()) return it->second;
    }
    auto F = std::make_shared<CycloField>();
    F->level = M;
    F->phi = euler_phi(M);
    F->Phi = cyclotomic_polynomial(M);
    F->PhiQ.reserve(F->Phi.size());
    for (auto& c : F->Phi) F->PhiQ.emplace_back(c);
    std::lock_guard<std::mutex> lk(g_field_mutex);
    auto [it, inserted] = g_field_cache.emplace(M, std::move(F));
    return it->second;
}

CycloElt::CycloElt(const BigRat& q) : F_(cyclo_field(1)) {
    if (q != 0) c_.push_back(q);
}

CycloElt::CycloElt(long level, std::vector<BigRat> pc) {
    if (level < 1) throw UsageError("level must be >= 1");
    if (level % 4 == 2) {
        // zeta_{2m}^i = (-1)^i * zeta_m^{i(m+1)/2} for odd m: fold down
        const long m = level / 2;
        std::vector<BigRat> folded(m, BigRat(0));
        const long half = (m + 1) / 2;
        for (size_t i = 0; i < pc.size(); ++i) {
            if (pc[i] == 0) continue;
            long e = static_cast<long>(i % static_cast<size_t>(2 * m));
            long idx = static_cast<long>((static_cast<BigInt>(e) * half % m).convert_to<long>());
            if (e % 2) folded[idx] -= pc[i];
            else folded[idx] += pc[i];
        }
        *this = CycloElt(m, std::move(folded));
        return;
    }
    F_ = cyclo_field(level);
    // exponents may exceed the level: wrap them first, then reduce mod Phi
    if (pc.size() > static_cast<size_t>(level)) {
        std::vector<BigRat> wrapped(level, BigRat(0));
        for (size_t i = 0; i < pc.size(); ++i)
            if (pc[i] != 0) wrapped[i % static_cast<size_t>(level)] += pc[i];
        pc = std::move(wrapped);
    }
    poly_rem_monic_inplace(pc, F_->PhiQ);
    c_ = std::move(pc);
}

bool CycloElt::is_zero() const { return c_.empty(); }

bool CycloElt::is_rational() const { return c_.size() <= 1; }

BigRat CycloElt::rational_value() const {
    if (!is_rational()) throw UsageError("value is not rational");
    return c_.empty() ? BigRat(0) : c_[0];
}

CycloElt CycloElt::operator-() const {
    CycloElt r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

namespace {
std::pair<CycloElt, CycloElt> at_common_level(const CycloElt& a, const CycloElt& b) {
    long L = llcm(a.level(), b.level());
    return {to_level(a, L), to_level(b, L)};
}
} // namespace

CycloElt CycloElt::operator+(const CycloElt& o) const {
    if (level() == o.level()) {
        CycloElt r = *this;
        r.c_ = poly_add(c_, o.c_);
        return r;
    }
    auto [a, b] = at_common_level(*this, o);
    return a + b;
}

CycloElt CycloElt::operator-(const CycloElt& o) const {
    if (level() == o.level()) {
        CycloElt r = *this;
        r.c_ = poly_sub(c_, o.c_);
        return r;
    }
    auto [a, b] = at_common_level(*this, o);
    return a - b;
}

CycloElt CycloElt::operator*(const CycloElt& o) const {
    if (level() == o.level()) {
        CycloElt r = *this;
        r.c_ = poly_mul(c_, o.c_);
        poly_rem_monic_inplace(r.c_, F_->PhiQ);
        return r;
    }
    auto [a, b] = at_common_level(*this, o);
    return a * b;
}

CycloElt CycloElt::operator*(const BigRat& q) const {
    CycloElt r = *this;
    if (q == 0) { r.c_.clear(); return r; }
    for (auto& x : r.c_) x *= q;
    return r;
}

CycloElt CycloElt::operator/(const CycloElt& o) const { return *this * o.inverse(); }

CycloElt CycloElt::inverse() const {
    if (is_zero()) throw PoleError("inverse of zero");
    if (is_rational()) {
        CycloElt r = *this;
        r.c_[0] = BigRat(1) / r.c_[0];
        return r;
    }
    std::vector<BigRat> g, u, v;
    poly_ext_gcd_q(c_, F_->PhiQ, g, u, v);
    if (poly_deg(g) != 0)
        throw std::logic_error("cyclotomic inverse: gcd not a scalar");
    // g is monic, i.e. exactly 1
    poly_rem_monic_inplace(u, F_->PhiQ);
    CycloElt r = *this;
    r.c_ = std::move(u);
    return r;
}

bool CycloElt::operator==(const CycloElt& o) const {
    if (level() == o.level()) return c_ == o.c_;
    auto [a, b] = at_common_level(*this, o);
    return a.c_ == b.c_;
}

std::string CycloElt::str() const {
    std::ostringstream os;
    os << "[L" << level() << "]";
    if (is_zero()) { os << " 0"; return os.str(); }
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        os << " + (" << c_[i] << ")";
        if (i) os << "*z^" << i;
    }
    return os.str();
}

CycloElt root_of_unity(long M, long j) {
    if (M < 1) throw UsageError("root_of_unity: level must be >= 1");
    j = mod_reduce_l(j, M);
    if (j == 0) return CycloElt(BigRat(1));
    long g = lgcd(j, M);
    long m = M / g, jj = j / g;
    if (m == 2) return CycloElt(BigRat(-1));
    std::vector<BigRat> raw(jj + 1, BigRat(0));
    raw[jj] = 1;
    return CycloElt(m, std::move(raw));
}

CycloElt unit_ratio(long M, long e) {
    if (M < 1) throw UsageError("unit_ratio: level must be >= 1");
    e = mod_reduce_l(e, M);
    if (e == 0) throw PoleError("unit_ratio: t = 1 is a pole");
    long g = lgcd(e, M);
    long m = M / g, ee = e / g;  // t = zeta_m^ee with gcd(ee, m) = 1
    // t/(t-1) = 1 + (1/m) sum_{i=1}^{m-1} i t^i
    std::vector<BigInt> acc(m, BigInt(0));
    for (long i = 1; i < m; ++i)
        acc[static_cast<size_t>(static_cast<long>((BigInt(ee) * i % m).convert_to<long>()))] += i;
    std::vector<BigRat> raw(m, BigRat(0));
    for (long i = 0; i < m; ++i)
        if (acc[i] != 0) raw[i] = BigRat(acc[i], BigInt(m));
    raw[0] += 1;
    return CycloElt(m, std::move(raw));
}

CycloElt to_level(const CycloElt& x, long target) {
    target = normalize_level(target);
    const long M = x.level();
    if (M == target) return x;
    if (target % M == 0) {
        // raise: power i at level M is power i*(target/M) at the target level
        const long k = target / M;
        std::vector<BigRat> raw;
        raw.resize(static_cast<size_t>((x.c_.empty() ? 0 : (x.c_.size() - 1) * k) + 1),
                   BigRat(0));
        for (size_t i = 0; i < x.c_.size(); ++i)
            if (x.c_[i] != 0) raw[i * k] = x.c_[i];
        return CycloElt(target, std::move(raw));
    }
    if (M % target != 0)
        throw UsageError("to_level: levels are not nested");
    // lower: solve for coordinates on the basis zeta_target^t, t < phi(target)
    auto Fs = cyclo_field(target);
    const long cols = Fs->phi;
    auto Fb = cyclo_field(M);
    const long rows = Fb->phi;
    // build the (rows x cols) matrix of lifted basis vectors
    std::vector<std::vector<BigRat>> A(rows, std::vector<BigRat>(cols + 1, BigRat(0)));
    for (long t = 0; t < cols; ++t) {
        CycloElt lifted = to_level(root_of_unity(target, t), M);
        for (size_t i = 0; i < lifted.coeffs().size(); ++i)
            A[i][t] = lifted.coeffs()[i];
    }
    for (size_t i = 0; i < x.c_.size(); ++i) A[i][cols] = x.c_[i];
    // Gaussian elimination (rows >= cols; system must be consistent)
    std::vector<long> pivot_row(cols, -1);
    long prow = 0;
    for (long c = 0; c < cols && prow < rows; ++c) {
        long sel = -1;
        for (long r2 = prow; r2 < rows; ++r2)
            if (A[r2][c] != 0) { sel = r2; break; }
        if (sel < 0) continue;
        std::swap(A[sel], A[prow]);
        BigRat inv = BigRat(1) / A[prow][c];
        for (long cc = c; cc <= cols; ++cc) A[prow][cc] *= inv;
        for (long r2 = 0; r2 < rows; ++r2) {
            if (r2 == prow || A[r2][c] == 0) continue;
            BigRat f = A[r2][c];
            for (long cc = c; cc <= cols; ++cc) A[r2][cc] -= f * A[prow][cc];
        }
        pivot_row[c] = prow;
        ++prow;
    }
    std::vector<BigRat> sol(cols, BigRat(0));
    for (long c = 0; c < cols; ++c)
        if (pivot_row[c] >= 0) sol[c] = A[pivot_row[c]][cols];
    // consistency: rows without pivots must have zero rhs
    for (long r2 = prow; r2 < rows; ++r2)
        if (A[r2][cols] != 0)
            throw HypothesisError("value does not lie in the requested cyclotomic subfield");
    CycloElt out(BigRat(0));
    out.F_ = Fs;
    out.c_ = std::move(sol);
    poly_trim(out.c_);
    return out;
}

GaloisElement::GaloisElement(long level_, long j_) : level(level_) {
    if (level < 1) throw UsageError("Galois element: level must be >= 1");
    j = mod_reduce_l(j_, level);
    if (lgcd(j == 0 ? level : j, level) != 1)
        throw UsageError("Galois element: exponent must be a unit mod the level");
}

GaloisElement compose(const GaloisElement& a, const GaloisElement& b) {
    if (a.level != b.level) throw UsageError("Galois composition: level mismatch");
    return GaloisElement(a.level,
                         static_cast<long>(mod_mul(BigInt(a.j), BigInt(b.j), BigInt(a.level))
                                               .convert_to<long>()));
}

CycloElt galois_apply(const GaloisElement& g, const CycloElt& x) {
    const long L = normalize_level(g.level);
    CycloElt lifted = to_level(x, L);
    const long j = mod_reduce_l(g.j, L);
    std::vector<BigRat> raw(L, BigRat(0));
    const auto& c = lifted.coeffs();
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        raw[static_cast<size_t>((BigInt(i) * j % L).convert_to<long>())] += c[i];
    }
    return CycloElt(L, std::move(raw));
}

CycloElt partial_trace_p(const CycloElt& x, long N, long p, long r) {
    if (!is_prime_l(p)) throw UsageError("partial_trace_p: p must be prime");
    if (r < 1) throw UsageError("partial_trace_p: r must be >= 1");
    if (N < 1 || lgcd(N, p) != 1) throw UsageError("partial_trace_p: need gcd(N, p) = 1");
    long pr = 1;
    for (long i = 0; i < r; ++i) {
        pr *= p;
        if (pr > (1L << 40)) throw BudgetError("p^r too large");
    }
    const long M = normalize_level(N * pr);
    CycloElt lifted = to_level(x, M);
    const long Nb = M / pr;  // prime-to-p part of the working level
    // sigma_g: zeta_{p^r} -> zeta_{p^r}^g, zeta_Nb fixed; CRT the exponent
    BigInt crt_base = 0, crt_g = 1;
    if (Nb > 1) {
        crt_base = mod_reduce(BigInt(pr) * mod_inverse(BigInt(pr), BigInt(Nb)), BigInt(M));
        crt_g = mod_reduce(BigInt(Nb) * mod_inverse(BigInt(Nb), BigInt(pr)), BigInt(M));
    }
    std::vector<BigRat> raw(M, BigRat(0));
    const auto& c = lifted.coeffs();
    for (long g = 1; g < pr; ++g) {
        if (g % p == 0) continue;
        long j = (Nb == 1) ? g
                           : static_cast<long>(
                                 mod_reduce(crt_base + crt_g * g, BigInt(M)).convert_to<long>());
        for (size_t i = 0; i < c.size(); ++i) {
            if (c[i] == 0) continue;
            raw[static_cast<size_t>((BigInt(i) * j % M).convert_to<long>())] += c[i];
        }
    }
    return CycloElt(M, std::move(raw));
}

CycloElt gauss_sum(const DirichletChar& chi) {
    if (!chi.is_primitive())
        throw HypothesisError("gauss sum requires a primitive character");
    const long N = chi.modulus();
    if (N == 1) return CycloElt(BigRat(1));
    const long n = chi.order();
    const long L = llcm(N, n);  // may be ≡ 2 mod 4; the constructor folds
    std::vector<BigRat> raw(L, BigRat(0));
    for (long a = 1; a < N; ++a) {
        if (chi.vanishes_at(a)) continue;
        long idx = static_cast<long>(
            ((BigInt(chi.exponent(a)) * (L / n) + BigInt(a) * (L / N)) % L).convert_to<long>());
        raw[idx] += 1;
    }
    return CycloElt(L, std::move(raw));
}

} // namespace trivzero
