#pragma once

// Dirichlet characters as exponent tables: chi(a) = zeta_n^expo[a] on the
// units of Z/M, with n the exact order. Everything is enumerated over the
// canonical generators of (Z/M)^x: the smallest primitive root per odd prime
// power component, and (-1, 5) for 2-power components.

#include "trivzero/bigint.hpp"
#include "trivzero/cyclotomic.hpp"
#include "trivzero/errors.hpp"

#include <string>
#include <utility>
#include <vector>

namespace trivzero {

// CRT-lifted canonical generators of (Z/M)^x with their orders,
// components ordered by ascending prime (2-part first as -1 then 5)
std::vector<std::pair<long, long>> unit_group_generators(long M);

long smallest_primitive_root(long q, int e);  // mod q^e, q an odd prime

class DirichletChar {
public:
    static DirichletChar trivial(long modulus);
    // from exponents on the canonical generators, e_i taken mod the
    // generator order d_i; chi(g_i) = zeta_{d_i}^{e_i}
    static DirichletChar from_generator_exponents(long modulus,
                                                  const std::vector<long>& gen_exps);

    long modulus() const { return M_; }
    long order() const { return n_; }

    bool vanishes_at(long a) const { return expo_[mod_reduce_l(a, M_)] < 0; }
    // exponent e with chi(a) = zeta_order^e; UsageError when gcd(a, M) > 1
    long exponent(long a) const;
    CycloElt value(long a) const;  // exact root of unity (or 0)

    long conductor() const { return conductor_; }
    bool is_primitive() const { return conductor_ == M_; }
    bool is_trivial() const { return n_ == 1; }
    bool is_odd() const;  // chi(-1) = -1

    DirichletChar primitive_part() const;
    DirichletChar induce(long new_modulus) const;
    DirichletChar operator*(const DirichletChar& o) const;  // modulus lcm
    DirichletChar inverse() const;
    DirichletChar power(long t) const;

    bool operator==(const DirichletChar& o) const {
        return M_ == o.M_ && n_ == o.n_ && expo_ == o.expo_;
    }

    std::string label() const;  // "M:[e1,e2,...]"
    static DirichletChar from_label(const std::string& s);

private:
    DirichletChar(long M, long n, std::vector<long> expo);

    long M_;
    long n_;
    std::vector<long> expo_;  // size M, -1 off the unit group
    long conductor_;
};

// all phi(M) characters mod M, in odometer order over generator exponents
std::vector<DirichletChar> enumerate_characters(long M);

// omega: the order-(p-1) character mod p pinned so that the unramified
// embedding of omega(a) is exactly teichmuller(a)
DirichletChar teichmuller_char(long p);

struct ExceptionalityReport {
    bool exceptional;
    std::string reason;  // empty when exceptional
};

// odd, primitive, chi(p) = 1, with the global hypotheses p >= 5, p coprime
// to N and to phi(N)
ExceptionalityReport is_exceptional(const DirichletChar& chi, long p);

// theta = chi * omega as a primitive character mod N*p
DirichletChar theta_from_chi(const DirichletChar& chi, long p);

} // namespace trivzero
