#include "doctest.h"

#include "trivzero/errors.hpp"
#include "trivzero/padic.hpp"

#include "fixtures/frozen_values.hpp"

using namespace trivzero;

TEST_CASE("canonical representative and modulus") {
    PadicInt x(7, 3, BigInt(-1));
    CHECK(x.rep() == 342);
    CHECK(x.modulus() == 343);
    CHECK(x.prec() == 3);
    CHECK(x.digits() == std::vector<long>{6, 6, 6});

    PadicInt y(5, 4, BigInt(1234));
    CHECK(y.rep() == 1234 % 625);
    CHECK(y.digits().size() == 4);
}

TEST_CASE("arithmetic tracks the weaker precision") {
    PadicInt a(7, 5, BigInt(10));
    PadicInt b(7, 3, BigInt(4));
    CHECK((a + b).prec() == 3);
    CHECK((a * b).prec() == 3);
    CHECK((a - b).rep() == 6);
    CHECK_THROWS_AS(a + PadicInt(5, 3, BigInt(1)), UsageError);
}

TEST_CASE("valuation, exact division, shifts") {
    PadicInt x(7, 4, BigInt(98));  // 2 * 7^2
    CHECK(x.valuation() == 2);
    PadicInt y = x.div_exact_p(2);
    CHECK(y.rep() == 2);
    CHECK(y.prec() == 2);  // two digits spent
    CHECK(y.shift_up(2).prec() == 4);
    CHECK(y.shift_up(2) == x);
    CHECK_THROWS_AS(PadicInt(7, 3, BigInt(3)).div_exact_p(1), UnitRequiredError);
    CHECK(PadicInt(7, 3, BigInt(0)).valuation() == 3);  // capped at prec
}

TEST_CASE("inverse and pow") {
    PadicInt t(7, 6, BigInt(3));
    CHECK((t * t.inverse()).rep() == 1);
    CHECK(t.pow(3).rep() == 27);
    CHECK_THROWS_AS(PadicInt(7, 4, BigInt(14)).inverse(), UnitRequiredError);
}

TEST_CASE("from_rational") {
    PadicInt h = PadicInt::from_rational(BigRat(1, 2), 7, 4);
    CHECK((h + h).rep() == 1);
    CHECK_THROWS_AS(PadicInt::from_rational(BigRat(1, 7), 7, 4), UnitRequiredError);
}

TEST_CASE("with_prec only reduces") {
    PadicInt x(7, 5, BigInt(100));
    CHECK(x.with_prec(2).rep() == 2);
    CHECK_THROWS_AS(x.with_prec(6), PrecisionError);
}

TEST_CASE("teichmuller lift") {
    CHECK(teichmuller(BigInt(2), 7, 2).rep() == 30);
    for (long a = 1; a < 7; ++a) {
        PadicInt w = teichmuller(BigInt(a), 7, 6);
        PadicInt pw = w;
        for (int i = 1; i < 6; ++i) pw = pw * w;
        CHECK(pw.rep() == 1);           // (p-1)-st root of unity
        CHECK(w.rep() % 7 == a);        // congruent to a mod p
    }
    CHECK_THROWS_AS(teichmuller(BigInt(14), 7, 3), UnitRequiredError);
}

TEST_CASE("angle part complements the Teichmuller factor") {
    CHECK(angle_part(BigInt(2), 7, 2).rep() == 36);  // 2 * 30^{-1} = 2 * 18
    for (long a = 1; a < 7; ++a) {
        PadicInt u = angle_part(BigInt(a), 7, 5);
        CHECK(u.rep() % 7 == 1);
        CHECK((u * teichmuller(BigInt(a), 7, 5)).rep() == a);
    }
}

TEST_CASE("p-adic logarithm") {
    CHECK(padic_log(PadicInt(7, 3, BigInt(8)), 3).rep() == 154);

    // log kills Teichmuller factors and is additive
    PadicInt l2 = padic_log(PadicInt(7, 8, BigInt(2)), 8);
    PadicInt l3 = padic_log(PadicInt(7, 8, BigInt(3)), 8);
    PadicInt l6 = padic_log(PadicInt(7, 8, BigInt(6)), 8);
    CHECK(l6 == l2 + l3);
    CHECK(padic_log(teichmuller(BigInt(3), 7, 8), 8).is_zero());

    CHECK(l3.rep() == frozen::kLog_7_3);
    CHECK(l3.valuation() == 1);

    CHECK_THROWS_AS(padic_log(PadicInt(7, 4, BigInt(0)), 4), UnitRequiredError);
}

TEST_CASE("kappa exponent inverts the binomial power") {
    KappaChoice kappa = KappaChoice::canonical(7);
    CHECK(kappa.at(4).rep() == 8);
    for (long d : {2, 3, 5, 10}) {
        PadicInt s = s_exponent(BigInt(d), kappa, 6);
        PadicInt back = binomial_power(kappa.at(6), s, 6);
        CHECK(back == angle_part(BigInt(d), 7, 6));
    }
    CHECK_THROWS_AS(s_exponent(BigInt(7), kappa, 5), UnitRequiredError);
}

TEST_CASE("binomial power agrees with integer powers") {
    PadicInt base = angle_part(BigInt(3), 7, 6);  // in 1 + pZ_p
    PadicInt e(7, 6, BigInt(4));
    PadicInt direct = base * base * base * base;
    CHECK(binomial_power(base, e, 6) == direct);
    // negative integer exponents land on the inverse
    CHECK(binomial_power(base, PadicInt(7, 6, BigInt(-1)), 6) == base.inverse());
}
