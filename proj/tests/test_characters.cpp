#include "doctest.h"

#include "trivzero/characters.hpp"
#include "trivzero/cyclotomic.hpp"
#include "trivzero/errors.hpp"
#include "trivzero/unramified.hpp"

using namespace trivzero;

TEST_CASE("enumeration covers the dual group") {
    CHECK(enumerate_characters(1).size() == 1);
    CHECK(enumerate_characters(7).size() == 6);
    CHECK(enumerate_characters(8).size() == 4);
    CHECK(enumerate_characters(21).size() == 12);
    CHECK(enumerate_characters(40).size() == 16);

    // labels round-trip through parsing
    for (const auto& chi : enumerate_characters(21)) {
        CHECK(DirichletChar::from_label(chi.label()) == chi);
    }
    CHECK_THROWS_AS(DirichletChar::from_label("21:[1"), UsageError);
}

TEST_CASE("values, exponents, multiplicativity") {
    DirichletChar chi = DirichletChar::from_label("7:[1]");
    CHECK(chi.order() == 6);
    CHECK(chi.exponent(3) == 1);  // 3 is the least primitive root mod 7
    CHECK(chi.value(3) == root_of_unity(6, 1));
    CHECK(chi.value(1) == CycloElt(BigRat(1)));
    CHECK(chi.vanishes_at(14));
    CHECK(chi.value(14) == CycloElt(BigRat(0)));
    for (long a = 1; a < 7; ++a)
        for (long b = 1; b < 7; ++b)
            CHECK(chi.value(a) * chi.value(b) == chi.value(a * b));
}

TEST_CASE("quadratic character mod 3") {
    DirichletChar chi3 = DirichletChar::from_label("3:[1]");
    CHECK(chi3.order() == 2);
    CHECK(chi3.value(1) == CycloElt(BigRat(1)));
    CHECK(chi3.value(2) == CycloElt(BigRat(-1)));
    CHECK(chi3.vanishes_at(3));
    CHECK(chi3.is_odd());
    CHECK(chi3.is_primitive());
}

TEST_CASE("conductor and primitive part") {
    DirichletChar chi3 = DirichletChar::from_label("3:[1]");
    DirichletChar lifted = chi3.induce(21);
    CHECK(lifted.modulus() == 21);
    CHECK(lifted.conductor() == 3);
    CHECK_FALSE(lifted.is_primitive());
    CHECK(lifted.primitive_part() == chi3);
    CHECK(lifted.vanishes_at(7));  // the induced character dies on gcd > 1
    CHECK(chi3.value(5) == lifted.value(5));

    CHECK(DirichletChar::trivial(12).conductor() == 1);
}

TEST_CASE("group structure of the dual") {
    DirichletChar chi = DirichletChar::from_label("7:[1]");
    CHECK((chi * chi.inverse()).is_trivial());
    CHECK(chi.power(-1) == chi.inverse());
    CHECK(chi.power(6).is_trivial());
    CHECK(chi.power(3).order() == 2);
    CHECK((chi * chi) == chi.power(2));

    // nontrivial characters sum to zero over the group
    for (const auto& c : enumerate_characters(21)) {
        CycloElt s;
        for (long a = 1; a <= 21; ++a) s = s + c.value(a);
        CHECK(s == CycloElt(BigRat(c.is_trivial() ? 12 : 0)));
    }
}

TEST_CASE("parity") {
    CHECK(DirichletChar::from_label("4:[1]").is_odd());
    CHECK_FALSE(DirichletChar::from_label("5:[2]").is_odd());
    CHECK(DirichletChar::from_label("7:[3]").is_odd());
    CHECK(teichmuller_char(7).is_odd());
}

TEST_CASE("Teichmuller character embeds onto the Teichmuller lift") {
    for (long p : {5L, 7L, 11L, 13L}) {
        DirichletChar om = teichmuller_char(p);
        CHECK(om.modulus() == p);
        CHECK(om.order() == p - 1);
        for (long a = 1; a < p; ++a) {
            UnramifiedElt lhs = embed_unramified(om.value(a), p, 6);
            CHECK(lhs.as_scalar() == teichmuller(BigInt(a), p, 6));
        }
    }
}

TEST_CASE("exceptional pairs") {
    DirichletChar chi3 = DirichletChar::from_label("3:[1]");
    DirichletChar chi4 = DirichletChar::from_label("4:[1]");
    DirichletChar chi7 = DirichletChar::from_label("7:[3]");

    CHECK(is_exceptional(chi3, 7).exceptional);
    CHECK(is_exceptional(chi4, 5).exceptional);
    CHECK(is_exceptional(chi7, 11).exceptional);

    // chi(p) != 1
    auto r1 = is_exceptional(chi4, 7);
    CHECK_FALSE(r1.exceptional);
    CHECK(r1.reason == "chi-at-p-not-1");
    // even characters are out
    CHECK_FALSE(is_exceptional(DirichletChar::from_label("5:[2]"), 11).exceptional);
    // p dividing the conductor is out
    CHECK_FALSE(is_exceptional(chi3, 3).exceptional);
}

TEST_CASE("theta twists into the right family slot") {
    DirichletChar chi3 = DirichletChar::from_label("3:[1]");
    DirichletChar theta = theta_from_chi(chi3, 7);
    CHECK(theta.modulus() == 21);
    CHECK(theta.conductor() == 21);
    CHECK(theta.is_primitive());
    CHECK_FALSE(theta.is_odd());  // odd times odd
    CHECK(theta.order() == 6);
    // it restricts correctly on both components
    CHECK(theta.value(8) == teichmuller_char(7).value(8) * chi3.value(8));
}
