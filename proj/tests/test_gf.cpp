#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "hulldim/gf.hpp"
#include "hulldim/numth.hpp"

using namespace hulldim;

TEST_CASE("F_4 is built on the expected modulus and arithmetic") {
    FieldSpec f4(2, 1);
    CHECK(f4.q() == 2);
    CHECK(f4.q2() == 4);
    // smallest monic irreducible of degree 2 over F_2 is x^2 + x + 1
    CHECK(f4.modulus() == std::vector<int64_t>{1, 1, 1});

    FieldElement w{{0, 1}};
    FieldElement w_plus_1{{1, 1}};
    CHECK(f4.mul(w, w) == w_plus_1);
    CHECK(f4.mul(w, w_plus_1) == f4.one());  // w^3 = 1
    CHECK(f4.conjugate(w) == w_plus_1);      // w^q = w^2
    CHECK(f4.element_order(w) == 3);
    CHECK(f4.element_order(f4.one()) == 1);
    // canonical ordering makes w the smallest primitive element
    CHECK(f4.primitive_element() == w);
}

TEST_CASE("F_9 arithmetic and conjugation") {
    FieldSpec f9(3, 1);
    CHECK(f9.modulus() == std::vector<int64_t>{1, 0, 1});  // x^2 + 1

    FieldElement minus_one = f9.neg(f9.one());
    CHECK(minus_one == FieldElement{{2, 0}});
    CHECK(f9.mul(minus_one, minus_one) == f9.one());
    CHECK(f9.element_order(minus_one) == 2);

    FieldElement i{{0, 1}};  // i^2 = -1
    CHECK(f9.mul(i, i) == minus_one);
    CHECK(f9.conjugate(i) == f9.neg(i));  // i^3 = -i
}

TEST_CASE("field identities hold on every element of small fields") {
    for (auto [p, e] : {std::pair<int64_t, int>{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
        FieldSpec spec(p, e);
        for (uint64_t ia = 0; ia < uint64_t(spec.q2()); ++ia) {
            FieldElement a = spec.element_at(ia);
            CHECK(spec.add(a, spec.zero()) == a);
            CHECK(spec.mul(a, spec.one()) == a);
            CHECK(spec.add(a, spec.neg(a)) == spec.zero());
            CHECK(spec.index_of(a) == ia);
            CHECK(spec.parse_element(spec.to_string(a)) == a);
            if (!spec.is_zero(a)) {
                CHECK(spec.mul(a, spec.inv(a)) == spec.one());
                CHECK(spec.is_one(spec.pow(a, uint64_t(spec.q2() - 1))));
                CHECK(spec.element_order(a) > 0);
                CHECK((spec.q2() - 1) % spec.element_order(a) == 0);
            }
            // conjugation is an involutive automorphism
            CHECK(spec.conjugate(spec.conjugate(a)) == a);
            for (uint64_t ib = 0; ib < uint64_t(spec.q2()); ++ib) {
                FieldElement b = spec.element_at(ib);
                CHECK(spec.conjugate(spec.mul(a, b)) ==
                      spec.mul(spec.conjugate(a), spec.conjugate(b)));
            }
        }
        // the fixed field of conjugation is exactly F_q
        int64_t fixed = 0;
        for (uint64_t ia = 0; ia < uint64_t(spec.q2()); ++ia) {
            FieldElement a = spec.element_at(ia);
            if (spec.conjugate(a) == a) ++fixed;
        }
        CHECK(fixed == spec.q());
    }
}

TEST_CASE("element_of_order produces exact orders for every r | q+1") {
    for (auto [p, e] : {std::pair<int64_t, int>{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1},
                        {2, 3}, {3, 2}}) {
        FieldSpec spec(p, e);
        for (int64_t r : divisors(spec.q() + 1)) {
            FieldElement lam = spec.element_of_order(r);
            CHECK(spec.is_one(spec.pow(lam, uint64_t(r))));
            for (auto [l, k] : factorize(r))
                CHECK(!spec.is_one(spec.pow(lam, uint64_t(r / l))));
        }
    }
}

TEST_CASE("element_of_order rejects orders outside q+1") {
    FieldSpec f4(2, 1);
    CHECK_THROWS_AS(f4.element_of_order(2), UnsupportedOrder);  // 2 does not divide 3
    FieldSpec f9(3, 1);
    CHECK_THROWS_AS(f9.element_of_order(3), UnsupportedOrder);  // 3 does not divide 4
    CHECK_THROWS_AS(f9.element_of_order(8), UnsupportedOrder);  // 8 | q^2-1 but not q+1
}

TEST_CASE("frobenius_root undoes the p^nu power map on the order-r subgroup") {
    FieldSpec f9(3, 1);
    FieldElement lam = f9.element_of_order(4);
    FieldElement Lam = f9.frobenius_root(lam, 3);
    CHECK(f9.pow(Lam, 3) == lam);
    CHECK(f9.element_order(Lam) == 4);
    CHECK(Lam == f9.pow(lam, 3));  // (3)^-1 = 3 mod 4

    CHECK(f9.frobenius_root(lam, 1) == lam);
    CHECK(f9.frobenius_root(f9.one(), 27) == f9.one());

    FieldSpec f4(2, 1);
    FieldElement w = f4.element_of_order(3);
    for (int64_t p_nu : {1, 2, 4, 8}) {
        FieldElement lift = f4.frobenius_root(w, p_nu);
        CHECK(f4.pow(lift, uint64_t(p_nu)) == w);
        CHECK(f4.element_order(lift) == 3);
    }
    CHECK_THROWS_AS(f4.frobenius_root(w, 3), DomainError);  // 3 is not a power of 2
}

TEST_CASE("construction rejects invalid parameters") {
    CHECK_THROWS_AS(FieldSpec(4, 1), DomainError);   // p must be prime
    CHECK_THROWS_AS(FieldSpec(2, 0), DomainError);   // e >= 1
    CHECK_THROWS_AS(FieldSpec(2, 17), DomainError);  // q > 2^16
    CHECK_THROWS_AS(FieldSpec(2, 1, {1, 0, 1}), DomainError);  // (x+1)^2 is reducible
    // explicit modulus equal to the canonical one is accepted
    FieldSpec f4(2, 1, {1, 1, 1});
    CHECK(f4.same_as(FieldSpec(2, 1)));
}

TEST_CASE("operations reject foreign and malformed elements") {
    FieldSpec f4(2, 1);
    FieldSpec f9(3, 1);
    FieldElement two_of_f9{{2, 0}};
    CHECK_THROWS_AS(f4.add(f4.one(), two_of_f9), SpecMismatch);  // coefficient 2 not mod 2
    FieldElement wrong_len{{1, 0, 0, 0}};
    CHECK_THROWS_AS(f9.mul(f9.one(), wrong_len), SpecMismatch);
    CHECK_THROWS_AS(f4.inv(f4.zero()), DivisionByZero);
    CHECK_THROWS_AS(f4.div(f4.one(), f4.zero()), DivisionByZero);
    CHECK_THROWS_AS(f4.element_order(f4.zero()), ZeroHasNoOrder);
}

TEST_CASE("element text form") {
    FieldSpec f4(2, 1);
    FieldElement w{{0, 1}};
    CHECK(f4.to_string(w) == "[0,1]");
    CHECK(f4.parse_element("[0,1]") == w);
    CHECK(f4.parse_element(" [ 0 , 1 ] ") == w);
    CHECK(f4.parse_element("[1]") == f4.one());      // short vectors are zero-padded
    CHECK(f4.parse_element("[-1,0]") == f4.one());   // values reduced mod p
    CHECK_THROWS_AS(f4.parse_element("[1,0,1]"), SpecMismatch);  // too many coefficients
    CHECK_THROWS_AS(f4.parse_element("1,0"), SpecMismatch);
    CHECK_THROWS_AS(f4.parse_element("[1,x]"), SpecMismatch);
}
