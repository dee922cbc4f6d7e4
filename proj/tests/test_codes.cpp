#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "hulldim/codes.hpp"
#include "hulldim/numth.hpp"

using namespace hulldim;

namespace {

// all exponent vectors of the given arity with entries in [0, p_nu]
std::vector<std::vector<int64_t>> all_exponents(int64_t arity, int64_t p_nu) {
    std::vector<std::vector<int64_t>> out{{}};
    for (int64_t i = 0; i < arity; ++i) {
        std::vector<std::vector<int64_t>> next;
        for (const auto& v : out)
            for (int64_t e = 0; e <= p_nu; ++e) {
                auto w = v;
                w.push_back(e);
                next.push_back(std::move(w));
            }
        out = std::move(next);
    }
    return out;
}

} // namespace

TEST_CASE("binary length-5 family over F_4: every code inspected") {
    FieldSpec f4(2, 1);
    FactorizationReport rep = factor_xn_minus_lambda(f4, 5, f4.one());
    REQUIRE(rep.s() == 1);
    REQUIRE(rep.t() == 1);

    std::map<int64_t, int> hull_dim_census;
    for (const auto& exps : all_exponents(3, rep.p_nu)) {
        ConstacyclicCode code = make_code(rep, exps);
        CHECK(code.dim() == 5 - code.g.deg());
        Poly dual = dual_generator(code);
        CHECK(code.g.deg() + dual.deg() == 5);  // dim C + dim C^perp = n
        Poly hull = hull_generator(code);
        // hull generator is a common multiple of both generators
        CHECK(poly_divmod(hull, code.g).second.is_zero());
        CHECK(poly_divmod(hull, dual).second.is_zero());
        int64_t hd = hull_dimension(code);
        CHECK(hd == 5 - hull.deg());
        ++hull_dim_census[hd];
        // the hull is self-dual as a set: same hull from the dual code
        ConstacyclicCode dual_code = make_code(rep, dual_exponents(rep, exps));
        CHECK(dual_code.g == dual);
        CHECK(hull_generator(dual_code) == hull);
    }
    REQUIRE(hull_dim_census.size() == 2);
    CHECK(hull_dim_census[0] == 4);
    CHECK(hull_dim_census[2] == 4);  // average over the family: 1
}

TEST_CASE("frozen example: the [0,1,0] code of the length-5 family") {
    FieldSpec f4(2, 1);
    FactorizationReport rep = factor_xn_minus_lambda(f4, 5, f4.one());
    ConstacyclicCode code = make_code(rep, {0, 1, 0});
    CHECK(code.g == rep.pairs[0].first);
    CHECK(code.dim() == 3);
    CHECK(dual_exponents(rep, {0, 1, 0}) == std::vector<int64_t>{1, 1, 0});
    Poly dual = dual_generator(code);
    CHECK(dual.deg() == 3);
    CHECK(dual == poly_mul(rep.scr[0], rep.pairs[0].first));
    CHECK(hull_exponents(rep, {0, 1, 0}) == std::vector<int64_t>{1, 1, 0});
    CHECK(hull_dimension(code) == 2);
}

TEST_CASE("repeated-root family: x^8 - 1 over F_4") {
    FieldSpec f4(2, 1);
    FactorizationReport rep = factor_xn_minus_lambda(f4, 8, f4.one());
    REQUIRE(rep.p_nu == 8);
    REQUIRE(rep.s() == 1);
    REQUIRE(rep.t() == 0);
    for (int64_t u = 0; u <= 8; ++u) {
        ConstacyclicCode code = make_code(rep, {u});
        CHECK(code.g.deg() == u);
        CHECK(dual_exponents(rep, {u}) == std::vector<int64_t>{8 - u});
        CHECK(hull_dimension(code) == 8 - std::max(u, 8 - u));
    }
}

TEST_CASE("exponent vectors are validated") {
    FieldSpec f4(2, 1);
    FactorizationReport rep = factor_xn_minus_lambda(f4, 5, f4.one());
    CHECK_THROWS_AS(make_code(rep, {0, 1}), ExponentRange);        // wrong arity
    CHECK_THROWS_AS(make_code(rep, {0, 1, 0, 0}), ExponentRange);  // wrong arity
    CHECK_THROWS_AS(make_code(rep, {0, 2, 0}), ExponentRange);     // entry > p_nu
    CHECK_THROWS_AS(make_code(rep, {0, -1, 0}), ExponentRange);    // negative entry
}

TEST_CASE("exponent rule agrees with polynomial arithmetic across a grid") {
    for (auto [p, e] : {std::pair<int64_t, int>{2, 1}, {3, 1}}) {
        FieldSpec spec(p, e);
        for (int64_t r : divisors(spec.q() + 1)) {
            FieldElement lam = spec.element_of_order(r);
            for (int64_t n = 1; n <= 8; ++n) {
                FactorizationReport rep = factor_xn_minus_lambda(spec, n, lam);
                int64_t arity = rep.s() + 2 * rep.t();
                if (checked_pow(rep.p_nu + 1, arity) > 512) continue;
                Poly xn = binomial_xn_minus(spec, n, lam);
                for (const auto& exps : all_exponents(arity, rep.p_nu)) {
                    CAPTURE(p);
                    CAPTURE(r);
                    CAPTURE(n);
                    ConstacyclicCode code = make_code(rep, exps);
                    // generator divides x^n - lambda
                    CHECK(poly_divmod(xn, code.g).second.is_zero());
                    // dual_generator and hull_generator each compute the
                    // exponent route and the direct polynomial route and
                    // throw on disagreement; reaching here means they agree
                    Poly dual = dual_generator(code);
                    Poly hull = hull_generator(code);
                    CHECK(hull == poly_lcm(code.g, dual));
                    CHECK(hull_dimension(code) == n - hull.deg());
                    CHECK(hull_dimension(code) ==
                          hull_dimension_for_exponents(rep, exps));
                    // hull sits inside both the code and its dual
                    int64_t dim = n - code.g.deg();
                    CHECK(hull_dimension(code) <= std::min(dim, n - dim));
                    CHECK(dim + (n - dual.deg()) == n);
                    // the dual's hull is the same subspace
                    ConstacyclicCode dual_code = make_code(rep, dual_exponents(rep, exps));
                    CHECK(hull_generator(dual_code) == hull);
                    // duality is an involution on exponent vectors
                    CHECK(dual_exponents(rep, dual_exponents(rep, exps)) == exps);
                }
            }
        }
    }
}
