#include "hulldim/codes.hpp"

namespace hulldim {

namespace {

void check_exponents(const FactorizationReport& report, const std::vector<int64_t>& exps) {
    size_t want = size_t(report.s() + 2 * report.t());
    if (exps.size() != want)
        throw ExponentRange("exponent vector has " + std::to_string(exps.size()) +
                            " entries, expected " + std::to_string(want));
    for (int64_t e : exps)
        if (e < 0 || e > report.p_nu)
            throw ExponentRange("exponent " + std::to_string(e) + " outside [0, " +
                                std::to_string(report.p_nu) + "]");
}

} // namespace

ConstacyclicCode make_code(const FactorizationReport& report, std::vector<int64_t> exps) {
    check_exponents(report, exps);
    Poly g = poly_from_exponents(report, exps);
    return ConstacyclicCode{&report, std::move(exps), std::move(g)};
}

Poly poly_from_exponents(const FactorizationReport& report, const std::vector<int64_t>& exps) {
    check_exponents(report, exps);
    Poly g = one_poly(*report.spec);
    size_t s = size_t(report.s()), t = size_t(report.t());
    for (size_t i = 0; i < s; ++i) g = poly_mul(g, poly_pow(report.scr[i], exps[i]));
    for (size_t j = 0; j < t; ++j) {
        g = poly_mul(g, poly_pow(report.pairs[j].first, exps[s + j]));
        g = poly_mul(g, poly_pow(report.pairs[j].second, exps[s + t + j]));
    }
    return g;
}

std::vector<int64_t> dual_exponents(const FactorizationReport& report,
                                    const std::vector<int64_t>& exps) {
    check_exponents(report, exps);
    size_t s = size_t(report.s()), t = size_t(report.t());
    std::vector<int64_t> d(exps.size());
    for (size_t i = 0; i < s; ++i) d[i] = report.p_nu - exps[i];
    for (size_t j = 0; j < t; ++j) {
        d[s + j] = report.p_nu - exps[s + t + j];      // f picks up p^nu - w
        d[s + t + j] = report.p_nu - exps[s + j];      // fdag picks up p^nu - z
    }
    return d;
}

std::vector<int64_t> hull_exponents(const FactorizationReport& report,
                                    const std::vector<int64_t>& exps) {
    std::vector<int64_t> d = dual_exponents(report, exps);
    std::vector<int64_t> h(exps.size());
    for (size_t i = 0; i < exps.size(); ++i) h[i] = std::max(exps[i], d[i]);
    return h;
}

Poly dual_generator(const ConstacyclicCode& code) {
    const FactorizationReport& rep = *code.report;
    Poly by_exponents = poly_from_exponents(rep, dual_exponents(rep, code.exps));
    // independent route: dagger of the check polynomial
    auto [h, rem] = poly_divmod(binomial_xn_minus(*rep.spec, rep.n, rep.lambda), code.g);
    if (!rem.is_zero())
        throw InternalInvariantViolation("dual_generator: generator does not divide x^n - lambda");
    Poly by_dagger = monic(conjugate_reciprocal(h));
    if (!(by_exponents == by_dagger))
        throw InternalInvariantViolation("dual_generator: exponent rule and dagger route disagree");
    return by_exponents;
}

Poly hull_generator(const ConstacyclicCode& code) {
    const FactorizationReport& rep = *code.report;
    Poly by_exponents = poly_from_exponents(rep, hull_exponents(rep, code.exps));
    Poly by_lcm = poly_lcm(code.g, dual_generator(code));
    if (!(by_exponents == by_lcm))
        throw InternalInvariantViolation("hull_generator: exponent rule and lcm route disagree");
    return by_exponents;
}

int64_t hull_dimension_for_exponents(const FactorizationReport& report,
                                     const std::vector<int64_t>& exps) {
    check_exponents(report, exps);
    size_t s = size_t(report.s()), t = size_t(report.t());
    int64_t dim = report.n;
    for (size_t i = 0; i < s; ++i)
        dim -= report.scr[i].deg() * std::max(exps[i], report.p_nu - exps[i]);
    for (size_t j = 0; j < t; ++j) {
        int64_t z = exps[s + j], w = exps[s + t + j];
        dim -= report.pairs[j].first.deg() *
               (std::max(z, report.p_nu - w) + std::max(w, report.p_nu - z));
    }
    return dim;
}

int64_t hull_dimension(const ConstacyclicCode& code) {
    return hull_dimension_for_exponents(*code.report, code.exps);
}

} // namespace hulldim
