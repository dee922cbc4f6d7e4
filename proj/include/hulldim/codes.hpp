#pragma once

#include <cstdint>
#include <vector>

#include "hulldim/factor.hpp"

namespace hulldim {

// A lambda-constacyclic code of length n over F_{q^2}: the ideal of
// F_{q^2}[x]/(x^n - lambda) generated by a monic divisor g of x^n - lambda.
// The generator is recorded by its exponent vector with respect to the
// factorization report: first the exponents of the self-conjugate-reciprocal
// factors (u), then of the first members of the pairs (z), then of their
// daggers (w); all lie in [0, p^nu].  The report must outlive the code.
struct ConstacyclicCode {
    const FactorizationReport* report = nullptr;
    std::vector<int64_t> exps;
    Poly g;

    int64_t n() const { return report->n; }
    int64_t dim() const { return report->n - g.deg(); }
};

ConstacyclicCode make_code(const FactorizationReport& report, std::vector<int64_t> exps);

// Exponent arithmetic: the Hermitian dual of g = prod scr^u f^z fdag^w is
// generated by prod scr^(p^nu - u) f^(p^nu - w) fdag^(p^nu - z) (note the
// swap inside each pair), and the hull by the coordinatewise max of the two.
std::vector<int64_t> dual_exponents(const FactorizationReport& report,
                                    const std::vector<int64_t>& exps);
std::vector<int64_t> hull_exponents(const FactorizationReport& report,
                                    const std::vector<int64_t>& exps);
Poly poly_from_exponents(const FactorizationReport& report, const std::vector<int64_t>& exps);

// Generator of the Hermitian dual.  Computed from the exponent rule and,
// independently, as conjugate_reciprocal((x^n - lambda)/g); the two must
// agree (InternalInvariantViolation otherwise).
Poly dual_generator(const ConstacyclicCode& code);

// Generator of Hull(C) = C intersect C^dual; exponent rule cross-checked
// against lcm(g, dual generator).
Poly hull_generator(const ConstacyclicCode& code);

// dim Hull(C) by exponent arithmetic only (no polynomial products); equals
// n - deg(hull_generator) -- enforced by tests across the grid.
int64_t hull_dimension(const ConstacyclicCode& code);
int64_t hull_dimension_for_exponents(const FactorizationReport& report,
                                     const std::vector<int64_t>& exps);

} // namespace hulldim
