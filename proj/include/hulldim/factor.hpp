#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hulldim/poly.hpp"

namespace hulldim {

// Enforced desk-scale limits for factorization.
inline constexpr int64_t kMaxNbarTimesR = 10000;
inline constexpr int64_t kMaxSplittingDegree = 32;

// Factorization of x^n - lambda over F_{q^2} where ord(lambda) = r | q+1.
// With n = nbar * p^nu (p the characteristic, p coprime to nbar) and Lambda
// the unique order-r element with Lambda^(p^nu) = lambda,
//
//   x^n - lambda = ( prod scr_i * prod f_j * f_j^dagger )^(p^nu),
//
// where the scr_i are the self-conjugate-reciprocal monic irreducible factors
// of x^nbar - Lambda and the (f_j, f_j^dagger) are the conjugate-reciprocal
// pairs.  Factors are sorted by degree then canonical coefficient order; in
// each pair the canonically smaller polynomial comes first.
struct FactorizationReport {
    const FieldSpec* spec = nullptr;
    int64_t n = 0;
    FieldElement lambda;
    int64_t r = 0;  // ord(lambda)
    int64_t nbar = 0;
    int nu = 0;
    int64_t p_nu = 1;
    FieldElement lambda_lifted;  // Lambda

    std::vector<Poly> scr;
    std::vector<std::pair<Poly, Poly>> pairs;

    int64_t s() const { return int64_t(scr.size()); }
    int64_t t() const { return int64_t(pairs.size()); }
    int64_t scr_degree_total() const;  // sum of scr factor degrees
};

// Deterministic factorization: roots are located in the splitting field
// F_{q^2}[y]/(h) of degree ord_{nbar*r}(q^2) and grouped into q^2-power
// Frobenius orbits; each orbit yields one irreducible factor.  Enforces
// nbar*r <= 10^4 and splitting degree <= 32 (ScaleLimit).
FactorizationReport factor_xn_minus_lambda(const FieldSpec& spec, int64_t n,
                                           const FieldElement& lambda);

// prod scr_i^(p^nu) * prod (f_j f_j^dagger)^(p^nu); used as a soundness check
// and re-verified against x^n - lambda inside factor_xn_minus_lambda.
Poly reassemble(const FactorizationReport& report);

} // namespace hulldim
