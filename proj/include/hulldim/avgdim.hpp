#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "hulldim/factor.hpp"
#include "hulldim/rational.hpp"

namespace hulldim {

// Default cap on the number of codes a brute-force average may enumerate.
inline constexpr int64_t kDefaultEnumerationLimit = 10'000'000;

// Where the average hull dimension of the length-n family lands:
//   Zero         E_H = 0
//   LowerEighth  n/8 <= E_H < n/3
//   LowerSixth   n/6 <= E_H < n/3
//   LowerQuarter n/4 <= E_H < n/3
enum class BoundClass { Zero, LowerEighth, LowerSixth, LowerQuarter };

const char* to_string(BoundClass c);
BoundClass bound_class_from_string(const std::string& s);

struct Classification {
    BoundClass cls;
    std::string witness;  // condition that selected the class
    Rational lower;       // 0, n/8, n/6 or n/4
};

struct AvgDimReport {
    int64_t n = 0, q = 0, r = 0, p = 0;
    int nu = 0;
    int64_t nbar = 0;
    int64_t scr_degree = 0;  // total degree of self-conjugate-reciprocal factors
    Rational avg;            // exact average hull dimension E_H(n, lambda, q^2)
    BoundClass bound_class = BoundClass::Zero;
    std::string witness;
    Rational lower, upper;  // upper is always n/3
    std::optional<Rational> oracle_avg;
    std::optional<bool> oracle_agrees;
};

// Average of max(u, p_nu - u) over u uniform in {0, ..., p_nu}:
//   (3 p_nu + 1)/4 - delta/(4 (p_nu + 1)),  delta = 1 iff p_nu even.
Rational expectation_max_self(int64_t p_nu);

// Average of max(z, p_nu - w) over independent uniform z, w:
//   p_nu (4 p_nu + 5) / (6 (p_nu + 1)).
Rational expectation_max_pair(int64_t p_nu);

// Closed-form average hull dimension over all lambda-constacyclic codes of
// length n (lambda of order r, r | q+1):
//   E_H = n (1/3 - 1/(6 (p^nu + 1)))
//       - B ((p^nu + 1)/12 + (2 - 3 delta)/(12 (p^nu + 1)))
// with B the self-conjugate-reciprocal degree total.  Also classifies the
// value and re-checks the internal consistency relations (E_H < n/3; the
// nu = 0 specialization E_H = (nbar - B)/4; the B = 0 simplification; class
// interval containment).
AvgDimReport avg_hull_dim_closed(int64_t n, int64_t r, int64_t q);

// Number of codes the exponent grid enumerates: (p^nu + 1)^(s + 2t).
int64_t enumeration_count(const FactorizationReport& report);

// Independent oracle: enumerate every exponent vector and average the
// hull dimensions computed per code.  Throws ScaleLimit (carrying the count)
// when the enumeration exceeds `limit`.
Rational avg_hull_dim_bruteforce(const FieldSpec& spec, int64_t n, const FieldElement& lambda,
                                 int64_t limit = kDefaultEnumerationLimit);
Rational avg_hull_dim_enumerated(const FactorizationReport& report,
                                 int64_t limit = kDefaultEnumerationLimit);

// Second oracle on the factored form: n minus per-factor averages, each
// computed by literal summation rather than closed form.
Rational avg_hull_dim_per_factor(const FactorizationReport& report);

// Bound classifier from (n, r, q) arithmetic alone; needs no factorization.
Classification classify_bounds(int64_t n, int64_t r, int64_t q);

} // namespace hulldim
