#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "hulldim/gf.hpp"

namespace hulldim {

// Dense polynomial over F_{q^2}, coefficients low degree first with no
// trailing zeros (the zero polynomial has an empty coefficient vector).
// The owning FieldSpec must outlive the polynomial.
struct Poly {
    const FieldSpec* spec = nullptr;
    std::vector<FieldElement> c;

    int deg() const { return int(c.size()) - 1; }  // -1 for the zero polynomial
    bool is_zero() const { return c.empty(); }
    bool operator==(const Poly& o) const { return c == o.c; }
};

// Normalizes (strips trailing zeros) and validates coefficients.
Poly make_poly(const FieldSpec& spec, std::vector<FieldElement> coeffs);
Poly zero_poly(const FieldSpec& spec);
Poly one_poly(const FieldSpec& spec);
Poly x_poly(const FieldSpec& spec);
// convenience: coefficients from the prime subfield
Poly poly_from_ints(const FieldSpec& spec, std::initializer_list<int64_t> coeffs);
// x^n - lam
Poly binomial_xn_minus(const FieldSpec& spec, int64_t n, const FieldElement& lam);

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_pow(const Poly& f, int64_t k);
// (quotient, remainder); b must be nonzero
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
Poly monic(const Poly& f);
Poly poly_gcd(const Poly& a, const Poly& b);  // monic (or zero)
Poly poly_lcm(const Poly& a, const Poly& b);  // monic (or zero)
FieldElement poly_eval(const Poly& f, const FieldElement& x);

// Canonical order: by degree, then coefficient indices low degree first.
int poly_cmp(const Poly& a, const Poly& b);

// Conjugate-reciprocal f^d(x) = a_0^{-q} * sum a_i^q x^(deg-i); requires a
// nonzero constant term.  Monic input gives monic output; the roots of f^d
// are exactly alpha^{-q} for roots alpha of f.
Poly conjugate_reciprocal(const Poly& f);
bool is_self_conjugate_reciprocal(const Poly& f);

// Deterministic irreducibility over F_{q^2} via the q^2-power Frobenius
// chain; degree-0 input (or zero) is rejected as ConstantPolynomial.
bool is_irreducible(const Poly& f);

// Text form: bracketed list of element text forms, low degree first.
std::string to_string(const Poly& f);
Poly parse_poly(const FieldSpec& spec, const std::string& text);

} // namespace hulldim
