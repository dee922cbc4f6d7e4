#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hulldim/errors.hpp"

namespace hulldim {

// Element of F_{q^2} = F_p[w]/(modulus): residues mod p in the power basis,
// low degree first, always of length 2e.  Elements do not carry their field;
// every operation goes through the owning FieldSpec, which validates shape.
struct FieldElement {
    std::vector<int64_t> c;
    bool operator==(const FieldElement&) const = default;
};

// Immutable description of F_{q^2} with q = p^e <= 2^16.  The field is built
// as a single degree-2e extension of F_p; unless a modulus is supplied, the
// lexicographically smallest monic irreducible of degree 2e is used
// (coefficient vectors compared low degree first), so two specs with the same
// (p, e) are interchangeable.  Safe to share across threads once built.
class FieldSpec {
public:
    FieldSpec(int64_t p, int e);
    FieldSpec(int64_t p, int e, std::vector<int64_t> modulus);

    int64_t p() const { return p_; }
    int e() const { return e_; }
    int64_t q() const { return q_; }
    int64_t q2() const { return q2_; }
    int degree() const { return 2 * e_; }  // over F_p
    const std::vector<int64_t>& modulus() const { return modulus_; }

    bool same_as(const FieldSpec& other) const {
        return p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_;
    }

    FieldElement zero() const;
    FieldElement one() const;
    // v reduced mod p, as an element of the prime subfield
    FieldElement from_int(int64_t v) const;
    // Canonical ordering: index = sum c_i * p^i.  element_at(index_of(a)) = a.
    FieldElement element_at(uint64_t index) const;
    uint64_t index_of(const FieldElement& a) const;

    bool is_zero(const FieldElement& a) const;
    bool is_one(const FieldElement& a) const;

    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    FieldElement div(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement inv(const FieldElement& a) const;
    FieldElement pow(const FieldElement& a, uint64_t k) const;

    // a^q, the Hermitian conjugate; an involution fixing exactly F_q.
    FieldElement conjugate(const FieldElement& a) const;

    int64_t element_order(const FieldElement& a) const;

    // Canonically smallest generator of the multiplicative group.
    const FieldElement& primitive_element() const { return primitive_; }

    // Deterministic unit of order exactly r; requires r | q+1 (the range in
    // which Hermitian duals of constacyclic codes are again constacyclic).
    FieldElement element_of_order(int64_t r) const;

    // The unique element of the same order with result^p_nu = lambda, where
    // p_nu is a power of the characteristic.
    FieldElement frobenius_root(const FieldElement& lambda, int64_t p_nu) const;

    // Text form "[c0,c1,...]": all 2e coefficients, low degree first.
    std::string to_string(const FieldElement& a) const;
    FieldElement parse_element(const std::string& text) const;

private:
    void init();
    void find_primitive();
    void validate(const FieldElement& a) const;

    int64_t p_;
    int e_;
    int64_t q_ = 0, q2_ = 0;
    std::vector<int64_t> modulus_;  // monic, length 2e+1
    std::vector<int64_t> group_primes_;  // distinct primes of q^2 - 1
    FieldElement primitive_;
};

} // namespace hulldim
