#pragma once

#include <cstdint>
#include <vector>

#include "hulldim/poly.hpp"

namespace hulldim {

// The degree-D extension F_{q^2}[y]/(h(y)) used as a splitting field.  h is
// the lexicographically smallest monic irreducible of degree D over F_{q^2}
// (coefficients compared low degree first by canonical element index), so
// construction is deterministic.  Elements are dense coefficient vectors of
// length exactly D, low degree first.
class ExtField {
public:
    using Elem = std::vector<FieldElement>;

    ExtField(const FieldSpec& base, int degree);

    const FieldSpec& base() const { return *base_; }
    int degree() const { return d_; }
    const Poly& modulus() const { return h_; }

    Elem zero() const;
    Elem one() const;
    Elem embed(const FieldElement& a) const;
    // Canonical ordering: digits of index in base q^2, low position first.
    Elem element_at(uint64_t index) const;

    bool is_zero(const Elem& a) const;
    bool is_one(const Elem& a) const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem pow(const Elem& a, uint64_t k) const;

    // True when a lies in the image of embed(), i.e. all higher coordinates
    // vanish; `lower` extracts the base-field value.
    bool in_base(const Elem& a) const;
    FieldElement lower(const Elem& a) const;

private:
    const FieldSpec* base_;
    int d_;
    Poly h_;
};

} // namespace hulldim
