#include "hulldim/extfield.hpp"

#include "hulldim/numth.hpp"

namespace hulldim {

namespace {

// Smallest monic irreducible of degree d over the base field, enumerating
// coefficient vectors lexicographically (constant coefficient is the most
// significant digit).  Kept separate from the F_p search in gf.cpp because
// the coefficients here are extension-field elements.
Poly smallest_irreducible_ext(const FieldSpec& spec, int d) {
    if (d == 1) return x_poly(spec);  // y itself: quotient is the base field
    // A zero constant coefficient means y | f, so start past that block.
    std::vector<uint64_t> digits(size_t(d), 0);
    digits[0] = 1;
    for (;;) {
        std::vector<FieldElement> c(size_t(d) + 1);
        for (int i = 0; i < d; ++i) c[size_t(i)] = spec.element_at(digits[size_t(i)]);
        c[size_t(d)] = spec.one();
        Poly f = make_poly(spec, std::move(c));
        if (is_irreducible(f)) return f;
        // odometer: last digit least significant
        int i = d - 1;
        while (i >= 0 && ++digits[size_t(i)] == uint64_t(spec.q2())) {
            digits[size_t(i)] = 0;
            --i;
        }
        if (i < 0) throw InternalInvariantViolation("smallest_irreducible_ext: search exhausted");
    }
}

} // namespace

ExtField::ExtField(const FieldSpec& base, int degree) : base_(&base), d_(degree) {
    if (degree < 1) throw DomainError("ExtField: degree must be >= 1");
    h_ = smallest_irreducible_ext(base, degree);
}

ExtField::Elem ExtField::zero() const { return Elem(size_t(d_), base_->zero()); }

ExtField::Elem ExtField::one() const {
    Elem a = zero();
    a[0] = base_->one();
    return a;
}

ExtField::Elem ExtField::embed(const FieldElement& a) const {
    Elem r = zero();
    r[0] = a;
    return r;
}

ExtField::Elem ExtField::element_at(uint64_t index) const {
    Elem a = zero();
    for (int i = 0; i < d_; ++i) {
        a[size_t(i)] = base_->element_at(index % uint64_t(base_->q2()));
        index /= uint64_t(base_->q2());
    }
    if (index != 0) throw DomainError("ExtField::element_at: index out of range");
    return a;
}

bool ExtField::is_zero(const Elem& a) const {
    for (const FieldElement& x : a)
        if (!base_->is_zero(x)) return false;
    return true;
}

bool ExtField::is_one(const Elem& a) const { return a == one(); }

ExtField::Elem ExtField::add(const Elem& a, const Elem& b) const {
    Elem r = zero();
    for (int i = 0; i < d_; ++i) r[size_t(i)] = base_->add(a[size_t(i)], b[size_t(i)]);
    return r;
}

ExtField::Elem ExtField::sub(const Elem& a, const Elem& b) const {
    Elem r = zero();
    for (int i = 0; i < d_; ++i) r[size_t(i)] = base_->sub(a[size_t(i)], b[size_t(i)]);
    return r;
}

ExtField::Elem ExtField::mul(const Elem& a, const Elem& b) const {
    if (int(a.size()) != d_ || int(b.size()) != d_)
        throw SpecMismatch("ExtField: element has wrong length");
    std::vector<FieldElement> prod(size_t(2 * d_ - 1), base_->zero());
    for (int i = 0; i < d_; ++i) {
        if (base_->is_zero(a[size_t(i)])) continue;
        for (int j = 0; j < d_; ++j)
            prod[size_t(i + j)] =
                base_->add(prod[size_t(i + j)], base_->mul(a[size_t(i)], b[size_t(j)]));
    }
    // reduce by the monic modulus
    for (int i = 2 * d_ - 2; i >= d_; --i) {
        FieldElement t = prod[size_t(i)];
        if (base_->is_zero(t)) continue;
        prod[size_t(i)] = base_->zero();
        for (int j = 0; j < d_; ++j)
            prod[size_t(i - d_ + j)] =
                base_->sub(prod[size_t(i - d_ + j)], base_->mul(t, h_.c[size_t(j)]));
    }
    prod.resize(size_t(d_));
    return prod;
}

ExtField::Elem ExtField::pow(const Elem& a, uint64_t k) const {
    Elem r = one();
    Elem base = a;
    while (k > 0) {
        if (k & 1) r = mul(r, base);
        base = mul(base, base);
        k >>= 1;
    }
    return r;
}

bool ExtField::in_base(const Elem& a) const {
    for (int i = 1; i < d_; ++i)
        if (!base_->is_zero(a[size_t(i)])) return false;
    return true;
}

FieldElement ExtField::lower(const Elem& a) const {
    if (!in_base(a)) throw InternalInvariantViolation("ExtField::lower: element not in base field");
    return a[0];
}

} // namespace hulldim
