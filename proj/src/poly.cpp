#include "hulldim/poly.hpp"

#include <algorithm>
#include <set>

#include "hulldim/numth.hpp"

namespace hulldim {

namespace {

const FieldSpec& common_spec(const Poly& a, const Poly& b) {
    if (!a.spec || !b.spec) throw SpecMismatch("polynomial without a field");
    if (!a.spec->same_as(*b.spec)) throw SpecMismatch("polynomials over different fields");
    return *a.spec;
}

void trim(Poly& f) {
    while (!f.c.empty() && f.spec->is_zero(f.c.back())) f.c.pop_back();
}

} // namespace

Poly make_poly(const FieldSpec& spec, std::vector<FieldElement> coeffs) {
    Poly f{&spec, std::move(coeffs)};
    for (const FieldElement& a : f.c) spec.is_zero(a);  // shape/range validation
    trim(f);
    return f;
}

Poly zero_poly(const FieldSpec& spec) { return Poly{&spec, {}}; }

Poly one_poly(const FieldSpec& spec) { return Poly{&spec, {spec.one()}}; }

Poly x_poly(const FieldSpec& spec) { return Poly{&spec, {spec.zero(), spec.one()}}; }

Poly poly_from_ints(const FieldSpec& spec, std::initializer_list<int64_t> coeffs) {
    std::vector<FieldElement> c;
    for (int64_t v : coeffs) c.push_back(spec.from_int(v));
    return make_poly(spec, std::move(c));
}

Poly binomial_xn_minus(const FieldSpec& spec, int64_t n, const FieldElement& lam) {
    if (n < 1) throw DomainError("binomial_xn_minus: need n >= 1");
    std::vector<FieldElement> c(size_t(n) + 1, spec.zero());
    c[0] = spec.neg(lam);
    c[size_t(n)] = spec.one();
    return make_poly(spec, std::move(c));
}

Poly poly_add(const Poly& a, const Poly& b) {
    const FieldSpec& spec = common_spec(a, b);
    Poly r{&spec, {}};
    r.c.resize(std::max(a.c.size(), b.c.size()), spec.zero());
    for (size_t i = 0; i < r.c.size(); ++i) {
        if (i < a.c.size()) r.c[i] = spec.add(r.c[i], a.c[i]);
        if (i < b.c.size()) r.c[i] = spec.add(r.c[i], b.c[i]);
    }
    trim(r);
    return r;
}

Poly poly_sub(const Poly& a, const Poly& b) {
    const FieldSpec& spec = common_spec(a, b);
    Poly r{&spec, {}};
    r.c.resize(std::max(a.c.size(), b.c.size()), spec.zero());
    for (size_t i = 0; i < r.c.size(); ++i) {
        if (i < a.c.size()) r.c[i] = spec.add(r.c[i], a.c[i]);
        if (i < b.c.size()) r.c[i] = spec.sub(r.c[i], b.c[i]);
    }
    trim(r);
    return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    const FieldSpec& spec = common_spec(a, b);
    if (a.is_zero() || b.is_zero()) return zero_poly(spec);
    Poly r{&spec, std::vector<FieldElement>(a.c.size() + b.c.size() - 1, spec.zero())};
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (spec.is_zero(a.c[i])) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = spec.add(r.c[i + j], spec.mul(a.c[i], b.c[j]));
    }
    trim(r);
    return r;
}

Poly poly_pow(const Poly& f, int64_t k) {
    if (!f.spec) throw SpecMismatch("polynomial without a field");
    if (k < 0) throw DomainError("poly_pow: negative exponent");
    Poly r = one_poly(*f.spec);
    Poly base = f;
    while (k > 0) {
        if (k & 1) r = poly_mul(r, base);
        base = poly_mul(base, base);
        k >>= 1;
    }
    return r;
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    const FieldSpec& spec = common_spec(a, b);
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    Poly q{&spec, {}};
    Poly r = a;
    if (a.deg() >= b.deg()) q.c.resize(size_t(a.deg() - b.deg()) + 1, spec.zero());
    FieldElement lead_inv = spec.inv(b.c.back());
    while (!r.is_zero() && r.deg() >= b.deg()) {
        int shift = r.deg() - b.deg();
        FieldElement f = spec.mul(r.c.back(), lead_inv);
        q.c[size_t(shift)] = spec.add(q.c[size_t(shift)], f);
        for (int i = 0; i <= b.deg(); ++i)
            r.c[size_t(i + shift)] = spec.sub(r.c[size_t(i + shift)], spec.mul(f, b.c[size_t(i)]));
        trim(r);
    }
    trim(q);
    return {q, r};
}

Poly monic(const Poly& f) {
    if (!f.spec) throw SpecMismatch("polynomial without a field");
    if (f.is_zero()) return f;
    const FieldSpec& spec = *f.spec;
    if (spec.is_one(f.c.back())) return f;
    FieldElement li = spec.inv(f.c.back());
    Poly r = f;
    for (FieldElement& a : r.c) a = spec.mul(a, li);
    return r;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    common_spec(a, b);
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = poly_divmod(x, y).second;
        x = y;
        y = r;
    }
    return monic(x);
}

Poly poly_lcm(const Poly& a, const Poly& b) {
    const FieldSpec& spec = common_spec(a, b);
    if (a.is_zero() || b.is_zero()) return zero_poly(spec);
    Poly g = poly_gcd(a, b);
    auto [q, rem] = poly_divmod(poly_mul(a, b), g);
    if (!rem.is_zero()) throw InternalInvariantViolation("poly_lcm: gcd does not divide product");
    return monic(q);
}

FieldElement poly_eval(const Poly& f, const FieldElement& x) {
    if (!f.spec) throw SpecMismatch("polynomial without a field");
    const FieldSpec& spec = *f.spec;
    FieldElement acc = spec.zero();
    for (size_t i = f.c.size(); i-- > 0;) acc = spec.add(spec.mul(acc, x), f.c[i]);
    return acc;
}

int poly_cmp(const Poly& a, const Poly& b) {
    const FieldSpec& spec = common_spec(a, b);
    if (a.deg() != b.deg()) return a.deg() < b.deg() ? -1 : 1;
    for (size_t i = 0; i < a.c.size(); ++i) {
        uint64_t ia = spec.index_of(a.c[i]), ib = spec.index_of(b.c[i]);
        if (ia != ib) return ia < ib ? -1 : 1;
    }
    return 0;
}

Poly conjugate_reciprocal(const Poly& f) {
    if (!f.spec) throw SpecMismatch("polynomial without a field");
    const FieldSpec& spec = *f.spec;
    if (f.is_zero() || spec.is_zero(f.c.front()))
        throw ZeroConstantTerm("conjugate_reciprocal: constant term must be nonzero");
    FieldElement scale = spec.inv(spec.conjugate(f.c.front()));
    Poly r{&spec, std::vector<FieldElement>(f.c.size(), spec.zero())};
    size_t k = f.c.size() - 1;
    for (size_t i = 0; i < f.c.size(); ++i)
        r.c[k - i] = spec.mul(scale, spec.conjugate(f.c[i]));
    trim(r);  // top coefficient conj(a_0)*scale is nonzero, but keep the invariant
    return r;
}

bool is_self_conjugate_reciprocal(const Poly& f) { return f == conjugate_reciprocal(f); }

namespace {

// h^e mod m over F_{q^2}
Poly poly_powmod(Poly h, uint64_t e, const Poly& m) {
    Poly r = one_poly(*m.spec);
    while (e > 0) {
        if (e & 1) r = poly_divmod(poly_mul(r, h), m).second;
        h = poly_divmod(poly_mul(h, h), m).second;
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_irreducible(const Poly& f) {
    if (!f.spec) throw SpecMismatch("polynomial without a field");
    if (f.deg() < 1) throw ConstantPolynomial("is_irreducible: input must have degree >= 1");
    if (f.deg() == 1) return true;
    const FieldSpec& spec = *f.spec;
    int d = f.deg();
    std::set<int> checkpoints;
    for (auto [l, e] : factorize(d)) checkpoints.insert(d / int(l));
    Poly x = poly_divmod(x_poly(spec), f).second;
    Poly h = x;
    for (int i = 1; i <= d; ++i) {
        h = poly_powmod(h, uint64_t(spec.q2()), f);
        if (checkpoints.count(i)) {
            Poly g = poly_gcd(poly_sub(h, x), f);
            if (g.deg() != 0) return false;
        }
    }
    return h == x;
}

std::string to_string(const Poly& f) {
    if (!f.spec) throw SpecMismatch("polynomial without a field");
    std::string s = "[";
    for (size_t i = 0; i < f.c.size(); ++i) {
        if (i) s += ",";
        s += f.spec->to_string(f.c[i]);
    }
    return s + "]";
}

Poly parse_poly(const FieldSpec& spec, const std::string& text) {
    size_t i = 0, n = text.size();
    auto skip_ws = [&] { while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    if (i >= n || text[i] != '[') throw SpecMismatch("parse_poly: expected '['");
    ++i;
    std::vector<FieldElement> coeffs;
    skip_ws();
    if (i < n && text[i] == ']') {
        ++i;
    } else {
        for (;;) {
            skip_ws();
            if (i >= n || text[i] != '[') throw SpecMismatch("parse_poly: expected element '['");
            size_t start = i;
            while (i < n && text[i] != ']') ++i;
            if (i >= n) throw SpecMismatch("parse_poly: unterminated element");
            ++i;
            coeffs.push_back(spec.parse_element(text.substr(start, i - start)));
            skip_ws();
            if (i < n && text[i] == ',') {
                ++i;
                continue;
            }
            if (i < n && text[i] == ']') {
                ++i;
                break;
            }
            throw SpecMismatch("parse_poly: expected ',' or ']'");
        }
    }
    skip_ws();
    if (i != n) throw SpecMismatch("parse_poly: trailing characters");
    return make_poly(spec, std::move(coeffs));
}

} // namespace hulldim
