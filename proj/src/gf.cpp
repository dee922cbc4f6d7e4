#include "hulldim/gf.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "hulldim/numth.hpp"

namespace hulldim {

namespace {

// ---- dense F_p[x] helpers for building and using the modulus --------------
// Vectors of residues, low degree first, not necessarily trimmed.

using FpPoly = std::vector<int64_t>;

int fp_deg(const FpPoly& f) {
    for (int i = int(f.size()) - 1; i >= 0; --i)
        if (f[i] != 0) return i;
    return -1;
}

int64_t fp_inv_scalar(int64_t a, int64_t p) { return pow_mod(a, p - 2, p); }

// a * b reduced mod the monic polynomial `mod`
FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& mod, int64_t p) {
    int dm = fp_deg(mod);
    FpPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    for (int i = int(r.size()) - 1; i >= dm; --i) {
        int64_t t = r[i];
        if (t == 0) continue;
        r[i] = 0;
        for (int j = 0; j < dm; ++j) r[i - dm + j] = ((r[i - dm + j] - t * mod[j]) % p + p) % p;
    }
    r.resize(dm);
    return r;
}

FpPoly fp_powmod(FpPoly base, int64_t e, const FpPoly& mod, int64_t p) {
    FpPoly r(fp_deg(mod), 0);
    r[0] = 1;
    while (e > 0) {
        if (e & 1) r = fp_mulmod(r, base, mod, p);
        base = fp_mulmod(base, base, mod, p);
        e >>= 1;
    }
    return r;
}

FpPoly fp_mod(FpPoly a, const FpPoly& b, int64_t p) {
    int db = fp_deg(b);
    int64_t lead_inv = fp_inv_scalar(b[db], p);
    for (int i = fp_deg(a); i >= db; --i) {
        int64_t t = a[i] % p * lead_inv % p;
        if (t == 0) continue;
        for (int j = 0; j <= db; ++j) a[i - db + j] = ((a[i - db + j] - t * b[j]) % p + p) % p;
    }
    a.resize(std::max(db, 1));
    return a;
}

bool fp_is_one(const FpPoly& f) { return fp_deg(f) == 0 && f[0] == 1; }

FpPoly fp_gcd(FpPoly a, FpPoly b, int64_t p) {
    while (fp_deg(b) >= 0) {
        FpPoly r = fp_mod(a, b, p);
        a = b;
        b = r;
    }
    int da = fp_deg(a);
    if (da >= 0) {
        int64_t li = fp_inv_scalar(a[da], p);
        for (auto& c : a) c = c * li % p;
    }
    return a;
}

// Deterministic irreducibility over F_p: x^(p^d) = x mod f together with
// gcd(x^(p^(d/l)) - x, f) = 1 for every prime l | d.
bool fp_is_irreducible(const FpPoly& f, int64_t p) {
    int d = fp_deg(f);
    if (d < 1) return false;
    if (d == 1) return true;
    if (f[0] == 0) return false;  // divisible by x
    std::set<int> checkpoints;
    for (auto [l, e] : factorize(d)) checkpoints.insert(d / int(l));
    FpPoly x{0, 1};
    FpPoly h = x;
    for (int i = 1; i <= d; ++i) {
        h = fp_powmod(h, p, f, p);
        if (checkpoints.count(i)) {
            FpPoly diff = h;
            diff.resize(std::max<size_t>(diff.size(), 2), 0);
            diff[1] = ((diff[1] - 1) % p + p) % p;
            if (!fp_is_one(fp_gcd(diff, f, p))) return false;
        }
    }
    h.resize(std::max<size_t>(h.size(), 2), 0);
    return fp_deg(h) == 1 && h[0] == 0 && h[1] == 1;
}

// Lexicographically smallest monic irreducible of degree d over F_p, with
// coefficient vectors compared low degree first.
FpPoly smallest_irreducible(int64_t p, int d) {
    // Enumerate coefficient vectors in lexicographic order: c0 is the most
    // significant digit.  c0 = 0 would make the polynomial divisible by x,
    // so start past that block.
    int64_t span = checked_pow(p, d);
    int64_t start = span / p;  // first candidate with c0 = 1
    for (int64_t v = start; v < span; ++v) {
        FpPoly f(d + 1, 0);
        f[d] = 1;
        int64_t rest = v;
        for (int i = d - 1; i >= 0; --i) {
            f[d - 1 - i] = rest / checked_pow(p, i) % p;
            rest %= checked_pow(p, i);
        }
        if (fp_is_irreducible(f, p)) return f;
    }
    throw InternalInvariantViolation("smallest_irreducible: no irreducible found");
}

} // namespace

FieldSpec::FieldSpec(int64_t p, int e) : p_(p), e_(e) {
    init();
    modulus_ = smallest_irreducible(p_, degree());
    find_primitive();
}

FieldSpec::FieldSpec(int64_t p, int e, std::vector<int64_t> modulus) : p_(p), e_(e) {
    init();
    if (int(modulus.size()) != degree() + 1 || modulus.back() != 1)
        throw DomainError("FieldSpec: modulus must be monic of degree 2e");
    for (int64_t c : modulus)
        if (c < 0 || c >= p_) throw DomainError("FieldSpec: modulus coefficients must lie in [0,p)");
    if (!fp_is_irreducible(modulus, p_))
        throw DomainError("FieldSpec: modulus is not irreducible over F_p");
    modulus_ = std::move(modulus);
    find_primitive();
}

// canonically smallest generator of the multiplicative group
void FieldSpec::find_primitive() {
    for (uint64_t idx = 1; idx < uint64_t(q2_); ++idx) {
        FieldElement a = element_at(idx);
        if (element_order(a) == q2_ - 1) {
            primitive_ = a;
            return;
        }
    }
    throw InternalInvariantViolation("FieldSpec: no primitive element found");
}

void FieldSpec::init() {
    if (!is_prime(p_)) throw DomainError("FieldSpec: p must be prime");
    if (e_ < 1) throw DomainError("FieldSpec: e must be >= 1");
    q_ = 1;
    for (int i = 0; i < e_; ++i) {
        q_ = checked_mul(q_, p_);
        if (q_ > (int64_t(1) << 16)) throw DomainError("FieldSpec: q = p^e must be <= 2^16");
    }
    q2_ = checked_mul(q_, q_);
    for (auto [l, e] : factorize(q2_ - 1)) group_primes_.push_back(l);
}

void FieldSpec::validate(const FieldElement& a) const {
    if (int(a.c.size()) != degree())
        throw SpecMismatch("element has wrong coefficient count for this field");
    for (int64_t c : a.c)
        if (c < 0 || c >= p_) throw SpecMismatch("element coefficient out of range for this field");
}

FieldElement FieldSpec::zero() const { return FieldElement{std::vector<int64_t>(degree(), 0)}; }

FieldElement FieldSpec::one() const { return from_int(1); }

FieldElement FieldSpec::from_int(int64_t v) const {
    FieldElement a = zero();
    a.c[0] = ((v % p_) + p_) % p_;
    return a;
}

FieldElement FieldSpec::element_at(uint64_t index) const {
    if (index >= uint64_t(q2_)) throw DomainError("element_at: index out of range");
    FieldElement a = zero();
    for (int i = 0; i < degree(); ++i) {
        a.c[i] = int64_t(index % uint64_t(p_));
        index /= uint64_t(p_);
    }
    return a;
}

uint64_t FieldSpec::index_of(const FieldElement& a) const {
    validate(a);
    uint64_t idx = 0;
    for (int i = degree() - 1; i >= 0; --i) idx = idx * uint64_t(p_) + uint64_t(a.c[i]);
    return idx;
}

bool FieldSpec::is_zero(const FieldElement& a) const {
    validate(a);
    return std::all_of(a.c.begin(), a.c.end(), [](int64_t c) { return c == 0; });
}

bool FieldSpec::is_one(const FieldElement& a) const {
    validate(a);
    return a == one();
}

FieldElement FieldSpec::add(const FieldElement& a, const FieldElement& b) const {
    validate(a);
    validate(b);
    FieldElement r = zero();
    for (int i = 0; i < degree(); ++i) r.c[i] = (a.c[i] + b.c[i]) % p_;
    return r;
}

FieldElement FieldSpec::sub(const FieldElement& a, const FieldElement& b) const {
    validate(a);
    validate(b);
    FieldElement r = zero();
    for (int i = 0; i < degree(); ++i) r.c[i] = ((a.c[i] - b.c[i]) % p_ + p_) % p_;
    return r;
}

FieldElement FieldSpec::neg(const FieldElement& a) const { return sub(zero(), a); }

FieldElement FieldSpec::mul(const FieldElement& a, const FieldElement& b) const {
    validate(a);
    validate(b);
    FieldElement r = zero();
    r.c = fp_mulmod(a.c, b.c, modulus_, p_);
    r.c.resize(degree(), 0);
    return r;
}

FieldElement FieldSpec::pow(const FieldElement& a, uint64_t k) const {
    validate(a);
    FieldElement r = one();
    FieldElement base = a;
    while (k > 0) {
        if (k & 1) r = mul(r, base);
        base = mul(base, base);
        k >>= 1;
    }
    return r;
}

FieldElement FieldSpec::inv(const FieldElement& a) const {
    if (is_zero(a)) throw DivisionByZero("inverse of zero");
    return pow(a, uint64_t(q2_ - 2));
}

FieldElement FieldSpec::div(const FieldElement& a, const FieldElement& b) const {
    return mul(a, inv(b));
}

FieldElement FieldSpec::conjugate(const FieldElement& a) const { return pow(a, uint64_t(q_)); }

int64_t FieldSpec::element_order(const FieldElement& a) const {
    if (is_zero(a)) throw ZeroHasNoOrder("order of zero is undefined");
    int64_t o = q2_ - 1;
    for (int64_t l : group_primes_) {
        while (o % l == 0 && is_one(pow(a, uint64_t(o / l)))) o /= l;
    }
    return o;
}

FieldElement FieldSpec::element_of_order(int64_t r) const {
    if (r < 1) throw DomainError("element_of_order: need r >= 1");
    if ((q_ + 1) % r != 0)
        throw UnsupportedOrder("element_of_order: r = " + std::to_string(r) +
                               " does not divide q+1 = " + std::to_string(q_ + 1));
    FieldElement lam = pow(primitive_, uint64_t((q2_ - 1) / r));
    if (element_order(lam) != r)
        throw InternalInvariantViolation("element_of_order: constructed element has wrong order");
    return lam;
}

FieldElement FieldSpec::frobenius_root(const FieldElement& lambda, int64_t p_nu) const {
    int64_t t = p_nu;
    while (t > 1 && t % p_ == 0) t /= p_;
    if (t != 1) throw DomainError("frobenius_root: p_nu must be a power of the characteristic");
    int64_t r = element_order(lambda);
    if (r == 1) return lambda;
    // p_nu is invertible mod r (r | q+1 is coprime to p); the inverse exponent
    // undoes the p_nu-power Frobenius on the order-r subgroup.
    int64_t a = p_nu % r, a_inv = -1;
    for (int64_t k = 1; k < r; ++k)
        if (a * k % r == 1) {
            a_inv = k;
            break;
        }
    if (a_inv < 0) throw DomainError("frobenius_root: p_nu not invertible modulo ord(lambda)");
    FieldElement result = pow(lambda, uint64_t(a_inv));
    if (element_order(result) != r || !(pow(result, uint64_t(p_nu)) == lambda))
        throw InternalInvariantViolation("frobenius_root: lift check failed");
    return result;
}

std::string FieldSpec::to_string(const FieldElement& a) const {
    validate(a);
    std::string s = "[";
    for (int i = 0; i < degree(); ++i) {
        if (i) s += ",";
        s += std::to_string(a.c[i]);
    }
    return s + "]";
}

FieldElement FieldSpec::parse_element(const std::string& text) const {
    size_t i = 0, n = text.size();
    auto skip_ws = [&] { while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    if (i >= n || text[i] != '[') throw SpecMismatch("parse_element: expected '['");
    ++i;
    std::vector<int64_t> coeffs;
    skip_ws();
    if (i < n && text[i] == ']') {
        ++i;
    } else {
        for (;;) {
            skip_ws();
            size_t start = i;
            if (i < n && (text[i] == '-' || text[i] == '+')) ++i;
            while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == start) throw SpecMismatch("parse_element: expected integer");
            try {
                coeffs.push_back(std::stoll(text.substr(start, i - start)));
            } catch (const std::exception&) {
                throw SpecMismatch("parse_element: coefficient out of range");
            }
            skip_ws();
            if (i < n && text[i] == ',') {
                ++i;
                continue;
            }
            if (i < n && text[i] == ']') {
                ++i;
                break;
            }
            throw SpecMismatch("parse_element: expected ',' or ']'");
        }
    }
    skip_ws();
    if (i != n) throw SpecMismatch("parse_element: trailing characters");
    if (int(coeffs.size()) > degree())
        throw SpecMismatch("parse_element: too many coefficients for this field");
    FieldElement a = zero();
    for (size_t k = 0; k < coeffs.size(); ++k) a.c[k] = ((coeffs[k] % p_) + p_) % p_;
    return a;
}

} // namespace hulldim
