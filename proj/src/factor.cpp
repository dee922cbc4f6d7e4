#include "hulldim/factor.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>

#include "hulldim/extfield.hpp"
#include "hulldim/numth.hpp"

namespace hulldim {

namespace {

using boost::multiprecision::cpp_int;

ExtField::Elem ext_pow_big(const ExtField& F, ExtField::Elem base, const cpp_int& e) {
    ExtField::Elem r = F.one();
    if (e == 0) return r;
    for (int64_t bit = int64_t(boost::multiprecision::msb(e)); bit >= 0; --bit) {
        r = F.mul(r, r);
        if (boost::multiprecision::bit_test(e, unsigned(bit))) r = F.mul(r, base);
    }
    return r;
}

// Deterministic generator of the order-m subgroup of F_Q^*: raise candidates
// in canonical order to the power (Q-1)/m and keep the first exact-order hit.
ExtField::Elem subgroup_generator(const ExtField& F, int64_t m) {
    cpp_int big_q = cpp_int(F.base().q2());
    cpp_int group = boost::multiprecision::pow(big_q, unsigned(F.degree())) - 1;
    if (group % m != 0)
        throw InternalInvariantViolation("subgroup_generator: m does not divide Q-1");
    cpp_int cof = group / m;
    std::vector<int64_t> prime_cofactors;
    for (auto [l, e] : factorize(m)) prime_cofactors.push_back(m / l);
    for (uint64_t idx = 1; idx < uint64_t(1) << 20; ++idx) {
        ExtField::Elem xi = ext_pow_big(F, F.element_at(idx), cof);
        bool exact = !F.is_zero(xi);
        for (int64_t pc : prime_cofactors)
            if (exact && F.is_one(F.pow(xi, uint64_t(pc)))) exact = false;
        if (exact) return xi;
    }
    throw InternalInvariantViolation("subgroup_generator: search exhausted");
}

} // namespace

int64_t FactorizationReport::scr_degree_total() const {
    int64_t b = 0;
    for (const Poly& g : scr) b += g.deg();
    return b;
}

Poly reassemble(const FactorizationReport& report) {
    Poly prod = one_poly(*report.spec);
    for (const Poly& g : report.scr) prod = poly_mul(prod, g);
    for (const auto& [f, fd] : report.pairs) prod = poly_mul(prod, poly_mul(f, fd));
    return poly_pow(prod, report.p_nu);
}

FactorizationReport factor_xn_minus_lambda(const FieldSpec& spec, int64_t n,
                                           const FieldElement& lambda) {
    if (n < 1) throw DomainError("factor_xn_minus_lambda: need n >= 1");
    FactorizationReport rep;
    rep.spec = &spec;
    rep.n = n;
    rep.lambda = lambda;
    rep.r = spec.element_order(lambda);
    if ((spec.q() + 1) % rep.r != 0)
        throw UnsupportedOrder("factor_xn_minus_lambda: ord(lambda) = " + std::to_string(rep.r) +
                               " does not divide q+1 = " + std::to_string(spec.q() + 1));
    rep.nbar = n;
    while (rep.nbar % spec.p() == 0) {
        rep.nbar /= spec.p();
        ++rep.nu;
    }
    rep.p_nu = checked_pow(spec.p(), rep.nu);
    rep.lambda_lifted = spec.frobenius_root(lambda, rep.p_nu);

    int64_t m = checked_mul(rep.nbar, rep.r);  // lcm of the root orders
    if (m > kMaxNbarTimesR)
        throw ScaleLimit("factor_xn_minus_lambda: nbar*r = " + std::to_string(m) +
                             " exceeds limit " + std::to_string(kMaxNbarTimesR),
                         m);
    int64_t splitting_degree = mult_order(spec.q2() % m, m);
    if (splitting_degree > kMaxSplittingDegree)
        throw ScaleLimit("factor_xn_minus_lambda: splitting degree " +
                             std::to_string(splitting_degree) + " exceeds limit " +
                             std::to_string(kMaxSplittingDegree),
                         splitting_degree);

    ExtField F(spec, int(splitting_degree));
    ExtField::Elem xi = subgroup_generator(F, m);

    // Express Lambda inside the order-r subgroup generated by xi^nbar, giving
    // the root set { xi^(c + t*r) : 0 <= t < nbar } of x^nbar - Lambda.
    ExtField::Elem zeta_r = F.pow(xi, uint64_t(rep.nbar));
    ExtField::Elem lifted = F.embed(rep.lambda_lifted);
    int64_t c = -1;
    ExtField::Elem acc = F.one();
    for (int64_t k = 0; k < rep.r; ++k) {
        if (acc == lifted) {
            c = k;
            break;
        }
        acc = F.mul(acc, zeta_r);
    }
    if (c < 0)
        throw InternalInvariantViolation("factor_xn_minus_lambda: Lambda not in root subgroup");

    std::set<int64_t> exponents;
    for (int64_t t = 0; t < rep.nbar; ++t) exponents.insert((c + t * rep.r) % m);

    // Frobenius orbits on root exponents; each orbit is one irreducible factor.
    int64_t q2m = spec.q2() % m;
    std::vector<Poly> factors;
    std::set<int64_t> seen;
    for (int64_t k : exponents) {
        if (seen.count(k)) continue;
        std::vector<int64_t> orbit;
        int64_t j = k;
        do {
            orbit.push_back(j);
            seen.insert(j);
            j = j * q2m % m;
            if (!exponents.count(j) && j != k)
                throw InternalInvariantViolation(
                    "factor_xn_minus_lambda: Frobenius left the root set");
        } while (j != k);

        std::vector<ExtField::Elem> fac{F.one()};
        for (int64_t kk : orbit) {
            ExtField::Elem root = F.pow(xi, uint64_t(kk));
            std::vector<ExtField::Elem> next(fac.size() + 1, F.zero());
            for (size_t i = 0; i < fac.size(); ++i) {
                next[i + 1] = F.add(next[i + 1], fac[i]);
                next[i] = F.sub(next[i], F.mul(fac[i], root));
            }
            fac = std::move(next);
        }
        std::vector<FieldElement> low;
        for (const ExtField::Elem& coeff : fac) low.push_back(F.lower(coeff));
        factors.push_back(make_poly(spec, std::move(low)));
    }

    // Split into self-conjugate-reciprocal factors and conjugate-reciprocal
    // pairs; the dagger permutes the factor set because ord(Lambda) | q+1.
    std::vector<char> used(factors.size(), 0);
    for (size_t i = 0; i < factors.size(); ++i) {
        if (used[i]) continue;
        Poly dag = conjugate_reciprocal(factors[i]);
        if (dag == factors[i]) {
            used[i] = 1;
            rep.scr.push_back(factors[i]);
            continue;
        }
        bool matched = false;
        for (size_t j = i + 1; j < factors.size(); ++j) {
            if (used[j] || !(factors[j] == dag)) continue;
            used[i] = used[j] = 1;
            if (poly_cmp(factors[i], factors[j]) < 0)
                rep.pairs.emplace_back(factors[i], factors[j]);
            else
                rep.pairs.emplace_back(factors[j], factors[i]);
            matched = true;
            break;
        }
        if (!matched)
            throw InternalInvariantViolation("factor_xn_minus_lambda: unpaired non-scr factor");
    }

    auto cmp = [](const Poly& a, const Poly& b) { return poly_cmp(a, b) < 0; };
    std::sort(rep.scr.begin(), rep.scr.end(), cmp);
    std::sort(rep.pairs.begin(), rep.pairs.end(),
              [&](const auto& a, const auto& b) { return cmp(a.first, b.first); });

    // Soundness checks: degrees account for nbar and the product reassembles
    // the original binomial.
    int64_t degsum = 0;
    for (const Poly& g : rep.scr) degsum += g.deg();
    for (const auto& [f, fd] : rep.pairs) {
        if (f.deg() != fd.deg())
            throw InternalInvariantViolation("factor_xn_minus_lambda: pair degree mismatch");
        degsum += 2 * f.deg();
    }
    if (degsum != rep.nbar)
        throw InternalInvariantViolation("factor_xn_minus_lambda: degrees do not sum to nbar");
    if (!(reassemble(rep) == binomial_xn_minus(spec, n, lambda)))
        throw InternalInvariantViolation("factor_xn_minus_lambda: reassembly mismatch");
    return rep;
}

} // namespace hulldim
