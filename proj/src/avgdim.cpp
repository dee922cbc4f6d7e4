#include "hulldim/avgdim.hpp"

#include <algorithm>
#include <numeric>

#include "hulldim/codes.hpp"
#include "hulldim/numth.hpp"

namespace hulldim {

const char* to_string(BoundClass c) {
    switch (c) {
        case BoundClass::Zero: return "Zero";
        case BoundClass::LowerEighth: return "LowerEighth";
        case BoundClass::LowerSixth: return "LowerSixth";
        case BoundClass::LowerQuarter: return "LowerQuarter";
    }
    throw DomainError("to_string: bad BoundClass");
}

BoundClass bound_class_from_string(const std::string& s) {
    if (s == "Zero") return BoundClass::Zero;
    if (s == "LowerEighth") return BoundClass::LowerEighth;
    if (s == "LowerSixth") return BoundClass::LowerSixth;
    if (s == "LowerQuarter") return BoundClass::LowerQuarter;
    throw DomainError("bound_class_from_string: unknown class '" + s + "'");
}

namespace {

void check_p_nu(int64_t p_nu) {
    if (p_nu < 1) throw DomainError("expectation: need p_nu >= 1");
}

// (p, e) with q = p^e, rejecting non prime powers.
std::pair<int64_t, int> prime_power_split(int64_t q) {
    if (q < 2) throw DomainError("q must be >= 2");
    auto fac = factorize(q);
    if (fac.size() != 1) throw DomainError("q = " + std::to_string(q) + " is not a prime power");
    return {fac[0].first, fac[0].second};
}

} // namespace

Rational expectation_max_self(int64_t p_nu) {
    check_p_nu(p_nu);
    int64_t delta = p_nu % 2 == 0 ? 1 : 0;
    return Rational(3 * p_nu + 1, 4) - Rational(delta, 4 * (p_nu + 1));
}

Rational expectation_max_pair(int64_t p_nu) {
    check_p_nu(p_nu);
    return Rational(checked_mul(p_nu, 4 * p_nu + 5), 6 * (p_nu + 1));
}

Classification classify_bounds(int64_t n, int64_t r, int64_t q) {
    if (n < 1) throw DomainError("classify_bounds: need n >= 1");
    int64_t p = prime_power_split(q).first;
    if (r < 1 || (q + 1) % r != 0)
        throw UnsupportedOrder("classify_bounds: r = " + std::to_string(r) +
                               " does not divide q+1 = " + std::to_string(q + 1));
    int64_t nbar = n;
    while (nbar % p == 0) nbar /= p;
    int gamma = v2_q_plus_one(q);
    bool r_in = in_mq(r, q);
    bool n_in = std::gcd(n, q) == 1 && in_mq(n, q);
    int a = v2(nbar) + v2(r);

    if (a <= gamma && r_in && n_in)
        return {BoundClass::Zero,
                "v2(nbar)+v2(r) = " + std::to_string(a) + " <= gamma = " + std::to_string(gamma) +
                    " and r in M_q and n in M_q",
                Rational(0)};
    if (r % 2 == 0) {
        if (a > gamma || !r_in) {
            std::string w;
            if (a > gamma)
                w = "v2(nbar)+v2(r) = " + std::to_string(a) + " > gamma = " + std::to_string(gamma);
            if (!r_in) {
                if (!w.empty()) w += " and ";
                w += "r not in M_q";
            }
            return {BoundClass::LowerQuarter, w, Rational(n, 4)};
        }
        return {BoundClass::LowerSixth,
                "r even with v2(nbar)+v2(r) <= gamma and r in M_q, but n not in M_q",
                Rational(n, 6)};
    }
    if (!r_in) return {BoundClass::LowerQuarter, "r odd and not in M_q", Rational(n, 4)};
    return {BoundClass::LowerEighth, "r odd in M_q, but n not in M_q", Rational(n, 8)};
}

AvgDimReport avg_hull_dim_closed(int64_t n, int64_t r, int64_t q) {
    if (n < 1) throw DomainError("avg_hull_dim_closed: need n >= 1");
    int64_t p = prime_power_split(q).first;
    if (r < 1 || (q + 1) % r != 0)
        throw UnsupportedOrder("avg_hull_dim_closed: r = " + std::to_string(r) +
                               " does not divide q+1 = " + std::to_string(q + 1));
    AvgDimReport rep;
    rep.n = n;
    rep.q = q;
    rep.r = r;
    rep.p = p;
    rep.nbar = n;
    while (rep.nbar % p == 0) {
        rep.nbar /= p;
        ++rep.nu;
    }
    int64_t p_nu = checked_pow(p, rep.nu);
    rep.scr_degree = scr_degree_total(rep.nbar, r, q);
    int64_t delta = (p == 2 && rep.nu >= 1) ? 1 : 0;

    rep.avg = Rational(n) * (Rational(1, 3) - Rational(1, 6 * (p_nu + 1))) -
              Rational(rep.scr_degree) *
                  (Rational(p_nu + 1, 12) + Rational(2 - 3 * delta, 12 * (p_nu + 1)));

    // Consistency relations that must hold for every valid input.
    rep.upper = Rational(n, 3);
    if (!(rep.avg < rep.upper))
        throw InternalInvariantViolation("avg_hull_dim_closed: average not below n/3");
    if (rep.nu == 0 && !(rep.avg == Rational(rep.nbar - rep.scr_degree, 4)))
        throw InternalInvariantViolation("avg_hull_dim_closed: nu = 0 specialization failed");
    if (rep.scr_degree == 0 &&
        !(rep.avg == Rational(n) * (Rational(1, 3) - Rational(1, 6 * (p_nu + 1)))))
        throw InternalInvariantViolation("avg_hull_dim_closed: B = 0 simplification failed");

    Classification cls = classify_bounds(n, r, q);
    rep.bound_class = cls.cls;
    rep.witness = cls.witness;
    rep.lower = cls.lower;
    if (cls.cls == BoundClass::Zero) {
        if (!(rep.avg == Rational(0)))
            throw InternalInvariantViolation("avg_hull_dim_closed: Zero class with nonzero average");
    } else {
        if (rep.avg == Rational(0) || rep.avg < rep.lower)
            throw InternalInvariantViolation("avg_hull_dim_closed: average outside class interval");
    }
    return rep;
}

int64_t enumeration_count(const FactorizationReport& report) {
    int64_t count = 1;
    int64_t positions = report.s() + 2 * report.t();
    for (int64_t i = 0; i < positions; ++i) count = checked_mul(count, report.p_nu + 1);
    return count;
}

Rational avg_hull_dim_enumerated(const FactorizationReport& report, int64_t limit) {
    int64_t count = enumeration_count(report);
    if (count > limit)
        throw ScaleLimit("enumeration of " + std::to_string(count) +
                             " codes exceeds limit " + std::to_string(limit),
                         count);
    // One odometer position per scr factor (contribution deg * max(u, p_nu-u))
    // and one per pair (two coupled digits z, w).
    struct Position {
        int64_t card;
        std::vector<int64_t> contrib;
    };
    std::vector<Position> pos;
    int64_t width = report.p_nu + 1;
    for (const Poly& g : report.scr) {
        Position P{width, {}};
        for (int64_t u = 0; u < width; ++u)
            P.contrib.push_back(g.deg() * std::max(u, report.p_nu - u));
        pos.push_back(std::move(P));
    }
    for (const auto& [f, fd] : report.pairs) {
        Position P{width * width, {}};
        for (int64_t z = 0; z < width; ++z)
            for (int64_t w = 0; w < width; ++w)
                P.contrib.push_back(f.deg() * (std::max(z, report.p_nu - w) +
                                               std::max(w, report.p_nu - z)));
        pos.push_back(std::move(P));
    }

    std::vector<int64_t> digit(pos.size(), 0);
    int64_t cur = 0;
    for (const Position& P : pos) cur += P.contrib[0];
    int64_t total = 0;
    for (;;) {
        total = checked_add(total, report.n - cur);
        size_t i = 0;
        while (i < pos.size()) {
            cur -= pos[i].contrib[size_t(digit[i])];
            if (++digit[i] < pos[i].card) {
                cur += pos[i].contrib[size_t(digit[i])];
                break;
            }
            digit[i] = 0;
            cur += pos[i].contrib[0];
            ++i;
        }
        if (i == pos.size()) break;
    }
    return Rational(total, count);
}

Rational avg_hull_dim_bruteforce(const FieldSpec& spec, int64_t n, const FieldElement& lambda,
                                 int64_t limit) {
    FactorizationReport report = factor_xn_minus_lambda(spec, n, lambda);
    return avg_hull_dim_enumerated(report, limit);
}

Rational avg_hull_dim_per_factor(const FactorizationReport& report) {
    int64_t width = report.p_nu + 1;
    int64_t self_sum = 0;
    for (int64_t u = 0; u < width; ++u) self_sum += std::max(u, report.p_nu - u);
    int64_t pair_sum = 0;
    for (int64_t z = 0; z < width; ++z)
        for (int64_t w = 0; w < width; ++w)
            pair_sum += std::max(z, report.p_nu - w) + std::max(w, report.p_nu - z);
    Rational avg(report.n);
    for (const Poly& g : report.scr) avg = avg - Rational(g.deg()) * Rational(self_sum, width);
    for (const auto& [f, fd] : report.pairs)
        avg = avg - Rational(f.deg()) * Rational(pair_sum, checked_mul(width, width));
    return avg;
}

} // namespace hulldim
