#include "hulldim/numth.hpp"

#include <algorithm>
#include <numeric>

namespace hulldim {

int64_t checked_pow(int64_t base, int64_t exp) {
    if (exp < 0) throw DomainError("checked_pow: negative exponent");
    int64_t r = 1;
    for (int64_t i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

int64_t pow_mod(int64_t a, int64_t e, int64_t m) {
    if (m < 1) throw DomainError("pow_mod: modulus must be >= 1");
    if (e < 0) throw DomainError("pow_mod: negative exponent");
    if (m == 1) return 0;
    unsigned __int128 r = 1;
    unsigned __int128 b = static_cast<unsigned __int128>(((a % m) + m) % m);
    while (e > 0) {
        if (e & 1) r = r * b % static_cast<unsigned __int128>(m);
        b = b * b % static_cast<unsigned __int128>(m);
        e >>= 1;
    }
    return static_cast<int64_t>(r);
}

int v2(int64_t x) {
    if (x < 1) throw DomainError("v2: argument must be >= 1");
    int k = 0;
    while (x % 2 == 0) {
        x /= 2;
        ++k;
    }
    return k;
}

bool is_prime(int64_t n) {
    if (n < 2) return false;
    for (int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::pair<int64_t, int>> factorize(int64_t n) {
    if (n < 1) throw DomainError("factorize: argument must be >= 1");
    std::vector<std::pair<int64_t, int>> out;
    for (int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) {
                n /= d;
                ++e;
            }
            out.emplace_back(d, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<int64_t> divisors(int64_t n) {
    std::vector<int64_t> out{1};
    for (auto [p, e] : factorize(n)) {
        size_t sz = out.size();
        int64_t pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk = checked_mul(pk, p);
            for (size_t i = 0; i < sz; ++i) out.push_back(checked_mul(out[i], pk));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int64_t euler_phi(int64_t m) {
    if (m < 1) throw DomainError("euler_phi: argument must be >= 1");
    int64_t r = m;
    for (auto [p, e] : factorize(m)) r = r / p * (p - 1);
    return r;
}

int64_t mult_order(int64_t a, int64_t m) {
    if (m < 1) throw DomainError("mult_order: modulus must be >= 1");
    if (m == 1) return 1;
    a = ((a % m) + m) % m;
    if (std::gcd(a, m) != 1) throw NotCoprime("mult_order: arguments are not coprime");
    int64_t d = euler_phi(m);
    for (auto [p, e] : factorize(d)) {
        while (d % p == 0 && pow_mod(a, d / p, m) == 1) d /= p;
    }
    return d;
}

bool in_mq(int64_t ell, int64_t q) {
    if (ell < 1 || q < 2) throw DomainError("in_mq: need ell >= 1 and q >= 2");
    if (std::gcd(ell, q) != 1) throw NotCoprime("in_mq: ell and q are not coprime");
    if (ell == 1) return true;
    if (ell == 2) return q % 2 == 1;  // 2 | q^i + 1 iff q odd
    int64_t d = mult_order(q, ell);
    // ell | q^i + 1 for some (odd) i iff q^(d/2) = -1 and d/2 is odd.
    if (d % 2 != 0 || (d / 2) % 2 == 0) return false;
    return pow_mod(q, d / 2, ell) == ell - 1;
}

int v2_q_plus_one(int64_t q) {
    if (q < 2) throw DomainError("v2_q_plus_one: need q >= 2");
    return v2(q + 1);
}

namespace {

std::vector<int64_t> root_orders_defining(int64_t nbar, int64_t r) {
    std::vector<int64_t> out;
    int64_t m = checked_mul(nbar, r);
    for (int64_t j : divisors(m))
        if (std::gcd(m / j, r) == 1) out.push_back(j);
    return out;
}

// Product form: write nbar = 2^a * (common odd primes with r)^.. * mu.
std::vector<int64_t> root_orders_structured(int64_t nbar, int64_t r) {
    int64_t g = std::gcd(nbar, r);
    int64_t core = 1;  // odd prime powers of nbar whose primes divide r
    for (auto [p, e] : factorize(g)) {
        if (p == 2) continue;
        int64_t pe = 1;
        int64_t rest = nbar;
        while (rest % p == 0) {
            rest /= p;
            pe = checked_mul(pe, p);
        }
        core = checked_mul(core, pe);
    }
    int a = v2(nbar);
    int64_t two_a = int64_t(1) << a;
    int64_t mu = nbar / (two_a * core);  // odd, coprime to r
    std::vector<int64_t> out;
    if (r % 2 == 0) {
        int64_t base = checked_mul(checked_mul(r, two_a), core);
        for (int64_t k : divisors(mu)) out.push_back(checked_mul(base, k));
    } else {
        int64_t base = checked_mul(r, core);
        for (int64_t k : divisors(checked_mul(two_a, mu))) out.push_back(checked_mul(base, k));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<int64_t> root_orders(int64_t nbar, int64_t r) {
    if (nbar < 1 || r < 1) throw DomainError("root_orders: need nbar >= 1 and r >= 1");
    std::vector<int64_t> def = root_orders_defining(nbar, r);
    std::vector<int64_t> str = root_orders_structured(nbar, r);
    if (def != str)
        throw InternalInvariantViolation("root_orders: defining and structured forms disagree");
    return def;
}

MqFactorization mq_factorization(int64_t ell, int64_t q) {
    if (ell < 1) throw DomainError("mq_factorization: need ell >= 1");
    MqFactorization out{0, 1, 1};
    for (auto [p, e] : factorize(ell)) {
        if (p == 2) {
            out.beta = e;
            continue;
        }
        int64_t pe = checked_pow(p, e);
        if (std::gcd(p, q) != 1 || !in_mq(p, q))
            out.dprime = checked_mul(out.dprime, pe);
        else
            out.d1 = checked_mul(out.d1, pe);
    }
    return out;
}

std::vector<int64_t> StructureCounts::scr_degrees() const {
    std::vector<int64_t> out;
    for (const auto& e : entries)
        if (e.scr) out.insert(out.end(), e.count, e.degree);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int64_t> StructureCounts::pair_degrees() const {
    std::vector<int64_t> out;
    for (const auto& e : entries)
        if (!e.scr) out.insert(out.end(), e.count, e.degree);
    std::sort(out.begin(), out.end());
    return out;
}

StructureCounts structure_counts(int64_t nbar, int64_t r, int64_t q) {
    if (q < 2) throw DomainError("structure_counts: need q >= 2");
    if (std::gcd(checked_mul(nbar, r), q) != 1)
        throw NotCoprime("structure_counts: nbar*r must be coprime to q");
    if ((q + 1) % r != 0) throw UnsupportedOrder("structure_counts: r must divide q+1");
    int64_t phi_r = euler_phi(r);
    int64_t q2 = checked_mul(q, q);
    StructureCounts sc;
    int64_t total = 0;
    for (int64_t j : root_orders(nbar, r)) {
        int64_t deg = mult_order(q2, j);
        int64_t phi_j = euler_phi(j);
        if (phi_j % (phi_r * deg) != 0)
            throw InternalInvariantViolation("structure_counts: phi(j) not divisible by phi(r)*ord_j(q^2)");
        int64_t nfac = phi_j / (phi_r * deg);
        bool scr = in_mq(j, q);
        if (!scr) {
            if (nfac % 2 != 0)
                throw InternalInvariantViolation("structure_counts: odd factor count outside M_q");
            nfac /= 2;
        }
        sc.entries.push_back({j, scr, nfac, deg});
        (scr ? sc.s : sc.t) += nfac;
        total += (scr ? 1 : 2) * nfac * deg;
    }
    if (total != nbar)
        throw InternalInvariantViolation("structure_counts: degrees do not sum to nbar");
    return sc;
}

namespace {

// The bare sum over root orders, with no cross-checks (used by the public
// functions, which verify each other).
int64_t scr_degree_total_raw(int64_t nbar, int64_t r, int64_t q) {
    if (q < 2) throw DomainError("scr_degree_total: need q >= 2");
    if (std::gcd(checked_mul(nbar, r), q) != 1)
        throw NotCoprime("scr_degree_total: nbar*r must be coprime to q");
    if ((q + 1) % r != 0) throw UnsupportedOrder("scr_degree_total: r must divide q+1");
    int64_t phi_r = euler_phi(r);
    int64_t b = 0;
    for (int64_t j : root_orders(nbar, r)) {
        if (!in_mq(j, q)) continue;
        int64_t phi_j = euler_phi(j);
        if (phi_j % phi_r != 0)
            throw InternalInvariantViolation("scr_degree_total: phi(j) not divisible by phi(r)");
        b += phi_j / phi_r;
    }
    return b;
}

ZeroVerdict scr_degree_is_zero_raw(int64_t nbar, int64_t r, int64_t q) {
    int gamma = v2_q_plus_one(q);
    bool r_in = in_mq(r, q);
    if (r % 2 == 0) {
        int a = v2(nbar) + v2(r);
        std::string clauses;
        if (a > gamma)
            clauses = "v2(nbar)+v2(r) = " + std::to_string(a) + " > gamma = " + std::to_string(gamma);
        if (!r_in) {
            if (!clauses.empty()) clauses += " and ";
            clauses += "r not in M_q";
        }
        if (!clauses.empty()) return {true, clauses};
        return {false, "v2(nbar)+v2(r) = " + std::to_string(a) + " <= gamma = " +
                           std::to_string(gamma) + " and r in M_q"};
    }
    if (!r_in) return {true, "r not in M_q"};
    return {false, "r in M_q"};
}

} // namespace

int64_t scr_degree_total(int64_t nbar, int64_t r, int64_t q) {
    int64_t b = scr_degree_total_raw(nbar, r, q);
    // Redundant checks against the independent criteria.
    ZeroVerdict z = scr_degree_is_zero_raw(nbar, r, q);
    if (z.is_zero != (b == 0))
        throw InternalInvariantViolation("scr_degree_total: zero criterion disagrees with sum");
    int gamma = v2_q_plus_one(q);
    if (in_mq(r, q)) {
        MqFactorization mf = mq_factorization(nbar, q);
        int64_t closed = -1;
        if (r % 2 == 0 && v2(nbar) + v2(r) <= gamma)
            closed = checked_mul(int64_t(1) << v2(nbar), mf.d1);
        if (r % 2 == 1)
            closed = checked_mul(int64_t(1) << std::min(gamma, v2(nbar)), mf.d1);
        if (closed >= 0 && closed != b)
            throw InternalInvariantViolation("scr_degree_total: closed form disagrees with sum");
    }
    bool full_cond = in_mq(r, q) && std::gcd(nbar, q) == 1 && in_mq(nbar, q) &&
                     v2(nbar) + v2(r) <= gamma;
    if (full_cond != (b == nbar))
        throw InternalInvariantViolation("scr_degree_total: fullness criterion disagrees with sum");
    return b;
}

ZeroVerdict scr_degree_is_zero(int64_t nbar, int64_t r, int64_t q) {
    int64_t b = scr_degree_total_raw(nbar, r, q);  // also validates arguments
    ZeroVerdict z = scr_degree_is_zero_raw(nbar, r, q);
    if (z.is_zero != (b == 0))
        throw InternalInvariantViolation("scr_degree_is_zero: verdict disagrees with sum");
    return z;
}

bool scr_degree_is_full(int64_t nbar, int64_t r, int64_t q) {
    bool full = scr_degree_total_raw(nbar, r, q) == nbar;
    bool cond = in_mq(r, q) && std::gcd(nbar, q) == 1 && in_mq(nbar, q) &&
                v2(nbar) + v2(r) <= v2_q_plus_one(q);
    if (full != cond)
        throw InternalInvariantViolation("scr_degree_is_full: criterion disagrees with sum");
    return full;
}

} // namespace hulldim
