#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hulldim/errors.hpp"

namespace hulldim {

// ---- checked 64-bit arithmetic -------------------------------------------
// Grid parameters keep everything small, but nothing here is allowed to
// overflow silently.

inline int64_t checked_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow("integer overflow in addition");
    return r;
}

inline int64_t checked_sub(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow("integer overflow in subtraction");
    return r;
}

inline int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow("integer overflow in multiplication");
    return r;
}

int64_t checked_pow(int64_t base, int64_t exp);

// a^e mod m for m >= 1, e >= 0; result in [0, m).
int64_t pow_mod(int64_t a, int64_t e, int64_t m);

// exponent of 2 in x (x >= 1)
int v2(int64_t x);

bool is_prime(int64_t n);

// (prime, exponent) pairs, primes ascending; factorize(1) = {}
std::vector<std::pair<int64_t, int>> factorize(int64_t n);

// all positive divisors, ascending
std::vector<int64_t> divisors(int64_t n);

// ---- multiplicative structure --------------------------------------------

int64_t euler_phi(int64_t m);

// multiplicative order of a mod m; requires gcd(a, m) = 1 (NotCoprime).
// mult_order(a, 1) = 1.
int64_t mult_order(int64_t a, int64_t m);

// Membership in M_q = { ell >= 1 : ell | q^i + 1 for some odd i >= 1 }.
// Requires gcd(ell, q) = 1 (NotCoprime).  Decided by the order test: for
// ell > 2 this holds iff d = ord_ell(q) has v2(d) = 1 and q^(d/2) = -1 mod ell.
bool in_mq(int64_t ell, int64_t q);

// v2(q+1); controls which even orders can appear in M_q.
int v2_q_plus_one(int64_t q);

// Orders of the roots of x^nbar - Lambda where ord(Lambda) = r:
// { j : j | nbar*r and gcd(nbar*r/j, r) = 1 }, ascending.  Computed both from
// the defining condition and from the structured product form; the two must
// agree.
std::vector<int64_t> root_orders(int64_t nbar, int64_t r);

// Factorization ell = 2^beta * dprime * d1 with dprime the product of the
// odd prime powers whose primes lie outside M_q and d1 the ones inside.
struct MqFactorization {
    int beta;
    int64_t dprime;
    int64_t d1;
};
MqFactorization mq_factorization(int64_t ell, int64_t q);

// Per-order factor census of x^nbar - Lambda over F_{q^2}: for every root
// order j, the number of irreducible factors it contributes and their common
// degree ord_j(q^2).  Orders inside M_q contribute self-conjugate-reciprocal
// factors; the rest come in conjugate-reciprocal pairs.
struct StructureCounts {
    struct Entry {
        int64_t j;       // root order
        bool scr;        // j in M_q
        int64_t count;   // number of factors (for pairs: number of pairs)
        int64_t degree;  // ord_j(q^2)
    };
    std::vector<Entry> entries;  // ascending j
    int64_t s = 0;               // total self-conjugate-reciprocal factors
    int64_t t = 0;               // total conjugate-reciprocal pairs

    std::vector<int64_t> scr_degrees() const;   // expanded multiset, sorted
    std::vector<int64_t> pair_degrees() const;  // one entry per pair, sorted
};
StructureCounts structure_counts(int64_t nbar, int64_t r, int64_t q);

// Total degree of the self-conjugate-reciprocal part of x^nbar - Lambda,
// i.e. sum of phi(j)/phi(r) over root orders j in M_q.  Cross-checked
// internally against the closed forms and zero/full criteria.
int64_t scr_degree_total(int64_t nbar, int64_t r, int64_t q);

struct ZeroVerdict {
    bool is_zero;
    std::string clause;  // which condition fired
};
// Whether scr_degree_total is zero, decided from the arithmetic of
// (v2(nbar), v2(r), v2(q+1)) and M_q membership alone.
ZeroVerdict scr_degree_is_zero(int64_t nbar, int64_t r, int64_t q);

// Whether scr_degree_total equals nbar (every factor self-conjugate-
// reciprocal): r and nbar in M_q and v2(nbar) + v2(r) <= v2(q+1).
bool scr_degree_is_full(int64_t nbar, int64_t r, int64_t q);

} // namespace hulldim
