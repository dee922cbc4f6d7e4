#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hulldim/avgdim.hpp"

namespace hulldim {

// One grid point (n, q, r) of a sweep.  Field names follow the CSV columns.
struct SweepRow {
    int64_t n = 0, q = 0, p = 0;
    int nu = 0;
    int64_t nbar = 0, r = 0;
    int gamma = 0, v2_nbar = 0, v2_r = 0;
    int64_t B = 0;
    Rational EH;
    BoundClass cls = BoundClass::Zero;
    Rational lower;
    bool r_in_mq = false, n_in_mq = false;

    bool operator==(const SweepRow&) const = default;
};

struct SweepOptions {
    std::vector<int64_t> qs;   // each a prime power <= 2^16
    int64_t n_max = 0;
    // Oracle-check every point whose enumeration count is <= verify_max.
    int64_t verify_max = 0;
    int workers = 0;  // 0: HULLDIM_WORKERS env or hardware concurrency
    int64_t limit = kDefaultEnumerationLimit;
};

// Raised when a closed-form value disagrees with the brute-force oracle.
struct SweepVerifyMismatch : Error {
    SweepVerifyMismatch(const std::string& msg, std::string row_csv_)
        : Error(msg), row_csv(std::move(row_csv_)) {}
    std::string row_csv;
};

SweepRow compute_row(int64_t q, int64_t r, int64_t n);

// All rows for n in [1, n_max], q in qs, r over the divisors of q+1, ordered
// by (q, r, n).  Points are processed by a worker pool but the output order
// and content are deterministic.
std::vector<SweepRow> run_sweep(const SweepOptions& opts);

std::string sweep_csv_header();
std::string to_csv_row(const SweepRow& row);
std::string to_csv(const std::vector<SweepRow>& rows);  // header + rows
std::vector<SweepRow> parse_csv(const std::string& text);

} // namespace hulldim
