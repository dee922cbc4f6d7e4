#include "hulldim/sweep.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <numeric>
#include <optional>
#include <sstream>
#include <thread>

#include "hulldim/codes.hpp"
#include "hulldim/numth.hpp"

namespace hulldim {

SweepRow compute_row(int64_t q, int64_t r, int64_t n) {
    AvgDimReport rep = avg_hull_dim_closed(n, r, q);
    SweepRow row;
    row.n = n;
    row.q = q;
    row.p = rep.p;
    row.nu = rep.nu;
    row.nbar = rep.nbar;
    row.r = r;
    row.gamma = v2_q_plus_one(q);
    row.v2_nbar = v2(rep.nbar);
    row.v2_r = v2(r);
    row.B = rep.scr_degree;
    row.EH = rep.avg;
    row.cls = rep.bound_class;
    row.lower = rep.lower;
    row.r_in_mq = in_mq(r, q);
    row.n_in_mq = std::gcd(n, q) == 1 && in_mq(n, q);
    return row;
}

namespace {

int resolve_workers(int requested, size_t npoints) {
    int w = requested;
    if (w <= 0) {
        if (const char* env = std::getenv("HULLDIM_WORKERS")) w = std::atoi(env);
    }
    if (w <= 0) w = int(std::thread::hardware_concurrency());
    if (w <= 0) w = 1;
    return int(std::min<size_t>(size_t(w), std::max<size_t>(npoints, 1)));
}

// Closed form vs. full enumeration for one point.
void verify_point(const SweepRow& row, int64_t limit) {
    int e = 0;
    for (int64_t t = row.q; t > 1; t /= row.p) ++e;
    FieldSpec spec(row.p, e);
    FieldElement lambda = spec.element_of_order(row.r);
    Rational oracle = avg_hull_dim_bruteforce(spec, row.n, lambda, limit);
    if (!(oracle == row.EH))
        throw SweepVerifyMismatch("sweep verification failed at n=" + std::to_string(row.n) +
                                      " q=" + std::to_string(row.q) +
                                      " r=" + std::to_string(row.r) + ": closed form " +
                                      row.EH.str() + " != oracle " + oracle.str(),
                                  to_csv_row(row));
}

} // namespace

std::vector<SweepRow> run_sweep(const SweepOptions& opts) {
    if (opts.n_max < 1) throw DomainError("run_sweep: need n_max >= 1");
    if (opts.qs.empty()) throw DomainError("run_sweep: need at least one q");
    struct Point {
        int64_t q, r, n;
    };
    std::vector<Point> points;
    for (int64_t q : opts.qs)
        for (int64_t r : divisors(q + 1))
            for (int64_t n = 1; n <= opts.n_max; ++n) points.push_back({q, r, n});

    std::vector<SweepRow> rows(points.size());
    std::vector<std::exception_ptr> errors(points.size());
    std::atomic<size_t> next{0};
    int nworkers = resolve_workers(opts.workers, points.size());

    auto work = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= points.size()) return;
            try {
                rows[i] = compute_row(points[i].q, points[i].r, points[i].n);
                if (opts.verify_max > 0) {
                    StructureCounts sc =
                        structure_counts(rows[i].nbar, points[i].r, points[i].q);
                    int64_t p_nu = rows[i].n / rows[i].nbar;
                    int64_t count = 1;
                    for (int64_t k = 0; k < sc.s + 2 * sc.t; ++k)
                        count = checked_mul(count, p_nu + 1);
                    if (count <= opts.verify_max) verify_point(rows[i], opts.limit);
                }
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };

    std::vector<std::thread> pool;
    for (int w = 0; w < nworkers; ++w) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();

    // deterministic: report the first failure in point order
    for (const std::exception_ptr& err : errors)
        if (err) std::rethrow_exception(err);
    return rows;
}

std::string sweep_csv_header() {
    return "n,q,p,nu,nbar,r,gamma,v2_nbar,v2_r,B,EH_num,EH_den,class,lower_num,lower_den,"
           "r_in_Mq,n_in_Mq";
}

std::string to_csv_row(const SweepRow& row) {
    std::ostringstream os;
    os << row.n << ',' << row.q << ',' << row.p << ',' << row.nu << ',' << row.nbar << ','
       << row.r << ',' << row.gamma << ',' << row.v2_nbar << ',' << row.v2_r << ',' << row.B
       << ',' << row.EH.num << ',' << row.EH.den << ',' << to_string(row.cls) << ','
       << row.lower.num << ',' << row.lower.den << ',' << int(row.r_in_mq) << ','
       << int(row.n_in_mq);
    return os.str();
}

std::string to_csv(const std::vector<SweepRow>& rows) {
    std::string out = sweep_csv_header() + "\n";
    for (const SweepRow& row : rows) out += to_csv_row(row) + "\n";
    return out;
}

std::vector<SweepRow> parse_csv(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line) || line != sweep_csv_header())
        throw DomainError("parse_csv: bad header");
    std::vector<SweepRow> rows;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::vector<std::string> f;
        std::istringstream ls(line);
        std::string tok;
        while (std::getline(ls, tok, ',')) f.push_back(tok);
        if (f.size() != 17) throw DomainError("parse_csv: expected 17 fields");
        SweepRow row;
        row.n = std::stoll(f[0]);
        row.q = std::stoll(f[1]);
        row.p = std::stoll(f[2]);
        row.nu = std::stoi(f[3]);
        row.nbar = std::stoll(f[4]);
        row.r = std::stoll(f[5]);
        row.gamma = std::stoi(f[6]);
        row.v2_nbar = std::stoi(f[7]);
        row.v2_r = std::stoi(f[8]);
        row.B = std::stoll(f[9]);
        row.EH = Rational(std::stoll(f[10]), std::stoll(f[11]));
        row.cls = bound_class_from_string(f[12]);
        row.lower = Rational(std::stoll(f[13]), std::stoll(f[14]));
        row.r_in_mq = f[15] == "1";
        row.n_in_mq = f[16] == "1";
        rows.push_back(row);
    }
    return rows;
}

} // namespace hulldim
