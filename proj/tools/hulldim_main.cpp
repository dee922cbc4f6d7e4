// Command-line front end: factor, hull, avg, classify and sweep subcommands.
#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "hulldim/jsonio.hpp"
#include "hulldim/numth.hpp"
#include "hulldim/sweep.hpp"

using namespace hulldim;

namespace {

FieldSpec spec_for(int64_t q) {
    if (q < 2) throw DomainError("q must be >= 2");
    auto fac = factorize(q);
    if (fac.size() != 1)
        throw DomainError("q = " + std::to_string(q) + " is not a prime power");
    return FieldSpec(fac[0].first, fac[0].second);
}

int64_t resolve_limit(int64_t flag) {
    if (flag > 0) return flag;
    if (const char* env = std::getenv("HULLDIM_LIMIT")) {
        int64_t v = std::atoll(env);
        if (v > 0) return v;
    }
    return kDefaultEnumerationLimit;
}

// flat key: value listing; nested documents stay in their compact JSON form
void print_pretty(const json& doc) {
    for (const auto& [key, value] : doc.items())
        std::cout << key << ": "
                  << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
}

void emit(const json& doc, const std::string& format) {
    if (format == "json")
        std::cout << doc.dump(2) << "\n";
    else
        print_pretty(doc);
}

struct CommonArgs {
    int64_t q = 0;
    int64_t n = 0;
    int64_t r = 1;
    std::string lambda_text;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_lambda = true) {
    cmd->add_option("--q", args.q, "base field size q (F_{q^2} is the alphabet)")->required();
    cmd->add_option("--n", args.n, "code length")->required();
    cmd->add_option("--r", args.r, "order of lambda, must divide q+1 (default 1)");
    if (with_lambda)
        cmd->add_option("--lambda", args.lambda_text,
                        "lambda as a coefficient vector like [1,0]; overrides --r");
}

FieldElement resolve_lambda(const FieldSpec& spec, const CommonArgs& args) {
    if (!args.lambda_text.empty()) return spec.parse_element(args.lambda_text);
    return spec.element_of_order(args.r);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hermitian hulls of constacyclic codes over F_{q^2}: factorization, "
                 "hull computation and exact average hull dimensions"};
    app.require_subcommand(1);

    std::string format = "pretty";
    app.add_option("--format", format, "output format: pretty or json (csv: sweep only)")
        ->check(CLI::IsMember({"pretty", "json", "csv"}));
    int64_t limit_flag = 0;
    app.add_option("--limit", limit_flag,
                   "enumeration cap for verification (default: HULLDIM_LIMIT or 10^7)");
    uint64_t seed = 0;
    app.add_option("--seed", seed, "random seed (reserved for sampling subcommands)");

    CommonArgs fac_args;
    CLI::App* cmd_factor =
        app.add_subcommand("factor", "factor x^n - lambda into self-conjugate-reciprocal "
                                     "factors and conjugate-reciprocal pairs");
    cmd_factor->fallthrough();
    add_common(cmd_factor, fac_args);

    CommonArgs hull_args;
    std::vector<int64_t> hull_exps;
    CLI::App* cmd_hull = app.add_subcommand(
        "hull", "dual and hull of the code selected by a generator exponent vector");
    cmd_hull->fallthrough();
    add_common(cmd_hull, hull_args);
    cmd_hull->add_option("--exp", hull_exps, "exponent vector, e.g. 0,1,0")
        ->required()
        ->delimiter(',');

    CommonArgs avg_args;
    bool verify = false;
    CLI::App* cmd_avg = app.add_subcommand(
        "avg", "exact average hull dimension E_H(n, lambda, q^2) with bound class");
    cmd_avg->fallthrough();
    add_common(cmd_avg, avg_args, false);
    cmd_avg->add_flag("--verify", verify, "confirm the closed form by full enumeration");

    CommonArgs cls_args;
    CLI::App* cmd_classify =
        app.add_subcommand("classify", "bound class of E_H from (n, r, q) arithmetic alone");
    cmd_classify->fallthrough();
    add_common(cmd_classify, cls_args, false);

    std::vector<int64_t> sweep_qs;
    int64_t n_max = 0, verify_max = 0;
    int workers = 0;
    std::string out;
    CLI::App* cmd_sweep = app.add_subcommand(
        "sweep", "one row per (n, q, r) for n in [1, n-max], r over the divisors of q+1");
    cmd_sweep->fallthrough();
    cmd_sweep->add_option("--q", sweep_qs, "base field size, repeatable")->required();
    cmd_sweep->add_option("--n-max", n_max, "largest code length")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd_sweep->add_option("--verify-max", verify_max,
                          "verify every point with at most this many codes to enumerate");
    cmd_sweep->add_option("--workers", workers,
                          "worker threads (default: HULLDIM_WORKERS or hardware)");
    cmd_sweep->add_option("--out", out,
                          "sweep output format: csv or json (default csv, or --format)")
        ->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    int64_t limit = resolve_limit(limit_flag);
    if (format == "csv" && !*cmd_sweep) {
        std::cerr << "error: --format csv applies only to sweep\n";
        return 2;
    }
    try {
        if (*cmd_factor) {
            FieldSpec spec = spec_for(fac_args.q);
            FieldElement lam = resolve_lambda(spec, fac_args);
            emit(to_json(factor_xn_minus_lambda(spec, fac_args.n, lam)), format);
        } else if (*cmd_hull) {
            FieldSpec spec = spec_for(hull_args.q);
            FieldElement lam = resolve_lambda(spec, hull_args);
            FactorizationReport rep = factor_xn_minus_lambda(spec, hull_args.n, lam);
            ConstacyclicCode code = [&] {
                try {
                    return make_code(rep, hull_exps);
                } catch (const ExponentRange& e) {
                    // a bad --exp vector is a usage problem, not a math one
                    std::cerr << "error: " << e.what() << "\n";
                    std::exit(2);
                }
            }();
            Poly dual = dual_generator(code);
            Poly hull = hull_generator(code);
            emit(to_json(code, dual, hull), format);
        } else if (*cmd_avg) {
            AvgDimReport rep = avg_hull_dim_closed(avg_args.n, avg_args.r, avg_args.q);
            if (verify) {
                try {
                    FieldSpec spec = spec_for(avg_args.q);
                    FieldElement lam = spec.element_of_order(avg_args.r);
                    Rational oracle = avg_hull_dim_bruteforce(spec, avg_args.n, lam, limit);
                    rep.oracle_avg = oracle;
                    rep.oracle_agrees = oracle == rep.avg;
                } catch (const ScaleLimit& e) {
                    std::cerr << "warning: verification skipped: " << e.what() << "\n";
                }
            }
            emit(to_json(rep), format);
            if (rep.oracle_agrees.has_value() && !*rep.oracle_agrees) {
                std::cerr << "error: closed form disagrees with the enumeration oracle\n";
                return 4;
            }
        } else if (*cmd_classify) {
            Classification cls = classify_bounds(cls_args.n, cls_args.r, cls_args.q);
            emit(json{{"n", cls_args.n},
                      {"q", cls_args.q},
                      {"r", cls_args.r},
                      {"class", to_string(cls.cls)},
                      {"witness", cls.witness},
                      {"lower", to_json(cls.lower)},
                      {"upper", to_json(Rational(cls_args.n, 3))}},
                 format);
        } else if (*cmd_sweep) {
            SweepOptions opts;
            opts.qs = sweep_qs;
            opts.n_max = n_max;
            opts.verify_max = verify_max;
            opts.workers = workers;
            opts.limit = limit;
            std::vector<SweepRow> rows;
            try {
                rows = run_sweep(opts);
            } catch (const SweepVerifyMismatch& e) {
                std::cerr << "error: " << e.what() << "\n" << sweep_csv_header() << "\n"
                          << e.row_csv << "\n";
                return 4;
            }
            std::string sweep_out = !out.empty() ? out : (format == "json" ? "json" : "csv");
            if (sweep_out == "csv")
                std::cout << to_csv(rows);
            else
                std::cout << to_json(rows).dump(2) << "\n";
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
