// overp: exact overpartition numbers, method cross-checks, cost metrics.
//
// Subcommands: compute, metrics, table, selftest, bench.
// Exit codes: 0 success, 1 selftest failure, 2 usage error,
//             3 cache format error with fallback disabled.

#include <chrono>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "overp/errors.hpp"
#include "overp/kernel.hpp"
#include "overp/metrics.hpp"
#include "overp/oracle.hpp"
#include "overp/selftest.hpp"
#include "overp/store.hpp"

namespace {

using json = nlohmann::ordered_json;
using overp::ComputePlan;
using overp::Method;
using overp::OutputFormat;

constexpr int kExitOk = 0;
constexpr int kExitSelftest = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCache = 3;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

const char* method_name(Method m) {
    switch (m) {
    case Method::linear: return "linear";
    case Method::hybrid: return "hybrid";
    case Method::series: return "series";
    case Method::enumerate: return "enumerate";
    }
    return "?";
}

// Dispatches one value request per the plan. Usage problems (oracle methods
// beyond the safety bound) throw DomainError.
mpz_class compute_value(std::uint64_t n, const ComputePlan& plan) {
    switch (plan.method) {
    case Method::linear:
        return overp::load_or_extend(n, plan)[n];
    case Method::hybrid:
        return overp::hybrid_compute(n, plan);
    case Method::series:
        if (n > plan.max_oracle_n)
            throw overp::DomainError("series method is quadratic; n exceeds safety bound " +
                                     std::to_string(plan.max_oracle_n) +
                                     " (raise with --oracle-limit)");
        return overp::oracle::series_inverse(n);
    case Method::enumerate:
        if (n > plan.max_oracle_n)
            throw overp::DomainError("enumerate method is quadratic; n exceeds safety bound " +
                                     std::to_string(plan.max_oracle_n) +
                                     " (raise with --oracle-limit)");
        return overp::oracle::enumerate_overpartitions(n);
    }
    throw overp::DomainError("unknown method");
}

void add_plan_flags(CLI::App* cmd, ComputePlan& plan, std::string& cache_arg,
                    bool& strict_cache) {
    static const std::map<std::string, Method> methods{
        {"linear", Method::linear},
        {"hybrid", Method::hybrid},
        {"series", Method::series},
        {"enumerate", Method::enumerate},
    };
    static const std::map<std::string, OutputFormat> formats{
        {"plain", OutputFormat::plain},
        {"structured", OutputFormat::structured},
    };
    cmd->add_option("--method", plan.method, "Computation method")
        ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case));
    cmd->add_option("--workers", plan.workers,
                    "Worker threads for the nonlinear step (default: hardware)")
        ->check(CLI::Range(1u, 4096u));
    cmd->add_option("--cache", cache_arg, "Table cache file")->envname("OVERP_CACHE");
    cmd->add_flag("--strict-cache", strict_cache,
                  "Treat a corrupt cache as an error instead of recomputing");
    cmd->add_option("--format", plan.output, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    cmd->add_option("--oracle-limit", plan.max_oracle_n,
                    "Safety bound for the quadratic series/enumerate methods");
}

void finalize_plan(ComputePlan& plan, const std::string& cache_arg, bool strict_cache) {
    if (!cache_arg.empty())
        plan.cache_path = cache_arg;
    plan.cache_fallback = !strict_cache;
}

void print_value(std::uint64_t n, const mpz_class& value, const ComputePlan& plan,
                 double elapsed) {
    if (plan.output == OutputFormat::plain) {
        std::cout << value.get_str() << "\n";
        return;
    }
    const std::string digits = value.get_str();
    json rec;
    rec["n"] = n;
    rec["value"] = digits;
    rec["method"] = method_name(plan.method);
    rec["digits"] = digits.size();
    rec["elapsed"] = elapsed;
    std::cout << rec.dump() << "\n";
}

json metrics_record(const overp::metrics::RefCountReport& rep) {
    json rec;
    rec["n"] = rep.n;
    rec["m1"] = rep.m1;
    rec["m2"] = rep.m2;
    rec["m2_linear"] = rep.m2_linear_part;
    rec["m2_step"] = rep.m2_step_part;
    rec["ratio"] = rep.ratio_string();
    return rec;
}

std::vector<std::uint64_t> default_table_ns(unsigned residue) {
    const std::uint64_t base = residue == 0 ? 4 : residue;
    std::vector<std::uint64_t> ns;
    for (std::uint64_t i = 0; i < 7; ++i)
        ns.push_back(base + 4 * i);
    ns.push_back(100 + base);
    ns.push_back(1000 + base);
    ns.push_back(10000 + base);
    return ns;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact overpartition numbers p(n) with method cross-checks and "
                 "reference-count metrics"};
    app.require_subcommand(1);

    ComputePlan plan;
    plan.workers = std::max(1u, std::thread::hardware_concurrency());
    std::string cache_arg;
    bool strict_cache = false;

    // compute
    std::uint64_t compute_n = 0;
    auto* cmd_compute = app.add_subcommand("compute", "Compute p(n)");
    cmd_compute->add_option("n", compute_n, "Index n")->required();
    add_plan_flags(cmd_compute, plan, cache_arg, strict_cache);

    // metrics
    std::uint64_t metrics_n = 0;
    auto* cmd_metrics = app.add_subcommand("metrics", "Reference counts M1/M2 for one n");
    cmd_metrics->add_option("n", metrics_n, "Index n (>= 1)")->required();
    add_plan_flags(cmd_metrics, plan, cache_arg, strict_cache);

    // table
    unsigned table_residue = 0;
    std::vector<std::uint64_t> table_ns;
    auto* cmd_table = app.add_subcommand("table", "M1/M2 table for one residue class mod 4");
    cmd_table->add_option("--residue", table_residue, "Residue class (0..3)")
        ->required()
        ->check(CLI::Range(0u, 3u));
    cmd_table->add_option("ns", table_ns,
                          "Indices, all == residue (mod 4); default: the built-in sequence");
    add_plan_flags(cmd_table, plan, cache_arg, strict_cache);

    // selftest
    std::uint64_t selftest_max_n = 200;
    auto* cmd_selftest = app.add_subcommand("selftest", "Run the invariant suites");
    cmd_selftest->add_option("max_n,--max-n", selftest_max_n, "Sweep bound (>= 12)");
    add_plan_flags(cmd_selftest, plan, cache_arg, strict_cache);

    // bench
    std::vector<std::uint64_t> bench_ns;
    auto* cmd_bench = app.add_subcommand("bench", "Time computations for a list of n");
    cmd_bench->add_option("ns", bench_ns, "Indices to time")->required();
    add_plan_flags(cmd_bench, plan, cache_arg, strict_cache);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }
    finalize_plan(plan, cache_arg, strict_cache);

    try {
        if (cmd_compute->parsed()) {
            const Timer timer;
            const mpz_class value = compute_value(compute_n, plan);
            print_value(compute_n, value, plan, timer.seconds());
            return kExitOk;
        }

        if (cmd_metrics->parsed()) {
            const auto rep = overp::metrics::m2_instrumented(metrics_n);
            if (plan.output == OutputFormat::plain)
                std::cout << "n=" << rep.n << " M1=" << rep.m1 << " M2=" << rep.m2
                          << " ratio=" << rep.ratio_string() << "\n";
            else
                std::cout << metrics_record(rep).dump() << "\n";
            return kExitOk;
        }

        if (cmd_table->parsed()) {
            if (table_ns.empty())
                table_ns = default_table_ns(table_residue);
            const auto rows = overp::metrics::ratio_table(table_residue, table_ns);
            if (plan.output == OutputFormat::plain) {
                std::cout << std::left << std::setw(8) << "n" << std::setw(12) << "M1(n)"
                          << std::setw(12) << "M2(n)" << "M2/M1\n";
                for (const auto& row : rows)
                    std::cout << std::left << std::setw(8) << row.n << std::setw(12)
                              << row.m1 << std::setw(12) << row.m2 << row.ratio_string()
                              << "\n";
            } else {
                for (const auto& row : rows)
                    std::cout << metrics_record(row).dump() << "\n";
            }
            return kExitOk;
        }

        if (cmd_selftest->parsed()) {
            overp::SelftestOptions opts;
            opts.max_n = selftest_max_n;
            opts.cache_path = plan.cache_path;
            return run_selftest(opts, std::cout) ? kExitOk : kExitSelftest;
        }

        if (cmd_bench->parsed()) {
            for (const std::uint64_t n : bench_ns) {
                const Timer timer;
                const mpz_class value = compute_value(n, plan);
                const double elapsed = timer.seconds();
                const std::string digits = value.get_str();
                if (plan.output == OutputFormat::plain) {
                    std::cout << "n=" << n << " method=" << method_name(plan.method)
                              << " workers=" << plan.workers << " digits=" << digits.size()
                              << " elapsed=" << std::fixed << std::setprecision(3)
                              << elapsed << "s\n";
                } else {
                    json rec;
                    rec["n"] = n;
                    rec["method"] = method_name(plan.method);
                    rec["workers"] = plan.workers;
                    rec["digits"] = digits.size();
                    rec["elapsed"] = elapsed;
                    rec["value"] = digits;
                    std::cout << rec.dump() << "\n";
                }
            }
            return kExitOk;
        }
    } catch (const overp::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const overp::FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCache;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
