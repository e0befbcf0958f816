// Built-in invariant suites behind `overp selftest`.

#include "overp/selftest.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include <unistd.h>

#include "overp/errors.hpp"
#include "overp/kernel.hpp"
#include "overp/metrics.hpp"
#include "overp/oracle.hpp"
#include "overp/store.hpp"

namespace overp {

namespace {

struct SuiteRunner {
    std::ostream& out;
    bool all_ok = true;

    void run(const std::string& name, const std::function<std::string()>& body) {
        std::string detail;
        try {
            detail = body(); // empty string = pass
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        if (detail.empty()) {
            out << "ok      " << name << "\n";
        } else {
            out << "FAIL    " << name << ": " << detail << "\n";
            all_ok = false;
        }
    }
};

std::string check_cache_file(const std::filesystem::path& dir) {
    // round-trip
    OverpartitionTable t;
    linear_extend(t, 256);
    const auto file = dir / "roundtrip.cache";
    store::save(t, file);
    if (!(store::load(file) == t))
        return "round-trip mismatch";

    // rejection of synthesized corrupt files
    struct Corrupt {
        const char* name;
        const char* body;
    };
    const Corrupt cases[] = {
        {"bad magic", "OVERP2\n1\n0\t1\n"},
        {"odd value", "OVERP1\n2\n0\t1\n1\t15\n"},
        {"index gap", "OVERP1\n3\n0\t1\n2\t4\n3\t8\n"},
        {"count overrun", "OVERP1\n3\n0\t1\n1\t2\n"},
        {"non-integer", "OVERP1\n2\n0\t1\nx\t2\n"},
    };
    for (const auto& c : cases) {
        const auto bad = dir / "corrupt.cache";
        {
            std::ofstream f(bad, std::ios::binary | std::ios::trunc);
            f << c.body;
        }
        try {
            (void)store::load(bad);
            return std::string("accepted corrupt file (") + c.name + ")";
        } catch (const FormatError&) {
            // expected
        }
    }
    return {};
}

} // namespace

bool run_selftest(const SelftestOptions& opts, std::ostream& out) {
    const std::uint64_t max_n = opts.max_n;
    if (max_n < 12)
        throw DomainError("selftest needs max_n >= 12 to cover all residue classes");
    SuiteRunner suite{out};

    OverpartitionTable table;
    linear_extend(table, max_n);

    suite.run("cross-method", [&]() -> std::string {
        for (std::uint64_t n = 0; n <= max_n; ++n)
            if (nonlinear_value(table, n) != table[n])
                return "step form disagrees with linear at n=" + std::to_string(n);
        const std::uint64_t probes[] = {0, 1, 2, 3, max_n / 2, max_n - 3, max_n - 2,
                                        max_n - 1, max_n};
        for (const unsigned workers : {1u, 2u, 8u}) {
            ComputePlan plan;
            plan.workers = workers;
            for (const std::uint64_t n : probes)
                if (hybrid_compute(n, plan) != table[n])
                    return "hybrid(workers=" + std::to_string(workers) +
                           ") disagrees at n=" + std::to_string(n);
        }
        return {};
    });

    suite.run("oracle", [&]() -> std::string {
        const auto dp = oracle::enumerate_overpartitions_prefix(max_n);
        const auto inv = oracle::invert(oracle::theta_prefix(max_n + 1));
        for (std::uint64_t n = 0; n <= max_n; ++n) {
            if (dp[n] != table[n])
                return "enumeration oracle disagrees at n=" + std::to_string(n);
            if (inv.coeffs[n] != table[n])
                return "series inversion disagrees at n=" + std::to_string(n);
        }
        return {};
    });

    suite.run("identities", [&]() -> std::string {
        const OddSeriesView view{table};
        const auto odd_dp = oracle::enumerate_odd_prefix(max_n);
        for (std::uint64_t n = 0; n <= max_n; ++n) {
            if (!check_convolution(table, n))
                return "convolution identity fails at n=" + std::to_string(n);
            const mpz_class po = podd_value(view, n);
            if (po != odd_dp[n])
                return "p_odd disagrees with oracle at m=" + std::to_string(n);
            if (po != podd_value_symmetric(view, n))
                return "p_odd symmetric form disagrees at m=" + std::to_string(n);
            if (nonlinear_value_symmetric(table, n) != table[n])
                return "symmetric step form disagrees at n=" + std::to_string(n);
        }
        return {};
    });

    suite.run("parity", [&]() -> std::string {
        const OddSeriesView view{table};
        for (std::uint64_t n = 1; n <= max_n; ++n) {
            if (mpz_even_p(table[n].get_mpz_t()) == 0)
                return "p(" + std::to_string(n) + ") is odd";
            if (mpz_even_p(podd_value(view, n).get_mpz_t()) == 0)
                return "p_odd(" + std::to_string(n) + ") is odd";
            if (table[n] <= table[n - 1])
                return "p not strictly increasing at n=" + std::to_string(n);
        }
        return {};
    });

    suite.run("table-cells", [&]() -> std::string {
        for (unsigned residue = 0; residue < 4; ++residue) {
            for (const auto& row : metrics::reference_table(residue)) {
                if (row.n > max_n)
                    continue;
                const auto rep = metrics::m2_instrumented(row.n);
                if (rep.m1 != row.m1 || rep.m2 != row.m2 || rep.ratio_string() != row.ratio)
                    return "cell mismatch at n=" + std::to_string(row.n);
            }
        }
        for (std::uint64_t m = 1; 4 * m <= max_n; ++m)
            if (metrics::m2_closed_form_4n(m) != metrics::m2_instrumented(4 * m).m2)
                return "closed form mismatch at m=" + std::to_string(m);
        return {};
    });

    suite.run("inequalities", [&]() -> std::string {
        if (!metrics::term_count_chain_holds(max_n))
            return "term-count chain violated";
        if (max_n >= 4 && !metrics::m1_sqrt_sandwich_holds(max_n / 4))
            return "M1 sqrt-sum sandwich violated";
        if (!metrics::sqrt_sum_bounds_hold(max_n))
            return "sqrt-sum bounds violated";
        return {};
    });

    suite.run("cache", [&]() -> std::string {
        namespace fs = std::filesystem;
        const fs::path dir =
            fs::temp_directory_path() / ("overp-selftest-" + std::to_string(::getpid()));
        fs::create_directories(dir);
        std::string result = check_cache_file(dir);
        std::error_code ec;
        fs::remove_all(dir, ec);
        if (!result.empty())
            return result;
        if (opts.cache_path) {
            std::error_code exists_ec;
            if (fs::exists(*opts.cache_path, exists_ec)) {
                try {
                    (void)store::load(*opts.cache_path);
                } catch (const FormatError& e) {
                    return std::string("configured cache is corrupt: ") + e.what();
                }
            }
        }
        return {};
    });

    out << (suite.all_ok ? "selftest: all suites passed\n"
                         : "selftest: FAILURES detected\n");
    return suite.all_ok;
}

} // namespace overp
