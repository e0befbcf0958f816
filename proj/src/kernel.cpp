// Recurrence engines for the overpartition function p(n) and its
// odd-part companion p_odd(n).

#include "overp/kernel.hpp"

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <string>
#include <thread>
#include <vector>

#include "overp/errors.hpp"
#include "overp/intsqrt.hpp"
#include "overp/step_form.hpp"
#include "overp/store.hpp"

namespace overp {

namespace {

void require_coverage(const OverpartitionTable& table, std::uint64_t need,
                      const char* who) {
    if (!table.covers(need))
        throw TableTooShort(std::string(who) + " needs p(0.." + std::to_string(need) +
                            ") but table ends at " + std::to_string(table.max_n()));
}

// Accumulates the residue-class expansion. Weights are applied once at the
// end: result = 4*quad + 2*pair + 2*squares + last.
struct StepEvaluator {
    const std::vector<mpz_class>& v;
    mpz_class quad;    // sum over factored groups p(k)*(p(b1)+...)
    mpz_class pair;    // sum over single products p(a)p(b)
    mpz_class squares; // sum over squared terms
    mpz_class last;    // trailing p(m)^2
    mpz_class group_sum;
    const mpz_class* factor = nullptr;

    explicit StepEvaluator(const OverpartitionTable& t) : v(t.values) {}

    void group_begin(std::uint64_t k) {
        factor = &v[k];
        group_sum = 0;
    }
    void group_arg(std::uint64_t b) { group_sum += v[b]; }
    void group_end() {
        mpz_addmul(quad.get_mpz_t(), factor->get_mpz_t(), group_sum.get_mpz_t());
    }
    void product(std::uint64_t a, std::uint64_t b) {
        mpz_addmul(pair.get_mpz_t(), v[a].get_mpz_t(), v[b].get_mpz_t());
    }
    void square(std::uint64_t a) {
        mpz_addmul(squares.get_mpz_t(), v[a].get_mpz_t(), v[a].get_mpz_t());
    }
    void final_square(std::uint64_t a) {
        mpz_addmul(last.get_mpz_t(), v[a].get_mpz_t(), v[a].get_mpz_t());
    }
};

} // namespace

void linear_extend(OverpartitionTable& table, std::uint64_t target) {
    auto& v = table.values;
    if (v.empty() || v[0] != 1)
        throw DomainError("linear_extend: table must start from p(0) = 1");
    if (target < v.size())
        return;
    v.reserve(target + 1);
    for (std::uint64_t n = v.size(); n <= target; ++n) {
        v.emplace_back();
        mpz_class& out = v.back();
        const std::uint64_t r = isqrt_floor(n);
        for (std::uint64_t j = 1; j <= r; ++j) {
            if (j & 1)
                out += v[n - j * j];
            else
                out -= v[n - j * j];
        }
        out <<= 1; // p(n) = 2 (p(n-1) - p(n-4) + p(n-9) - ...)
    }
}

mpz_class nonlinear_value(const OverpartitionTable& table, std::uint64_t n) {
    return nonlinear_value(table, n, 1);
}

mpz_class nonlinear_value(const OverpartitionTable& table, std::uint64_t n,
                          unsigned workers) {
    require_coverage(table, n / 2, "nonlinear step");
    const std::uint64_t outer = detail::step_outer_count(n);

    std::uint64_t w = workers == 0 ? 1 : workers;
    w = std::min<std::uint64_t>(w, outer == 0 ? 1 : outer);

    if (w == 1) {
        StepEvaluator ev(table);
        detail::visit_step_terms(n, 0, outer, true, ev);
        return 2 * (2 * ev.quad + ev.pair + ev.squares) + ev.last;
    }

    std::vector<StepEvaluator> parts(w, StepEvaluator(table));
    std::vector<std::thread> pool;
    pool.reserve(w);
    for (std::uint64_t i = 0; i < w; ++i) {
        const std::uint64_t lo = outer * i / w;
        const std::uint64_t hik = outer * (i + 1) / w;
        pool.emplace_back([&parts, i, n, lo, hik] {
            detail::visit_step_terms(n, lo, hik, false, parts[i]);
        });
    }
    for (auto& t : pool)
        t.join();
    StepEvaluator tail(table);
    detail::visit_step_terms(n, 0, 0, true, tail); // square terms, O(sqrt n)

    mpz_class quad, pair;
    for (const auto& p : parts) {
        quad += p.quad;
        pair += p.pair;
    }
    return 2 * (2 * quad + pair + tail.squares) + tail.last;
}

mpz_class nonlinear_value_symmetric(const OverpartitionTable& table, std::uint64_t n) {
    const std::uint64_t half = n / 2;
    require_coverage(table, half, "symmetric form");
    const std::int64_t sgn = (n % 2 == 0) ? 1 : -1;
    const std::int64_t h = static_cast<std::int64_t>(half);
    const std::int64_t bound = static_cast<std::int64_t>(isqrt_floor(n)) + 3;

    mpz_class acc, inner;
    for (std::int64_t k = 0; k <= h; ++k) {
        inner = 0;
        for (std::int64_t j = -bound; j <= bound; ++j) {
            const std::int64_t arg = h - k - j * (2 * j + 1 - sgn);
            if (arg >= 0)
                inner += table.values[static_cast<std::uint64_t>(arg)];
        }
        mpz_addmul(acc.get_mpz_t(), table.values[static_cast<std::uint64_t>(k)].get_mpz_t(),
                   inner.get_mpz_t());
    }
    return acc;
}

mpz_class podd_value(const OddSeriesView& view, std::uint64_t m) {
    const auto& v = view.source.values;
    const std::uint64_t h = m / 2;
    require_coverage(view.source, h, "p_odd");

    mpz_class acc;
    if (m % 2 == 0) {
        acc = v[h];
        for (std::uint64_t k = 1; k <= isqrt_floor(h / 2); ++k)
            mpz_addmul_ui(acc.get_mpz_t(), v[h - 2 * k * k].get_mpz_t(), 2);
    } else {
        for (std::uint64_t k = 0; k <= isqrt_floor(h / 2); ++k) {
            const std::uint64_t off = 2 * k * (k + 1);
            if (off > h)
                break; // printed bound overshoots; such terms are zero
            mpz_addmul_ui(acc.get_mpz_t(), v[h - off].get_mpz_t(), 2);
        }
    }
    return acc;
}

mpz_class podd_value_symmetric(const OddSeriesView& view, std::uint64_t m) {
    const auto& v = view.source.values;
    const std::uint64_t h = m / 2;
    require_coverage(view.source, h, "p_odd symmetric form");

    const std::int64_t hh = static_cast<std::int64_t>(h);
    const std::int64_t bound = static_cast<std::int64_t>(isqrt_floor(h)) + 2;
    mpz_class acc;
    if (m % 2 == 0) {
        for (std::int64_t k = -bound; k <= bound; ++k) {
            const std::int64_t arg = hh - 2 * k * k;
            if (arg >= 0)
                acc += v[static_cast<std::uint64_t>(arg)];
        }
    } else {
        for (std::int64_t k = -bound - 1; k <= bound; ++k) {
            const std::int64_t arg = hh - 2 * k * (k + 1);
            if (arg >= 0)
                acc += v[static_cast<std::uint64_t>(arg)];
        }
    }
    return acc;
}

bool check_convolution(const OverpartitionTable& table, std::uint64_t n) {
    require_coverage(table, n, "convolution check");
    const OddSeriesView view{table};
    mpz_class acc, po;
    for (std::uint64_t k = 0; k <= n / 2; ++k) {
        po = podd_value(view, n - 2 * k);
        mpz_addmul(acc.get_mpz_t(), table.values[k].get_mpz_t(), po.get_mpz_t());
    }
    return acc == table.values[n];
}

OverpartitionTable load_or_extend(std::uint64_t target, const ComputePlan& plan) {
    OverpartitionTable table;
    if (plan.cache_path) {
        std::error_code ec;
        if (std::filesystem::exists(*plan.cache_path, ec)) {
            try {
                table = store::load(*plan.cache_path);
            } catch (const FormatError&) {
                if (!plan.cache_fallback)
                    throw;
                table = OverpartitionTable{};
            }
        }
    }
    if (table.max_n() < target) {
        linear_extend(table, target);
        if (plan.cache_path)
            store::save(table, *plan.cache_path);
    }
    return table;
}

mpz_class hybrid_compute(std::uint64_t n, const ComputePlan& plan) {
    const OverpartitionTable table = load_or_extend(n / 2, plan);
    return nonlinear_value(table, n, plan.workers);
}

} // namespace overp
