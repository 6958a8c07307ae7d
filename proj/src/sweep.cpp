#include "exdiv/sweep.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <future>
#include <ostream>
#include <sstream>

namespace exdiv {

namespace {

struct ChunkStats {
    long long total = 0;
    long long failures = 0;
    std::string first_counterexample;

    void fail(const std::string& cex) {
        ++failures;
        if (first_counterexample.empty()) first_counterexample = cex;
    }

    void merge(const ChunkStats& later) {
        total += later.total;
        failures += later.failures;
        if (first_counterexample.empty()) first_counterexample = later.first_counterexample;
    }
};

std::string cell(int l, long m, int n) {
    return "(l=" + std::to_string(l) + ", m=" + std::to_string(m) + ", n=" + std::to_string(n) +
           ")";
}

// Splits [1, m_max] into `jobs` contiguous chunks and maps `body` over them;
// results are merged in chunk order, so the outcome is jobs-independent.
template <typename Body>
std::vector<std::invoke_result_t<Body, long, long>> map_m_chunks(long m_max, int jobs,
                                                                 Body body) {
    const int chunks = static_cast<int>(std::max<long>(1, std::min<long>(jobs, m_max)));
    std::vector<std::future<std::invoke_result_t<Body, long, long>>> futures;
    futures.reserve(static_cast<size_t>(chunks));
    const long step = (m_max + chunks - 1) / chunks;
    for (int c = 0; c < chunks; ++c) {
        const long lo = 1 + c * step;
        const long hi = std::min(m_max, lo + step - 1);
        if (lo > hi) break;
        futures.push_back(std::async(std::launch::async, body, lo, hi));
    }
    std::vector<std::invoke_result_t<Body, long, long>> results;
    results.reserve(futures.size());
    for (auto& f : futures) results.push_back(f.get());
    return results;
}

}  // namespace

bool SweepReport::passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckSummary& c) { return c.failures == 0; });
}

long long SweepReport::total_comparisons() const {
    long long total = 0;
    for (const auto& c : checks) total += c.total;
    return total;
}

nlohmann::json SweepReport::to_json() const {
    nlohmann::json checks_json = nlohmann::json::array();
    for (const auto& c : checks)
        checks_json.push_back({{"name", c.name},
                               {"total", c.total},
                               {"failures", c.failures},
                               {"first_counterexample", c.first_counterexample}});
    return {{"checks", checks_json},
            {"total_comparisons", total_comparisons()},
            {"passed", passed()}};
}

SweepReport run_verify_sweep(const SweepConfig& config) {
    if (config.l_max < 1 || config.m_max < 1 || config.jobs < 1)
        throw std::invalid_argument("verify sweep: bounds and jobs must be positive");

    SweepReport report;
    const BlowupChain chain = BlowupChain::standard_chain(config.l_max);

    struct PassStats {
        ChunkStats closed_form;
        ChunkStats antinef;
        ChunkStats positivity;
    };

    ChunkStats closed_form, antinef, positivity;
    for (int l = 1; l <= config.l_max; ++l) {
        const IntMatrix form = chain.intersection_form(l);
        auto chunks = map_m_chunks(config.m_max, config.jobs, [&](long lo, long hi) {
            PassStats stats;
            for (long m = lo; m <= hi; ++m) {
                const IntegralDivisor d = standard_d(l, m);
                const IntVector minus_values = -form.lazyProduct(d.coeffs);
                if (config.check_antinef) {
                    ++stats.antinef.total;
                    bool nef = true;
                    for (int n = 0; n < l; ++n)
                        if (minus_values[n] < 0) nef = false;
                    if (!nef) stats.antinef.fail(cell(l, m, 0));
                }
                for (int n = 1; n <= l; ++n) {
                    const Int& oracle = minus_values[n - 1];
                    if (config.check_closed_form && l >= 2) {
                        ++stats.closed_form.total;
                        if (closed_form_intersection(m, n, l) != oracle ||
                            closed_form_by_cases(m, n, l) != oracle)
                            stats.closed_form.fail(cell(l, m, n));
                    }
                    if (config.check_positivity && Int(m) > pow2(n)) {
                        ++stats.positivity.total;
                        if (oracle <= 0) stats.positivity.fail(cell(l, m, n));
                    }
                }
            }
            return stats;
        });
        for (const auto& s : chunks) {
            closed_form.merge(s.closed_form);
            antinef.merge(s.antinef);
            positivity.merge(s.positivity);
        }
    }

    // Non-vacuity companion of positivity: for each curve, a vanishing
    // intersection number with some m <= 2^n must exist.
    if (config.check_positivity && config.l_max >= 2) {
        const IntMatrix form = chain.intersection_form();
        for (int n = 1; n < config.l_max; ++n) {
            const Int limit = std::min<Int>(pow2(n), config.m_max);
            ++positivity.total;
            bool found = false;
            for (Int m = 1; m <= limit && !found; ++m)
                found = (minus_dm_dot_curve(form, m, n) == 0);
            if (!found) positivity.fail("no zero witness for n=" + std::to_string(n));
        }
    }

    if (config.check_closed_form)
        report.checks.push_back({"closed_form_vs_matrix", closed_form.total,
                                 closed_form.failures, closed_form.first_counterexample});
    if (config.check_antinef)
        report.checks.push_back(
            {"antinef", antinef.total, antinef.failures, antinef.first_counterexample});

    if (config.check_pullback) {
        ChunkStats pullback_stats;
        for (int a = 2; a < config.l_max; ++a) {
            const Int stable = pow2(a - 1);
            for (int b = a + 1; b <= config.l_max; ++b) {
                const PullbackMap map = pullback_map(chain, a, b);
                for (long m = 1; Int(m) < stable && m <= config.m_max; ++m) {
                    ++pullback_stats.total;
                    const IntVector lifted = pullback(map, standard_d(a, m).coeffs);
                    if (!exact_equal(lifted, standard_d(b, m).coeffs))
                        pullback_stats.fail("(a=" + std::to_string(a) + ", b=" + std::to_string(b) +
                                            ", m=" + std::to_string(m) + ")");
                }
            }
        }
        report.checks.push_back({"pullback_stability", pullback_stats.total,
                                 pullback_stats.failures, pullback_stats.first_counterexample});
    }

    if (config.check_positivity)
        report.checks.push_back({"positivity", positivity.total, positivity.failures,
                                 positivity.first_counterexample});
    return report;
}

void write_equivalence_tsv(const SweepConfig& config, std::ostream& out) {
    out << "l\tm\tn\tmatrix_value\tclosed_form_value\tagree\n";
    const BlowupChain chain = BlowupChain::standard_chain(std::max(config.l_max, 2));
    for (int l = 2; l <= config.l_max; ++l) {
        const IntMatrix form = chain.intersection_form(l);
        auto chunks = map_m_chunks(config.m_max, config.jobs, [&](long lo, long hi) {
            std::ostringstream rows;
            for (long m = lo; m <= hi; ++m) {
                const IntegralDivisor d = standard_d(l, m);
                const IntVector minus_values = -form.lazyProduct(d.coeffs);
                for (int n = 1; n <= l; ++n) {
                    const Int closed = closed_form_intersection(m, n, l);
                    rows << l << '\t' << m << '\t' << n << '\t' << minus_values[n - 1] << '\t'
                         << closed << '\t' << (closed == minus_values[n - 1] ? 1 : 0) << '\n';
                }
            }
            return rows.str();
        });
        for (const auto& s : chunks) out << s;
    }
}

CheckSummary family_nef_sweep(const QDivisor& family, const IntMatrix& form, long m_max) {
    CheckSummary summary{"family_antinef", 0, 0, ""};
    for (long m = 1; m <= m_max; ++m) {
        ++summary.total;
        const IntegralDivisor d = ceil_multiple(family, m);
        if (!is_antinef(d, form)) {
            ++summary.failures;
            if (summary.first_counterexample.empty())
                summary.first_counterexample = "m=" + std::to_string(m);
        }
    }
    return summary;
}

}  // namespace exdiv
