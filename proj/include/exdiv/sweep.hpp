#pragma once

#include <nlohmann/json_fwd.hpp>

#include <iosfwd>
#include <string>
#include <vector>

#include "exdiv/divisor.hpp"

namespace exdiv {

struct SweepConfig {
    int l_max = 12;
    long m_max = 4096;
    int jobs = 1;
    bool check_closed_form = true;
    bool check_antinef = true;
    bool check_pullback = true;
    bool check_positivity = true;
};

struct CheckSummary {
    std::string name;
    long long total = 0;
    long long failures = 0;
    std::string first_counterexample;  // empty when clean
};

struct SweepReport {
    std::vector<CheckSummary> checks;

    bool passed() const;
    long long total_comparisons() const;
    nlohmann::json to_json() const;
};

/// Runs the full property sweep on the standard chain:
///   closed_form_vs_matrix — both closed-form routes against the matrix oracle
///   antinef               — -D(l)_m nef for every (l, m)
///   pullback_stability    — pullback of D(a)_m equals D(b)_m for m < 2^(a-1)
///   positivity            — (-D(l)_m . E_n) > 0 for m > 2^n, plus a zero
///                           witness with m <= 2^n for each n (non-vacuity)
/// Deterministic for any jobs count.
SweepReport run_verify_sweep(const SweepConfig& config);

/// Bulk TSV rows (l, m, n, matrix_value, closed_form_value, agree) of the
/// equivalence sweep, ordered by (l, m, n); byte-identical for any jobs count.
void write_equivalence_tsv(const SweepConfig& config, std::ostream& out);

/// Nefness sweep for an arbitrary round-up family ceil(m * F'); reports
/// failures honestly for families that are not antinef.
CheckSummary family_nef_sweep(const QDivisor& family, const IntMatrix& form, long m_max);

}  // namespace exdiv
