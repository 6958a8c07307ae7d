#include "exdiv/filtration.hpp"

#include <nlohmann/json.hpp>

#include "exdiv/divisor.hpp"

namespace exdiv {

namespace {

// Smallest k >= 0 with 2^k >= m.
int ceil_log2(const Int& m) {
    int k = 0;
    Int p = 1;
    while (p < m) {
        p <<= 1;
        ++k;
    }
    return k;
}

Int divisorial_value(int n, const Int& m) {
    return ceil_div(m * (pow2(n) - 1), pow2(n - 1));
}

nlohmann::json lex_value_json(const RatPair& v, bool pair_valued) {
    if (!pair_valued) return rat_to_string(v.first);
    return nlohmann::json::array({rat_to_string(v.first), rat_to_string(v.second)});
}

}  // namespace

ValueSequence::ValueSequence(std::vector<LexValue> values, bool pair_valued,
                             Provenance provenance)
    : values_(std::move(values)), pair_valued_(pair_valued), provenance_(provenance) {
    if (values_.empty()) throw std::invalid_argument("ValueSequence: bound must be positive");
}

const LexValue& ValueSequence::value(int m) const {
    if (m < 1 || m > bound()) throw std::out_of_range("ValueSequence: index out of bound");
    return values_[static_cast<size_t>(m) - 1];
}

std::optional<std::pair<int, int>> ValueSequence::subadditivity_violation() const {
    const int M = bound();
    for (int m = 1; m <= M; ++m)
        for (int n = m; m + n <= M; ++n)
            if (value(m) + value(n) < value(m + n)) return std::make_pair(m, n);
    return std::nullopt;
}

ValueSequence ValueSequence::from_json(const nlohmann::json& j) {
    const int M = j.at("M").get<int>();
    const auto& raw = j.at("values");
    if (M < 1 || static_cast<int>(raw.size()) != M)
        throw std::invalid_argument("sequence JSON: values size does not match M");
    const bool pair_valued = raw.at(0).is_array();
    std::vector<LexValue> values;
    values.reserve(raw.size());
    for (const auto& entry : raw) {
        if (entry.is_array() != pair_valued)
            throw std::invalid_argument("sequence JSON: mixed scalar and pair entries");
        if (pair_valued) {
            if (entry.size() != 2) throw std::invalid_argument("sequence JSON: pair needs 2 entries");
            values.emplace_back(Int(entry.at(0).get<long long>()),
                                Int(entry.at(1).get<long long>()));
        } else {
            values.emplace_back(Int(entry.get<long long>()));
        }
    }
    return ValueSequence(std::move(values), pair_valued, Provenance::kTable);
}

ValueSequence divisorial_value_sequence(int n, int bound) {
    if (n < 1) throw std::invalid_argument("divisorial_value_sequence: curve index must be positive");
    std::vector<LexValue> values;
    values.reserve(static_cast<size_t>(bound));
    for (int m = 1; m <= bound; ++m) values.emplace_back(divisorial_value(n, m));
    return ValueSequence(std::move(values), false, Provenance::kFormula);
}

ValueSequence composite_value_sequence(int n, int bound) {
    if (n < 1)
        throw std::invalid_argument("composite_value_sequence: curve index must be positive");
    std::vector<LexValue> values;
    values.reserve(static_cast<size_t>(bound));
    for (int m = 1; m <= bound; ++m) values.emplace_back(divisorial_value(n, m), Int(0));
    return ValueSequence(std::move(values), true, Provenance::kFormula);
}

CrossCheckResult coefficient_cross_check(int n, const Int& m) {
    if (n < 1 || m < 1) throw std::invalid_argument("coefficient_cross_check: bad arguments");
    CrossCheckResult result;
    result.coefficient = divisorial_value(n, m);
    // l ranges over all levels where D(l)_m is stable (m < 2^(l-1)) and E_n
    // exists, up to the stabilization horizon.
    int l_lo = std::max(n, ceil_log2(m + 1) + 1);
    while (!(m < pow2(l_lo - 1))) ++l_lo;
    const int l_hi = std::max(l_lo, std::max(n, ceil_log2(m) + 3));
    for (int l = l_lo; l <= l_hi; ++l) {
        const IntegralDivisor d = ceil_multiple(standard_f(l), m);
        if (d.coeffs[n - 1] != result.coefficient) return result;
    }
    result.ok = true;
    return result;
}

GammaReport gamma(const ValueSequence& seq) {
    const int M = seq.bound();
    for (int m = 1; m <= M; ++m)
        if (seq.value(m) < LexValue(0, 0))
            throw std::invalid_argument("gamma: negative value at m = " + std::to_string(m));
    if (auto bad = seq.subadditivity_violation())
        throw SubadditivityViolation(bad->first, bad->second);

    auto scaled = [&seq](int m) {
        const LexValue& v = seq.value(m);
        return RatPair{Rat(v.first, m), Rat(v.second, m)};
    };

    GammaReport report;
    report.bound = M;
    report.pair_valued = seq.pair_valued();
    RatPair best = scaled(1);
    int best_m = 1;
    report.trace.emplace_back(1, best);
    for (int m = 2; m <= M; ++m) {
        const RatPair q = scaled(m);
        if (q < best) {
            best = q;
            best_m = m;
            report.trace.emplace_back(m, q);
        }
    }
    report.gamma = best;
    report.witness = best_m;

    // Attained only if at least one proper multiple of the smallest
    // minimizer lies within the bound and all multiples agree.
    bool attained = 2 * best_m <= M;
    for (int k = 2; attained && k * best_m <= M; ++k)
        if (!(scaled(k * best_m) == best)) attained = false;
    report.status =
        attained ? GammaReport::Status::kAttained : GammaReport::Status::kNotAttainedUpTo;
    if (!attained) report.witness = 0;
    return report;
}

CenterStatus center_criterion(const ValueSequence& seq) {
    const GammaReport report = gamma(seq);
    if (report.status == GammaReport::Status::kAttained)
        return CenterStatus{CenterStatus::Kind::kHasCenter, report.witness};
    return CenterStatus{CenterStatus::Kind::kUnknownUpTo, seq.bound()};
}

CertificateReport distinct_components_certificate(int N) {
    if (N < 2) throw std::invalid_argument("distinct_components_certificate: N must be >= 2");
    CertificateReport report;
    report.N = N;
    report.m = pow2(N) + 1;  // minimal uniform m with m > 2^n for all n <= N
    report.l = N + ceil_log2(report.m) + 2;

    const BlowupChain chain = BlowupChain::standard_chain(report.l);
    const IntMatrix& form = chain.intersection_form();
    const IntegralDivisor d = standard_d(report.l, report.m);
    const IntVector minus_values = -form.lazyProduct(d.coeffs);
    report.intersections.reserve(static_cast<size_t>(N));
    for (int n = 1; n <= N; ++n) report.intersections.push_back(minus_values[n - 1]);

    for (int a = 1; a < N; ++a) {
        for (int b = a + 1; b <= N; ++b) {
            DistinguishingWitness w;
            w.a = a;
            w.b = b;
            for (int m = 2;; ++m) {
                w.va = divisorial_value(a, m);
                w.vb = divisorial_value(b, m);
                if (w.va != w.vb) {
                    w.m = m;
                    break;
                }
            }
            report.witnesses.push_back(std::move(w));
        }
    }
    return report;
}

bool verify_certificate(const CertificateReport& report) {
    if (report.N < 2 || report.l <= report.N) return false;
    if (!(report.m < pow2(report.l - 1))) return false;
    if (static_cast<int>(report.intersections.size()) != report.N) return false;
    if (static_cast<int>(report.witnesses.size()) != report.N * (report.N - 1) / 2) return false;

    const BlowupChain chain = BlowupChain::standard_chain(report.l);
    const IntMatrix& form = chain.intersection_form();
    for (int n = 1; n <= report.N; ++n) {
        const Int value = minus_dm_dot_curve(form, report.m, n);
        if (value != report.intersections[static_cast<size_t>(n) - 1] || value <= 0) return false;
    }

    for (const auto& w : report.witnesses) {
        if (!(1 <= w.a && w.a < w.b && w.b <= report.N) || w.m < 1) return false;
        if (w.va == w.vb) return false;
        // Re-derive both values through divisor round-up at a stable level.
        const int l = std::max(w.b, ceil_log2(Int(w.m)) + 2);
        const IntegralDivisor d = ceil_multiple(standard_f(l), w.m);
        if (d.coeffs[w.a - 1] != w.va || d.coeffs[w.b - 1] != w.vb) return false;
    }
    return true;
}

nlohmann::json CertificateReport::to_json() const {
    nlohmann::json intersections_json = nlohmann::json::array();
    for (const auto& v : intersections) intersections_json.push_back(v.convert_to<long long>());
    nlohmann::json witnesses_json = nlohmann::json::array();
    for (const auto& w : witnesses)
        witnesses_json.push_back({{"a", w.a},
                                  {"b", w.b},
                                  {"m", w.m},
                                  {"va", w.va.convert_to<long long>()},
                                  {"vb", w.vb.convert_to<long long>()}});
    return {{"N", N},
            {"m", m.convert_to<long long>()},
            {"l", l},
            {"intersections", intersections_json},
            {"distinguishing_witnesses", witnesses_json}};
}

nlohmann::json to_json(const GammaReport& report) {
    nlohmann::json trace = nlohmann::json::array();
    for (const auto& [m, value] : report.trace)
        trace.push_back({{"m", m}, {"value", lex_value_json(value, report.pair_valued)}});
    nlohmann::json j = {{"gamma", lex_value_json(report.gamma, report.pair_valued)},
                        {"bound", report.bound},
                        {"trace", trace}};
    if (report.status == GammaReport::Status::kAttained) {
        j["status"] = "attained";
        j["witness"] = report.witness;
    } else {
        j["status"] = "not_attained_up_to";
    }
    return j;
}

}  // namespace exdiv
