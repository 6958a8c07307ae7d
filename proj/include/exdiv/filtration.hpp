#pragma once

#include <nlohmann/json_fwd.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "exdiv/numeric.hpp"

namespace exdiv {

/// Valuation value: a single integer, or a lexicographic pair for composite
/// (rank-two) valuations. Single values are stored with second = 0.
struct LexValue {
    Int first;
    Int second;

    LexValue() : first(0), second(0) {}
    LexValue(Int f) : first(std::move(f)), second(0) {}
    LexValue(Int f, Int s) : first(std::move(f)), second(std::move(s)) {}

    friend bool operator==(const LexValue& x, const LexValue& y) {
        return x.first == y.first && x.second == y.second;
    }
    friend bool operator<(const LexValue& x, const LexValue& y) {
        return x.first != y.first ? x.first < y.first : x.second < y.second;
    }
    friend bool operator<=(const LexValue& x, const LexValue& y) { return x < y || x == y; }
    friend LexValue operator+(const LexValue& x, const LexValue& y) {
        return LexValue(x.first + y.first, x.second + y.second);
    }
};

/// Exact rational pair with lexicographic order; the scaled value v(I_m)/m.
struct RatPair {
    Rat first;
    Rat second;

    friend bool operator==(const RatPair& x, const RatPair& y) {
        return x.first == y.first && x.second == y.second;
    }
    friend bool operator<(const RatPair& x, const RatPair& y) {
        return x.first != y.first ? x.first < y.first : x.second < y.second;
    }
};

struct SubadditivityViolation : std::runtime_error {
    int m;
    int n;
    SubadditivityViolation(int m_, int n_)
        : std::runtime_error("subadditivity violated at (m, n) = (" + std::to_string(m_) + ", " +
                             std::to_string(n_) + ")"),
          m(m_),
          n(n_) {}
};

enum class Provenance { kFormula, kTable };

/// Truncated value sequence m -> v(I_m) of a graded family, 1 <= m <= bound.
class ValueSequence {
public:
    ValueSequence(std::vector<LexValue> values, bool pair_valued,
                  Provenance provenance = Provenance::kTable);

    /// {"M": int, "values": [int-or-[a,b], ...]} — user-supplied families.
    static ValueSequence from_json(const nlohmann::json& j);

    int bound() const { return static_cast<int>(values_.size()); }
    const LexValue& value(int m) const;  // 1-based
    bool pair_valued() const { return pair_valued_; }
    Provenance provenance() const { return provenance_; }

    /// Smallest (m, n) with v(I_{m+n}) > v(I_m) + v(I_n), if any.
    std::optional<std::pair<int, int>> subadditivity_violation() const;

private:
    std::vector<LexValue> values_;
    bool pair_valued_;
    Provenance provenance_;
};

/// m -> ceil(m (2^n - 1) / 2^(n-1)), the value sequence of v_{E_n} on the
/// divisorial filtration {I_m}.
ValueSequence divisorial_value_sequence(int n, int bound);

/// m -> (ceil(m (2^n - 1) / 2^(n-1)), 0), the composite-valuation sequence.
ValueSequence composite_value_sequence(int n, int bound);

struct CrossCheckResult {
    bool ok = false;
    Int coefficient;  // the stable coefficient when ok
};

/// Checks that the E_n-coefficient of D(l)_m is independent of l once
/// m < 2^(l-1) (levels up to max(n, ceil(log2 m) + 3)) and equals
/// ceil(m (2^n - 1) / 2^(n-1)).
CrossCheckResult coefficient_cross_check(int n, const Int& m);

struct GammaReport {
    enum class Status { kAttained, kNotAttainedUpTo };

    RatPair gamma;  // min of value(m)/m over the truncation
    Status status = Status::kNotAttainedUpTo;
    int witness = 0;  // smallest minimizer when attained
    int bound = 0;
    bool pair_valued = false;
    // Running-infimum trace: (m, value(m)/m) at each strict improvement.
    std::vector<std::pair<int, RatPair>> trace;
};

/// Infimum estimate of v(I_m)/m with attainment status. Rejects inputs that
/// are not subadditive or take negative values. The minimum over a finite
/// range always exists; it is reported as Attained only when the smallest
/// minimizer m* has at least one proper multiple within the bound and every
/// multiple of m* attains the same scaled value. Non-attainment is never
/// certified, only "not attained up to the bound".
GammaReport gamma(const ValueSequence& seq);

struct CenterStatus {
    enum class Kind { kHasCenter, kUnknownUpTo };
    Kind kind;
    int witness = 0;  // attainment witness m, or the bound M
};

/// Finite-truncation form of the center-existence criterion: attainment of
/// the infimum certifies a center; a finite bound never certifies absence.
CenterStatus center_criterion(const ValueSequence& seq);

struct DistinguishingWitness {
    int a = 0;
    int b = 0;
    int m = 0;
    Int va;
    Int vb;
};

/// Finite certificate that the fiber cone of the filtration {I_m} has at
/// least N distinct minimal primes: positivity of (-D(l)_m . E_n) for
/// n <= N at the uniform witness m = 2^N + 1, plus a distinguishing m for
/// every pair of value sequences.
struct CertificateReport {
    int N = 0;
    Int m;
    int l = 0;
    std::vector<Int> intersections;  // (-D(l)_m . E_n) for n = 1..N
    std::vector<DistinguishingWitness> witnesses;

    nlohmann::json to_json() const;
};

CertificateReport distinct_components_certificate(int N);

/// Re-verifies every number in the certificate through the intersection
/// matrix (positivity witnesses) and divisor coefficients (value witnesses),
/// bypassing the closed forms. Returns false on any mismatch.
bool verify_certificate(const CertificateReport& report);

nlohmann::json to_json(const GammaReport& report);

}  // namespace exdiv
