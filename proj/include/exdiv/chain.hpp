#pragma once

#include <nlohmann/json_fwd.hpp>

#include <vector>

#include "exdiv/numeric.hpp"

namespace exdiv {

/// A chain of point blowups of a nonsingular surface germ, recorded purely
/// combinatorially: curve i (1-based) arises from blowing up a point that
/// lies either on no previous exceptional curve (parent 0 = free) or on
/// exactly one previous curve (parent j < i). Satellite centers on two
/// curves are not modeled.
class BlowupChain {
public:
    static constexpr int kFree = 0;

    /// parents[i-1] is the parent of curve i; entry 1 must be free.
    explicit BlowupChain(std::vector<int> parents);

    /// The chain of §-style successive blowups: each point sits on the last
    /// curve only (parents 0,1,2,...,length-1).
    static BlowupChain standard_chain(int length);

    /// {"length": int, "parents": [0-or-index, ...]}, 0 denoting a free point.
    static BlowupChain from_json(const nlohmann::json& j);

    int length() const { return static_cast<int>(parents_.size()); }
    int parent(int i) const { return parents_.at(static_cast<size_t>(i) - 1); }
    const std::vector<int>& parents() const { return parents_; }

    /// Intersection form (E_i . E_j) of the full chain.
    const IntMatrix& intersection_form() const { return form_; }

    /// Intersection form of the chain truncated after `level` blowups.
    IntMatrix intersection_form(int level) const;

private:
    std::vector<int> parents_;
    IntMatrix form_;
};

/// Transport of divisor coefficient vectors from level a to level b >= a of
/// one chain. One blowup step leaves existing coefficients unchanged and
/// gives the new curve the coefficient of its parent (0 if free); this
/// preserves all intersection numbers.
struct PullbackMap {
    const BlowupChain* chain;
    int source_level;
    int target_level;
};

PullbackMap pullback_map(const BlowupChain& chain, int a, int b);

template <typename Scalar>
Vector<Scalar> pullback(const PullbackMap& map, const Vector<Scalar>& coeffs) {
    if (coeffs.size() != map.source_level)
        throw std::invalid_argument("pullback: divisor level does not match map source");
    Vector<Scalar> out(map.target_level);
    out.head(map.source_level) = coeffs;
    for (int i = map.source_level + 1; i <= map.target_level; ++i) {
        const int c = map.chain->parent(i);
        // c < i, so out[c-1] is already filled.
        out[i - 1] = (c == BlowupChain::kFree) ? Scalar(0) : out[c - 1];
    }
    return out;
}

/// Determinant by fraction-free (Bareiss) elimination; exact.
Int determinant(const IntMatrix& m);

/// Leading-principal-minor test: minors alternate in sign starting negative.
bool is_negative_definite(const IntMatrix& form);

}  // namespace exdiv
