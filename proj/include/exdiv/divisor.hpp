#pragma once

#include <nlohmann/json_fwd.hpp>

#include "exdiv/chain.hpp"
#include "exdiv/numeric.hpp"

namespace exdiv {

/// Formal combination of the exceptional curves E_1..E_level of a fixed
/// chain level. Scalar is Rat (Q-divisor) or Int (integral divisor).
template <typename Scalar>
struct Divisor {
    int level = 0;
    Vector<Scalar> coeffs;
};

using QDivisor = Divisor<Rat>;
using IntegralDivisor = Divisor<Int>;

/// F(l) = E_1 + 3/2 E_2 + 7/4 E_3 + ... + (2^l-1)/2^(l-1) E_l.
QDivisor standard_f(int level);

/// Componentwise ceiling of m*F; for F = standard_f this is D(l)_m.
IntegralDivisor ceil_multiple(const QDivisor& f, const Int& m);

/// D(l)_m built directly: coeffs[n] = ceil(m (2^n - 1) / 2^(n-1)).
IntegralDivisor standard_d(int level, const Int& m);

IntegralDivisor zero_divisor(int level);

/// Exact bilinear-form evaluation (D . D').
template <typename S, typename T>
auto intersect(const Divisor<S>& a, const Divisor<T>& b, const IntMatrix& form)
    -> decltype(S(0) * T(0)) {
    if (a.level != b.level || form.rows() != a.level || form.cols() != a.level)
        throw std::invalid_argument("intersect: level mismatch");
    using R = decltype(S(0) * T(0));
    R acc(0);
    for (int i = 0; i < a.level; ++i)
        for (int j = 0; j < a.level; ++j)
            if (form(i, j) != 0) acc += R(a.coeffs[i]) * R(b.coeffs[j]) * R(form(i, j));
    return acc;
}

/// (D . E_n), 1-based curve index.
template <typename Scalar>
Scalar intersect_curve(const Divisor<Scalar>& d, int n, const IntMatrix& form) {
    if (form.rows() != d.level || form.cols() != d.level)
        throw std::invalid_argument("intersect_curve: level mismatch");
    if (n < 1 || n > d.level) throw std::out_of_range("intersect_curve: curve index out of range");
    Scalar acc(0);
    for (int i = 0; i < d.level; ++i)
        if (form(i, n - 1) != 0) acc += d.coeffs[i] * Scalar(form(i, n - 1));
    return acc;
}

/// Matrix oracle for (-D(l)_m . E_n) on the standard chain.
Int minus_dm_dot_curve(const IntMatrix& standard_form, const Int& m, int n);

/// Subcases of the residue analysis of (-D_m . E_n); X means value x,
/// X_PLUS_1 means x+1 in the relevant base-2 expansion of m.
enum class IntersectionCase {
    kCase1_1,    // n = 1, m = 2x,                      value x
    kCase1_2,    // n = 1, m = 2x+1,                    value x
    kCase2_1,    // 1<n<l, m = 2^n x + r, r < 2^(n-2),  value x
    kCase2_2,    // 1<n<l, 2^(n-2) <= r < 2^(n-1),      value x+1
    kCase2_3_1,  // 1<n<l, r = 2^(n-1)+s, s >= 2^(n-2), value x+1
    kCase2_3_2,  // 1<n<l, r = 2^(n-1)+s, s < 2^(n-2),  value x
    kCase3_1,    // n = l, m = 2^(l-1) x + r, r < 2^(l-2), value x
    kCase3_2,    // n = l, 2^(l-2) <= r < 2^(l-1),         value x+1
};

const char* to_string(IntersectionCase c);

/// (-D(l)_m . E_n) by the reduced floor formulas:
///   n = 1:      floor(m/2)
///   1 < n < l:  floor(m/2^(n-2)) - 2 floor(m/2^(n-1)) + floor(m/2^n)
///   n = l:      floor(m/2^(l-2)) - floor(m/2^(l-1))
/// Requires l >= 2 (the case analysis assumes more than one curve).
Int closed_form_intersection(const Int& m, int n, int l);

/// Same quantity by the residue-case classification; reports which subcase
/// applied. Independent route from closed_form_intersection.
Int closed_form_by_cases(const Int& m, int n, int l, IntersectionCase* which = nullptr);

/// True iff (-D . E_n) >= 0 for every curve of the level.
bool is_antinef(const IntegralDivisor& d, const IntMatrix& form);

nlohmann::json to_json(const QDivisor& d);
nlohmann::json to_json(const IntegralDivisor& d);
QDivisor qdivisor_from_json(const nlohmann::json& j);

}  // namespace exdiv
