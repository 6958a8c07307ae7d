#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <stdexcept>
#include <string>

namespace exdiv {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntVector = Vector<Int>;
using RatVector = Vector<Rat>;
using IntMatrix = Matrix<Int>;

/// Entrywise exact equality (no tolerance).
template <typename DerivedA, typename DerivedB>
bool exact_equal(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (!(a(i, j) == b(i, j))) return false;
    return true;
}

inline Int pow2(int e) {
    if (e < 0) throw std::invalid_argument("pow2: negative exponent");
    return Int(1) << e;
}

// floor(a / b), b > 0, correct for negative a.
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int ceil_div(const Int& a, const Int& b) {
    return -floor_div(-a, b);
}

inline Int floor_rat(const Rat& q) {
    return floor_div(numerator(q), denominator(q));
}

inline Int ceil_rat(const Rat& q) {
    return ceil_div(numerator(q), denominator(q));
}

inline std::string rat_to_string(const Rat& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

// Parses "p/q" or "p"; throws on malformed input or zero denominator.
Rat rat_from_string(const std::string& s);

}  // namespace exdiv
