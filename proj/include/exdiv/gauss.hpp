#pragma once

#include <nlohmann/json_fwd.hpp>

#include <map>
#include <optional>
#include <random>
#include <vector>

#include "exdiv/filtration.hpp"
#include "exdiv/numeric.hpp"

namespace exdiv {

/// Element of the concrete valued base field: a Laurent polynomial in one
/// parameter t with exact rational coefficients, valued by t-adic order.
/// Sums genuinely cancel here, so valuation identities are real tests.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const Rat& c);              // constant
    LaurentPoly(int c) : LaurentPoly(Rat(c)) {}
    static LaurentPoly term(const Rat& c, long t_exponent);

    bool is_zero() const { return terms_.empty(); }
    /// t-adic order; nullopt encodes v(0) = +infinity.
    std::optional<long> order() const;
    const std::map<long, Rat>& terms() const { return terms_; }

    LaurentPoly operator-() const;
    friend LaurentPoly operator+(const LaurentPoly& x, const LaurentPoly& y);
    friend LaurentPoly operator-(const LaurentPoly& x, const LaurentPoly& y);
    friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y);
    friend bool operator==(const LaurentPoly& x, const LaurentPoly& y) {
        return x.terms_ == y.terms_;
    }

private:
    std::map<long, Rat> terms_;  // exponent -> nonzero coefficient

    void prune();
};

/// Polynomial a_0 + a_1 z + ... + a_d z^d in the auxiliary variable z with
/// LaurentPoly coefficients.
class GaussPolynomial {
public:
    GaussPolynomial() = default;
    explicit GaussPolynomial(std::vector<LaurentPoly> coeffs);

    /// Coefficients as an array of maps {t-exponent: "p/q"} per z-degree.
    static GaussPolynomial from_json(const nlohmann::json& j);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return coeffs_.empty(); }
    const LaurentPoly& coeff(int i) const;
    const std::vector<LaurentPoly>& coeffs() const { return coeffs_; }

    friend GaussPolynomial operator*(const GaussPolynomial& x, const GaussPolynomial& y);

private:
    std::vector<LaurentPoly> coeffs_;  // trailing coefficient nonzero

    void prune();
};

/// w(f) = min{ v(a_i) + i : a_i != 0 }; nullopt encodes w(0) = +infinity.
std::optional<Int> gauss_value(const GaussPolynomial& f);

/// Multiplies f and g exactly and checks w(fg) = w(f) + w(g). Harness
/// operation; must hold for every nonzero pair.
bool gauss_multiplicativity_check(const GaussPolynomial& f, const GaussPolynomial& g);

/// w-value of the extended ideal at level n: min over i + j = n of a(i) + j,
/// with a(0) = 0 implicit. `a` must be single-integer valued with a defined
/// up to n.
Int extended_ideal_value(const ValueSequence& a, int n);

/// Nonzero random polynomial with small rational coefficients; used by the
/// multiplicativity spot-checks (z-degree <= max_z_degree, t-degree of each
/// coefficient <= max_t_degree).
GaussPolynomial random_gauss_polynomial(std::mt19937& rng, int max_z_degree, int max_t_degree);

/// Value-level shadow of the associated graded ring of a monomial family:
/// for each n <= bound, the number of monomial classes of value exactly n
/// in the toy ring generated by monomials of the given v-values (0 or 1 for
/// a numerical semigroup).
std::vector<int> associated_graded_dimensions(const std::vector<int>& generators, int bound);

}  // namespace exdiv
