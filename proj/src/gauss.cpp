#include "exdiv/gauss.hpp"

#include <nlohmann/json.hpp>

namespace exdiv {

LaurentPoly::LaurentPoly(const Rat& c) {
    if (c != 0) terms_[0] = c;
}

LaurentPoly LaurentPoly::term(const Rat& c, long t_exponent) {
    LaurentPoly p;
    if (c != 0) p.terms_[t_exponent] = c;
    return p;
}

std::optional<long> LaurentPoly::order() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
}

void LaurentPoly::prune() {
    for (auto it = terms_.begin(); it != terms_.end();)
        it = (it->second == 0) ? terms_.erase(it) : std::next(it);
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

LaurentPoly operator+(const LaurentPoly& x, const LaurentPoly& y) {
    LaurentPoly out = x;
    for (const auto& [e, c] : y.terms_) out.terms_[e] += c;
    out.prune();
    return out;
}

LaurentPoly operator-(const LaurentPoly& x, const LaurentPoly& y) {
    return x + (-y);
}

LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
    LaurentPoly out;
    for (const auto& [ex, cx] : x.terms_)
        for (const auto& [ey, cy] : y.terms_) out.terms_[ex + ey] += cx * cy;
    out.prune();
    return out;
}

GaussPolynomial::GaussPolynomial(std::vector<LaurentPoly> coeffs) : coeffs_(std::move(coeffs)) {
    prune();
}

void GaussPolynomial::prune() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const LaurentPoly& GaussPolynomial::coeff(int i) const {
    static const LaurentPoly zero;
    if (i < 0 || i > degree()) return zero;
    return coeffs_[static_cast<size_t>(i)];
}

GaussPolynomial operator*(const GaussPolynomial& x, const GaussPolynomial& y) {
    if (x.is_zero() || y.is_zero()) return GaussPolynomial();
    std::vector<LaurentPoly> coeffs(x.coeffs_.size() + y.coeffs_.size() - 1);
    for (size_t i = 0; i < x.coeffs_.size(); ++i)
        for (size_t j = 0; j < y.coeffs_.size(); ++j)
            coeffs[i + j] = coeffs[i + j] + x.coeffs_[i] * y.coeffs_[j];
    return GaussPolynomial(std::move(coeffs));
}

GaussPolynomial GaussPolynomial::from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial JSON: expected array per z-degree");
    std::vector<LaurentPoly> coeffs;
    coeffs.reserve(j.size());
    for (const auto& entry : j) {
        LaurentPoly a;
        for (const auto& [exponent, value] : entry.items())
            a = a + LaurentPoly::term(rat_from_string(value.get<std::string>()),
                                      std::stol(exponent));
        coeffs.push_back(std::move(a));
    }
    return GaussPolynomial(std::move(coeffs));
}

std::optional<Int> gauss_value(const GaussPolynomial& f) {
    std::optional<Int> best;
    for (int i = 0; i <= f.degree(); ++i) {
        const auto v = f.coeff(i).order();
        if (!v) continue;
        const Int candidate = Int(*v) + i;
        if (!best || candidate < *best) best = candidate;
    }
    return best;
}

bool gauss_multiplicativity_check(const GaussPolynomial& f, const GaussPolynomial& g) {
    if (f.is_zero() || g.is_zero())
        throw std::invalid_argument("gauss_multiplicativity_check: inputs must be nonzero");
    const auto wf = gauss_value(f);
    const auto wg = gauss_value(g);
    const auto wfg = gauss_value(f * g);
    return wf && wg && wfg && *wfg == *wf + *wg;
}

Int extended_ideal_value(const ValueSequence& a, int n) {
    if (a.pair_valued())
        throw std::invalid_argument("extended_ideal_value: sequence must be integer valued");
    if (n < 0 || n > a.bound())
        throw std::out_of_range("extended_ideal_value: n beyond sequence bound");
    Int best = n;  // i = 0 term, a(0) = 0
    for (int i = 1; i <= n; ++i) {
        const Int candidate = a.value(i).first + (n - i);
        if (candidate < best) best = candidate;
    }
    return best;
}

GaussPolynomial random_gauss_polynomial(std::mt19937& rng, int max_z_degree, int max_t_degree) {
    if (max_z_degree < 0 || max_t_degree < 0)
        throw std::invalid_argument("random_gauss_polynomial: negative degree bound");
    std::uniform_int_distribution<int> z_degree(0, max_z_degree);
    std::uniform_int_distribution<int> t_exp(0, max_t_degree);
    std::uniform_int_distribution<int> numer(-9, 9);
    std::uniform_int_distribution<int> denom(1, 4);
    std::uniform_int_distribution<int> keep(0, 2);  // some zero coefficients

    while (true) {
        const int d = z_degree(rng);
        std::vector<LaurentPoly> coeffs(static_cast<size_t>(d) + 1);
        for (auto& a : coeffs) {
            if (keep(rng) == 0) continue;
            const int terms = 1 + t_exp(rng);
            for (int k = 0; k < terms; ++k)
                a = a + LaurentPoly::term(Rat(numer(rng), denom(rng)), t_exp(rng));
        }
        GaussPolynomial f(std::move(coeffs));
        if (!f.is_zero()) return f;
    }
}

std::vector<int> associated_graded_dimensions(const std::vector<int>& generators, int bound) {
    if (generators.empty())
        throw std::invalid_argument("associated_graded_dimensions: empty generator set");
    for (int g : generators)
        if (g < 1) throw std::invalid_argument("associated_graded_dimensions: generators must be positive");
    if (bound < 0) throw std::invalid_argument("associated_graded_dimensions: negative bound");
    // In one formal variable t, there is exactly one monomial per attainable
    // value, so the count at level n is semigroup membership.
    std::vector<char> reachable(static_cast<size_t>(bound) + 1, 0);
    reachable[0] = 1;
    for (int n = 1; n <= bound; ++n)
        for (int g : generators)
            if (g <= n && reachable[static_cast<size_t>(n - g)]) {
                reachable[static_cast<size_t>(n)] = 1;
                break;
            }
    return std::vector<int>(reachable.begin(), reachable.end());
}

}  // namespace exdiv
