#include "exdiv/divisor.hpp"

#include <nlohmann/json.hpp>

namespace exdiv {

QDivisor standard_f(int level) {
    if (level < 1) throw std::invalid_argument("standard_f: level must be positive");
    QDivisor f;
    f.level = level;
    f.coeffs.resize(level);
    for (int i = 1; i <= level; ++i)
        f.coeffs[i - 1] = Rat(pow2(i) - 1, pow2(i - 1));
    return f;
}

IntegralDivisor ceil_multiple(const QDivisor& f, const Int& m) {
    if (m < 1) throw std::invalid_argument("ceil_multiple: m must be positive");
    IntegralDivisor d;
    d.level = f.level;
    d.coeffs.resize(f.level);
    for (int i = 0; i < f.level; ++i) d.coeffs[i] = ceil_rat(Rat(m) * f.coeffs[i]);
    return d;
}

IntegralDivisor standard_d(int level, const Int& m) {
    if (level < 1) throw std::invalid_argument("standard_d: level must be positive");
    if (m < 1) throw std::invalid_argument("standard_d: m must be positive");
    IntegralDivisor d;
    d.level = level;
    d.coeffs.resize(level);
    for (int n = 1; n <= level; ++n)
        d.coeffs[n - 1] = ceil_div(m * (pow2(n) - 1), pow2(n - 1));
    return d;
}

IntegralDivisor zero_divisor(int level) {
    IntegralDivisor d;
    d.level = level;
    d.coeffs = IntVector::Zero(level);
    return d;
}

Int minus_dm_dot_curve(const IntMatrix& standard_form, const Int& m, int n) {
    const int l = static_cast<int>(standard_form.rows());
    IntegralDivisor d = standard_d(l, m);
    return -intersect_curve(d, n, standard_form);
}

const char* to_string(IntersectionCase c) {
    switch (c) {
        case IntersectionCase::kCase1_1: return "1.1";
        case IntersectionCase::kCase1_2: return "1.2";
        case IntersectionCase::kCase2_1: return "2.1";
        case IntersectionCase::kCase2_2: return "2.2";
        case IntersectionCase::kCase2_3_1: return "2.3.1";
        case IntersectionCase::kCase2_3_2: return "2.3.2";
        case IntersectionCase::kCase3_1: return "3.1";
        case IntersectionCase::kCase3_2: return "3.2";
    }
    return "?";
}

namespace {

void require_range(const Int& m, int n, int l) {
    if (l < 2) throw std::invalid_argument("closed form: requires l >= 2");
    if (n < 1 || n > l) throw std::out_of_range("closed form: curve index out of range");
    if (m < 1) throw std::invalid_argument("closed form: m must be positive");
}

}  // namespace

Int closed_form_intersection(const Int& m, int n, int l) {
    require_range(m, n, l);
    if (n == 1) return floor_div(m, 2);
    if (n < l)
        return floor_div(m, pow2(n - 2)) - 2 * floor_div(m, pow2(n - 1)) + floor_div(m, pow2(n));
    return floor_div(m, pow2(l - 2)) - floor_div(m, pow2(l - 1));
}

Int closed_form_by_cases(const Int& m, int n, int l, IntersectionCase* which) {
    require_range(m, n, l);
    IntersectionCase c;
    Int x, result;
    if (n == 1) {
        x = floor_div(m, 2);
        const Int r = m - 2 * x;
        c = (r == 0) ? IntersectionCase::kCase1_1 : IntersectionCase::kCase1_2;
        result = x;
    } else if (n < l) {
        // m = 2^n x + r, 0 <= r < 2^n
        x = floor_div(m, pow2(n));
        const Int r = m - pow2(n) * x;
        if (r < pow2(n - 2)) {
            c = IntersectionCase::kCase2_1;
            result = x;
        } else if (r < pow2(n - 1)) {
            c = IntersectionCase::kCase2_2;
            result = x + 1;
        } else {
            const Int s = r - pow2(n - 1);
            if (s >= pow2(n - 2)) {
                c = IntersectionCase::kCase2_3_1;
                result = x + 1;
            } else {
                c = IntersectionCase::kCase2_3_2;
                result = x;
            }
        }
    } else {
        // m = 2^(l-1) x + r, 0 <= r < 2^(l-1)
        x = floor_div(m, pow2(l - 1));
        const Int r = m - pow2(l - 1) * x;
        if (r < pow2(l - 2)) {
            c = IntersectionCase::kCase3_1;
            result = x;
        } else {
            c = IntersectionCase::kCase3_2;
            result = x + 1;
        }
    }
    if (which) *which = c;
    return result;
}

bool is_antinef(const IntegralDivisor& d, const IntMatrix& form) {
    for (int n = 1; n <= d.level; ++n)
        if (-intersect_curve(d, n, form) < 0) return false;
    return true;
}

nlohmann::json to_json(const QDivisor& d) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (int i = 0; i < d.level; ++i) coeffs.push_back(rat_to_string(d.coeffs[i]));
    return {{"level", d.level}, {"coeffs", coeffs}};
}

nlohmann::json to_json(const IntegralDivisor& d) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (int i = 0; i < d.level; ++i) coeffs.push_back(d.coeffs[i].str());
    return {{"level", d.level}, {"coeffs", coeffs}};
}

QDivisor qdivisor_from_json(const nlohmann::json& j) {
    QDivisor d;
    d.level = j.at("level").get<int>();
    const auto& coeffs = j.at("coeffs");
    if (d.level < 1 || static_cast<int>(coeffs.size()) != d.level)
        throw std::invalid_argument("divisor JSON: coeffs size does not match level");
    d.coeffs.resize(d.level);
    for (int i = 0; i < d.level; ++i)
        d.coeffs[i] = rat_from_string(coeffs.at(static_cast<size_t>(i)).get<std::string>());
    return d;
}

Rat rat_from_string(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rat(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational: " + s);
    }
}

}  // namespace exdiv
