#include "exdiv/chain.hpp"

#include <nlohmann/json.hpp>

namespace exdiv {

namespace {

IntMatrix form_from_parents(const std::vector<int>& parents) {
    const int l = static_cast<int>(parents.size());
    IntMatrix m = IntMatrix::Zero(l, l);
    for (int i = 0; i < l; ++i) {
        m(i, i) = -1;
        const int c = parents[i];
        if (c != BlowupChain::kFree) {
            m(i, c - 1) = 1;
            m(c - 1, i) = 1;
            m(c - 1, c - 1) -= 1;
        }
    }
    return m;
}

}  // namespace

BlowupChain::BlowupChain(std::vector<int> parents) : parents_(std::move(parents)) {
    if (parents_.empty()) throw std::invalid_argument("BlowupChain: length must be positive");
    if (parents_.front() != kFree)
        throw std::invalid_argument("BlowupChain: first blowup must be free");
    for (size_t i = 0; i < parents_.size(); ++i) {
        const int c = parents_[i];
        if (c < 0 || c > static_cast<int>(i))
            throw std::invalid_argument("BlowupChain: parent of curve " + std::to_string(i + 1) +
                                        " must be a prior curve index or 0");
    }
    form_ = form_from_parents(parents_);
}

BlowupChain BlowupChain::standard_chain(int length) {
    if (length < 1) throw std::invalid_argument("standard_chain: length must be positive");
    std::vector<int> parents(static_cast<size_t>(length));
    for (int i = 0; i < length; ++i) parents[static_cast<size_t>(i)] = i;
    return BlowupChain(std::move(parents));
}

BlowupChain BlowupChain::from_json(const nlohmann::json& j) {
    const int length = j.at("length").get<int>();
    auto parents = j.at("parents").get<std::vector<int>>();
    if (static_cast<int>(parents.size()) != length)
        throw std::invalid_argument("chain JSON: parents size does not match length");
    return BlowupChain(std::move(parents));
}

IntMatrix BlowupChain::intersection_form(int level) const {
    if (level < 1 || level > length())
        throw std::out_of_range("intersection_form: level out of range");
    std::vector<int> truncated(parents_.begin(), parents_.begin() + level);
    return form_from_parents(truncated);
}

PullbackMap pullback_map(const BlowupChain& chain, int a, int b) {
    if (a < 1 || b < a || b > chain.length())
        throw std::invalid_argument("pullback_map: need 1 <= a <= b <= length");
    return PullbackMap{&chain, a, b};
}

Int determinant(const IntMatrix& m) {
    const auto n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (Eigen::Index k = 0; k < n - 1; ++k) {
        if (a(k, k) == 0) {
            Eigen::Index p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.row(k).swap(a.row(p));
            sign = -sign;
        }
        for (Eigen::Index i = k + 1; i < n; ++i)
            for (Eigen::Index j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

bool is_negative_definite(const IntMatrix& form) {
    const auto n = form.rows();
    if (n == 0 || form.cols() != n) return false;
    int expected_sign = -1;
    for (Eigen::Index k = 1; k <= n; ++k) {
        const Int d = determinant(form.topLeftCorner(k, k));
        if ((expected_sign < 0 && d >= 0) || (expected_sign > 0 && d <= 0)) return false;
        expected_sign = -expected_sign;
    }
    return true;
}

}  // namespace exdiv
