#include <doctest.h>
#include <nlohmann/json.hpp>

#include <random>

#include "exdiv/chain.hpp"
#include "exdiv/divisor.hpp"

using namespace exdiv;

namespace {

IntMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
    IntMatrix m(rows.size(), rows.begin()->size());
    Eigen::Index i = 0;
    for (const auto& row : rows) {
        Eigen::Index j = 0;
        for (long v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

BlowupChain random_chain(std::mt19937& rng, int length) {
    std::vector<int> parents(static_cast<size_t>(length), 0);
    for (int i = 1; i < length; ++i)
        parents[static_cast<size_t>(i)] = std::uniform_int_distribution<int>(0, i)(rng);
    return BlowupChain(std::move(parents));
}

IntVector random_coeffs(std::mt19937& rng, int level) {
    IntVector v(level);
    std::uniform_int_distribution<int> dist(-5, 5);
    for (int i = 0; i < level; ++i) v[i] = dist(rng);
    return v;
}

}  // namespace

TEST_CASE("build_chain intersection forms") {
    CHECK(exact_equal(BlowupChain({0}).intersection_form(), mat({{-1}})));
    CHECK(exact_equal(BlowupChain({0, 1}).intersection_form(), mat({{-2, 1}, {1, -1}})));
    CHECK(exact_equal(BlowupChain({0, 1, 2}).intersection_form(),
                      mat({{-2, 1, 0}, {1, -2, 1}, {0, 1, -1}})));
    // A free second point gives two disjoint (-1)-curves.
    CHECK(exact_equal(BlowupChain({0, 0}).intersection_form(), mat({{-1, 0}, {0, -1}})));
    // Two children of the same curve.
    CHECK(exact_equal(BlowupChain({0, 1, 1}).intersection_form(),
                      mat({{-3, 1, 1}, {1, -1, 0}, {1, 0, -1}})));
}

TEST_CASE("build_chain rejects invalid parent lists") {
    CHECK_THROWS_AS(BlowupChain({}), std::invalid_argument);
    CHECK_THROWS_AS(BlowupChain({1}), std::invalid_argument);
    CHECK_THROWS_AS(BlowupChain({0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(BlowupChain({0, -1}), std::invalid_argument);
    CHECK_THROWS_AS(BlowupChain::standard_chain(0), std::invalid_argument);
}

TEST_CASE("truncated intersection forms") {
    const BlowupChain chain = BlowupChain::standard_chain(5);
    CHECK(exact_equal(chain.intersection_form(2), mat({{-2, 1}, {1, -1}})));
    CHECK(exact_equal(chain.intersection_form(1), mat({{-1}})));

    const IntMatrix full = chain.intersection_form(5);
    for (int i = 0; i < 5; ++i) {
        CHECK(full(i, i) == (i == 4 ? -1 : -2));
        for (int j = i + 1; j < 5; ++j) CHECK(full(i, j) == (j == i + 1 ? 1 : 0));
    }
    CHECK_THROWS_AS(chain.intersection_form(0), std::out_of_range);
    CHECK_THROWS_AS(chain.intersection_form(6), std::out_of_range);
}

TEST_CASE("truncation equals chain built from truncated parents") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const BlowupChain chain = random_chain(rng, 10);
        for (int k = 1; k <= 10; ++k) {
            std::vector<int> head(chain.parents().begin(), chain.parents().begin() + k);
            CHECK(exact_equal(chain.intersection_form(k), BlowupChain(head).intersection_form()));
        }
    }
}

TEST_CASE("pullback examples") {
    const BlowupChain chain = BlowupChain::standard_chain(6);

    // D = ceil(3 F(3)) = (3,5,6) lifts to ceil(3 F(4)) = (3,5,6,6).
    const IntegralDivisor d3 = ceil_multiple(standard_f(3), 3);
    const IntegralDivisor d4 = ceil_multiple(standard_f(4), 3);
    IntVector expected3(3), expected4(4);
    expected3 << 3, 5, 6;
    expected4 << 3, 5, 6, 6;
    CHECK(exact_equal(d3.coeffs, expected3));
    CHECK(exact_equal(d4.coeffs, expected4));
    CHECK(exact_equal(pullback(pullback_map(chain, 3, 4), d3.coeffs), d4.coeffs));

    IntVector one(1);
    one << 1;
    IntVector one_one(2);
    one_one << 1, 1;
    CHECK(exact_equal(pullback(pullback_map(chain, 1, 2), one), one_one));

    CHECK(exact_equal(pullback(pullback_map(chain, 2, 5), IntVector(IntVector::Zero(2))),
                      IntVector(IntVector::Zero(5))));

    CHECK_THROWS_AS(pullback(pullback_map(chain, 3, 4), one), std::invalid_argument);
    CHECK_THROWS_AS(pullback_map(chain, 4, 3), std::invalid_argument);
}

TEST_CASE("pullback is an isometry and kills new curves") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const BlowupChain chain = random_chain(rng, 9);
        const int a = std::uniform_int_distribution<int>(1, 6)(rng);
        const IntegralDivisor d{a, random_coeffs(rng, a)};
        const IntegralDivisor e{a, random_coeffs(rng, a)};
        const IntMatrix form_a = chain.intersection_form(a);
        const Int pairing = intersect(d, e, form_a);
        for (int b = a; b <= std::min(a + 3, chain.length()); ++b) {
            const PullbackMap map = pullback_map(chain, a, b);
            const IntegralDivisor da{b, pullback(map, d.coeffs)};
            const IntegralDivisor ea{b, pullback(map, e.coeffs)};
            const IntMatrix form_b = chain.intersection_form(b);
            CHECK(intersect(da, ea, form_b) == pairing);
            for (int n = a + 1; n <= b; ++n) CHECK(intersect_curve(da, n, form_b) == 0);
        }
    }
}

TEST_CASE("pullback composes functorially") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        const BlowupChain chain = random_chain(rng, 10);
        const int a = std::uniform_int_distribution<int>(1, 8)(rng);
        const int b = std::uniform_int_distribution<int>(a, 9)(rng);
        const int c = std::uniform_int_distribution<int>(b, 10)(rng);
        const IntVector coeffs = random_coeffs(rng, a);
        const IntVector direct = pullback(pullback_map(chain, a, c), coeffs);
        const IntVector composed =
            pullback(pullback_map(chain, b, c), pullback(pullback_map(chain, a, b), coeffs));
        CHECK(exact_equal(direct, composed));
    }
}

TEST_CASE("intersection forms are negative definite") {
    // Exhaustive over all parent lists of length <= 6.
    std::vector<std::vector<int>> stack = {{0}};
    while (!stack.empty()) {
        std::vector<int> parents = std::move(stack.back());
        stack.pop_back();
        CHECK(is_negative_definite(BlowupChain(parents).intersection_form()));
        if (parents.size() < 6) {
            for (int c = 0; c <= static_cast<int>(parents.size()); ++c) {
                auto next = parents;
                next.push_back(c);
                stack.push_back(std::move(next));
            }
        }
    }
    // Random longer chains.
    std::mt19937 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        const int length = std::uniform_int_distribution<int>(1, 12)(rng);
        CHECK(is_negative_definite(random_chain(rng, length).intersection_form()));
    }
}

TEST_CASE("is_negative_definite rejects indefinite matrices") {
    CHECK_FALSE(is_negative_definite(mat({{1}})));
    CHECK_FALSE(is_negative_definite(mat({{-1, 2}, {2, -1}})));
    CHECK_FALSE(is_negative_definite(mat({{0, 0}, {0, -1}})));
}

TEST_CASE("exact determinants") {
    CHECK(determinant(mat({{-2, 1}, {1, -1}})) == 1);
    // Blowup forms are unimodular: det = (-1)^l.
    CHECK(determinant(BlowupChain::standard_chain(5).intersection_form()) == -1);
    CHECK(determinant(BlowupChain::standard_chain(6).intersection_form()) == 1);
    CHECK(determinant(mat({{1, 2}, {2, 4}})) == 0);
    CHECK(determinant(mat({{0, 1}, {1, 0}})) == -1);
}

TEST_CASE("chain JSON ingestion") {
    const auto j = nlohmann::json{{"length", 2}, {"parents", {0, 1}}};
    CHECK(exact_equal(BlowupChain::from_json(j).intersection_form(), mat({{-2, 1}, {1, -1}})));

    CHECK_THROWS(BlowupChain::from_json(nlohmann::json{{"length", 3}, {"parents", {0, 1}}}));
    CHECK_THROWS(BlowupChain::from_json(nlohmann::json{{"parents", {0, 1}}}));
}
