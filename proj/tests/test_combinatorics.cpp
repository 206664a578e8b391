#include "gwt/combinatorics.hpp"

#include "gwt/rational.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>

using namespace gwt;

namespace {

// oracle: expand prod_{j=0}^{m-1} (j x + y) as a map (x-power, y-power) -> coeff
std::map<std::pair<int, int>, Rational> expand_stirling_product(int m) {
    std::map<std::pair<int, int>, Rational> poly{{{0, 0}, Rational(1)}};
    for (int j = 0; j < m; ++j) {
        std::map<std::pair<int, int>, Rational> next;
        for (const auto& [key, c] : poly) {
            next[{key.first + 1, key.second}] += c * Rational(j);
            next[{key.first, key.second + 1}] += c;
        }
        poly = std::move(next);
    }
    return poly;
}

// oracle: count partitions by brute-force enumeration of decreasing sequences
int count_partitions(int d, int max_part) {
    if (d == 0) return 1;
    int total = 0;
    for (int p = std::min(d, max_part); p >= 1; --p) total += count_partitions(d - p, p);
    return total;
}

// oracle: count standard Young tableaux by filling cells 1..n in all orders
int count_tableaux(const std::vector<int>& shape, std::vector<std::vector<int>>& grid, int next) {
    int n = 0;
    for (int r : shape) n += r;
    if (next > n) return 1;
    int total = 0;
    for (std::size_t i = 0; i < shape.size(); ++i) {
        std::size_t j = 0;
        while (j < grid[i].size() && grid[i][j] != 0) ++j;
        if (j >= static_cast<std::size_t>(shape[i])) continue;
        bool ok = (j == 0 || grid[i][j - 1] != 0) && (i == 0 || grid[i - 1][j] != 0);
        if (!ok) continue;
        grid[i][j] = next;
        total += count_tableaux(shape, grid, next + 1);
        grid[i][j] = 0;
    }
    return total;
}

int tableaux_oracle(const std::vector<int>& shape) {
    std::vector<std::vector<int>> grid;
    for (int r : shape) grid.emplace_back(static_cast<std::size_t>(r), 0);
    return count_tableaux(shape, grid, 1);
}

} // namespace

TEST_CASE("unsigned Stirling numbers match the product expansion") {
    CHECK(stirling_first_unsigned(3, 2) == 3); // (0x+y)(x+y)(2x+y) = 2x^2 y + 3x y^2 + y^3
    CHECK(stirling_first_unsigned(3, 0) == 0);
    CHECK(stirling_first_unsigned(0, 0) == 1);
    for (int m = 0; m <= 10; ++m) {
        CHECK(stirling_first_unsigned(m, m) == 1);
        auto poly = expand_stirling_product(m);
        for (int k = 0; k <= m; ++k) {
            Rational expect(0);
            auto it = poly.find({m - k, k});
            if (it != poly.end()) expect = it->second;
            CHECK(Rational(stirling_first_unsigned(m, k)) == expect);
        }
        CHECK(stirling_first_unsigned(m, m + 1) == 0);
    }
}

TEST_CASE("stirling recurrence") {
    for (int m = 0; m < 12; ++m)
        for (int k = 0; k <= m + 1; ++k)
            CHECK(stirling_first_unsigned(m + 1, k) ==
                  stirling_first_unsigned(m, k - 1) + m * stirling_first_unsigned(m, k));
}

TEST_CASE("partitions are complete, canonical and reverse-lexicographic") {
    auto p0 = partitions_of(0);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0].parts.empty());

    auto p2 = partitions_of(2);
    REQUIRE(p2.size() == 2);
    CHECK(p2[0].parts == std::vector<int>{2});
    CHECK(p2[1].parts == std::vector<int>{1, 1});

    CHECK(partitions_of(4).size() == 5);

    for (int d = 0; d <= 9; ++d) {
        auto ps = partitions_of(d);
        CHECK(static_cast<int>(ps.size()) == count_partitions(d, d == 0 ? 1 : d));
        for (std::size_t i = 0; i < ps.size(); ++i) {
            CHECK(ps[i].size() == d);
            // strictly decreasing in lexicographic order, parts padded by zeros
            if (i > 0) CHECK(ps[i - 1].parts > ps[i].parts);
        }
    }
}

TEST_CASE("hook-length dimension against brute-force tableaux") {
    CHECK(dimension(Partition({})) == 1);
    CHECK(dimension(Partition({5})) == 1);
    CHECK(dimension(Partition({1, 1, 1, 1})) == 1);
    CHECK(dimension(Partition({2, 1})) == 2);
    for (int d = 1; d <= 6; ++d)
        for (const auto& lambda : partitions_of(d))
            CHECK(dimension(lambda) == tableaux_oracle(lambda.parts));
}

TEST_CASE("Burnside identity: sum of squared dimensions is d!") {
    for (int d = 0; d <= 8; ++d) {
        mpz_class total = 0;
        for (const auto& lambda : partitions_of(d)) {
            mpz_class dim = dimension(lambda);
            total += dim * dim;
        }
        CHECK(total == factorial(d));
    }
}

TEST_CASE("binomial and multinomial") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(5, 6) == 0);
    for (int n = 0; n <= 12; ++n) {
        mpz_class row_sum = 0;
        for (int k = 0; k <= n; ++k) row_sum += binomial(n, k);
        CHECK(row_sum == mpz_class(1) << n);
    }
    CHECK(multinomial(4, {2, 1, 1}) == 12);
    CHECK(multinomial(4, {2, 1}) == 0); // parts must exhaust n
    CHECK(multinomial(0, {0, 0, 0}) == 1);
}

TEST_CASE("partition validation") {
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({0}), std::invalid_argument);
    CHECK(Partition({3, 1, 1}).str() == "(3,1,1)");
    CHECK(Partition({}).str() == "()");
}
