#include <doctest.h>

#include <random>
#include <set>

#include "ratdec/combinat.hpp"

using namespace ratdec;

TEST_CASE("binomial values and conventions") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(6, -1) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(40, 20) == Int("137846528820"));
    CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);
}

TEST_CASE("binomial symmetry and Pascal") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const long n = 1 + static_cast<long>(rng() % 60);
        const long r = static_cast<long>(rng() % (n + 1));
        CHECK(binomial(n, r) == binomial(n, n - r));
        CHECK(binomial(n, r) == binomial(n - 1, r) + binomial(n - 1, r - 1));
    }
}

TEST_CASE("rank_colex basics") {
    CHECK(rank_colex({0, 1}) == 0);
    CHECK(rank_colex({0, 2}) == 1);
    CHECK_THROWS_AS(rank_colex({2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(rank_colex({1, 1}), std::invalid_argument);
}

TEST_CASE("rank_colex located by full enumeration") {
    // Oracle: list all 3-subsets of {0..4} in colex and find {2,3,4}.
    long oracle_rank = -1;
    long pos = 0;
    for_each_subset(5, 3, [&](const std::vector<int>& s) {
        if (s == std::vector<int>{2, 3, 4}) oracle_rank = pos;
        ++pos;
    });
    CHECK(oracle_rank == 9);
    CHECK(rank_colex({2, 3, 4}) == oracle_rank);

    // Every rank emitted by enumeration matches rank_colex.
    pos = 0;
    for_each_subset(6, 3, [&](const std::vector<int>& s) {
        CHECK(rank_colex(s) == pos);
        ++pos;
    });
}

TEST_CASE("unrank_colex examples and round trip") {
    CHECK(unrank_colex(0, 2) == std::vector<int>{0, 1});
    CHECK(unrank_colex(9, 3) == std::vector<int>{2, 3, 4});

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 1000; ++trial) {
        const int t = 1 + static_cast<int>(rng() % 5);
        const Int r = static_cast<unsigned long>(rng() % 100000);
        const std::vector<int> s = unrank_colex(r, t);
        CHECK(rank_colex(s) == r);
        for (std::size_t i = 1; i < s.size(); ++i) CHECK(s[i] > s[i - 1]);
    }
}

TEST_CASE("subset enumeration") {
    std::vector<std::vector<int>> got;
    for_each_subset(3, 2, [&](const std::vector<int>& s) { got.push_back(s); });
    CHECK(got == std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 2}});

    long empties = 0;
    for_each_subset(4, 0, [&](const std::vector<int>& s) {
        CHECK(s.empty());
        ++empties;
    });
    CHECK(empties == 1);

    std::set<std::vector<int>> distinct;
    for_each_subset(10, 3, [&](const std::vector<int>& s) { distinct.insert(s); });
    CHECK(distinct.size() == 120);
}
