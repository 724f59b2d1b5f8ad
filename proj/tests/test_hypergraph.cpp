#include <doctest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "ratdec/hypergraph.hpp"

using namespace ratdec;

namespace {

TGraph k5_minus_34() {
    TGraph g = TGraph::complete(2, 5);
    g.remove_edge({3, 4});
    return g;
}

TGraph c5() {
    TGraph g(2, 5);
    g.add_edge({0, 1});
    g.add_edge({1, 2});
    g.add_edge({2, 3});
    g.add_edge({3, 4});
    g.add_edge({0, 4});
    return g;
}

}  // namespace

TEST_CASE("degree") {
    const TGraph k5 = TGraph::complete(2, 5);
    CHECK(k5.degree({1}) == 4);
    CHECK(k5.degree({1, 2}) == 1);
    CHECK(k5_minus_34().degree({3}) == 3);
    CHECK_THROWS_AS(k5.degree({0, 1, 2}), std::invalid_argument);
}

TEST_CASE("min_codegree") {
    CHECK(TGraph::complete(2, 10).min_codegree() == 9);

    TGraph g = TGraph::complete(2, 10);
    for (int i = 0; i < 10; i += 2) g.remove_edge({i, i + 1});
    CHECK(g.min_codegree() == 8);

    CHECK(TGraph::complete(3, 6).min_codegree() == 4);
}

TEST_CASE("density_epsilon") {
    CHECK(TGraph::complete(2, 9).density_epsilon().epsilon == 0);
    CHECK(TGraph::complete(3, 7).density_epsilon().epsilon == 0);

    TGraph g = TGraph::complete(2, 20);
    for (int i = 0; i < 20; i += 2) g.remove_edge({i, i + 1});
    CHECK(g.density_epsilon().epsilon == make_rat(1, 19));
    CHECK(g.density_epsilon().delta == 18);

    CHECK(TGraph(2, 6).density_epsilon().epsilon == 1);
}

TEST_CASE("is_clique") {
    const TGraph g = k5_minus_34();
    CHECK(TGraph::complete(2, 5).is_clique({0, 2, 4}));
    CHECK_THROWS_AS(g.is_clique({3, 4, 2}), std::invalid_argument);  // unsorted input
    CHECK_FALSE(g.is_clique({2, 3, 4}));
    CHECK(g.is_clique({1, 2, 3}));
    CHECK_THROWS_AS(g.is_clique({1}), std::invalid_argument);
}

TEST_CASE("cliques_containing on the spec instances") {
    const TGraph complete = TGraph::complete(2, 7);
    CHECK(complete.count_cliques_containing({0, 1}, 4) == binomial(5, 2));

    const TGraph g = k5_minus_34();
    CHECK(g.cliques_containing({0, 1}, 3) ==
          std::vector<std::vector<int>>{{0, 1, 2}, {0, 1, 3}, {0, 1, 4}});
    CHECK(g.cliques_containing({0, 3}, 3) == oracle::cliques_containing_bruteforce(g, {0, 3}, 3));
    CHECK(g.count_cliques_containing({0, 3}, 3) == 2);

    CHECK_THROWS_AS(g.cliques_containing({3, 4}, 3), std::invalid_argument);  // W not a clique
}

TEST_CASE("cliques_containing matches brute force on random graphs") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 12; ++trial) {
        const int v = 7 + static_cast<int>(rng() % 5);  // <= 11
        const int t = 2 + static_cast<int>(rng() % 2);
        const int k = t + 1 + static_cast<int>(rng() % 2);
        TGraph g = TGraph::complete(t, v);
        const std::vector<std::size_t> ranks = g.edge_ranks();
        for (std::size_t r : ranks)
            if (rng() % 5 == 0) g.remove_edge(g.unrank(r));

        CHECK(g.cliques_containing({}, k) == oracle::cliques_containing_bruteforce(g, {}, k));
        // anchored at an arbitrary edge, when one exists
        if (g.edge_count() > 0) {
            const std::vector<int> w = g.unrank(g.edge_ranks()[g.edge_count() / 2]);
            CHECK(g.cliques_containing(w, k) == oracle::cliques_containing_bruteforce(g, w, k));
        }
    }
}

TEST_CASE("degree sum identity and clique monotonicity") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 8; ++trial) {
        const int t = 2 + static_cast<int>(rng() % 2);
        const int v = t + 4 + static_cast<int>(rng() % 4);
        TGraph g = TGraph::complete(t, v);
        for (std::size_t r : g.edge_ranks())
            if (rng() % 3 == 0) g.remove_edge(g.unrank(r));

        Int total = 0;
        for_each_subset(v, t - 1, [&](const std::vector<int>& s) { total += g.degree(s); });
        CHECK(total == Int(t) * Int(static_cast<unsigned long>(g.edge_count())));

        // adding an edge never destroys a clique
        std::vector<std::vector<int>> cliques = g.cliques_containing({}, t + 1);
        for (std::size_t r = 0; r < g.subset_count(); ++r) {
            if (!g.has_edge_rank(r)) {
                g.add_edge(g.unrank(r));
                break;
            }
        }
        for (const auto& c : cliques) CHECK(g.is_clique(c));
    }
}

TEST_CASE("complete graph closed forms") {
    for (int t = 2; t <= 3; ++t)
        for (int v = t + 2; v <= t + 6; ++v) {
            const TGraph g = TGraph::complete(t, v);
            CHECK(g.min_codegree() == v - t + 1);
            CHECK(g.density_epsilon().epsilon == 0);
        }
}

TEST_CASE("gen_dense_random contract") {
    const TGraph complete = gen_dense_random(8, 2, Rat(0), 42);
    CHECK(complete.edge_count() == 28);

    const TGraph a = gen_dense_random(12, 2, make_rat(2, 11), 99);
    const TGraph b = gen_dense_random(12, 2, make_rat(2, 11), 99);
    CHECK(a.edge_ranks() == b.edge_ranks());
    CHECK(a.density_epsilon().epsilon <= make_rat(2, 11));

    const TGraph c = gen_dense_random(12, 2, make_rat(2, 11), 100);
    CHECK(a.edge_ranks() != c.edge_ranks());  // different seed, different graph (overwhelmingly)

    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        const TGraph g = gen_dense_random(10, 3, make_rat(1, 4), seed);
        CHECK(g.density_epsilon().epsilon <= make_rat(1, 4));
    }
}

TEST_CASE("tg round trip and rejects") {
    TGraph g = gen_dense_random(9, 2, make_rat(1, 8), 5);
    std::ostringstream os;
    write_tg(os, g, "round trip");
    std::istringstream is(os.str());
    const TGraph back = read_tg(is);
    CHECK(back.t() == g.t());
    CHECK(back.v() == g.v());
    CHECK(back.edge_ranks() == g.edge_ranks());

    auto reject = [](const std::string& text) {
        std::istringstream in(text);
        CHECK_THROWS_AS(read_tg(in), ParseError);
    };
    reject("");
    reject("2 5\n");                      // short header
    reject("2 5 1 9\n0 1\n");             // long header
    reject("2 5 2\n0 1\n0 1\n");          // duplicate edge
    reject("2 5 1\n1 0\n");               // not ascending
    reject("2 5 1\n0 9\n");               // out of range
    reject("2 5 2\n0 1\n");               // fewer lines than promised
    reject("2 5 1\n0 1\n2 3\n");          // trailing content
    reject("1 5 1\n0\n");                 // t < 2
    reject("2 5 1\n0 1 2\n");             // wrong arity

    std::istringstream commented("# header comment\n2 4 2\n# mid comment\n0 1\n2 3\n");
    const TGraph with_comments = read_tg(commented);
    CHECK(with_comments.edge_count() == 2);
}
