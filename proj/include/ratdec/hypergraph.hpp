#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "ratdec/combinat.hpp"

namespace ratdec {

/// Exact density of a t-graph: delta is the minimum (t-1)-subset degree and
/// epsilon = 1 - delta/(v-t+1), so the graph is (1-epsilon)-dense and no
/// smaller epsilon works.
struct DensityMeasure {
    long delta = 0;
    Rat epsilon;
};

inline constexpr std::uint64_t kMaxSubsetRanks = 1ull << 27;

/// Simple t-uniform hypergraph on vertices {0..v-1}. Edge membership is a
/// bitmap over colex ranks of t-subsets; every matrix in the pipeline
/// inherits this index order. Construction is single-threaded; after that
/// all queries are pure.
class TGraph {
public:
    TGraph(int t, int v);
    static TGraph complete(int t, int v);

    int t() const { return t_; }
    int v() const { return v_; }
    std::size_t edge_count() const { return edge_count_; }
    /// C(v,t), the size of the rank space.
    std::size_t subset_count() const { return edges_.size(); }

    void add_edge(const std::vector<int>& edge);
    void remove_edge(const std::vector<int>& edge);
    bool has_edge(const std::vector<int>& edge) const;
    bool has_edge_rank(std::size_t rank) const;
    std::size_t edge_rank(const std::vector<int>& edge) const;
    std::vector<int> unrank(std::size_t rank) const;
    /// Colex-ascending ranks of all edges.
    std::vector<std::size_t> edge_ranks() const;

    /// Number of edges containing S, |S| <= t.
    long degree(const std::vector<int>& s) const;

    /// delta_{t-1}: minimum degree over all (t-1)-subsets.
    long min_codegree() const;

    DensityMeasure density_epsilon() const;

    /// True iff every t-subset of K is an edge. |K| >= t required.
    bool is_clique(const std::vector<int>& k_set) const;

    /// Visits every k-subset K containing W that induces a clique, in colex
    /// order of K \ W. W itself must induce a clique (trivially true when
    /// |W| < t). Backtracking extension, largest added vertex first.
    void cliques_containing(const std::vector<int>& w, int k,
                            const std::function<void(const std::vector<int>&)>& visit) const;
    std::vector<std::vector<int>> cliques_containing(const std::vector<int>& w, int k) const;
    Int count_cliques_containing(const std::vector<int>& w, int k) const;

private:
    void validate_subset(const std::vector<int>& s, std::size_t expected_size, const char* what) const;
    std::uint64_t rank_of(const std::vector<int>& s) const;

    int t_ = 0;
    int v_ = 0;
    std::vector<std::vector<std::uint64_t>> choose_;  // C(a,b) for a <= v, b <= t
    std::vector<bool> edges_;
    std::size_t edge_count_ = 0;
};

/// Starts from the complete graph and removes edges one at a time in a
/// seeded random order, skipping any removal that would push epsilon above
/// target_eps. Deterministic for a fixed seed.
TGraph gen_dense_random(int v, int t, const Rat& target_eps, std::uint64_t seed);

/// .tg text format: optional '#' comment lines, a "t v m" header, then m
/// lines of t strictly ascending vertex indices. Duplicates are rejected.
TGraph read_tg(std::istream& in);
TGraph read_tg_file(const std::string& path);
void write_tg(std::ostream& out, const TGraph& g, const std::string& comment = "");
void write_tg_file(const std::string& path, const TGraph& g, const std::string& comment = "");

}  // namespace ratdec
