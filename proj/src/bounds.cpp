#include "ratdec/bounds.hpp"

#include <algorithm>

namespace ratdec {

namespace {

int difference_size(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t i = 0, j = 0, common = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) ++common, ++i, ++j;
        else if (a[i] < b[j]) ++i;
        else ++j;
    }
    return static_cast<int>(a.size() - common);
}

std::vector<int> set_union_sorted(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

Int delta_norm(const TGraph& g, int k) {
    const CoverageMatrix cov = build_Mhat(g, k);
    const long m = cov.entries.size();
    const JohnsonParams p(g.t(), k, g.v());

    std::vector<Int> xis(static_cast<std::size_t>(g.t()) + 1);
    for (int i = 0; i <= g.t(); ++i) xis[static_cast<std::size_t>(i)] = xi(p, i);

    std::vector<std::vector<int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (std::size_t r : cov.edge_index) edges.push_back(g.unrank(r));

    Int best = 0;
    for (long a = 0; a < m; ++a) {
        Int row_sum = 0;
        for (long b = 0; b < m; ++b) {
            const int d = difference_size(edges[static_cast<std::size_t>(a)], edges[static_cast<std::size_t>(b)]);
            const Int gap = xis[static_cast<std::size_t>(d)] - cov.entries.at(a, b);
            if (gap < 0) throw std::logic_error("delta_norm: M-hat entry exceeds M, restriction broken");
            row_sum += gap;
        }
        if (row_sum > best) best = row_sum;
    }
    return best;
}

BoundReport bound_report(const TGraph& g, int k) {
    BoundReport r;
    r.t = g.t();
    r.k = k;
    r.v = g.v();
    r.eps = g.density_epsilon().epsilon;
    r.delta_norm = delta_norm(g, k);
    const JohnsonParams p(g.t(), k, g.v());
    r.theta_t = theta(p, p.t);
    r.analytic_bound = Rat(binomial(r.v - r.t, k - r.t) * binomial(k, r.t) * binomial(k, r.t)) * r.eps;
    r.threshold = epsilon_threshold(r.t, k);
    r.norm_below_half_theta_t = 2 * r.delta_norm < r.theta_t;
    r.eps_below_threshold = r.eps < r.threshold;
    return r;
}

ExtensionCounts extension_counts(const TGraph& g, const std::vector<int>& edge, int i, int k) {
    if (!g.has_edge(edge)) throw std::invalid_argument("extension_counts: T is not an edge of G");
    if (i < 0 || i > g.t()) throw std::invalid_argument("extension_counts: index i out of range");
    const int t = g.t();
    const int v = g.v();

    ExtensionCounts out;
    out.count_a = 0;
    out.min_b = 0;
    bool have_b = false;
    for (std::size_t r : g.edge_ranks()) {
        const std::vector<int> u = g.unrank(r);
        if (difference_size(edge, u) != i) continue;
        const std::vector<int> joint = set_union_sorted(edge, u);
        if (!g.is_clique(joint)) continue;
        ++out.count_a;
        const Int covering =
            static_cast<int>(joint.size()) <= k ? g.count_cliques_containing(joint, k) : Int(0);
        if (!have_b || covering < out.min_b) {
            out.min_b = covering;
            have_b = true;
        }
    }

    const Rat eps = g.density_epsilon().epsilon;
    out.bound_a = Rat(binomial(t, i) * binomial(v, i)) * (Rat(1) - Rat(binomial(t + i, i)) * eps);
    out.bound_b = Rat(binomial(v - t - i, k - t - i)) *
                  (Rat(1) - Rat(binomial(k, t) - binomial(t + i, i)) * eps);
    return out;
}

}  // namespace ratdec
