#include "ratdec/hypergraph.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

namespace ratdec {

TGraph::TGraph(int t, int v) : t_(t), v_(v) {
    if (t < 2) throw std::invalid_argument("TGraph: uniformity t must be >= 2");
    if (v < t) throw std::invalid_argument("TGraph: need v >= t");
    Int n = binomial(v, t);
    if (n > Int(kMaxSubsetRanks)) throw SizeCapError("TGraph: C(v,t) exceeds rank-space cap");
    choose_.assign(static_cast<std::size_t>(v) + 1, std::vector<std::uint64_t>(static_cast<std::size_t>(t) + 1, 0));
    for (int a = 0; a <= v; ++a) {
        choose_[static_cast<std::size_t>(a)][0] = 1;
        for (int b = 1; b <= std::min(a, t); ++b) {
            Int c = binomial(a, b);
            choose_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                c.fits_ulong_p() ? c.get_ui() : 0;  // only C(a,b) <= C(v,t) are ever read
        }
    }
    edges_.assign(n.get_ui(), false);
}

TGraph TGraph::complete(int t, int v) {
    TGraph g(t, v);
    std::fill(g.edges_.begin(), g.edges_.end(), true);
    g.edge_count_ = g.edges_.size();
    return g;
}

void TGraph::validate_subset(const std::vector<int>& s, std::size_t expected_size, const char* what) const {
    if (s.size() != expected_size)
        throw std::invalid_argument(std::string(what) + ": wrong subset size");
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= v_) throw std::invalid_argument(std::string(what) + ": vertex out of range");
        if (i > 0 && s[i] <= s[i - 1]) throw std::invalid_argument(std::string(what) + ": not strictly ascending");
    }
}

std::uint64_t TGraph::rank_of(const std::vector<int>& s) const {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        r += choose_[static_cast<std::size_t>(s[i])][i + 1];
    return r;
}

void TGraph::add_edge(const std::vector<int>& edge) {
    validate_subset(edge, static_cast<std::size_t>(t_), "add_edge");
    const std::uint64_t r = rank_of(edge);
    if (edges_[r]) throw std::invalid_argument("add_edge: duplicate edge");
    edges_[r] = true;
    ++edge_count_;
}

void TGraph::remove_edge(const std::vector<int>& edge) {
    validate_subset(edge, static_cast<std::size_t>(t_), "remove_edge");
    const std::uint64_t r = rank_of(edge);
    if (!edges_[r]) throw std::invalid_argument("remove_edge: edge not present");
    edges_[r] = false;
    --edge_count_;
}

bool TGraph::has_edge(const std::vector<int>& edge) const {
    validate_subset(edge, static_cast<std::size_t>(t_), "has_edge");
    return edges_[rank_of(edge)];
}

bool TGraph::has_edge_rank(std::size_t rank) const {
    if (rank >= edges_.size()) throw std::out_of_range("has_edge_rank: rank out of range");
    return edges_[rank];
}

std::size_t TGraph::edge_rank(const std::vector<int>& edge) const {
    validate_subset(edge, static_cast<std::size_t>(t_), "edge_rank");
    return rank_of(edge);
}

std::vector<int> TGraph::unrank(std::size_t rank) const {
    if (rank >= edges_.size()) throw std::out_of_range("unrank: rank out of range");
    return unrank_colex(Int(static_cast<unsigned long>(rank)), t_);
}

std::vector<std::size_t> TGraph::edge_ranks() const {
    std::vector<std::size_t> out;
    out.reserve(edge_count_);
    for (std::size_t r = 0; r < edges_.size(); ++r)
        if (edges_[r]) out.push_back(r);
    return out;
}

long TGraph::degree(const std::vector<int>& s) const {
    const int sz = static_cast<int>(s.size());
    if (sz > t_) throw std::invalid_argument("degree: subset larger than uniformity");
    validate_subset(s, s.size(), "degree");
    std::vector<int> others;
    others.reserve(static_cast<std::size_t>(v_ - sz));
    for (int x = 0; x < v_; ++x)
        if (!std::binary_search(s.begin(), s.end(), x)) others.push_back(x);
    long count = 0;
    std::vector<int> merged;
    for_each_subset(static_cast<int>(others.size()), t_ - sz, [&](const std::vector<int>& pick) {
        merged.clear();
        for (int idx : pick) merged.push_back(others[static_cast<std::size_t>(idx)]);
        merged.insert(merged.end(), s.begin(), s.end());
        std::sort(merged.begin(), merged.end());
        if (edges_[rank_of(merged)]) ++count;
    });
    return count;
}

long TGraph::min_codegree() const {
    long best = -1;
    for_each_subset(v_, t_ - 1, [&](const std::vector<int>& s) {
        long d = degree(s);
        if (best < 0 || d < best) best = d;
    });
    return best;
}

DensityMeasure TGraph::density_epsilon() const {
    DensityMeasure m;
    m.delta = min_codegree();
    m.epsilon = make_rat(Int(v_ - t_ + 1 - m.delta), Int(v_ - t_ + 1));
    return m;
}

bool TGraph::is_clique(const std::vector<int>& k_set) const {
    if (static_cast<int>(k_set.size()) < t_) throw std::invalid_argument("is_clique: set smaller than uniformity");
    validate_subset(k_set, k_set.size(), "is_clique");
    bool ok = true;
    std::vector<int> sub(static_cast<std::size_t>(t_));
    for_each_subset(static_cast<int>(k_set.size()), t_, [&](const std::vector<int>& pick) {
        if (!ok) return;
        for (std::size_t i = 0; i < pick.size(); ++i) sub[i] = k_set[static_cast<std::size_t>(pick[i])];
        if (!edges_[rank_of(sub)]) ok = false;
    });
    return ok;
}

void TGraph::cliques_containing(const std::vector<int>& w, int k,
                                const std::function<void(const std::vector<int>&)>& visit) const {
    if (k < t_) throw std::invalid_argument("cliques_containing: k < t");
    if (static_cast<int>(w.size()) > k) throw std::invalid_argument("cliques_containing: |W| > k");
    validate_subset(w, w.size(), "cliques_containing");
    if (static_cast<int>(w.size()) >= t_ && !is_clique(w))
        throw std::invalid_argument("cliques_containing: W does not induce a clique");

    std::vector<int> others;
    for (int x = 0; x < v_; ++x)
        if (!std::binary_search(w.begin(), w.end(), x)) others.push_back(x);

    const int need = k - static_cast<int>(w.size());
    std::vector<int> current(w);  // kept sorted
    std::vector<int> sub(static_cast<std::size_t>(t_));

    // current + candidate x must stay a clique: check every t-subset of
    // current ∪ {x} that contains x.
    auto compatible = [&](int x) {
        if (static_cast<int>(current.size()) + 1 < t_) return true;
        bool ok = true;
        for_each_subset(static_cast<int>(current.size()), t_ - 1, [&](const std::vector<int>& pick) {
            if (!ok) return;
            for (std::size_t i = 0; i < pick.size(); ++i) sub[i] = current[static_cast<std::size_t>(pick[i])];
            sub[static_cast<std::size_t>(t_) - 1] = x;
            std::sort(sub.begin(), sub.end());
            if (!edges_[rank_of(sub)]) ok = false;
        });
        return ok;
    };

    // Emits K \ W in colex order: the largest added vertex is chosen in the
    // outermost frame, smaller ones recurse over strictly lower indices.
    auto rec = [&](auto&& self, int slots, int hi_index) -> void {
        if (slots == 0) {
            visit(current);
            return;
        }
        for (int idx = slots - 1; idx < hi_index; ++idx) {
            const int x = others[static_cast<std::size_t>(idx)];
            if (!compatible(x)) continue;
            current.insert(std::upper_bound(current.begin(), current.end(), x), x);
            self(self, slots - 1, idx);
            current.erase(std::find(current.begin(), current.end(), x));
        }
    };
    rec(rec, need, static_cast<int>(others.size()));
}

std::vector<std::vector<int>> TGraph::cliques_containing(const std::vector<int>& w, int k) const {
    std::vector<std::vector<int>> out;
    cliques_containing(w, k, [&](const std::vector<int>& c) { out.push_back(c); });
    return out;
}

Int TGraph::count_cliques_containing(const std::vector<int>& w, int k) const {
    Int n = 0;
    cliques_containing(w, k, [&](const std::vector<int>&) { ++n; });
    return n;
}

TGraph gen_dense_random(int v, int t, const Rat& target_eps, std::uint64_t seed) {
    if (target_eps < 0 || target_eps >= 1)
        throw std::invalid_argument("gen_dense_random: need 0 <= target_eps < 1");
    TGraph g = TGraph::complete(t, v);

    // epsilon <= target  <=>  every (t-1)-degree >= ceil((1-target)(v-t+1))
    const Int denom = target_eps.get_den();
    Int dmin;
    mpz_cdiv_q(dmin.get_mpz_t(), Int((denom - target_eps.get_num()) * (v - t + 1)).get_mpz_t(),
               denom.get_mpz_t());
    const long min_degree = dmin.get_si();

    std::vector<long> codegree(static_cast<std::size_t>(binomial(v, t - 1).get_ui()), v - t + 1);

    std::vector<std::size_t> order = g.edge_ranks();
    std::mt19937_64 rng(seed);
    for (std::size_t i = order.size(); i > 1; --i)
        std::swap(order[i - 1], order[rng() % i]);

    std::vector<int> sub(static_cast<std::size_t>(t) - 1);
    for (std::size_t er : order) {
        const std::vector<int> edge = g.unrank(er);
        bool removable = true;
        std::vector<std::size_t> touched;
        touched.reserve(static_cast<std::size_t>(t));
        for (int drop = 0; drop < t; ++drop) {
            std::size_t si = 0;
            for (int j = 0; j < t; ++j)
                if (j != drop) sub[si++] = edge[static_cast<std::size_t>(j)];
            const std::size_t r = static_cast<std::size_t>(rank_colex(sub).get_ui());
            touched.push_back(r);
            if (codegree[r] - 1 < min_degree) {
                removable = false;
                break;
            }
        }
        if (!removable) continue;
        g.remove_edge(edge);
        for (std::size_t r : touched) --codegree[r];
    }
    return g;
}

TGraph read_tg(std::istream& in) {
    std::string line;
    auto next_content_line = [&](std::string& out) {
        while (std::getline(in, line)) {
            std::size_t pos = line.find_first_not_of(" \t\r");
            if (pos == std::string::npos) continue;
            if (line[pos] == '#') continue;
            out = line;
            return true;
        }
        return false;
    };

    std::string header;
    if (!next_content_line(header)) throw ParseError(".tg: missing header line");
    std::istringstream hs(header);
    long t = 0, v = 0, m = 0;
    std::string junk;
    if (!(hs >> t >> v >> m) || (hs >> junk)) throw ParseError(".tg: malformed header, expected \"t v m\"");
    if (t < 2 || v < t || m < 0) throw ParseError(".tg: header values out of range");

    TGraph g(static_cast<int>(t), static_cast<int>(v));
    if (Int(m) > binomial(v, t)) throw ParseError(".tg: more edges than C(v,t)");
    for (long e = 0; e < m; ++e) {
        std::string body;
        if (!next_content_line(body)) throw ParseError(".tg: fewer edge lines than header promises");
        std::istringstream es(body);
        std::vector<int> edge(static_cast<std::size_t>(t));
        for (long i = 0; i < t; ++i)
            if (!(es >> edge[static_cast<std::size_t>(i)])) throw ParseError(".tg: malformed edge line: " + body);
        if (es >> junk) throw ParseError(".tg: trailing tokens on edge line: " + body);
        try {
            g.add_edge(edge);
        } catch (const std::invalid_argument& ex) {
            throw ParseError(std::string(".tg: ") + ex.what());
        }
    }
    std::string extra;
    if (next_content_line(extra)) throw ParseError(".tg: trailing content after edge list");
    return g;
}

TGraph read_tg_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return read_tg(in);
}

void write_tg(std::ostream& out, const TGraph& g, const std::string& comment) {
    if (!comment.empty()) out << "# " << comment << "\n";
    out << g.t() << " " << g.v() << " " << g.edge_count() << "\n";
    for (std::size_t r : g.edge_ranks()) {
        const std::vector<int> edge = g.unrank(r);
        for (std::size_t i = 0; i < edge.size(); ++i) out << (i ? " " : "") << edge[i];
        out << "\n";
    }
}

void write_tg_file(const std::string& path, const TGraph& g, const std::string& comment) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open " + path + " for writing");
    write_tg(out, g, comment);
    if (!out) throw ParseError("write failed: " + path);
}

}  // namespace ratdec
