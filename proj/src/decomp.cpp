#include "ratdec/decomp.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace ratdec {

namespace {

std::vector<int> merge_unique(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::string subset_str(const std::vector<int>& s) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << "}";
    return os.str();
}

}  // namespace

const char* to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::positive: return "positive";
        case SolveStatus::positive_with_zeros: return "positive_with_zeros";
        case SolveStatus::has_negative: return "has_negative";
        case SolveStatus::singular: return "singular";
        case SolveStatus::no_cover: return "no_cover";
    }
    return "?";
}

CoverageMatrix build_Mhat(const TGraph& g, int k) {
    if (k < g.t()) throw std::invalid_argument("build_Mhat: k < t");
    CoverageMatrix cov;
    cov.edge_index = g.edge_ranks();
    const long m = static_cast<long>(cov.edge_index.size());
    if (m > kCoverageEdgeCap) throw SizeCapError("build_Mhat: edge count exceeds cap");

    std::vector<std::vector<int>> edges;
    edges.reserve(cov.edge_index.size());
    for (std::size_t r : cov.edge_index) edges.push_back(g.unrank(r));

    cov.entries = IntMatrix(m);
    for (long a = 0; a < m; ++a) {
        for (long b = a; b < m; ++b) {
            const std::vector<int> joint = merge_unique(edges[static_cast<std::size_t>(a)],
                                                        edges[static_cast<std::size_t>(b)]);
            Int count = 0;
            if (static_cast<int>(joint.size()) <= k && g.is_clique(joint))
                count = g.count_cliques_containing(joint, k);
            cov.entries.at(a, b) = count;
            cov.entries.at(b, a) = cov.entries.at(a, b);
        }
    }
    return cov;
}

SolveOutcome solve_decomposition(const TGraph& g, int k) {
    const CoverageMatrix cov = build_Mhat(g, k);
    const long m = cov.entries.size();

    // An edge covered by no k-clique makes the system unsatisfiable outright.
    for (long i = 0; i < m; ++i)
        if (cov.entries.at(i, i) == 0)
            return {SolveStatus::no_cover, {}, cov.edge_index[static_cast<std::size_t>(i)]};

    auto x = solve_exact(to_rational(cov.entries), std::vector<Rat>(static_cast<std::size_t>(m), Rat(1)));
    if (!x) return {SolveStatus::singular, {}, std::nullopt};

    for (long i = 0; i < m; ++i)
        if ((*x)[static_cast<std::size_t>(i)] < 0)
            return {SolveStatus::has_negative, std::move(*x), cov.edge_index[static_cast<std::size_t>(i)]};
    for (long i = 0; i < m; ++i)
        if ((*x)[static_cast<std::size_t>(i)] == 0)
            return {SolveStatus::positive_with_zeros, std::move(*x), cov.edge_index[static_cast<std::size_t>(i)]};
    return {SolveStatus::positive, std::move(*x), std::nullopt};
}

DecompositionCertificate expand_certificate(const TGraph& g, int k, const std::vector<Rat>& x) {
    const std::vector<std::size_t> ranks = g.edge_ranks();
    if (x.size() != ranks.size())
        throw std::invalid_argument("expand_certificate: x must be indexed by the edges of G");
    for (const Rat& xi : x)
        if (xi < 0) throw std::invalid_argument("expand_certificate: negative entry in x");

    auto index_of = [&](std::size_t rank) {
        const auto it = std::lower_bound(ranks.begin(), ranks.end(), rank);
        return static_cast<std::size_t>(it - ranks.begin());
    };

    DecompositionCertificate cert{g.t(), k, g.v(), {}};
    std::vector<int> sub(static_cast<std::size_t>(g.t()));
    g.cliques_containing({}, k, [&](const std::vector<int>& clique) {
        Rat w(0);
        for_each_subset(k, g.t(), [&](const std::vector<int>& pick) {
            for (std::size_t i = 0; i < pick.size(); ++i)
                sub[i] = clique[static_cast<std::size_t>(pick[i])];
            w += x[index_of(g.edge_rank(sub))];
        });
        if (w > 0) cert.items.push_back({clique, std::move(w)});
    });
    return cert;
}

VerifyResult verify_certificate(const TGraph& g, const DecompositionCertificate& cert) {
    if (cert.t != g.t()) return {false, "certificate uniformity t does not match graph", std::nullopt};
    if (cert.v != g.v()) return {false, "certificate vertex count does not match graph", std::nullopt};
    if (cert.k < cert.t) return {false, "certificate has k < t", std::nullopt};

    std::map<std::size_t, Rat> coverage;
    std::vector<int> sub(static_cast<std::size_t>(g.t()));
    for (const CertificateItem& item : cert.items) {
        const std::vector<int>& ks = item.kset;
        if (static_cast<int>(ks.size()) != cert.k)
            return {false, "k-set " + subset_str(ks) + " has wrong size", ks};
        for (std::size_t i = 0; i < ks.size(); ++i) {
            if (ks[i] < 0 || ks[i] >= g.v()) return {false, "k-set " + subset_str(ks) + " out of range", ks};
            if (i > 0 && ks[i] <= ks[i - 1])
                return {false, "k-set " + subset_str(ks) + " not strictly ascending", ks};
        }
        if (!(item.weight > 0))
            return {false, "non-positive weight " + to_string(item.weight) + " on " + subset_str(ks), ks};
        // Clique check re-walks every t-subset directly against the edge map,
        // accumulating coverage along the way.
        bool clique = true;
        std::vector<int> bad;
        for_each_subset(cert.k, g.t(), [&](const std::vector<int>& pick) {
            if (!clique) return;
            for (std::size_t i = 0; i < pick.size(); ++i)
                sub[i] = ks[static_cast<std::size_t>(pick[i])];
            if (!g.has_edge(sub)) {
                clique = false;
                bad = sub;
                return;
            }
            coverage[g.edge_rank(sub)] += item.weight;
        });
        if (!clique)
            return {false, "k-set " + subset_str(ks) + " is not a clique: missing edge " + subset_str(bad), bad};
    }

    for (std::size_t r : g.edge_ranks()) {
        const auto it = coverage.find(r);
        const Rat got = (it == coverage.end()) ? Rat(0) : it->second;
        if (got != 1)
            return {false, "edge " + subset_str(g.unrank(r)) + " has coverage " + to_string(got) + ", expected 1",
                    g.unrank(r)};
    }
    // Implied by the clique checks, but re-verified: no weight may sit on a
    // non-edge.
    for (const auto& [rank, w] : coverage) {
        if (!g.has_edge_rank(rank))
            return {false, "non-edge " + subset_str(g.unrank(rank)) + " has coverage " + to_string(w),
                    g.unrank(rank)};
    }
    return {true, "", std::nullopt};
}

DecompositionCertificate trivial_complete_decomposition(const TGraph& h, int v) {
    const int p = h.v();
    const int t = h.t();
    if (h.edge_count() == 0) throw std::invalid_argument("trivial_complete_decomposition: H has no edges");
    if (p > v) throw std::invalid_argument("trivial_complete_decomposition: H has more vertices than target");
    // Aggregate of the labeled-copy weights C(v,t)/(q p! C(v,p)): per
    // placement S the q p!/C(p,t) labeled edges covering a fixed t-subset of
    // S collapse to the clique-equivalent weight C(v,t)/(C(p,t) C(v,p)).
    const Rat w = make_rat(binomial(v, t), binomial(p, t) * binomial(v, p));
    DecompositionCertificate cert{t, p, v, {}};
    for_each_subset(v, p, [&](const std::vector<int>& s) { cert.items.push_back({s, w}); });
    return cert;
}

Rat epsilon_threshold(int t, int k) {
    if (!(2 <= t && t <= k)) throw std::invalid_argument("epsilon_threshold: need 2 <= t <= k");
    const Int c = binomial(k, t);
    return make_rat(1, 2 * c * c);
}

void write_certificate(std::ostream& out, const DecompositionCertificate& cert) {
    nlohmann::json j;
    j["t"] = cert.t;
    j["k"] = cert.k;
    j["v"] = cert.v;
    j["items"] = nlohmann::json::array();
    for (const CertificateItem& item : cert.items) {
        nlohmann::json ji;
        ji["kset"] = item.kset;
        ji["weight"] = to_string(item.weight);
        j["items"].push_back(std::move(ji));
    }
    out << j.dump(2) << "\n";
}

void write_certificate_file(const std::string& path, const DecompositionCertificate& cert) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open " + path + " for writing");
    write_certificate(out, cert);
    if (!out) throw ParseError("write failed: " + path);
}

DecompositionCertificate read_certificate(std::istream& in) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("certificate: invalid JSON: ") + ex.what());
    }
    DecompositionCertificate cert;
    try {
        cert.t = j.at("t").get<int>();
        cert.k = j.at("k").get<int>();
        cert.v = j.at("v").get<int>();
        for (const auto& ji : j.at("items")) {
            CertificateItem item;
            item.kset = ji.at("kset").get<std::vector<int>>();
            item.weight = parse_rat(ji.at("weight").get<std::string>());
            cert.items.push_back(std::move(item));
        }
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("certificate: unexpected shape: ") + ex.what());
    }
    return cert;
}

DecompositionCertificate read_certificate_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return read_certificate(in);
}

}  // namespace ratdec
