#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ratdec/exactla.hpp"
#include "ratdec/hypergraph.hpp"

namespace ratdec {

inline constexpr long kCoverageEdgeCap = 1000;

/// The coverage matrix M-hat over the edges of G: entry (T,U) counts the
/// k-subsets containing T ∪ U that induce a clique in G. Symmetric, with the
/// colex edge order fixing rows and columns.
struct CoverageMatrix {
    std::vector<std::size_t> edge_index;  // colex ranks of G's edges
    IntMatrix entries;
};

CoverageMatrix build_Mhat(const TGraph& g, int k);

enum class SolveStatus { positive, positive_with_zeros, has_negative, singular, no_cover };
const char* to_string(SolveStatus s);

struct SolveOutcome {
    SolveStatus status = SolveStatus::singular;
    /// Exact solution of M-hat x = j when the system was solvable.
    std::vector<Rat> x;
    /// Edge rank of a negative/zero entry, or of an uncovered edge.
    std::optional<std::size_t> witness;
};

/// Builds M-hat and solves M-hat x = j exactly. no_cover when some edge lies
/// in no k-clique (zero diagonal); positive requires strictly positive x.
SolveOutcome solve_decomposition(const TGraph& g, int k);

struct CertificateItem {
    std::vector<int> kset;
    Rat weight;
};

/// Weighted clique list with exact coverage 1 on every edge of the target.
struct DecompositionCertificate {
    int t = 0;
    int k = 0;
    int v = 0;
    std::vector<CertificateItem> items;
};

/// Turns an edge-indexed nonnegative x into the clique-weight certificate:
/// each k-clique K of G gets weight sum of x(U) over its t-subsets U.
/// Zero-weight cliques are dropped.
DecompositionCertificate expand_certificate(const TGraph& g, int k, const std::vector<Rat>& x);

struct VerifyResult {
    bool ok = false;
    std::string message;                      // empty when ok
    std::optional<std::vector<int>> witness;  // offending t- or k-subset
};

/// Independent certificate check: re-enumerates everything from the
/// certificate and the graph alone. Verifies each listed k-set induces a
/// clique, weights are positive, coverage is exactly 1 on every edge and 0
/// elsewhere.
VerifyResult verify_certificate(const TGraph& g, const DecompositionCertificate& cert);

/// The symmetrized decomposition of the complete K_v^t into copies of H
/// (p vertices, q > 0 edges): every labeled copy gets C(v,t)/(q p! C(v,p));
/// aggregated per placement and rescaled to clique-coverage semantics each
/// p-subset carries C(v,t)/(C(p,t) C(v,p)) = 1/C(v-t,p-t).
DecompositionCertificate trivial_complete_decomposition(const TGraph& h, int v);

/// 1/2 * C(k,t)^{-2}, the density threshold under which the solution is
/// guaranteed entrywise positive asymptotically.
Rat epsilon_threshold(int t, int k);

/// Certificate JSON: {"t","k","v","items":[{"kset":[...],"weight":"p/q"}]}.
void write_certificate(std::ostream& out, const DecompositionCertificate& cert);
void write_certificate_file(const std::string& path, const DecompositionCertificate& cert);
DecompositionCertificate read_certificate(std::istream& in);
DecompositionCertificate read_certificate_file(const std::string& path);

}  // namespace ratdec
