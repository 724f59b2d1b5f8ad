#pragma once

#include "ratdec/decomp.hpp"
#include "ratdec/johnson.hpp"

namespace ratdec {

/// The perturbation ledger for Delta M = M-hat - M|_G: the exact infinity
/// norm, the leading-order analytic bound, and the two positivity flags.
/// The o(v^{k-t}) terms of the analytic bound are not computable at finite v
/// and are deliberately absent; analytic_bound is leading order only.
struct BoundReport {
    int t = 0;
    int k = 0;
    int v = 0;
    Rat eps;               // exact density epsilon of G
    Int delta_norm;        // exact ||Delta M||_inf
    Rat analytic_bound;    // C(v-t,k-t) C(k,t)^2 eps, leading order
    Int theta_t;           // least eigenvalue of the full M
    Rat threshold;         // 1/2 C(k,t)^{-2}
    bool norm_below_half_theta_t = false;  // ||Delta M||_inf < theta_t / 2
    bool eps_below_threshold = false;
};

/// Exact ||Delta M||_inf = max over edge rows T of
/// sum_U (M|_G(T,U) - M-hat(T,U)). Delta M <= 0 entrywise is checked along
/// the way.
Int delta_norm(const TGraph& g, int k);

BoundReport bound_report(const TGraph& g, int k);

/// Exact per-edge clique-extension statistics, for display next to their
/// leading-order density lower bounds (never asserted against them: the o(1)
/// terms are unquantified).
struct ExtensionCounts {
    Int count_a;  // edges U with |T\U| = i and T∪U inducing a clique
    Int min_b;    // min over those U of k-cliques containing T∪U (0 when none)
    Rat bound_a;  // C(t,i) C(v,i) [1 - C(t+i,i) eps], leading order
    Rat bound_b;  // C(v-t-i,k-t-i) [1 - (C(k,t) - C(t+i,i)) eps], leading order
};

ExtensionCounts extension_counts(const TGraph& g, const std::vector<int>& edge, int i, int k);

}  // namespace ratdec
