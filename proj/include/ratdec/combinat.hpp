#pragma once

#include <stdexcept>
#include <vector>

#include "ratdec/numeric.hpp"

namespace ratdec {

/// C(n, r). Out-of-range r (r < 0 or r > n) yields 0; this is the convention
/// the coverage counts rely on when k < 2t. Negative n is a usage error.
Int binomial(long n, long r);

/// Colexicographic rank of a strictly ascending subset:
/// rank = sum_i C(s[i], i+1). Independent of any ambient vertex count, so the
/// same rank keeps indexing the same subset as v grows.
Int rank_colex(const std::vector<int>& s);

/// Inverse of rank_colex: the unique ascending t-subset with the given rank,
/// by greedy largest-binomial extraction.
std::vector<int> unrank_colex(Int r, int t);

/// {0, 1, ..., t-1}, the colex-least t-subset.
std::vector<int> first_colex_subset(int t);

/// Advances s to its colex successor among t-subsets of {0..v-1}.
/// Returns false when s was already the last subset (s is left unchanged).
bool next_colex_subset(std::vector<int>& s, int v);

/// Visits all C(v,t) t-subsets of {0..v-1} in colex order; the subset passed
/// to the visitor at step i has rank i.
template <typename F>
void for_each_subset(int v, int t, F&& visit) {
    if (t < 0 || t > v) throw std::invalid_argument("for_each_subset: need 0 <= t <= v");
    std::vector<int> s = first_colex_subset(t);
    do {
        visit(static_cast<const std::vector<int>&>(s));
    } while (next_colex_subset(s, v));
}

}  // namespace ratdec
