#pragma once

#include <utility>
#include <vector>

#include "ratdec/combinat.hpp"
#include "ratdec/exactla.hpp"

namespace ratdec {

struct JohnsonParams {
    int t = 0;
    int k = 0;
    int v = 0;
    JohnsonParams(int t_, int k_, int v_);  // validates 2 <= t <= k <= v
};

inline constexpr long kBuildMCap = 1000;  // max n = C(v,t) for build_M / build_M1

/// xi_i = C(v-t-i, k-t-i): the number of k-subsets containing a fixed
/// (t+i)-set. Zero when k - t - i < 0, which is exactly the k < 2t regime.
Int xi(const JohnsonParams& p, int i);

/// First eigenmatrix of the Johnson scheme J(t,v), (t+1) x (t+1):
/// P[i][j] = sum_s (-1)^(i-s) C(t-s,i-s) C(t-j,s) C(v-t+s-j,s),
/// a Hahn-polynomial relative. Needs v >= 2t so all relations are nonempty.
IntMatrix eigenmatrix_P(const JohnsonParams& p);

/// theta_j = sum_i xi_i P[i][j], the exact eigenvalue of M on the j-th
/// eigenspace.
Int theta(const JohnsonParams& p, int j);

/// m_j = C(v,j) - C(v,j-1), the rank of the j-th primitive idempotent.
Int multiplicity(const JohnsonParams& p, int j);

/// All spectral data for one parameter set. Construction re-checks the
/// structural identities (sum of multiplicities, trace, theta_0 closed form)
/// exactly and refuses to hand out a table violating them.
struct SpectrumTable {
    JohnsonParams params;
    IntMatrix P;
    std::vector<Int> theta;  // theta_0 .. theta_t
    std::vector<Int> mult;   // m_0 .. m_t
    std::vector<Int> xi;     // xi_0 .. xi_t
    Int n;                   // C(v,t)
};
SpectrumTable compute_spectrum(const JohnsonParams& p);

/// M(T,U) = xi_{|T\U|} over all t-subsets of {0..v-1}, colex-indexed.
/// n = C(v,t) <= kBuildMCap.
IntMatrix build_M(const JohnsonParams& p);

/// M with the colex-least column replaced by the constant theta_0; this is
/// the Cramer companion M_1 = M B whose extra eigenvalues govern solution
/// positivity.
IntMatrix build_M1(const JohnsonParams& p);

/// psi(x) = 1 + theta_0 m_0/(theta_0 - x) - n^{-1} sum_j theta_j m_j/(theta_j - x),
/// the ratio det(xI - R)/prod_j (x - theta_j). Poles at the theta_j.
Rat psi_eval(const JohnsonParams& p, const Rat& x);
Rat psi_eval(const SpectrumTable& s, const Rat& x);

/// det(xI - R) expanded exactly as psi(x) * prod_j (x - theta_j); monic of
/// degree t+1. Requires the theta_j distinct (DegenerateSpectrumError
/// otherwise; repeated theta_j make the psi form invalid).
Poly charpoly_R(const JohnsonParams& p);
Poly charpoly_R(const SpectrumTable& s);

/// True iff theta_t < theta_{t-1} < ... < theta_0 strictly.
bool check_theta_order(const JohnsonParams& p);

struct RootIsolation {
    enum class Status { ordered, degenerate };
    Status status = Status::degenerate;
    /// t+1 disjoint intervals, each bracketing exactly one real root of
    /// det(xI - R), certified by an exact sign change at the endpoints.
    /// Width <= theta_t/1000; endpoints avoid the theta_j.
    std::vector<std::pair<Rat, Rat>> intervals;
    bool all_exceed_half_theta_t = false;
};

/// Exact bisection root isolation for det(xI - R), anchored at theta_t/2,
/// the gaps between consecutive theta_j, and a point beyond theta_0.
/// Degenerate (no intervals) when the theta ordering fails or theta_t <= 0.
RootIsolation isolate_R_roots(const JohnsonParams& p);
RootIsolation isolate_R_roots(const SpectrumTable& s);

}  // namespace ratdec
