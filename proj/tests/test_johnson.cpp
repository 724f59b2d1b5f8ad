#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "ratdec/johnson.hpp"

using namespace ratdec;

namespace {

// Adjacency matrix A_i of the Johnson scheme J(t,v): (T,U) with |T\U| = i.
IntMatrix scheme_adjacency(int t, int v, int i) {
    std::vector<std::vector<int>> subsets;
    for_each_subset(v, t, [&](const std::vector<int>& s) { subsets.push_back(s); });
    const long n = static_cast<long>(subsets.size());
    IntMatrix a(n);
    for (long x = 0; x < n; ++x)
        for (long y = 0; y < n; ++y) {
            std::size_t p = 0, q = 0, common = 0;
            while (p < subsets[static_cast<std::size_t>(x)].size() && q < subsets[static_cast<std::size_t>(y)].size()) {
                const int xv = subsets[static_cast<std::size_t>(x)][p], yv = subsets[static_cast<std::size_t>(y)][q];
                if (xv == yv) ++common, ++p, ++q;
                else if (xv < yv) ++p;
                else ++q;
            }
            if (static_cast<int>(subsets[static_cast<std::size_t>(x)].size() - common) == i) a.at(x, y) = 1;
        }
    return a;
}

}  // namespace

TEST_CASE("xi closed forms") {
    CHECK(xi(JohnsonParams(2, 4, 10), 1) == 7);
    CHECK(xi(JohnsonParams(2, 3, 9), 0) == 7);
    CHECK(xi(JohnsonParams(3, 4, 10), 2) == 0);
    CHECK_THROWS_AS(xi(JohnsonParams(2, 3, 9), 3), std::invalid_argument);
}

TEST_CASE("eigenmatrix P row 0 and valency column") {
    for (int t = 2; t <= 3; ++t)
        for (int v = 2 * t; v <= 10; ++v) {
            const JohnsonParams p(t, t + 1, v);
            const IntMatrix P = eigenmatrix_P(p);
            for (int j = 0; j <= t; ++j) CHECK(P.at(0, j) == 1);
            // column 0: the scheme valencies, checked against a direct count
            // of i-th associates of the fixed t-set {0..t-1}
            const std::vector<int> base = first_colex_subset(t);
            for (int i = 0; i <= t; ++i) {
                Int count = 0;
                for_each_subset(v, t, [&](const std::vector<int>& u) {
                    std::size_t a = 0, b = 0, common = 0;
                    while (a < base.size() && b < u.size()) {
                        if (base[a] == u[b]) ++common, ++a, ++b;
                        else if (base[a] < u[b]) ++a;
                        else ++b;
                    }
                    if (static_cast<int>(base.size() - common) == i) ++count;
                });
                CHECK(P.at(i, 0) == count);
                CHECK(P.at(i, 0) == binomial(t, i) * binomial(v - t, i));
            }
        }
}

TEST_CASE("eigenmatrix P specific entries at t=2, v=9") {
    const IntMatrix P = eigenmatrix_P(JohnsonParams(2, 3, 9));
    CHECK(P.at(1, 2) == -2);
    CHECK(P.at(2, 1) == 3 - 9);
}

TEST_CASE("P columns are the eigenvalue lists of the adjacency matrices (numeric oracle)") {
    const JohnsonParams p(2, 3, 9);
    const IntMatrix P = eigenmatrix_P(p);
    for (int i = 1; i <= 2; ++i) {
        const auto eig = oracle::symmetric_eigenvalues(oracle::to_double(scheme_adjacency(2, 9, i)));
        const auto groups = oracle::grouped(eig, 1e-6);
        REQUIRE(groups.size() == 3);
        // eigenvalues P[i][j] appear with multiplicity m_j; compare as sorted multisets
        std::vector<std::pair<double, int>> expected;
        for (int j = 0; j <= 2; ++j)
            expected.emplace_back(P.at(i, j).get_d(), static_cast<int>(multiplicity(p, j).get_si()));
        std::sort(expected.begin(), expected.end());
        for (std::size_t g = 0; g < groups.size(); ++g) {
            CHECK(std::abs(groups[g].first - expected[g].first) < 1e-6);
            CHECK(groups[g].second == expected[g].second);
        }
    }
}

TEST_CASE("theta values at (2,3,9), numeric eigendecomposition oracle") {
    const JohnsonParams p(2, 3, 9);
    CHECK(theta(p, 0) == binomial(7, 1) * binomial(3, 2));
    CHECK(theta(p, 0) == 21);
    CHECK(theta(p, 1) == 12);
    CHECK(theta(p, 2) == 5);

    const auto eig = oracle::symmetric_eigenvalues(oracle::to_double(build_M(p)));
    const auto groups = oracle::grouped(eig, 1e-6);
    REQUIRE(groups.size() == 3);
    // ascending: theta_2 (x27), theta_1 (x8), theta_0 (x1)
    CHECK(std::abs(groups[0].first - 5.0) < 1e-7);
    CHECK(groups[0].second == 27);
    CHECK(std::abs(groups[1].first - 12.0) < 1e-7);
    CHECK(groups[1].second == 8);
    CHECK(std::abs(groups[2].first - 21.0) < 1e-7);
    CHECK(groups[2].second == 1);
}

TEST_CASE("multiplicities") {
    const JohnsonParams p9(2, 3, 9);
    CHECK(multiplicity(p9, 0) == 1);
    CHECK(multiplicity(p9, 1) == 8);
    CHECK(multiplicity(p9, 2) == 27);

    const JohnsonParams p5(2, 3, 5);
    CHECK(multiplicity(p5, 0) == 1);
    CHECK(multiplicity(p5, 1) == 4);
    CHECK(multiplicity(p5, 2) == 5);
}

TEST_CASE("spectrum table identities across a parameter grid") {
    for (int t = 2; t <= 3; ++t)
        for (int k = t; k <= 6; ++k)
            for (int v = std::max(k, 2 * t); v <= std::max(k, 2 * t) + 6; ++v) {
                const JohnsonParams p(t, k, v);
                const SpectrumTable s = compute_spectrum(p);  // construction re-checks the identities
                Int msum = 0;
                for (const Int& m : s.mult) msum += m;
                CHECK(msum == binomial(v, t));
                CHECK(s.theta[0] == binomial(v - t, k - t) * binomial(k, t));
            }
}

TEST_CASE("build_M structure") {
    const JohnsonParams p(2, 3, 5);
    const IntMatrix m = build_M(p);
    REQUIRE(m.size() == 10);
    for (long i = 0; i < 10; ++i) {
        CHECK(m.at(i, i) == 3);
        for (long j = 0; j < 10; ++j) {
            CHECK(m.at(i, j) == m.at(j, i));
            CHECK((m.at(i, j) == 0 || m.at(i, j) == 1 || m.at(i, j) == 3));
        }
    }

    // every row sum is theta_0
    const JohnsonParams p9(2, 3, 9);
    const IntMatrix m9 = build_M(p9);
    for (long i = 0; i < m9.size(); ++i) {
        Int row = 0;
        for (long j = 0; j < m9.size(); ++j) row += m9.at(i, j);
        CHECK(row == 21);
    }
}

TEST_CASE("build_M cap") {
    CHECK_THROWS_AS(build_M(JohnsonParams(2, 3, 50)), SizeCapError);  // C(50,2) = 1225
}

TEST_CASE("minimal polynomial annihilation: prod_j (M - theta_j I) = 0") {
    const std::vector<JohnsonParams> params{
        {2, 3, 9},   // n = 36
        {2, 4, 12},  // n = 66
        {3, 4, 10},  // n = 120
        {2, 5, 20},  // n = 190
    };
    for (const JohnsonParams& p : params) {
        const SpectrumTable s = compute_spectrum(p);
        const IntMatrix m = build_M(p);
        const long n = m.size();
        REQUIRE(n <= 200);
        IntMatrix acc = IntMatrix::identity(n);
        for (const Int& th : s.theta) {
            IntMatrix shifted = m;
            for (long i = 0; i < n; ++i) shifted.at(i, i) -= th;
            acc = acc * shifted;
        }
        CHECK(acc == IntMatrix(n));
    }
}

TEST_CASE("all-ones vector is a theta_0 eigenvector of M") {
    for (int v : {5, 7, 9}) {
        const JohnsonParams p(2, 3, v);
        const IntMatrix m = build_M(p);
        const Int th0 = theta(p, 0);
        for (long i = 0; i < m.size(); ++i) {
            Int row = 0;
            for (long j = 0; j < m.size(); ++j) row += m.at(i, j);
            CHECK(row == th0);
        }
    }
}

TEST_CASE("build_M1 structure") {
    const JohnsonParams p(2, 3, 9);
    const IntMatrix m = build_M(p);
    const IntMatrix m1 = build_M1(p);
    for (long i = 0; i < m1.size(); ++i) {
        CHECK(m1.at(i, 0) == 21);
        for (long j = 1; j < m1.size(); ++j) CHECK(m1.at(i, j) == m.at(i, j));
    }
}

TEST_CASE("psi at 0 is exactly 1 across parameters") {
    for (int t = 2; t <= 3; ++t)
        for (int k = t + 1; k <= 5; ++k)
            for (int v = 2 * k; v <= 2 * k + 4; ++v)
                CHECK(psi_eval(JohnsonParams(t, k, v), Rat(0)) == 1);
}

TEST_CASE("psi poles and positivity at theta_t/2") {
    const JohnsonParams p(2, 3, 9);
    CHECK_THROWS_AS(psi_eval(p, Rat(12)), std::domain_error);
    const Rat at_half = psi_eval(p, make_rat(5, 2));
    CHECK(at_half > 0);
}

TEST_CASE("psi sign pattern near each eigenvalue follows the interlacing table") {
    // Just inside each gap: psi is positive at theta_t/2, flips - to + across
    // every theta_j with j >= 1, + to - across theta_0, and returns to + past
    // the last root (Cauchy bound).
    for (const JohnsonParams p : {JohnsonParams(2, 3, 9), JohnsonParams(3, 4, 10)}) {
        REQUIRE(check_theta_order(p));
        const SpectrumTable s = compute_spectrum(p);
        const int t = p.t;
        const Rat half = Rat(s.theta[static_cast<std::size_t>(t)]) / 2;
        CHECK(psi_eval(s, half) > 0);
        for (int j = t; j >= 0; --j) {
            const Rat tj(s.theta[static_cast<std::size_t>(j)]);
            const Rat below_gap = (j == t) ? tj - half : tj - Rat(s.theta[static_cast<std::size_t>(j) + 1]);
            const Rat above_gap = (j == 0) ? tj : Rat(s.theta[static_cast<std::size_t>(j) - 1]) - tj;
            const Rat lo = tj - below_gap / 1000;
            const Rat hi = tj + above_gap / 1000;
            if (j >= 1) {
                CHECK(psi_eval(s, lo) < 0);
                CHECK(psi_eval(s, hi) > 0);
            } else {
                CHECK(psi_eval(s, lo) > 0);
                CHECK(psi_eval(s, hi) < 0);
            }
        }
        const Poly q = charpoly_R(s);
        Rat cauchy(1);
        for (long i = 0; i < q.degree(); ++i) {
            const Rat mag = abs(q.coeff(i));
            if (mag > cauchy) cauchy = mag;
        }
        CHECK(psi_eval(s, Rat(1) + cauchy) > 0);  // beyond every root of det(xI - R)
    }
}

TEST_CASE("charpoly_R: monic, degenerate on repeated theta, constant term") {
    const JohnsonParams p(2, 3, 9);
    const SpectrumTable s = compute_spectrum(p);
    const Poly q = charpoly_R(s);
    CHECK(q.degree() == 3);
    CHECK(q.coeff(3) == 1);

    // constant term: (-1)^(t+1) det(R) with det(R) = det(Theta) (1 + u^T m);
    // here u^T m = m_0 - n^{-1} sum m_j = 0, so det(R) = prod theta_j.
    const Rat prod = Rat(s.theta[0] * s.theta[1] * s.theta[2]);
    CHECK(q.coeff(0) == Rat(-1) * prod);  // (-1)^3

    CHECK_THROWS_AS(charpoly_R(JohnsonParams(2, 2, 9)), DegenerateSpectrumError);  // k = t: all theta equal
}

TEST_CASE("charpoly_R roots against exact determinant of M1 at (2,3,9)") {
    const JohnsonParams p(2, 3, 9);
    const SpectrumTable s = compute_spectrum(p);
    const IntMatrix m1 = build_M1(p);

    // product of the three R-roots = det(M1) / prod theta_j^(m_j - 1)
    const Int det_m1 = determinant(m1);
    Int denom = 1;
    for (std::size_t j = 0; j < s.theta.size(); ++j) {
        const long e = s.mult[j].get_si() - 1;
        for (long i = 0; i < e; ++i) denom *= s.theta[j];
    }
    const Rat root_product = make_rat(det_m1, denom);
    const Poly q = charpoly_R(s);
    // For monic degree-3 q, the root product is -q(0).
    CHECK(Rat(-1) * q.coeff(0) == root_product);
    CHECK(root_product == Rat(21 * 12 * 5));
}

TEST_CASE("factorization det(xI - M1) = charpoly_R * prod (x - theta_j)^(m_j - 1)") {
    for (const JohnsonParams p : {JohnsonParams(2, 3, 7), JohnsonParams(2, 5, 8)}) {
        const SpectrumTable s = compute_spectrum(p);
        REQUIRE(s.n <= 40);
        const Poly lhs = charpoly(build_M1(p));
        Poly rhs = charpoly_R(s);
        for (std::size_t j = 0; j < s.theta.size(); ++j)
            rhs = rhs * Poly::linear_root(Rat(s.theta[j])).pow(s.mult[j].get_si() - 1);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("check_theta_order") {
    CHECK(check_theta_order(JohnsonParams(2, 3, 9)));
    CHECK_FALSE(check_theta_order(JohnsonParams(2, 2, 5)));  // k = t: all theta equal 1
}

TEST_CASE("theta_t over xi_0 climbs toward 1 in the tested range") {
    for (auto [t, k] : std::vector<std::pair<int, int>>{{2, 3}, {2, 4}, {3, 4}}) {
        Rat prev(-1);
        for (int v = 2 * k; v <= 2 * k + 12; ++v) {
            const JohnsonParams p(t, k, v);
            const Rat ratio = make_rat(theta(p, t), xi(p, 0));
            CHECK(ratio < 1);
            CHECK(ratio > prev);
            prev = ratio;
        }
    }
}

TEST_CASE("root isolation at (2,3,9): three certified roots above theta_t/2") {
    const JohnsonParams p(2, 3, 9);
    const SpectrumTable s = compute_spectrum(p);
    const RootIsolation iso = isolate_R_roots(s);
    REQUIRE(iso.status == RootIsolation::Status::ordered);
    REQUIRE(iso.intervals.size() == 3);
    CHECK(iso.all_exceed_half_theta_t);

    const Poly q = charpoly_R(s);
    const Rat half = make_rat(5, 2);
    const Rat width = make_rat(5, 1000);
    for (std::size_t i = 0; i < iso.intervals.size(); ++i) {
        const auto& [a, b] = iso.intervals[i];
        CHECK(a >= half);
        REQUIRE(a < b);  // roots here are irrational, no exact hit
        CHECK(b - a <= width);
        CHECK(sign(q.eval(a)) * sign(q.eval(b)) == -1);  // certified bracket
        if (i > 0) CHECK(iso.intervals[i - 1].second < a);  // disjoint, ascending
    }

    // Cross-check против M1 itself: det(xI - M1), evaluated exactly by
    // fraction-free elimination, changes sign across each interval. The
    // extra factor prod (x - theta_j)^(m_j - 1) has constant sign inside a
    // gap, so the sign change certifies an eigenvalue of M1 in the interval.
    const IntMatrix m1 = build_M1(p);
    const long n = m1.size();
    auto det_xI_minus_M1 = [&](const Rat& x) {
        RationalMatrix a(n);
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j) a.at(i, j) = (i == j ? x - Rat(m1.at(i, j)) : Rat(-m1.at(i, j)));
        return determinant(a);
    };
    for (const auto& [a, b] : iso.intervals)
        CHECK(sign(det_xI_minus_M1(a)) * sign(det_xI_minus_M1(b)) == -1);
}

TEST_CASE("root isolation at (2,3,5) is recorded, not asserted") {
    const RootIsolation iso = isolate_R_roots(JohnsonParams(2, 3, 5));
    if (iso.status == RootIsolation::Status::ordered) {
        CHECK(iso.intervals.size() == 3);
    } else {
        CHECK(iso.intervals.empty());
    }
}

TEST_CASE("isolation intervals certified across a small sweep") {
    for (int v = 6; v <= 14; ++v) {
        const JohnsonParams p(2, 3, v);
        if (!check_theta_order(p)) continue;
        const SpectrumTable s = compute_spectrum(p);
        const RootIsolation iso = isolate_R_roots(s);
        REQUIRE(iso.status == RootIsolation::Status::ordered);
        const Poly q = charpoly_R(s);
        for (const auto& [a, b] : iso.intervals) {
            if (a == b) {
                CHECK(q.eval(a) == 0);
            } else {
                CHECK(sign(q.eval(a)) * sign(q.eval(b)) == -1);
            }
        }
    }
}

TEST_CASE("degenerate parameter validation") {
    CHECK_THROWS_AS(JohnsonParams(1, 3, 9), std::invalid_argument);
    CHECK_THROWS_AS(JohnsonParams(2, 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(eigenmatrix_P(JohnsonParams(3, 4, 5)), DegenerateSpectrumError);  // v < 2t
}
