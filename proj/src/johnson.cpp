#include "ratdec/johnson.hpp"

#include <algorithm>

namespace ratdec {

namespace {

int set_difference_size(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t i = 0, j = 0, common = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) ++common, ++i, ++j;
        else if (a[i] < b[j]) ++i;
        else ++j;
    }
    return static_cast<int>(a.size() - common);
}

}  // namespace

JohnsonParams::JohnsonParams(int t_, int k_, int v_) : t(t_), k(k_), v(v_) {
    if (!(2 <= t && t <= k && k <= v))
        throw std::invalid_argument("JohnsonParams: need 2 <= t <= k <= v");
}

Int xi(const JohnsonParams& p, int i) {
    if (i < 0 || i > p.t) throw std::invalid_argument("xi: index out of range");
    if (p.k - p.t - i < 0) return 0;
    return binomial(p.v - p.t - i, p.k - p.t - i);
}

IntMatrix eigenmatrix_P(const JohnsonParams& p) {
    if (p.v < 2 * p.t)
        throw DegenerateSpectrumError("eigenmatrix_P: v < 2t, Johnson scheme relations collapse");
    const int t = p.t, v = p.v;
    IntMatrix P(t + 1);
    for (int i = 0; i <= t; ++i)
        for (int j = 0; j <= t; ++j) {
            Int sum = 0;
            for (int s = 0; s <= i; ++s) {
                Int term = binomial(t - s, i - s) * binomial(t - j, s) * binomial(v - t + s - j, s);
                if ((i - s) % 2 != 0) sum -= term;
                else sum += term;
            }
            P.at(i, j) = sum;
        }
    return P;
}

Int theta(const JohnsonParams& p, int j) {
    if (j < 0 || j > p.t) throw std::invalid_argument("theta: index out of range");
    const IntMatrix P = eigenmatrix_P(p);
    Int sum = 0;
    for (int i = 0; i <= p.t; ++i) sum += xi(p, i) * P.at(i, j);
    return sum;
}

Int multiplicity(const JohnsonParams& p, int j) {
    if (j < 0 || j > p.t) throw std::invalid_argument("multiplicity: index out of range");
    return binomial(p.v, j) - binomial(p.v, j - 1);
}

SpectrumTable compute_spectrum(const JohnsonParams& p) {
    SpectrumTable s{p, eigenmatrix_P(p), {}, {}, {}, binomial(p.v, p.t)};
    s.xi.resize(static_cast<std::size_t>(p.t) + 1);
    s.theta.resize(static_cast<std::size_t>(p.t) + 1);
    s.mult.resize(static_cast<std::size_t>(p.t) + 1);
    for (int i = 0; i <= p.t; ++i) s.xi[static_cast<std::size_t>(i)] = xi(p, i);
    for (int j = 0; j <= p.t; ++j) {
        Int sum = 0;
        for (int i = 0; i <= p.t; ++i) sum += s.xi[static_cast<std::size_t>(i)] * s.P.at(i, j);
        s.theta[static_cast<std::size_t>(j)] = sum;
        s.mult[static_cast<std::size_t>(j)] = multiplicity(p, j);
    }

    // Structural identities; failure would mean the construction is broken.
    Int mult_sum = 0, trace_sum = 0;
    for (int j = 0; j <= p.t; ++j) {
        mult_sum += s.mult[static_cast<std::size_t>(j)];
        trace_sum += s.mult[static_cast<std::size_t>(j)] * s.theta[static_cast<std::size_t>(j)];
    }
    if (s.mult[0] != 1) throw std::logic_error("spectrum: m_0 != 1");
    if (mult_sum != s.n) throw std::logic_error("spectrum: sum of multiplicities != C(v,t)");
    if (trace_sum != s.n * s.xi[0]) throw std::logic_error("spectrum: trace identity failed");
    if (s.theta[0] != binomial(p.v - p.t, p.k - p.t) * binomial(p.k, p.t))
        throw std::logic_error("spectrum: theta_0 closed form failed");
    return s;
}

IntMatrix build_M(const JohnsonParams& p) {
    const Int n_big = binomial(p.v, p.t);
    if (n_big > kBuildMCap) throw SizeCapError("build_M: C(v,t) exceeds cap");
    const long n = static_cast<long>(n_big.get_ui());

    std::vector<std::vector<int>> subsets;
    subsets.reserve(static_cast<std::size_t>(n));
    for_each_subset(p.v, p.t, [&](const std::vector<int>& s) { subsets.push_back(s); });

    std::vector<Int> xis(static_cast<std::size_t>(p.t) + 1);
    for (int i = 0; i <= p.t; ++i) xis[static_cast<std::size_t>(i)] = xi(p, i);

    IntMatrix M(n);
    for (long a = 0; a < n; ++a) {
        M.at(a, a) = xis[0];
        for (long b = a + 1; b < n; ++b) {
            const int d = set_difference_size(subsets[static_cast<std::size_t>(a)],
                                              subsets[static_cast<std::size_t>(b)]);
            M.at(a, b) = xis[static_cast<std::size_t>(d)];
            M.at(b, a) = M.at(a, b);
        }
    }
    return M;
}

IntMatrix build_M1(const JohnsonParams& p) {
    IntMatrix M = build_M(p);
    const Int theta0 = binomial(p.v - p.t, p.k - p.t) * binomial(p.k, p.t);
    for (long i = 0; i < M.size(); ++i) M.at(i, 0) = theta0;
    return M;
}

Rat psi_eval(const SpectrumTable& s, const Rat& x) {
    const std::size_t terms = s.theta.size();
    for (std::size_t j = 0; j < terms; ++j)
        if (x == Rat(s.theta[j]))
            throw std::domain_error("psi_eval: pole at theta_" + std::to_string(j));
    Rat acc = Rat(1) + Rat(s.theta[0] * s.mult[0]) / (Rat(s.theta[0]) - x);
    Rat sum(0);
    for (std::size_t j = 0; j < terms; ++j)
        sum += Rat(s.theta[j] * s.mult[j]) / (Rat(s.theta[j]) - x);
    acc -= sum / Rat(s.n);
    return acc;
}

Rat psi_eval(const JohnsonParams& p, const Rat& x) { return psi_eval(compute_spectrum(p), x); }

Poly charpoly_R(const SpectrumTable& s) {
    const std::size_t terms = s.theta.size();
    for (std::size_t a = 0; a < terms; ++a)
        for (std::size_t b = a + 1; b < terms; ++b)
            if (s.theta[a] == s.theta[b])
                throw DegenerateSpectrumError("charpoly_R: repeated theta, psi form invalid");

    std::vector<Rat> roots(terms);
    for (std::size_t j = 0; j < terms; ++j) roots[j] = Rat(s.theta[j]);

    auto product_excluding = [&](std::size_t skip) {
        std::vector<Rat> r;
        for (std::size_t j = 0; j < terms; ++j)
            if (j != skip) r.push_back(roots[j]);
        return Poly::from_roots(r);
    };

    // psi(x) * prod_j (x - theta_j) expanded:
    //   prod_j (x - theta_j)
    //   - theta_0 m_0 * prod_{j != 0} (x - theta_j)
    //   + n^{-1} sum_l theta_l m_l * prod_{j != l} (x - theta_j)
    Poly q = Poly::from_roots(roots);
    q = q - Rat(s.theta[0] * s.mult[0]) * product_excluding(0);
    Poly corr;
    for (std::size_t l = 0; l < terms; ++l)
        corr = corr + Rat(s.theta[l] * s.mult[l]) * product_excluding(l);
    q = q + make_rat(1, s.n) * corr;

    if (q.degree() != static_cast<long>(terms) || q.coeff(q.degree()) != 1)
        throw std::logic_error("charpoly_R: expansion is not monic of degree t+1");
    return q;
}

Poly charpoly_R(const JohnsonParams& p) { return charpoly_R(compute_spectrum(p)); }

bool check_theta_order(const JohnsonParams& p) {
    const SpectrumTable s = compute_spectrum(p);
    for (std::size_t j = 0; j + 1 < s.theta.size(); ++j)
        if (!(s.theta[j] > s.theta[j + 1])) return false;
    return true;
}

RootIsolation isolate_R_roots(const SpectrumTable& s) {
    RootIsolation out;
    const int t = s.params.t;

    bool ordered = true;
    for (std::size_t j = 0; j + 1 < s.theta.size(); ++j)
        if (!(s.theta[j] > s.theta[j + 1])) ordered = false;
    // theta_t > 0 is required by the anchors (theta_t/2) and the width
    // target; outside that regime the outcome is reported, never asserted.
    if (!ordered || s.theta[static_cast<std::size_t>(t)] <= 0) return out;

    const Poly q = charpoly_R(s);
    const Rat theta_t(s.theta[static_cast<std::size_t>(t)]);
    const Rat half = theta_t / 2;
    const Rat width_target = theta_t / 1000;

    std::vector<Rat> samples;
    samples.push_back(half);
    for (int j = t; j >= 0; --j) samples.push_back(Rat(s.theta[static_cast<std::size_t>(j)]));
    Rat beyond = Rat(s.theta[0]) + 1;
    while (q.eval(beyond) <= 0) beyond = Rat(s.theta[0]) + 2 * (beyond - Rat(s.theta[0]));
    samples.push_back(beyond);

    std::vector<Rat> values(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) values[i] = q.eval(samples[i]);

    auto is_theta = [&](const Rat& x) {
        for (const Int& th : s.theta)
            if (x == Rat(th)) return true;
        return false;
    };

    std::vector<std::pair<Rat, Rat>> intervals;
    for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
        int sa = sign(values[i]);
        const int sb = sign(values[i + 1]);
        if (sa == 0 || sb == 0) return out;  // a theta_j or the anchor is itself a root: report degenerate
        if (sa == sb) continue;
        Rat a = samples[i], b = samples[i + 1];
        while (b - a > width_target || is_theta(a) || is_theta(b)) {
            Rat mid = (a + b) / 2;
            const int sm = sign(q.eval(mid));
            if (sm == 0) {
                a = b = mid;  // exact rational root
                break;
            }
            if (sm == sa) a = mid;
            else b = mid;
        }
        intervals.emplace_back(std::move(a), std::move(b));
    }

    if (static_cast<long>(intervals.size()) != t + 1) return out;  // defensive; cannot happen when ordered
    out.status = RootIsolation::Status::ordered;
    out.intervals = std::move(intervals);
    // t+1 certified brackets for a degree-(t+1) polynomial, all of them at or
    // above theta_t/2 with nonzero endpoint values: every root exceeds it.
    out.all_exceed_half_theta_t = true;
    return out;
}

RootIsolation isolate_R_roots(const JohnsonParams& p) { return isolate_R_roots(compute_spectrum(p)); }

}  // namespace ratdec
