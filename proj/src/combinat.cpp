#include "ratdec/combinat.hpp"

#include <numeric>

namespace ratdec {

Int binomial(long n, long r) {
    if (n < 0) throw std::invalid_argument("binomial: negative n");
    if (r < 0 || r > n) return 0;
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
    return out;
}

Int rank_colex(const std::vector<int>& s) {
    Int rank = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || (i > 0 && s[i] <= s[i - 1]))
            throw std::invalid_argument("rank_colex: subset must be strictly ascending, nonnegative");
        rank += binomial(s[i], static_cast<long>(i) + 1);
    }
    return rank;
}

std::vector<int> unrank_colex(Int r, int t) {
    if (t < 0) throw std::invalid_argument("unrank_colex: negative size");
    if (r < 0) throw std::invalid_argument("unrank_colex: negative rank");
    std::vector<int> s(static_cast<std::size_t>(t));
    for (int i = t; i >= 1; --i) {
        long c = i - 1;  // C(i-1, i) = 0 <= r always holds
        while (binomial(c + 1, i) <= r) ++c;
        s[static_cast<std::size_t>(i) - 1] = static_cast<int>(c);
        r -= binomial(c, i);
    }
    return s;
}

std::vector<int> first_colex_subset(int t) {
    if (t < 0) throw std::invalid_argument("first_colex_subset: negative size");
    std::vector<int> s(static_cast<std::size_t>(t));
    std::iota(s.begin(), s.end(), 0);
    return s;
}

bool next_colex_subset(std::vector<int>& s, int v) {
    const int t = static_cast<int>(s.size());
    for (int i = 0; i < t; ++i) {
        const int limit = (i + 1 < t) ? s[static_cast<std::size_t>(i) + 1] : v;
        if (s[static_cast<std::size_t>(i)] + 1 < limit) {
            ++s[static_cast<std::size_t>(i)];
            for (int j = 0; j < i; ++j) s[static_cast<std::size_t>(j)] = j;
            return true;
        }
    }
    return false;
}

}  // namespace ratdec
