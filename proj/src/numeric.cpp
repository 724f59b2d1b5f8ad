#include "ratdec/numeric.hpp"

namespace ratdec {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rat& q) { return q.get_str(); }

std::string to_string(const Int& n) { return n.get_str(); }

Rat parse_rat(std::string_view s) {
    if (s.empty()) throw ParseError("empty rational");
    const auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos) {
            Int num(std::string(s), 10);
            return Rat(num);
        }
        Int num(std::string(s.substr(0, slash)), 10);
        Int den(std::string(s.substr(slash + 1)), 10);
        if (den == 0) throw ParseError("zero denominator in rational: " + std::string(s));
        return make_rat(num, den);
    } catch (const std::invalid_argument&) {
        throw ParseError("malformed rational: " + std::string(s));
    }
}

int sign(const Int& n) { return sgn(n); }

int sign(const Rat& q) { return sgn(q); }

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::uint64_t fingerprint(const std::vector<Rat>& xs) {
    std::string buf;
    for (const Rat& x : xs) {
        buf += to_string(x);
        buf += '\n';
    }
    return fnv1a64(buf);
}

}  // namespace ratdec
