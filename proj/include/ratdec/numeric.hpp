#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ratdec {

/// Arbitrary-precision integer. Binomials in determinants overflow 64 bits
/// long before the matrix caps are reached, so everything exact runs on these.
using Int = mpz_class;

/// Arbitrary-precision rational, always kept canonical (lowest terms,
/// positive denominator).
using Rat = mpq_class;

/// A request exceeded a configured matrix size cap.
class SizeCapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Johnson-scheme spectral machinery was asked for parameters where the
/// theta_j are unusable (repeated eigenvalues, or v < 2t so the scheme
/// relations collapse).
class DegenerateSpectrumError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed .tg or certificate input.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// num/den as a canonical rational. den must be nonzero.
Rat make_rat(const Int& num, const Int& den);

/// "p/q", or plain "p" when the denominator is 1. No whitespace.
std::string to_string(const Rat& q);
std::string to_string(const Int& n);

/// Parses "p" or "p/q" (optional leading '-'). Throws ParseError on anything
/// else, including a zero denominator.
Rat parse_rat(std::string_view s);

int sign(const Int& n);
int sign(const Rat& q);

/// FNV-1a 64-bit, used for regression fingerprints of exact vectors.
std::uint64_t fnv1a64(std::string_view data);

/// Fingerprint of a rational vector: FNV-1a over the canonical "p/q\n" lines.
std::uint64_t fingerprint(const std::vector<Rat>& xs);

}  // namespace ratdec
