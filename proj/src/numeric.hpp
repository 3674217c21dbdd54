#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <string>
#include <vector>

namespace braidlevel {

// Exact arithmetic scalars. All counting and polynomial work in this project
// is over these; no floating point anywhere.
using BigInt = mpz_class;
using Rat = mpq_class;

// Rationals are kept canonical (lowest terms, positive denominator).
// mpq_class arithmetic preserves canonical form; only raw construction needs it.
inline Rat make_rat(const BigInt& num, const BigInt& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat make_rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// "num/den", den omitted when 1. This is the serialized form used everywhere.
inline std::string rat_to_string(const Rat& q) { return q.get_str(); }
inline std::string int_to_string(const BigInt& z) { return z.get_str(); }

BigInt pow_int(const BigInt& base, unsigned long exp);
BigInt factorial(unsigned long n);

// Parses an optionally signed integer or "p/q" rational. Throws on malformed
// input or zero denominator.
Rat parse_rat(const std::string& text);

bool is_prime_u64(std::uint64_t n);
std::uint64_t next_prime_above(std::uint64_t n);

} // namespace braidlevel
