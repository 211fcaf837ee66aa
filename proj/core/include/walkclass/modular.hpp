#pragma once

#include <cstdint>
#include <vector>

// Word-size modular arithmetic for odd primes p < 2^62, plus the two prime
// streams used throughout: guessing primes descending from just below 2^62,
// sieve primes ascending from 3.

namespace walkclass {

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;            // no overflow: a,b < 2^62
    return s >= p ? s - p : s;
}

inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + p - b;
}

inline std::uint64_t neg_mod(std::uint64_t a, std::uint64_t p) {
    return a ? p - a : 0;
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p); // throws on non-invertible

bool is_prime_u64(std::uint64_t n); // deterministic Miller-Rabin for n < 2^64

// Largest prime strictly below n (n > 3).
std::uint64_t prev_prime_below(std::uint64_t n);
// Smallest prime strictly above n.
std::uint64_t next_prime_above(std::uint64_t n);

// Deterministic descending stream of primes starting just below 2^62.
class GuessPrimeStream {
public:
    GuessPrimeStream() : next_start_((1ull << 62) - 1) {}
    std::uint64_t next();
private:
    std::uint64_t next_start_;
};

// Ascending odd primes 3, 5, 7, ...
class SievePrimeStream {
public:
    SievePrimeStream() : last_(2) {}
    std::uint64_t next();
private:
    std::uint64_t last_;
};

// First k primes of the ascending sieve stream.
std::vector<std::uint64_t> sieve_primes(std::size_t k);

} // namespace walkclass
