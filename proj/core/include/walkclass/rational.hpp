#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace walkclass {

using Int = mpz_class;
using Rat = mpq_class;

// a mod p mapped into [0, p), handling negative a
std::uint64_t mod_of_int(const Int& a, std::uint64_t p);
// (num/den) mod p; throws if p divides den
std::uint64_t mod_of_rat(const Rat& a, std::uint64_t p);

// Chinese remainder combination of residues modulo pairwise coprime moduli.
// Result is the unique residue in [0, prod moduli). Throws on non-coprime moduli.
Int crt_combine(const std::vector<Int>& residues, const std::vector<Int>& moduli);
Int crt_combine(const std::vector<std::uint64_t>& residues,
                const std::vector<std::uint64_t>& moduli);

// Rational reconstruction of r mod M by the half-extended Euclidean algorithm
// under the symmetric bound: returns a/b with a ≡ r·b (mod M), gcd(a,b)=1,
// b > 0 and |a|, b ≤ √(M/2); nullopt when no such fraction exists.
std::optional<Rat> rational_reconstruct(const Int& r, const Int& M);

// Factorization of |n| (trial division then Pollard-Brent rho). Pairs (prime, exp).
std::vector<std::pair<Int, int>> factor_int(const Int& n);
// All positive divisors of |n|; throws if the divisor count exceeds the cap.
std::vector<Int> divisors(const Int& n, std::size_t cap = 1u << 20);

std::string to_string(const Rat& q);

} // namespace walkclass
