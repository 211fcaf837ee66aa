#include "walkclass/modular.hpp"

#include <stdexcept>

namespace walkclass {

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    // extended Euclid on (a, p); p need not be prime but gcd must be 1
    std::int64_t t = 0, nt = 1;
    std::uint64_t r = p, nr = a % p;
    while (nr) {
        std::uint64_t q = r / nr;
        std::int64_t tmp = t - static_cast<std::int64_t>(q) * nt;
        t = nt; nt = tmp;
        std::uint64_t tmr = r - q * nr;
        r = nr; nr = tmr;
    }
    if (r != 1) throw std::domain_error("inv_mod: not invertible");
    return t < 0 ? static_cast<std::uint64_t>(t + static_cast<std::int64_t>(p)) : static_cast<std::uint64_t>(t);
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // witness set deterministic for all n < 2^64
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = pow_mod(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

std::uint64_t prev_prime_below(std::uint64_t n) {
    std::uint64_t c = n - 1;
    if (c % 2 == 0) --c;
    while (!is_prime_u64(c)) c -= 2;
    return c;
}

std::uint64_t next_prime_above(std::uint64_t n) {
    std::uint64_t c = n + 1;
    if (c <= 2) return 2;
    if (c % 2 == 0) ++c;
    while (!is_prime_u64(c)) c += 2;
    return c;
}

std::uint64_t GuessPrimeStream::next() {
    std::uint64_t p = prev_prime_below(next_start_ + 1);
    next_start_ = p - 1;
    return p;
}

std::uint64_t SievePrimeStream::next() {
    last_ = next_prime_above(last_);
    return last_;
}

std::vector<std::uint64_t> sieve_primes(std::size_t k) {
    SievePrimeStream st;
    std::vector<std::uint64_t> out;
    out.reserve(k);
    for (std::size_t i = 0; i < k; ++i) out.push_back(st.next());
    return out;
}

} // namespace walkclass
