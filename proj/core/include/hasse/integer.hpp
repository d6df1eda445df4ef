#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hasse {

// Group orders and Smith normal form entries use arbitrary precision;
// polynomial coefficient arithmetic stays in machine words.
using Int = boost::multiprecision::cpp_int;

inline std::uint64_t to_u64(const Int& x) {
    if (x < 0 || x > Int(UINT64_MAX))
        throw std::overflow_error("to_u64: value out of range");
    return static_cast<std::uint64_t>(x);
}

inline Int int_pow(Int base, unsigned exp) {
    Int r = 1;
    while (exp) {
        if (exp & 1) r *= base;
        base *= base;
        exp >>= 1;
    }
    return r;
}

// floor(sqrt(n)) for n >= 0.
inline Int isqrt(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt: negative");
    if (n == 0) return 0;
    Int x = n, y = (x + 1) / 2;
    while (y < x) {
        x = y;
        y = (x + n / x) / 2;
    }
    return x;
}

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

inline std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b) { std::uint64_t t = a % b; a = b; b = t; }
    return a;
}

// Brent's variant of Pollard rho; deterministic sequence of parameters.
inline std::uint64_t pollard_rho(std::uint64_t n) {
    if ((n & 1) == 0) return 2;
    for (std::uint64_t c = 1; ; ++c) {
        std::uint64_t x = 2, y = 2, d = 1;
        while (d == 1) {
            x = mulmod_u64(x, x, n) + c;
            if (x >= n) x -= n;
            y = mulmod_u64(y, y, n) + c;
            if (y >= n) y -= n;
            y = mulmod_u64(y, y, n) + c;
            if (y >= n) y -= n;
            d = gcd_u64(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

inline void factor_u64_into(std::uint64_t n, std::map<std::uint64_t, unsigned>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) { out[n]++; return; }
    for (std::uint64_t p = 2; p < 100 && p * p <= n; ++p) {
        while (n % p == 0) { out[p]++; n /= p; }
    }
    if (n == 1) return;
    if (is_prime_u64(n)) { out[n]++; return; }
    std::uint64_t d = pollard_rho(n);
    factor_u64_into(d, out);
    factor_u64_into(n / d, out);
}

} // namespace detail

// Prime factorization of a 64-bit-sized integer, as prime -> exponent.
inline std::map<std::uint64_t, unsigned> factor_integer(const Int& n) {
    if (n <= 0) throw std::domain_error("factor_integer: input must be positive");
    if (n > Int(UINT64_MAX))
        throw std::overflow_error("factor_integer: input exceeds supported size");
    std::map<std::uint64_t, unsigned> out;
    detail::factor_u64_into(to_u64(n), out);
    return out;
}

} // namespace hasse
