#pragma once

// Number-theoretic primitives on small odd primes and their powers.
//
// All arithmetic is exact on 64-bit integers. Anything that would overflow
// raises size_bound_error instead of wrapping; parameter bounds for the
// group-level computations live here as well.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"

namespace metacyclic {

using integer = std::int64_t;

/// Largest group order accepted by the closed-form paths.
inline constexpr integer formula_order_bound = 10'000'000;
/// Largest group order accepted by the character/conjugacy oracle paths.
inline constexpr integer oracle_order_bound = 10'000;

inline integer checked_mul(integer a, integer b) {
    integer out;
    if (__builtin_mul_overflow(a, b, &out))
        throw size_bound_error("integer overflow in " + std::to_string(a) + " * " + std::to_string(b));
    return out;
}

inline integer checked_pow(integer base, int exp) {
    if (exp < 0)
        throw std::invalid_argument("checked_pow: negative exponent");
    integer out = 1;
    for (int i = 0; i < exp; ++i)
        out = checked_mul(out, base);
    return out;
}

/// Least non-negative residue of x modulo `modulus` (modulus > 0).
inline integer mod_floor(integer x, integer modulus) {
    integer r = x % modulus;
    return r < 0 ? r + modulus : r;
}

inline integer mod_mul(integer a, integer b, integer modulus) {
    return static_cast<integer>(static_cast<__int128>(a) * b % modulus);
}

inline integer mod_pow(integer base, integer exp, integer modulus) {
    if (modulus == 1)
        return 0;
    integer result = 1;
    base = mod_floor(base, modulus);
    while (exp > 0) {
        if (exp & 1)
            result = mod_mul(result, base, modulus);
        base = mod_mul(base, base, modulus);
        exp >>= 1;
    }
    return result;
}

/// Trial division; the primes handled here are tiny.
inline bool is_prime(integer x) {
    if (x < 2)
        return false;
    for (integer d = 2; d * d <= x; ++d)
        if (x % d == 0)
            return false;
    return true;
}

/// p^exp for an odd prime p.
class prime_power {
public:
    prime_power(integer p, int exp) : p_(p), exp_(exp) {
        if (!is_prime(p))
            throw validation_error("p = " + std::to_string(p) + " is not prime");
        if (p == 2)
            throw validation_error("p = 2 is not supported: p must be an odd prime");
        if (exp < 0)
            throw std::invalid_argument("prime_power: negative exponent");
        value_ = checked_pow(p, exp);
    }

    integer prime() const noexcept { return p_; }
    int exponent() const noexcept { return exp_; }
    integer value() const noexcept { return value_; }

    friend bool operator==(const prime_power&, const prime_power&) = default;

private:
    integer p_;
    int exp_;
    integer value_;
};

/// Exponent of p in x, x != 0.
inline int p_adic_valuation(integer x, integer p) {
    if (x == 0)
        throw std::invalid_argument("p_adic_valuation: valuation of 0 is undefined");
    if (p < 2)
        throw std::invalid_argument("p_adic_valuation: p must be prime");
    int v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

inline integer euler_phi(const prime_power& q) {
    if (q.exponent() == 0)
        return 1;
    return q.value() - q.value() / q.prime();
}

/// phi(p^exp) without constructing a prime_power (p already validated).
inline integer euler_phi_pow(integer p, int exp) {
    if (exp == 0)
        return 1;
    integer v = checked_pow(p, exp);
    return v - v / p;
}

namespace detail {

inline std::vector<integer> divisors(integer x) {
    std::vector<integer> small, large;
    for (integer d = 1; d * d <= x; ++d) {
        if (x % d == 0) {
            small.push_back(d);
            if (d != x / d)
                large.push_back(x / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

} // namespace detail

/// Least e >= 1 with r^e = 1 (mod p^exp). Candidates are the divisors of
/// phi(p^exp), scanned in increasing order.
inline integer multiplicative_order(integer r, const prime_power& modulus) {
    const integer q = modulus.value();
    if (q < 2)
        throw std::invalid_argument("multiplicative_order: modulus must be at least 2");
    if (std::gcd(mod_floor(r, q), q) != 1)
        throw validation_error("r = " + std::to_string(r) + " is not a unit modulo " + std::to_string(q));
    for (integer e : detail::divisors(euler_phi(modulus)))
        if (mod_pow(r, e, q) == 1)
            return e;
    throw internal_inconsistency("multiplicative_order: no divisor of phi(q) annihilates r");
}

/// r = 1 + k * p^(n-s) (mod p^n) with 1 <= k < p^s and gcd(k, p) = 1.
struct r_split {
    integer k;
    int s;

    friend bool operator==(const r_split&, const r_split&) = default;
};

inline r_split split_r(integer r, integer p, int n) {
    const prime_power pn(p, n);
    r = mod_floor(r, pn.value());
    if (mod_floor(r, p) != 1)
        throw validation_error("r = " + std::to_string(r) + " is not congruent to 1 mod " + std::to_string(p) +
                               ": its order modulo p^n is not a power of p");
    if (r == 1 % pn.value())
        throw validation_error("r = 1 mod p^n: the group is abelian");
    const int v = p_adic_valuation(r - 1, p);
    const int s = n - v;
    const integer k = (r - 1) / checked_pow(p, v);
    if (multiplicative_order(r, pn) != checked_pow(p, s))
        throw internal_inconsistency("split_r: order of r disagrees with its p-adic splitting");
    return {k, s};
}

} // namespace metacyclic
