#pragma once

// The split metacyclic group <a, b | a^(p^n) = b^(p^m) = 1, b a b^-1 = a^r>.
//
// Elements are kept in the normal form a^i b^j. Moving b^j past a^i' uses
// b^j a^i' = a^(i' r^j) b^j, so
//     (a^i b^j)(a^i' b^j') = a^(i + i' r^j) b^(j + j').

#include <cstddef>
#include <string>
#include <vector>

#include "arith.hpp"

namespace metacyclic {

/// Validated presentation data. In abelian mode r = 1 and s = k = 0.
struct group_params {
    integer p = 3;
    int n = 0;
    int m = 0;
    integer r = 1;
    int s = 0;
    integer k = 0;
    bool abelian = false;

    integer p_n() const { return checked_pow(p, n); }
    integer p_m() const { return checked_pow(p, m); }
    integer order() const { return checked_pow(p, n + m); }

    /// 1 + p^(n-s): the representative whose value of k is 1. Groups with the
    /// same (p, n, m, s) are isomorphic.
    integer canonical_r() const { return abelian ? 1 : 1 + checked_pow(p, n - s); }

    friend bool operator==(const group_params&, const group_params&) = default;
};

namespace detail {

inline void check_order_bound(integer p, int n, int m, integer bound) {
    integer order = 1;
    for (int i = 0; i < n + m; ++i) {
        order = checked_mul(order, p);
        if (order > bound)
            throw size_bound_error("group order " + std::to_string(p) + "^" + std::to_string(n + m) +
                                   " exceeds the bound " + std::to_string(bound));
    }
}

inline void check_prime(integer p) {
    if (p % 2 == 0)
        throw validation_error("p = " + std::to_string(p) + " is even: p must be an odd prime");
    if (!is_prime(p))
        throw validation_error("p = " + std::to_string(p) + " is not prime");
}

} // namespace detail

/// Validates a non-abelian presentation. r is reduced mod p^n first.
inline group_params validate(integer p, int n, int m, integer r, integer order_bound = formula_order_bound) {
    detail::check_prime(p);
    if (n < 2)
        throw validation_error("n = " + std::to_string(n) + ": a non-abelian presentation needs n >= 2");
    if (m < 1)
        throw validation_error("m = " + std::to_string(m) + ": a non-abelian presentation needs m >= 1");
    detail::check_order_bound(p, n, m, order_bound);

    group_params g;
    g.p = p;
    g.n = n;
    g.m = m;
    g.r = mod_floor(r, g.p_n());
    if (g.r % p == 0)
        throw validation_error("r = " + std::to_string(r) + " is not coprime to p");
    if (g.r == 1)
        throw validation_error("r = 1 mod p^n gives the abelian group; use abelian mode");
    if (g.r % p != 1) {
        const integer order = multiplicative_order(g.r, prime_power(p, n));
        throw validation_error("r = " + std::to_string(r) + " is not 1 mod p: its order modulo p^n is " +
                               std::to_string(order) + ", not a power of p");
    }
    const r_split split = split_r(g.r, p, n);
    g.s = split.s;
    g.k = split.k;
    if (g.s > m)
        throw validation_error("r has order p^" + std::to_string(g.s) + " modulo p^n but b has order p^" +
                               std::to_string(m) + " (need s <= m)");
    return g;
}

/// Validates (p, n, m, s) and uses the canonical r = 1 + p^(n-s).
inline group_params validate_with_s(integer p, int n, int m, int s, integer order_bound = formula_order_bound) {
    detail::check_prime(p);
    if (n < 2)
        throw validation_error("n = " + std::to_string(n) + ": a non-abelian presentation needs n >= 2");
    if (s < 1 || s > n - 1)
        throw validation_error("s = " + std::to_string(s) + " must satisfy 1 <= s <= n - 1");
    if (s > m)
        throw validation_error("s = " + std::to_string(s) + " exceeds m = " + std::to_string(m));
    detail::check_order_bound(p, n, m, order_bound);
    return validate(p, n, m, 1 + checked_pow(p, n - s), order_bound);
}

/// C_{p^n} x C_{p^m}.
inline group_params validate_abelian(integer p, int n, int m, integer order_bound = formula_order_bound) {
    detail::check_prime(p);
    if (n < 0 || m < 0)
        throw validation_error("exponents must be non-negative");
    detail::check_order_bound(p, n, m, order_bound);
    group_params g;
    g.p = p;
    g.n = n;
    g.m = m;
    g.abelian = true;
    return g;
}

/// a^i b^j with 0 <= i < p^n, 0 <= j < p^m.
struct group_element {
    integer i = 0;
    integer j = 0;

    friend bool operator==(const group_element&, const group_element&) = default;
    friend auto operator<=>(const group_element&, const group_element&) = default;
};

inline group_element multiply(const group_element& g, const group_element& h, const group_params& params) {
    const integer pn = params.p_n();
    const integer pm = params.p_m();
    const integer twist = mod_pow(params.r, g.j, pn);
    return {(g.i + mod_mul(h.i, twist, pn)) % pn, (g.j + h.j) % pm};
}

/// The group with a cached table of r^j mod p^n.
class metacyclic_group {
public:
    explicit metacyclic_group(group_params params) : params_(params), pn_(params.p_n()), pm_(params.p_m()) {
        r_pow_.resize(static_cast<std::size_t>(pm_));
        integer x = 1 % pn_;
        for (auto& entry : r_pow_) {
            entry = x;
            x = mod_mul(x, params_.r, pn_);
        }
    }

    const group_params& params() const noexcept { return params_; }
    integer order() const noexcept { return pn_ * pm_; }

    group_element identity() const noexcept { return {0, 0}; }
    group_element a() const noexcept { return {1 % pn_, 0}; }
    group_element b() const noexcept { return {0, 1 % pm_}; }

    group_element multiply(const group_element& g, const group_element& h) const {
        return {(g.i + mod_mul(h.i, r_pow_[static_cast<std::size_t>(g.j)], pn_)) % pn_, (g.j + h.j) % pm_};
    }

    group_element inverse(const group_element& g) const {
        const integer back = (pm_ - g.j) % pm_;
        return {mod_floor(-mod_mul(g.i, r_pow_[static_cast<std::size_t>(back)], pn_), pn_), back};
    }

    group_element power(group_element g, integer e) const {
        group_element out = identity();
        while (e > 0) {
            if (e & 1)
                out = multiply(out, g);
            g = multiply(g, g);
            e >>= 1;
        }
        return out;
    }

    /// x g x^-1
    group_element conjugate(const group_element& g, const group_element& x) const {
        return multiply(multiply(x, g), inverse(x));
    }

    /// [g, h] = g h g^-1 h^-1
    group_element commutator(const group_element& g, const group_element& h) const {
        return multiply(multiply(g, h), multiply(inverse(g), inverse(h)));
    }

    std::size_t index_of(const group_element& g) const {
        return static_cast<std::size_t>(g.i * pm_ + g.j);
    }

    group_element element_at(std::size_t index) const {
        return {static_cast<integer>(index) / pm_, static_cast<integer>(index) % pm_};
    }

    std::vector<group_element> elements() const {
        std::vector<group_element> out;
        out.reserve(static_cast<std::size_t>(order()));
        for (integer i = 0; i < pn_; ++i)
            for (integer j = 0; j < pm_; ++j)
                out.push_back({i, j});
        return out;
    }

    integer r_power(integer j) const { return r_pow_[static_cast<std::size_t>(mod_floor(j, pm_))]; }

private:
    group_params params_;
    integer pn_;
    integer pm_;
    std::vector<integer> r_pow_;
};

/// Partition of G into conjugacy classes, each sorted, classes ordered by
/// their least element. Orbits are closed under conjugation by a and b only.
inline std::vector<std::vector<group_element>> conjugacy_classes(const metacyclic_group& group,
                                                                 integer order_bound = oracle_order_bound) {
    if (group.order() > order_bound)
        throw size_bound_error("conjugacy_classes: group order " + std::to_string(group.order()) +
                               " exceeds the oracle bound " + std::to_string(order_bound));
    const std::size_t size = static_cast<std::size_t>(group.order());
    std::vector<bool> seen(size, false);
    std::vector<std::vector<group_element>> classes;
    const group_element gens[] = {group.a(), group.b()};

    for (std::size_t start = 0; start < size; ++start) {
        if (seen[start])
            continue;
        std::vector<group_element> orbit{group.element_at(start)};
        seen[start] = true;
        for (std::size_t head = 0; head < orbit.size(); ++head) {
            for (const auto& x : gens) {
                const group_element y = group.conjugate(orbit[head], x);
                const std::size_t idx = group.index_of(y);
                if (!seen[idx]) {
                    seen[idx] = true;
                    orbit.push_back(y);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        classes.push_back(std::move(orbit));
    }
    return classes;
}

inline std::vector<std::vector<group_element>> conjugacy_classes(const group_params& params,
                                                                 integer order_bound = oracle_order_bound) {
    if (params.order() > order_bound)
        throw size_bound_error("conjugacy_classes: group order " + std::to_string(params.order()) +
                               " exceeds the oracle bound " + std::to_string(order_bound));
    return conjugacy_classes(metacyclic_group(params), order_bound);
}

/// Derived subgroup, as the normal closure of [a, b], sorted.
inline std::vector<group_element> derived_subgroup(const metacyclic_group& group) {
    const std::size_t size = static_cast<std::size_t>(group.order());
    std::vector<bool> seen(size, false);
    std::vector<group_element> members{group.identity()};
    seen[group.index_of(group.identity())] = true;
    std::vector<group_element> gens{group.commutator(group.a(), group.b())};

    auto add = [&](const group_element& g) {
        const std::size_t idx = group.index_of(g);
        if (!seen[idx]) {
            seen[idx] = true;
            members.push_back(g);
        }
    };
    // closure under right multiplication by the generator and conjugation by a, b
    for (std::size_t head = 0; head < members.size(); ++head) {
        for (const auto& c : gens)
            add(group.multiply(members[head], c));
        add(group.conjugate(members[head], group.a()));
        add(group.conjugate(members[head], group.b()));
    }
    std::sort(members.begin(), members.end());
    return members;
}

} // namespace metacyclic
