#pragma once

// Closed-form answers as functions of (p, n, m, s) alone.
//
// With d = n - s, the non-abelian decomposition splits into three branches:
//   d >= m                    (no omega ever outgrows zeta^(p^s))
//   d <  m, k = m - d <= s    (only families with t < k see larger omega fields)
//   d <  m, k = m - d >  s    (every nonlinear family does)
// Empty summation ranges contribute nothing.

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "decomposition.hpp"
#include "group.hpp"
#include "rational.hpp"

namespace metacyclic {

enum class formula_branch { abelian, wide_kernel, narrow_kernel_small_k, narrow_kernel_large_k };

inline std::string to_string(formula_branch b) {
    switch (b) {
    case formula_branch::abelian: return "abelian";
    case formula_branch::wide_kernel: return "n-s>=m";
    case formula_branch::narrow_kernel_small_k: return "n-s<m,k<=s";
    case formula_branch::narrow_kernel_large_k: return "n-s<m,k>s";
    }
    return "?";
}

inline formula_branch branch_of(const group_params& params) {
    if (params.abelian)
        return formula_branch::abelian;
    const int d = params.n - params.s;
    if (d >= params.m)
        return formula_branch::wide_kernel;
    return params.m - d <= params.s ? formula_branch::narrow_kernel_small_k : formula_branch::narrow_kernel_large_k;
}

/// Q C_{p^n} x C_{p^m}, n >= m >= 0.
inline wedderburn_decomposition abelian_closed_form(integer p, int n, int m) {
    if (m < 0 || n < m)
        throw std::invalid_argument("abelian_closed_form: need n >= m >= 0");
    wedderburn_decomposition out;
    out.add(1, 0, 1);
    for (int lambda = 1; lambda <= m; ++lambda)
        out.add(1, lambda, checked_pow(p, lambda) + checked_pow(p, lambda - 1));
    for (int lambda = m + 1; lambda <= n; ++lambda)
        out.add(1, lambda, checked_pow(p, m));
    return out;
}

namespace detail {

inline void check_dimension(const wedderburn_decomposition& w, const group_params& params, const char* what) {
    if (w.dimension(params.p) != params.order())
        throw internal_inconsistency(std::string(what) + ": dimension " + std::to_string(w.dimension(params.p)) +
                                     " != |G| = " + std::to_string(params.order()));
}

} // namespace detail

/// The decomposition of QG from (p, n, m, s). Abelian parameters are routed to
/// abelian_closed_form.
inline wedderburn_decomposition wedderburn_closed_form(const group_params& params) {
    const integer p = params.p;
    const int n = params.n, m = params.m, s = params.s;
    wedderburn_decomposition out;

    if (params.abelian) {
        out = n >= m ? abelian_closed_form(p, n, m) : abelian_closed_form(p, m, n);
        detail::check_dimension(out, params, "abelian_closed_form");
        return out;
    }

    const int d = n - s;
    const integer pd = checked_pow(p, d);
    const integer phi_d = euler_phi_pow(p, d);

    // components whose kernel contains G': Q(C_{p^d} x C_{p^m})
    const int low = std::min(d, m);
    out.add(1, 0, 1);
    for (int lambda = 1; lambda <= low; ++lambda)
        out.add(1, lambda, checked_pow(p, lambda) + checked_pow(p, lambda - 1));
    for (int lambda = low + 1; lambda <= std::max(d, m); ++lambda)
        out.add(1, lambda, checked_pow(p, low));

    switch (branch_of(params)) {
    case formula_branch::wide_kernel:
        for (int t = 1; t <= s; ++t)
            out.add(checked_pow(p, t), d, checked_pow(p, m - t));
        break;
    case formula_branch::narrow_kernel_small_k: {
        const int k = m - d;
        for (int t = 1; t <= k - 1; ++t) {
            out.add(checked_pow(p, t), d, pd);
            for (int lambda = d + 1; lambda <= m - t; ++lambda)
                out.add(checked_pow(p, t), lambda, phi_d);
        }
        for (int t = k; t <= s; ++t)
            out.add(checked_pow(p, t), d, checked_pow(p, m - t));
        break;
    }
    case formula_branch::narrow_kernel_large_k:
        for (int t = 1; t <= s; ++t) {
            out.add(checked_pow(p, t), d, pd);
            for (int lambda = d + 1; lambda <= m - t; ++lambda)
                out.add(checked_pow(p, t), lambda, phi_d);
        }
        break;
    case formula_branch::abelian:
        break;
    }
    detail::check_dimension(out, params, "wedderburn_closed_form");
    return out;
}

/// Irreducible rational representations of C_{p^n} x C_{p^m} (n >= m) by
/// lambda, where the degree is phi(p^lambda).
inline rational_count_table abelian_rational_counts(integer p, int n, int m) {
    if (m < 0 || n < m)
        throw std::invalid_argument("abelian_rational_counts: need n >= m >= 0");
    rational_count_table out;
    out.by_lambda[0] = 1;
    for (int lambda = 1; lambda <= m; ++lambda)
        out.by_lambda[lambda] += checked_pow(p, lambda - 1) * (p + 1);
    for (int lambda = m + 1; lambda <= n; ++lambda)
        out.by_lambda[lambda] += checked_pow(p, m);
    for (const auto& [lambda, count] : out.by_lambda)
        out.by_degree[euler_phi_pow(p, lambda)] += count;
    return out;
}

/// Rational irreducibles by lambda (degree phi(p^lambda)), case by case:
///   d >= m:        1; p^(l-1)(p+1) for l <= m; p^m for m < l <= d; p^(m-t) at l = d+t
///   d < m, k <= s: 1; p^(l-1)(p+1) for l <= d; 2p^d + (t-1)phi(p^d) at l = d+t, t < k;
///                  p^d + (k-1)phi(p^d) + p^(m-k) at l = m; p^(m-t) at l = d+t, t > k
///   d < m, k > s:  1; p^(l-1)(p+1) for l <= d; 2p^d + (t-1)phi(p^d) at l = d+t, t <= s;
///                  p^d + s phi(p^d) for n < l <= m
inline rational_count_table rational_counts_closed_form(const group_params& params) {
    const integer p = params.p;
    const int n = params.n, m = params.m, s = params.s;
    if (params.abelian)
        return n >= m ? abelian_rational_counts(p, n, m) : abelian_rational_counts(p, m, n);

    const int d = n - s;
    const integer pd = checked_pow(p, d);
    const integer phi_d = euler_phi_pow(p, d);
    rational_count_table out;
    out.by_lambda[0] = 1;

    switch (branch_of(params)) {
    case formula_branch::wide_kernel:
        for (int lambda = 1; lambda <= m; ++lambda)
            out.by_lambda[lambda] += checked_pow(p, lambda - 1) * (p + 1);
        for (int lambda = m + 1; lambda <= d; ++lambda)
            out.by_lambda[lambda] += checked_pow(p, m);
        for (int t = 1; t <= s; ++t)
            out.by_lambda[d + t] += checked_pow(p, m - t);
        break;
    case formula_branch::narrow_kernel_small_k: {
        const int k = m - d;
        for (int lambda = 1; lambda <= d; ++lambda)
            out.by_lambda[lambda] += checked_pow(p, lambda - 1) * (p + 1);
        for (int t = 1; t <= k - 1; ++t)
            out.by_lambda[d + t] += 2 * pd + (t - 1) * phi_d;
        out.by_lambda[d + k] += pd + (k - 1) * phi_d + checked_pow(p, m - k);
        for (int t = k + 1; t <= s; ++t)
            out.by_lambda[d + t] += checked_pow(p, m - t);
        break;
    }
    case formula_branch::narrow_kernel_large_k:
        for (int lambda = 1; lambda <= d; ++lambda)
            out.by_lambda[lambda] += checked_pow(p, lambda - 1) * (p + 1);
        for (int t = 1; t <= s; ++t)
            out.by_lambda[d + t] += 2 * pd + (t - 1) * phi_d;
        for (int lambda = n + 1; lambda <= m; ++lambda)
            out.by_lambda[lambda] += pd + s * phi_d;
        break;
    case formula_branch::abelian:
        break;
    }
    for (const auto& [lambda, count] : out.by_lambda)
        out.by_degree[euler_phi_pow(p, lambda)] += count;
    return out;
}

/// Complex irreducibles by degree: p^(n+m-s) linear, phi(p^(n-s)) p^(m-t) of degree p^t.
inline degree_table complex_counts_closed_form(const group_params& params) {
    degree_table out;
    if (params.abelian) {
        out[1] = params.order();
        return out;
    }
    out[1] = checked_pow(params.p, params.n + params.m - params.s);
    const integer phi_d = euler_phi_pow(params.p, params.n - params.s);
    for (int t = 1; t <= params.s; ++t)
        out[checked_pow(params.p, t)] = phi_d * checked_pow(params.p, params.m - t);
    return out;
}

/// p^(n+m-s) + p^(n+m-s-1) - p^(n+m-2s-1).
inline integer complex_total_closed_form(const group_params& params) {
    if (params.abelian)
        return params.order();
    const integer p = params.p;
    const int e = params.n + params.m - params.s;
    return checked_pow(p, e) + checked_pow(p, e - 1) - checked_pow(p, e - params.s - 1);
}

/// Evaluates both sides of
///   p^(n+m) = 1 + sum_{r=1}^{m} phi(p^r) (2 sum_{k<r} phi(p^k) + phi(p^r))
///               + sum_{r=m+1}^{n} phi(p^r) sum_{k=0}^{m} phi(p^k)
/// in arbitrary precision, n >= m >= 0.
inline bool lemma23_identity_check(integer p, int n, int m) {
    using big = boost::multiprecision::cpp_int;
    if (m < 0 || n < m)
        throw std::invalid_argument("lemma23_identity_check: need n >= m >= 0");
    auto power = [p](int e) {
        big out = 1;
        for (int i = 0; i < e; ++i)
            out *= p;
        return out;
    };
    auto phi = [&](int e) { return e == 0 ? big(1) : power(e) - power(e - 1); };

    big rhs = 1;
    for (int r = 1; r <= m; ++r) {
        big inner = phi(r);
        for (int k = 0; k < r; ++k)
            inner += 2 * phi(k);
        rhs += phi(r) * inner;
    }
    big tail = 0;
    for (int k = 0; k <= m; ++k)
        tail += phi(k);
    for (int r = m + 1; r <= n; ++r)
        rhs += phi(r) * tail;
    return rhs == power(n + m);
}

/// 1 + sum_{r=1}^{m} (p^r + p^(r-1)) + (n - m) p^m, the number of rational
/// irreducibles of C_{p^n} x C_{p^m}, n >= m.
inline integer abelian_rational_total(integer p, int n, int m) {
    integer total = 1;
    for (int r = 1; r <= m; ++r)
        total += checked_pow(p, r) + checked_pow(p, r - 1);
    return total + (n - m) * checked_pow(p, m);
}

/// sum_{k=0}^{m} (n + m + 1 - 2k) phi(p^k), the same count written another way.
inline integer abelian_rational_total_by_phi(integer p, int n, int m) {
    integer total = 0;
    for (int k = 0; k <= m; ++k)
        total += (n + m + 1 - 2 * k) * euler_phi_pow(p, k);
    return total;
}

} // namespace metacyclic
