#pragma once

// Irreducible complex characters of G = <a> x| <b> by the little-group method.
//
// <b> acts on Irr(<a>) = {chi_x : a -> zeta^x} by chi_x -> chi_{r x}. The
// orbits are
//   * singletons {chi_{lambda p^s}}, 0 <= lambda < p^(n-s); the inertia group
//     is G and each extends to p^m linear characters a -> zeta^(lambda p^s),
//     b -> omega;
//   * for each 1 <= t <= s, orbits {chi_{r^i l p^(s-t)}} of size p^t with
//     gcd(l, p) = 1, l taken mod p^(n-s+t). The inertia group is <a, b^(p^t)>
//     and inducing gives p^(m-t) characters of degree p^t, one for each
//     p^(m-t)-th root of unity omega.
//
// The roots used throughout are zeta_{p^L} for the fixed compatible system of
// cyclotomic.hpp: zeta = zeta_{p^n}, omega = zeta_{p^(m-t)}^u.

#include <algorithm>
#include <cstddef>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "cyclotomic.hpp"
#include "group.hpp"

namespace metacyclic {

struct linear_orbit {
    integer lambda = 0; ///< 0 <= lambda < p^(n-s); the orbit is {chi_{lambda p^s}}

    friend bool operator==(const linear_orbit&, const linear_orbit&) = default;
    friend auto operator<=>(const linear_orbit&, const linear_orbit&) = default;
};

struct induced_orbit {
    int t = 1;     ///< orbit size p^t, 1 <= t <= s
    integer l = 1; ///< least element of {r^i l mod p^(n-s+t)}, coprime to p

    friend bool operator==(const induced_orbit&, const induced_orbit&) = default;
    friend auto operator<=>(const induced_orbit&, const induced_orbit&) = default;
};

using orbit_descriptor = std::variant<linear_orbit, induced_orbit>;

/// Number of characters chi_x of <a> in the orbit.
inline integer orbit_size(const orbit_descriptor& orbit, const group_params& params) {
    if (const auto* ind = std::get_if<induced_orbit>(&orbit))
        return checked_pow(params.p, ind->t);
    return 1;
}

/// One irreducible character: an orbit together with the exponent u of omega.
/// For linear orbits omega = zeta_{p^m}^u; for induced orbits of size p^t,
/// omega = zeta_{p^(m-t)}^u.
struct irreducible_character {
    orbit_descriptor orbit;
    integer u = 0;

    bool is_linear() const { return std::holds_alternative<linear_orbit>(orbit); }
    int t() const { return is_linear() ? 0 : std::get<induced_orbit>(orbit).t; }

    integer degree(const group_params& params) const { return checked_pow(params.p, t()); }

    /// (t, lambda-or-l, u): the ordering key used for representatives.
    std::tuple<int, integer, integer> key() const {
        if (const auto* lin = std::get_if<linear_orbit>(&orbit))
            return {0, lin->lambda, u};
        const auto& ind = std::get<induced_orbit>(orbit);
        return {ind.t, ind.l, u};
    }

    friend bool operator==(const irreducible_character& a, const irreducible_character& b) {
        return a.key() == b.key();
    }
    friend bool operator<(const irreducible_character& a, const irreducible_character& b) {
        return a.key() < b.key();
    }

    std::string to_string() const {
        if (const auto* lin = std::get_if<linear_orbit>(&orbit))
            return "linear(lambda=" + std::to_string(lin->lambda) + ", u=" + std::to_string(u) + ")";
        const auto& ind = std::get<induced_orbit>(orbit);
        return "induced(t=" + std::to_string(ind.t) + ", l=" + std::to_string(ind.l) + ", u=" + std::to_string(u) + ")";
    }
};

namespace detail {

inline void require_non_abelian(const group_params& params, const char* what) {
    if (params.abelian || params.s == 0)
        throw std::invalid_argument(std::string(what) + ": abelian groups are handled by the abelian closed form");
}

} // namespace detail

/// Least element of the orbit of l under multiplication by r mod p^(n-s+t).
inline integer canonical_orbit_label(integer l, int t, const group_params& params) {
    const integer modulus = checked_pow(params.p, params.n - params.s + t);
    const integer r = mod_floor(params.r, modulus);
    const integer start = mod_floor(l, modulus);
    integer best = start;
    for (integer x = mod_mul(start, r, modulus); x != start; x = mod_mul(x, r, modulus))
        best = std::min(best, x);
    return best;
}

/// All orbits of <b> on Irr(<a>): p^(n-s) singletons, then for t = 1..s the
/// phi(p^(n-s)) orbits of size p^t, found by walking each orbit explicitly.
inline std::vector<orbit_descriptor> orbit_decomposition(const group_params& params) {
    detail::require_non_abelian(params, "orbit_decomposition");
    const integer p = params.p;
    const integer pn = params.p_n();
    std::vector<orbit_descriptor> out;
    std::vector<bool> seen(static_cast<std::size_t>(pn), false);
    integer covered = 0;

    for (integer x = 0; x < pn; ++x) {
        if (seen[static_cast<std::size_t>(x)])
            continue;
        std::vector<integer> orbit{x};
        seen[static_cast<std::size_t>(x)] = true;
        for (integer y = mod_mul(x, params.r, pn); y != x; y = mod_mul(y, params.r, pn)) {
            seen[static_cast<std::size_t>(y)] = true;
            orbit.push_back(y);
        }
        covered += static_cast<integer>(orbit.size());
        if (orbit.size() == 1) {
            const integer ps = checked_pow(p, params.s);
            if (x % ps != 0)
                throw internal_inconsistency("orbit_decomposition: fixed point chi_" + std::to_string(x) +
                                             " is not a multiple of p^s");
            out.emplace_back(linear_orbit{x / ps});
            continue;
        }
        // |orbit| = p^t and every member is l p^(s-t) with gcd(l, p) = 1
        int t = 0;
        for (std::size_t size = orbit.size(); size > 1; size /= static_cast<std::size_t>(p))
            ++t;
        if (checked_pow(p, t) != static_cast<integer>(orbit.size()) || t > params.s)
            throw internal_inconsistency("orbit_decomposition: orbit size is not p^t with t <= s");
        const integer scale = checked_pow(p, params.s - t);
        const integer least = *std::min_element(orbit.begin(), orbit.end());
        if (least % scale != 0 || (least / scale) % p == 0)
            throw internal_inconsistency("orbit_decomposition: orbit of size p^t is not of the form l p^(s-t)");
        out.emplace_back(induced_orbit{t, least / scale});
    }
    if (covered != pn)
        throw internal_inconsistency("orbit_decomposition: orbits do not cover Irr(<a>)");

    std::stable_sort(out.begin(), out.end(), [](const orbit_descriptor& a, const orbit_descriptor& b) {
        auto rank = [](const orbit_descriptor& o) {
            return std::holds_alternative<linear_orbit>(o) ? std::pair<int, integer>{0, std::get<linear_orbit>(o).lambda}
                                                           : std::pair<int, integer>{std::get<induced_orbit>(o).t,
                                                                                     std::get<induced_orbit>(o).l};
        };
        return rank(a) < rank(b);
    });
    return out;
}

/// Every irreducible character, ordered by (t, orbit label, u).
inline std::vector<irreducible_character> enumerate_irreducibles(const group_params& params) {
    std::vector<irreducible_character> out;
    const integer pm = params.p_m();
    for (const auto& orbit : orbit_decomposition(params)) {
        const integer choices = std::holds_alternative<linear_orbit>(orbit)
                                    ? pm
                                    : checked_pow(params.p, params.m - std::get<induced_orbit>(orbit).t);
        for (integer u = 0; u < choices; ++u)
            out.push_back({orbit, u});
    }
    return out;
}

/// psi(a^i b^j), exactly.
///   linear:  zeta^(lambda p^s i) * omega^j
///   induced: p^t omega^(j/p^t) zeta^(i l p^(s-t)) when p^t | i and p^t | j, else 0
inline cyclotomic character_value(const irreducible_character& ch, const group_element& g,
                                  const group_params& params) {
    const integer p = params.p;
    const int top = std::max(params.n, params.m);
    const integer period = checked_pow(p, top);
    const integer a_scale = checked_pow(p, top - params.n); // zeta_{p^n} = zeta_{p^top}^a_scale

    if (const auto* lin = std::get_if<linear_orbit>(&ch.orbit)) {
        const integer b_scale = checked_pow(p, top - params.m);
        const integer ps = checked_pow(p, params.s);
        integer e = mod_mul(mod_mul(lin->lambda, ps, period), mod_mul(g.i, a_scale, period), period);
        e = (e + mod_mul(mod_mul(ch.u, g.j, period), b_scale, period)) % period;
        return cyclotomic::root_power(p, top, e);
    }

    const auto& ind = std::get<induced_orbit>(ch.orbit);
    const integer pt = checked_pow(p, ind.t);
    if (g.i % pt != 0 || g.j % pt != 0)
        return cyclotomic(p);
    const integer omega_scale = checked_pow(p, top - (params.m - ind.t)); // zeta_{p^(m-t)}
    const integer x = mod_mul(ind.l, checked_pow(p, params.s - ind.t), period);
    integer e = mod_mul(mod_mul(g.i, x, period), a_scale, period);
    e = (e + mod_mul(mod_mul(ch.u, g.j / pt, period), omega_scale, period)) % period;
    return cyclotomic::root_power(p, top, e) * rational(pt);
}

/// Dense square matrix over cyclotomic numbers; enough for relation checks.
class cyclotomic_matrix {
public:
    cyclotomic_matrix(integer p, std::size_t size) : p_(p), size_(size), entries_(size * size, cyclotomic(p)) {}

    static cyclotomic_matrix identity(integer p, std::size_t size) {
        cyclotomic_matrix out(p, size);
        for (std::size_t i = 0; i < size; ++i)
            out(i, i) = cyclotomic(p, rational(1));
        return out;
    }

    std::size_t size() const noexcept { return size_; }
    cyclotomic& operator()(std::size_t row, std::size_t col) { return entries_[row * size_ + col]; }
    const cyclotomic& operator()(std::size_t row, std::size_t col) const { return entries_[row * size_ + col]; }

    friend cyclotomic_matrix operator*(const cyclotomic_matrix& lhs, const cyclotomic_matrix& rhs) {
        cyclotomic_matrix out(lhs.p_, lhs.size_);
        for (std::size_t i = 0; i < lhs.size_; ++i)
            for (std::size_t k = 0; k < lhs.size_; ++k) {
                const auto& x = lhs(i, k);
                if (x.is_zero())
                    continue;
                for (std::size_t j = 0; j < lhs.size_; ++j) {
                    const auto& y = rhs(k, j);
                    if (!y.is_zero())
                        out(i, j) += x * y;
                }
            }
        return out;
    }

    cyclotomic_matrix pow(integer e) const {
        cyclotomic_matrix result = identity(p_, size_);
        cyclotomic_matrix base = *this;
        while (e > 0) {
            if (e & 1)
                result = result * base;
            base = base * base;
            e >>= 1;
        }
        return result;
    }

    cyclotomic trace() const {
        cyclotomic out(p_);
        for (std::size_t i = 0; i < size_; ++i)
            out += (*this)(i, i);
        return out;
    }

    /// trace(this * rhs) without forming the product.
    cyclotomic trace_of_product(const cyclotomic_matrix& rhs) const {
        cyclotomic out(p_);
        for (std::size_t i = 0; i < size_; ++i)
            for (std::size_t k = 0; k < size_; ++k) {
                const auto& x = (*this)(i, k);
                if (x.is_zero())
                    continue;
                const auto& y = rhs(k, i);
                if (!y.is_zero())
                    out += x * y;
            }
        return out;
    }

    friend bool operator==(const cyclotomic_matrix& a, const cyclotomic_matrix& b) {
        return a.size_ == b.size_ && a.entries_ == b.entries_;
    }

private:
    integer p_;
    std::size_t size_;
    std::vector<cyclotomic> entries_;
};

/// Images of a and b. For an induced character of degree p^t the image of a
/// is diag(zeta^(r^c l p^(s-t))), c = 0..p^t-1, and the image of b has ones on
/// the superdiagonal and omega in the bottom-left corner.
inline std::pair<cyclotomic_matrix, cyclotomic_matrix> materialize_matrices(const irreducible_character& ch,
                                                                            const group_params& params) {
    const integer p = params.p;
    const integer pn = params.p_n();
    if (const auto* lin = std::get_if<linear_orbit>(&ch.orbit)) {
        cyclotomic_matrix a(p, 1), b(p, 1);
        a(0, 0) = cyclotomic::root_power(p, params.n, mod_mul(lin->lambda, checked_pow(p, params.s), pn));
        b(0, 0) = cyclotomic::root_power(p, params.m, ch.u);
        return {std::move(a), std::move(b)};
    }
    const auto& ind = std::get<induced_orbit>(ch.orbit);
    const auto size = static_cast<std::size_t>(checked_pow(p, ind.t));
    cyclotomic_matrix a(p, size), b(p, size);
    integer x = mod_mul(ind.l, checked_pow(p, params.s - ind.t), pn);
    for (std::size_t c = 0; c < size; ++c) {
        a(c, c) = cyclotomic::root_power(p, params.n, x);
        x = mod_mul(x, params.r, pn);
    }
    for (std::size_t c = 0; c + 1 < size; ++c)
        b(c, c + 1) = cyclotomic(p, rational(1));
    b(size - 1, 0) = cyclotomic::root_power(p, params.m - ind.t, ch.u);
    return {std::move(a), std::move(b)};
}

} // namespace metacyclic
