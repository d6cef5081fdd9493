#pragma once

// Galois conjugacy classes of Irr(G) and the Wedderburn decomposition they
// determine.
//
// For odd p every Schur index over Q is 1, so each Galois class E(psi)
// contributes exactly one simple component M_{psi(1)}(Q(psi)), and
// |E(psi)| = [Q(psi) : Q]. All character fields here are Q(zeta_{p^L}).

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "complex_reps.hpp"
#include "decomposition.hpp"

namespace metacyclic {

namespace detail {

/// Level of the root of unity zeta_{p^width}^x: width - w_p(x), or 0 for x = 0.
inline int root_level(integer x, integer p, int width) {
    x = mod_floor(x, checked_pow(p, width));
    return x == 0 ? 0 : width - p_adic_valuation(x, p);
}

} // namespace detail

// -- abelian machinery -------------------------------------------------------

/// chi_{i,j} of C_{p^n} x C_{p^m}: a -> zeta_{p^n}^i, b -> zeta_{p^m}^j.
struct abelian_character {
    integer i = 0;
    integer j = 0;

    friend bool operator==(const abelian_character&, const abelian_character&) = default;
    friend auto operator<=>(const abelian_character&, const abelian_character&) = default;
};

struct abelian_class {
    abelian_character representative;
    std::vector<abelian_character> members;
    int field_level = 0;
};

/// Orbits of Irr(C_{p^n} x C_{p^m}) under sigma_alpha: (i, j) -> (alpha i, alpha j).
inline std::vector<abelian_class> abelian_galois_classes(integer p, int n, int m) {
    const integer pn = checked_pow(p, n);
    const integer pm = checked_pow(p, m);
    const integer top = checked_pow(p, std::max(n, m));
    std::vector<bool> seen(static_cast<std::size_t>(pn * pm), false);
    std::vector<abelian_class> out;

    for (integer i = 0; i < pn; ++i)
        for (integer j = 0; j < pm; ++j) {
            if (seen[static_cast<std::size_t>(i * pm + j)])
                continue;
            abelian_class cls;
            for (integer alpha = 1; alpha < top; ++alpha) {
                if (alpha % p == 0)
                    continue;
                const abelian_character image{mod_mul(alpha, i, pn), mod_mul(alpha, j, pm)};
                auto flag = seen[static_cast<std::size_t>(image.i * pm + image.j)];
                if (!flag) {
                    flag = true;
                    cls.members.push_back(image);
                }
            }
            if (cls.members.empty()) // top == 1: only the trivial character
                cls.members.push_back({0, 0});
            seen[static_cast<std::size_t>(i * pm + j)] = true;
            std::sort(cls.members.begin(), cls.members.end());
            cls.representative = cls.members.front();
            cls.field_level = std::max(detail::root_level(i, p, n), detail::root_level(j, p, m));
            if (static_cast<integer>(cls.members.size()) != euler_phi_pow(p, cls.field_level))
                throw internal_inconsistency("abelian class size differs from [Q(chi):Q]");
            out.push_back(std::move(cls));
        }
    return out;
}

// -- characters of G ---------------------------------------------------------

/// L with Q(psi) = Q(zeta_{p^L}).
///   linear (lambda, u): the value field of chi_{lambda,u} on C_{p^(n-s)} x C_{p^m}
///   induced (t, l, u):  max(n - s, level of omega)
inline int character_field_level(const irreducible_character& ch, const group_params& params) {
    if (const auto* lin = std::get_if<linear_orbit>(&ch.orbit))
        return std::max(detail::root_level(lin->lambda, params.p, params.n - params.s),
                        detail::root_level(ch.u, params.p, params.m));
    const int omega_level = detail::root_level(ch.u, params.p, params.m - ch.t());
    return std::max(params.n - params.s, omega_level);
}

/// The same level, computed from the values: max over g of the minimal level
/// of psi(g). Valid here because every value is a rational multiple of a
/// root of unity.
inline int field_level_from_values(const irreducible_character& ch, const group_params& params) {
    const metacyclic_group group(params);
    int level = 0;
    for (const auto& g : group.elements())
        level = std::max(level, character_value(ch, g, params).minimal_level());
    return level;
}

/// psi^sigma_alpha on parameters.
inline irreducible_character galois_image(const irreducible_character& ch, integer alpha,
                                          const group_params& params) {
    if (const auto* lin = std::get_if<linear_orbit>(&ch.orbit)) {
        const integer pns = checked_pow(params.p, params.n - params.s);
        const integer pm = params.p_m();
        return {linear_orbit{mod_mul(mod_floor(alpha, pns), lin->lambda, pns)},
                mod_mul(mod_floor(alpha, pm), ch.u, pm)};
    }
    const auto& ind = std::get<induced_orbit>(ch.orbit);
    const integer label_mod = checked_pow(params.p, params.n - params.s + ind.t);
    const integer omega_mod = checked_pow(params.p, params.m - ind.t);
    const integer l = canonical_orbit_label(mod_mul(mod_floor(alpha, label_mod), ind.l, label_mod), ind.t, params);
    return {induced_orbit{ind.t, l}, mod_mul(mod_floor(alpha, omega_mod), ch.u, omega_mod)};
}

/// True when galois_image agrees with applying sigma_alpha to every value.
inline bool galois_action_matches_values(const irreducible_character& ch, integer alpha,
                                         const group_params& params) {
    const irreducible_character image = galois_image(ch, alpha, params);
    const metacyclic_group group(params);
    for (const auto& g : group.elements())
        if (character_value(ch, g, params).galois_apply(alpha) != character_value(image, g, params))
            return false;
    return true;
}

struct galois_class {
    irreducible_character representative; ///< least member by (t, label, u)
    std::vector<irreducible_character> members;
    integer size = 0;
    int field_level = 0;

    integer degree(const group_params& params) const { return representative.degree(params); }
};

/// Partitions a complete list of irreducible characters into Galois classes.
/// Linear characters factor through G/G' = C_{p^(n-s)} x C_{p^m} and are
/// classed by the abelian machinery; the others by the parameter action.
inline std::vector<galois_class> galois_classes(const std::vector<irreducible_character>& chars,
                                                const group_params& params) {
    detail::require_non_abelian(params, "galois_classes");
    integer degree_squares = 0;
    for (const auto& ch : chars)
        degree_squares += checked_mul(ch.degree(params), ch.degree(params));
    if (degree_squares != params.order())
        throw std::invalid_argument("galois_classes: character list is incomplete (sum of squared degrees " +
                                    std::to_string(degree_squares) + " != |G| = " +
                                    std::to_string(params.order()) + ")");

    std::map<std::tuple<int, integer, integer>, std::size_t> index;
    for (std::size_t i = 0; i < chars.size(); ++i)
        if (!index.emplace(chars[i].key(), i).second)
            throw std::invalid_argument("galois_classes: duplicate character " + chars[i].to_string());

    std::vector<bool> assigned(chars.size(), false);
    std::vector<galois_class> out;

    auto take = [&](const irreducible_character& ch) {
        auto it = index.find(ch.key());
        if (it == index.end())
            throw internal_inconsistency("galois_classes: image " + ch.to_string() + " is not in the list");
        if (assigned[it->second])
            throw internal_inconsistency("galois_classes: classes overlap at " + ch.to_string());
        assigned[it->second] = true;
    };

    for (const auto& cls : abelian_galois_classes(params.p, params.n - params.s, params.m)) {
        galois_class g;
        for (const auto& member : cls.members) {
            irreducible_character ch{linear_orbit{member.i}, member.j};
            take(ch);
            g.members.push_back(ch);
        }
        g.representative = g.members.front();
        g.size = static_cast<integer>(g.members.size());
        g.field_level = cls.field_level;
        if (g.field_level != character_field_level(g.representative, params))
            throw internal_inconsistency("galois_classes: abelian field level disagrees for " +
                                         g.representative.to_string());
        out.push_back(std::move(g));
    }

    const integer top = checked_pow(params.p, std::max(params.n, params.m));
    for (std::size_t i = 0; i < chars.size(); ++i) {
        if (assigned[i] || chars[i].is_linear())
            continue;
        galois_class g;
        for (integer alpha = 1; alpha < top; ++alpha) {
            if (alpha % params.p == 0)
                continue;
            irreducible_character image = galois_image(chars[i], alpha, params);
            if (std::find(g.members.begin(), g.members.end(), image) == g.members.end())
                g.members.push_back(std::move(image));
        }
        for (const auto& member : g.members)
            take(member);
        std::sort(g.members.begin(), g.members.end());
        g.representative = g.members.front();
        g.size = static_cast<integer>(g.members.size());
        g.field_level = character_field_level(g.representative, params);
        out.push_back(std::move(g));
    }
    if (std::find(assigned.begin(), assigned.end(), false) != assigned.end())
        throw internal_inconsistency("galois_classes: some characters were not classed");

    for (const auto& g : out)
        if (g.size != euler_phi_pow(params.p, g.field_level))
            throw internal_inconsistency("galois_classes: class of " + g.representative.to_string() +
                                         " has size " + std::to_string(g.size) + " but [Q(psi):Q] = " +
                                         std::to_string(euler_phi_pow(params.p, g.field_level)));

    std::sort(out.begin(), out.end(),
              [](const galois_class& a, const galois_class& b) { return a.representative < b.representative; });
    return out;
}

/// One component M_{psi(1)}(Q(psi)) per class.
inline wedderburn_decomposition wedderburn_from_classes(const std::vector<galois_class>& classes,
                                                        const group_params& params) {
    wedderburn_decomposition out;
    for (const auto& cls : classes)
        out.add(cls.degree(params), cls.field_level, 1);
    if (out.dimension(params.p) != params.order())
        throw internal_inconsistency("wedderburn_from_classes: dimension " + std::to_string(out.dimension(params.p)) +
                                     " != |G| = " + std::to_string(params.order()));
    return out;
}

/// Rational irreducible representations, counted two equivalent ways: by
/// their degree psi(1) phi(p^L), and by the index lambda with that degree
/// equal to phi(p^lambda) (lambda = L + t, or 0 for the trivial one).
struct rational_count_table {
    std::map<int, integer> by_lambda;
    degree_table by_degree;

    integer total() const {
        integer sum = 0;
        for (const auto& [lambda, count] : by_lambda)
            sum += count;
        return sum;
    }

    friend bool operator==(const rational_count_table&, const rational_count_table&) = default;
};

inline rational_count_table rational_counts_from_classes(const std::vector<galois_class>& classes,
                                                         const group_params& params) {
    rational_count_table out;
    for (const auto& cls : classes) {
        const integer degree = checked_mul(cls.degree(params), euler_phi_pow(params.p, cls.field_level));
        const int lambda = cls.field_level == 0 ? 0 : cls.field_level + cls.representative.t();
        if (euler_phi_pow(params.p, lambda) != degree)
            throw internal_inconsistency("rational_counts_from_classes: degree is not phi(p^lambda)");
        ++out.by_lambda[lambda];
        ++out.by_degree[degree];
    }
    return out;
}

/// Abelian counterpart of rational_counts_from_classes.
inline rational_count_table rational_counts_from_classes(const std::vector<abelian_class>& classes,
                                                         integer p) {
    rational_count_table out;
    for (const auto& cls : classes) {
        ++out.by_lambda[cls.field_level];
        ++out.by_degree[euler_phi_pow(p, cls.field_level)];
    }
    return out;
}

/// Character-theoretic route to the decomposition: enumerate Irr(G), class it
/// under Galois conjugacy, and assemble one component per class.
struct oracle_result {
    wedderburn_decomposition decomposition;
    rational_count_table rational_counts;
    degree_table complex_counts;
    std::size_t class_count = 0;
};

inline oracle_result oracle_decomposition(const group_params& params, integer order_bound = oracle_order_bound) {
    if (params.order() > order_bound)
        throw size_bound_error("oracle: group order " + std::to_string(params.order()) + " exceeds the bound " +
                               std::to_string(order_bound));
    oracle_result out;
    if (params.abelian) {
        const auto classes = abelian_galois_classes(params.p, params.n, params.m);
        for (const auto& cls : classes)
            out.decomposition.add(1, cls.field_level, 1);
        out.rational_counts = rational_counts_from_classes(classes, params.p);
        out.complex_counts[1] = params.order();
        out.class_count = classes.size();
        if (out.decomposition.dimension(params.p) != params.order())
            throw internal_inconsistency("oracle: abelian dimension identity fails");
        return out;
    }
    const auto chars = enumerate_irreducibles(params);
    for (const auto& ch : chars)
        ++out.complex_counts[ch.degree(params)];
    const auto classes = galois_classes(chars, params);
    out.decomposition = wedderburn_from_classes(classes, params);
    out.rational_counts = rational_counts_from_classes(classes, params);
    out.class_count = classes.size();
    return out;
}

} // namespace metacyclic
