#pragma once

// Cross-checks between the closed forms and the character-theoretic oracle,
// plus the deeper character-table checks (orthogonality, class functions,
// explicit matrices). Everything is exact.

#include <cstddef>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "complex_reps.hpp"
#include "formulas.hpp"
#include "group.hpp"
#include "rational.hpp"
#include "report.hpp"

namespace metacyclic {

struct equivalence_result {
    wedderburn_decomposition closed_form;
    wedderburn_decomposition oracle;
    std::vector<component_difference> differences;

    bool verified() const { return differences.empty(); }
};

/// Runs both routes. `corrupt` perturbs the closed form first; it exists so
/// the mismatch path can be exercised end to end.
inline equivalence_result verify_decomposition(const group_params& params, integer order_bound = oracle_order_bound,
                                               bool corrupt = false) {
    equivalence_result out;
    out.closed_form = wedderburn_closed_form(params);
    if (corrupt)
        out.closed_form.add(1, 0, 1);
    out.oracle = oracle_decomposition(params, order_bound).decomposition;
    out.differences = diff(out.closed_form, out.oracle);
    return out;
}

enum class method { closed_form, oracle, both };

/// Report for one group. With method::both the oracle must agree with the
/// closed form or internal_inconsistency is thrown.
inline decomposition_report build_report(const group_params& params, method how,
                                         integer order_bound = oracle_order_bound) {
    decomposition_report out;
    out.params = params;
    if (how != method::oracle) {
        out.decomposition = wedderburn_closed_form(params);
        out.complex_counts = complex_counts_closed_form(params);
        out.rational_counts = rational_counts_closed_form(params).by_degree;
        out.source = provenance::closed_form;
    }
    if (how == method::closed_form)
        return out;
    const oracle_result oracle = oracle_decomposition(params, order_bound);
    if (how == method::oracle) {
        out.decomposition = oracle.decomposition;
        out.complex_counts = oracle.complex_counts;
        out.rational_counts = oracle.rational_counts.by_degree;
        out.source = provenance::oracle;
        return out;
    }
    if (oracle.decomposition != out.decomposition || oracle.complex_counts != out.complex_counts ||
        oracle.rational_counts.by_degree != out.rational_counts)
        throw internal_inconsistency("closed form and oracle disagree: " + render_text(out.decomposition, params.p) +
                                     " vs " + render_text(oracle.decomposition, params.p));
    out.source = provenance::both_verified;
    return out;
}

/// Every valid non-abelian (n, m, s) for the prime p with p^(n+m) <= max_order,
/// each with r = 1 + p^(n-s).
inline std::vector<group_params> parameter_sweep(integer p, integer max_order) {
    std::vector<group_params> out;
    for (int total = 3;; ++total) {
        integer order = 1;
        bool fits = true;
        for (int i = 0; i < total && fits; ++i) {
            if (order > max_order / p)
                fits = false;
            else
                order *= p;
        }
        if (!fits || order > max_order)
            break;
        for (int n = 2; n < total; ++n) {
            const int m = total - n;
            for (int s = 1; s <= std::min(n - 1, m); ++s)
                out.push_back(validate_with_s(p, n, m, s, max_order));
        }
    }
    return out;
}

/// (1/|G|) sum_g psi(g) conj(psi'(g)).
inline cyclotomic inner_product(const irreducible_character& lhs, const irreducible_character& rhs,
                                const group_params& params) {
    const metacyclic_group group(params);
    cyclotomic acc(params.p);
    for (const auto& g : group.elements()) {
        const cyclotomic x = character_value(lhs, g, params);
        if (x.is_zero())
            continue;
        const cyclotomic y = character_value(rhs, g, params);
        if (y.is_zero())
            continue;
        acc += x * y.conj();
    }
    return acc * rational(1, params.order());
}

struct check_summary {
    std::size_t checked = 0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

/// First orthogonality on every unordered pair of irreducible characters.
inline check_summary orthogonality_all_pairs(const group_params& params) {
    const auto chars = enumerate_irreducibles(params);
    const metacyclic_group group(params);
    const auto elements = group.elements();
    check_summary out;
    const cyclotomic one(params.p, rational(1));
    for (std::size_t a = 0; a < chars.size(); ++a) {
        std::vector<cyclotomic> conj_row;
        conj_row.reserve(elements.size());
        for (const auto& g : elements)
            conj_row.push_back(character_value(chars[a], g, params).conj());
        for (std::size_t b = a; b < chars.size(); ++b) {
            cyclotomic acc(params.p);
            for (std::size_t e = 0; e < elements.size(); ++e) {
                if (conj_row[e].is_zero())
                    continue;
                const cyclotomic x = character_value(chars[b], elements[e], params);
                if (!x.is_zero())
                    acc += x * conj_row[e];
            }
            acc *= rational(1, params.order());
            ++out.checked;
            if (acc != (a == b ? one : cyclotomic(params.p)))
                out.failures.push_back("<" + chars[a].to_string() + ", " + chars[b].to_string() +
                                       "> = " + acc.to_string());
        }
    }
    return out;
}

/// First orthogonality on `count` random pairs; about half are diagonal.
inline check_summary orthogonality_random_pairs(const group_params& params, std::size_t count, std::uint64_t seed) {
    const auto chars = enumerate_irreducibles(params);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, chars.size() - 1);
    check_summary out;
    const cyclotomic one(params.p, rational(1));
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t a = pick(rng);
        const std::size_t b = (rng() & 1) ? a : pick(rng);
        const cyclotomic value = inner_product(chars[a], chars[b], params);
        ++out.checked;
        if (value != (a == b ? one : cyclotomic(params.p)))
            out.failures.push_back("<" + chars[a].to_string() + ", " + chars[b].to_string() +
                                   "> = " + value.to_string());
    }
    return out;
}

/// Every irreducible character is constant on every conjugacy class.
inline check_summary class_function_check(const group_params& params, integer order_bound = oracle_order_bound) {
    const auto classes = conjugacy_classes(params, order_bound);
    check_summary out;
    for (const auto& ch : enumerate_irreducibles(params)) {
        for (const auto& cls : classes) {
            const cyclotomic first = character_value(ch, cls.front(), params);
            for (std::size_t i = 1; i < cls.size(); ++i)
                if (character_value(ch, cls[i], params) != first) {
                    out.failures.push_back(ch.to_string() + " is not constant on the class of (" +
                                           std::to_string(cls.front().i) + ", " + std::to_string(cls.front().j) + ")");
                    break;
                }
            ++out.checked;
        }
    }
    return out;
}

/// A^(p^n) = I, B^(p^m) = I, B A B^-1 = A^r for the materialized matrices, and
/// trace(A^i B^j) = psi(a^i b^j) on every element.
inline check_summary matrix_relation_check(const irreducible_character& ch, const group_params& params) {
    check_summary out;
    const auto [A, B] = materialize_matrices(ch, params);
    const auto I = cyclotomic_matrix::identity(params.p, A.size());
    const integer pn = params.p_n(), pm = params.p_m();
    const std::string who = ch.to_string();

    if (A.pow(pn) != I)
        out.failures.push_back(who + ": A^(p^n) != I");
    if (B.pow(pm) != I)
        out.failures.push_back(who + ": B^(p^m) != I");
    if (B * A * B.pow(pm - 1) != A.pow(params.r))
        out.failures.push_back(who + ": B A B^-1 != A^r");
    out.checked += 3;

    std::vector<cyclotomic_matrix> a_pow{I}, b_pow{I};
    for (integer i = 1; i < pn; ++i)
        a_pow.push_back(a_pow.back() * A);
    for (integer j = 1; j < pm; ++j)
        b_pow.push_back(b_pow.back() * B);
    for (integer i = 0; i < pn; ++i)
        for (integer j = 0; j < pm; ++j) {
            ++out.checked;
            if (a_pow[static_cast<std::size_t>(i)].trace_of_product(b_pow[static_cast<std::size_t>(j)]) !=
                character_value(ch, {i, j}, params)) {
                out.failures.push_back(who + ": trace mismatch at a^" + std::to_string(i) + " b^" + std::to_string(j));
                if (out.failures.size() > 10)
                    return out;
            }
        }
    return out;
}

/// One character per degree p^t (t >= 1), drawn with the given seed.
inline std::vector<irreducible_character> sample_per_degree(const group_params& params, std::uint64_t seed) {
    const auto chars = enumerate_irreducibles(params);
    std::mt19937_64 rng(seed);
    std::vector<irreducible_character> out;
    for (int t = 1; t <= params.s; ++t) {
        std::vector<irreducible_character> family;
        for (const auto& ch : chars)
            if (ch.t() == t)
                family.push_back(ch);
        std::uniform_int_distribution<std::size_t> pick(0, family.size() - 1);
        out.push_back(family[pick(rng)]);
    }
    return out;
}

/// Parameter-level Galois action against value-level action for the given
/// characters and automorphisms.
inline check_summary galois_action_check(const std::vector<irreducible_character>& chars,
                                         const std::vector<integer>& alphas, const group_params& params) {
    check_summary out;
    for (const auto& ch : chars)
        for (integer alpha : alphas) {
            ++out.checked;
            if (!galois_action_matches_values(ch, alpha, params))
                out.failures.push_back(ch.to_string() + " under alpha = " + std::to_string(alpha));
        }
    return out;
}

} // namespace metacyclic
