#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "arith.hpp"

namespace metacyclic {

/// multiplicity x M_q(Q(zeta_{p^lambda})); lambda = 0 means the center is Q.
struct simple_component {
    integer matrix_size = 1;
    int center_level = 0;
    integer multiplicity = 1;

    friend bool operator==(const simple_component&, const simple_component&) = default;
};

/// Degree -> count.
using degree_table = std::map<integer, integer>;

/// A multiset of simple components, merged on (matrix_size, center_level) and
/// kept sorted by that key.
class wedderburn_decomposition {
public:
    wedderburn_decomposition() = default;

    void add(integer matrix_size, int center_level, integer multiplicity = 1) {
        if (multiplicity < 0 || matrix_size < 1 || center_level < 0)
            throw std::invalid_argument("wedderburn_decomposition::add: invalid component");
        if (multiplicity == 0)
            return;
        auto it = std::lower_bound(components_.begin(), components_.end(), std::pair{matrix_size, center_level},
                                   [](const simple_component& c, const std::pair<integer, int>& key) {
                                       return std::pair{c.matrix_size, c.center_level} < key;
                                   });
        if (it != components_.end() && it->matrix_size == matrix_size && it->center_level == center_level)
            it->multiplicity += multiplicity;
        else
            components_.insert(it, {matrix_size, center_level, multiplicity});
    }

    void add(const simple_component& c) { add(c.matrix_size, c.center_level, c.multiplicity); }

    const std::vector<simple_component>& components() const noexcept { return components_; }

    /// Number of simple components counted with multiplicity.
    integer component_count() const {
        integer total = 0;
        for (const auto& c : components_)
            total += c.multiplicity;
        return total;
    }

    /// sum mult * q^2 * phi(p^lambda), the Q-dimension of the algebra.
    integer dimension(integer p) const {
        integer total = 0;
        for (const auto& c : components_)
            total += checked_mul(checked_mul(c.multiplicity, checked_mul(c.matrix_size, c.matrix_size)),
                                 euler_phi_pow(p, c.center_level));
        return total;
    }

    friend bool operator==(const wedderburn_decomposition&, const wedderburn_decomposition&) = default;

private:
    std::vector<simple_component> components_;
};

/// One line per (q, lambda) key whose multiplicity differs.
struct component_difference {
    integer matrix_size;
    int center_level;
    integer left;
    integer right;
};

inline std::vector<component_difference> diff(const wedderburn_decomposition& left,
                                               const wedderburn_decomposition& right) {
    std::map<std::pair<integer, int>, std::pair<integer, integer>> merged;
    for (const auto& c : left.components())
        merged[{c.matrix_size, c.center_level}].first = c.multiplicity;
    for (const auto& c : right.components())
        merged[{c.matrix_size, c.center_level}].second = c.multiplicity;
    std::vector<component_difference> out;
    for (const auto& [key, counts] : merged)
        if (counts.first != counts.second)
            out.push_back({key.first, key.second, counts.first, counts.second});
    return out;
}

} // namespace metacyclic
