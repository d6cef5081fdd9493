#include <gtest/gtest.h>

#include <map>
#include <set>

#include <metacyclic/complex_reps.hpp>
#include <metacyclic/verify.hpp>

using namespace metacyclic;

namespace {

// orbit size -> number of orbits of x -> r x on Z/p^n
std::map<integer, integer> orbit_histogram(integer r, integer pn) {
    std::map<integer, integer> out;
    std::set<integer> seen;
    for (integer x = 0; x < pn; ++x) {
        if (seen.count(x))
            continue;
        integer size = 0;
        integer y = x;
        do {
            seen.insert(y);
            y = y * r % pn;
            ++size;
        } while (y != x);
        ++out[size];
    }
    return out;
}

std::map<integer, integer> degree_counts(const std::vector<irreducible_character>& chars, const group_params& g) {
    std::map<integer, integer> out;
    for (const auto& ch : chars)
        ++out[ch.degree(g)];
    return out;
}

const group_params G1 = validate(3, 4, 2, 10);
const group_params G2 = validate(3, 3, 3, 4);
const group_params G3 = validate(3, 2, 3, 4);

} // namespace

TEST(Orbits, PaperGroupOne) {
    const auto expected = orbit_histogram(10, 81);
    EXPECT_EQ(expected, (std::map<integer, integer>{{1, 9}, {3, 6}, {9, 6}}));
    std::map<integer, integer> got;
    integer covered = 0;
    for (const auto& o : orbit_decomposition(G1)) {
        ++got[orbit_size(o, G1)];
        covered += orbit_size(o, G1);
    }
    EXPECT_EQ(got, expected);
    EXPECT_EQ(covered, 81);
}

TEST(Orbits, MinimalCase) {
    const auto g = validate(3, 2, 1, 4);
    EXPECT_EQ(orbit_histogram(4, 9), (std::map<integer, integer>{{1, 3}, {3, 2}}));
    const auto orbits = orbit_decomposition(g);
    ASSERT_EQ(orbits.size(), 5u);
    for (int i = 0; i < 3; ++i)
        EXPECT_EQ(std::get<linear_orbit>(orbits[i]).lambda, i);
    EXPECT_EQ(std::get<induced_orbit>(orbits[3]), (induced_orbit{1, 1}));
    EXPECT_EQ(std::get<induced_orbit>(orbits[4]), (induced_orbit{1, 2}));
}

TEST(Orbits, AbelianRejected) {
    EXPECT_THROW(orbit_decomposition(validate_abelian(3, 2, 2)), std::invalid_argument);
    EXPECT_THROW(enumerate_irreducibles(validate_abelian(3, 2, 2)), std::invalid_argument);
}

TEST(Orbits, CountsAndCanonicalLabels) {
    for (const auto& g : parameter_sweep(3, 3 * 729)) {
        const auto expected = orbit_histogram(g.r, g.p_n());
        std::map<integer, integer> got;
        for (const auto& o : orbit_decomposition(g)) {
            ++got[orbit_size(o, g)];
            if (const auto* ind = std::get_if<induced_orbit>(&o)) {
                ASSERT_NE(ind->l % g.p, 0);
                ASSERT_EQ(canonical_orbit_label(ind->l, ind->t, g), ind->l);
                ASSERT_GE(ind->t, 1);
                ASSERT_LE(ind->t, g.s);
            }
        }
        ASSERT_EQ(got, expected);
        ASSERT_EQ(got[1], checked_pow(g.p, g.n - g.s));
        for (int t = 1; t <= g.s; ++t)
            ASSERT_EQ(got[checked_pow(g.p, t)], euler_phi_pow(g.p, g.n - g.s));
    }
}

TEST(Orbits, LabelIsOrbitMinimum) {
    const integer modulus = 27; // p^(n-s+t) for G1 with t = 1
    for (integer l = 1; l < modulus; ++l) {
        if (l % 3 == 0)
            continue;
        integer least = l;
        for (integer x = l * 10 % modulus; x != l; x = x * 10 % modulus)
            least = std::min(least, x);
        ASSERT_EQ(canonical_orbit_label(l, 1, G1), least);
    }
}

TEST(Enumerate, PaperCounts) {
    EXPECT_EQ(degree_counts(enumerate_irreducibles(G1), G1), (std::map<integer, integer>{{1, 81}, {3, 18}, {9, 6}}));
    EXPECT_EQ(enumerate_irreducibles(G1).size(), 105u);
    EXPECT_EQ(degree_counts(enumerate_irreducibles(G2), G2), (std::map<integer, integer>{{1, 81}, {3, 18}, {9, 6}}));
    EXPECT_EQ(enumerate_irreducibles(G2).size(), conjugacy_classes(G2).size());
    EXPECT_EQ(enumerate_irreducibles(G3).size(), 99u);
}

TEST(Enumerate, DegreeSquaresAndClassCount) {
    for (integer p : {3, 5, 7})
        for (const auto& g : parameter_sweep(p, p == 3 ? 729 : 3125)) {
            const auto chars = enumerate_irreducibles(g);
            integer squares = 0;
            for (const auto& ch : chars)
                squares += ch.degree(g) * ch.degree(g);
            ASSERT_EQ(squares, g.order());
            ASSERT_EQ(chars.size(), conjugacy_classes(g).size());
            ASSERT_TRUE(std::is_sorted(chars.begin(), chars.end()));
            ASSERT_EQ(std::set<irreducible_character>(chars.begin(), chars.end()).size(), chars.size());
        }
}

TEST(Values, NamedCases) {
    for (const auto& ch : enumerate_irreducibles(G1)) {
        const cyclotomic deg(3, rational(ch.degree(G1)));
        ASSERT_EQ(character_value(ch, {0, 0}, G1), deg);
        if (ch.is_linear())
            continue;
        const auto& ind = std::get<induced_orbit>(ch.orbit);
        ASSERT_TRUE(character_value(ch, {1, 0}, G1).is_zero());
        const integer pt = checked_pow(3, ind.t);
        ASSERT_EQ(character_value(ch, {pt, 0}, G1),
                  root_power(3, 4, ind.l * checked_pow(3, G1.s)) * rational(pt));
    }
}

TEST(Values, InducedSumOverOrbit) {
    // psi(a^i) = sum over the orbit of zeta^(r^c l p^(s-t) i)
    for (const auto& ch : enumerate_irreducibles(G3)) {
        if (ch.is_linear())
            continue;
        const auto& ind = std::get<induced_orbit>(ch.orbit);
        for (integer i = 0; i < G3.p_n(); ++i) {
            cyclotomic sum(3);
            integer x = ind.l * checked_pow(3, G3.s - ind.t);
            for (integer c = 0; c < checked_pow(3, ind.t); ++c) {
                sum += root_power(3, G3.n, x * i);
                x = x * G3.r % G3.p_n();
            }
            ASSERT_EQ(character_value(ch, {i, 0}, G3), sum);
        }
    }
}

TEST(Values, ClassFunctions) {
    for (const auto& g : {validate(3, 2, 1, 4), validate(3, 3, 2, 4), G3, validate(5, 2, 1, 6)})
        EXPECT_TRUE(class_function_check(g).ok());
}

TEST(Orthogonality, AllPairsSmallGroups) {
    for (const auto& g : {validate(3, 2, 1, 4), validate(3, 2, 2, 4), validate(3, 3, 1, 10), validate(5, 2, 1, 6)}) {
        const auto result = orthogonality_all_pairs(g);
        EXPECT_TRUE(result.ok()) << (result.failures.empty() ? "" : result.failures.front());
        const auto n = enumerate_irreducibles(g).size();
        EXPECT_EQ(result.checked, n * (n + 1) / 2);
    }
}

TEST(Matrices, LinearAreOneByOne) {
    const irreducible_character ch{linear_orbit{2}, 5};
    const auto [A, B] = materialize_matrices(ch, G1);
    ASSERT_EQ(A.size(), 1u);
    EXPECT_EQ(A(0, 0), root_power(3, 4, 2 * 9));
    EXPECT_EQ(B(0, 0), root_power(3, 2, 5));
}

TEST(Matrices, BPowerIsScalar) {
    for (const auto& ch : enumerate_irreducibles(G1)) {
        if (ch.is_linear())
            continue;
        const auto [A, B] = materialize_matrices(ch, G1);
        const integer pt = checked_pow(3, ch.t());
        auto omega_i = cyclotomic_matrix::identity(3, A.size());
        for (std::size_t c = 0; c < A.size(); ++c)
            omega_i(c, c) = root_power(3, G1.m - ch.t(), ch.u);
        ASSERT_EQ(B.pow(pt), omega_i);
    }
}

TEST(Matrices, RelationsAndTraces) {
    for (const auto& g : {G3, validate(3, 3, 2, 4), validate(5, 2, 1, 6)})
        for (const auto& ch : sample_per_degree(g, 1)) {
            const auto result = matrix_relation_check(ch, g);
            EXPECT_TRUE(result.ok()) << (result.failures.empty() ? "" : result.failures.front());
            EXPECT_EQ(result.checked, static_cast<std::size_t>(g.order()) + 3);
        }
    const auto linear = enumerate_irreducibles(G3).at(7);
    EXPECT_TRUE(matrix_relation_check(linear, G3).ok());
}
