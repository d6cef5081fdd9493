#include <gtest/gtest.h>

#include <metacyclic/report.hpp>
#include <metacyclic/verify.hpp>

using namespace metacyclic;

namespace {

const group_params G1 = validate(3, 4, 2, 10);

} // namespace

TEST(Text, PaperLine) {
    EXPECT_EQ(render_text(wedderburn_closed_form(G1), 3), "Q + 4*Q(z3) + 12*Q(z9) + 3*M3(Q(z9)) + M9(Q(z9))");
}

TEST(Text, MatrixOverRationals) {
    wedderburn_decomposition w;
    w.add(3, 0, 2);
    w.add(1, 0, 1);
    w.add(1, 2, 1);
    EXPECT_EQ(render_text(w, 5), "Q + Q(z25) + 2*M3(Q)");
    EXPECT_EQ(parse_text("Q + Q(z25) + 2*M3(Q)", 5), w);
}

TEST(Text, ParseMergesRepeatedKeys) {
    wedderburn_decomposition w;
    w.add(1, 1, 5);
    EXPECT_EQ(parse_text("2*Q(z3) + 3*Q(z3)", 3), w);
}

TEST(Text, ParseErrors) {
    EXPECT_THROW(parse_text("", 3), std::invalid_argument);
    EXPECT_THROW(parse_text("Q +", 3), std::invalid_argument);
    EXPECT_THROW(parse_text("Q(z6)", 3), std::invalid_argument);
    EXPECT_THROW(parse_text("Q(z1)", 3), std::invalid_argument);
    EXPECT_THROW(parse_text("4Q(z3)", 3), std::invalid_argument);
    EXPECT_THROW(parse_text("M3(Q(z9)", 3), std::invalid_argument);
    EXPECT_THROW(parse_text("Q  + Q(z3)", 3), std::invalid_argument);
    EXPECT_THROW(parse_text("Q + Q(z3) trailing", 3), std::invalid_argument);
}

TEST(Text, RoundTripOverSweep) {
    for (integer p : {3, 5, 7})
        for (const auto& g : parameter_sweep(p, 1'000'000)) {
            const auto w = wedderburn_closed_form(g);
            ASSERT_EQ(parse_text(render_text(w, p), p), w);
        }
}

TEST(Json, SchemaKeys) {
    const auto j = to_json(build_report(G1, method::closed_form));
    for (const char* key : {"p", "n", "m", "r", "s", "k", "order", "canonical_r", "components", "complex_counts",
                            "rational_counts", "provenance", "text"})
        EXPECT_TRUE(j.contains(key)) << key;
    EXPECT_EQ(j["order"], 729);
    EXPECT_EQ(j["provenance"], "closed_form");
    EXPECT_EQ(j["components"].size(), 5u);
    EXPECT_EQ(j["components"][4], (nlohmann::json{{"q", 9}, {"lambda", 2}, {"mult", 1}}));
    EXPECT_EQ(j["complex_counts"], (nlohmann::json{{"1", 81}, {"3", 18}, {"9", 6}}));
    EXPECT_EQ(j["rational_counts"]["54"], 1);
}

TEST(Json, RoundTripOverSweep) {
    for (integer p : {3, 5})
        for (const auto& g : parameter_sweep(p, 100'000)) {
            const auto report = build_report(g, method::closed_form);
            const auto back = report_from_json(nlohmann::json::parse(to_json(report).dump()));
            ASSERT_EQ(back, report);
        }
    const auto both = build_report(validate(3, 2, 3, 4), method::both);
    EXPECT_EQ(both.source, provenance::both_verified);
    EXPECT_EQ(report_from_json(to_json(both)), both);
    const auto abelian = build_report(validate_abelian(3, 1, 1), method::oracle);
    EXPECT_EQ(report_from_json(to_json(abelian)), abelian);
}

TEST(Json, MissingKeysRejected) {
    auto j = to_json(build_report(G1, method::closed_form));
    j.erase("components");
    EXPECT_THROW(report_from_json(j), nlohmann::json::exception);
    auto k = to_json(build_report(G1, method::closed_form));
    k["provenance"] = "guess";
    EXPECT_THROW(report_from_json(k), std::invalid_argument);
}

TEST(Report, MethodsAgree) {
    const auto closed = build_report(G1, method::closed_form);
    const auto oracle = build_report(G1, method::oracle);
    EXPECT_EQ(closed.decomposition, oracle.decomposition);
    EXPECT_EQ(closed.complex_counts, oracle.complex_counts);
    EXPECT_EQ(closed.rational_counts, oracle.rational_counts);
    EXPECT_EQ(oracle.source, provenance::oracle);
    EXPECT_THROW(build_report(validate(3, 5, 4, 4), method::oracle), size_bound_error);
}

TEST(Report, TableRendering) {
    EXPECT_EQ(render_table({{1, 81}, {3, 18}, {9, 6}}), "{1: 81, 3: 18, 9: 6}");
    EXPECT_EQ(render_table({}), "{}");
}

TEST(Report, VerifyDetectsInjectedMismatch) {
    const auto result = verify_decomposition(G1, oracle_order_bound, true);
    ASSERT_FALSE(result.verified());
    ASSERT_EQ(result.differences.size(), 1u);
    EXPECT_EQ(result.differences[0].matrix_size, 1);
    EXPECT_EQ(result.differences[0].center_level, 0);
    EXPECT_EQ(result.differences[0].left, 2);
    EXPECT_EQ(result.differences[0].right, 1);
    EXPECT_TRUE(verify_decomposition(G1).verified());
}
