#pragma once

// Rendering and parsing of decomposition reports.
//
// Text grammar (one line):
//     line      := component (" + " component)*
//     component := [mult "*"] body
//     body      := field | "M" q "(" field ")"
//     field     := "Q" | "Q(z" p^lambda ")"
// e.g. "Q + 4*Q(z3) + 12*Q(z9) + 3*M3(Q(z9)) + M9(Q(z9))".

#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "decomposition.hpp"
#include "group.hpp"

namespace metacyclic {

enum class provenance { closed_form, oracle, both_verified };

inline std::string to_string(provenance p) {
    switch (p) {
    case provenance::closed_form: return "closed_form";
    case provenance::oracle: return "oracle";
    case provenance::both_verified: return "both (verified)";
    }
    return "?";
}

inline provenance provenance_from_string(std::string_view s) {
    if (s == "closed_form")
        return provenance::closed_form;
    if (s == "oracle")
        return provenance::oracle;
    if (s == "both (verified)")
        return provenance::both_verified;
    throw std::invalid_argument("unknown provenance '" + std::string(s) + "'");
}

struct decomposition_report {
    group_params params;
    wedderburn_decomposition decomposition;
    degree_table complex_counts;
    degree_table rational_counts; ///< keyed by the degree of the rational representation
    provenance source = provenance::closed_form;

    friend bool operator==(const decomposition_report&, const decomposition_report&) = default;
};

// -- text ---------------------------------------------------------------------

inline std::string render_field(integer p, int level) {
    return level == 0 ? "Q" : "Q(z" + std::to_string(checked_pow(p, level)) + ")";
}

inline std::string render_text(const wedderburn_decomposition& w, integer p) {
    std::string out;
    for (const auto& c : w.components()) {
        if (!out.empty())
            out += " + ";
        if (c.multiplicity != 1)
            out += std::to_string(c.multiplicity) + "*";
        if (c.matrix_size == 1)
            out += render_field(p, c.center_level);
        else
            out += "M" + std::to_string(c.matrix_size) + "(" + render_field(p, c.center_level) + ")";
    }
    return out;
}

namespace detail {

class text_cursor {
public:
    explicit text_cursor(std::string_view text) : text_(text) {}

    bool done() const { return pos_ == text_.size(); }
    bool peek(std::string_view token) const { return text_.substr(pos_, token.size()) == token; }

    bool accept(std::string_view token) {
        if (!peek(token))
            return false;
        pos_ += token.size();
        return true;
    }

    void expect(std::string_view token) {
        if (!accept(token))
            fail("expected '" + std::string(token) + "'");
    }

    std::optional<integer> number() {
        std::size_t end = pos_;
        while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end])))
            ++end;
        if (end == pos_)
            return std::nullopt;
        integer value = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + end, value);
        if (ec != std::errc())
            fail("number out of range");
        pos_ = end;
        return value;
    }

    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("parse_text: " + why + " at offset " + std::to_string(pos_) + " in '" +
                                    std::string(text_) + "'");
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

inline int parse_field(text_cursor& in, integer p) {
    in.expect("Q");
    if (!in.accept("(z"))
        return 0;
    const auto root = in.number();
    if (!root)
        in.fail("expected the order of the root of unity");
    in.expect(")");
    integer x = *root;
    int level = 0;
    while (x > 1 && x % p == 0) {
        x /= p;
        ++level;
    }
    if (x != 1 || level == 0)
        in.fail(std::to_string(*root) + " is not a positive power of " + std::to_string(p));
    return level;
}

} // namespace detail

/// Inverse of render_text.
inline wedderburn_decomposition parse_text(std::string_view text, integer p) {
    wedderburn_decomposition out;
    detail::text_cursor in(text);
    do {
        integer mult = 1;
        if (auto lead = in.number()) {
            mult = *lead;
            in.expect("*");
        }
        if (in.accept("M")) {
            const auto q = in.number();
            if (!q)
                in.fail("expected a matrix size");
            in.expect("(");
            const int level = detail::parse_field(in, p);
            in.expect(")");
            out.add(*q, level, mult);
        } else {
            out.add(1, detail::parse_field(in, p), mult);
        }
    } while (in.accept(" + "));
    if (!in.done())
        in.fail("trailing input");
    return out;
}

// -- json ---------------------------------------------------------------------

inline nlohmann::json table_to_json(const degree_table& table) {
    nlohmann::json out = nlohmann::json::object();
    for (const auto& [degree, count] : table)
        out[std::to_string(degree)] = count;
    return out;
}

inline degree_table table_from_json(const nlohmann::json& j) {
    degree_table out;
    for (const auto& [key, value] : j.items())
        out[std::stoll(key)] = value.get<integer>();
    return out;
}

inline nlohmann::json to_json(const decomposition_report& report) {
    const auto& g = report.params;
    nlohmann::json out;
    out["p"] = g.p;
    out["n"] = g.n;
    out["m"] = g.m;
    out["r"] = g.r;
    out["s"] = g.s;
    out["k"] = g.k;
    out["abelian"] = g.abelian;
    out["order"] = g.order();
    out["canonical_r"] = g.canonical_r();
    out["components"] = nlohmann::json::array();
    for (const auto& c : report.decomposition.components())
        out["components"].push_back({{"q", c.matrix_size}, {"lambda", c.center_level}, {"mult", c.multiplicity}});
    out["text"] = render_text(report.decomposition, g.p);
    out["complex_counts"] = table_to_json(report.complex_counts);
    out["rational_counts"] = table_to_json(report.rational_counts);
    out["provenance"] = to_string(report.source);
    return out;
}

inline decomposition_report report_from_json(const nlohmann::json& j) {
    decomposition_report out;
    auto& g = out.params;
    g.p = j.at("p").get<integer>();
    g.n = j.at("n").get<int>();
    g.m = j.at("m").get<int>();
    g.r = j.at("r").get<integer>();
    g.s = j.at("s").get<int>();
    g.k = j.at("k").get<integer>();
    g.abelian = j.value("abelian", false);
    for (const auto& c : j.at("components"))
        out.decomposition.add(c.at("q").get<integer>(), c.at("lambda").get<int>(), c.at("mult").get<integer>());
    out.complex_counts = table_from_json(j.at("complex_counts"));
    out.rational_counts = table_from_json(j.at("rational_counts"));
    out.source = provenance_from_string(j.at("provenance").get<std::string>());
    return out;
}

/// "{1: 81, 3: 18, 9: 6}"
inline std::string render_table(const degree_table& table) {
    std::string out = "{";
    for (const auto& [degree, count] : table) {
        if (out.size() > 1)
            out += ", ";
        out += std::to_string(degree) + ": " + std::to_string(count);
    }
    return out + "}";
}

} // namespace metacyclic
