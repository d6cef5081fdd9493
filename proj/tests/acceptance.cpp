#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <metacyclic/metacyclic.hpp>
#include <metacyclic/report.hpp>
#include <metacyclic/verify.hpp>

using namespace metacyclic;

namespace {

struct outcome {
    bool pass = true;
    std::string detail;
};

std::string label(const group_params& g) {
    std::ostringstream out;
    out << "p=" << g.p << " n=" << g.n << " m=" << g.m << " s=" << g.s << " r=" << g.r;
    return out.str();
}

void fail(outcome& o, const std::string& why) {
    if (o.pass)
        o.detail = why;
    o.pass = false;
}

// p = 3 up to 2187, p = 5 up to 3125, p = 7 up to 2401
std::vector<group_params> oracle_scale() {
    std::vector<group_params> out;
    for (auto [p, bound] : {std::pair<integer, integer>{3, 2187}, {5, 3125}, {7, 2401}}) {
        const auto part = parameter_sweep(p, bound);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

int exit_status(const std::string& args) {
    const std::string cmd = std::string(METACYCLIC_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int raw = std::system(cmd.c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

outcome ac1() {
    outcome o;
    const std::vector<std::pair<group_params, std::string>> goldens{
        {validate(3, 4, 2, 10), "Q + 4*Q(z3) + 12*Q(z9) + 3*M3(Q(z9)) + M9(Q(z9))"},
        {validate(3, 3, 3, 4), "Q + 4*Q(z3) + 3*Q(z9) + 3*Q(z27) + 3*M3(Q(z3)) + 2*M3(Q(z9)) + 3*M9(Q(z3))"},
        {validate(3, 2, 3, 4), "Q + 4*Q(z3) + 3*Q(z9) + 3*Q(z27) + 3*M3(Q(z3)) + 2*M3(Q(z9))"},
    };
    for (const auto& [g, want] : goldens) {
        const auto start = std::chrono::steady_clock::now();
        const auto report = build_report(g, method::both);
        const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
        const auto got = render_text(report.decomposition, g.p);
        if (got != want)
            fail(o, label(g) + ": got " + got);
        if (took.count() >= 1.0)
            fail(o, label(g) + ": took " + std::to_string(took.count()) + " s");
    }
    o.detail = o.pass ? "3 goldens" : o.detail;
    return o;
}

outcome ac2() {
    outcome o;
    std::size_t sets = 0;
    for (auto [p, bound] : {std::pair<integer, integer>{3, 2187}, {5, 3125}})
        for (const auto& g : parameter_sweep(p, bound)) {
            ++sets;
            const auto chars = enumerate_irreducibles(g);
            const auto classes = galois_classes(chars, g);
            if (wedderburn_closed_form(g) != wedderburn_from_classes(classes, g))
                fail(o, label(g) + ": closed form differs from oracle");
            for (const auto& cls : classes)
                if (character_field_level(cls.representative, g) != field_level_from_values(cls.representative, g))
                    fail(o, label(g) + ": field level of " + cls.representative.to_string());
        }
    if (o.pass)
        o.detail = std::to_string(sets) + " parameter sets";
    return o;
}

outcome ac3() {
    outcome o;
    std::size_t sets = 0;
    for (integer p : {3, 5, 7, 11})
        for (const auto& g : parameter_sweep(p, formula_order_bound)) {
            ++sets;
            if (wedderburn_closed_form(g).dimension(p) != g.order())
                fail(o, label(g));
        }
    if (o.pass)
        o.detail = std::to_string(sets) + " parameter sets";
    return o;
}

outcome ac4(const std::vector<group_params>& groups) {
    outcome o;
    for (const auto& g : groups) {
        const auto classes = static_cast<integer>(conjugacy_classes(g).size());
        const auto chars = enumerate_irreducibles(g);
        integer squares = 0;
        for (const auto& ch : chars)
            squares += ch.degree(g) * ch.degree(g);
        if (classes != complex_total_closed_form(g) || classes != static_cast<integer>(chars.size()))
            fail(o, label(g) + ": classes " + std::to_string(classes) + ", formula " +
                        std::to_string(complex_total_closed_form(g)) + ", characters " + std::to_string(chars.size()));
        if (squares != g.order())
            fail(o, label(g) + ": sum of squared degrees " + std::to_string(squares));
    }
    if (o.pass)
        o.detail = std::to_string(groups.size()) + " parameter sets";
    return o;
}

outcome ac5(const std::vector<group_params>& groups) {
    outcome o;
    std::size_t pairs = 0;
    for (const auto& g : groups) {
        if (g.order() > 2187)
            continue;
        const auto result = g.order() <= 243 ? orthogonality_all_pairs(g) : orthogonality_random_pairs(g, 100, 20240101);
        pairs += result.checked;
        if (!result.ok())
            fail(o, label(g) + ": " + result.failures.front());
        if (g.order() <= 243) {
            const auto fn = class_function_check(g);
            if (!fn.ok())
                fail(o, label(g) + ": " + fn.failures.front());
        }
    }
    if (o.pass)
        o.detail = std::to_string(pairs) + " pairs";
    return o;
}

outcome ac6(const std::vector<group_params>& groups) {
    outcome o;
    std::size_t checks = 0;
    for (const auto& g : groups)
        for (const auto& ch : sample_per_degree(g, 7)) {
            const auto result = matrix_relation_check(ch, g);
            checks += result.checked;
            if (!result.ok())
                fail(o, label(g) + " " + ch.to_string() + ": " + result.failures.front());
        }
    if (o.pass)
        o.detail = std::to_string(checks) + " checks";
    return o;
}

outcome ac7() {
    outcome o;
    std::size_t cases = 0;
    for (integer p : {3, 5, 7, 11})
        for (int n = 0; n <= 12; ++n)
            for (int m = 0; m <= n; ++m, ++cases)
                if (!lemma23_identity_check(p, n, m))
                    fail(o, "counting identity p=" + std::to_string(p) + " n=" + std::to_string(n) +
                                " m=" + std::to_string(m));
    for (integer p : {3, 5})
        for (int M = 1; M <= 5; ++M) {
            const integer pM = checked_pow(p, M);
            for (int S = 1; S < M; ++S) {
                const integer pS = checked_pow(p, S);
                for (integer k = 1; k < pS; ++k) {
                    if (k % p == 0)
                        continue;
                    ++cases;
                    const integer base = 1 + k * checked_pow(p, M - S);
                    cyclotomic sum(p);
                    for (integer i = 0; i < pS; ++i)
                        sum += root_power(p, M, mod_pow(base, i, pM));
                    if (!sum.is_zero())
                        fail(o, "root sum p=" + std::to_string(p) + " M=" + std::to_string(M) +
                                    " S=" + std::to_string(S) + " k=" + std::to_string(k));
                }
            }
        }
    if (o.pass)
        o.detail = std::to_string(cases) + " cases";
    return o;
}

outcome ac8(const std::vector<group_params>& groups) {
    outcome o;
    for (const auto& g : groups) {
        const auto formula = rational_counts_closed_form(g).by_lambda;
        const auto oracle = oracle_decomposition(g).rational_counts.by_lambda;
        if (formula == oracle)
            continue;
        std::ostringstream line;
        line << "finding " << label(g) << ":";
        for (const auto& [lambda, count] : oracle) {
            const auto it = formula.find(lambda);
            const integer got = it == formula.end() ? 0 : it->second;
            if (got != count)
                line << " lambda " << lambda << " formula " << got << " oracle " << count << ";";
        }
        std::cout << line.str() << "\n";
        fail(o, label(g));
    }
    if (o.pass)
        o.detail = std::to_string(groups.size()) + " parameter sets, no boundary findings";
    return o;
}

outcome ac9() {
    outcome o;
    const std::vector<std::pair<std::string, std::function<void()>>> cases{
        {"--p 2 --n 4 --m 2 --r 3", [] { validate(2, 4, 2, 3); }},
        {"--p 3 --n 2 --m 1 --r 2", [] { validate(3, 2, 1, 2); }},
        {"--p 3 --n 3 --m 1 --s 2", [] { validate_with_s(3, 3, 1, 2); }},
    };
    for (const auto& [args, call] : cases) {
        bool rejected = false;
        try {
            call();
        } catch (const validation_error&) {
            rejected = true;
        }
        if (!rejected)
            fail(o, args + ": accepted by the library");
        const int status = exit_status("decompose " + args);
        if (status != 2)
            fail(o, args + ": exit " + std::to_string(status));
    }
    if (o.pass)
        o.detail = "3 rejections, exit 2";
    return o;
}

} // namespace

int main() {
    const auto groups = oracle_scale();
    const std::vector<std::pair<std::string, std::function<outcome()>>> criteria{
        {"AC1 golden decompositions", ac1},
        {"AC2 closed form equals oracle", ac2},
        {"AC3 dimension identity", ac3},
        {"AC4 complex counts", [&] { return ac4(groups); }},
        {"AC5 orthogonality", [&] { return ac5(groups); }},
        {"AC6 matrix relations", [&] { return ac6(groups); }},
        {"AC7 counting identities", ac7},
        {"AC8 rational counts by level", [&] { return ac8(groups); }},
        {"AC9 negative controls", ac9},
    };
    int failures = 0;
    for (const auto& [name, run] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            fail(o, std::string("exception: ") + e.what());
        }
        const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
        char secs[32];
        std::snprintf(secs, sizeof secs, "%.1fs", took.count());
        std::cout << (o.pass ? "PASS " : "FAIL ") << name << " (" << o.detail << ", " << secs << ")" << std::endl;
        failures += o.pass ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
