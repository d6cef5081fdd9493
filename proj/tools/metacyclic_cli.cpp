// metacyclic: Wedderburn decompositions of QG for split metacyclic p-groups.
//
// Exit codes: 0 ok, 1 usage, 2 invalid parameters, 3 verification mismatch,
// 4 size bound exceeded, 5 internal inconsistency.

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <metacyclic/metacyclic.hpp>
#include <metacyclic/verify.hpp>

namespace mc = metacyclic;
using nlohmann::json;

namespace {

enum exit_code : int { ok = 0, usage = 1, invalid = 2, mismatch = 3, too_large = 4, inconsistent = 5 };

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct param_flags {
    mc::integer p = 0;
    std::optional<int> n, m;
    std::optional<mc::integer> r;
    std::optional<int> s;
    bool abelian = false;
};

void add_param_flags(CLI::App* cmd, param_flags& f) {
    cmd->add_option("--p", f.p, "odd prime")->required();
    cmd->add_option("--n", f.n, "log_p of the order of a");
    cmd->add_option("--m", f.m, "log_p of the order of b");
    auto* r = cmd->add_option("--r", f.r, "b a b^-1 = a^r");
    auto* s = cmd->add_option("--s", f.s, "order of r is p^s; uses r = 1 + p^(n-s)");
    auto* ab = cmd->add_flag("--abelian", f.abelian, "C_{p^n} x C_{p^m}");
    r->excludes(s)->excludes(ab);
    s->excludes(ab);
}

mc::group_params resolve(const param_flags& f) {
    if (!f.n || !f.m)
        throw usage_error("--n and --m are required");
    if (f.abelian)
        return mc::validate_abelian(f.p, *f.n, *f.m);
    if (f.r)
        return mc::validate(f.p, *f.n, *f.m, *f.r);
    if (f.s)
        return mc::validate_with_s(f.p, *f.n, *f.m, *f.s);
    throw usage_error("exactly one of --r, --s, --abelian is required");
}

mc::method parse_method(const std::string& name) {
    if (name == "closed-form")
        return mc::method::closed_form;
    if (name == "oracle")
        return mc::method::oracle;
    return mc::method::both;
}

std::string describe(const mc::group_params& g) {
    std::ostringstream out;
    out << "p=" << g.p << " n=" << g.n << " m=" << g.m;
    if (g.abelian)
        out << " abelian";
    else
        out << " r=" << g.r << " s=" << g.s;
    return out.str();
}

void check_oracle_bound(const mc::group_params& g, mc::integer bound) {
    if (g.order() > bound)
        throw mc::size_bound_error("group order " + std::to_string(g.order()) + " exceeds the oracle bound " +
                                   std::to_string(bound));
}

// -- decompose ----------------------------------------------------------------

struct decompose_opts {
    param_flags params;
    std::string format = "text";
    std::string method = "closed-form";
    mc::integer oracle_bound = mc::oracle_order_bound;
};

int run_decompose(const decompose_opts& o) {
    const auto g = resolve(o.params);
    const auto how = parse_method(o.method);
    if (how != mc::method::closed_form)
        check_oracle_bound(g, o.oracle_bound);
    const auto report = mc::build_report(g, how, o.oracle_bound);
    if (o.format == "json")
        std::cout << mc::to_json(report).dump(2) << '\n';
    else
        std::cout << mc::render_text(report.decomposition, g.p) << '\n';
    return ok;
}

// -- verify -------------------------------------------------------------------

struct verify_opts {
    param_flags params;
    bool deep = false;
    bool all = false;
    mc::integer max_order = 0;
    bool inject_mismatch = false;
    mc::integer oracle_bound = mc::oracle_order_bound;
};

bool report_check(const std::string& name, const mc::check_summary& result) {
    std::cout << "  " << name << ": " << result.checked << " checks, "
              << (result.ok() ? "ok" : std::to_string(result.failures.size()) + " failed") << '\n';
    for (const auto& f : result.failures)
        std::cout << "    " << f << '\n';
    return result.ok();
}

bool verify_one(const mc::group_params& g, const verify_opts& o) {
    const auto result = mc::verify_decomposition(g, o.oracle_bound, o.inject_mismatch);
    if (result.verified()) {
        std::cout << "VERIFIED " << describe(g) << ": " << mc::render_text(result.closed_form, g.p) << '\n';
    } else {
        std::cout << "MISMATCH " << describe(g) << '\n'
                  << "  closed form: " << mc::render_text(result.closed_form, g.p) << '\n'
                  << "  oracle:      " << mc::render_text(result.oracle, g.p) << '\n';
        for (const auto& d : result.differences)
            std::cout << "  " << (d.matrix_size == 1 ? mc::render_field(g.p, d.center_level)
                                                      : "M" + std::to_string(d.matrix_size) + "(" +
                                                            mc::render_field(g.p, d.center_level) + ")")
                      << ": closed form " << d.left << ", oracle " << d.right << '\n';
    }
    if (!o.deep || g.abelian)
        return result.verified();

    bool good = result.verified();
    if (g.order() <= 243)
        good &= report_check("orthogonality (all pairs)", mc::orthogonality_all_pairs(g));
    else
        good &= report_check("orthogonality (100 random pairs)", mc::orthogonality_random_pairs(g, 100, 20240101));
    good &= report_check("class functions", mc::class_function_check(g, o.oracle_bound));
    const auto sample = mc::sample_per_degree(g, 7);
    mc::check_summary matrices;
    for (const auto& ch : sample) {
        auto one = mc::matrix_relation_check(ch, g);
        matrices.checked += one.checked;
        matrices.failures.insert(matrices.failures.end(), one.failures.begin(), one.failures.end());
    }
    good &= report_check("matrix relations and traces", matrices);
    good &= report_check("galois action", mc::galois_action_check(sample, {2, -1, 1 + g.p}, g));
    return good;
}

int run_verify(const verify_opts& o) {
    if (o.all) {
        if (o.max_order <= 0)
            throw usage_error("--all needs --max-order");
        mc::validate_abelian(o.params.p, 0, 0);
        if (o.max_order > o.oracle_bound)
            throw mc::size_bound_error("--max-order " + std::to_string(o.max_order) + " exceeds the oracle bound " +
                                       std::to_string(o.oracle_bound));
        const auto sweep = mc::parameter_sweep(o.params.p, o.max_order);
        std::size_t failed = 0;
        for (const auto& g : sweep)
            if (!verify_one(g, o))
                ++failed;
        if (failed) {
            std::cout << failed << " of " << sweep.size() << " parameter sets FAILED\n";
            return mismatch;
        }
        std::cout << "ALL VERIFIED: " << sweep.size() << " parameter sets\n";
        return ok;
    }
    const auto g = resolve(o.params);
    check_oracle_bound(g, o.oracle_bound);
    return verify_one(g, o) ? ok : mismatch;
}

// -- counts -------------------------------------------------------------------

struct counts_opts {
    param_flags params;
    std::string kind = "complex";
    std::string format = "text";
    bool oracle = false;
    mc::integer oracle_bound = mc::oracle_order_bound;
};

int run_counts(const counts_opts& o) {
    const auto g = resolve(o.params);
    std::optional<mc::oracle_result> oracle;
    if (o.oracle) {
        check_oracle_bound(g, o.oracle_bound);
        oracle = mc::oracle_decomposition(g, o.oracle_bound);
    }

    // rows of (lambda or -1, degree, count, oracle count)
    struct row {
        int lambda;
        mc::integer degree, count;
        std::optional<mc::integer> check;
    };
    std::vector<row> rows;
    mc::degree_table flat;
    bool match = true;
    if (o.kind == "complex") {
        flat = mc::complex_counts_closed_form(g);
        mc::degree_table keys = flat;
        if (oracle)
            for (const auto& [d, c] : oracle->complex_counts)
                keys.emplace(d, 0);
        for (const auto& [d, c] : keys) {
            row x{-1, d, flat.count(d) ? flat.at(d) : 0, std::nullopt};
            if (oracle)
                x.check = oracle->complex_counts.count(d) ? oracle->complex_counts.at(d) : 0;
            rows.push_back(x);
        }
    } else {
        const auto table = mc::rational_counts_closed_form(g);
        flat = table.by_degree;
        std::map<int, mc::integer> keys = table.by_lambda;
        if (oracle)
            for (const auto& [l, c] : oracle->rational_counts.by_lambda)
                keys.emplace(l, 0);
        for (const auto& [l, c] : keys) {
            row x{l, mc::euler_phi_pow(g.p, l), table.by_lambda.count(l) ? table.by_lambda.at(l) : 0, std::nullopt};
            if (oracle)
                x.check = oracle->rational_counts.by_lambda.count(l) ? oracle->rational_counts.by_lambda.at(l) : 0;
            rows.push_back(x);
        }
    }
    for (const auto& x : rows)
        if (x.check && *x.check != x.count)
            match = false;

    if (o.format == "json") {
        json out;
        out["kind"] = o.kind;
        out["params"] = {{"p", g.p}, {"n", g.n}, {"m", g.m}, {"r", g.r}, {"s", g.s}, {"abelian", g.abelian}};
        out["counts"] = mc::table_to_json(flat);
        if (oracle) {
            out["oracle"] = mc::table_to_json(o.kind == "complex" ? oracle->complex_counts
                                                                   : oracle->rational_counts.by_degree);
            out["match"] = match;
        }
        std::cout << out.dump(2) << '\n';
    } else if (o.format == "inline") {
        std::cout << mc::render_table(flat) << '\n';
    } else {
        const bool rational = o.kind == "rational";
        if (rational)
            std::cout << std::left << std::setw(8) << "lambda";
        std::cout << std::left << std::setw(10) << "degree" << std::setw(10) << "count";
        if (oracle)
            std::cout << "oracle";
        std::cout << '\n';
        for (const auto& x : rows) {
            if (rational)
                std::cout << std::setw(8) << x.lambda;
            std::cout << std::setw(10) << x.degree << std::setw(10) << x.count;
            if (x.check)
                std::cout << *x.check << (*x.check == x.count ? "" : "  MISMATCH");
            std::cout << '\n';
        }
    }
    if (!match) {
        std::cerr << "counts: closed form and oracle disagree\n";
        return mismatch;
    }
    return ok;
}

// -- sweep --------------------------------------------------------------------

struct sweep_opts {
    std::vector<mc::integer> primes;
    mc::integer max_order = 0;
    bool oracle = false;
    std::string format = "text";
    unsigned threads = 0;
    mc::integer oracle_bound = mc::oracle_order_bound;
};

struct sweep_row {
    mc::decomposition_report report;
    bool dimension_ok = false;
    std::string oracle_status = "-"; // "-", "match", "MISMATCH"
    std::string error;
    int error_code = ok;
};

sweep_row sweep_one(const mc::group_params& g, const sweep_opts& o) {
    sweep_row row;
    try {
        row.report = mc::build_report(g, mc::method::closed_form);
        row.dimension_ok = row.report.decomposition.dimension(g.p) == g.order();
        if (o.oracle && g.order() <= o.oracle_bound) {
            const auto oracle = mc::oracle_decomposition(g, o.oracle_bound);
            const bool same = oracle.decomposition == row.report.decomposition &&
                              oracle.complex_counts == row.report.complex_counts &&
                              oracle.rational_counts.by_degree == row.report.rational_counts;
            row.oracle_status = same ? "match" : "MISMATCH";
            if (same)
                row.report.source = mc::provenance::both_verified;
        }
    } catch (const mc::internal_inconsistency& e) {
        row.error = e.what();
        row.error_code = inconsistent;
    }
    return row;
}

int run_sweep(const sweep_opts& o) {
    if (o.max_order < 1)
        throw usage_error("--max-order must be positive");
    if (o.max_order > mc::formula_order_bound)
        throw mc::size_bound_error("--max-order exceeds the bound " + std::to_string(mc::formula_order_bound));
    std::vector<mc::group_params> all;
    for (mc::integer p : o.primes) {
        mc::validate_abelian(p, 0, 0);
        auto part = mc::parameter_sweep(p, o.max_order);
        all.insert(all.end(), part.begin(), part.end());
    }

    std::vector<sweep_row> rows(all.size());
    unsigned workers = o.threads ? o.threads : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(1, all.size())));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < all.size(); i = next++)
            rows[i] = sweep_one(all[i], o);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < workers; ++t)
        pool.emplace_back(work);
    work();
    for (auto& t : pool)
        t.join();

    int status = ok;
    if (o.format == "json") {
        for (const auto& row : rows)
            if (row.error.empty())
                std::cout << mc::to_json(row.report).dump() << '\n';
    } else {
        char line[160];
        std::snprintf(line, sizeof line, "%-4s %-3s %-3s %-3s %-8s %-9s %-12s %-6s %-4s%s", "p", "n", "m", "s", "r",
                      "order", "branch", "comps", "dim", o.oracle ? " oracle   decomposition" : " decomposition");
        std::cout << line << '\n';
        for (const auto& row : rows) {
            const auto& g = row.report.params;
            if (!row.error.empty())
                continue;
            std::snprintf(line, sizeof line, "%-4lld %-3d %-3d %-3d %-8lld %-9lld %-12s %-6lld %-4s",
                          static_cast<long long>(g.p), g.n, g.m, g.s, static_cast<long long>(g.r),
                          static_cast<long long>(g.order()), mc::to_string(mc::branch_of(g)).c_str(),
                          static_cast<long long>(row.report.decomposition.component_count()),
                          row.dimension_ok ? "ok" : "FAIL");
            std::cout << line;
            if (o.oracle) {
                std::snprintf(line, sizeof line, " %-8s", row.oracle_status.c_str());
                std::cout << line;
            }
            std::cout << ' ' << mc::render_text(row.report.decomposition, g.p) << '\n';
        }
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!rows[i].error.empty()) {
            std::cerr << describe(all[i]) << ": " << rows[i].error << '\n';
            status = inconsistent;
        } else if (!rows[i].dimension_ok) {
            std::cerr << describe(all[i]) << ": dimension identity fails\n";
            status = inconsistent;
        } else if (rows[i].oracle_status == "MISMATCH" && status == ok) {
            std::cerr << describe(all[i]) << ": closed form and oracle disagree\n";
            status = mismatch;
        }
    }
    return status;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wedderburn decomposition of QG for split metacyclic p-groups (p odd)"};
    app.require_subcommand(1);

    decompose_opts dec;
    auto* cmd_dec = app.add_subcommand("decompose", "print the simple components of QG");
    add_param_flags(cmd_dec, dec.params);
    cmd_dec->add_option("--format", dec.format)->check(CLI::IsMember({"text", "json"}));
    cmd_dec->add_option("--method", dec.method)->check(CLI::IsMember({"closed-form", "oracle", "both"}));
    cmd_dec->add_option("--oracle-bound", dec.oracle_bound, "largest |G| for the oracle");

    verify_opts ver;
    auto* cmd_ver = app.add_subcommand("verify", "compare the closed form with the character oracle");
    add_param_flags(cmd_ver, ver.params);
    cmd_ver->add_flag("--deep", ver.deep, "also check orthogonality, class functions and matrices");
    cmd_ver->add_flag("--all", ver.all, "every valid (n, m, s) up to --max-order");
    cmd_ver->add_option("--max-order", ver.max_order);
    cmd_ver->add_option("--oracle-bound", ver.oracle_bound, "largest |G| for the oracle");
    cmd_ver->add_flag("--inject-mismatch", ver.inject_mismatch)->group("");

    counts_opts cnt;
    auto* cmd_cnt = app.add_subcommand("counts", "irreducible representation counts by degree");
    add_param_flags(cmd_cnt, cnt.params);
    cmd_cnt->add_option("--kind", cnt.kind)->check(CLI::IsMember({"complex", "rational"}));
    cmd_cnt->add_option("--format", cnt.format)->check(CLI::IsMember({"text", "inline", "json"}));
    cmd_cnt->add_flag("--oracle", cnt.oracle, "add an oracle column");
    cmd_cnt->add_option("--oracle-bound", cnt.oracle_bound, "largest |G| for the oracle");

    sweep_opts swp;
    auto* cmd_swp = app.add_subcommand("sweep", "one row per valid (n, m, s)");
    cmd_swp->add_option("--p", swp.primes, "odd prime(s)")->required();
    cmd_swp->add_option("--max-order", swp.max_order)->required();
    cmd_swp->add_flag("--oracle", swp.oracle, "cross-check rows within the oracle bound");
    cmd_swp->add_option("--format", swp.format)->check(CLI::IsMember({"text", "json"}));
    cmd_swp->add_option("--threads", swp.threads, "worker threads (default: all cores)");
    cmd_swp->add_option("--oracle-bound", swp.oracle_bound, "largest |G| for the oracle");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : usage;
    }

    try {
        if (*cmd_dec)
            return run_decompose(dec);
        if (*cmd_ver)
            return run_verify(ver);
        if (*cmd_cnt)
            return run_counts(cnt);
        return run_sweep(swp);
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return usage;
    } catch (const mc::validation_error& e) {
        std::cerr << "invalid parameters: " << e.what() << '\n';
        return invalid;
    } catch (const mc::size_bound_error& e) {
        std::cerr << "size bound: " << e.what() << '\n';
        return too_large;
    } catch (const mc::internal_inconsistency& e) {
        std::cerr << "internal inconsistency: " << e.what() << '\n';
        return inconsistent;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return inconsistent;
    }
}
