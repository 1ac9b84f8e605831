// fls: classify, embed, and solve fuzzy systems of linear equations from
// JSON problem files. Exit codes: classify/embed use 0 = done, 2 = failure;
// solve uses 0 = solved and fuzzy, 1 = solved but not fuzzy, 2 = failure.
#include <cstdio>
#include <exception>
#include <string>

#include "CLI11.hpp"

#include "fls/errors.hpp"
#include "fls/fsle.hpp"
#include "fls/json_io.hpp"
#include "fls/kernels.hpp"

namespace {

struct CliFlags {
    std::string input;
    bool json = false;
    bool force = false;
    bool check_inverse = false;
    bool dump_embedding = false;
    std::string method;
    double gamma = 0.0;
    double omega = 0.0;
    double tol = 0.0;
    std::size_t max_iter = 0;
    // set when the corresponding option was given on the command line
    bool has_method = false, has_gamma = false, has_omega = false, has_tol = false,
         has_max_iter = false;
};

void print_yes_no(const char* label, bool v) {
    std::printf("%s: %s\n", label, v ? "yes" : "no");
}

void print_classification_text(const fls::Classification& c) {
    std::printf("verdict: %s\n", fls::matrix_class_name(c.verdict));
    print_yes_no("sdd", c.sdd);
    print_yes_no("m-matrix", c.m_matrix);
    print_yes_no("h-matrix", c.h_matrix);
    if (c.witness) {
        std::printf("witness:");
        for (double x : *c.witness) std::printf(" %.12g", x);
        std::printf("\n");
    } else {
        std::printf("witness: none\n");
    }
    if (c.jacobi_radius_estimate) {
        std::printf("jacobi radius estimate: %.12g\n", *c.jacobi_radius_estimate);
    }
}

int cmd_classify(const CliFlags& f) {
    const fls::ProblemFile p = fls::parse_problem_file(f.input);
    const fls::Classification c = fls::classify(p.a);
    if (f.json) {
        std::fputs(fls::classification_to_json(c).c_str(), stdout);
    } else {
        print_classification_text(c);
    }
    return 0;
}

int cmd_embed(const CliFlags& f) {
    const fls::ProblemFile p = fls::parse_problem_file(f.input);
    const fls::Embedding e = fls::build_embedding(p.a, p.b);
    std::fputs(fls::embedding_to_json(e).c_str(), stdout);
    return 0;
}

void apply_overrides(const CliFlags& f, fls::SolveOptions& opt) {
    if (f.has_method) {
        opt.method = f.method == "aor" ? fls::SolveMethod::aor : fls::SolveMethod::lu;
    }
    if (f.has_gamma) opt.aor.gamma = f.gamma;
    if (f.has_omega) opt.aor.omega = f.omega;
    if (f.has_tol) opt.aor.tol = f.tol;
    if (f.has_max_iter) opt.aor.max_iter = f.max_iter;
    if (f.check_inverse) opt.check_inverse = true;
    if (f.force) opt.force = true;
}

void print_report_text(const fls::SolutionReport& r) {
    print_classification_text(r.classification);
    std::printf("permutation:");
    for (std::size_t i : r.permutation) std::printf(" %zu", i);
    std::printf("\n");
    for (std::size_t i = 0; i < r.solution.size(); ++i) {
        const fls::FuzzyNumber& u = r.solution[i];
        std::printf("x[%zu]: lower(r) = %.12g + %.12g r, upper(r) = %.12g + %.12g r", i,
                    u.lower_intercept, u.lower_slope, u.upper_intercept, u.upper_slope);
        const fls::ValidityReport& v = r.component_validity[i];
        if (v.ok()) {
            std::printf("  [fuzzy]\n");
        } else {
            std::printf("  [NOT FUZZY:");
            for (const std::string& why : v.violations()) std::printf(" %s;", why.c_str());
            std::printf("]\n");
        }
    }
    print_yes_no("all fuzzy", r.all_fuzzy);
    if (r.s_inverse_nonneg) print_yes_no("s_inverse_nonneg", *r.s_inverse_nonneg);
    std::printf("residuals: intercept %.3e, slope %.3e\n", r.residual_intercept,
                r.residual_slope);
    std::printf("method: %s", fls::solve_method_name(r.telemetry.method));
    if (r.telemetry.method == fls::SolveMethod::aor) {
        std::printf(" (%zu iterations, residual %.3e)", r.telemetry.iterations,
                    r.telemetry.final_relative_residual);
    }
    std::printf("\n");
}

int cmd_solve(const CliFlags& f) {
    fls::ProblemFile p = fls::parse_problem_file(f.input);
    apply_overrides(f, p.options);
    if (f.dump_embedding || p.dump_embedding) {
        std::fputs(fls::embedding_to_json(fls::build_embedding(p.a, p.b)).c_str(), stdout);
    }
    const fls::SolutionReport r = fls::solve_fsle(p.a, p.b, p.options);
    if (f.json) {
        std::fputs(fls::report_to_json(r).c_str(), stdout);
    } else {
        print_report_text(r);
    }
    return r.all_fuzzy ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fuzzy linear system solver (crisp matrix, fuzzy right-hand side)"};
    app.require_subcommand(1);

    CliFlags f;
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--input", f.input, "problem file (JSON)")->required();
        cmd->add_flag("--json", f.json, "emit JSON instead of text");
    };

    CLI::App* classify = app.add_subcommand("classify", "classify the matrix");
    add_common(classify);

    CLI::App* embed = app.add_subcommand("embed", "dump the crisp embedding as JSON");
    add_common(embed);

    CLI::App* solve = app.add_subcommand("solve", "solve the system and certify the result");
    add_common(solve);
    auto* m = solve->add_option("--method", f.method, "lu or aor")
                  ->check(CLI::IsMember({"lu", "aor"}));
    auto* g = solve->add_option("--gamma", f.gamma, "AOR acceleration parameter");
    auto* w = solve->add_option("--omega", f.omega, "AOR relaxation parameter");
    auto* t = solve->add_option("--tol", f.tol, "AOR relative residual target")
                  ->check(CLI::PositiveNumber);
    auto* mi = solve->add_option("--max-iter", f.max_iter, "AOR iteration cap")
                   ->check(CLI::PositiveNumber);
    solve->add_flag("--check-inverse", f.check_inverse,
                    "also test entrywise nonnegativity of the embedded inverse");
    solve->add_flag("--dump-embedding", f.dump_embedding, "print the embedding before solving");
    solve->add_flag("--force", f.force, "solve even when the matrix class is NONE");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    f.has_method = m->count() > 0;
    f.has_gamma = g->count() > 0;
    f.has_omega = w->count() > 0;
    f.has_tol = t->count() > 0;
    f.has_max_iter = mi->count() > 0;

    try {
        if (classify->parsed()) return cmd_classify(f);
        if (embed->parsed()) return cmd_embed(f);
        return cmd_solve(f);
    } catch (const std::exception& ex) {
        std::fprintf(stderr, "error: %s\n", ex.what());
        return 2;
    }
}
