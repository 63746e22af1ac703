// Command-line front end. Talks to the library exclusively through the
// C interface in ptq/ptq.h.
//
// Exit codes: 0 all checks pass, 1 verification failure, 2 usage or parse
// error.

#include <ptq/ptq.h>

#include "CLI11.hpp"

#include <cstdint>
#include <cstdio>
#include <memory>
#include <string>

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

void print_error(int32_t status) {
    if (status == PTQ_ERR_PARSE && ptq_last_error_offset() >= 0)
        std::fprintf(stderr, "error: %s (offset %ld)\n", ptq_last_error(),
                     ptq_last_error_offset());
    else
        std::fprintf(stderr, "error: %s\n", ptq_last_error());
}

struct StringOut {
    char* s = nullptr;
    ~StringOut() { ptq_string_free(s); }
};

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, double tol, bool json) {
    ptq_report* report = nullptr;
    int32_t status = ptq_verify(suite.c_str(), seed, tol, &report);
    if (status != PTQ_OK) {
        print_error(status);
        return kExitUsage;
    }
    std::unique_ptr<ptq_report, decltype(&ptq_report_free)> guard(report, &ptq_report_free);

    int32_t pass = 0, fail = 0;
    ptq_report_summary(report, &pass, &fail);

    if (json) {
        StringOut out;
        if (ptq_report_json(report, &out.s) != PTQ_OK) {
            print_error(PTQ_ERR_INTERNAL);
            return kExitUsage;
        }
        std::printf("%s\n", out.s);
    } else {
        std::printf("suite=%s seed=%llu tol=%s version=%s\n", suite.c_str(),
                    static_cast<unsigned long long>(seed), format_double(tol).c_str(),
                    ptq_version());
        int32_t count = 0;
        ptq_report_size(report, &count);
        for (int32_t k = 0; k < count; ++k) {
            ptq_check c;
            ptq_report_check(report, k, &c);
            std::string dev = c.deviation_is_exact_zero ? "exact-zero" : format_double(c.deviation);
            std::string tol_str = c.tolerance_is_exact ? "exact" : format_double(c.tolerance);
            std::printf("[%s] %-40s deviation=%-10s tolerance=%-10s %4lld ms  (%s)\n",
                        c.pass ? "PASS" : "FAIL", c.id, dev.c_str(), tol_str.c_str(),
                        static_cast<long long>(c.runtime_ms), c.paper_ref);
        }
        std::printf("summary: %d passed, %d failed\n", pass, fail);
    }
    return fail == 0 ? kExitPass : kExitFail;
}

int cmd_eval(const std::string& expr, bool json) {
    if (json) {
        StringOut out;
        int32_t status = ptq_eval_json(expr.c_str(), &out.s);
        if (status != PTQ_OK) {
            print_error(status);
            return kExitUsage;
        }
        std::printf("%s\n", out.s);
        return kExitPass;
    }
    StringOut canonical, matrix;
    int32_t status = ptq_eval(expr.c_str(), &canonical.s, &matrix.s);
    if (status != PTQ_OK) {
        print_error(status);
        return kExitUsage;
    }
    std::printf("canonical: %s\n%s", canonical.s, matrix.s);
    return kExitPass;
}

int cmd_table(bool json) {
    ptq_table* table = nullptr;
    int32_t status = ptq_table_create(&table);
    if (status != PTQ_OK) {
        print_error(status);
        return kExitUsage;
    }
    std::unique_ptr<ptq_table, decltype(&ptq_table_free)> guard(table, &ptq_table_free);

    bool all_match = true;
    if (json) {
        StringOut out;
        ptq_table_json(table, &out.s);
        std::printf("%s\n", out.s);
        int32_t count = 0;
        ptq_table_size(table, &count);
        for (int32_t k = 0; k < count; ++k) {
            ptq_table_row row;
            ptq_table_row_get(table, k, &row);
            all_match = all_match && row.match;
        }
    } else {
        std::printf("%-5s %-14s %-10s %-10s %-14s %s\n", "row", "matrix", "antilinear",
                    "arg-signs", "expected", "match");
        int32_t count = 0;
        ptq_table_size(table, &count);
        for (int32_t k = 0; k < count; ++k) {
            ptq_table_row row;
            ptq_table_row_get(table, k, &row);
            char signs[8];
            std::snprintf(signs, sizeof signs, "(%c,%c,%c)", row.sign_t > 0 ? '+' : '-',
                          row.sign_x > 0 ? '+' : '-', row.sign_c > 0 ? '+' : '-');
            std::printf("%-5s %-14s %-10s %-10s %-14s %s\n", row.name, row.matrix,
                        row.antilinear ? "yes" : "no", signs, row.expected,
                        row.match ? "ok" : "MISMATCH");
            all_match = all_match && row.match;
        }
    }
    return all_match ? kExitPass : kExitFail;
}

int cmd_solve(const std::string& signs, const std::string& mode, bool json) {
    ptq_solutions* sols = nullptr;
    int32_t status = ptq_solve(signs.c_str(), mode.c_str(), &sols);
    if (status != PTQ_OK) {
        print_error(status);
        return kExitUsage;
    }
    std::unique_ptr<ptq_solutions, decltype(&ptq_solutions_free)> guard(sols,
                                                                        &ptq_solutions_free);
    if (json) {
        StringOut out;
        ptq_solutions_json(sols, &out.s);
        std::printf("%s\n", out.s);
        return kExitPass;
    }
    int32_t count = 0;
    ptq_solutions_size(sols, &count);
    if (count == 0) {
        std::printf("no solutions\n");
        return kExitPass;
    }
    for (int32_t k = 0; k < count; ++k) {
        const char* expr = nullptr;
        ptq_solutions_get(sols, k, &expr);
        std::printf("%s%s", k ? ", " : "", expr);
    }
    std::printf("\n");
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of discrete symmetries of the Dirac equation"};
    app.require_subcommand(1);
    app.set_version_flag("--version", ptq_version());

    std::string suite = "all";
    std::uint64_t seed = 0;
    double tol = 1e-12;
    bool verify_json = false;
    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "all, algebra, table, intertwiners, planewave, em")
        ->default_val("all");
    verify->add_option("--seed", seed, "seed for randomized checks");
    verify->add_option("--tol", tol, "tolerance for float checks");
    verify->add_flag("--json", verify_json, "emit the JSON report");

    std::string expr;
    bool eval_json = false;
    CLI::App* eval = app.add_subcommand("eval", "evaluate a gamma expression");
    eval->add_option("expr", expr, "expression, e.g. \"g0*g2*g0\"")->required();
    eval->add_flag("--json", eval_json, "emit JSON");

    bool table_json = false;
    CLI::App* table = app.add_subcommand("table", "print the transformation table");
    table->add_flag("--json", table_json, "emit JSON");

    std::string signs;
    std::string mode = "plain";
    bool solve_json = false;
    CLI::App* solve = app.add_subcommand("solve", "solve an intertwiner sign constraint");
    solve->add_option("signs", signs, "four characters over +/-, e.g. ----")->required();
    solve->add_option("mode", mode, "plain, transpose or conjugate")->default_val("plain");
    solve->add_flag("--json", solve_json, "emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (verify->parsed()) return cmd_verify(suite, seed, tol, verify_json);
    if (eval->parsed()) return cmd_eval(expr, eval_json);
    if (table->parsed()) return cmd_table(table_json);
    if (solve->parsed()) return cmd_solve(signs, mode, solve_json);
    return kExitUsage;
}
