#include "ptq/ptq.h"

#include "checks.hpp"
#include "discrete_ops.hpp"
#include "gamma_expr.hpp"
#include "version.hpp"

#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <vector>

using namespace ptq;

namespace {

thread_local std::string tl_error;
thread_local long tl_error_offset = -1;

void set_error(const std::string& msg, long offset = -1) {
    tl_error = msg;
    tl_error_offset = offset;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(::operator new(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// Runs fn inside a catch-all barrier; exceptions become status codes.
template <typename Fn>
int32_t guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const ParseError& e) {
        set_error(e.what(), static_cast<long>(e.offset));
        return PTQ_ERR_PARSE;
    } catch (const std::invalid_argument& e) {
        set_error(e.what());
        return PTQ_ERR_INVALID_ARG;
    } catch (const std::domain_error& e) {
        set_error(e.what());
        return PTQ_ERR_INVALID_ARG;
    } catch (const std::exception& e) {
        set_error(e.what());
        return PTQ_ERR_INTERNAL;
    } catch (...) {
        set_error("unknown error");
        return PTQ_ERR_INTERNAL;
    }
}

struct TableRowStorage {
    std::string name;
    std::string matrix;
    int antilinear;
    std::array<int, 3> signs;
    std::string expected;
    int match;
};

}  // namespace

struct ptq_report {
    Report report;
};

struct ptq_table {
    std::vector<TableRowStorage> rows;
    std::string json;
};

struct ptq_solutions {
    std::vector<std::string> exprs;
    std::string json;
};

extern "C" {

const char* ptq_version(void) { return kVersion; }

const char* ptq_last_error(void) { return tl_error.c_str(); }

long ptq_last_error_offset(void) { return tl_error_offset; }

void ptq_string_free(char* s) { ::operator delete(s); }

int32_t ptq_verify(const char* suite, uint64_t seed, double tolerance, ptq_report** out_report) {
    return guarded([&]() -> int32_t {
        if (!suite || !out_report) {
            set_error("null argument");
            return PTQ_ERR_INVALID_ARG;
        }
        auto* handle = new ptq_report{run_suite(suite, seed, tolerance)};
        *out_report = handle;
        return PTQ_OK;
    });
}

int32_t ptq_report_size(const ptq_report* report, int32_t* out_count) {
    if (!report || !out_count) {
        set_error("null argument");
        return PTQ_ERR_INVALID_ARG;
    }
    *out_count = static_cast<int32_t>(report->report.checks.size());
    return PTQ_OK;
}

int32_t ptq_report_check(const ptq_report* report, int32_t index, ptq_check* out_check) {
    if (!report || !out_check) {
        set_error("null argument");
        return PTQ_ERR_INVALID_ARG;
    }
    if (index < 0 || index >= static_cast<int32_t>(report->report.checks.size())) {
        set_error("check index out of range");
        return PTQ_ERR_INVALID_ARG;
    }
    const CheckRecord& c = report->report.checks[static_cast<size_t>(index)];
    out_check->id = c.id.c_str();
    out_check->paper_ref = c.paper_ref.c_str();
    out_check->pass = c.pass ? 1 : 0;
    out_check->deviation_is_exact_zero = c.deviation_exact_zero ? 1 : 0;
    out_check->deviation = c.deviation;
    out_check->tolerance_is_exact = c.tolerance_exact ? 1 : 0;
    out_check->tolerance = c.tolerance;
    out_check->runtime_ms = c.runtime_ms;
    return PTQ_OK;
}

int32_t ptq_report_summary(const ptq_report* report, int32_t* out_pass, int32_t* out_fail) {
    if (!report || !out_pass || !out_fail) {
        set_error("null argument");
        return PTQ_ERR_INVALID_ARG;
    }
    *out_pass = report->report.pass_count();
    *out_fail = report->report.fail_count();
    return PTQ_OK;
}

int32_t ptq_report_json(const ptq_report* report, char** out_json) {
    return guarded([&]() -> int32_t {
        if (!report || !out_json) {
            set_error("null argument");
            return PTQ_ERR_INVALID_ARG;
        }
        *out_json = dup_string(report->report.to_json().dump(2));
        return PTQ_OK;
    });
}

void ptq_report_free(ptq_report* report) { delete report; }

int32_t ptq_eval(const char* text, char** out_canonical, char** out_matrix) {
    return guarded([&]() -> int32_t {
        if (!text) {
            set_error("null argument");
            return PTQ_ERR_INVALID_ARG;
        }
        ExprPtr e = parse(text);
        CanonicalForm canon = canonicalize(*e);
        if (out_canonical) *out_canonical = dup_string(canon.str());
        if (out_matrix) *out_matrix = dup_string(matrix_str(eval_exact(*e)));
        return PTQ_OK;
    });
}

int32_t ptq_eval_json(const char* text, char** out_json) {
    return guarded([&]() -> int32_t {
        if (!text || !out_json) {
            set_error("null argument");
            return PTQ_ERR_INVALID_ARG;
        }
        ExprPtr e = parse(text);
        CanonicalForm canon = canonicalize(*e);
        ExactMatrix m = eval_exact(*e);
        nlohmann::ordered_json j;
        j["input"] = text;
        j["canonical"] = canon.str();
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (int r = 0; r < m.dim(); ++r) {
            nlohmann::ordered_json row = nlohmann::ordered_json::array();
            for (int c = 0; c < m.dim(); ++c) row.push_back(m.at(r, c).str());
            rows.push_back(std::move(row));
        }
        j["matrix"] = std::move(rows);
        *out_json = dup_string(j.dump(2));
        return PTQ_OK;
    });
}

int32_t ptq_table_create(ptq_table** out_table) {
    return guarded([&]() -> int32_t {
        if (!out_table) {
            set_error("null argument");
            return PTQ_ERR_INVALID_ARG;
        }
        auto handle = std::make_unique<ptq_table>();
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const TableRow& row : transformation_table()) {
            TableRowStorage s;
            s.name = row.name;
            s.matrix = row.canonical.str();
            s.antilinear = row.op.antilinear ? 1 : 0;
            s.signs = row.op.arg_signs;
            s.expected = row.expected;
            s.match = row.match ? 1 : 0;
            nlohmann::ordered_json jr;
            jr["name"] = s.name;
            jr["matrix"] = s.matrix;
            jr["antilinear"] = row.op.antilinear;
            jr["arg_signs"] = {s.signs[0], s.signs[1], s.signs[2]};
            jr["expected"] = s.expected;
            jr["match"] = row.match;
            rows.push_back(std::move(jr));
            handle->rows.push_back(std::move(s));
        }
        nlohmann::ordered_json j;
        j["rows"] = std::move(rows);
        handle->json = j.dump(2);
        *out_table = handle.release();
        return PTQ_OK;
    });
}

int32_t ptq_table_size(const ptq_table* table, int32_t* out_count) {
    if (!table || !out_count) {
        set_error("null argument");
        return PTQ_ERR_INVALID_ARG;
    }
    *out_count = static_cast<int32_t>(table->rows.size());
    return PTQ_OK;
}

int32_t ptq_table_row_get(const ptq_table* table, int32_t index, ptq_table_row* out_row) {
    if (!table || !out_row) {
        set_error("null argument");
        return PTQ_ERR_INVALID_ARG;
    }
    if (index < 0 || index >= static_cast<int32_t>(table->rows.size())) {
        set_error("row index out of range");
        return PTQ_ERR_INVALID_ARG;
    }
    const TableRowStorage& s = table->rows[static_cast<size_t>(index)];
    out_row->name = s.name.c_str();
    out_row->matrix = s.matrix.c_str();
    out_row->antilinear = s.antilinear;
    out_row->sign_t = s.signs[0];
    out_row->sign_x = s.signs[1];
    out_row->sign_c = s.signs[2];
    out_row->expected = s.expected.c_str();
    out_row->match = s.match;
    return PTQ_OK;
}

int32_t ptq_table_json(const ptq_table* table, char** out_json) {
    if (!table || !out_json) {
        set_error("null argument");
        return PTQ_ERR_INVALID_ARG;
    }
    *out_json = dup_string(table->json);
    return PTQ_OK;
}

void ptq_table_free(ptq_table* table) { delete table; }

int32_t ptq_solve(const char* signs, const char* mode, ptq_solutions** out_solutions) {
    return guarded([&]() -> int32_t {
        if (!signs || !mode || !out_solutions) {
            set_error("null argument");
            return PTQ_ERR_INVALID_ARG;
        }
        std::string signs_str(signs);
        if (signs_str.size() != 4) {
            set_error("signs must be four characters of '+' or '-'");
            return PTQ_ERR_INVALID_ARG;
        }
        IntertwinerConstraint constraint;
        for (int a = 0; a < 4; ++a) {
            if (signs_str[a] == '+')
                constraint.target_signs[a] = +1;
            else if (signs_str[a] == '-')
                constraint.target_signs[a] = -1;
            else {
                set_error("signs must be four characters of '+' or '-'");
                return PTQ_ERR_INVALID_ARG;
            }
        }
        std::string mode_str(mode);
        if (mode_str == "plain")
            constraint.mode = IntertwinerMode::plain;
        else if (mode_str == "transpose")
            constraint.mode = IntertwinerMode::transpose;
        else if (mode_str == "conjugate")
            constraint.mode = IntertwinerMode::conjugate;
        else {
            set_error("mode must be plain, transpose or conjugate");
            return PTQ_ERR_INVALID_ARG;
        }

        auto handle = std::make_unique<ptq_solutions>();
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const IntertwinerSolution& s : solve_intertwiner(constraint)) {
            handle->exprs.push_back(s.str());
            arr.push_back(handle->exprs.back());
        }
        nlohmann::ordered_json j;
        j["signs"] = signs_str;
        j["mode"] = mode_str;
        j["solutions"] = std::move(arr);
        handle->json = j.dump(2);
        *out_solutions = handle.release();
        return PTQ_OK;
    });
}

int32_t ptq_solutions_size(const ptq_solutions* solutions, int32_t* out_count) {
    if (!solutions || !out_count) {
        set_error("null argument");
        return PTQ_ERR_INVALID_ARG;
    }
    *out_count = static_cast<int32_t>(solutions->exprs.size());
    return PTQ_OK;
}

int32_t ptq_solutions_get(const ptq_solutions* solutions, int32_t index, const char** out_expr) {
    if (!solutions || !out_expr) {
        set_error("null argument");
        return PTQ_ERR_INVALID_ARG;
    }
    if (index < 0 || index >= static_cast<int32_t>(solutions->exprs.size())) {
        set_error("solution index out of range");
        return PTQ_ERR_INVALID_ARG;
    }
    *out_expr = solutions->exprs[static_cast<size_t>(index)].c_str();
    return PTQ_OK;
}

int32_t ptq_solutions_json(const ptq_solutions* solutions, char** out_json) {
    if (!solutions || !out_json) {
        set_error("null argument");
        return PTQ_ERR_INVALID_ARG;
    }
    *out_json = dup_string(solutions->json);
    return PTQ_OK;
}

void ptq_solutions_free(ptq_solutions* solutions) { delete solutions; }

}  // extern "C"
