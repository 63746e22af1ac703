/*
 * ptq - exact gamma-matrix algebra and discrete-symmetry verification.
 *
 * C interface of the shared library. All functions return a status code
 * from the PTQ_* list below; results come back through out-parameters.
 * Objects are opaque handles released with their matching _free function.
 * Strings returned through char** are heap-allocated and released with
 * ptq_string_free; strings returned as const char* inside view structs are
 * owned by the handle they came from and stay valid until it is freed.
 *
 * On failure, ptq_last_error() returns a thread-local message and, for
 * parse errors, ptq_last_error_offset() the byte offset into the input.
 */

#ifndef PTQ_H
#define PTQ_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define PTQ_OK 0
#define PTQ_ERR_INVALID_ARG 1 /* bad parameter, unknown name, domain violation */
#define PTQ_ERR_PARSE 2       /* expression failed to tokenize or parse */
#define PTQ_ERR_INTERNAL 3    /* unexpected failure; see ptq_last_error() */

const char* ptq_version(void);

const char* ptq_last_error(void);
/* Byte offset of the last parse error in this thread, or -1. */
long ptq_last_error_offset(void);

void ptq_string_free(char* s);

/* ---- verification suites ------------------------------------------------ */

typedef struct ptq_report ptq_report;

/* suite: "all", "algebra", "table", "intertwiners", "planewave" or "em". */
int32_t ptq_verify(const char* suite, uint64_t seed, double tolerance, ptq_report** out_report);

typedef struct {
    const char* id;
    const char* paper_ref;
    int32_t pass;                    /* 1 pass, 0 fail */
    int32_t deviation_is_exact_zero; /* deviation field unused when set */
    double deviation;
    int32_t tolerance_is_exact;      /* tolerance field unused when set */
    double tolerance;
    int64_t runtime_ms;
} ptq_check;

int32_t ptq_report_size(const ptq_report* report, int32_t* out_count);
int32_t ptq_report_check(const ptq_report* report, int32_t index, ptq_check* out_check);
int32_t ptq_report_summary(const ptq_report* report, int32_t* out_pass, int32_t* out_fail);
int32_t ptq_report_json(const ptq_report* report, char** out_json);
void ptq_report_free(ptq_report* report);

/* ---- expression evaluation ---------------------------------------------- */

/* Canonical form plus the exact matrix (rows of exact rational entries,
 * one row per line). Either output pointer may be NULL if not wanted. */
int32_t ptq_eval(const char* text, char** out_canonical, char** out_matrix);
int32_t ptq_eval_json(const char* text, char** out_json);

/* ---- transformation table ----------------------------------------------- */

typedef struct ptq_table ptq_table;

typedef struct {
    const char* name;     /* P, T, PT, Q, PQ, TQ, PTQ */
    const char* matrix;   /* canonical expression string */
    int32_t antilinear;
    int32_t sign_t, sign_x, sign_c; /* +1 / -1 */
    const char* expected; /* transcribed combined constant */
    int32_t match;
} ptq_table_row;

int32_t ptq_table_create(ptq_table** out_table);
int32_t ptq_table_size(const ptq_table* table, int32_t* out_count);
int32_t ptq_table_row_get(const ptq_table* table, int32_t index, ptq_table_row* out_row);
int32_t ptq_table_json(const ptq_table* table, char** out_json);
void ptq_table_free(ptq_table* table);

/* ---- intertwiner solver -------------------------------------------------- */

typedef struct ptq_solutions ptq_solutions;

/* signs: four characters over '+'/'-', one per generator.
 * mode: "plain", "transpose" or "conjugate". */
int32_t ptq_solve(const char* signs, const char* mode, ptq_solutions** out_solutions);
int32_t ptq_solutions_size(const ptq_solutions* solutions, int32_t* out_count);
int32_t ptq_solutions_get(const ptq_solutions* solutions, int32_t index, const char** out_expr);
int32_t ptq_solutions_json(const ptq_solutions* solutions, char** out_json);
void ptq_solutions_free(ptq_solutions* solutions);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* PTQ_H */
