/* qw.h -- C interface to the quantum-Wajsberg algebra toolkit.
 *
 * All functions that can fail return a qw_status; 0 means success. The
 * message for the most recent failure on the calling thread is available
 * from qw_last_error(). Objects returned through out-parameters are owned
 * by the caller and released with the matching *_free function. Handles are
 * immutable once created and may be shared between threads.
 */
#ifndef QW_H
#define QW_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qw_status {
  QW_OK = 0,
  /* Malformed input: unparsable text, unknown names, violated
   * preconditions, enumeration gate exceeded. */
  QW_ERR_INPUT = 2,
  /* Two provably equivalent computations disagreed on this instance. */
  QW_ERR_FALSIFIED = 3,
  QW_ERR_NOMEM = 4,
  /* Null handle or otherwise invalid argument. */
  QW_ERR_ARG = 5,
  QW_ERR_INTERNAL = 6,
} qw_status;

typedef struct qw_algebra qw_algebra; /* a finite implication algebra */
typedef struct qw_report qw_report;   /* result of one command */

const char* qw_version(void);

/* Message for the most recent failing call on this thread; never NULL. */
const char* qw_last_error(void);

/* ---- algebras ---------------------------------------------------------- */

qw_status qw_algebra_parse(const char* text, qw_algebra** out);
qw_status qw_algebra_read_file(const char* path, qw_algebra** out);
void qw_algebra_free(qw_algebra* a);

int qw_algebra_order(const qw_algebra* a);
const char* qw_algebra_name(const qw_algebra* a);
const char* qw_algebra_element_name(const qw_algebra* a, int x);
int qw_algebra_zero(const qw_algebra* a);
int qw_algebra_one(const qw_algebra* a);
/* i -> j as an element index, or -1 on bad arguments. */
int qw_algebra_arrow(const qw_algebra* a, int x, int y);

/* Canonical text rendering; free with qw_string_free. */
qw_status qw_algebra_serialize(const qw_algebra* a, char** out_text);
void qw_string_free(char* s);

/* 1 if the algebra satisfies all quantum-Wajsberg axioms, else 0. */
int qw_algebra_is_qw(const qw_algebra* a);

/* 1, 0, or -1 when the witness permutation does not exist / sizes differ. */
int qw_algebra_isomorphic(const qw_algebra* a, const qw_algebra* b);

/* ---- commands ---------------------------------------------------------- */

qw_status qw_cmd_check(const qw_algebra* a, qw_report** out);
qw_status qw_cmd_analyze(const qw_algebra* a, qw_report** out);

/* ds_csv names the members of the deductive system, comma separated
 * ("a,1"). On success *quotient_out (optional, may be NULL) receives the
 * quotient algebra. */
qw_status qw_cmd_quotient(const qw_algebra* a, const char* ds_csv,
                          qw_report** out, qw_algebra** quotient_out);

/* limit < 0 means no limit. On success *models_out (optional) receives an
 * array of *model_count_out algebras; release with qw_algebra_list_free. */
qw_status qw_cmd_search(int order, long limit, qw_report** out,
                        qw_algebra*** models_out, size_t* model_count_out);
void qw_algebra_list_free(qw_algebra** models, size_t count);

/* ---- reports ----------------------------------------------------------- */

/* Exit code the CLI maps this report to: 0 ok, 1 property fails (check),
 * 3 falsification diagnostic. */
int qw_report_exit_code(const qw_report* r);
qw_status qw_report_render_text(const qw_report* r, char** out_text);
qw_status qw_report_render_json(const qw_report* r, char** out_text);
void qw_report_free(qw_report* r);

#ifdef __cplusplus
}
#endif

#endif /* QW_H */
