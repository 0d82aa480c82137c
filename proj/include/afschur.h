/* C interface to the affine Schur algebra engine.
 *
 * An engine is created for one fixed period n >= 2 and degree r >= 0 and
 * owns the normal-form cache for that algebra.  All payloads cross the
 * boundary as JSON strings in the formats documented in the README;
 * returned strings are heap-allocated and must be released with
 * afs_string_free.  Engines are not thread-safe; use one per thread.
 */
#ifndef AFSCHUR_H
#define AFSCHUR_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct afs_engine afs_engine;

typedef enum afs_status {
  AFS_OK = 0,
  AFS_ERR_BAD_ARGUMENT = 1, /* null pointers, invalid n/r or bounds */
  AFS_ERR_PARSE = 2,        /* malformed or self-inconsistent input */
  AFS_ERR_MISMATCH = 3,     /* input (n, r) differs from the engine's */
  AFS_ERR_INTERNAL = 4
} afs_status;

afs_status afs_engine_create(int n, long long r, afs_engine** out_engine);
void afs_engine_destroy(afs_engine* engine);

/* Message for the most recent failing call on this engine; owned by the
 * engine and valid until its next call. */
const char* afs_engine_last_error(const afs_engine* engine);

void afs_string_free(char* str);

/* Evaluates a generator word (JSON array of tokens such as
 * ["e1","f1","k1,0","E1,3","h2"], or {"word": [...]}) as an element:
 * the word applied right-to-left to the identity. */
afs_status afs_multiply_word(afs_engine* engine, const char* word_json,
                             char** out_element_json);

/* Exact product of two elements through the PBW normal form. */
afs_status afs_multiply_elements(afs_engine* engine, const char* x_json,
                                 const char* y_json, char** out_element_json);

/* PBW coordinates of an element, plus a round-trip check that expanding
 * the coordinates reproduces the input. */
afs_status afs_normal_form(afs_engine* engine, const char* element_json,
                           char** out_coordinates_json, int* out_round_trip_ok);

/* Sweeps the defining relations; band < 0 selects the default 2n.
 * inject_fault != 0 corrupts one product (testing hook; the report must
 * then record a failure). */
afs_status afs_verify_presentation(afs_engine* engine, int m_max, int t_max,
                                   long long band, int inject_fault,
                                   char** out_report_json, int* out_all_passed);

/* Checks the loop-generator family against its closed form. */
afs_status afs_closed_form_check(afs_engine* engine, int m_max, int t_max,
                                 char** out_report_json, int* out_all_equal);

/* Canonical human-readable rendering of an element. */
afs_status afs_element_to_text(afs_engine* engine, const char* element_json,
                               char** out_text);

#ifdef __cplusplus
}
#endif

#endif /* AFSCHUR_H */
