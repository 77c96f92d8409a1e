/* C interface to the lgp library. Every function that can fail returns an
 * lgp_status; on failure a description with a witness is available from
 * lgp_last_error() on the calling thread. Strings returned through char**
 * are owned by the caller and released with lgp_string_free. */
#ifndef LGP_LGP_H
#define LGP_LGP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define LGP_API __declspec(dllexport)
#else
#define LGP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lgp_status {
  LGP_OK = 0,
  /* malformed or invariant-violating input */
  LGP_PARSE_ERROR,
  LGP_INVALID_ARGUMENT,
  LGP_NOT_ASSOCIATIVE,
  LGP_BAD_IDENTITY,
  LGP_BAD_INVERSE,
  LGP_BAD_TABLE,
  LGP_NOT_HOMOMORPHISM,
  LGP_NOT_BIPARTITE,
  LGP_FIELD_NOT_CONTAINED,
  LGP_FIELD_NOT_ABOVE,
  LGP_LATTICE_CYCLE,
  LGP_UNKNOWN_FIELD,
  LGP_UNKNOWN_VERTEX,
  LGP_DUPLICATE_ID,
  LGP_INVALID_ACTION,
  LGP_NOT_A_REFINEMENT,
  LGP_MISSING_MAP,
  LGP_NOT_FUNCTORIAL,
  LGP_BAD_COCHAIN,
  LGP_INVALID_MODULE,
  LGP_UNKNOWN_EXAMPLE,
  /* failures of a well-formed computation */
  LGP_NOT_CONNECTED,
  LGP_STATE_BOUND_EXCEEDED,
  LGP_HYPOTHESIS_VIOLATED,
  LGP_DEGENERATE_EXTENSION,
  LGP_MISMATCH,
  LGP_INTERNAL_ERROR
} lgp_status;

typedef struct lgp_group lgp_group;
typedef struct lgp_model lgp_model;
typedef struct lgp_space lgp_space;

typedef enum lgp_sha_mode { LGP_SHA_EXACT = 0, LGP_SHA_LOWER_BOUND = 1 } lgp_sha_mode;

LGP_API const char* lgp_status_name(lgp_status status);
/* 1 for malformed input, 0 for computation failures and LGP_OK. */
LGP_API int lgp_status_is_input_error(lgp_status status);
/* Message of the last failing call on this thread; "" if none. */
LGP_API const char* lgp_last_error(void);
LGP_API void lgp_string_free(char* s);
LGP_API const char* lgp_version(void);

/* ---- groups ---- */
/* {"order", "table", "names"?} or a JSON string naming a group. */
LGP_API lgp_status lgp_group_from_json(const char* json, lgp_group** out);
/* z1..zN, v4, s3, sN, dN, q8, trivial. */
LGP_API lgp_status lgp_group_named(const char* name, lgp_group** out);
LGP_API size_t lgp_group_order(const lgp_group* g);
LGP_API lgp_status lgp_group_to_json(const lgp_group* g, char** out);
LGP_API void lgp_group_free(lgp_group* g);

/* ---- models ---- */
LGP_API lgp_status lgp_model_from_json(const char* json, lgp_model** out);
/* "triangle" (constant group g) or "nonmono" (trivial group over the base
 * field, g over the residue field of the meeting point). */
LGP_API lgp_status lgp_model_example(const char* name, const lgp_group* g, lgp_model** out);
LGP_API lgp_status lgp_model_to_json(const lgp_model* m, char** out);
LGP_API void lgp_model_free(lgp_model* m);

/* Structural report for a graph or model document: connectivity, cycle
 * rank, tree and monotonic-tree status with root. */
LGP_API lgp_status lgp_graph_check(const char* json, char** report);

/* ---- double coset spaces ---- */
LGP_API lgp_status lgp_sha(const lgp_model* m, lgp_sha_mode mode, uint64_t max_states, lgp_space** out);
LGP_API size_t lgp_space_size(const lgp_space* s);
LGP_API size_t lgp_space_base_point(const lgp_space* s);
/* {"classCount", "basePoint", "representatives", "exact", "verdict"}. */
LGP_API lgp_status lgp_space_to_json(const lgp_space* s, char** out);
/* Class index of a cochain given as {"entries": {edgeId: element}}. */
LGP_API lgp_status lgp_space_class_of(const lgp_space* s, const char* cochain_json, size_t* out);
LGP_API void lgp_space_free(lgp_space* s);

/* ---- arithmetic ---- */
/* place: "inf" or a prime. */
LGP_API lgp_status lgp_hilbert_symbol(int64_t a, int64_t b, const char* place, int* out);
LGP_API lgp_status lgp_quaternion_is_split(int64_t a, int64_t b, int* out);
LGP_API lgp_status lgp_d_kappa(const int64_t* kappa, size_t kappa_len, int64_t a, int64_t b, int64_t* out);
/* {"module": {...}} -> {"invariantFactors": [...]}. */
LGP_API lgp_status lgp_tate(const char* module_json, uint64_t max_states, char** out);

/* ---- self test ---- */
typedef struct lgp_selftest_options {
  uint64_t seed;
  /* Optional {"groups": [...]} file validated before the suites; NULL for none. */
  const char* group_corpus;
} lgp_selftest_options;

/* Runs the oracle-equivalence suites. Writes a JSON report; returns LGP_OK
 * when every suite passes and LGP_MISMATCH otherwise. */
LGP_API lgp_status lgp_selftest(const lgp_selftest_options* opts, char** report);

#ifdef __cplusplus
}
#endif

#endif
