#ifndef EXACTQ_EXACTQ_H
#define EXACTQ_EXACTQ_H

#include <stdint.h>

#if defined(_WIN32)
#  if defined(EXACTQ_BUILDING_LIBRARY)
#    define EXQ_API __declspec(dllexport)
#  else
#    define EXQ_API __declspec(dllimport)
#  endif
#else
#  define EXQ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum exq_status {
  EXQ_OK = 0,
  EXQ_ERR_PARSE = 1,            /* malformed function text or JSON document */
  EXQ_ERR_INVALID_ARGUMENT = 2, /* null handle, unknown name, bad value */
  EXQ_ERR_OUT_OF_RANGE = 3,     /* arity or bound beyond what the operation supports */
  EXQ_ERR_NOT_SIMULATABLE = 4,  /* program contains axiom leaves */
  EXQ_ERR_VERIFICATION = 5,     /* a certificate failed its checks */
  EXQ_ERR_INTERNAL = 6
} exq_status;

typedef struct exq_function exq_function;       /* truth table */
typedef struct exq_program exq_program;         /* query program with its arity */
typedef struct exq_certificate exq_certificate; /* verified or loaded certificate */

/* Message for the last failing call on this thread; never null. */
EXQ_API const char* exq_last_error(void);
EXQ_API const char* exq_version(void);
EXQ_API const char* exq_status_name(exq_status status);

/* Strings returned through char** out-parameters are owned by the caller. */
EXQ_API void exq_string_free(char* text);

/* Truth tables. Text forms: bin:..., hex:..., profile:b0,...,bn, formula:... */
EXQ_API exq_status exq_function_parse(const char* text, exq_function** out);
EXQ_API exq_status exq_function_from_word(unsigned arity, uint64_t word, exq_function** out);
EXQ_API void exq_function_free(exq_function* f);
EXQ_API unsigned exq_function_arity(const exq_function* f);
EXQ_API exq_status exq_function_get(const exq_function* f, uint64_t input, int* value);
EXQ_API exq_status exq_function_format(const exq_function* f, char** out);
/* JSON object: arity, popcount, profile, monotone, readOnce, degree, depth, NPN form, ... */
EXQ_API exq_status exq_analyze(const exq_function* f, char** json_out);

/* Synthesis. The returned certificate has already passed verification;
   EXQ_ERR_VERIFICATION is returned (and nothing allocated) otherwise. */
EXQ_API exq_status exq_synthesize(const exq_function* f, exq_certificate** out);
EXQ_API exq_status exq_certificate_from_json(const char* text, exq_certificate** out);
EXQ_API exq_status exq_certificate_to_json(const exq_certificate* c, char** out);
EXQ_API void exq_certificate_free(exq_certificate* c);
EXQ_API unsigned exq_certificate_queries(const exq_certificate* c);
/* Level name: FullySimulated, CountCertified or ClassicalOnly. */
EXQ_API const char* exq_certificate_level(const exq_certificate* c);
/* *ok is 1 iff every check passed; json_out (optional) lists the problems. */
EXQ_API exq_status exq_certificate_verify(const exq_certificate* c, int* ok, char** json_out);
EXQ_API exq_status exq_certificate_function(const exq_certificate* c, exq_function** out);
EXQ_API exq_status exq_certificate_program(const exq_certificate* c, exq_program** out);

/* Programs. from_json accepts a program document or a certificate document. */
EXQ_API exq_status exq_program_from_json(const char* text, exq_program** out);
EXQ_API exq_status exq_program_to_json(const exq_program* p, char** out);
/* name: "parity" or "nae"; n variables. */
EXQ_API exq_status exq_program_builtin(const char* name, unsigned n, exq_program** out);
EXQ_API void exq_program_free(exq_program* p);
EXQ_API unsigned exq_program_queries(const exq_program* p);
EXQ_API unsigned exq_program_arity(const exq_program* p);
/* Runs p on every input of f. Axiom leaves give EXQ_ERR_NOT_SIMULATABLE with
   their locations in exq_last_error(). */
EXQ_API exq_status exq_simulate(const exq_program* p, const exq_function* f, int* exact, char** json_out);

/* Verification suites. suites: comma-separated ids or "all"; max_n < 0 keeps
   each suite's default. *all_ok is 1 iff no suite recorded a failure. */
/* {"all": [...], "default": [...], "suites": [{id, defaultMaxN, boundMaxN, inDefault}]} */
EXQ_API exq_status exq_suite_ids(char** json_out);
EXQ_API exq_status exq_run_suites(const char* suites, int max_n, uint64_t seed, unsigned jobs, int* all_ok,
                                  char** json_out);

#ifdef __cplusplus
}
#endif

#endif
