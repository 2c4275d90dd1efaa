#ifndef GOLODLAB_H
#define GOLODLAB_H

#include <stddef.h>

#if defined(_WIN32)
#define GL_API __declspec(dllexport)
#else
#define GL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes; they double as CLI exit codes. */
enum {
  GL_OK = 0,
  GL_INPUT_ERROR = 1,
  GL_CAP_EXCEEDED = 2,
  GL_INTERNAL_ERROR = 3
};

typedef struct gl_ideal gl_ideal;
typedef struct gl_report gl_report;

typedef struct gl_config {
  int N;              /* Poincare / Serre truncation, default 8 */
  int pmax;           /* longest Massey tuple, default 4 */
  int D;              /* internal degree cap, 0 = 3 * maxdeg * N */
  int tmax;           /* powers checked by gl_minors, default 2 */
  int orders;         /* random lex orders sampled by gl_minors, default 8 */
  unsigned seed;      /* seed for those orders, default 1 */
  const char* weights;  /* "1,2,3" for gl_homogenize, may be NULL */
  const char* coloring; /* "x11,x12 | x21,x22" for gl_rainbow, may be NULL */
} gl_config;

GL_API void gl_config_default(gl_config* cfg);

/* Message of the last failure on this thread ("" if none). */
GL_API const char* gl_last_error(void);
/* 1-based line/column of the last parse error on this thread, 0 otherwise. */
GL_API int gl_last_error_line(void);
GL_API int gl_last_error_column(void);

/* Fixture grammar, or an inline list such as "xy,yz". */
GL_API int gl_ideal_parse(const char* text, gl_ideal** out);
/* Overrides the order line ("lex x1>x2", "grevlex", "diagonal 2x3", ...). */
GL_API int gl_ideal_set_order(gl_ideal* ideal, const char* order);
/* Normalized fixture text; free with gl_string_free. */
GL_API int gl_ideal_text(const gl_ideal* ideal, char** out);
GL_API void gl_ideal_free(gl_ideal* ideal);
GL_API void gl_string_free(char* s);

/* Every analysis fills a report holding a plain-text and a JSON rendering.
   A report can come back together with a nonzero status (a truncated
   certificate, a table that fails verification); free it either way. */
GL_API int gl_groebner(const gl_ideal* ideal, gl_report** out);
GL_API int gl_initial(const gl_ideal* ideal, gl_report** out);
GL_API int gl_homogenize(const gl_ideal* ideal, const gl_config* cfg, gl_report** out);
GL_API int gl_betti(const gl_ideal* ideal, gl_report** out);
GL_API int gl_fiber_invariant(const gl_ideal* ideal, gl_report** out);
GL_API int gl_rainbow(const gl_ideal* ideal, const gl_config* cfg, gl_report** out);
GL_API int gl_massey(const gl_ideal* ideal, const gl_config* cfg, gl_report** out);
GL_API int gl_golod(const gl_ideal* ideal, const gl_config* cfg, gl_report** out);
/* shape "2x3" or mask "111/011" (mask wins when both are given). */
GL_API int gl_minors(const char* shape, const char* mask, const gl_config* cfg, gl_report** out);
/* Loads a Massey table JSON and re-verifies every tuple. */
GL_API int gl_massey_verify(const char* json, gl_report** out);

/* Dispatch by command name: gb, initial, homogenize, betti, fiber-inv,
   rainbow, massey, golod. */
GL_API int gl_run(const char* command, const gl_ideal* ideal, const gl_config* cfg, gl_report** out);

GL_API const char* gl_report_text(const gl_report* r);
GL_API const char* gl_report_json(const gl_report* r);
/* Status the analysis itself ends with, e.g. GL_CAP_EXCEEDED for a truncated certificate. */
GL_API int gl_report_status(const gl_report* r);
GL_API void gl_report_free(gl_report* r);

#ifdef __cplusplus
}
#endif

#endif
