/*
 * Copyright 2026 The painworth Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef PAINWORTH_PAINWORTH_H_
#define PAINWORTH_PAINWORTH_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define PW_API
#else
#define PW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/*
 * C interface to the painworth valuation library.
 *
 * Amounts and ratios cross the boundary as dot-decimal strings ("50.00",
 * "0.8"), never as floating point. Every function returning pw_status leaves
 * a description of the last failure in pw_last_error() (thread local).
 * Strings returned through `char **out` are owned by the caller and released
 * with pw_string_free().
 */

typedef enum pw_status {
  PW_OK = 0,
  PW_E_INVALID_ARGUMENT = 1, /* malformed parameter or option */
  PW_E_VALIDATION = 2,       /* portfolio input failed to parse or validate */
  PW_E_NOT_FOUND = 3,
  PW_E_DOMAIN = 4,           /* unknown path, value outside a field's domain, unreachable target */
  PW_E_CONFLICT = 5,         /* stale version */
  PW_E_IO = 6,
  PW_E_INTERNAL = 7
} pw_status;

typedef enum pw_portfolio_format { PW_FORMAT_JSON = 0, PW_FORMAT_CSV = 1 } pw_portfolio_format;

typedef enum pw_gate_action {
  PW_ADVANCE_STAGE = 0,
  PW_REDESIGN_FOR_VALUE = 1,
  PW_REDESIGN_FOR_COST = 2,
  PW_DROP = 3
} pw_gate_action;

typedef struct pw_portfolio pw_portfolio;
typedef struct pw_server pw_server;

/* Cost model override. NULL / 0 fields fall back to the portfolio's cost
 * model, then to zero cost and one amortization year. */
typedef struct pw_cost_options {
  const char *development;
  const char *annual_operation;
  int64_t amortization_years;
} pw_cost_options;

typedef struct pw_eval_options {
  const char *revenue_share; /* NULL keeps the portfolio pricing */
  const char *ceiling_basis; /* NULL or "all", "customer-only" */
  pw_cost_options cost;
} pw_eval_options;

typedef struct pw_gate_options {
  const char *value_target; /* required */
  const char *cost_budget;  /* required */
  const char *min_margin;   /* NULL means 0 */
  pw_cost_options cost;
} pw_gate_options;

PW_API const char *pw_version(void);

/* Message for the last failure on this thread; validation failures list one
 * issue per line. Empty after a success. */
PW_API const char *pw_last_error(void);
/* Error taxonomy name of the last failure, e.g. "OmegaOutOfRange". */
PW_API const char *pw_last_error_code(void);

PW_API void pw_string_free(char *s);

PW_API pw_status pw_portfolio_parse(const char *bytes, size_t len, pw_portfolio_format format,
                                    pw_portfolio **out);
PW_API pw_status pw_demo_portfolio(pw_portfolio **out);
PW_API void pw_portfolio_free(pw_portfolio *p);
/* kind: "operational" or "structural". */
PW_API pw_status pw_portfolio_filter_kind(const pw_portfolio *p, const char *kind, pw_portfolio **out);
PW_API pw_status pw_portfolio_serialize(const pw_portfolio *p, pw_portfolio_format format, char **out);
PW_API pw_status pw_portfolio_id(const pw_portfolio *p, char **out);

/* Canonical JSON of the bundled demo portfolio. */
PW_API pw_status pw_demo_fixture(char **out);

/* format: "table", "markdown", "csv" or "json". options may be NULL. */
PW_API pw_status pw_evaluate(const pw_portfolio *p, const pw_eval_options *options, const char *format,
                             char **out);

/* format: "text" or "json". */
PW_API pw_status pw_gate(const pw_portfolio *p, const pw_gate_options *options, const char *format,
                         pw_gate_action *action, char **out);

/* Sensitivity. path uses pain(<id>).line(<agent>).{frequency|impact|alleviation};
 * format: "csv" or "json". */
PW_API pw_status pw_sweep(const pw_portfolio *p, const char *path, const char *from, const char *to,
                          int steps, const char *format, char **out);
/* cost NULL uses the portfolio's annualized cost. */
PW_API pw_status pw_breakeven(const pw_portfolio *p, const char *cost, const char *format, char **out);
PW_API pw_status pw_tornado(const pw_portfolio *p, const char *rel, const char *format, char **out);

/* Alleviation primitives; results are decimal strings. */
PW_API pw_status pw_omega_from_confusion(int64_t tp, int64_t fp, int64_t fn, int64_t tn, char **out);
PW_API pw_status pw_omega_from_investment(const char *omega_max, const char *kappa, const char *spend,
                                          char **out);
PW_API pw_status pw_required_investment(const char *omega_max, const char *kappa, const char *target,
                                        char **out);

/* HTTP service. port 0 picks a free port; the server runs on background
 * threads until pw_server_stop(), which also frees it. */
PW_API pw_status pw_server_start(const char *data_dir, const char *host, int port, pw_server **out);
PW_API int pw_server_port(const pw_server *s);
PW_API void pw_server_stop(pw_server *s);

#ifdef __cplusplus
}
#endif

#endif /* PAINWORTH_PAINWORTH_H_ */
