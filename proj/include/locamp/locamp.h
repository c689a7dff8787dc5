#ifndef LOCAMP_H
#define LOCAMP_H

/* C interface to the localized-amplification laboratory: experiment
   configuration, the design/simulate/verify/sweep pipeline stages, and
   verification-report access. All functions returning int use the status
   codes below and record a message retrievable via locamp_last_error. */

#ifdef __cplusplus
extern "C" {
#endif

#define LOCAMP_OK 0
#define LOCAMP_INVALID 2   /* invalid configuration, bad input, missing artifact */
#define LOCAMP_NUMERICAL 3 /* numerical failure during computation */

typedef struct locamp_config locamp_config;
typedef struct locamp_report locamp_report;

const char* locamp_version(void);

/* Message for the most recent failure on the calling thread; empty string
   when the last call succeeded. The pointer stays valid until the next
   failing call on the same thread. */
const char* locamp_last_error(void);

/* Configuration: JSON with a fixed schema (see the repository README).
   Parsing validates every field and fails with an actionable message. */
int locamp_config_load(const char* path, locamp_config** out);
int locamp_config_parse(const char* json_text, locamp_config** out);
/* Canonical serialization; free the string with locamp_string_free. */
int locamp_config_to_json(const locamp_config* cfg, char** out_text);
/* The configured output directory; free with locamp_string_free. */
int locamp_config_get_out_dir(const locamp_config* cfg, char** out_text);
void locamp_config_free(locamp_config* cfg);

int locamp_config_set_out_dir(locamp_config* cfg, const char* dir);
int locamp_config_set_seed(locamp_config* cfg, unsigned long long seed);
int locamp_config_set_stride(locamp_config* cfg, int stride);
int locamp_config_set_exact_kernel(locamp_config* cfg, int enabled);

/* Pipeline stages. Each stage persists its artifacts under the configured
   output directory and fails fast, naming the missing file, when a
   predecessor stage has not run. */
int locamp_design(const locamp_config* cfg);
int locamp_simulate(const locamp_config* cfg);
int locamp_verify(const locamp_config* cfg, locamp_report** out);
/* axis: "m" | "lambda" | "n_nodes" | "grid". Writes the sweep table under
   <out_dir>/sweep; individual failing rows are marked in the table and do
   not abort the sweep. */
int locamp_sweep(const locamp_config* cfg, const char* axis,
                 const double* values, int n_values);

/* Reports. */
int locamp_report_load(const char* path, locamp_report** out);
int locamp_report_json(const locamp_report* rep, char** out_text);
int locamp_report_summary(const locamp_report* rep, char** out_text);
/* Scalar metrics by name: eps_hat, ratio_target, superlevel_bound,
   conservation_drift, decomposition_discrepancy, M_target, r0, n_sites,
   n_steps, ratio_min, grad_sup_min, area_max, and the 0/1 flags
   pass_grad_threshold, pass_ratio, pass_superlevel, marginal_ratio. */
int locamp_report_metric(const locamp_report* rep, const char* name,
                         double* out_value);
void locamp_report_free(locamp_report* rep);

void locamp_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif
