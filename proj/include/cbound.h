/*
 * cbound: collapse-model noise bounds and torsion-balance budget forecasts.
 *
 * C interface over the C++ core. All objects are opaque handles created and
 * destroyed here; every fallible call returns cb_status and leaves a
 * human-readable message in cb_last_error() on failure. Some evaluations
 * succeed outside their comfortable regime; they then set cb_last_warning().
 * Handles are not thread-safe individually; distinct handles may be used
 * from distinct threads concurrently. Error/warning strings are
 * thread-local.
 */
#ifndef CBOUND_H
#define CBOUND_H

#include <stddef.h>
#include <stdint.h>

#if defined(CB_BUILD_SHARED)
#define CB_API __attribute__((visibility("default")))
#else
#define CB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cb_status {
  CB_OK = 0,
  CB_E_INVALID_ARGUMENT = 1,
  CB_E_DOMAIN = 2,          /* inputs jointly unusable (e.g. out of band) */
  CB_E_REGIME = 3,          /* model evaluated where it is meaningless */
  CB_E_PARSE = 4,           /* malformed config or CSV */
  CB_E_IO = 5,              /* filesystem failure */
  CB_E_NUMERIC = 6,         /* computation produced no usable result */
  CB_E_MISSING_CONTEXT = 7, /* operation lacked required context */
  CB_E_UNKNOWN = 8
} cb_status;

typedef enum cb_spectrum_kind {
  CB_KIND_ACCEL_PSD = 0,        /* (m/s^2)^2 / Hz */
  CB_KIND_FORCE_PSD = 1,        /* N^2 / Hz */
  CB_KIND_TORQUE_PSD = 2,       /* (N m)^2 / Hz */
  CB_KIND_DISPLACEMENT_PSD = 3, /* m^2 / Hz */
  CB_KIND_ANGLE_PSD = 4         /* rad^2 / Hz */
} cb_spectrum_kind;

typedef struct cb_mass cb_mass;         /* cubic test mass */
typedef struct cb_config cb_config;     /* resolved configuration document */
typedef struct cb_device cb_device;     /* dual-torsion-balance description */
typedef struct cb_spectrum cb_spectrum; /* one-sided PSD on a frequency grid */
typedef struct cb_curve cb_curve;       /* lambda_max(r) exclusion curve */
typedef struct cb_budget cb_budget;     /* per-source noise budget */
typedef struct cb_run cb_run;           /* simulated or ingested time series */
typedef struct cb_runs cb_runs;         /* noise-level-vs-time records */

/* Metadata stamped into artifact headers. Strings are borrowed for the
 * duration of the call. config_hash/prng may be NULL. */
typedef struct cb_artifact_meta {
  const char* config_hash; /* hex digest of the resolved inputs */
  int has_seed;
  uint64_t seed;
  const char* prng; /* NULL selects the library's PRNG id */
} cb_artifact_meta;

/* ---- library information ------------------------------------------- */

CB_API const char* cb_version(void);
CB_API const char* cb_constants_set(void); /* e.g. "codata2018" */
CB_API const char* cb_prng_id(void);

/* Fundamental constants by name: "hbar", "G", "k_B", "c", "amu",
 * "m_proton". */
CB_API cb_status cb_constant(const char* name, double* value);

/* Last error/warning for the calling thread; empty string when none.
 * Reset by every API call. */
CB_API const char* cb_last_error(void);
CB_API const char* cb_last_warning(void);

/* FNV-1a 64 of a byte range as a 16-char hex string (for composing artifact
 * input digests). buf must hold at least 17 bytes. */
CB_API cb_status cb_hash_hex(const void* data, size_t size, char* buf,
                             size_t buflen);

/* ---- test mass ------------------------------------------------------ */

/* Cube of the given mass [kg], density [kg/m^3], side [m] and lattice
 * constant [m]. Warns when mass deviates from density*side^3 by >25%. */
CB_API cb_status cb_mass_create(double mass_kg, double density_kg_m3,
                                double side_m, double lattice_m, cb_mass** out);

/* Built-in masses: "table1" (1 kg reference cube), "lpf" (space-
 * interferometry test mass). */
CB_API cb_status cb_mass_profile(const char* name, cb_mass** out);

CB_API void cb_mass_free(cb_mass* m);

/* Fields: "mass", "density", "side", "lattice". */
CB_API cb_status cb_mass_get(const cb_mass* m, const char* field, double* value);

/* ---- configuration --------------------------------------------------- */

CB_API cb_status cb_config_load(const char* path, cb_config** out);
CB_API cb_status cb_config_profile(const char* name, cb_config** out);
CB_API void cb_config_free(cb_config* c);

CB_API cb_status cb_config_mass(const cb_config* c, cb_mass** out);

/* Fails with CB_E_MISSING_CONTEXT when the configuration describes no
 * device (e.g. profile "lpf"). */
CB_API cb_status cb_config_device(const cb_config* c, cb_device** out);

/* Reference mass m0 [kg] used by the localization model. */
CB_API cb_status cb_config_m0(const cb_config* c, double* m0_kg);

/* Hex digest of the resolved configuration; buf must hold >= 17 bytes. */
CB_API cb_status cb_config_hash(const cb_config* c, char* buf, size_t buflen);

CB_API void cb_device_free(cb_device* d);

/* Scalar fields: "arm_length", "omega_m", "quality", "temperature",
 * "temperature_asd", "pressure", "laser_power", "wavelength", "rin_1mhz",
 * "freq_noise_1mhz", "alpha_e", "cmrr_seismic", "cm_residual_thermo",
 * "rin_suppression", "arm_mismatch", "gas_molecule_mass", "shot_noise_asd",
 * plus derived "effective_mass", "lever_arm", "moment_of_inertia". */
CB_API cb_status cb_device_get(const cb_device* d, const char* field,
                               double* value);

/* One noise source of the device evaluated at a single frequency.
 * Components: "suspension_thermal", "gas_damping",
 * "laser_radiation_pressure" (raw, before common-mode suppression),
 * "laser_frequency_sensing", "thermoelastic", "seismic_rotation", "sql".
 * view: 0 = force PSD [N^2/Hz], 1 = displacement PSD [m^2/Hz]. */
CB_API cb_status cb_device_noise(const cb_device* d, const char* component,
                                 double f_hz, int view, double* psd);

/* ---- localization models -------------------------------------------- */

/* m0_kg <= 0 selects the default (atomic mass unit) in all functions
 * taking a reference mass. */

/* Dimensionless compact-limit geometry factor; warns for r > side/10,
 * fails with CB_E_REGIME for r >= side. */
CB_API cb_status cb_csl_geometry_factor(const cb_mass* m, double r_m,
                                        double m0_kg, double* alpha);

/* White one-sided force PSD [N^2/Hz] of the localization noise. */
CB_API cb_status cb_csl_force_psd(const cb_mass* m, double lambda_per_s,
                                  double r_m, double m0_kg, double* psd);

/* White one-sided force PSD [N^2/Hz] of gravitationally induced
 * decoherence noise at smearing length sigma. */
CB_API cb_status cb_dp_force_psd(const cb_mass* m, double sigma_m, double* psd);

/* Largest correlation length the compact-limit inversion is trusted at. */
CB_API cb_status cb_csl_r_valid_max(const cb_mass* m, double* r_m);

/* Maximum collapse rate [1/s] compatible with a white differential
 * acceleration PSD level [m^2 s^-4 / Hz] at correlation length r. */
CB_API cb_status cb_csl_lambda_bound(const cb_mass* m, double sa_level,
                                     double r_m, double m0_kg, double* lambda);

/* Minimum smearing length [m] compatible with the same PSD level. */
CB_API cb_status cb_dp_sigma_bound(const cb_mass* m, double sa_level,
                                   double* sigma);

/* ---- exclusion curves ------------------------------------------------ */

/* lambda_max(r) over a log grid of n_points in [r_min, r_max]; grid points
 * above the validity cutoff are dropped (see cb_curve_dropped). */
CB_API cb_status cb_exclusion_curve(const cb_mass* m, double sa_level,
                                    double r_min, double r_max, size_t n_points,
                                    const char* source_label, double m0_kg,
                                    cb_curve** out);

CB_API void cb_curve_free(cb_curve* c);
CB_API size_t cb_curve_size(const cb_curve* c);
CB_API cb_status cb_curve_point(const cb_curve* c, size_t i, double* r_m,
                                double* lambda_per_s);
CB_API cb_status cb_curve_r_valid_max(const cb_curve* c, double* r_m);
CB_API size_t cb_curve_dropped(const cb_curve* c);
CB_API const char* cb_curve_source(const cb_curve* c);

/* 1 when (lambda, r) lies strictly above the curve, 0 otherwise (points on
 * the boundary stay allowed). r must lie inside the curve's range. */
CB_API cb_status cb_curve_excludes(const cb_curve* c, double lambda_per_s,
                                   double r_m, int* excluded);

CB_API cb_status cb_curve_write_csv(const cb_curve* c, const char* path,
                                    const cb_artifact_meta* meta);

/* Literature reference points for exclusion plots. */
CB_API size_t cb_benchmark_count(void);
CB_API cb_status cb_benchmark_get(size_t i, const char** name,
                                  double* lambda_per_s, double* r_m,
                                  double* lambda_log10_halfwidth);

/* ---- noise budget ----------------------------------------------------- */

/* Per-source budget on a log grid of n_points in [f_min, f_max] Hz. */
CB_API cb_status cb_budget_build(const cb_device* d, double f_min, double f_max,
                                 size_t n_points, cb_budget** out);
CB_API void cb_budget_free(cb_budget* b);

CB_API size_t cb_budget_points(const cb_budget* b);
CB_API size_t cb_budget_component_count(const cb_budget* b);
CB_API const char* cb_budget_component_name(const cb_budget* b, size_t comp);
CB_API cb_status cb_budget_frequency(const cb_budget* b, size_t i, double* f_hz);

/* view: 0 = force PSD [N^2/Hz], 1 = displacement PSD [m^2/Hz]. */
CB_API cb_status cb_budget_value(const cb_budget* b, size_t comp, size_t i,
                                 int view, double* psd);

/* calibrated_residual != 0 selects the total with the calibratable
 * components (suspension thermal, gas damping) removed. */
CB_API cb_status cb_budget_total(const cb_budget* b, size_t i, int view,
                                 int calibrated_residual, double* psd);

CB_API size_t cb_budget_note_count(const cb_budget* b);
CB_API const char* cb_budget_note(const cb_budget* b, size_t i);

CB_API cb_status cb_budget_write_csv(const cb_budget* b, const char* path,
                                     const cb_artifact_meta* meta);

/* ---- spectra ---------------------------------------------------------- */

/* Frequencies must be positive and strictly increasing; values are
 * one-sided PSDs, nonnegative. Arrays are copied. */
CB_API cb_status cb_spectrum_create(const double* freqs_hz, const double* psd,
                                    size_t n, cb_spectrum_kind kind,
                                    cb_spectrum** out);
CB_API void cb_spectrum_free(cb_spectrum* s);
CB_API size_t cb_spectrum_size(const cb_spectrum* s);
CB_API cb_status cb_spectrum_get_kind(const cb_spectrum* s,
                                      cb_spectrum_kind* kind);
CB_API cb_status cb_spectrum_point(const cb_spectrum* s, size_t i,
                                   double* f_hz, double* psd);

/* Conversion context; set only the has_* groups the path needs. mass_kg is
 * the per-body mass of the two-body differential readout. */
typedef struct cb_convert_context {
  int has_mass;
  double mass_kg;
  int has_lever_arm;
  double lever_arm_m;
  int has_oscillator;
  double osc_m_eff_kg;
  double osc_omega_m_rad_s;
  double osc_quality;
} cb_convert_context;

CB_API cb_status cb_spectrum_convert(const cb_spectrum* s,
                                     cb_spectrum_kind target,
                                     const cb_convert_context* ctx,
                                     cb_spectrum** out);

CB_API cb_status cb_spectrum_read_csv(const char* path, cb_spectrum** out);
CB_API cb_status cb_spectrum_write_csv(const cb_spectrum* s, const char* path,
                                       const cb_artifact_meta* meta);

/* ---- time-domain simulation and estimation ---------------------------- */

/* Langevin oscillator driven by white force noise of one-sided PSD
 * force_psd [N^2/Hz]. Requires dt*omega_m < 0.1 and n >= 16384;
 * bit-reproducible for a given seed. */
CB_API cb_status cb_simulate(double m_eff_kg, double omega_m_rad_s,
                             double quality, double force_psd, double dt_s,
                             uint64_t n, uint64_t seed, cb_run** out);

CB_API void cb_run_free(cb_run* r);
CB_API size_t cb_run_size(const cb_run* r);
CB_API cb_status cb_run_dt(const cb_run* r, double* dt_s);
CB_API cb_status cb_run_sample(const cb_run* r, size_t i, double* t_s,
                               double* position_m, double* force_n);

/* Zero-copy views, valid until the run is freed. Forces may be absent for
 * ingested files (*data = NULL, *n = 0). */
CB_API cb_status cb_run_positions(const cb_run* r, const double** data,
                                  size_t* n);
CB_API cb_status cb_run_forces(const cb_run* r, const double** data, size_t* n);

CB_API cb_status cb_run_write_csv(const cb_run* r, const char* path,
                                  const cb_artifact_meta* meta);
CB_API cb_status cb_run_read_csv(const char* path, cb_run** out);

/* One-sided Welch PSD (Hann window) of n samples at spacing dt. The caller
 * declares what the samples measure via `kind`. */
CB_API cb_status cb_welch(const double* x, size_t n, double dt_s,
                          size_t segment_len, double overlap,
                          cb_spectrum_kind kind, cb_spectrum** out);

/* ---- spectral fits ----------------------------------------------------- */

/* Nonnegative WLS of S(f) = white + colored * f^exponent. exponent is fixed
 * at -1 unless free_exponent != 0 (diagnostic scan). residual is the RMS
 * relative misfit. Requires a decade of span. */
CB_API cb_status cb_decompose(const cb_spectrum* s, int free_exponent,
                              double* white_level, double* colored_coeff,
                              double* exponent, double* residual);

/* Noise-level records (time [days], level, 1-sigma uncertainty). */
CB_API cb_status cb_runs_create(const double* t_days, const double* level,
                                const double* sigma, size_t n, cb_runs** out);
CB_API cb_status cb_runs_read_csv(const char* path, cb_runs** out);
CB_API void cb_runs_free(cb_runs* r);
CB_API size_t cb_runs_size(const cb_runs* r);

/* Weighted power-law fit S ~ amplitude * t^exponent with standard error on
 * the exponent from the stated uncertainties. Needs >= 3 distinct times. */
CB_API cb_status cb_fit_decay(const cb_runs* r, double* exponent,
                              double* exponent_stderr, double* amplitude);

#ifdef __cplusplus
}
#endif

#endif /* CBOUND_H */
