/*
 * inductolink - sizing and verification toolkit for capacitor-less DC-link
 * coupling inductors with a zener/diode freewheel clamp.
 *
 * C interface of the shared library. All functions that can fail return an
 * il_status; IL_OK is zero. On failure a human-readable message is kept in
 * thread-local storage and available through il_last_error() until the next
 * failing call on the same thread. Handles returned through out-parameters
 * are owned by the caller and released with the matching *_free function.
 *
 * Units are SI throughout (V, A, H, ohm, s, W, J); the only exception is
 * il_z_base_ohm, which takes the source ratings in the kV / kVA they are
 * quoted in.
 */

#ifndef INDUCTOLINK_H
#define INDUCTOLINK_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum il_status {
    IL_OK = 0,
    IL_ERR_INVALID_ARGUMENT = 1, /* bad pointer, out-of-range value, math domain */
    IL_ERR_PARSE = 2,            /* malformed catalog CSV */
    IL_ERR_VALIDATION = 3,       /* invariant violation in constructed data */
    IL_ERR_NO_FEASIBLE_PART = 4, /* no catalog pair satisfies the constraints */
    IL_ERR_RESOLUTION = 5,       /* integration step unusable for the transient */
    IL_ERR_IO = 6,               /* file could not be read or written */
    IL_ERR_INTERNAL = 7
} il_status;

const char* il_version(void);
const char* il_status_name(il_status status);
const char* il_last_error(void);

/* ------------------------------------------------------------------ */
/* Catalog records (value structs)                                    */

#define IL_NAME_MAX 64

typedef struct il_inductor {
    char name[IL_NAME_MAX];
    double l_h;
    double r_ohm;
    double i_max_a;
    double p_max_w;
} il_inductor;

typedef struct il_zener {
    char name[IL_NAME_MAX];
    double v_z_v;
    double i_zsm_a;
    double t_surge_s;
} il_zener;

typedef struct il_diode {
    char name[IL_NAME_MAX];
    double v_f_v;
    double i_max_a;
    double v_r_v;
    double r_d_ohm;
} il_diode;

/* One quantity compared against its limit; margin >= 0 iff pass. */
typedef struct il_check {
    int pass;
    double actual;
    double limit;
    double margin;
} il_check;

/* ------------------------------------------------------------------ */
/* Sizing                                                              */

/* Base impedance from the ratings: v_ll^2 * 1000 / s (v_ll in kV, s in kVA). */
il_status il_z_base_ohm(double v_ll_kv, double s_kva, double* out);

/* AC reactor reactance percent * z_base; percent is a fraction in [0, 1). */
il_status il_ac_reactance_ohm(double z_base_ohm, double percent, double* out);

/* AC reactor inductance percent * z_base / (2 pi f). */
il_status il_ac_reactor_h(double z_base_ohm, double percent, double f_hz, double* out);

/* DC coupler inductance, exactly 1.7 times the AC reactor value. */
il_status il_dc_inductor_h(double l_a_h, double* out);

/* Clamp-chain voltage budget p_lcmax / i_total. */
il_status il_clamp_budget_v(double p_lcmax_w, double i_total_a, double* out);

/* Connection slew delta_v / l_c and time to reach i_limit; the time is
 * INFINITY when delta_v <= 0. */
il_status il_connect_inrush(double delta_v_v, double l_c_h, double i_limit_a,
                            double* slew_a_per_s, double* t_to_limit_s);

/* Inductor part vs required inductance and total current. Check margins are
 * actual - required. */
typedef struct il_inductor_validation {
    il_check inductance;
    il_check current;
    int all_pass;
} il_inductor_validation;

il_status il_validate_inductor(const il_inductor* part, double l_c_required_h,
                               double i_total_a, il_inductor_validation* out);

/* ------------------------------------------------------------------ */
/* Parts catalog                                                       */

typedef struct il_catalog il_catalog;

/* Loads inductors.csv, zeners.csv and diodes.csv from a directory. */
il_status il_catalog_load_dir(const char* dir, il_catalog** out);
il_status il_catalog_save_dir(const il_catalog* catalog, const char* dir);
void il_catalog_free(il_catalog* catalog);

size_t il_catalog_inductor_count(const il_catalog* catalog);
size_t il_catalog_zener_count(const il_catalog* catalog);
size_t il_catalog_diode_count(const il_catalog* catalog);
il_status il_catalog_inductor(const il_catalog* catalog, size_t index, il_inductor* out);
il_status il_catalog_zener(const il_catalog* catalog, size_t index, il_zener* out);
il_status il_catalog_diode(const il_catalog* catalog, size_t index, il_diode* out);

/* Picks the zener + diode pair with v_z + v_f <= budget, i_zsm >= i_0,
 * diode i_max >= i_0 and t_surge >= t_required, maximizing v_z + v_f; ties
 * break on part names. IL_ERR_NO_FEASIBLE_PART names the nearest miss. */
il_status il_select_clamp_chain(const il_catalog* catalog, double budget_v, double i_0_a,
                                double t_required_s, il_zener* zener_out, il_diode* diode_out);

/* ------------------------------------------------------------------ */
/* Harmonic spectra                                                    */

typedef struct il_spectrum il_spectrum;

/* DC-side ripple voltage of an ideal six-pulse rectifier with average
 * output v_do: orders n = 6k, k = 1..k_max, peak amplitude
 * v_do * 2 / (n^2 - 1). */
il_status il_six_pulse_spectrum(double v_do_v, int k_max, double f0_hz, il_spectrum** out);

/* Ripple currents through a series RL branch: i_n = v_n / |r + j n w0 l|. */
il_status il_ripple_currents(const il_spectrum* v_spec, double r_ohm, double l_h,
                             il_spectrum** out);

void il_spectrum_free(il_spectrum* spec);
size_t il_spectrum_size(const il_spectrum* spec);
double il_spectrum_f0_hz(const il_spectrum* spec);
il_status il_spectrum_entry(const il_spectrum* spec, size_t index, int* order,
                            double* amplitude);
il_status il_spectrum_amplitude_sum(const il_spectrum* spec, double* out);

/* i_dc_max plus the arithmetic sum of the ripple current amplitudes. */
il_status il_total_coil_current_a(double i_dc_max_a, const il_spectrum* ripple_currents,
                                  double* out);

/* sqrt(sum of squared amplitudes) / base. */
il_status il_thd(const il_spectrum* spec, double base, double* out);

/* CSV "order,f_Hz,v_peak,i_peak", one row per order. */
il_status il_write_spectrum_csv(const il_spectrum* voltage, const il_spectrum* current,
                                const char* path);

/* ------------------------------------------------------------------ */
/* Filter attenuation                                                  */

typedef struct il_attenuation il_attenuation;

/* Effect of inserting l_added in series with an (r_base, l_base) branch.
 * i_ref is the reference current for the THD figures; the ratio does not
 * depend on it. */
il_status il_attenuation_report(const il_spectrum* v_spec, double r_base_ohm, double l_base_h,
                                double l_added_h, double i_ref_a, il_attenuation** out);
void il_attenuation_free(il_attenuation* report);
size_t il_attenuation_size(const il_attenuation* report);
il_status il_attenuation_factor(const il_attenuation* report, size_t index, int* order,
                                double* factor);
/* within_band reports whether ratio lies in [0.3, 0.7]. */
il_status il_attenuation_thd(const il_attenuation* report, double* before, double* after,
                             double* ratio, int* within_band);

/* ------------------------------------------------------------------ */
/* Disconnection transient                                             */

/* Closed-form discharge of the coil through the clamp: extinction time and
 * peak coil-terminal voltage v_z + v_f + r_d * i_0. */
il_status il_disconnect_analytic(double l_h, double r_c_ohm, double v_z_v, double v_f_v,
                                 double r_d_ohm, double i_0_a, double* t_ext_s,
                                 double* v_peak_v);

/* Closed-form current at time t (zero past extinction). */
il_status il_disconnect_current_at(double l_h, double r_c_ohm, double v_z_v, double v_f_v,
                                   double r_d_ohm, double i_0_a, double t_s, double* i_a);

typedef struct il_transient il_transient;

/* Fixed-step 4th-order integration of the discharge; requires
 * dt <= t_ext / 100. */
il_status il_simulate_disconnect(double l_h, double r_c_ohm, double v_z_v, double v_f_v,
                                 double r_d_ohm, double i_0_a, double dt_s, il_transient** out);

void il_transient_free(il_transient* result);
double il_transient_t_ext_s(const il_transient* result);
double il_transient_v_peak_v(const il_transient* result);
double il_transient_e_dissipated_j(const il_transient* result);
double il_transient_i_zener_initial_a(const il_transient* result);
size_t il_transient_sample_count(const il_transient* result);
il_status il_transient_sample(const il_transient* result, size_t index, double* t_s,
                              double* i_a, double* v_coil_v);

/* CSV "t_s,i_A,v_coil_V", one row per sample. */
il_status il_transient_write_csv(const il_transient* result, const char* path);

/* Clamp event vs zener ratings: initial current against i_zsm, extinction
 * time against t_surge. Check margins are limit - actual. */
typedef struct il_stress_report {
    il_check current;
    il_check time;
    int pass;
} il_stress_report;

il_status il_zener_stress(double i_initial_a, double t_ext_s, double i_zsm_a,
                          double t_surge_s, il_stress_report* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* INDUCTOLINK_H */
