#include "inductolink/inductolink.h"

#include <cmath>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <string>

#include "core/errors.hpp"
#include "core/harmonics.hpp"
#include "core/model.hpp"
#include "core/sizing.hpp"
#include "core/transient.hpp"

struct il_catalog {
    inductolink::Catalog value;
};

struct il_spectrum {
    inductolink::HarmonicSpectrum value;
};

struct il_attenuation {
    inductolink::AttenuationReport value;
};

struct il_transient {
    inductolink::TransientResult value;
};

namespace {

thread_local std::string t_last_error;

il_status fail(il_status status, const std::string& message)
{
    t_last_error = message;
    return status;
}

// Runs a body, translating exceptions to status codes.
template <typename Fn>
il_status guarded(Fn&& body)
{
    try {
        body();
        return IL_OK;
    } catch (const inductolink::ParseError& e) {
        return fail(IL_ERR_PARSE, e.what());
    } catch (const inductolink::ValidationError& e) {
        return fail(IL_ERR_VALIDATION, e.what());
    } catch (const inductolink::NoFeasiblePartError& e) {
        return fail(IL_ERR_NO_FEASIBLE_PART, e.what());
    } catch (const inductolink::ResolutionError& e) {
        return fail(IL_ERR_RESOLUTION, e.what());
    } catch (const inductolink::IoError& e) {
        return fail(IL_ERR_IO, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(IL_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::domain_error& e) {
        return fail(IL_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::filesystem::filesystem_error& e) {
        return fail(IL_ERR_IO, e.what());
    } catch (const std::exception& e) {
        return fail(IL_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(IL_ERR_INTERNAL, "unknown error");
    }
}

il_status require_args(bool ok)
{
    return ok ? IL_OK : fail(IL_ERR_INVALID_ARGUMENT, "null pointer argument");
}

void copy_name(char (&dst)[IL_NAME_MAX], const std::string& src)
{
    // Part names are validated to fit at construction.
    std::snprintf(dst, IL_NAME_MAX, "%s", src.c_str());
}

void to_c(const inductolink::InductorPart& p, il_inductor* out)
{
    copy_name(out->name, p.name);
    out->l_h = p.l_h;
    out->r_ohm = p.r_ohm;
    out->i_max_a = p.i_max_a;
    out->p_max_w = p.p_max_w;
}

void to_c(const inductolink::ZenerPart& p, il_zener* out)
{
    copy_name(out->name, p.name);
    out->v_z_v = p.v_z_v;
    out->i_zsm_a = p.i_zsm_a;
    out->t_surge_s = p.t_surge_s;
}

void to_c(const inductolink::FreewheelDiodePart& p, il_diode* out)
{
    copy_name(out->name, p.name);
    out->v_f_v = p.v_f_v;
    out->i_max_a = p.i_max_a;
    out->v_r_v = p.v_r_v;
    out->r_d_ohm = p.r_d_ohm;
}

il_check to_c(const inductolink::LimitCheck& c)
{
    return il_check{c.pass ? 1 : 0, c.actual, c.limit, c.margin};
}

std::ofstream open_out(const char* path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw inductolink::IoError(std::string("cannot write ") + path);
    return out;
}

}  // namespace

extern "C" {

const char* il_version(void) { return "0.1.0"; }

const char* il_status_name(il_status status)
{
    switch (status) {
        case IL_OK: return "ok";
        case IL_ERR_INVALID_ARGUMENT: return "invalid argument";
        case IL_ERR_PARSE: return "parse error";
        case IL_ERR_VALIDATION: return "validation error";
        case IL_ERR_NO_FEASIBLE_PART: return "no feasible part";
        case IL_ERR_RESOLUTION: return "resolution error";
        case IL_ERR_IO: return "io error";
        case IL_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* il_last_error(void) { return t_last_error.c_str(); }

/* ------------------------------------------------------------------ */
/* Sizing                                                              */

il_status il_z_base_ohm(double v_ll_kv, double s_kva, double* out)
{
    if (il_status s = require_args(out != nullptr)) return s;
    return guarded([&] {
        const inductolink::SourceSpec src(v_ll_kv, s_kva, 50.0, 1.0);
        *out = inductolink::compute_z_base(src);
    });
}

il_status il_ac_reactance_ohm(double z_base_ohm, double percent, double* out)
{
    if (il_status s = require_args(out != nullptr)) return s;
    return guarded([&] { *out = inductolink::ac_reactance(z_base_ohm, percent); });
}

il_status il_ac_reactor_h(double z_base_ohm, double percent, double f_hz, double* out)
{
    if (il_status s = require_args(out != nullptr)) return s;
    return guarded([&] { *out = inductolink::size_ac_reactor(z_base_ohm, percent, f_hz); });
}

il_status il_dc_inductor_h(double l_a_h, double* out)
{
    if (il_status s = require_args(out != nullptr)) return s;
    return guarded([&] { *out = inductolink::size_dc_inductor(l_a_h); });
}

il_status il_clamp_budget_v(double p_lcmax_w, double i_total_a, double* out)
{
    if (il_status s = require_args(out != nullptr)) return s;
    return guarded([&] { *out = inductolink::clamp_voltage_budget(p_lcmax_w, i_total_a); });
}

il_status il_connect_inrush(double delta_v_v, double l_c_h, double i_limit_a,
                            double* slew_a_per_s, double* t_to_limit_s)
{
    if (il_status s = require_args(slew_a_per_s && t_to_limit_s)) return s;
    return guarded([&] {
        const auto r = inductolink::connect_inrush(delta_v_v, l_c_h, i_limit_a);
        *slew_a_per_s = r.slew_a_per_s;
        *t_to_limit_s = r.t_to_limit_s ? *r.t_to_limit_s : HUGE_VAL;
    });
}

il_status il_validate_inductor(const il_inductor* part, double l_c_required_h,
                               double i_total_a, il_inductor_validation* out)
{
    if (il_status s = require_args(part && out)) return s;
    return guarded([&] {
        const inductolink::InductorPart p(part->name, part->l_h, part->r_ohm, part->i_max_a,
                                          part->p_max_w);
        const auto v = inductolink::validate_inductor(p, l_c_required_h, i_total_a);
        out->inductance = to_c(v.inductance);
        out->current = to_c(v.current);
        out->all_pass = v.all_pass() ? 1 : 0;
    });
}

/* ------------------------------------------------------------------ */
/* Catalog                                                             */

il_status il_catalog_load_dir(const char* dir, il_catalog** out)
{
    if (il_status s = require_args(dir && out)) return s;
    return guarded([&] { *out = new il_catalog{inductolink::load_catalog(dir)}; });
}

il_status il_catalog_save_dir(const il_catalog* catalog, const char* dir)
{
    if (il_status s = require_args(catalog && dir)) return s;
    return guarded([&] { inductolink::save_catalog(catalog->value, dir); });
}

void il_catalog_free(il_catalog* catalog) { delete catalog; }

size_t il_catalog_inductor_count(const il_catalog* c) { return c ? c->value.inductors.size() : 0; }
size_t il_catalog_zener_count(const il_catalog* c) { return c ? c->value.zeners.size() : 0; }
size_t il_catalog_diode_count(const il_catalog* c) { return c ? c->value.diodes.size() : 0; }

il_status il_catalog_inductor(const il_catalog* catalog, size_t index, il_inductor* out)
{
    if (il_status s = require_args(catalog && out)) return s;
    if (index >= catalog->value.inductors.size())
        return fail(IL_ERR_INVALID_ARGUMENT, "inductor index out of range");
    to_c(catalog->value.inductors[index], out);
    return IL_OK;
}

il_status il_catalog_zener(const il_catalog* catalog, size_t index, il_zener* out)
{
    if (il_status s = require_args(catalog && out)) return s;
    if (index >= catalog->value.zeners.size())
        return fail(IL_ERR_INVALID_ARGUMENT, "zener index out of range");
    to_c(catalog->value.zeners[index], out);
    return IL_OK;
}

il_status il_catalog_diode(const il_catalog* catalog, size_t index, il_diode* out)
{
    if (il_status s = require_args(catalog && out)) return s;
    if (index >= catalog->value.diodes.size())
        return fail(IL_ERR_INVALID_ARGUMENT, "diode index out of range");
    to_c(catalog->value.diodes[index], out);
    return IL_OK;
}

il_status il_select_clamp_chain(const il_catalog* catalog, double budget_v, double i_0_a,
                                double t_required_s, il_zener* zener_out, il_diode* diode_out)
{
    if (il_status s = require_args(catalog && zener_out && diode_out)) return s;
    return guarded([&] {
        const auto sel =
            inductolink::select_clamp_chain(budget_v, i_0_a, t_required_s, catalog->value);
        to_c(sel.zener, zener_out);
        to_c(sel.diode, diode_out);
    });
}

/* ------------------------------------------------------------------ */
/* Spectra                                                             */

il_status il_six_pulse_spectrum(double v_do_v, int k_max, double f0_hz, il_spectrum** out)
{
    if (il_status s = require_args(out != nullptr)) return s;
    return guarded([&] {
        *out = new il_spectrum{inductolink::six_pulse_voltage_spectrum(v_do_v, k_max, f0_hz)};
    });
}

il_status il_ripple_currents(const il_spectrum* v_spec, double r_ohm, double l_h,
                             il_spectrum** out)
{
    if (il_status s = require_args(v_spec && out)) return s;
    return guarded([&] {
        *out = new il_spectrum{inductolink::ripple_current_spectrum(v_spec->value, r_ohm, l_h)};
    });
}

void il_spectrum_free(il_spectrum* spec) { delete spec; }

size_t il_spectrum_size(const il_spectrum* spec) { return spec ? spec->value.size() : 0; }

double il_spectrum_f0_hz(const il_spectrum* spec) { return spec ? spec->value.f0_hz : 0.0; }

il_status il_spectrum_entry(const il_spectrum* spec, size_t index, int* order, double* amplitude)
{
    if (il_status s = require_args(spec && order && amplitude)) return s;
    if (index >= spec->value.size())
        return fail(IL_ERR_INVALID_ARGUMENT, "spectrum index out of range");
    *order = spec->value.entries[index].order;
    *amplitude = spec->value.entries[index].amplitude;
    return IL_OK;
}

il_status il_spectrum_amplitude_sum(const il_spectrum* spec, double* out)
{
    if (il_status s = require_args(spec && out)) return s;
    *out = spec->value.sum_amplitudes();
    return IL_OK;
}

il_status il_total_coil_current_a(double i_dc_max_a, const il_spectrum* ripple_currents,
                                  double* out)
{
    if (il_status s = require_args(ripple_currents && out)) return s;
    return guarded(
        [&] { *out = inductolink::total_coil_current(i_dc_max_a, ripple_currents->value); });
}

il_status il_thd(const il_spectrum* spec, double base, double* out)
{
    if (il_status s = require_args(spec && out)) return s;
    return guarded([&] { *out = inductolink::thd(spec->value, base); });
}

il_status il_write_spectrum_csv(const il_spectrum* voltage, const il_spectrum* current,
                                const char* path)
{
    if (il_status s = require_args(voltage && current && path)) return s;
    return guarded([&] {
        auto out = open_out(path);
        inductolink::write_spectrum_csv(voltage->value, current->value, out);
    });
}

/* ------------------------------------------------------------------ */
/* Attenuation                                                         */

il_status il_attenuation_report(const il_spectrum* v_spec, double r_base_ohm, double l_base_h,
                                double l_added_h, double i_ref_a, il_attenuation** out)
{
    if (il_status s = require_args(v_spec && out)) return s;
    return guarded([&] {
        *out = new il_attenuation{inductolink::attenuation_report(v_spec->value, r_base_ohm,
                                                                  l_base_h, l_added_h, i_ref_a)};
    });
}

void il_attenuation_free(il_attenuation* report) { delete report; }

size_t il_attenuation_size(const il_attenuation* report)
{
    return report ? report->value.factors.size() : 0;
}

il_status il_attenuation_factor(const il_attenuation* report, size_t index, int* order,
                                double* factor)
{
    if (il_status s = require_args(report && order && factor)) return s;
    if (index >= report->value.factors.size())
        return fail(IL_ERR_INVALID_ARGUMENT, "attenuation index out of range");
    *order = report->value.factors[index].order;
    *factor = report->value.factors[index].factor;
    return IL_OK;
}

il_status il_attenuation_thd(const il_attenuation* report, double* before, double* after,
                             double* ratio, int* within_band)
{
    if (il_status s = require_args(report && before && after && ratio && within_band)) return s;
    *before = report->value.thd_before;
    *after = report->value.thd_after;
    *ratio = report->value.thd_ratio;
    *within_band = report->value.ratio_within_band ? 1 : 0;
    return IL_OK;
}

/* ------------------------------------------------------------------ */
/* Transient                                                           */

il_status il_disconnect_analytic(double l_h, double r_c_ohm, double v_z_v, double v_f_v,
                                 double r_d_ohm, double i_0_a, double* t_ext_s, double* v_peak_v)
{
    if (il_status s = require_args(t_ext_s && v_peak_v)) return s;
    return guarded([&] {
        const inductolink::ClampChain chain(v_z_v, v_f_v, r_d_ohm);
        const auto sol = inductolink::disconnect_analytic(l_h, r_c_ohm, chain, i_0_a);
        *t_ext_s = sol.t_ext_s;
        *v_peak_v = sol.v_peak_v;
    });
}

il_status il_disconnect_current_at(double l_h, double r_c_ohm, double v_z_v, double v_f_v,
                                   double r_d_ohm, double i_0_a, double t_s, double* i_a)
{
    if (il_status s = require_args(i_a != nullptr)) return s;
    return guarded([&] {
        const inductolink::ClampChain chain(v_z_v, v_f_v, r_d_ohm);
        *i_a = inductolink::disconnect_analytic(l_h, r_c_ohm, chain, i_0_a).current_at(t_s);
    });
}

il_status il_simulate_disconnect(double l_h, double r_c_ohm, double v_z_v, double v_f_v,
                                 double r_d_ohm, double i_0_a, double dt_s, il_transient** out)
{
    if (il_status s = require_args(out != nullptr)) return s;
    return guarded([&] {
        const inductolink::ClampChain chain(v_z_v, v_f_v, r_d_ohm);
        *out = new il_transient{
            inductolink::simulate_disconnect(l_h, r_c_ohm, chain, i_0_a, dt_s)};
    });
}

void il_transient_free(il_transient* result) { delete result; }

double il_transient_t_ext_s(const il_transient* r) { return r ? r->value.t_ext_s : 0.0; }
double il_transient_v_peak_v(const il_transient* r) { return r ? r->value.v_peak_v : 0.0; }
double il_transient_e_dissipated_j(const il_transient* r)
{
    return r ? r->value.e_dissipated_j : 0.0;
}
double il_transient_i_zener_initial_a(const il_transient* r)
{
    return r ? r->value.i_zener_initial_a : 0.0;
}
size_t il_transient_sample_count(const il_transient* r) { return r ? r->value.samples.size() : 0; }

il_status il_transient_sample(const il_transient* result, size_t index, double* t_s, double* i_a,
                              double* v_coil_v)
{
    if (il_status s = require_args(result && t_s && i_a && v_coil_v)) return s;
    if (index >= result->value.samples.size())
        return fail(IL_ERR_INVALID_ARGUMENT, "sample index out of range");
    const auto& sample = result->value.samples[index];
    *t_s = sample.t_s;
    *i_a = sample.i_a;
    *v_coil_v = sample.v_coil_v;
    return IL_OK;
}

il_status il_transient_write_csv(const il_transient* result, const char* path)
{
    if (il_status s = require_args(result && path)) return s;
    return guarded([&] {
        auto out = open_out(path);
        inductolink::write_waveform_csv(result->value, out);
    });
}

il_status il_zener_stress(double i_initial_a, double t_ext_s, double i_zsm_a, double t_surge_s,
                          il_stress_report* out)
{
    if (il_status s = require_args(out != nullptr)) return s;
    return guarded([&] {
        const auto r = inductolink::zener_stress_check(i_initial_a, t_ext_s, i_zsm_a, t_surge_s);
        out->current = to_c(r.current);
        out->time = to_c(r.time);
        out->pass = r.pass() ? 1 : 0;
    });
}

} /* extern "C" */
