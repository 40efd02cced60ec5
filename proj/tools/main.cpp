// inductolink command-line frontend: design, simulate, spectrum and check
// subcommands on top of the shared library's C API.
//
// Exit codes: 0 all checks pass, 1 input/usage error, 2 infeasible design or
// failed checks.

#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "inductolink/inductolink.h"

namespace {

constexpr double kPi = 3.14159265358979323846;

// Average DC output of an ideal six-pulse rectifier fed at line voltage
// v_ll: (3 sqrt(2) / pi) * v_ll.
constexpr double six_pulse_average(double v_ll_v) { return 3.0 * std::sqrt(2.0) / kPi * v_ll_v; }

struct CliError {
    int exit_code;
    std::string message;
};

// Maps a failed C API call onto the exit-code contract, naming the stage.
void check(il_status status, const std::string& stage)
{
    if (status == IL_OK) return;
    const int code = status == IL_ERR_NO_FEASIBLE_PART ? 2 : 1;
    throw CliError{code, stage + ": " + il_last_error()};
}

std::string fmt(double v)
{
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string fmt9(double v)
{
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 9);
    return std::string(buf, res.ptr);
}

template <typename T, void (*Free)(T*)>
struct Handle {
    T* ptr = nullptr;

    Handle() = default;
    Handle(const Handle&) = delete;
    Handle& operator=(const Handle&) = delete;
    Handle(Handle&& other) noexcept : ptr(other.ptr) { other.ptr = nullptr; }
    ~Handle() { Free(ptr); }

    T** out() { return &ptr; }
    operator T*() const { return ptr; }
};

using CatalogHandle = Handle<il_catalog, il_catalog_free>;
using SpectrumHandle = Handle<il_spectrum, il_spectrum_free>;
using AttenuationHandle = Handle<il_attenuation, il_attenuation_free>;
using TransientHandle = Handle<il_transient, il_transient_free>;

// Ordered key-value report, rendered as aligned text and optionally as a
// key,value CSV twin (full precision there).
struct Report {
    struct Row {
        std::string key;
        std::string text;
        std::string csv;
    };
    std::vector<Row> rows;

    void add(const std::string& key, double v) { rows.push_back({key, fmt9(v), fmt(v)}); }
    void add(const std::string& key, const std::string& v) { rows.push_back({key, v, v}); }
    void add(const std::string& key, const char* v) { add(key, std::string(v)); }
    void add_flag(const std::string& key, bool pass) { add(key, pass ? "pass" : "FAIL"); }

    std::string text() const
    {
        std::size_t width = 0;
        for (const auto& r : rows) width = std::max(width, r.key.size());
        std::string out;
        for (const auto& r : rows) {
            out += r.key;
            out.append(width + 2 - r.key.size(), ' ');
            out += r.text;
            out += '\n';
        }
        return out;
    }

    std::string csv() const
    {
        std::string out = "key,value\n";
        for (const auto& r : rows) out += r.key + ',' + r.csv + '\n';
        return out;
    }
};

void write_text_file(const std::string& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw CliError{1, "cannot write " + path};
    out << content;
}

CatalogHandle load_catalog_or_fail(const std::string& dir)
{
    CatalogHandle catalog;
    check(il_catalog_load_dir(dir.c_str(), catalog.out()), "catalog");
    return catalog;
}

// Smallest catalog inductance that still meets the required l_c; an explicit
// name overrides the automatic choice.
il_inductor pick_inductor(il_catalog* catalog, double l_c_h, const std::string& name)
{
    std::optional<il_inductor> best;
    const size_t count = il_catalog_inductor_count(catalog);
    for (size_t k = 0; k < count; ++k) {
        il_inductor part;
        check(il_catalog_inductor(catalog, k, &part), "catalog");
        if (!name.empty()) {
            if (name == part.name) return part;
            continue;
        }
        if (part.l_h < l_c_h) continue;
        const bool better = !best || part.l_h < best->l_h ||
                            (part.l_h == best->l_h && std::strcmp(part.name, best->name) < 0);
        if (better) best = part;
    }
    if (!name.empty()) throw CliError{1, "selection: inductor '" + name + "' not in catalog"};
    if (!best)
        throw CliError{2, "selection: no catalog inductor with l >= " + fmt9(l_c_h) + " H"};
    return *best;
}

// ---------------------------------------------------------------------------
// design

struct DesignArgs {
    double vll_kv = 0;
    double s_kva = 0;
    double f_hz = 50;
    double vdc_v = 0;
    double percent = 0.03;
    int k_max = 50;
    double vdo_v = 0;     // 0: derive from v_ll
    double idc_max_a = 0; // 0: derive from s and v_do
    std::string inductor;
    std::string catalog_dir;
    std::string out_path;
    std::string csv_path;
};

int run_design(const DesignArgs& a)
{
    Report rep;
    rep.add("input.v_ll_kv", a.vll_kv);
    rep.add("input.s_kva", a.s_kva);
    rep.add("input.f_hz", a.f_hz);
    rep.add("input.v_dc_v", a.vdc_v);
    rep.add("input.percent", a.percent);
    rep.add("input.k_max", static_cast<double>(a.k_max));

    const double v_do = a.vdo_v > 0 ? a.vdo_v : six_pulse_average(a.vll_kv * 1000.0);
    const double i_dc = a.idc_max_a > 0 ? a.idc_max_a : a.s_kva * 1000.0 / v_do;
    rep.add("input.v_do_v", v_do);
    rep.add("input.i_dc_max_a", i_dc);
    rep.add("input.catalog_dir", a.catalog_dir);

    double z_base = 0, x_la = 0, l_a = 0, l_c = 0;
    check(il_z_base_ohm(a.vll_kv, a.s_kva, &z_base), "sizing");
    check(il_ac_reactance_ohm(z_base, a.percent, &x_la), "sizing");
    check(il_ac_reactor_h(z_base, a.percent, a.f_hz, &l_a), "sizing");
    check(il_dc_inductor_h(l_a, &l_c), "sizing");
    rep.add("sizing.z_base_ohm", z_base);
    rep.add("sizing.x_la_ohm", x_la);
    rep.add("sizing.l_a_h", l_a);
    rep.add("sizing.l_c_h", l_c);

    if (l_c <= 0)
        throw CliError{2, "sizing: produced zero coupler inductance (percent = " +
                              fmt9(a.percent) + "); design infeasible"};

    CatalogHandle catalog = load_catalog_or_fail(a.catalog_dir);
    const il_inductor coil = pick_inductor(catalog, l_c, a.inductor);
    rep.add("inductor.name", coil.name);
    rep.add("inductor.l_h", coil.l_h);
    rep.add("inductor.r_ohm", coil.r_ohm);
    rep.add("inductor.i_max_a", coil.i_max_a);
    rep.add("inductor.p_max_w", coil.p_max_w);

    SpectrumHandle ripple_v;
    check(il_six_pulse_spectrum(v_do, a.k_max, a.f_hz, ripple_v.out()), "spectrum");
    SpectrumHandle ripple_i;
    check(il_ripple_currents(ripple_v, coil.r_ohm, coil.l_h, ripple_i.out()), "spectrum");

    double ripple_sum = 0, i_total = 0, budget = 0;
    check(il_spectrum_amplitude_sum(ripple_i, &ripple_sum), "spectrum");
    check(il_total_coil_current_a(i_dc, ripple_i, &i_total), "current");
    check(il_clamp_budget_v(coil.p_max_w, i_total, &budget), "budget");
    rep.add("current.i_ripple_sum_a", ripple_sum);
    rep.add("current.i_total_a", i_total);
    rep.add("budget.u_lcmax_v", budget);

    il_zener zener;
    il_diode diode;
    check(il_select_clamp_chain(catalog, budget, i_total, 0.0, &zener, &diode), "selection");
    rep.add("selection.zener", zener.name);
    rep.add("selection.v_z_v", zener.v_z_v);
    rep.add("selection.i_zsm_a", zener.i_zsm_a);
    rep.add("selection.t_surge_s", zener.t_surge_s);
    rep.add("selection.diode", diode.name);
    rep.add("selection.v_f_v", diode.v_f_v);
    rep.add("selection.diode_i_max_a", diode.i_max_a);
    rep.add("selection.r_d_ohm", diode.r_d_ohm);
    rep.add("selection.chain_v", zener.v_z_v + diode.v_f_v);

    il_inductor_validation validation;
    check(il_validate_inductor(&coil, l_c, i_total, &validation), "validation");
    rep.add_flag("validation.inductance", validation.inductance.pass != 0);
    rep.add("validation.inductance_margin_h", validation.inductance.margin);
    rep.add_flag("validation.current", validation.current.pass != 0);
    rep.add("validation.current_margin_a", validation.current.margin);

    double t_ext = 0, v_peak = 0;
    check(il_disconnect_analytic(coil.l_h, coil.r_ohm, zener.v_z_v, diode.v_f_v, diode.r_d_ohm,
                                 i_total, &t_ext, &v_peak),
          "transient");
    rep.add("transient.i_0_a", i_total);
    rep.add("transient.t_ext_s", t_ext);
    rep.add("transient.v_peak_v", v_peak);

    il_stress_report stress;
    check(il_zener_stress(i_total, t_ext, zener.i_zsm_a, zener.t_surge_s, &stress), "stress");
    rep.add_flag("stress.current", stress.current.pass != 0);
    rep.add("stress.current_margin_a", stress.current.margin);
    rep.add_flag("stress.time", stress.time.pass != 0);
    rep.add("stress.time_margin_s", stress.time.margin);

    AttenuationHandle attenuation;
    check(il_attenuation_report(ripple_v, coil.r_ohm, 0.0, coil.l_h, i_dc, attenuation.out()),
          "attenuation");
    int first_order = 0;
    double first_factor = 0;
    double thd_before = 0, thd_after = 0, thd_ratio = 0;
    int within_band = 0;
    if (il_attenuation_size(attenuation) > 0)
        check(il_attenuation_factor(attenuation, 0, &first_order, &first_factor), "attenuation");
    check(il_attenuation_thd(attenuation, &thd_before, &thd_after, &thd_ratio, &within_band),
          "attenuation");
    rep.add("attenuation.factor_order6", first_factor);
    rep.add("attenuation.thd_before", thd_before);
    rep.add("attenuation.thd_after", thd_after);
    rep.add("attenuation.thd_ratio", thd_ratio);
    rep.add("attenuation.within_half_band", within_band ? "yes" : "no");

    const bool all_pass = validation.all_pass != 0 && stress.pass != 0;
    rep.add("result.checks", all_pass ? "PASS" : "FAIL");

    std::cout << rep.text();
    if (!a.out_path.empty()) write_text_file(a.out_path, rep.text());
    if (!a.csv_path.empty()) write_text_file(a.csv_path, rep.csv());
    return all_pass ? 0 : 2;
}

// ---------------------------------------------------------------------------
// simulate

struct SimulateArgs {
    double l_uh = 0;
    double r_ohm = 0;
    double vz_v = 0;
    double vf_v = 0;
    double rd_mohm = 0;
    double i0_a = 0;
    double dt_us = 0;
    double izsm_a = 0;     // 0: no stress report
    double tsurge_ms = 0;
    std::string out_path;
};

int run_simulate(const SimulateArgs& a)
{
    TransientHandle result;
    check(il_simulate_disconnect(a.l_uh * 1e-6, a.r_ohm, a.vz_v, a.vf_v, a.rd_mohm * 1e-3,
                                 a.i0_a, a.dt_us * 1e-6, result.out()),
          "simulate");

    Report rep;
    rep.add("t_ext_s", il_transient_t_ext_s(result));
    rep.add("v_peak_v", il_transient_v_peak_v(result));
    rep.add("e_dissipated_j", il_transient_e_dissipated_j(result));
    rep.add("i_zener_initial_a", il_transient_i_zener_initial_a(result));
    rep.add("samples", static_cast<double>(il_transient_sample_count(result)));

    int exit_code = 0;
    if (a.izsm_a > 0 && a.tsurge_ms > 0) {
        il_stress_report stress;
        check(il_zener_stress(il_transient_i_zener_initial_a(result),
                              il_transient_t_ext_s(result), a.izsm_a, a.tsurge_ms * 1e-3,
                              &stress),
              "stress");
        rep.add_flag("stress.current", stress.current.pass != 0);
        rep.add("stress.current_margin_a", stress.current.margin);
        rep.add_flag("stress.time", stress.time.pass != 0);
        rep.add("stress.time_margin_s", stress.time.margin);
        if (!stress.pass) exit_code = 2;
    }

    if (!a.out_path.empty()) {
        check(il_transient_write_csv(result, a.out_path.c_str()), "simulate");
        rep.add("csv", a.out_path);
    }

    std::cout << rep.text();
    return exit_code;
}

// ---------------------------------------------------------------------------
// spectrum

struct SpectrumArgs {
    double vdo_v = 0;
    int k_max = 50;
    double r_ohm = 0;
    double l_uh = 0;
    double f_hz = 50;
    double idc_a = 0;  // 0: skip current THD
    std::string out_path;
};

int run_spectrum(const SpectrumArgs& a)
{
    SpectrumHandle voltage;
    check(il_six_pulse_spectrum(a.vdo_v, a.k_max, a.f_hz, voltage.out()), "spectrum");
    SpectrumHandle current;
    check(il_ripple_currents(voltage, a.r_ohm, a.l_uh * 1e-6, current.out()), "spectrum");

    Report rep;
    rep.add("rows", static_cast<double>(il_spectrum_size(voltage)));

    double thd_v = 0;
    check(il_thd(voltage, a.vdo_v, &thd_v), "spectrum");
    rep.add("thd_v", thd_v);

    double ripple_sum = 0;
    check(il_spectrum_amplitude_sum(current, &ripple_sum), "spectrum");
    rep.add("i_ripple_sum_a", ripple_sum);

    if (a.idc_a > 0) {
        double thd_i = 0;
        check(il_thd(current, a.idc_a, &thd_i), "spectrum");
        rep.add("thd_i", thd_i);
    }

    if (!a.out_path.empty()) {
        check(il_write_spectrum_csv(voltage, current, a.out_path.c_str()), "spectrum");
        rep.add("csv", a.out_path);
    }

    std::cout << rep.text();
    return 0;
}

// ---------------------------------------------------------------------------
// check

struct CheckArgs {
    double l_uh = 0;
    double r_ohm = 0;
    double vz_v = 0;
    double vf_v = 0;
    double rd_mohm = 0;
    double i0_a = 0;
    double izsm_a = 0;
    double tsurge_ms = 0;
    double imax_a = 0;      // 0: skip the current-rating check
    double pmax_w = 0;      // used for the budget line when given
    double lc_req_uh = 0;   // 0: skip the inductance check
    double delta_v = -1;    // < 0: skip the inrush lines
    double ilimit_a = 0;
    std::string out_path;
};

int run_check(const CheckArgs& a)
{
    Report rep;
    bool all_pass = true;

    double t_ext = 0, v_peak = 0;
    check(il_disconnect_analytic(a.l_uh * 1e-6, a.r_ohm, a.vz_v, a.vf_v, a.rd_mohm * 1e-3,
                                 a.i0_a, &t_ext, &v_peak),
          "transient");
    rep.add("transient.t_ext_s", t_ext);
    rep.add("transient.v_peak_v", v_peak);

    il_stress_report stress;
    check(il_zener_stress(a.i0_a, t_ext, a.izsm_a, a.tsurge_ms * 1e-3, &stress), "stress");
    rep.add_flag("stress.current", stress.current.pass != 0);
    rep.add("stress.current_margin_a", stress.current.margin);
    rep.add_flag("stress.time", stress.time.pass != 0);
    rep.add("stress.time_margin_s", stress.time.margin);
    all_pass = all_pass && stress.pass != 0;

    if (a.lc_req_uh > 0 || a.imax_a > 0) {
        il_inductor part;
        std::snprintf(part.name, IL_NAME_MAX, "%s", "cmdline");
        part.l_h = a.l_uh * 1e-6;
        part.r_ohm = a.r_ohm;
        part.i_max_a = a.imax_a > 0 ? a.imax_a : a.i0_a;
        part.p_max_w = a.pmax_w > 0 ? a.pmax_w : 1.0;
        il_inductor_validation validation;
        check(il_validate_inductor(&part, a.lc_req_uh * 1e-6, a.i0_a, &validation),
              "validation");
        if (a.lc_req_uh > 0) {
            rep.add_flag("validation.inductance", validation.inductance.pass != 0);
            rep.add("validation.inductance_margin_h", validation.inductance.margin);
            all_pass = all_pass && validation.inductance.pass != 0;
        }
        if (a.imax_a > 0) {
            rep.add_flag("validation.current", validation.current.pass != 0);
            rep.add("validation.current_margin_a", validation.current.margin);
            all_pass = all_pass && validation.current.pass != 0;
        }
    }

    if (a.pmax_w > 0) {
        double budget = 0;
        check(il_clamp_budget_v(a.pmax_w, a.i0_a, &budget), "budget");
        const bool within = a.vz_v + a.vf_v <= budget;
        rep.add("budget.u_lcmax_v", budget);
        rep.add_flag("budget.chain_within", within);
        all_pass = all_pass && within;
    }

    if (a.delta_v >= 0) {
        double slew = 0, t_limit = 0;
        check(il_connect_inrush(a.delta_v, a.l_uh * 1e-6, a.ilimit_a > 0 ? a.ilimit_a : a.i0_a,
                                &slew, &t_limit),
              "inrush");
        rep.add("inrush.slew_a_per_s", slew);
        rep.add("inrush.t_to_limit_s", std::isinf(t_limit) ? "unbounded" : fmt9(t_limit));
    }

    rep.add("result.checks", all_pass ? "PASS" : "FAIL");
    std::cout << rep.text();
    if (!a.out_path.empty()) write_text_file(a.out_path, rep.text());
    return all_pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"inductolink - DC-link coupling inductor design and verification"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string catalog_dir = "./catalog";
    std::string out_path;
    app.add_option("--catalog-dir", catalog_dir, "Parts catalog directory")
        ->envname("INDUCTOLINK_CATALOG");
    app.add_option("--out", out_path, "Output file (report text or CSV, per subcommand)");

    DesignArgs design;
    auto* cmd_design =
        app.add_subcommand("design", "Size the coupler and select parts from the catalog");
    cmd_design->add_option("--vll-kv", design.vll_kv, "Source line voltage, kV")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd_design->add_option("--s-kva", design.s_kva, "Source apparent power, kVA")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd_design->add_option("--f-hz", design.f_hz, "Mains frequency, Hz")
        ->check(CLI::PositiveNumber);
    cmd_design->add_option("--vdc", design.vdc_v, "DC bus voltage, V")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd_design->add_option("--percent", design.percent, "Reactor per-unit fraction (0.03 = 3%)")
        ->check(CLI::Range(0.0, 0.999999));
    cmd_design->add_option("--kmax", design.k_max, "Number of six-pulse harmonics")
        ->check(CLI::NonNegativeNumber);
    cmd_design->add_option("--vdo-v", design.vdo_v,
                           "Ripple source average, V (default: ideal six-pulse average of v_ll)")
        ->check(CLI::PositiveNumber);
    cmd_design->add_option("--idc-max", design.idc_max_a,
                           "Maximum DC current, A (default: s / v_do)")
        ->check(CLI::PositiveNumber);
    cmd_design->add_option("--inductor", design.inductor,
                           "Catalog inductor name (default: smallest l >= l_c)");
    cmd_design->add_option("--csv", design.csv_path, "Write a key,value CSV twin of the report");

    SimulateArgs simulate;
    auto* cmd_simulate =
        app.add_subcommand("simulate", "Integrate the disconnection transient and export CSV");
    cmd_simulate->add_option("--l-uh", simulate.l_uh, "Coil inductance, uH")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd_simulate->add_option("--r-ohm", simulate.r_ohm, "Coil series resistance, ohm")
        ->check(CLI::NonNegativeNumber);
    cmd_simulate->add_option("--vz-v", simulate.vz_v, "Zener voltage, V")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd_simulate->add_option("--vf-v", simulate.vf_v, "Diode forward drop, V")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd_simulate->add_option("--rd-mohm", simulate.rd_mohm, "Diode dynamic resistance, mohm")
        ->check(CLI::NonNegativeNumber);
    cmd_simulate->add_option("--i0-a", simulate.i0_a, "Initial coil current, A")
        ->required()
        ->check(CLI::NonNegativeNumber);
    cmd_simulate->add_option("--dt-us", simulate.dt_us, "Integration step, us")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd_simulate->add_option("--izsm-a", simulate.izsm_a, "Zener surge current rating, A")
        ->check(CLI::PositiveNumber);
    cmd_simulate->add_option("--tsurge-ms", simulate.tsurge_ms, "Zener surge duration rating, ms")
        ->check(CLI::PositiveNumber);

    SpectrumArgs spectrum;
    auto* cmd_spectrum =
        app.add_subcommand("spectrum", "Six-pulse ripple spectrum and THD through an RL branch");
    cmd_spectrum->add_option("--vdo-v", spectrum.vdo_v, "Average DC voltage, V")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd_spectrum->add_option("--kmax", spectrum.k_max, "Number of harmonics")
        ->check(CLI::NonNegativeNumber);
    cmd_spectrum->add_option("--r-ohm", spectrum.r_ohm, "Series resistance, ohm")
        ->check(CLI::NonNegativeNumber);
    cmd_spectrum->add_option("--l-uh", spectrum.l_uh, "Series inductance, uH")
        ->check(CLI::NonNegativeNumber);
    cmd_spectrum->add_option("--f-hz", spectrum.f_hz, "Mains frequency, Hz")
        ->check(CLI::PositiveNumber);
    cmd_spectrum->add_option("--idc-a", spectrum.idc_a, "DC reference current for current THD, A")
        ->check(CLI::PositiveNumber);

    CheckArgs chk;
    auto* cmd_check =
        app.add_subcommand("check", "Run stress checks on an explicit configuration");
    cmd_check->add_option("--l-uh", chk.l_uh, "Coil inductance, uH")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd_check->add_option("--r-ohm", chk.r_ohm, "Coil series resistance, ohm")
        ->check(CLI::NonNegativeNumber);
    cmd_check->add_option("--vz-v", chk.vz_v, "Zener voltage, V")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd_check->add_option("--vf-v", chk.vf_v, "Diode forward drop, V")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd_check->add_option("--rd-mohm", chk.rd_mohm, "Diode dynamic resistance, mohm")
        ->check(CLI::NonNegativeNumber);
    cmd_check->add_option("--i0-a", chk.i0_a, "Disconnection current, A")
        ->required()
        ->check(CLI::NonNegativeNumber);
    cmd_check->add_option("--izsm-a", chk.izsm_a, "Zener surge current rating, A")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd_check->add_option("--tsurge-ms", chk.tsurge_ms, "Zener surge duration rating, ms")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd_check->add_option("--imax-a", chk.imax_a, "Coil current rating, A (adds rating check)")
        ->check(CLI::PositiveNumber);
    cmd_check->add_option("--pmax-w", chk.pmax_w, "Coil power rating, W (adds budget check)")
        ->check(CLI::PositiveNumber);
    cmd_check->add_option("--lc-req-uh", chk.lc_req_uh,
                          "Required coupler inductance, uH (adds inductance check)")
        ->check(CLI::PositiveNumber);
    cmd_check->add_option("--delta-v", chk.delta_v,
                          "Connection voltage mismatch, V (adds inrush lines)")
        ->check(CLI::NonNegativeNumber);
    cmd_check->add_option("--ilimit-a", chk.ilimit_a, "Inrush current limit, A")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    design.catalog_dir = catalog_dir;
    design.out_path = out_path;
    simulate.out_path = out_path;
    spectrum.out_path = out_path;
    chk.out_path = out_path;

    try {
        if (cmd_design->parsed()) return run_design(design);
        if (cmd_simulate->parsed()) return run_simulate(simulate);
        if (cmd_spectrum->parsed()) return run_spectrum(spectrum);
        if (cmd_check->parsed()) return run_check(chk);
    } catch (const CliError& e) {
        std::cerr << "inductolink: " << e.message << '\n';
        return e.exit_code;
    }
    return 1;
}
