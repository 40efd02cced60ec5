#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace inductolink {

// Electrical ratings of one generation source. Line voltage and apparent
// power stay in the kV/kVA the ratings are quoted in; everything derived
// from them is SI (V, A, H, ohm, s).
struct SourceSpec {
    double v_ll_kv;  // line voltage, kV
    double s_kva;    // apparent power, kVA
    double f_hz;     // mains frequency, Hz
    double v_dc_v;   // DC bus voltage, V

    SourceSpec(double v_ll_kv, double s_kva, double f_hz, double v_dc_v);
};

struct HarmonicEntry {
    int order;         // harmonic order n relative to the mains frequency
    double amplitude;  // peak value; volts or amperes depending on producer

    bool operator==(const HarmonicEntry&) const = default;
};

// Ripple content as (order, peak amplitude) pairs against a mains frequency.
// Orders are strictly increasing positive integers; amplitudes are >= 0.
struct HarmonicSpectrum {
    double f0_hz;
    std::vector<HarmonicEntry> entries;

    HarmonicSpectrum(double f0_hz, std::vector<HarmonicEntry> entries);

    bool empty() const { return entries.empty(); }
    std::size_t size() const { return entries.size(); }
    double sum_amplitudes() const;
};

// Thevenin reduction of both sides of the coupling circuit: converter side
// (v_i, z_i), network side (v_o, z_o), plus the converter's ripple source.
// Zero impedance on both sides is the worst case for sizing and the default.
struct CouplingNetworkModel {
    double v_i_v;
    double z_i_ohm;
    double v_o_v;
    double z_o_ohm;
    HarmonicSpectrum ripple;

    CouplingNetworkModel(double v_i_v, double z_i_ohm, double v_o_v, double z_o_ohm,
                         HarmonicSpectrum ripple);

    static CouplingNetworkModel worst_case(double v_i_v, double v_o_v, HarmonicSpectrum ripple);
};

// Results of the sizing chain. l_c_h is always exactly 1.7 * l_a_h; x_la_ohm
// is percent * z_base_ohm. percent is a fraction (0.03 means 3 %).
struct CouplerDesign {
    double z_base_ohm;
    double x_la_ohm;
    double l_a_h;
    double l_c_h;
    double percent;

    CouplerDesign(double z_base_ohm, double x_la_ohm, double l_a_h, double percent);
};

struct InductorPart {
    std::string name;
    double l_h;      // inductance
    double r_ohm;    // series resistance
    double i_max_a;  // continuous current rating
    double p_max_w;  // maximum dissipated power

    InductorPart(std::string name, double l_h, double r_ohm, double i_max_a, double p_max_w);
    bool operator==(const InductorPart&) const = default;
};

struct ZenerPart {
    std::string name;
    double v_z_v;      // zener voltage
    double i_zsm_a;    // maximum non-repetitive surge current
    double t_surge_s;  // rated surge duration

    ZenerPart(std::string name, double v_z_v, double i_zsm_a, double t_surge_s);
    bool operator==(const ZenerPart&) const = default;
};

struct FreewheelDiodePart {
    std::string name;
    double v_f_v;    // forward drop
    double i_max_a;  // current rating
    double v_r_v;    // reverse blocking voltage
    double r_d_ohm;  // dynamic resistance

    FreewheelDiodePart(std::string name, double v_f_v, double i_max_a, double v_r_v,
                       double r_d_ohm);
    bool operator==(const FreewheelDiodePart&) const = default;
};

struct TransientSample {
    double t_s;
    double i_a;
    double v_coil_v;
};

// Sampled disconnection waveform plus derived scalars. Current is
// non-increasing over the samples and ends at zero; for i_0 = 0 the sample
// list is empty and every scalar is zero.
struct TransientResult {
    std::vector<TransientSample> samples;
    double t_ext_s;
    double v_peak_v;
    double e_dissipated_j;
    double i_zener_initial_a;

    TransientResult(std::vector<TransientSample> samples, double t_ext_s, double v_peak_v,
                    double e_dissipated_j, double i_zener_initial_a);
};

// A pass/fail comparison of one quantity against its limit. The sign
// convention is margin >= 0 iff the check passes; each producing operation
// documents which direction "actual vs limit" is compared in.
struct LimitCheck {
    bool pass;
    double actual;
    double limit;
    double margin;
};

struct Catalog {
    std::vector<InductorPart> inductors;
    std::vector<ZenerPart> zeners;
    std::vector<FreewheelDiodePart> diodes;
};

// Catalog persistence. A catalog directory holds inductors.csv, zeners.csv
// and diodes.csv. Format: UTF-8, comma separated, '#' comment lines and
// blank lines permitted, one fixed header row per file:
//   inductors.csv  name,l_H,r_ohm,i_max_A,p_max_W
//   zeners.csv     name,v_z_V,i_zsm_A,t_surge_s
//   diodes.csv     name,v_f_V,i_max_A,v_r_V,r_d_ohm
// Duplicate part names within a file are rejected.
Catalog load_catalog(const std::filesystem::path& dir);
void save_catalog(const Catalog& catalog, const std::filesystem::path& dir);

std::vector<InductorPart> load_inductors_csv(const std::filesystem::path& file);
std::vector<ZenerPart> load_zeners_csv(const std::filesystem::path& file);
std::vector<FreewheelDiodePart> load_diodes_csv(const std::filesystem::path& file);

}  // namespace inductolink
