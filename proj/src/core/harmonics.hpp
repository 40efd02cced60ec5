#pragma once

#include <iosfwd>

#include "core/model.hpp"

namespace inductolink {

// DC-side ripple voltage of an ideal six-pulse rectifier whose average
// output is v_do: entries at orders n = 6k for k = 1..k_max with peak
// amplitude v_do * 2 / (n^2 - 1). Zero commutation overlap, zero firing
// angle.
HarmonicSpectrum six_pulse_voltage_spectrum(double v_do_v, int k_max, double f0_hz);

// Ripple currents through a series RL branch: i_n = v_n / |r + j n w0 l|.
HarmonicSpectrum ripple_current_spectrum(const HarmonicSpectrum& v_spec, double r_ohm,
                                         double l_h);

// Total harmonic distortion: sqrt(sum of squared amplitudes) / base. The
// base is the fundamental or DC reference in the same peak convention.
double thd(const HarmonicSpectrum& spec, double base);

struct AttenuationEntry {
    int order;
    double factor;  // current with l_base + l_added over current with l_base
};

// The band from the rule-of-thumb expectation that the series reactor cuts
// current THD to roughly half; the report records whether the computed
// ratio lands in it, nothing asserts it.
inline constexpr double kThdRatioBandLow = 0.3;
inline constexpr double kThdRatioBandHigh = 0.7;

struct AttenuationReport {
    std::vector<AttenuationEntry> factors;
    double thd_before;
    double thd_after;
    double thd_ratio;        // thd_after / thd_before; independent of i_ref
    bool ratio_within_band;  // thd_ratio in [kThdRatioBandLow, kThdRatioBandHigh]
};

// Effect of inserting l_added in series with an (r_base, l_base) branch:
// per-order current attenuation factors plus THD before/after. i_ref is the
// reference current for the THD values; the ratio does not depend on it.
AttenuationReport attenuation_report(const HarmonicSpectrum& v_spec, double r_base_ohm,
                                     double l_base_h, double l_added_h, double i_ref_a = 1.0);

// CSV export with header "order,f_Hz,v_peak,i_peak". Both spectra must have
// the same orders and base frequency.
void write_spectrum_csv(const HarmonicSpectrum& voltage, const HarmonicSpectrum& current,
                        std::ostream& out);

}  // namespace inductolink
