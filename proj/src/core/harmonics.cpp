#include "core/harmonics.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "core/errors.hpp"
#include "core/text.hpp"

namespace inductolink {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

HarmonicSpectrum six_pulse_voltage_spectrum(double v_do_v, int k_max, double f0_hz)
{
    if (!(v_do_v >= 0)) throw std::invalid_argument("v_do must be >= 0 V");
    if (k_max < 0) throw std::invalid_argument("k_max must be >= 0");

    std::vector<HarmonicEntry> entries;
    entries.reserve(static_cast<std::size_t>(k_max));
    for (int k = 1; k <= k_max; ++k) {
        const int n = 6 * k;
        const double nn = static_cast<double>(n) * n;
        entries.push_back({n, v_do_v * 2.0 / (nn - 1.0)});
    }
    return HarmonicSpectrum(f0_hz, std::move(entries));
}

HarmonicSpectrum ripple_current_spectrum(const HarmonicSpectrum& v_spec, double r_ohm, double l_h)
{
    if (!(r_ohm >= 0)) throw std::invalid_argument("r must be >= 0 ohm");
    if (!(l_h >= 0)) throw std::invalid_argument("l must be >= 0 H");
    if (r_ohm == 0 && l_h == 0)
        throw std::domain_error("series impedance is degenerate (r = 0 and l = 0)");

    std::vector<HarmonicEntry> entries;
    entries.reserve(v_spec.size());
    for (const auto& e : v_spec.entries) {
        const double x = e.order * kTwoPi * v_spec.f0_hz * l_h;
        entries.push_back({e.order, e.amplitude / std::hypot(r_ohm, x)});
    }
    return HarmonicSpectrum(v_spec.f0_hz, std::move(entries));
}

double thd(const HarmonicSpectrum& spec, double base)
{
    if (!(base > 0)) throw std::domain_error("thd reference must be > 0");
    double sum_sq = 0;
    for (const auto& e : spec.entries) sum_sq += e.amplitude * e.amplitude;
    return std::sqrt(sum_sq) / base;
}

AttenuationReport attenuation_report(const HarmonicSpectrum& v_spec, double r_base_ohm,
                                     double l_base_h, double l_added_h, double i_ref_a)
{
    if (!(l_added_h >= 0)) throw std::invalid_argument("l_added must be >= 0 H");
    if (!(i_ref_a > 0)) throw std::domain_error("thd reference current must be > 0 A");

    const HarmonicSpectrum before = ripple_current_spectrum(v_spec, r_base_ohm, l_base_h);
    const HarmonicSpectrum after =
        ripple_current_spectrum(v_spec, r_base_ohm, l_base_h + l_added_h);

    AttenuationReport report;
    report.factors.reserve(before.size());
    for (std::size_t i = 0; i < before.size(); ++i) {
        const double ib = before.entries[i].amplitude;
        const double ia = after.entries[i].amplitude;
        report.factors.push_back({before.entries[i].order, ib > 0 ? ia / ib : 1.0});
    }
    report.thd_before = thd(before, i_ref_a);
    report.thd_after = thd(after, i_ref_a);
    report.thd_ratio = report.thd_before > 0 ? report.thd_after / report.thd_before : 1.0;
    report.ratio_within_band =
        report.thd_ratio >= kThdRatioBandLow && report.thd_ratio <= kThdRatioBandHigh;
    return report;
}

void write_spectrum_csv(const HarmonicSpectrum& voltage, const HarmonicSpectrum& current,
                        std::ostream& out)
{
    if (voltage.f0_hz != current.f0_hz)
        throw std::invalid_argument("voltage and current spectra disagree on base frequency");
    if (voltage.size() != current.size())
        throw std::invalid_argument("voltage and current spectra disagree on length");

    out << "order,f_Hz,v_peak,i_peak\n";
    for (std::size_t i = 0; i < voltage.size(); ++i) {
        const auto& v = voltage.entries[i];
        const auto& c = current.entries[i];
        if (v.order != c.order)
            throw std::invalid_argument("voltage and current spectra disagree on orders");
        out << v.order << ',' << format_double(v.order * voltage.f0_hz) << ','
            << format_double(v.amplitude) << ',' << format_double(c.amplitude) << '\n';
    }
}

}  // namespace inductolink
