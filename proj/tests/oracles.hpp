// Test-only reference implementations, kept independent of the library code
// they are used to check.

#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "core/model.hpp"

namespace oracles {

// Ideal six-pulse rectifier output: the cap of a cosine repeating every
// sixth of the mains cycle. theta is the mains angle; the average over a
// period is v_do.
inline double six_pulse_wave(double theta, double v_do)
{
    constexpr double pi = std::numbers::pi;
    const double v_pk = v_do * pi / 3.0;
    double phi = std::fmod(theta + pi / 6.0, pi / 3.0);
    if (phi < 0) phi += pi / 3.0;
    return v_pk * std::cos(phi - pi / 6.0);
}

// Samples one full mains cycle. n should be a multiple of 6 so that pulse
// harmonics alias only onto pulse harmonics.
inline std::vector<double> sample_six_pulse_cycle(double v_do, std::size_t n)
{
    constexpr double two_pi = 2.0 * std::numbers::pi;
    std::vector<double> samples(n);
    for (std::size_t j = 0; j < n; ++j)
        samples[j] = six_pulse_wave(two_pi * static_cast<double>(j) / static_cast<double>(n), v_do);
    return samples;
}

// Peak amplitude of one harmonic by direct discrete Fourier transform.
inline double dft_amplitude(const std::vector<double>& samples, int order)
{
    constexpr double two_pi = 2.0 * std::numbers::pi;
    const double n = static_cast<double>(samples.size());
    double re = 0;
    double im = 0;
    for (std::size_t j = 0; j < samples.size(); ++j) {
        const double angle = two_pi * order * static_cast<double>(j) / n;
        re += samples[j] * std::cos(angle);
        im -= samples[j] * std::sin(angle);
    }
    return 2.0 * std::hypot(re, im) / n;
}

inline double dft_mean(const std::vector<double>& samples)
{
    double sum = 0;
    for (double s : samples) sum += s;
    return sum / static_cast<double>(samples.size());
}

// Exhaustive clamp-chain selection: every (zener, diode) pair, the same
// feasibility constraints and objective as the library contract, written as
// a plain filter-then-max scan.
struct BruteForceSelection {
    std::string zener_name;
    std::string diode_name;
    double chain_voltage;
};

inline std::optional<BruteForceSelection> brute_force_select(const inductolink::Catalog& cat,
                                                             double budget, double i_0,
                                                             double t_required)
{
    std::optional<BruteForceSelection> best;
    for (const auto& z : cat.zeners) {
        if (z.i_zsm_a < i_0 || z.t_surge_s < t_required) continue;
        for (const auto& d : cat.diodes) {
            if (d.i_max_a < i_0) continue;
            const double sum = z.v_z_v + d.v_f_v;
            if (sum > budget) continue;
            const bool take =
                !best || sum > best->chain_voltage ||
                (sum == best->chain_voltage &&
                 std::pair(z.name, d.name) < std::pair(best->zener_name, best->diode_name));
            if (take) best = BruteForceSelection{z.name, d.name, sum};
        }
    }
    return best;
}

}  // namespace oracles
