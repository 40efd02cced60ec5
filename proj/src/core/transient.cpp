#include "core/transient.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "core/errors.hpp"
#include "core/text.hpp"

namespace inductolink {

namespace {

// Keeps a pathologically fine dt from exhausting memory; well beyond any
// step size the resolution guard makes useful.
constexpr double kMaxSteps = 5e7;

void check_discharge_args(double l_h, double r_c_ohm, double i_0_a)
{
    if (!(l_h > 0)) throw std::invalid_argument("inductance must be > 0 H");
    if (!(r_c_ohm >= 0)) throw std::invalid_argument("coil resistance must be >= 0 ohm");
    if (!(i_0_a >= 0)) throw std::invalid_argument("initial current must be >= 0 A");
}

template <typename Fn>
double rk4_step(double y, double dt, Fn&& f)
{
    const double k1 = f(y);
    const double k2 = f(y + 0.5 * dt * k1);
    const double k3 = f(y + 0.5 * dt * k2);
    const double k4 = f(y + dt * k3);
    return y + dt / 6.0 * (k1 + 2.0 * (k2 + k3) + k4);
}

}  // namespace

ClampChain::ClampChain(double v_z_v_, double v_f_v_, double r_d_ohm_)
    : v_z_v(v_z_v_), v_f_v(v_f_v_), r_d_ohm(r_d_ohm_)
{
    if (!(std::isfinite(v_z_v) && v_z_v > 0)) throw ValidationError("clamp v_z must be > 0 V");
    if (!(std::isfinite(v_f_v) && v_f_v > 0)) throw ValidationError("clamp v_f must be > 0 V");
    if (!(std::isfinite(r_d_ohm) && r_d_ohm >= 0))
        throw ValidationError("clamp r_d must be >= 0 ohm");
}

ClampChain ClampChain::from_parts(const ZenerPart& zener, const FreewheelDiodePart& diode)
{
    return ClampChain(zener.v_z_v, diode.v_f_v, diode.r_d_ohm);
}

AnalyticDisconnect disconnect_analytic(double l_h, double r_c_ohm, const ClampChain& chain,
                                       double i_0_a)
{
    check_discharge_args(l_h, r_c_ohm, i_0_a);
    const double r_tot = r_c_ohm + chain.r_d_ohm;
    const double v_eff = chain.v_eff_v();

    double t_ext = 0;
    if (i_0_a > 0) {
        t_ext = r_tot > 0 ? (l_h / r_tot) * std::log1p(i_0_a * r_tot / v_eff)
                          : l_h * i_0_a / v_eff;
    }
    return AnalyticDisconnect{l_h, r_tot, v_eff, i_0_a, t_ext, v_eff + chain.r_d_ohm * i_0_a};
}

double AnalyticDisconnect::current_at(double t_s) const
{
    if (t_s <= 0) return i_0_a;
    if (t_s >= t_ext_s) return 0.0;
    if (r_tot_ohm > 0) {
        const double i_inf = v_eff_v / r_tot_ohm;
        return (i_0_a + i_inf) * std::exp(-r_tot_ohm * t_s / l_h) - i_inf;
    }
    return i_0_a - v_eff_v * t_s / l_h;
}

TransientResult simulate_disconnect(double l_h, double r_c_ohm, const ClampChain& chain,
                                    double i_0_a, double dt_s)
{
    check_discharge_args(l_h, r_c_ohm, i_0_a);
    if (i_0_a == 0) return TransientResult({}, 0.0, 0.0, 0.0, 0.0);

    const double t_ext_ref = disconnect_analytic(l_h, r_c_ohm, chain, i_0_a).t_ext_s;
    if (!(dt_s > 0) || dt_s > t_ext_ref / 100.0)
        throw ResolutionError("dt = " + format_double(dt_s, 6) + " s too coarse; need dt <= " +
                              format_double(t_ext_ref / 100.0, 6) +
                              " s (t_ext / 100) for this configuration");
    if (t_ext_ref / dt_s > kMaxSteps)
        throw ResolutionError("dt = " + format_double(dt_s, 6) +
                              " s needs more than 5e7 steps for this configuration");

    const double r_tot = r_c_ohm + chain.r_d_ohm;
    const double v_eff = chain.v_eff_v();
    const auto di_dt = [&](double i) { return -(r_tot * i + v_eff) / l_h; };
    const auto coil_v = [&](double i) { return v_eff + chain.r_d_ohm * i; };

    std::vector<TransientSample> samples;
    samples.reserve(static_cast<std::size_t>(t_ext_ref / dt_s) + 2);
    samples.push_back({0.0, i_0_a, coil_v(i_0_a)});

    double i = i_0_a;
    double t_ext = 0;
    for (long step = 1;; ++step) {
        const double next = rk4_step(i, dt_s, di_dt);
        const double t_prev = (step - 1) * dt_s;
        if (next <= 0) {
            // The diode blocks at the zero crossing; locate it on the chord
            // of the final step. If the crossing rounds onto the previous
            // sample time (current already at the rounding floor), zero that
            // sample instead of duplicating its time.
            const double t_cross = t_prev + dt_s * (i / (i - next));
            if (t_cross <= samples.back().t_s) {
                samples.back().i_a = 0.0;
                samples.back().v_coil_v = v_eff;
                t_ext = samples.back().t_s;
            } else {
                t_ext = t_cross;
                samples.push_back({t_ext, 0.0, v_eff});
            }
            break;
        }
        samples.push_back({step * dt_s, next, coil_v(next)});
        i = next;
    }

    double energy = 0;
    for (std::size_t k = 1; k < samples.size(); ++k) {
        const double ia = samples[k - 1].i_a;
        const double ib = samples[k].i_a;
        const double ga = r_tot * ia * ia + v_eff * ia;
        const double gb = r_tot * ib * ib + v_eff * ib;
        energy += 0.5 * (ga + gb) * (samples[k].t_s - samples[k - 1].t_s);
    }

    return TransientResult(std::move(samples), t_ext, coil_v(i_0_a), energy, i_0_a);
}

TransientResult simulate_disconnect(const InductorPart& part, const ClampChain& chain,
                                    double i_0_a, double dt_s)
{
    return simulate_disconnect(part.l_h, part.r_ohm, chain, i_0_a, dt_s);
}

StressReport zener_stress_check(double i_initial_a, double t_ext_s, double i_zsm_a,
                                double t_surge_s)
{
    const LimitCheck current{i_initial_a <= i_zsm_a, i_initial_a, i_zsm_a,
                             i_zsm_a - i_initial_a};
    const LimitCheck time{t_ext_s <= t_surge_s, t_ext_s, t_surge_s, t_surge_s - t_ext_s};
    return StressReport{current, time};
}

StressReport zener_stress_check(double i_initial_a, double t_ext_s, const ZenerPart& zener)
{
    return zener_stress_check(i_initial_a, t_ext_s, zener.i_zsm_a, zener.t_surge_s);
}

StressReport zener_stress_check(const TransientResult& result, const ZenerPart& zener)
{
    return zener_stress_check(result.i_zener_initial_a, result.t_ext_s, zener.i_zsm_a,
                              zener.t_surge_s);
}

InrushResult connect_inrush(double delta_v_v, double l_c_h, double i_limit_a)
{
    if (!(l_c_h > 0)) throw std::invalid_argument("l_c must be > 0 H");
    if (!(i_limit_a > 0)) throw std::invalid_argument("i_limit must be > 0 A");

    InrushResult result{delta_v_v / l_c_h, std::nullopt};
    if (delta_v_v > 0) result.t_to_limit_s = i_limit_a * l_c_h / delta_v_v;
    return result;
}

void write_waveform_csv(const TransientResult& result, std::ostream& out)
{
    out << "t_s,i_A,v_coil_V\n";
    for (const auto& s : result.samples)
        out << format_double(s.t_s) << ',' << format_double(s.i_a) << ','
            << format_double(s.v_coil_v) << '\n';
}

}  // namespace inductolink
