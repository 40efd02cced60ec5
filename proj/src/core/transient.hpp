#pragma once

#include <iosfwd>
#include <optional>

#include "core/model.hpp"

namespace inductolink {

// Zener + freewheel diode pair forming the coil discharge path. The zener
// is modeled as an ideal threshold; the freewheel diode as a threshold plus
// its dynamic resistance.
struct ClampChain {
    double v_z_v;
    double v_f_v;
    double r_d_ohm;

    ClampChain(double v_z_v, double v_f_v, double r_d_ohm);
    static ClampChain from_parts(const ZenerPart& zener, const FreewheelDiodePart& diode);

    double v_eff_v() const { return v_z_v + v_f_v; }
};

// Closed-form solution of the discharge loop
//   l di/dt = -(r_c + r_d) i - v_eff,   i(0) = i_0,
// valid until the current reaches zero and the diode blocks:
//   r_tot > 0:  i(t) = (i_0 + v_eff/r_tot) exp(-r_tot t / l) - v_eff/r_tot,
//               t_ext = (l / r_tot) ln(1 + i_0 r_tot / v_eff)
//   r_tot = 0:  linear ramp, t_ext = l i_0 / v_eff.
struct AnalyticDisconnect {
    double l_h;
    double r_tot_ohm;
    double v_eff_v;
    double i_0_a;
    double t_ext_s;
    double v_peak_v;  // clamp-path drop at t = 0: v_eff + r_d * i_0

    // Current at time t, clamped to zero past extinction.
    double current_at(double t_s) const;
};

AnalyticDisconnect disconnect_analytic(double l_h, double r_c_ohm, const ClampChain& chain,
                                       double i_0_a);

// Fixed-step 4th-order integration of the same ODE, one sample per step,
// final sample linearly interpolated to i = 0. Coil-terminal voltage is the
// clamp-path drop v_eff + r_d i(t); dissipated energy is the trapezoid
// integral of r_tot i^2 + v_eff i over the samples. Requires
// dt <= t_ext / 100. i_0 = 0 yields an empty result.
TransientResult simulate_disconnect(double l_h, double r_c_ohm, const ClampChain& chain,
                                    double i_0_a, double dt_s);
TransientResult simulate_disconnect(const InductorPart& part, const ClampChain& chain,
                                    double i_0_a, double dt_s);

// Surge check of the clamp event against the zener ratings: initial current
// against i_zsm and extinction time against t_surge. Margins are
// limit - actual (>= 0 iff pass).
struct StressReport {
    LimitCheck current;
    LimitCheck time;

    bool pass() const { return current.pass && time.pass; }
};

StressReport zener_stress_check(double i_initial_a, double t_ext_s, double i_zsm_a,
                                double t_surge_s);
StressReport zener_stress_check(double i_initial_a, double t_ext_s, const ZenerPart& zener);
StressReport zener_stress_check(const TransientResult& result, const ZenerPart& zener);

// Worst-case connection behaviour with a voltage mismatch delta_v across
// the coupler: current slew delta_v / l_c and, for delta_v > 0, the time to
// reach i_limit. Resistance is neglected (fastest possible slew).
struct InrushResult {
    double slew_a_per_s;
    std::optional<double> t_to_limit_s;  // empty when delta_v <= 0
};

InrushResult connect_inrush(double delta_v_v, double l_c_h, double i_limit_a);

// CSV export with header "t_s,i_A,v_coil_V", one row per sample.
void write_waveform_csv(const TransientResult& result, std::ostream& out);

}  // namespace inductolink
