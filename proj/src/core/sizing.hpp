#pragma once

#include "core/model.hpp"

namespace inductolink {

// Base impedance of a source from its ratings: v_ll^2 * 1000 / s, with v_ll
// in kV and s in kVA. Result in ohms.
double compute_z_base(const SourceSpec& src);

// Reactance of the AC-side series reactor at the given per-unit fraction.
double ac_reactance(double z_base_ohm, double percent);

// Inductance of the AC-side reactor: percent * z_base / (2 pi f).
double size_ac_reactor(double z_base_ohm, double percent, double f_hz);

// DC coupler inductance, 1.7 times the AC reactor value.
double size_dc_inductor(double l_a_h);

// Full sizing chain from ratings to a CouplerDesign.
CouplerDesign design_coupler(const SourceSpec& src, double percent = 0.03);

// Maximum coil current: DC maximum plus the arithmetic sum of the ripple
// harmonic amplitudes (worst-case alignment of the harmonic terms).
double total_coil_current(double i_dc_max_a, const HarmonicSpectrum& ripple_currents);

// Maximum clamp-chain voltage the inductor's power rating permits:
// p_lcmax / i_total.
double clamp_voltage_budget(double p_lcmax_w, double i_total_a);

struct ClampSelection {
    ZenerPart zener;
    FreewheelDiodePart diode;
    double chain_voltage_v;  // zener.v_z_v + diode.v_f_v
};

// Picks the zener + freewheel diode pair with v_z + v_f <= budget,
// i_zsm >= i_0, diode i_max >= i_0 and t_surge >= t_required. Among feasible
// pairs the highest chain voltage wins (fastest coil discharge); ties break
// on (zener name, diode name). Throws NoFeasiblePartError naming the
// nearest-miss constraint when nothing qualifies.
ClampSelection select_clamp_chain(double budget_v, double i_0_a, double t_required_s,
                                  const Catalog& catalog);

// Checks a concrete inductor part against the computed design: l >= l_c and
// i_max >= i_total. Margins are actual - required (>= 0 iff pass).
struct InductorValidation {
    LimitCheck inductance;
    LimitCheck current;

    bool all_pass() const { return inductance.pass && current.pass; }
};

InductorValidation validate_inductor(const InductorPart& part, double l_c_required_h,
                                     double i_total_a);
InductorValidation validate_inductor(const InductorPart& part, const CouplerDesign& design,
                                     double i_total_a);

}  // namespace inductolink
