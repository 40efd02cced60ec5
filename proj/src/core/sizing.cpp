#include "core/sizing.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <tuple>

#include "core/errors.hpp"
#include "core/text.hpp"

namespace inductolink {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double compute_z_base(const SourceSpec& src)
{
    return src.v_ll_kv * src.v_ll_kv * 1000.0 / src.s_kva;
}

double ac_reactance(double z_base_ohm, double percent)
{
    if (!(z_base_ohm >= 0)) throw std::invalid_argument("z_base must be >= 0");
    if (!(percent >= 0) || percent >= 1) throw std::invalid_argument("percent must lie in [0, 1)");
    return percent * z_base_ohm;
}

double size_ac_reactor(double z_base_ohm, double percent, double f_hz)
{
    const double x_la = ac_reactance(z_base_ohm, percent);
    if (!(f_hz > 0)) throw std::domain_error("frequency must be > 0 Hz");
    return x_la / (kTwoPi * f_hz);
}

double size_dc_inductor(double l_a_h)
{
    if (!(l_a_h >= 0)) throw std::invalid_argument("l_a must be >= 0");
    return 1.7 * l_a_h;
}

CouplerDesign design_coupler(const SourceSpec& src, double percent)
{
    const double z_base = compute_z_base(src);
    const double x_la = ac_reactance(z_base, percent);
    const double l_a = size_ac_reactor(z_base, percent, src.f_hz);
    return CouplerDesign(z_base, x_la, l_a, percent);
}

double total_coil_current(double i_dc_max_a, const HarmonicSpectrum& ripple_currents)
{
    if (!(i_dc_max_a >= 0)) throw std::invalid_argument("i_dc_max must be >= 0");
    return i_dc_max_a + ripple_currents.sum_amplitudes();
}

double clamp_voltage_budget(double p_lcmax_w, double i_total_a)
{
    if (!(p_lcmax_w >= 0)) throw std::invalid_argument("p_lcmax must be >= 0");
    if (p_lcmax_w == 0) return 0.0;
    if (!(i_total_a > 0)) throw std::domain_error("total coil current must be > 0 A");
    return p_lcmax_w / i_total_a;
}

namespace {

// One violated selection constraint, scaled for cross-unit comparison.
struct Violation {
    double relative;
    std::string message;
};

void consider(std::vector<Violation>& out, bool violated, double deficit, double scale,
              const std::string& message)
{
    if (!violated) return;
    out.push_back({deficit / std::max(std::abs(scale), 1e-12), message});
}

}  // namespace

ClampSelection select_clamp_chain(double budget_v, double i_0_a, double t_required_s,
                                  const Catalog& catalog)
{
    if (catalog.zeners.empty()) throw NoFeasiblePartError("catalog contains no zener parts");
    if (catalog.diodes.empty())
        throw NoFeasiblePartError("catalog contains no freewheel diode parts");

    const ZenerPart* best_zener = nullptr;
    const FreewheelDiodePart* best_diode = nullptr;
    double best_sum = -std::numeric_limits<double>::infinity();

    // Nearest miss: the pair whose worst relative violation is smallest.
    double near_badness = std::numeric_limits<double>::infinity();
    std::string near_message;

    for (const auto& z : catalog.zeners) {
        for (const auto& d : catalog.diodes) {
            const double chain_v = z.v_z_v + d.v_f_v;
            std::vector<Violation> violations;
            consider(violations, chain_v > budget_v, chain_v - budget_v, budget_v,
                     "chain voltage " + format_double(chain_v, 6) + " V exceeds budget " +
                         format_double(budget_v, 6) + " V");
            consider(violations, z.i_zsm_a < i_0_a, i_0_a - z.i_zsm_a, i_0_a,
                     "zener surge rating " + format_double(z.i_zsm_a, 6) + " A below required " +
                         format_double(i_0_a, 6) + " A");
            consider(violations, d.i_max_a < i_0_a, i_0_a - d.i_max_a, i_0_a,
                     "diode current rating " + format_double(d.i_max_a, 6) +
                         " A below required " + format_double(i_0_a, 6) + " A");
            consider(violations, z.t_surge_s < t_required_s, t_required_s - z.t_surge_s,
                     t_required_s,
                     "zener surge duration " + format_double(z.t_surge_s, 6) +
                         " s below required " + format_double(t_required_s, 6) + " s");

            if (violations.empty()) {
                const bool better =
                    chain_v > best_sum ||
                    (chain_v == best_sum && best_zener &&
                     std::tie(z.name, d.name) < std::tie(best_zener->name, best_diode->name));
                if (better) {
                    best_zener = &z;
                    best_diode = &d;
                    best_sum = chain_v;
                }
                continue;
            }

            double worst = 0;
            const Violation* binding = nullptr;
            for (const auto& v : violations) {
                if (!binding || v.relative > worst) {
                    worst = v.relative;
                    binding = &v;
                }
            }
            if (worst < near_badness) {
                near_badness = worst;
                near_message = z.name + " + " + d.name + ": " + binding->message;
            }
        }
    }

    if (best_zener) return ClampSelection{*best_zener, *best_diode, best_sum};
    throw NoFeasiblePartError("no feasible clamp chain; closest pair " + near_message);
}

InductorValidation validate_inductor(const InductorPart& part, double l_c_required_h,
                                     double i_total_a)
{
    const LimitCheck inductance{part.l_h >= l_c_required_h, part.l_h, l_c_required_h,
                                part.l_h - l_c_required_h};
    const LimitCheck current{part.i_max_a >= i_total_a, part.i_max_a, i_total_a,
                             part.i_max_a - i_total_a};
    return InductorValidation{inductance, current};
}

InductorValidation validate_inductor(const InductorPart& part, const CouplerDesign& design,
                                     double i_total_a)
{
    return validate_inductor(part, design.l_c_h, i_total_a);
}

}  // namespace inductolink
