#include "core/model.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <unordered_set>

#include "core/errors.hpp"
#include "core/text.hpp"

namespace fs = std::filesystem;

namespace inductolink {

namespace {

bool finite(double v) { return std::isfinite(v); }

void require(bool cond, const std::string& msg)
{
    if (!cond) throw ValidationError(msg);
}

void check_part_name(const std::string& name)
{
    require(!name.empty(), "part name must not be empty");
    require(name.size() < 64, "part name '" + name + "' too long (max 63 bytes)");
    for (char c : name) {
        require(c != ',' && c != '#' && static_cast<unsigned char>(c) >= 0x20,
                "part name '" + name + "' contains a comma, '#' or control character");
    }
}

}  // namespace

SourceSpec::SourceSpec(double v_ll_kv_, double s_kva_, double f_hz_, double v_dc_v_)
    : v_ll_kv(v_ll_kv_), s_kva(s_kva_), f_hz(f_hz_), v_dc_v(v_dc_v_)
{
    require(finite(v_ll_kv) && v_ll_kv > 0, "source v_ll must be > 0 kV");
    require(finite(s_kva) && s_kva > 0, "source s must be > 0 kVA");
    require(finite(f_hz) && f_hz > 0, "source f must be > 0 Hz");
    require(finite(v_dc_v) && v_dc_v > 0, "source v_dc must be > 0 V");
}

HarmonicSpectrum::HarmonicSpectrum(double f0_hz_, std::vector<HarmonicEntry> entries_)
    : f0_hz(f0_hz_), entries(std::move(entries_))
{
    require(finite(f0_hz) && f0_hz > 0, "spectrum base frequency must be > 0 Hz");
    int previous = 0;
    for (const auto& e : entries) {
        require(e.order > previous, "spectrum orders must be strictly increasing positive integers");
        require(finite(e.amplitude) && e.amplitude >= 0, "spectrum amplitudes must be >= 0");
        previous = e.order;
    }
}

double HarmonicSpectrum::sum_amplitudes() const
{
    double sum = 0;
    for (const auto& e : entries) sum += e.amplitude;
    return sum;
}

CouplingNetworkModel::CouplingNetworkModel(double v_i_v_, double z_i_ohm_, double v_o_v_,
                                           double z_o_ohm_, HarmonicSpectrum ripple_)
    : v_i_v(v_i_v_), z_i_ohm(z_i_ohm_), v_o_v(v_o_v_), z_o_ohm(z_o_ohm_),
      ripple(std::move(ripple_))
{
    require(finite(v_i_v) && finite(v_o_v), "network model voltages must be finite");
    require(finite(z_i_ohm) && z_i_ohm >= 0, "converter-side impedance must be >= 0");
    require(finite(z_o_ohm) && z_o_ohm >= 0, "network-side impedance must be >= 0");
}

CouplingNetworkModel CouplingNetworkModel::worst_case(double v_i_v, double v_o_v,
                                                      HarmonicSpectrum ripple)
{
    return CouplingNetworkModel(v_i_v, 0.0, v_o_v, 0.0, std::move(ripple));
}

CouplerDesign::CouplerDesign(double z_base_ohm_, double x_la_ohm_, double l_a_h_, double percent_)
    : z_base_ohm(z_base_ohm_), x_la_ohm(x_la_ohm_), l_a_h(l_a_h_), l_c_h(1.7 * l_a_h_),
      percent(percent_)
{
    require(finite(z_base_ohm) && z_base_ohm >= 0, "z_base must be >= 0");
    require(finite(x_la_ohm) && x_la_ohm >= 0, "x_la must be >= 0");
    require(finite(l_a_h) && l_a_h >= 0, "l_a must be >= 0");
    require(finite(percent) && percent >= 0 && percent < 1, "percent must lie in [0, 1)");
    const double expected = percent * z_base_ohm;
    require(std::abs(x_la_ohm - expected) <= 1e-9 * std::max(1.0, std::abs(expected)),
            "x_la is not percent * z_base");
}

InductorPart::InductorPart(std::string name_, double l_h_, double r_ohm_, double i_max_a_,
                           double p_max_w_)
    : name(std::move(name_)), l_h(l_h_), r_ohm(r_ohm_), i_max_a(i_max_a_), p_max_w(p_max_w_)
{
    check_part_name(name);
    require(finite(l_h) && l_h > 0, "inductor '" + name + "': l must be > 0 H");
    require(finite(r_ohm) && r_ohm >= 0, "inductor '" + name + "': r must be >= 0 ohm");
    require(finite(i_max_a) && i_max_a > 0, "inductor '" + name + "': i_max must be > 0 A");
    require(finite(p_max_w) && p_max_w > 0, "inductor '" + name + "': p_max must be > 0 W");
}

ZenerPart::ZenerPart(std::string name_, double v_z_v_, double i_zsm_a_, double t_surge_s_)
    : name(std::move(name_)), v_z_v(v_z_v_), i_zsm_a(i_zsm_a_), t_surge_s(t_surge_s_)
{
    check_part_name(name);
    require(finite(v_z_v) && v_z_v > 0, "zener '" + name + "': v_z must be > 0 V");
    require(finite(i_zsm_a) && i_zsm_a > 0, "zener '" + name + "': i_zsm must be > 0 A");
    require(finite(t_surge_s) && t_surge_s > 0, "zener '" + name + "': t_surge must be > 0 s");
}

FreewheelDiodePart::FreewheelDiodePart(std::string name_, double v_f_v_, double i_max_a_,
                                       double v_r_v_, double r_d_ohm_)
    : name(std::move(name_)), v_f_v(v_f_v_), i_max_a(i_max_a_), v_r_v(v_r_v_), r_d_ohm(r_d_ohm_)
{
    check_part_name(name);
    require(finite(v_f_v) && v_f_v > 0, "diode '" + name + "': v_f must be > 0 V");
    require(finite(i_max_a) && i_max_a > 0, "diode '" + name + "': i_max must be > 0 A");
    require(finite(v_r_v) && v_r_v > 0, "diode '" + name + "': v_r must be > 0 V");
    require(finite(r_d_ohm) && r_d_ohm > 0, "diode '" + name + "': r_d must be > 0 ohm");
}

TransientResult::TransientResult(std::vector<TransientSample> samples_, double t_ext_s_,
                                 double v_peak_v_, double e_dissipated_j_,
                                 double i_zener_initial_a_)
    : samples(std::move(samples_)), t_ext_s(t_ext_s_), v_peak_v(v_peak_v_),
      e_dissipated_j(e_dissipated_j_), i_zener_initial_a(i_zener_initial_a_)
{
    require(finite(t_ext_s) && t_ext_s >= 0, "t_ext must be >= 0");
    require(finite(v_peak_v) && v_peak_v >= 0, "v_peak must be >= 0");
    require(finite(e_dissipated_j) && e_dissipated_j >= 0, "dissipated energy must be >= 0");
    require(finite(i_zener_initial_a) && i_zener_initial_a >= 0, "initial current must be >= 0");
    if (samples.empty()) return;

    double prev_t = -1.0;
    double prev_i = std::numeric_limits<double>::infinity();
    for (const auto& s : samples) {
        require(finite(s.t_s) && s.t_s > prev_t, "sample times must be strictly increasing");
        require(finite(s.i_a) && s.i_a <= prev_i, "sampled current must be non-increasing");
        prev_t = s.t_s;
        prev_i = s.i_a;
    }
    const double i_tol = 1e-9 * std::max(1.0, i_zener_initial_a);
    require(std::abs(samples.back().i_a) <= i_tol, "final sampled current must be zero");
    require(t_ext_s <= samples.back().t_s * (1 + 1e-12), "t_ext must not exceed the last sample time");
}

// ---------------------------------------------------------------------------
// Catalog CSV

namespace {

constexpr const char* kInductorHeader = "name,l_H,r_ohm,i_max_A,p_max_W";
constexpr const char* kZenerHeader = "name,v_z_V,i_zsm_A,t_surge_s";
constexpr const char* kDiodeHeader = "name,v_f_V,i_max_A,v_r_V,r_d_ohm";

struct CsvRow {
    std::size_t line_no;
    std::vector<std::string> fields;
};

std::string loc(const fs::path& file, std::size_t line_no)
{
    return file.filename().string() + ", row " + std::to_string(line_no);
}

std::vector<std::string> split_fields(const std::string& line)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = line.find(',', start);
        if (pos == std::string::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

// Reads all data rows, enforcing the exact expected header on the first
// non-comment line.
std::vector<CsvRow> read_csv(const fs::path& file, const char* expected_header,
                             std::size_t n_fields)
{
    std::ifstream in(file);
    if (!in) throw IoError("cannot open catalog file " + file.string());

    std::vector<CsvRow> rows;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            if (line != expected_header)
                throw ParseError(loc(file, line_no) + ": expected header '" +
                                 expected_header + "', got '" + line + "'");
            header_seen = true;
            continue;
        }
        CsvRow row{line_no, split_fields(line)};
        if (row.fields.size() != n_fields)
            throw ParseError(loc(file, line_no) + ": expected " + std::to_string(n_fields) +
                             " fields, got " + std::to_string(row.fields.size()));
        rows.push_back(std::move(row));
    }
    if (!header_seen)
        throw ParseError(file.filename().string() + ": missing header row '" +
                         std::string(expected_header) + "'");
    return rows;
}

double parse_number(const fs::path& file, const CsvRow& row, std::size_t idx)
{
    const std::string& f = row.fields[idx];
    double value = 0;
    auto res = std::from_chars(f.data(), f.data() + f.size(), value);
    if (res.ec != std::errc{} || res.ptr != f.data() + f.size())
        throw ParseError(loc(file, row.line_no) + ": malformed number '" + f + "' in field " +
                         std::to_string(idx + 1));
    return value;
}

void reject_duplicate(const fs::path& file, const CsvRow& row,
                      std::unordered_set<std::string>& seen)
{
    if (!seen.insert(row.fields[0]).second)
        throw ValidationError(loc(file, row.line_no) + ": duplicate part name '" +
                              row.fields[0] + "'");
}

// Wraps invariant failures from part constructors with the row location.
template <typename Fn>
auto at_row(const fs::path& file, const CsvRow& row, Fn&& fn)
{
    try {
        return fn();
    } catch (const ValidationError& e) {
        throw ValidationError(loc(file, row.line_no) + ": " + e.what());
    }
}

std::ofstream open_for_write(const fs::path& file)
{
    std::ofstream out(file, std::ios::binary);
    if (!out) throw IoError("cannot write catalog file " + file.string());
    return out;
}

}  // namespace

std::vector<InductorPart> load_inductors_csv(const fs::path& file)
{
    std::vector<InductorPart> parts;
    std::unordered_set<std::string> seen;
    for (const auto& row : read_csv(file, kInductorHeader, 5)) {
        reject_duplicate(file, row, seen);
        parts.push_back(at_row(file, row, [&] {
            return InductorPart(row.fields[0], parse_number(file, row, 1),
                                parse_number(file, row, 2), parse_number(file, row, 3),
                                parse_number(file, row, 4));
        }));
    }
    return parts;
}

std::vector<ZenerPart> load_zeners_csv(const fs::path& file)
{
    std::vector<ZenerPart> parts;
    std::unordered_set<std::string> seen;
    for (const auto& row : read_csv(file, kZenerHeader, 4)) {
        reject_duplicate(file, row, seen);
        parts.push_back(at_row(file, row, [&] {
            return ZenerPart(row.fields[0], parse_number(file, row, 1),
                             parse_number(file, row, 2), parse_number(file, row, 3));
        }));
    }
    return parts;
}

std::vector<FreewheelDiodePart> load_diodes_csv(const fs::path& file)
{
    std::vector<FreewheelDiodePart> parts;
    std::unordered_set<std::string> seen;
    for (const auto& row : read_csv(file, kDiodeHeader, 5)) {
        reject_duplicate(file, row, seen);
        parts.push_back(at_row(file, row, [&] {
            return FreewheelDiodePart(row.fields[0], parse_number(file, row, 1),
                                      parse_number(file, row, 2), parse_number(file, row, 3),
                                      parse_number(file, row, 4));
        }));
    }
    return parts;
}

Catalog load_catalog(const fs::path& dir)
{
    return Catalog{
        load_inductors_csv(dir / "inductors.csv"),
        load_zeners_csv(dir / "zeners.csv"),
        load_diodes_csv(dir / "diodes.csv"),
    };
}

void save_catalog(const Catalog& catalog, const fs::path& dir)
{
    std::error_code ec;
    fs::create_directories(dir, ec);

    auto inductors = open_for_write(dir / "inductors.csv");
    inductors << kInductorHeader << '\n';
    for (const auto& p : catalog.inductors)
        inductors << p.name << ',' << format_double(p.l_h) << ',' << format_double(p.r_ohm)
                  << ',' << format_double(p.i_max_a) << ',' << format_double(p.p_max_w) << '\n';

    auto zeners = open_for_write(dir / "zeners.csv");
    zeners << kZenerHeader << '\n';
    for (const auto& p : catalog.zeners)
        zeners << p.name << ',' << format_double(p.v_z_v) << ',' << format_double(p.i_zsm_a)
               << ',' << format_double(p.t_surge_s) << '\n';

    auto diodes = open_for_write(dir / "diodes.csv");
    diodes << kDiodeHeader << '\n';
    for (const auto& p : catalog.diodes)
        diodes << p.name << ',' << format_double(p.v_f_v) << ',' << format_double(p.i_max_a)
               << ',' << format_double(p.v_r_v) << ',' << format_double(p.r_d_ohm) << '\n';
}

}  // namespace inductolink
