#include <cmath>
#include <cstring>
#include <string>

#include "doctest.h"

#include "inductolink/inductolink.h"
#include "testutil.hpp"

namespace {
const char* kDefaultCatalog = INDUCTOLINK_TEST_CATALOG;
}

TEST_SUITE_BEGIN("capi");

TEST_CASE("scalar sizing chain")
{
    double z = 0;
    REQUIRE(il_z_base_ohm(0.048, 0.8, &z) == IL_OK);
    CHECK(z == doctest::Approx(2.88).epsilon(1e-12));

    double x_la = 0;
    REQUIRE(il_ac_reactance_ohm(z, 0.03, &x_la) == IL_OK);
    CHECK(x_la == doctest::Approx(0.0864).epsilon(1e-12));

    double l_a = 0;
    REQUIRE(il_ac_reactor_h(z, 0.03, 50, &l_a) == IL_OK);
    CHECK(l_a == doctest::Approx(2.750197416627951e-4).epsilon(1e-14));

    double l_c = 0;
    REQUIRE(il_dc_inductor_h(l_a, &l_c) == IL_OK);
    CHECK(l_c == 1.7 * l_a);

    double budget = 0;
    REQUIRE(il_clamp_budget_v(80, 17.02, &budget) == IL_OK);
    CHECK(budget == doctest::Approx(4.700352526439483).epsilon(1e-14));

    double slew = 0, t_limit = 0;
    REQUIRE(il_connect_inrush(5.0, 500e-6, 20.0, &slew, &t_limit) == IL_OK);
    CHECK(slew == doctest::Approx(10000.0));
    CHECK(t_limit == doctest::Approx(2e-3));
    REQUIRE(il_connect_inrush(0.0, 500e-6, 20.0, &slew, &t_limit) == IL_OK);
    CHECK(std::isinf(t_limit));
}

TEST_CASE("errors set a status and a message")
{
    double out = 0;
    CHECK(il_z_base_ohm(0.048, 0.8, nullptr) == IL_ERR_INVALID_ARGUMENT);
    CHECK(il_z_base_ohm(-1, 0.8, &out) == IL_ERR_VALIDATION);
    CHECK(std::string(il_last_error()).length() > 0);
    CHECK(il_ac_reactor_h(2.88, 0.03, 0, &out) == IL_ERR_INVALID_ARGUMENT);
    CHECK(il_clamp_budget_v(80, 0, &out) == IL_ERR_INVALID_ARGUMENT);

    CHECK(std::string(il_status_name(IL_OK)) == "ok");
    CHECK(std::string(il_status_name(IL_ERR_NO_FEASIBLE_PART)) == "no feasible part");
    CHECK(std::string(il_version()).length() > 0);
}

TEST_CASE("catalog handles and selection")
{
    il_catalog* cat = nullptr;
    REQUIRE(il_catalog_load_dir(kDefaultCatalog, &cat) == IL_OK);
    REQUIRE(cat != nullptr);

    CHECK(il_catalog_inductor_count(cat) >= 1);
    CHECK(il_catalog_zener_count(cat) >= 1);
    CHECK(il_catalog_diode_count(cat) >= 1);

    bool found_coil = false;
    for (size_t k = 0; k < il_catalog_inductor_count(cat); ++k) {
        il_inductor part;
        REQUIRE(il_catalog_inductor(cat, k, &part) == IL_OK);
        if (std::strcmp(part.name, "COIL-500U-20A") == 0) {
            found_coil = true;
            CHECK(part.l_h == 0.0005);
            CHECK(part.p_max_w == 80.0);
        }
    }
    CHECK(found_coil);

    il_zener zener;
    il_diode diode;
    REQUIRE(il_select_clamp_chain(cat, 4.7, 17.6, 1.5e-3, &zener, &diode) == IL_OK);
    CHECK(std::string(zener.name) == "1N5335B");
    CHECK(std::string(diode.name) == "SBR20A200CTB");
    CHECK(zener.v_z_v + diode.v_f_v == doctest::Approx(4.4).epsilon(1e-12));

    CHECK(il_select_clamp_chain(cat, 1.0, 17.6, 1.5e-3, &zener, &diode) ==
          IL_ERR_NO_FEASIBLE_PART);
    CHECK(std::string(il_last_error()).find("budget") != std::string::npos);

    il_inductor part;
    REQUIRE(il_catalog_inductor(cat, 0, &part) == IL_OK);
    CHECK(il_catalog_inductor(cat, 9999, &part) == IL_ERR_INVALID_ARGUMENT);

    // Save / reload through the C surface.
    const auto dir = testutil::make_temp_dir("capi_catalog");
    REQUIRE(il_catalog_save_dir(cat, dir.string().c_str()) == IL_OK);
    il_catalog* reloaded = nullptr;
    REQUIRE(il_catalog_load_dir(dir.string().c_str(), &reloaded) == IL_OK);
    CHECK(il_catalog_inductor_count(reloaded) == il_catalog_inductor_count(cat));
    CHECK(il_catalog_zener_count(reloaded) == il_catalog_zener_count(cat));
    CHECK(il_catalog_diode_count(reloaded) == il_catalog_diode_count(cat));
    il_catalog_free(reloaded);
    il_catalog_free(cat);

    CHECK(il_catalog_load_dir("/no/such/dir", &reloaded) == IL_ERR_IO);
}

TEST_CASE("catalog parse failures surface row information")
{
    const auto dir = testutil::make_temp_dir("capi_parse");
    testutil::write_file(dir / "inductors.csv", "name,l_H,r_ohm,i_max_A,p_max_W\nL1,oops,0.2,20,80\n");
    testutil::write_file(dir / "zeners.csv", "name,v_z_V,i_zsm_A,t_surge_s\n");
    testutil::write_file(dir / "diodes.csv", "name,v_f_V,i_max_A,v_r_V,r_d_ohm\n");

    il_catalog* cat = nullptr;
    CHECK(il_catalog_load_dir(dir.string().c_str(), &cat) == IL_ERR_PARSE);
    CHECK(std::string(il_last_error()).find("row 2") != std::string::npos);
}

TEST_CASE("spectrum handles")
{
    il_spectrum* v = nullptr;
    REQUIRE(il_six_pulse_spectrum(48, 2, 50, &v) == IL_OK);
    CHECK(il_spectrum_size(v) == 2);
    CHECK(il_spectrum_f0_hz(v) == 50.0);

    int order = 0;
    double amplitude = 0;
    REQUIRE(il_spectrum_entry(v, 0, &order, &amplitude) == IL_OK);
    CHECK(order == 6);
    CHECK(amplitude == doctest::Approx(2.742857142857143).epsilon(1e-14));
    CHECK(il_spectrum_entry(v, 5, &order, &amplitude) == IL_ERR_INVALID_ARGUMENT);

    il_spectrum* i = nullptr;
    REQUIRE(il_ripple_currents(v, 0.2, 500e-6, &i) == IL_OK);
    REQUIRE(il_spectrum_entry(i, 0, &order, &amplitude) == IL_OK);
    CHECK(amplitude == doctest::Approx(2.84686807386194).epsilon(1e-12));

    il_spectrum* degenerate = nullptr;
    CHECK(il_ripple_currents(v, 0, 0, &degenerate) == IL_ERR_INVALID_ARGUMENT);

    double total = 0;
    REQUIRE(il_total_coil_current_a(16.0, i, &total) == IL_OK);
    double sum = 0;
    REQUIRE(il_spectrum_amplitude_sum(i, &sum) == IL_OK);
    CHECK(total == doctest::Approx(16.0 + sum).epsilon(1e-14));

    double distortion = 0;
    REQUIRE(il_thd(v, 48, &distortion) == IL_OK);
    CHECK(distortion > 0);
    CHECK(il_thd(v, 0, &distortion) == IL_ERR_INVALID_ARGUMENT);

    const auto dir = testutil::make_temp_dir("capi_spectrum");
    const auto csv = dir / "spec.csv";
    REQUIRE(il_write_spectrum_csv(v, i, csv.string().c_str()) == IL_OK);
    const std::string content = testutil::read_file(csv);
    CHECK(content.rfind("order,f_Hz,v_peak,i_peak\n", 0) == 0);

    il_spectrum_free(i);
    il_spectrum_free(v);
}

TEST_CASE("attenuation handles")
{
    il_spectrum* v = nullptr;
    REQUIRE(il_six_pulse_spectrum(48, 50, 50, &v) == IL_OK);

    il_attenuation* rep = nullptr;
    REQUIRE(il_attenuation_report(v, 0.2, 0.0, 500e-6, 12.0, &rep) == IL_OK);
    CHECK(il_attenuation_size(rep) == 50);

    int order = 0;
    double factor = 0;
    REQUIRE(il_attenuation_factor(rep, 0, &order, &factor) == IL_OK);
    CHECK(order == 6);
    CHECK(factor > 0);
    CHECK(factor < 1);

    double before = 0, after = 0, ratio = 0;
    int within = -1;
    REQUIRE(il_attenuation_thd(rep, &before, &after, &ratio, &within) == IL_OK);
    CHECK(ratio == doctest::Approx(0.20157449338814865).epsilon(1e-9));
    CHECK(within == 0);

    il_attenuation_free(rep);
    il_spectrum_free(v);
}

TEST_CASE("transient handles")
{
    double t_ext = 0, v_peak = 0;
    REQUIRE(il_disconnect_analytic(500e-6, 0.2, 3.9, 0.5, 1.34e-3, 17.6, &t_ext, &v_peak) ==
            IL_OK);
    CHECK(t_ext == doctest::Approx(1.4670706712067096e-3).epsilon(1e-12));
    CHECK(v_peak == doctest::Approx(4.423584).epsilon(1e-14));

    double i_mid = 0;
    REQUIRE(il_disconnect_current_at(500e-6, 0.2, 3.9, 0.5, 1.34e-3, 17.6, t_ext / 2, &i_mid) ==
            IL_OK);
    CHECK(i_mid > 0);
    CHECK(i_mid < 17.6);

    il_transient* tr = nullptr;
    REQUIRE(il_simulate_disconnect(500e-6, 0.2, 3.9, 0.5, 1.34e-3, 17.6, 1e-6, &tr) == IL_OK);
    CHECK(std::abs(il_transient_t_ext_s(tr) - t_ext) <= 1e-3 * t_ext);
    CHECK(il_transient_v_peak_v(tr) == doctest::Approx(v_peak).epsilon(1e-14));
    CHECK(il_transient_i_zener_initial_a(tr) == 17.6);
    CHECK(il_transient_sample_count(tr) > 1000);

    double t = 0, i = 0, v = 0;
    REQUIRE(il_transient_sample(tr, 0, &t, &i, &v) == IL_OK);
    CHECK(t == 0.0);
    CHECK(i == 17.6);

    const auto dir = testutil::make_temp_dir("capi_transient");
    const auto csv = dir / "wave.csv";
    REQUIRE(il_transient_write_csv(tr, csv.string().c_str()) == IL_OK);
    CHECK(testutil::read_file(csv).rfind("t_s,i_A,v_coil_V\n", 0) == 0);

    il_stress_report stress;
    REQUIRE(il_zener_stress(il_transient_i_zener_initial_a(tr), il_transient_t_ext_s(tr), 17.6,
                            8.3e-3, &stress) == IL_OK);
    CHECK(stress.pass == 1);
    CHECK(stress.current.margin == 0.0);
    REQUIRE(il_zener_stress(17.61, t_ext, 17.6, 8.3e-3, &stress) == IL_OK);
    CHECK(stress.pass == 0);
    CHECK(stress.current.pass == 0);
    CHECK(stress.time.pass == 1);

    il_transient_free(tr);

    il_transient* coarse = nullptr;
    CHECK(il_simulate_disconnect(500e-6, 0.2, 3.9, 0.5, 1.34e-3, 17.6, 1.0, &coarse) ==
          IL_ERR_RESOLUTION);
}

TEST_CASE("inductor validation through the C surface")
{
    il_inductor part;
    std::snprintf(part.name, IL_NAME_MAX, "%s", "COIL-500U-20A");
    part.l_h = 500e-6;
    part.r_ohm = 0.2;
    part.i_max_a = 20;
    part.p_max_w = 80;

    il_inductor_validation v;
    REQUIRE(il_validate_inductor(&part, 459e-6, 17.02, &v) == IL_OK);
    CHECK(v.all_pass == 1);
    CHECK(v.inductance.pass == 1);
    CHECK(v.current.pass == 1);

    // Equality on the limit passes.
    part.l_h = 459e-6;
    REQUIRE(il_validate_inductor(&part, 459e-6, 17.02, &v) == IL_OK);
    CHECK(v.inductance.pass == 1);
    CHECK(v.inductance.margin == 0.0);

    part.l_h = 400e-6;
    REQUIRE(il_validate_inductor(&part, 459e-6, 17.02, &v) == IL_OK);
    CHECK(v.inductance.pass == 0);
    CHECK(v.all_pass == 0);
}

TEST_SUITE_END();
