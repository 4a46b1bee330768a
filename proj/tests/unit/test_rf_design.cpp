#include <doctest.h>

#include <cmath>

#include "ris/common.hpp"
#include "ris/rf_design.hpp"

using namespace ris;

namespace
{
    // Independent transcription of the transmission-line model, kept free of the
    // implementation's intermediate structure.
    struct OraclePatch
    {
        double W, eps_eff, Leff, dL, L;
    };

    OraclePatch oracle_patch(double f, double er, double h)
    {
        OraclePatch o{};
        const double lambda = 299792458.0 / f;
        o.W = lambda / (2.0 * std::sqrt(0.5 * (er + 1.0)));
        const double hw = h / o.W;
        o.eps_eff = (er + 1.0) / 2.0 + (er - 1.0) / 2.0 * (1.0 / std::sqrt(1.0 + 12.0 * hw));
        o.Leff = 299792458.0 / (2.0 * f * std::sqrt(o.eps_eff));
        o.dL = 0.412 * h * ((o.eps_eff + 0.3) / (o.eps_eff - 0.258)) * ((hw + 0.264) / (hw + 0.8));
        o.L = o.Leff - 2.0 * o.dL;
        return o;
    }
} // namespace

TEST_CASE("patch dimensions land within 3% of the published 16.9 / 13.15 mm")
{
    const DesignPreset preset = paper_preset();
    const PatchDesign d = patch_dimensions(preset.frequency_hz, preset.substrate);
    CHECK(std::abs(d.width_m - 16.9e-3) / 16.9e-3 < 0.03);
    CHECK(std::abs(d.length_m - 13.15e-3) / 13.15e-3 < 0.03);
    CHECK(d.length_m < d.width_m);
}

TEST_CASE("patch dimensions match the spreadsheet oracle on both presets")
{
    for (const DesignPreset &preset : {paper_preset(), paper_corrected_preset()})
    {
        const PatchDesign d = patch_dimensions(preset.frequency_hz, preset.substrate);
        const OraclePatch o =
            oracle_patch(preset.frequency_hz, preset.substrate.eps_r, preset.substrate.height_m);
        CHECK(d.width_m == doctest::Approx(o.W).epsilon(1e-12));
        CHECK(d.eps_eff == doctest::Approx(o.eps_eff).epsilon(1e-12));
        CHECK(d.l_eff_m == doctest::Approx(o.Leff).epsilon(1e-12));
        CHECK(d.delta_l_m == doctest::Approx(o.dL).epsilon(1e-12));
        CHECK(d.length_m == doctest::Approx(o.L).epsilon(1e-12));
    }
}

TEST_CASE("air substrate degenerates to the half-wavelength patch")
{
    const PatchDesign d = patch_dimensions(5.3e9, SubstrateSpec{1.0, 0.53e-3});
    const double lambda = speed_of_light_mps / 5.3e9;
    CHECK(d.width_m == doctest::Approx(lambda / 2.0).epsilon(1e-12));
    CHECK(d.eps_eff == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("patch width decreases monotonically with permittivity")
{
    double previous = 1e9;
    for (double er = 2.0; er <= 10.0; er += 0.5)
    {
        const double w = patch_dimensions(5.3e9, SubstrateSpec{er, 0.53e-3}).width_m;
        CHECK(w < previous);
        previous = w;
    }
}

TEST_CASE("notch depth: published anchor, zero limit and oracle value")
{
    CHECK(notch_depth(13.15e-3, 341.0, 50.0) == doctest::Approx(4.9e-3).epsilon(0.05 / 4.9));
    CHECK(notch_depth(13.15e-3, 341.0, 341.0) == 0.0);

    const double oracle = 13.15e-3 / pi * std::acos(std::sqrt(100.0 / 341.0));
    CHECK(notch_depth(13.15e-3, 341.0, 100.0) == doctest::Approx(oracle).epsilon(1e-12));

    CHECK_THROWS_AS(notch_depth(13.15e-3, 341.0, 400.0), std::domain_error);
    CHECK_THROWS_AS(notch_depth(13.15e-3, 341.0, 0.0), std::domain_error);
}

TEST_CASE("complete design on the corrected preset reproduces the ~4.9 mm notch")
{
    const DesignPreset preset = paper_corrected_preset();
    const PatchDesign d =
        complete_patch_design(preset.frequency_hz, preset.substrate, preset.r_edge_ohm, preset.r_target_ohm);
    CHECK(d.notch_depth_m > 0.0);
    CHECK(d.notch_depth_m < d.length_m);
    // paper's 4.9 mm uses L = 13.15 mm; our L differs slightly, so compare loosely
    CHECK(d.notch_depth_m == doctest::Approx(4.9e-3).epsilon(0.03));
}

TEST_CASE("delay line lengths against the published table")
{
    CHECK(delay_line_length(51.42, 5.3e9, 0.3) == doctest::Approx(1.21e-3).epsilon(0.02 / 1.21));
    CHECK(delay_line_length(360.0, 5.3e9, 0.3) == doctest::Approx(8.49e-3).epsilon(0.02 / 8.49));
    CHECK(delay_line_length(0.0, 5.3e9, 0.3) == 0.0);

    // phi = 360 deg with v_f = 1 is a half-wavelength round trip
    const double f = speed_of_light_mps / 0.720; // lambda = 720 mm
    CHECK(delay_line_length(360.0, f, 1.0) == doctest::Approx(0.360).epsilon(1e-12));
}

TEST_CASE("delay line table: all seven rows within 0.02 mm of the paper values")
{
    const double expected_mm[7] = {1.21, 2.42, 3.64, 4.85, 6.08, 7.28, 8.49};
    const int ports[7] = {7, 6, 5, 1, 3, 2, 4};
    const auto table = delay_line_table(5.3e9, 0.3);
    for (std::size_t k = 0; k < 7; ++k)
    {
        CHECK(table[k].output_port == ports[k]);
        CHECK(table[k].phase_deg == doctest::Approx((k + 1) * 360.0 / 7.0));
        CHECK(std::abs(table[k].length_m * 1000.0 - expected_mm[k]) <= 0.02);
    }
}

TEST_CASE("delay line table is strictly increasing in phase")
{
    const auto table = delay_line_table(5.3e9, 0.3);
    for (std::size_t k = 1; k < 7; ++k)
    {
        CHECK(table[k].phase_deg > table[k - 1].phase_deg);
        CHECK(table[k].length_m > table[k - 1].length_m);
    }
}

TEST_CASE("unrounded velocity factor shifts the table by a quantified amount")
{
    const auto nominal = delay_line_table(5.3e9, 0.3);
    const auto unrounded = delay_line_table(5.3e9, 0.298);
    for (std::size_t k = 0; k < 7; ++k)
    {
        const double oracle =
            unrounded[k].phase_deg * 299792458.0 * 0.298 / (720.0 * 5.3e9);
        CHECK(unrounded[k].length_m == doctest::Approx(oracle).epsilon(1e-12));
        // the 0.002 rounding of v_f moves every line by length * 0.002/0.3
        CHECK(nominal[k].length_m - unrounded[k].length_m ==
              doctest::Approx(nominal[k].length_m * (0.002 / 0.3)).epsilon(1e-9));
    }
}

TEST_CASE("delay_line_length and phase_of_length invert each other modulo 360")
{
    for (double phase = 10.0; phase < 360.0; phase += 37.3)
    {
        const double l = delay_line_length(phase, 5.3e9, 0.3);
        CHECK(phase_of_length(l, 5.3e9, 0.3) == doctest::Approx(phase).epsilon(1e-9));
    }
    // beyond one turn it wraps
    const double l = delay_line_length(400.0, 5.3e9, 0.3);
    CHECK(phase_of_length(l, 5.3e9, 0.3) == doctest::Approx(40.0).epsilon(1e-9));
}

TEST_CASE("velocity factor from TDR timing")
{
    CHECK(velocity_factor(0.135, 1.51e-9) == doctest::Approx(0.298).epsilon(1e-3));
    CHECK(velocity_factor(speed_of_light_mps * 2.0e-9, 2.0e-9) == doctest::Approx(1.0));
    CHECK(velocity_factor(0.100, 1.0e-9) ==
          doctest::Approx(0.100 / 1.0e-9 / 299792458.0).epsilon(1e-12));
    CHECK_THROWS_AS(velocity_factor(0.0, 1e-9), std::domain_error);
}

TEST_CASE("maximum spacing over the steering range")
{
    const double lambda = 56.56e-3;
    CHECK(max_spacing(pi / 2.0, lambda) == doctest::Approx(lambda / 2.0));
    CHECK(max_spacing(0.0, lambda) == doctest::Approx(lambda));
    CHECK(max_spacing(deg2rad(30.0), lambda) ==
          doctest::Approx(lambda / 1.5).epsilon(1e-12)); // 37.71 mm
    CHECK_THROWS_AS(max_spacing(-0.1, lambda), std::domain_error);
}

TEST_CASE("field regions at the testbed geometry and limiting cases")
{
    const FieldRegions paper = field_regions(0.43, 56.56e-3);
    CHECK(std::abs(paper.far_field_m - 6.5) <= 0.05);
    CHECK(std::abs(paper.reactive_near_m - 0.73) <= 0.05);
    CHECK(paper.far_field_m > paper.reactive_near_m);

    const double lambda = 0.05;
    const FieldRegions at_lambda = field_regions(lambda, lambda);
    CHECK(at_lambda.far_field_m == doctest::Approx(2.0 * lambda));
    CHECK(at_lambda.reactive_near_m == doctest::Approx(0.62 * lambda));

    const FieldRegions small = field_regions(0.2, 56.56e-3);
    CHECK(small.far_field_m == doctest::Approx(2.0 * 0.04 / 56.56e-3).epsilon(1e-12));
    CHECK(small.reactive_near_m ==
          doctest::Approx(0.62 * std::sqrt(0.008 / 56.56e-3)).epsilon(1e-12));
}

TEST_CASE("presets carry the two design iterations")
{
    const DesignPreset nominal = paper_preset();
    CHECK(nominal.frequency_hz == 5.5e9);
    CHECK(nominal.substrate.eps_r == 4.3);
    CHECK(nominal.substrate.height_m == 0.53e-3);

    const DesignPreset corrected = paper_corrected_preset();
    CHECK(corrected.frequency_hz == 5.3e9);
    CHECK(corrected.substrate.eps_r == 4.66);
    CHECK(corrected.v_f == 0.3);
    CHECK(corrected.r_edge_ohm == 341.0);
    CHECK(corrected.r_target_ohm == 50.0);
}
