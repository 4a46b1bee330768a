// SPDX-License-Identifier: Apache-2.0
//
// ris-toolkit  Simulation and design toolkit for RF switch-based
// reconfigurable intelligent surfaces
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
//
// End-to-end acceptance run. Each check prints one PASS/FAIL line; the
// process exits non-zero if any check fails.

#include <chrono>
#include <cstdarg>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "ris/analysis.hpp"
#include "ris/array_model.hpp"
#include "ris/board.hpp"
#include "ris/codebook.hpp"
#include "ris/control_plane.hpp"
#include "ris/rf_design.hpp"

using namespace ris;

namespace
{
    struct Outcome
    {
        bool pass = false;
        std::string detail;
    };

    int failures = 0;

    void report(int id, const char *name, const Outcome &outcome)
    {
        std::printf("%s  %2d  %-24s  %s\n", outcome.pass ? "PASS" : "FAIL", id, name,
                    outcome.detail.c_str());
        if (!outcome.pass)
            ++failures;
    }

    void run(int id, const char *name, const std::function<Outcome()> &check)
    {
        Outcome outcome;
        try
        {
            outcome = check();
        }
        catch (const std::exception &e)
        {
            outcome.pass = false;
            outcome.detail = std::string("exception: ") + e.what();
        }
        report(id, name, outcome);
    }

    std::string fmt(const char *format, ...)
    {
        char buf[512];
        va_list args;
        va_start(args, format);
        std::vsnprintf(buf, sizeof(buf), format, args);
        va_end(args);
        return buf;
    }

    Outcome codebook_count()
    {
        const auto start = std::chrono::steady_clock::now();
        const Codebook cb = build_codebook(ArrayGeometry::full(10, 10, 0.5),
                                           AngularGrid::paper_default(), PhaseSet::default_seven());
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool pass = cb.entries.size() == 1891 && seconds < 5.0;
        return {pass, fmt("%zu entries built in %.3f s (need 1891, < 5 s)", cb.entries.size(), seconds)};
    }

    Outcome delay_line_lengths()
    {
        const double expected_mm[7] = {1.21, 2.42, 3.64, 4.85, 6.08, 7.28, 8.49};
        const auto table = delay_line_table(5.3e9, 0.3);
        double worst = 0.0;
        for (std::size_t k = 0; k < 7; ++k)
            worst = std::max(worst, std::abs(table[k].length_m * 1e3 - expected_mm[k]));
        return {worst <= 0.02, fmt("max deviation %.4f mm (tolerance 0.02 mm)", worst)};
    }

    Outcome notch()
    {
        const double depth_mm = notch_depth(13.15e-3, 341.0, 50.0) * 1e3;
        return {std::abs(depth_mm - 4.9) <= 0.05, fmt("%.4f mm (need 4.9 +/- 0.05 mm)", depth_mm)};
    }

    Outcome patch_geometry()
    {
        const DesignPreset preset = paper_preset();
        const PatchDesign d = patch_dimensions(preset.frequency_hz, preset.substrate);
        const double w_res = (d.width_m * 1e3 - 16.9) / 16.9 * 100.0;
        const double l_res = (d.length_m * 1e3 - 13.15) / 13.15 * 100.0;
        const bool pass = std::abs(w_res) <= 3.0 && std::abs(l_res) <= 3.0;
        return {pass, fmt("W %.3f mm (%+.2f%%), L %.3f mm (%+.2f%%); published inputs are "
                          "under-specified, residual documented",
                          d.width_m * 1e3, w_res, d.length_m * 1e3, l_res)};
    }

    Outcome regions()
    {
        const FieldRegions r = field_regions(0.43, 56.56e-3);
        const bool pass = std::abs(r.far_field_m - 6.5) <= 0.05 &&
                          std::abs(r.reactive_near_m - 0.73) <= 0.05;
        return {pass, fmt("far field %.3f m, reactive near field %.3f m (need 6.5 / 0.73 +/- 0.05)",
                          r.far_field_m, r.reactive_near_m)};
    }

    Outcome hpbw()
    {
        Scenario sc = paper_scenario();
        sc.link.tx_angles = SteeringAngles::from_degrees(90.0, 0.0);
        sc.link.rx_angles = SteeringAngles::from_degrees(90.0, 0.0);

        const ArrayGeometry geometry = virtual_geometry(sc.board, sc.pattern);
        const ComplexVector g = los_channel(geometry, sc.link.tx_angles, 1.0);
        const ComplexVector h = los_channel(geometry, sc.link.rx_angles, 1.0);
        const ComplexVector weights = optimal_weights(cascaded_channel(h, g), geometry);

        const ObservationGrid grid{60.0, 120.0, 0.2, -30.0, 30.0, 0.2};
        const BeamSummary summary = peak_and_hpbw(beampattern(sc, weights, grid));
        const bool pass = !summary.no_beam && std::abs(summary.hpbw_azimuth_deg - 10.1) <= 0.5 &&
                          std::abs(summary.hpbw_elevation_deg - 10.1) <= 0.5;
        return {pass, fmt("azimuth %.2f deg, elevation %.2f deg (need 10.1 +/- 0.5)",
                          summary.hpbw_azimuth_deg, summary.hpbw_elevation_deg)};
    }

    Outcome scaling()
    {
        const Scenario sc = paper_scenario();
        const std::vector<std::size_t> sizes = {16, 64, 100};

        const auto continuous = scaling_law(sizes, sc, PhaseMode::continuous, PhaseSet::default_seven());
        double worst_exact = 0.0;
        for (std::size_t i = 0; i < sizes.size(); ++i)
            for (std::size_t j = 0; j < sizes.size(); ++j)
            {
                const double ratio =
                    continuous[i].simulated_power_dbm - continuous[j].simulated_power_dbm;
                const double model = 20.0 * std::log10(static_cast<double>(sizes[i]) /
                                                       static_cast<double>(sizes[j]));
                worst_exact = std::max(worst_exact, std::abs(ratio - model));
            }

        const auto quantized = scaling_law(sizes, sc, PhaseMode::quantized, PhaseSet::default_seven());
        double worst_quantized = 0.0;
        for (std::size_t i = 0; i < sizes.size(); ++i)
            worst_quantized = std::max(
                worst_quantized,
                std::abs(quantized[i].simulated_power_dbm - quantized[i].model_power_dbm));

        const double model_16_100 = 20.0 * std::log10(100.0 / 16.0);
        const double measured_16_100 = 15.3; // -66.5 dBm minus -81.8 dBm, anechoic chamber
        const double consistency = std::abs(measured_16_100 - model_16_100);

        const bool pass = worst_exact < 1e-9 && worst_quantized <= 0.5 && consistency <= 1.0;
        return {pass, fmt("continuous off by %.2e dB, quantized off by %.3f dB (<= 0.5); "
                          "measured 15.3 dB vs model %.2f dB within 1 dB (consistency note)",
                          worst_exact, worst_quantized, model_16_100)};
    }

    Outcome quantization_loss()
    {
        const auto start = std::chrono::steady_clock::now();
        std::mt19937 rng(20230503);
        std::uniform_real_distribution<double> az(-pi, pi), el(-pi / 2.0, pi / 2.0);
        const auto geometry = ArrayGeometry::full(10, 10, 0.5);
        const auto set = PhaseSet::default_seven();

        const int draws = 1000;
        double ratio_sum = 0.0;
        for (int i = 0; i < draws; ++i)
        {
            const auto tx = los_channel(geometry, {az(rng), el(rng)}, 1.0);
            const auto rx = los_channel(geometry, {az(rng), el(rng)}, 1.0);
            const auto hbar = cascaded_channel(rx, tx);
            const double quantized =
                std::norm(apply_config(optimal_config(hbar, set, geometry), geometry, set, hbar));
            const double continuous = std::norm(apply_weights(optimal_weights(hbar, geometry), hbar));
            ratio_sum += quantized / continuous;
        }
        const double mean = ratio_sum / draws;
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return {mean >= 0.93 && seconds < 10.0,
                fmt("mean power ratio %.4f over %d draws in %.2f s (need >= 0.93, < 10 s)", mean,
                    draws, seconds)};
    }

    Outcome grating()
    {
        const BoardSpec board = BoardSpec::paper_default();
        const SteeringAngles target = SteeringAngles::from_degrees(0.0, 0.0);

        const auto off2 = virtual_geometry(board, named_pattern("off2", board)); // delta 1.0
        const auto off3 = virtual_geometry(board, named_pattern("off3", board)); // delta 1.5
        const auto checks2 = verify_grating_lobes(off2, target, target, 1.0);
        const auto checks3 = verify_grating_lobes(off3, target, target, 1.0);

        std::size_t matched2 = 0, matched3 = 0;
        for (const LobeCheck &c : checks2)
            matched2 += c.matched;
        for (const LobeCheck &c : checks3)
            matched3 += c.matched;

        const bool pass = matched2 == checks2.size() && matched3 == checks3.size() &&
                          checks3.size() > checks2.size();
        return {pass, fmt("delta 1.0: %zu/%zu lobes matched; delta 1.5: %zu/%zu matched and denser",
                          matched2, checks2.size(), matched3, checks3.size())};
    }

    Outcome control_plane()
    {
        std::mt19937 rng(424242);
        std::uniform_int_distribution<std::size_t> xd(0, 9), yd(0, 9);
        std::uniform_int_distribution<int> cd(0, 7);

        BoardBusState board(10, 10);
        std::vector<std::uint8_t> oracle(100, absorber_code);
        for (int i = 0; i < 10000; ++i)
        {
            const std::size_t x = xd(rng), y = yd(rng);
            const auto code = static_cast<std::uint8_t>(cd(rng));
            write_cell(board, x, y, code);
            oracle[x * 10 + y] = code;
        }
        const bool fuzz_ok = board.latched == oracle;

        const BusLineCount lines = bus_line_count(10, 10);
        const bool lines_ok = lines.selection_lines == 20 && lines.phase_lines == 3;

        BoardBusState fresh(10, 10);
        const ProgramTrace trace = program_board(fresh, RisConfiguration::all_absorb(100));
        const bool timing_ok = trace.estimated_time_s <= 0.035 + 1e-12;

        return {fuzz_ok && lines_ok && timing_ok,
                fmt("10^4-write fuzz %s; lines (%zu, %zu); 100-cell program %.1f ms (<= 35 ms)",
                    fuzz_ok ? "matches oracle" : "DIVERGED", lines.selection_lines,
                    lines.phase_lines, trace.estimated_time_s * 1e3)};
    }

    Outcome dominance()
    {
        std::mt19937 rng(777);
        std::uniform_real_distribution<double> mag(0.1, 2.0), ang(0.0, two_pi);
        const auto set = PhaseSet::default_seven();
        const std::pair<std::size_t, std::size_t> shapes[] = {
            {1, 1}, {2, 1}, {1, 2}, {3, 1}, {1, 3}, {4, 1}, {1, 4}, {2, 2}};

        std::size_t cases = 0;
        for (const auto &[nx, ny] : shapes)
        {
            const auto geometry = ArrayGeometry::full(nx, ny, 0.5);
            for (int trial = 0; trial < 5; ++trial)
            {
                ComplexVector hbar(geometry.size());
                for (auto &e : hbar)
                    e = std::polar(mag(rng), ang(rng));

                const double achieved = std::norm(
                    apply_config(optimal_config(hbar, set, geometry), geometry, set, hbar));

                std::size_t combos = 1;
                for (std::size_t i = 0; i < geometry.size(); ++i)
                    combos *= 7;
                double brute = -1.0;
                for (std::size_t c = 0; c < combos; ++c)
                {
                    std::size_t rest = c;
                    std::complex<double> acc{0.0, 0.0};
                    for (std::size_t i = 0; i < geometry.size(); ++i)
                    {
                        acc += std::polar(1.0, set.phase(rest % 7)) * hbar[i];
                        rest /= 7;
                    }
                    brute = std::max(brute, std::norm(acc));
                }
                if (achieved < brute - 1e-12)
                    return {false, fmt("shape %zux%zu: optimal %.12f below exhaustive %.12f", nx, ny,
                                       achieved, brute)};
                ++cases;
            }
        }
        return {true, fmt("%zu shape/channel cases reach the exhaustive 7^N maximum", cases)};
    }

    Outcome measurement_note()
    {
        // The chamber's absolute dBm levels and the released dataset need the
        // hardware; criteria 6-9 stand in for them here. The fitted beta0 must
        // keep reproducing the -66.5 dBm anchor it encodes.
        const Scenario sc = paper_scenario();
        const ArrayGeometry geometry = virtual_geometry(sc.board, sc.pattern);
        const ComplexVector g = los_channel(geometry, sc.link.tx_angles, 1.0);
        const ComplexVector h = los_channel(geometry, sc.link.rx_angles, 1.0);
        const double peak =
            received_power_dbm(sc, geometry, optimal_weights(cascaded_channel(h, g), geometry));
        const bool pass = std::abs(peak - measured_full_board_peak_dbm) < 1e-9;
        return {pass, fmt("absolute dBm levels are hardware-bound; fitted beta0 %.4e reproduces the "
                          "%.1f dBm anchor (got %.4f dBm)",
                          sc.link.beta0, measured_full_board_peak_dbm, peak)};
    }
} // namespace

int main()
{
    std::printf("acceptance run\n--------------\n");
    run(1, "codebook-count", codebook_count);
    run(2, "delay-line-table", delay_line_lengths);
    run(3, "notch-depth", notch);
    run(4, "patch-geometry", patch_geometry);
    run(5, "field-regions", regions);
    run(6, "hpbw-broadside", hpbw);
    run(7, "scaling-law", scaling);
    run(8, "quantization-loss", quantization_loss);
    run(9, "grating-lobes", grating);
    run(10, "control-plane", control_plane);
    run(11, "oracle-dominance", dominance);
    run(12, "measurement-substitute", measurement_note);

    if (failures == 0)
        std::printf("--------------\nall 12 criteria passed\n");
    else
        std::printf("--------------\n%d criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
