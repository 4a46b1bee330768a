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
// ristk: command-line front end. Subcommands cover the design calculators,
// codebook generation, beampattern simulation, scaling and grating analysis,
// the control-plane emulator and the cost model. Angles are degrees on this
// surface and radians inside the library.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ris/analysis.hpp"
#include "ris/array_model.hpp"
#include "ris/board.hpp"
#include "ris/codebook.hpp"
#include "ris/control_plane.hpp"
#include "ris/rf_design.hpp"

using nlohmann::json;

namespace
{
    void write_output(const std::string &path, const std::string &content)
    {
        if (path.empty())
        {
            std::cout << content;
            return;
        }
        std::ofstream out(path, std::ios::binary);
        if (!out)
            throw std::runtime_error("cannot open '" + path + "' for writing");
        out << content;
    }

    std::string fmt_g6(double value)
    {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.6g", value);
        return buf;
    }

    ris::ActivationPattern resolve_pattern(const std::string &name, const std::string &file,
                                           const ris::BoardSpec &board)
    {
        if (!file.empty())
            return ris::load_pattern_file(file);
        return ris::named_pattern(name, board);
    }

    // ---- design ---------------------------------------------------------

    struct DesignArgs
    {
        std::string preset = "paper-corrected";
        double frequency_ghz = 0.0; // 0 = take from preset
        double eps_r = 0.0;
        double height_mm = 0.0;
        double v_f = 0.0;
        double r_edge = 0.0;
        double r_target = 0.0;
        double diagonal_m = 0.43;
        double theta_max_deg = 90.0;
        std::string format = "json";
        std::string output;
    };

    int cmd_design(const DesignArgs &args)
    {
        ris::DesignPreset preset =
            args.preset == "paper" ? ris::paper_preset() : ris::paper_corrected_preset();
        if (args.frequency_ghz > 0.0)
            preset.frequency_hz = args.frequency_ghz * 1e9;
        if (args.eps_r > 0.0)
            preset.substrate.eps_r = args.eps_r;
        if (args.height_mm > 0.0)
            preset.substrate.height_m = args.height_mm * 1e-3;
        if (args.v_f > 0.0)
            preset.v_f = args.v_f;
        if (args.r_edge > 0.0)
            preset.r_edge_ohm = args.r_edge;
        if (args.r_target > 0.0)
            preset.r_target_ohm = args.r_target;

        const ris::PatchDesign patch = ris::complete_patch_design(
            preset.frequency_hz, preset.substrate, preset.r_edge_ohm, preset.r_target_ohm);
        const auto table = ris::delay_line_table(preset.frequency_hz, preset.v_f);
        const double wavelength = ris::speed_of_light_mps / preset.frequency_hz;
        const double d_max = ris::max_spacing(ris::deg2rad(args.theta_max_deg), wavelength);
        const ris::FieldRegions regions = ris::field_regions(args.diagonal_m, wavelength);

        if (args.format == "json")
        {
            json doc;
            doc["preset"] = preset.name;
            doc["inputs"] = {{"frequency_ghz", preset.frequency_hz / 1e9},
                             {"eps_r", preset.substrate.eps_r},
                             {"substrate_height_mm", preset.substrate.height_m * 1e3},
                             {"velocity_factor", preset.v_f},
                             {"r_edge_ohm", preset.r_edge_ohm},
                             {"r_target_ohm", preset.r_target_ohm},
                             {"array_diagonal_m", args.diagonal_m},
                             {"theta_max_deg", args.theta_max_deg}};
            doc["patch"] = {{"width_mm", patch.width_m * 1e3},
                            {"length_mm", patch.length_m * 1e3},
                            {"eps_eff", patch.eps_eff},
                            {"effective_length_mm", patch.l_eff_m * 1e3},
                            {"delta_l_mm", patch.delta_l_m * 1e3},
                            {"notch_depth_mm", patch.notch_depth_m * 1e3}};
            json lines = json::array();
            for (const auto &row : table)
                lines.push_back({{"output_port", row.output_port},
                                 {"phase_deg", row.phase_deg},
                                 {"length_mm", row.length_m * 1e3}});
            doc["delay_lines"] = std::move(lines);
            doc["board"] = {{"wavelength_mm", wavelength * 1e3},
                            {"max_spacing_mm", d_max * 1e3},
                            {"far_field_m", regions.far_field_m},
                            {"reactive_near_field_m", regions.reactive_near_m}};
            doc["feed_line"] = {{"width_mm", ris::feed_line_width_m * 1e3},
                                {"model_width_mm", ris::model_feed_line_width_m * 1e3},
                                {"measured_velocity_factor", ris::measured_velocity_factor}};
            write_output(args.output, doc.dump(1) + "\n");
            return 0;
        }

        std::ostringstream out;
        char buf[160];
        out << "design report (" << preset.name << ")\n";
        std::snprintf(buf, sizeof(buf), "  frequency        %8.3f GHz\n", preset.frequency_hz / 1e9);
        out << buf;
        std::snprintf(buf, sizeof(buf), "  eps_r / height   %8.3f / %.2f mm\n",
                      preset.substrate.eps_r, preset.substrate.height_m * 1e3);
        out << buf;
        std::snprintf(buf, sizeof(buf), "  patch W x L      %8.3f x %.3f mm\n", patch.width_m * 1e3,
                      patch.length_m * 1e3);
        out << buf;
        std::snprintf(buf, sizeof(buf), "  eps_eff          %8.4f\n", patch.eps_eff);
        out << buf;
        std::snprintf(buf, sizeof(buf), "  L_eff / dL       %8.3f / %.4f mm\n", patch.l_eff_m * 1e3,
                      patch.delta_l_m * 1e3);
        out << buf;
        std::snprintf(buf, sizeof(buf), "  notch depth      %8.3f mm\n", patch.notch_depth_m * 1e3);
        out << buf;
        out << "  delay lines (port, phase deg, length mm)\n";
        for (const auto &row : table)
        {
            std::snprintf(buf, sizeof(buf), "    port %d  %8.2f  %7.3f\n", row.output_port,
                          row.phase_deg, row.length_m * 1e3);
            out << buf;
        }
        std::snprintf(buf, sizeof(buf), "  wavelength       %8.3f mm\n", wavelength * 1e3);
        out << buf;
        std::snprintf(buf, sizeof(buf), "  max spacing      %8.3f mm at theta_max %.1f deg\n",
                      d_max * 1e3, args.theta_max_deg);
        out << buf;
        std::snprintf(buf, sizeof(buf), "  field regions    %8.3f m far, %.3f m reactive near\n",
                      regions.far_field_m, regions.reactive_near_m);
        out << buf;
        write_output(args.output, out.str());
        return 0;
    }

    // ---- codebook -------------------------------------------------------

    struct CodebookArgs
    {
        std::string preset = "paper"; // the 10x10 board with the 3-degree grid
        std::size_t nx = 10, ny = 10;
        double delta = 0.0; // 0 = board default
        std::string pattern = "10x10";
        std::string pattern_file;
        double spacing_deg = 3.0;
        std::vector<double> az_range = {-90.0, 90.0};
        std::vector<double> el_range = {-45.0, 45.0};
        std::string output;
    };

    int cmd_codebook(const CodebookArgs &args)
    {
        ris::BoardSpec board = ris::BoardSpec::paper_default();
        board.nx = args.nx;
        board.ny = args.ny;
        ris::ArrayGeometry geometry =
            ris::virtual_geometry(board, resolve_pattern(args.pattern, args.pattern_file, board));
        if (args.delta > 0.0)
            geometry.delta = args.delta;

        ris::AngularGrid grid;
        grid.azimuth_lo_deg = args.az_range.at(0);
        grid.azimuth_hi_deg = args.az_range.at(1);
        grid.elevation_lo_deg = args.el_range.at(0);
        grid.elevation_hi_deg = args.el_range.at(1);
        grid.spacing_deg = args.spacing_deg;

        const ris::Codebook cb = ris::build_codebook(geometry, grid, ris::PhaseSet::default_seven());
        write_output(args.output, ris::codebook_to_string(cb));
        std::cerr << "codebook: " << cb.entries.size() << " entries for " << geometry.nx << "x"
                  << geometry.ny << " cells at delta " << fmt_g6(geometry.delta) << "\n";
        return 0;
    }

    // ---- pattern --------------------------------------------------------

    struct PatternArgs
    {
        std::string pattern = "10x10";
        std::string pattern_file;
        std::string codebook_file;
        std::vector<double> target = {0.0, 0.0};
        std::vector<double> tx = {0.0, 33.0};
        bool continuous = false;
        bool verify_grating = false;
        std::vector<double> obs_az = {-90.0, 90.0, 1.0};
        std::vector<double> obs_el = {-45.0, 45.0, 1.0};
        std::string format = "csv";
        std::string output;
    };

    int cmd_pattern(const PatternArgs &args)
    {
        ris::Scenario sc = ris::paper_scenario();
        sc.pattern = resolve_pattern(args.pattern, args.pattern_file, sc.board);
        sc.link.tx_angles = ris::SteeringAngles::from_degrees(args.tx.at(0), args.tx.at(1));
        const auto target = ris::SteeringAngles::from_degrees(args.target.at(0), args.target.at(1));

        const ris::ArrayGeometry geometry = ris::virtual_geometry(sc.board, sc.pattern);
        const ris::PhaseSet set = ris::PhaseSet::default_seven();

        ris::ObservationGrid grid;
        grid.azimuth_lo_deg = args.obs_az.at(0);
        grid.azimuth_hi_deg = args.obs_az.at(1);
        grid.azimuth_step_deg = args.obs_az.at(2);
        grid.elevation_lo_deg = args.obs_el.at(0);
        grid.elevation_hi_deg = args.obs_el.at(1);
        grid.elevation_step_deg = args.obs_el.at(2);

        ris::PatternGrid pattern;
        if (!args.codebook_file.empty())
        {
            // codebook entries may be sized for the full board or for this
            // pattern's virtual geometry; beampattern accepts both
            const ris::Codebook cb = ris::load_codebook_file(args.codebook_file);
            const auto &entry = cb.entries[cb.nearest_index(target)];
            pattern = ris::beampattern(sc, entry.config, set, grid);
        }
        else
        {
            const ris::ComplexVector surrogate = ris::upa_response(geometry, target);
            const ris::ComplexVector weights =
                args.continuous
                    ? ris::optimal_weights(surrogate, geometry)
                    : ris::config_weights(ris::optimal_config(surrogate, set, geometry), geometry,
                                          set);
            pattern = ris::beampattern(sc, weights, grid);
        }
        const ris::BeamSummary summary = ris::peak_and_hpbw(pattern);

        json report;
        report["target"] = {{"azimuth_deg", target.azimuth_deg()},
                            {"elevation_deg", target.elevation_deg()}};
        report["no_beam"] = summary.no_beam;
        report["coarse_grid"] = summary.coarse_grid;
        report["peak"] = {{"azimuth_deg", summary.peak.azimuth_deg()},
                          {"elevation_deg", summary.peak.elevation_deg()},
                          {"power_dbm", summary.peak_dbm}};
        if (!summary.no_beam)
        {
            report["hpbw_azimuth_deg"] = summary.hpbw_azimuth_deg;
            report["hpbw_elevation_deg"] = summary.hpbw_elevation_deg;
            report["gain_over_noise_db"] = summary.peak_dbm - sc.noise_floor_dbm;
        }
        if (args.verify_grating)
        {
            const auto checks =
                ris::verify_grating_lobes(geometry, sc.link.tx_angles, target, 1.0);
            json verification = json::array();
            for (const ris::LobeCheck &check : checks)
                verification.push_back({{"predicted_azimuth_deg", check.predicted.azimuth_deg()},
                                        {"predicted_elevation_deg", check.predicted.elevation_deg()},
                                        {"peak_azimuth_deg", check.nearest_peak.azimuth_deg()},
                                        {"peak_elevation_deg", check.nearest_peak.elevation_deg()},
                                        {"matched", check.matched}});
            report["grating_verification"] = std::move(verification);
        }

        if (args.format == "json")
        {
            json doc;
            doc["summary"] = report;
            json az = json::array(), el = json::array(), rows = json::array();
            for (double a : pattern.azimuths_rad)
                az.push_back(ris::rad2deg(a));
            for (double e : pattern.elevations_rad)
                el.push_back(ris::rad2deg(e));
            for (std::size_t ie = 0; ie < pattern.n_elevation(); ++ie)
            {
                json row = json::array();
                for (std::size_t ia = 0; ia < pattern.n_azimuth(); ++ia)
                    row.push_back(pattern.at(ie, ia));
                rows.push_back(std::move(row));
            }
            doc["azimuths_deg"] = std::move(az);
            doc["elevations_deg"] = std::move(el);
            doc["power_dbm"] = std::move(rows);
            write_output(args.output, doc.dump(1) + "\n");
        }
        else
        {
            write_output(args.output, ris::pattern_to_csv(pattern));
        }
        std::cout << report.dump(1) << "\n";
        return 0;
    }

    // ---- scaling --------------------------------------------------------

    struct ScalingArgs
    {
        std::vector<std::size_t> sizes = {4, 16, 64, 100};
        std::string mode = "quantized";
        std::string format = "json";
        std::string output;
    };

    int cmd_scaling(const ScalingArgs &args)
    {
        const ris::Scenario sc = ris::paper_scenario();
        const ris::PhaseMode mode =
            args.mode == "continuous" ? ris::PhaseMode::continuous : ris::PhaseMode::quantized;
        const auto points = ris::scaling_law(args.sizes, sc, mode, ris::PhaseSet::default_seven());

        if (args.format == "csv")
        {
            std::ostringstream out;
            out << "n_cells,simulated_power_dbm,model_power_dbm\n";
            for (const auto &p : points)
                out << p.n_cells << ',' << fmt_g6(p.simulated_power_dbm) << ','
                    << fmt_g6(p.model_power_dbm) << '\n';
            write_output(args.output, out.str());
        }
        else
        {
            write_output(args.output, ris::scaling_to_json(points));
        }
        return 0;
    }

    // ---- grating --------------------------------------------------------

    struct GratingArgs
    {
        double delta = 0.0; // 0 = derive from pattern
        std::string pattern = "off2";
        std::vector<double> target = {0.0, 0.0};
        std::vector<double> tx = {0.0, 33.0};
        bool verify = false;
        double step_deg = 1.0;
        std::string output;
    };

    int cmd_grating(const GratingArgs &args)
    {
        const ris::BoardSpec board = ris::BoardSpec::paper_default();
        const auto target = ris::SteeringAngles::from_degrees(args.target.at(0), args.target.at(1));

        ris::ArrayGeometry geometry =
            ris::virtual_geometry(board, ris::named_pattern(args.pattern, board));
        if (args.delta > 0.0)
            geometry.delta = args.delta;

        const auto lobes = ris::grating_lobes(geometry.delta, target);
        if (args.verify)
        {
            const auto tx = ris::SteeringAngles::from_degrees(args.tx.at(0), args.tx.at(1));
            const auto checks = ris::verify_grating_lobes(geometry, tx, target, args.step_deg);
            write_output(args.output, ris::grating_to_json(lobes, &checks));
        }
        else
        {
            write_output(args.output, ris::grating_to_json(lobes));
        }
        return 0;
    }

    // ---- program --------------------------------------------------------

    struct ProgramArgs
    {
        std::string codebook_file;
        long entry = -1;
        std::vector<double> target = {0.0, 0.0};
        int board_id = 0;
        double latency_ms = ris::default_cell_latency_s * 1e3;
        std::string output;
    };

    int cmd_program(const ProgramArgs &args)
    {
        const ris::Codebook cb = ris::load_codebook_file(args.codebook_file);
        std::size_t index;
        if (args.entry >= 0)
        {
            if (static_cast<std::size_t>(args.entry) >= cb.entries.size())
                throw std::invalid_argument("entry " + std::to_string(args.entry) +
                                            " is outside the codebook (" +
                                            std::to_string(cb.entries.size()) + " entries)");
            index = static_cast<std::size_t>(args.entry);
        }
        else
        {
            index = cb.nearest_index(
                ris::SteeringAngles::from_degrees(args.target.at(0), args.target.at(1)));
        }
        const ris::CodebookEntry &entry = cb.entries[index];

        ris::BoardBusState board(cb.geometry.nx, cb.geometry.ny, args.board_id);
        const ris::ProgramTrace trace =
            ris::program_board(board, entry.config, args.latency_ms * 1e-3);

        std::ostringstream csv;
        ris::export_trace_csv(trace, csv);
        write_output(args.output, csv.str());

        json report;
        report["entry_index"] = index;
        report["target"] = {{"azimuth_deg", entry.target.azimuth_deg()},
                            {"elevation_deg", entry.target.elevation_deg()}};
        report["steps"] = trace.steps.size();
        report["estimated_time_s"] = trace.estimated_time_s;
        std::cout << report.dump(1) << "\n";
        return 0;
    }

    // ---- cost -----------------------------------------------------------

    struct CostArgs
    {
        std::vector<std::size_t> boards = {10, 100, 200, 1000};
        std::string format = "json";
        std::string output;
    };

    int cmd_cost(const CostArgs &args)
    {
        if (args.format == "csv")
        {
            std::ostringstream out;
            out << "boards,pcb_usd_per_cell,components_usd_per_cell,assembly_usd_per_cell,"
                   "total_usd_per_cell\n";
            for (std::size_t boards : args.boards)
                out << boards << ',' << fmt_g6(ris::cost_per_cell_usd(boards, ris::CostCategory::pcb))
                    << ',' << fmt_g6(ris::cost_per_cell_usd(boards, ris::CostCategory::components))
                    << ',' << fmt_g6(ris::cost_per_cell_usd(boards, ris::CostCategory::assembly))
                    << ',' << fmt_g6(ris::cost_per_cell_usd(boards, ris::CostCategory::total)) << '\n';
            write_output(args.output, out.str());
        }
        else
        {
            write_output(args.output, ris::cost_to_json(args.boards));
        }
        return 0;
    }
} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"ristk: RF switch-based RIS design and simulation toolkit"};
    app.require_subcommand(1);

    DesignArgs design;
    auto *design_cmd = app.add_subcommand("design", "Patch, notch, delay-line and board calculators");
    design_cmd->add_option("--preset", design.preset, "Parameter bundle")
        ->check(CLI::IsMember({"paper", "paper-corrected"}))
        ->capture_default_str();
    design_cmd->add_option("--frequency-ghz", design.frequency_ghz, "Operating frequency override");
    design_cmd->add_option("--eps-r", design.eps_r, "Substrate permittivity override");
    design_cmd->add_option("--height-mm", design.height_mm, "Substrate thickness override");
    design_cmd->add_option("--v-f", design.v_f, "Microstrip velocity factor override");
    design_cmd->add_option("--r-edge", design.r_edge, "Patch edge resistance override (ohm)");
    design_cmd->add_option("--r-target", design.r_target, "Line impedance override (ohm)");
    design_cmd->add_option("--diagonal-m", design.diagonal_m, "Array diagonal for field regions")
        ->capture_default_str();
    design_cmd->add_option("--theta-max-deg", design.theta_max_deg, "Max steering angle for spacing")
        ->capture_default_str();
    design_cmd->add_option("--format", design.format, "Output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    design_cmd->add_option("--output,-o", design.output, "Write to file instead of stdout");

    CodebookArgs codebook;
    auto *codebook_cmd = app.add_subcommand("codebook", "Build and save a beam-steering codebook");
    codebook_cmd->add_option("--preset", codebook.preset, "Board/grid defaults")
        ->check(CLI::IsMember({"paper"}))
        ->capture_default_str();
    codebook_cmd->add_option("--nx", codebook.nx, "Cells along x")->capture_default_str();
    codebook_cmd->add_option("--ny", codebook.ny, "Cells along y")->capture_default_str();
    codebook_cmd->add_option("--delta", codebook.delta, "Spacing-to-wavelength ratio override");
    codebook_cmd->add_option("--pattern", codebook.pattern, "Activation pattern name")
        ->capture_default_str();
    codebook_cmd->add_option("--pattern-file", codebook.pattern_file, "0/1 text grid file");
    codebook_cmd->add_option("--spacing-deg", codebook.spacing_deg, "Grid step in degrees")
        ->capture_default_str();
    codebook_cmd->add_option("--az-range", codebook.az_range, "Azimuth range (deg)")
        ->expected(2)
        ->delimiter(',');
    codebook_cmd->add_option("--el-range", codebook.el_range, "Elevation range (deg)")
        ->expected(2)
        ->delimiter(',');
    codebook_cmd->add_option("--output,-o", codebook.output, "Codebook file (stdout if omitted)");

    PatternArgs pattern;
    auto *pattern_cmd = app.add_subcommand("pattern", "Simulate a received-power beampattern");
    pattern_cmd->add_option("--pattern", pattern.pattern, "Activation pattern name")
        ->capture_default_str();
    pattern_cmd->add_option("--pattern-file", pattern.pattern_file, "0/1 text grid file");
    pattern_cmd->add_option("--codebook", pattern.codebook_file,
                            "Take the configuration from a codebook");
    pattern_cmd->add_option("--target", pattern.target, "Beam target azimuth,elevation (deg)")
        ->expected(2)
        ->delimiter(',');
    pattern_cmd->add_option("--tx", pattern.tx, "TX azimuth,elevation (deg)")
        ->expected(2)
        ->delimiter(',');
    pattern_cmd->add_flag("--continuous", pattern.continuous, "Use unquantized phases");
    pattern_cmd->add_flag("--verify-grating", pattern.verify_grating,
                          "Check predicted grating lobes against the swept pattern");
    pattern_cmd->add_option("--obs-az", pattern.obs_az, "Observation azimuth lo,hi,step (deg)")
        ->expected(3)
        ->delimiter(',');
    pattern_cmd->add_option("--obs-el", pattern.obs_el, "Observation elevation lo,hi,step (deg)")
        ->expected(3)
        ->delimiter(',');
    pattern_cmd->add_option("--format", pattern.format, "Grid format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    pattern_cmd->add_option("--output,-o", pattern.output, "Grid file (stdout if omitted)");

    ScalingArgs scaling;
    auto *scaling_cmd = app.add_subcommand("scaling", "Received power versus virtual-RIS size");
    scaling_cmd->add_option("--sizes", scaling.sizes, "Cell counts")
        ->delimiter(',')
        ->capture_default_str();
    scaling_cmd->add_option("--mode", scaling.mode, "Phase mode")
        ->check(CLI::IsMember({"continuous", "quantized"}))
        ->capture_default_str();
    scaling_cmd->add_option("--format", scaling.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    scaling_cmd->add_option("--output,-o", scaling.output, "Write to file instead of stdout");

    GratingArgs grating;
    auto *grating_cmd = app.add_subcommand("grating", "Predict (and verify) grating lobe locations");
    grating_cmd->add_option("--pattern", grating.pattern, "Activation pattern name")
        ->check(CLI::IsMember({"off2", "off3", "10x10", "8x8", "4x4", "2x2"}))
        ->capture_default_str();
    grating_cmd->add_option("--delta", grating.delta, "Spacing-to-wavelength ratio override");
    grating_cmd->add_option("--target", grating.target, "Beam target azimuth,elevation (deg)")
        ->expected(2)
        ->delimiter(',');
    grating_cmd->add_option("--tx", grating.tx, "TX azimuth,elevation (deg)")
        ->expected(2)
        ->delimiter(',');
    grating_cmd->add_flag("--verify", grating.verify, "Run the brute-force pattern check");
    grating_cmd->add_option("--step-deg", grating.step_deg, "Verification grid step")
        ->capture_default_str();
    grating_cmd->add_option("--output,-o", grating.output, "Write to file instead of stdout");

    ProgramArgs program;
    auto *program_cmd = app.add_subcommand("program", "Emulate programming a board from a codebook");
    program_cmd->add_option("--codebook", program.codebook_file, "Codebook file")->required();
    program_cmd->add_option("--entry", program.entry, "Entry index (overrides --target)");
    program_cmd->add_option("--target", program.target, "Beam target azimuth,elevation (deg)")
        ->expected(2)
        ->delimiter(',');
    program_cmd->add_option("--board-id", program.board_id, "Board id on the shared bus")
        ->capture_default_str();
    program_cmd->add_option("--latency-ms", program.latency_ms, "Per-cell write latency")
        ->capture_default_str();
    program_cmd->add_option("--output,-o", program.output, "Trace CSV (stdout if omitted)");

    CostArgs cost;
    auto *cost_cmd = app.add_subcommand("cost", "Per-cell manufacturing cost at scale");
    cost_cmd->add_option("--boards", cost.boards, "Production volumes")
        ->delimiter(',')
        ->capture_default_str();
    cost_cmd->add_option("--format", cost.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cost_cmd->add_option("--output,-o", cost.output, "Write to file instead of stdout");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &e)
    {
        return app.exit(e);
    }
    catch (const CLI::CallForAllHelp &e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError &e)
    {
        app.exit(e);
        return 2;
    }

    try
    {
        if (design_cmd->parsed())
            return cmd_design(design);
        if (codebook_cmd->parsed())
            return cmd_codebook(codebook);
        if (pattern_cmd->parsed())
            return cmd_pattern(pattern);
        if (scaling_cmd->parsed())
            return cmd_scaling(scaling);
        if (grating_cmd->parsed())
            return cmd_grating(grating);
        if (program_cmd->parsed())
            return cmd_program(program);
        if (cost_cmd->parsed())
            return cmd_cost(cost);
    }
    catch (const std::exception &e)
    {
        std::cerr << "ristk: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
