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

#include "ris/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace ris
{
    namespace
    {
        constexpr double half_power_db = 3.0102999566398120; // 10*log10(2)

        std::string fmt_g6(double value)
        {
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.6g", value);
            return buf;
        }

        std::vector<double> sample_axis_rad(double lo_deg, double hi_deg, double step_deg)
        {
            if (!(step_deg > 0.0))
                throw std::invalid_argument("observation grid: step must be > 0");
            if (hi_deg < lo_deg)
                throw std::invalid_argument("observation grid: range must be well-ordered");
            const auto count = static_cast<std::size_t>(std::floor((hi_deg - lo_deg) / step_deg + 1e-9)) + 1;
            std::vector<double> axis(count);
            for (std::size_t i = 0; i < count; ++i)
                axis[i] = deg2rad(lo_deg + static_cast<double>(i) * step_deg);
            return axis;
        }

        // |sum_n conj(a_obs_n) q_n|^2 over an observation grid, in dB (0 dB = unit
        // magnitude), floor sentinel for zero power. q carries weights*a_tx.
        PatternGrid field_power_grid(const ArrayGeometry &geometry, const ComplexVector &q,
                                     std::vector<double> azimuths_rad, std::vector<double> elevations_rad)
        {
            PatternGrid grid;
            grid.azimuths_rad = std::move(azimuths_rad);
            grid.elevations_rad = std::move(elevations_rad);
            grid.power_dbm.assign(grid.n_elevation() * grid.n_azimuth(), pattern_floor_dbm);

            const std::size_t nx = geometry.nx;
            const std::size_t ny = geometry.ny;
            std::vector<std::complex<double>> partial(nx);

            for (std::size_t ie = 0; ie < grid.n_elevation(); ++ie)
            {
                // contract the y axis once per elevation
                const double py = two_pi * geometry.delta * std::sin(grid.elevations_rad[ie]);
                for (std::size_t ix = 0; ix < nx; ++ix)
                {
                    std::complex<double> acc{0.0, 0.0};
                    for (std::size_t iy = 0; iy < ny; ++iy)
                        acc += std::polar(1.0, -py * static_cast<double>(iy)) * q[ix * ny + iy];
                    partial[ix] = acc;
                }
                for (std::size_t ia = 0; ia < grid.n_azimuth(); ++ia)
                {
                    const double px = two_pi * geometry.delta * std::cos(grid.azimuths_rad[ia]);
                    std::complex<double> field{0.0, 0.0};
                    for (std::size_t ix = 0; ix < nx; ++ix)
                        field += std::polar(1.0, -px * static_cast<double>(ix)) * partial[ix];
                    const double power = std::norm(field);
                    if (power > 0.0)
                        grid.power_dbm[ie * grid.n_azimuth() + ia] = linear_to_db(power);
                }
            }
            return grid;
        }

        double link_scale_db(const Scenario &sc)
        {
            const double gamma_t = channel_gain(sc.link.beta0, sc.link.d_t_m);
            const double gamma_r = channel_gain(sc.link.beta0, sc.link.d_r_m);
            return sc.tx_power_dbm + linear_to_db(gamma_t * gamma_r) + 2.0 * sc.antenna_gain_dbi +
                   sc.element_gain_dbi;
        }

        // Local maxima of the sampled grid: at least as large as every existing
        // 8-neighbor and above the floor sentinel.
        std::vector<std::pair<std::size_t, std::size_t>> local_maxima(const PatternGrid &g)
        {
            std::vector<std::pair<std::size_t, std::size_t>> out;
            const auto n_el = static_cast<std::ptrdiff_t>(g.n_elevation());
            const auto n_az = static_cast<std::ptrdiff_t>(g.n_azimuth());
            for (std::ptrdiff_t ie = 0; ie < n_el; ++ie)
                for (std::ptrdiff_t ia = 0; ia < n_az; ++ia)
                {
                    const double p = g.at(ie, ia);
                    if (p <= pattern_floor_dbm + 1.0)
                        continue;
                    bool is_max = true;
                    for (std::ptrdiff_t de = -1; de <= 1 && is_max; ++de)
                        for (std::ptrdiff_t da = -1; da <= 1 && is_max; ++da)
                        {
                            if (de == 0 && da == 0)
                                continue;
                            const std::ptrdiff_t je = ie + de, ja = ia + da;
                            if (je < 0 || je >= n_el || ja < 0 || ja >= n_az)
                                continue;
                            if (g.at(je, ja) > p)
                                is_max = false;
                        }
                    if (is_max)
                        out.emplace_back(static_cast<std::size_t>(ie), static_cast<std::size_t>(ia));
                }
            return out;
        }

        // Half-power crossing by walking outward from the peak along one cut;
        // linear interpolation in dB between the bracketing samples. NaN when the
        // contour leaves the grid.
        double crossing_deg(const std::vector<double> &axis_rad,
                            const std::vector<double> &cut_dbm, std::size_t peak,
                            double threshold_dbm, bool forward)
        {
            const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(axis_rad.size());
            const std::ptrdiff_t dir = forward ? 1 : -1;
            for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(peak); i + dir >= 0 && i + dir < n; i += dir)
            {
                const double p0 = cut_dbm[static_cast<std::size_t>(i)];
                const double p1 = cut_dbm[static_cast<std::size_t>(i + dir)];
                if (p1 <= threshold_dbm)
                {
                    const double a0 = rad2deg(axis_rad[static_cast<std::size_t>(i)]);
                    const double a1 = rad2deg(axis_rad[static_cast<std::size_t>(i + dir)]);
                    if (p1 == p0)
                        return a1;
                    return a0 + (threshold_dbm - p0) * (a1 - a0) / (p1 - p0);
                }
            }
            return std::numeric_limits<double>::quiet_NaN();
        }

        double axis_step_deg(const std::vector<double> &axis_rad)
        {
            if (axis_rad.size() < 2)
                return std::numeric_limits<double>::infinity();
            return rad2deg(axis_rad[1] - axis_rad[0]);
        }

        // A scenario accepts configurations in two shapes: the collapsed virtual
        // geometry of its activation pattern, or the full base board with masked
        // cells absorbed (one codebook run against many activation shapes).
        ArrayGeometry scenario_geometry(const Scenario &sc, std::size_t weight_count)
        {
            ArrayGeometry collapsed = virtual_geometry(sc.board, sc.pattern);
            if (weight_count == collapsed.size())
                return collapsed;
            if (weight_count == sc.board.nx * sc.board.ny)
            {
                ArrayGeometry base;
                base.nx = sc.board.nx;
                base.ny = sc.board.ny;
                base.delta = sc.board.spacing_ratio();
                base.mask = sc.pattern.mask;
                base.validate();
                return base;
            }
            throw shape_error("configuration has " + std::to_string(weight_count) +
                              " cells; the scenario accepts " + std::to_string(collapsed.size()) +
                              " (virtual geometry) or " + std::to_string(sc.board.nx * sc.board.ny) +
                              " (full board)");
        }
    } // namespace

    double calibrated_beta0(const BoardSpec &board, double d_t_m, double d_r_m,
                            double tx_power_dbm, double antenna_gain_dbi,
                            double target_peak_dbm)
    {
        const auto n_cells = static_cast<double>(board.nx * board.ny);
        const double beta0_db = target_peak_dbm - tx_power_dbm - 20.0 * std::log10(n_cells) +
                                20.0 * std::log10(d_t_m * d_r_m) - 2.0 * antenna_gain_dbi;
        return std::pow(10.0, beta0_db / 20.0);
    }

    Scenario paper_scenario()
    {
        Scenario sc;
        sc.board = BoardSpec::paper_default();
        sc.pattern = named_pattern("10x10", sc.board);
        sc.link.d_t_m = 1.1;
        sc.link.d_r_m = 6.3;
        sc.link.tx_angles = SteeringAngles::from_degrees(0.0, 33.0);
        sc.link.rx_angles = SteeringAngles::from_degrees(0.0, -3.0);
        sc.link.beta0 = calibrated_beta0(sc.board, sc.link.d_t_m, sc.link.d_r_m, sc.tx_power_dbm,
                                         sc.antenna_gain_dbi, measured_full_board_peak_dbm);
        return sc;
    }

    std::vector<double> ObservationGrid::azimuths_rad() const
    {
        return sample_axis_rad(azimuth_lo_deg, azimuth_hi_deg, azimuth_step_deg);
    }

    std::vector<double> ObservationGrid::elevations_rad() const
    {
        return sample_axis_rad(elevation_lo_deg, elevation_hi_deg, elevation_step_deg);
    }

    PatternGrid beampattern(const Scenario &scenario, const ComplexVector &weights,
                            const ObservationGrid &grid)
    {
        const ArrayGeometry geometry = scenario_geometry(scenario, weights.size());
        const ComplexVector a_tx = upa_response(geometry, scenario.link.tx_angles);
        ComplexVector q(weights.size());
        for (std::size_t n = 0; n < weights.size(); ++n)
            q[n] = (geometry.active(n) ? weights[n] : std::complex<double>{0.0, 0.0}) * a_tx[n];

        PatternGrid pattern =
            field_power_grid(geometry, q, grid.azimuths_rad(), grid.elevations_rad());
        const double scale = link_scale_db(scenario);
        for (double &p : pattern.power_dbm)
            if (p > pattern_floor_dbm)
                p += scale;
        return pattern;
    }

    PatternGrid beampattern(const Scenario &scenario, const RisConfiguration &config,
                            const PhaseSet &set, const ObservationGrid &grid)
    {
        const ArrayGeometry geometry = scenario_geometry(scenario, config.size());
        return beampattern(scenario, config_weights(config, geometry, set), grid);
    }

    double received_power_dbm(const Scenario &scenario, const ArrayGeometry &geometry,
                              const ComplexVector &weights)
    {
        const double gamma_t = channel_gain(scenario.link.beta0, scenario.link.d_t_m);
        const double gamma_r = channel_gain(scenario.link.beta0, scenario.link.d_r_m);
        const ComplexVector g = los_channel(geometry, scenario.link.tx_angles, gamma_t);
        const ComplexVector h = los_channel(geometry, scenario.link.rx_angles, gamma_r);
        const ComplexVector hbar = cascaded_channel(h, g);
        const double power = std::norm(apply_weights(weights, hbar));
        if (!(power > 0.0))
            return pattern_floor_dbm;
        return scenario.tx_power_dbm + linear_to_db(power) + 2.0 * scenario.antenna_gain_dbi +
               scenario.element_gain_dbi;
    }

    BeamSummary peak_and_hpbw(const PatternGrid &pattern)
    {
        if (pattern.power_dbm.empty())
            throw std::invalid_argument("peak_and_hpbw: empty pattern grid");

        BeamSummary summary;
        summary.coarse_grid = axis_step_deg(pattern.azimuths_rad) > 1.0 + 1e-9 ||
                              axis_step_deg(pattern.elevations_rad) > 1.0 + 1e-9;

        std::size_t peak_el = 0, peak_az = 0;
        double peak = -std::numeric_limits<double>::infinity();
        double minimum = std::numeric_limits<double>::infinity();
        for (std::size_t ie = 0; ie < pattern.n_elevation(); ++ie)
            for (std::size_t ia = 0; ia < pattern.n_azimuth(); ++ia)
            {
                const double p = pattern.at(ie, ia);
                minimum = std::min(minimum, p);
                if (p > peak)
                {
                    peak = p;
                    peak_el = ie;
                    peak_az = ia;
                }
            }

        summary.peak = {pattern.azimuths_rad[peak_az], pattern.elevations_rad[peak_el]};
        summary.peak_dbm = peak;
        if (peak < minimum + half_power_db)
        {
            summary.no_beam = true;
            summary.hpbw_azimuth_deg = std::numeric_limits<double>::quiet_NaN();
            summary.hpbw_elevation_deg = std::numeric_limits<double>::quiet_NaN();
            return summary;
        }

        const double threshold = peak - half_power_db;

        std::vector<double> az_cut(pattern.n_azimuth());
        for (std::size_t ia = 0; ia < pattern.n_azimuth(); ++ia)
            az_cut[ia] = pattern.at(peak_el, ia);
        const double az_left = crossing_deg(pattern.azimuths_rad, az_cut, peak_az, threshold, false);
        const double az_right = crossing_deg(pattern.azimuths_rad, az_cut, peak_az, threshold, true);
        summary.hpbw_azimuth_deg = az_right - az_left; // NaN propagates from missing crossings

        std::vector<double> el_cut(pattern.n_elevation());
        for (std::size_t ie = 0; ie < pattern.n_elevation(); ++ie)
            el_cut[ie] = pattern.at(ie, peak_az);
        const double el_left = crossing_deg(pattern.elevations_rad, el_cut, peak_el, threshold, false);
        const double el_right = crossing_deg(pattern.elevations_rad, el_cut, peak_el, threshold, true);
        summary.hpbw_elevation_deg = el_right - el_left;

        return summary;
    }

    std::vector<SteeringAngles> grating_lobes(double delta, const SteeringAngles &target)
    {
        if (!(delta > 0.0))
            throw std::domain_error("grating lobes: delta must be > 0");

        const double u0 = std::cos(target.azimuth_rad);
        const double v0 = std::sin(target.elevation_rad);
        constexpr double edge = 1.0 + 1e-9;

        std::vector<double> us, vs;
        const auto m_lo = static_cast<long>(std::ceil((-edge - u0) * delta - 1e-9));
        const auto m_hi = static_cast<long>(std::floor((edge - u0) * delta + 1e-9));
        for (long m = m_lo; m <= m_hi; ++m)
        {
            const double u = u0 + static_cast<double>(m) / delta;
            if (std::abs(u) <= edge)
                us.push_back(std::clamp(u, -1.0, 1.0));
        }
        const auto n_lo = static_cast<long>(std::ceil((-edge - v0) * delta - 1e-9));
        const auto n_hi = static_cast<long>(std::floor((edge - v0) * delta + 1e-9));
        for (long n = n_lo; n <= n_hi; ++n)
        {
            const double v = v0 + static_cast<double>(n) / delta;
            if (std::abs(v) <= edge)
                vs.push_back(std::clamp(v, -1.0, 1.0));
        }

        std::vector<SteeringAngles> lobes;
        lobes.reserve(us.size() * vs.size());
        for (double u : us)
            for (double v : vs)
                lobes.push_back({std::acos(u), std::asin(v)});
        return lobes;
    }

    std::vector<LobeCheck> verify_grating_lobes(const ArrayGeometry &geometry,
                                                const SteeringAngles &tx_angles,
                                                const SteeringAngles &rx_angles,
                                                double step_deg)
    {
        const ComplexVector g = los_channel(geometry, tx_angles, 1.0);
        const ComplexVector h = los_channel(geometry, rx_angles, 1.0);
        const ComplexVector hbar = cascaded_channel(h, g);
        const ComplexVector weights = optimal_weights(hbar, geometry);

        const ComplexVector a_tx = upa_response(geometry, tx_angles);
        ComplexVector q(weights.size());
        for (std::size_t n = 0; n < weights.size(); ++n)
            q[n] = weights[n] * a_tx[n];

        const PatternGrid pattern = field_power_grid(
            geometry, q, sample_axis_rad(0.0, 180.0, step_deg), sample_axis_rad(-90.0, 90.0, step_deg));
        const auto maxima = local_maxima(pattern);

        const std::vector<SteeringAngles> predicted = grating_lobes(geometry.delta, rx_angles);
        const double tolerance = deg2rad(step_deg) + 1e-9;

        std::vector<LobeCheck> checks;
        checks.reserve(predicted.size());
        for (const SteeringAngles &lobe : predicted)
        {
            LobeCheck check;
            check.predicted = lobe;
            double best = std::numeric_limits<double>::infinity();
            for (const auto &[ie, ia] : maxima)
            {
                const double da = std::abs(pattern.azimuths_rad[ia] - lobe.azimuth_rad);
                const double de = std::abs(pattern.elevations_rad[ie] - lobe.elevation_rad);
                const double d = std::max(da, de);
                if (d < best)
                {
                    best = d;
                    check.nearest_peak = {pattern.azimuths_rad[ia], pattern.elevations_rad[ie]};
                }
            }
            check.matched = best <= tolerance;
            checks.push_back(check);
        }
        return checks;
    }

    std::vector<ScalingPoint> scaling_law(const std::vector<std::size_t> &n_list,
                                          const Scenario &scenario, PhaseMode mode,
                                          const PhaseSet &set)
    {
        if (n_list.empty())
            throw std::invalid_argument("scaling law: empty size list");

        const auto pattern_name = [](std::size_t n) -> const char * {
            switch (n)
            {
            case 4: return "2x2";
            case 16: return "4x4";
            case 25: return "off2";
            case 64: return "8x8";
            case 100: return "10x10";
            default:
                throw std::invalid_argument("scaling law: no activation pattern for N = " +
                                            std::to_string(n));
            }
        };

        std::vector<ScalingPoint> points;
        points.reserve(n_list.size());
        for (std::size_t n : n_list)
        {
            const ActivationPattern pattern = named_pattern(pattern_name(n), scenario.board);
            const ArrayGeometry geometry = virtual_geometry(scenario.board, pattern);

            const double gamma_t = channel_gain(scenario.link.beta0, scenario.link.d_t_m);
            const double gamma_r = channel_gain(scenario.link.beta0, scenario.link.d_r_m);
            const ComplexVector g = los_channel(geometry, scenario.link.tx_angles, gamma_t);
            const ComplexVector h = los_channel(geometry, scenario.link.rx_angles, gamma_r);
            const ComplexVector hbar = cascaded_channel(h, g);

            const ComplexVector weights =
                mode == PhaseMode::continuous
                    ? optimal_weights(hbar, geometry)
                    : config_weights(optimal_config(hbar, set, geometry), geometry, set);

            ScalingPoint point;
            point.n_cells = n;
            point.simulated_power_dbm = received_power_dbm(scenario, geometry, weights);
            points.push_back(point);
        }

        // N^2 reference anchored at the largest simulated size
        std::size_t anchor = 0;
        for (std::size_t i = 1; i < points.size(); ++i)
            if (points[i].n_cells > points[anchor].n_cells)
                anchor = i;
        for (ScalingPoint &point : points)
            point.model_power_dbm =
                points[anchor].simulated_power_dbm +
                20.0 * std::log10(static_cast<double>(point.n_cells) /
                                  static_cast<double>(points[anchor].n_cells));
        return points;
    }

    double radar_rcs_dbsm(double p_rx_dbm, double p_tx_dbm, double d1_m, double d2_m,
                          double wavelength_m, double gain_dbi)
    {
        if (!(d1_m > 0.0) || !(d2_m > 0.0))
            throw std::domain_error("radar rcs: distances must be > 0");
        if (!(wavelength_m > 0.0))
            throw std::domain_error("radar rcs: wavelength must be > 0");
        const double power_ratio = db_to_linear(p_rx_dbm - p_tx_dbm);
        const double gain = db_to_linear(gain_dbi);
        const double bracket = d1_m * d2_m / (wavelength_m * gain);
        return linear_to_db(64.0 * pi * pi * pi * power_ratio * bracket * bracket);
    }

    namespace
    {
        struct CostAnchor
        {
            double boards;
            double usd_per_cell;
        };

        // Piecewise linear in log10(boards); clamped outside the anchors
        double interpolate_cost(const std::vector<CostAnchor> &anchors, std::size_t n_boards)
        {
            const double x = std::log10(static_cast<double>(n_boards));
            if (x <= std::log10(anchors.front().boards))
                return anchors.front().usd_per_cell;
            if (x >= std::log10(anchors.back().boards))
                return anchors.back().usd_per_cell;
            for (std::size_t i = 1; i < anchors.size(); ++i)
            {
                const double x0 = std::log10(anchors[i - 1].boards);
                const double x1 = std::log10(anchors[i].boards);
                if (x <= x1)
                {
                    const double t = (x - x0) / (x1 - x0);
                    return anchors[i - 1].usd_per_cell +
                           t * (anchors[i].usd_per_cell - anchors[i - 1].usd_per_cell);
                }
            }
            return anchors.back().usd_per_cell;
        }
    } // namespace

    double cost_per_cell_usd(std::size_t n_boards, CostCategory category)
    {
        if (n_boards < 1)
            throw std::invalid_argument("cost per cell: board count must be >= 1");

        static const std::vector<CostAnchor> pcb = {{10, 0.22}, {200, 0.11}, {1000, 0.09}};
        static const std::vector<CostAnchor> components = {{1000, 1.88}};
        static const std::vector<CostAnchor> assembly = {{10, 0.51}, {1000, 0.05}};

        switch (category)
        {
        case CostCategory::pcb: return interpolate_cost(pcb, n_boards);
        case CostCategory::components: return interpolate_cost(components, n_boards);
        case CostCategory::assembly: return interpolate_cost(assembly, n_boards);
        case CostCategory::total:
            return interpolate_cost(pcb, n_boards) + interpolate_cost(components, n_boards) +
                   interpolate_cost(assembly, n_boards);
        }
        throw std::invalid_argument("cost per cell: unknown category");
    }

    CostCategory cost_category_from_string(const std::string &name)
    {
        if (name == "pcb")
            return CostCategory::pcb;
        if (name == "components")
            return CostCategory::components;
        if (name == "assembly")
            return CostCategory::assembly;
        if (name == "total")
            return CostCategory::total;
        throw std::invalid_argument("unknown cost category '" + name + "'");
    }

    void export_pattern_csv(const PatternGrid &pattern, std::ostream &out)
    {
        out << "el_deg\\az_deg";
        for (double az : pattern.azimuths_rad)
            out << ',' << fmt_g6(rad2deg(az));
        out << '\n';
        for (std::size_t ie = 0; ie < pattern.n_elevation(); ++ie)
        {
            out << fmt_g6(rad2deg(pattern.elevations_rad[ie]));
            for (std::size_t ia = 0; ia < pattern.n_azimuth(); ++ia)
                out << ',' << fmt_g6(pattern.at(ie, ia));
            out << '\n';
        }
    }

    std::string pattern_to_csv(const PatternGrid &pattern)
    {
        std::ostringstream out;
        export_pattern_csv(pattern, out);
        return out.str();
    }

    std::string scaling_to_json(const std::vector<ScalingPoint> &points)
    {
        nlohmann::json doc = nlohmann::json::array();
        for (const ScalingPoint &point : points)
            doc.push_back({{"n_cells", point.n_cells},
                           {"simulated_power_dbm", point.simulated_power_dbm},
                           {"model_power_dbm", point.model_power_dbm}});
        return doc.dump(1) + "\n";
    }

    std::string grating_to_json(const std::vector<SteeringAngles> &lobes,
                                const std::vector<LobeCheck> *checks)
    {
        nlohmann::json doc;
        nlohmann::json predicted = nlohmann::json::array();
        for (const SteeringAngles &lobe : lobes)
            predicted.push_back({{"azimuth_deg", lobe.azimuth_deg()},
                                 {"elevation_deg", lobe.elevation_deg()}});
        doc["predicted_lobes"] = std::move(predicted);
        if (checks != nullptr)
        {
            nlohmann::json verification = nlohmann::json::array();
            for (const LobeCheck &check : *checks)
                verification.push_back({{"predicted_azimuth_deg", check.predicted.azimuth_deg()},
                                        {"predicted_elevation_deg", check.predicted.elevation_deg()},
                                        {"peak_azimuth_deg", check.nearest_peak.azimuth_deg()},
                                        {"peak_elevation_deg", check.nearest_peak.elevation_deg()},
                                        {"matched", check.matched}});
            doc["verification"] = std::move(verification);
        }
        return doc.dump(1) + "\n";
    }

    std::string cost_to_json(const std::vector<std::size_t> &board_counts)
    {
        nlohmann::json doc = nlohmann::json::array();
        for (std::size_t boards : board_counts)
            doc.push_back({{"boards", boards},
                           {"pcb_usd_per_cell", cost_per_cell_usd(boards, CostCategory::pcb)},
                           {"components_usd_per_cell", cost_per_cell_usd(boards, CostCategory::components)},
                           {"assembly_usd_per_cell", cost_per_cell_usd(boards, CostCategory::assembly)},
                           {"total_usd_per_cell", cost_per_cell_usd(boards, CostCategory::total)}});
        return doc.dump(1) + "\n";
    }

} // namespace ris
