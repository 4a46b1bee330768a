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

#ifndef RIS_ANALYSIS_HPP
#define RIS_ANALYSIS_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "ris/array_model.hpp"
#include "ris/board.hpp"

namespace ris
{
    // Full-board broadside peak of the anechoic-chamber campaign; the scenario's
    // beta0 is fitted against this value, it is not a measured channel constant.
    inline constexpr double measured_full_board_peak_dbm = -66.5;

    // Value assigned to zero received power in pattern grids.
    inline constexpr double pattern_floor_dbm = -200.0;

    // Measurement scenario: link geometry, board, activation shape and the
    // radio constants.
    struct Scenario
    {
        LinkGeometry link;
        BoardSpec board;
        ActivationPattern pattern;
        double tx_power_dbm = -30.0;    // per subcarrier
        double antenna_gain_dbi = 13.5; // horn gain, applied at both TX and RX
        double noise_floor_dbm = -91.0; // inferred from the reported beamforming gains
        double element_gain_dbi = 0.0;  // optional lump factor; array-factor model is isotropic
    };

    // beta0 making the continuous-phase full-board peak land on target_peak_dbm.
    double calibrated_beta0(const BoardSpec &board, double d_t_m, double d_r_m,
                            double tx_power_dbm, double antenna_gain_dbi,
                            double target_peak_dbm);

    // The testbed defaults: d_t = 1.1 m, d_r = 6.3 m, elevations 33 / -3 deg,
    // azimuths 0, horn gain 13.5 dBi, -30 dBm per subcarrier, full 10x10 board,
    // beta0 fitted to the -66.5 dBm full-board peak.
    Scenario paper_scenario();

    // Observation sweep, inclusive endpoints when the step divides the span.
    struct ObservationGrid
    {
        double azimuth_lo_deg = -90.0;
        double azimuth_hi_deg = 90.0;
        double azimuth_step_deg = 1.0;
        double elevation_lo_deg = -45.0;
        double elevation_hi_deg = 45.0;
        double elevation_step_deg = 1.0;

        std::vector<double> azimuths_rad() const;
        std::vector<double> elevations_rad() const;
    };

    struct PatternGrid
    {
        std::vector<double> azimuths_rad;
        std::vector<double> elevations_rad;
        std::vector<double> power_dbm; // row-major [elevation][azimuth]

        std::size_t n_azimuth() const { return azimuths_rad.size(); }
        std::size_t n_elevation() const { return elevations_rad.size(); }
        double at(std::size_t i_el, std::size_t i_az) const
        {
            return power_dbm[i_el * n_azimuth() + i_az];
        }
    };

    // Received power in dBm per observation angle couple:
    // tx_power + 10*log10(|a(obs)^H diag(w) a(tx)|^2 * gamma_t * gamma_r * gains).
    // The weights/configuration may be sized for the pattern's collapsed virtual
    // geometry or for the full base board (masked cells absorb), so one codebook
    // can be run against many activation shapes. Zero power maps to the floor
    // sentinel. Grid points are independent, so the result does not depend on
    // evaluation order.
    PatternGrid beampattern(const Scenario &scenario, const ComplexVector &weights,
                            const ObservationGrid &grid);
    PatternGrid beampattern(const Scenario &scenario, const RisConfiguration &config,
                            const PhaseSet &set, const ObservationGrid &grid);

    // Received power at the scenario's RX for the given weights on a geometry.
    double received_power_dbm(const Scenario &scenario, const ArrayGeometry &geometry,
                              const ComplexVector &weights);

    struct BeamSummary
    {
        bool no_beam = false;    // nothing 3 dB above the grid minimum
        bool coarse_grid = false; // sampled coarser than 1 degree; estimate is quantized
        SteeringAngles peak;
        double peak_dbm = pattern_floor_dbm;
        double hpbw_azimuth_deg = 0.0;   // NaN when the -3 dB contour leaves the grid
        double hpbw_elevation_deg = 0.0; // NaN when the -3 dB contour leaves the grid
    };

    // Global maximum plus the half-power widths of the two principal cuts
    // through it, linearly interpolated between samples.
    BeamSummary peak_and_hpbw(const PatternGrid &pattern);

    // All angle couples whose direction cosines differ from the target's by
    // integer multiples of 1/delta and stay within [-1, 1] on each axis:
    // (cos az, sin el) = (cos az0 + m/delta, sin el0 + n/delta). Azimuths are
    // reported in [0, 180] degrees, elevations in [-90, 90]. Includes the main
    // lobe (m = n = 0).
    std::vector<SteeringAngles> grating_lobes(double delta, const SteeringAngles &target);

    struct LobeCheck
    {
        SteeringAngles predicted;
        SteeringAngles nearest_peak;
        bool matched = false; // a pattern local maximum lies within one grid step
    };

    // Brute-force check of the lobe predictions: sweep the continuous-phase
    // optimal beam for the tx/rx couple over azimuth [0, 180] x elevation
    // [-90, 90] and match every predicted lobe against the pattern's local
    // maxima within one grid step per axis.
    std::vector<LobeCheck> verify_grating_lobes(const ArrayGeometry &geometry,
                                                const SteeringAngles &tx_angles,
                                                const SteeringAngles &rx_angles,
                                                double step_deg = 1.0);

    enum class PhaseMode
    {
        continuous,
        quantized
    };

    struct ScalingPoint
    {
        std::size_t n_cells = 0;
        double simulated_power_dbm = 0.0;
        double model_power_dbm = 0.0; // N^2 reference curve anchored at the largest N
    };

    // Optimal received power per virtual-RIS size. Supported sizes map to the
    // canonical activation shapes: 4 -> 2x2, 16 -> 4x4, 25 -> off2, 64 -> 8x8,
    // 100 -> 10x10; anything else is a pattern error.
    std::vector<ScalingPoint> scaling_law(const std::vector<std::size_t> &n_list,
                                          const Scenario &scenario, PhaseMode mode,
                                          const PhaseSet &set);

    // Radar range equation solved for the cross section,
    // 64*pi^3 * (P_RX/P_TX) * (d1*d2 / (lambda*G))^2, in dB relative to 1 m^2.
    double radar_rcs_dbsm(double p_rx_dbm, double p_tx_dbm, double d1_m, double d2_m,
                          double wavelength_m, double gain_dbi);

    enum class CostCategory
    {
        pcb,
        components,
        assembly,
        total
    };

    // Per-unit-cell manufacturing cost at a production scale, piecewise
    // log-linear through the published anchor points and clamped outside them:
    // pcb 10 -> 0.22, 200 -> 0.11, 1000 -> 0.09; components 1000 -> 1.88;
    // assembly 10 -> 0.51, 1000 -> 0.05 (USD).
    double cost_per_cell_usd(std::size_t n_boards, CostCategory category);
    CostCategory cost_category_from_string(const std::string &name);

    // CSV layout: header row of azimuths in degrees, one row per elevation with
    // the elevation in the first column.
    void export_pattern_csv(const PatternGrid &pattern, std::ostream &out);
    std::string pattern_to_csv(const PatternGrid &pattern);

    std::string scaling_to_json(const std::vector<ScalingPoint> &points);
    std::string grating_to_json(const std::vector<SteeringAngles> &lobes,
                                const std::vector<LobeCheck> *checks = nullptr);
    std::string cost_to_json(const std::vector<std::size_t> &board_counts);

} // namespace ris

#endif
