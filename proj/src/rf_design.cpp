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

#include "ris/rf_design.hpp"

#include <cmath>
#include <stdexcept>

#include "ris/common.hpp"

namespace ris
{

    DesignPreset paper_preset()
    {
        DesignPreset p;
        p.name = "paper";
        p.frequency_hz = 5.5e9;
        p.substrate = SubstrateSpec{4.3, 0.53e-3};
        return p;
    }

    DesignPreset paper_corrected_preset()
    {
        DesignPreset p;
        p.name = "paper-corrected";
        p.frequency_hz = 5.3e9;
        p.substrate = SubstrateSpec{4.66, 0.53e-3};
        return p;
    }

    PatchDesign patch_dimensions(double frequency_hz, const SubstrateSpec &substrate)
    {
        if (!(frequency_hz > 0.0))
            throw std::domain_error("patch dimensions: frequency must be > 0");
        if (!(substrate.eps_r >= 1.0))
            throw std::domain_error("patch dimensions: eps_r must be >= 1");
        if (!(substrate.height_m > 0.0))
            throw std::domain_error("patch dimensions: substrate height must be > 0");

        const double lambda = speed_of_light_mps / frequency_hz;
        const double eps_r = substrate.eps_r;
        const double h = substrate.height_m;

        PatchDesign d;
        d.width_m = lambda / (2.0 * std::sqrt(0.5 * (eps_r + 1.0)));

        const double h_over_w = h / d.width_m; // the model's w is the patch width
        d.eps_eff = (eps_r + 1.0) / 2.0 + (eps_r - 1.0) / 2.0 / std::sqrt(1.0 + 12.0 * h_over_w);
        d.l_eff_m = speed_of_light_mps / (2.0 * frequency_hz * std::sqrt(d.eps_eff));
        d.delta_l_m = 0.412 * h * (d.eps_eff + 0.3) / (d.eps_eff - 0.258) *
                      (h_over_w + 0.264) / (h_over_w + 0.8);
        d.length_m = d.l_eff_m - 2.0 * d.delta_l_m;
        return d;
    }

    double notch_depth(double length_m, double r_edge_ohm, double r_target_ohm)
    {
        if (!(length_m > 0.0))
            throw std::domain_error("notch depth: patch length must be > 0");
        if (!(r_target_ohm > 0.0) || !(r_edge_ohm > 0.0) || r_target_ohm > r_edge_ohm)
            throw std::domain_error("notch depth: requires 0 < R <= R_edge");
        return length_m / pi * std::acos(std::sqrt(r_target_ohm / r_edge_ohm));
    }

    PatchDesign complete_patch_design(double frequency_hz, const SubstrateSpec &substrate,
                                      double r_edge_ohm, double r_target_ohm)
    {
        PatchDesign d = patch_dimensions(frequency_hz, substrate);
        d.notch_depth_m = notch_depth(d.length_m, r_edge_ohm, r_target_ohm);
        return d;
    }

    double delay_line_length(double phase_deg, double frequency_hz, double v_f)
    {
        if (!(frequency_hz > 0.0))
            throw std::domain_error("delay line length: frequency must be > 0");
        if (!(v_f > 0.0) || v_f > 1.0)
            throw std::domain_error("delay line length: velocity factor must be in (0, 1]");
        return phase_deg * speed_of_light_mps * v_f / (720.0 * frequency_hz);
    }

    double phase_of_length(double length_m, double frequency_hz, double v_f)
    {
        if (!(frequency_hz > 0.0))
            throw std::domain_error("phase of length: frequency must be > 0");
        if (!(v_f > 0.0) || v_f > 1.0)
            throw std::domain_error("phase of length: velocity factor must be in (0, 1]");
        const double phase = 720.0 * frequency_hz * length_m / (speed_of_light_mps * v_f);
        return rad2deg(wrap_two_pi(deg2rad(phase)));
    }

    std::array<DelayLineRow, 7> delay_line_table(double frequency_hz, double v_f)
    {
        // Output-port assignment of the 3-bit switch, in increasing phase order
        static constexpr std::array<int, 7> ports = {7, 6, 5, 1, 3, 2, 4};

        std::array<DelayLineRow, 7> table;
        for (std::size_t k = 0; k < 7; ++k)
        {
            const double phase_deg = static_cast<double>(k + 1) * 360.0 / 7.0;
            table[k] = {ports[k], phase_deg, delay_line_length(phase_deg, frequency_hz, v_f)};
        }
        return table;
    }

    double velocity_factor(double length_m, double delay_s)
    {
        if (!(length_m > 0.0) || !(delay_s > 0.0))
            throw std::domain_error("velocity factor: length and delay must be > 0");
        return length_m / delay_s / speed_of_light_mps;
    }

    double max_spacing(double theta_max_rad, double wavelength_m)
    {
        if (theta_max_rad < 0.0 || theta_max_rad > pi / 2.0)
            throw std::domain_error("max spacing: theta_max must be in [0, pi/2]");
        if (!(wavelength_m > 0.0))
            throw std::domain_error("max spacing: wavelength must be > 0");
        return wavelength_m / (1.0 + std::sin(theta_max_rad));
    }

    FieldRegions field_regions(double diagonal_m, double wavelength_m)
    {
        if (!(diagonal_m > 0.0) || !(wavelength_m > 0.0))
            throw std::domain_error("field regions: diagonal and wavelength must be > 0");
        FieldRegions r;
        r.far_field_m = 2.0 * diagonal_m * diagonal_m / wavelength_m;
        r.reactive_near_m = 0.62 * std::sqrt(diagonal_m * diagonal_m * diagonal_m / wavelength_m);
        return r;
    }

} // namespace ris
