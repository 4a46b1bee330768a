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

#ifndef RIS_ARRAY_MODEL_HPP
#define RIS_ARRAY_MODEL_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "ris/common.hpp"

namespace ris
{
    using ComplexVector = std::vector<std::complex<double>>;

    // Azimuth/elevation couple parameterizing array responses and codebook targets.
    // Azimuth in [-pi, pi], elevation in [-pi/2, pi/2].
    struct SteeringAngles
    {
        double azimuth_rad = 0.0;
        double elevation_rad = 0.0;

        static SteeringAngles from_degrees(double azimuth_deg, double elevation_deg)
        {
            return {deg2rad(azimuth_deg), deg2rad(elevation_deg)};
        }
        double azimuth_deg() const { return rad2deg(azimuth_rad); }
        double elevation_deg() const { return rad2deg(elevation_rad); }
    };

    // Planar cell grid: nx * ny cells, spacing-to-wavelength ratio delta, and a
    // per-cell radiating mask. Cell order is x-major: index(ix, iy) = ix*ny + iy,
    // matching the Kronecker structure of the array response (x-vector (x) y-vector).
    struct ArrayGeometry
    {
        std::size_t nx = 0;
        std::size_t ny = 0;
        double delta = 0.5;
        std::vector<std::uint8_t> mask; // 1 = radiating, 0 = absorbing/inactive

        static ArrayGeometry full(std::size_t nx, std::size_t ny, double delta);

        std::size_t size() const { return nx * ny; }
        std::size_t index(std::size_t ix, std::size_t iy) const { return ix * ny + iy; }
        bool active(std::size_t n) const { return mask[n] != 0; }
        bool active(std::size_t ix, std::size_t iy) const { return active(index(ix, iy)); }
        std::size_t active_count() const;

        void validate() const; // throws std::invalid_argument / shape_error
    };

    // Cell state encoding shared with the control plane: indices 0..6 select one of
    // the seven delay-line phases, 7 selects the matched-resistor absorber port.
    inline constexpr std::uint8_t absorb_state = 7;

    // Ordered set of allowed reflection phases. The default instance carries the
    // seven delay-line phases in output-port table order: index k holds
    // (k+1)*2*pi/7 wrapped to [0, 2*pi), so index 6 is the 360-degree line (= 0).
    class PhaseSet
    {
    public:
        PhaseSet(std::vector<double> phases_rad, bool has_absorb);

        static PhaseSet default_seven();

        const std::vector<double> &phases_rad() const { return m_phases_rad; }
        bool has_absorb() const { return m_has_absorb; }
        std::size_t size() const { return m_phases_rad.size(); }
        double phase(std::size_t index) const { return m_phases_rad.at(index); }

    private:
        std::vector<double> m_phases_rad;
        bool m_has_absorb;
    };

    // Per-cell quantized state vector: the v / Phi of the channel model.
    struct RisConfiguration
    {
        std::vector<std::uint8_t> states; // 0..6 = phase index, absorb_state = absorb

        static RisConfiguration all_absorb(std::size_t n_cells);
        std::size_t size() const { return states.size(); }
    };

    // TX-RIS-RX link: distances, reference power gain and the two angle couples.
    struct LinkGeometry
    {
        double d_t_m = 1.0;  // TX to RIS
        double d_r_m = 1.0;  // RIS to RX
        double beta0 = 1.0;  // average channel power gain at reference distance
        SteeringAngles tx_angles;
        SteeringAngles rx_angles;
    };

    // Average channel power gain beta0 / d^2
    double channel_gain(double beta0, double distance_m);

    // Array response for the given steering angles; entry for cell (ix, iy) is
    // exp(j*2*pi*delta*(ix*cos(azimuth) + iy*sin(elevation))). The mask is NOT
    // applied here: this is the pure response of every grid position.
    ComplexVector upa_response(const ArrayGeometry &geometry, const SteeringAngles &angles);

    // Line-of-sight channel sqrt(gain) * upa_response(...). gain must be > 0.
    ComplexVector los_channel(const ArrayGeometry &geometry, const SteeringAngles &angles, double gain);

    // Entry-wise conj(h) * g; the effective cascaded channel h-bar.
    ComplexVector cascaded_channel(const ComplexVector &h, const ComplexVector &g);

    // Per-cell complex coefficients of a configuration: exp(j*psi) for phase
    // states, 0 for absorb. Any state on a masked-off cell contributes 0 as well,
    // so one codebook can be run against many activation patterns.
    ComplexVector config_weights(const RisConfiguration &config, const ArrayGeometry &geometry,
                                 const PhaseSet &set);

    // Received signal sum_n coeff(config_n) * hbar_n (noiseless, unit symbol).
    // Received power is |result|^2.
    std::complex<double> apply_config(const RisConfiguration &config, const ArrayGeometry &geometry,
                                      const PhaseSet &set, const ComplexVector &hbar);

    // Same sum with explicit complex weights (continuous-phase / oracle mode).
    std::complex<double> apply_weights(const ComplexVector &weights, const ComplexVector &hbar);

    // Index of the set phase closest to target_rad in circular distance.
    // Ties resolve to the smaller index. Never returns the absorb state.
    std::size_t quantize_phase(double target_rad, const PhaseSet &set);

    // Best quantized configuration for the cascaded channel hbar. Each active
    // cell takes the set phase aligning its term toward a common direction; the
    // direction is optimized over its finitely many switching points, which
    // attains the exhaustive optimum over phase-only configurations
    // (nearest-to-zero alignment alone can fall short of it). On ties the
    // zero-direction assignment wins. Masked-off cells are set to absorb.
    RisConfiguration optimal_config(const ComplexVector &hbar, const PhaseSet &set,
                                    const ArrayGeometry &geometry);

    // Unquantized counterpart of optimal_config: unit-modulus conjugate weights
    // exp(-j*arg(hbar_n)) on active cells, 0 elsewhere. With these weights the
    // received power equals (sum_n |hbar_n|)^2 over the active cells.
    ComplexVector optimal_weights(const ComplexVector &hbar, const ArrayGeometry &geometry);

} // namespace ris

#endif
