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

#include "ris/array_model.hpp"

#include <algorithm>
#include <numeric>

namespace ris
{

    ArrayGeometry ArrayGeometry::full(std::size_t nx, std::size_t ny, double delta)
    {
        ArrayGeometry g;
        g.nx = nx;
        g.ny = ny;
        g.delta = delta;
        g.mask.assign(nx * ny, 1);
        g.validate();
        return g;
    }

    std::size_t ArrayGeometry::active_count() const
    {
        return static_cast<std::size_t>(std::count(mask.begin(), mask.end(), std::uint8_t{1}));
    }

    void ArrayGeometry::validate() const
    {
        if (nx < 1 || ny < 1)
            throw std::invalid_argument("array geometry: nx and ny must be >= 1");
        if (!(delta > 0.0))
            throw std::invalid_argument("array geometry: spacing ratio delta must be > 0");
        if (mask.size() != size())
            throw shape_error("array geometry: mask length " + std::to_string(mask.size()) +
                              " does not match nx*ny = " + std::to_string(size()));
    }

    PhaseSet::PhaseSet(std::vector<double> phases_rad, bool has_absorb)
        : m_phases_rad(std::move(phases_rad)), m_has_absorb(has_absorb)
    {
        for (double p : m_phases_rad)
            if (p < 0.0 || p >= two_pi)
                throw std::invalid_argument("phase set: phases must lie in [0, 2*pi)");
    }

    PhaseSet PhaseSet::default_seven()
    {
        std::vector<double> phases(7);
        for (std::size_t k = 0; k < 7; ++k)
            phases[k] = wrap_two_pi(static_cast<double>(k + 1) * two_pi / 7.0);
        return PhaseSet(std::move(phases), true);
    }

    RisConfiguration RisConfiguration::all_absorb(std::size_t n_cells)
    {
        RisConfiguration c;
        c.states.assign(n_cells, absorb_state);
        return c;
    }

    double channel_gain(double beta0, double distance_m)
    {
        if (!(beta0 > 0.0))
            throw std::domain_error("channel gain: beta0 must be > 0");
        if (!(distance_m > 0.0))
            throw std::domain_error("channel gain: distance must be > 0");
        return beta0 / (distance_m * distance_m);
    }

    ComplexVector upa_response(const ArrayGeometry &geometry, const SteeringAngles &angles)
    {
        geometry.validate();
        const double phase_x = two_pi * geometry.delta * std::cos(angles.azimuth_rad);
        const double phase_y = two_pi * geometry.delta * std::sin(angles.elevation_rad);

        ComplexVector out(geometry.size());
        for (std::size_t ix = 0; ix < geometry.nx; ++ix)
            for (std::size_t iy = 0; iy < geometry.ny; ++iy)
                out[geometry.index(ix, iy)] =
                    std::polar(1.0, phase_x * static_cast<double>(ix) + phase_y * static_cast<double>(iy));
        return out;
    }

    ComplexVector los_channel(const ArrayGeometry &geometry, const SteeringAngles &angles, double gain)
    {
        if (!(gain > 0.0))
            throw std::domain_error("los channel: gain must be > 0");
        ComplexVector response = upa_response(geometry, angles);
        const double amplitude = std::sqrt(gain);
        for (auto &entry : response)
            entry *= amplitude;
        return response;
    }

    ComplexVector cascaded_channel(const ComplexVector &h, const ComplexVector &g)
    {
        if (h.size() != g.size())
            throw shape_error("cascaded channel: length mismatch (" + std::to_string(h.size()) +
                              " vs " + std::to_string(g.size()) + ")");
        ComplexVector hbar(h.size());
        for (std::size_t n = 0; n < h.size(); ++n)
            hbar[n] = std::conj(h[n]) * g[n];
        return hbar;
    }

    ComplexVector config_weights(const RisConfiguration &config, const ArrayGeometry &geometry,
                                 const PhaseSet &set)
    {
        geometry.validate();
        if (config.size() != geometry.size())
            throw shape_error("configuration length " + std::to_string(config.size()) +
                              " does not match geometry size " + std::to_string(geometry.size()));

        ComplexVector weights(config.size(), {0.0, 0.0});
        for (std::size_t n = 0; n < config.size(); ++n)
        {
            const std::uint8_t state = config.states[n];
            if (state == absorb_state || !geometry.active(n))
                continue;
            if (state >= set.size())
                throw std::invalid_argument("configuration state " + std::to_string(state) +
                                            " is outside the phase set at cell " + std::to_string(n));
            weights[n] = std::polar(1.0, set.phase(state));
        }
        return weights;
    }

    std::complex<double> apply_config(const RisConfiguration &config, const ArrayGeometry &geometry,
                                      const PhaseSet &set, const ComplexVector &hbar)
    {
        if (hbar.size() != geometry.size())
            throw shape_error("channel length " + std::to_string(hbar.size()) +
                              " does not match geometry size " + std::to_string(geometry.size()));
        const ComplexVector weights = config_weights(config, geometry, set);
        return apply_weights(weights, hbar);
    }

    std::complex<double> apply_weights(const ComplexVector &weights, const ComplexVector &hbar)
    {
        if (weights.size() != hbar.size())
            throw shape_error("weights length " + std::to_string(weights.size()) +
                              " does not match channel length " + std::to_string(hbar.size()));
        std::complex<double> acc{0.0, 0.0};
        for (std::size_t n = 0; n < weights.size(); ++n)
            acc += weights[n] * hbar[n];
        return acc;
    }

    std::size_t quantize_phase(double target_rad, const PhaseSet &set)
    {
        if (set.size() == 0)
            throw std::invalid_argument("quantize phase: empty phase set");

        const double target = wrap_two_pi(target_rad);
        std::size_t best = 0;
        double best_distance = circular_distance(target, set.phase(0));
        for (std::size_t k = 1; k < set.size(); ++k)
        {
            const double d = circular_distance(target, set.phase(k));
            if (d < best_distance)
            {
                best_distance = d;
                best = k;
            }
        }
        return best;
    }

    RisConfiguration optimal_config(const ComplexVector &hbar, const PhaseSet &set,
                                    const ArrayGeometry &geometry)
    {
        geometry.validate();
        if (hbar.size() != geometry.size())
            throw shape_error("channel length " + std::to_string(hbar.size()) +
                              " does not match geometry size " + std::to_string(geometry.size()));
        if (set.size() == 0)
            throw std::invalid_argument("optimal config: empty phase set");

        // Start from the alignment toward zero phase: state = nearest to -arg(hbar_n)
        RisConfiguration config;
        config.states.resize(hbar.size());
        std::vector<std::size_t> active;
        for (std::size_t n = 0; n < hbar.size(); ++n)
        {
            if (!geometry.active(n))
            {
                config.states[n] = absorb_state;
                continue;
            }
            config.states[n] = static_cast<std::uint8_t>(quantize_phase(-std::arg(hbar[n]), set));
            active.push_back(n);
        }
        if (set.size() == 1 || active.size() < 2)
            return config;

        // Per-cell nearest quantization alone does not reach the best quantized
        // sum: the terms may be aligned toward any common direction phi, and the
        // exhaustive optimum always lies in that family. Each cell's preferred
        // state switches at the circular midpoints between adjacent set phases,
        // so sweeping phi over its |set|*|active| breakpoints visits every
        // candidate; the first configuration encountered with the highest power
        // wins, keeping the zero-direction states on ties.
        std::vector<std::pair<double, std::size_t>> sorted_phases(set.size());
        for (std::size_t k = 0; k < set.size(); ++k)
            sorted_phases[k] = {set.phase(k), k};
        std::sort(sorted_phases.begin(), sorted_phases.end());

        struct Event
        {
            double phi;
            std::size_t cell;
            std::uint8_t state; // state the cell switches to when phi crosses
        };
        std::vector<Event> events;
        events.reserve(active.size() * set.size());
        for (std::size_t n : active)
        {
            const double theta = wrap_two_pi(std::arg(hbar[n]));
            for (std::size_t j = 0; j < sorted_phases.size(); ++j)
            {
                const std::size_t prev = (j + sorted_phases.size() - 1) % sorted_phases.size();
                const double arc = wrap_two_pi(sorted_phases[j].first - sorted_phases[prev].first);
                const double mid = sorted_phases[prev].first + 0.5 * (arc == 0.0 ? two_pi : arc);
                events.push_back({wrap_two_pi(theta + mid), n,
                                  static_cast<std::uint8_t>(sorted_phases[j].second)});
            }
        }
        std::sort(events.begin(), events.end(), [](const Event &a, const Event &b) {
            if (a.phi != b.phi)
                return a.phi < b.phi;
            if (a.cell != b.cell)
                return a.cell < b.cell;
            return a.state < b.state;
        });

        std::vector<std::uint8_t> states = config.states;
        std::complex<double> sum{0.0, 0.0};
        double amplitude_sum = 0.0;
        for (std::size_t n : active)
        {
            sum += std::polar(1.0, set.phase(states[n])) * hbar[n];
            amplitude_sum += std::abs(hbar[n]);
        }
        double best_power = std::norm(sum);
        std::vector<std::uint8_t> best_states = states;

        // Equal-power candidates (e.g. whole-set rotations of the same member)
        // must not displace the zero-direction states through rounding drift,
        // so an update needs to clear a scale-relative margin.
        const double margin = 1e-11 * amplitude_sum * amplitude_sum;

        for (const Event &event : events)
        {
            const std::size_t n = event.cell;
            if (states[n] == event.state)
                continue;
            sum += (std::polar(1.0, set.phase(event.state)) - std::polar(1.0, set.phase(states[n]))) *
                   hbar[n];
            states[n] = event.state;
            const double power = std::norm(sum);
            if (power > best_power + margin)
            {
                best_power = power;
                best_states = states;
            }
        }
        config.states = std::move(best_states);
        return config;
    }

    ComplexVector optimal_weights(const ComplexVector &hbar, const ArrayGeometry &geometry)
    {
        geometry.validate();
        if (hbar.size() != geometry.size())
            throw shape_error("channel length " + std::to_string(hbar.size()) +
                              " does not match geometry size " + std::to_string(geometry.size()));

        ComplexVector weights(hbar.size(), {0.0, 0.0});
        for (std::size_t n = 0; n < hbar.size(); ++n)
            if (geometry.active(n))
                weights[n] = std::polar(1.0, -std::arg(hbar[n]));
        return weights;
    }

} // namespace ris
