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

#include "ris/codebook.hpp"

#include <cmath>
#include <fstream>
#include <limits>

#include <json.hpp>

namespace ris
{
    namespace
    {
        constexpr int codebook_format_version = 1;

        // Number of inclusive grid points on one axis, or 0 if the spacing does
        // not divide the span (within a 1e-9 degree tolerance).
        std::size_t axis_count(double lo, double hi, double step)
        {
            const double span = hi - lo;
            const double k = std::round(span / step);
            if (std::abs(k * step - span) > 1e-9)
                return 0;
            return static_cast<std::size_t>(k) + 1;
        }
    } // namespace

    std::size_t AngularGrid::azimuth_count() const
    {
        validate();
        return axis_count(azimuth_lo_deg, azimuth_hi_deg, spacing_deg);
    }

    std::size_t AngularGrid::elevation_count() const
    {
        validate();
        return axis_count(elevation_lo_deg, elevation_hi_deg, spacing_deg);
    }

    void AngularGrid::validate() const
    {
        if (!(spacing_deg > 0.0))
            throw std::invalid_argument("angular grid: spacing must be > 0");
        if (azimuth_hi_deg < azimuth_lo_deg || elevation_hi_deg < elevation_lo_deg)
            throw std::invalid_argument("angular grid: ranges must be well-ordered");
        if (axis_count(azimuth_lo_deg, azimuth_hi_deg, spacing_deg) == 0)
            throw std::invalid_argument("angular grid: spacing " + std::to_string(spacing_deg) +
                                        " deg does not divide the azimuth span");
        if (axis_count(elevation_lo_deg, elevation_hi_deg, spacing_deg) == 0)
            throw std::invalid_argument("angular grid: spacing " + std::to_string(spacing_deg) +
                                        " deg does not divide the elevation span");
    }

    std::vector<SteeringAngles> angular_grid(const AngularGrid &grid)
    {
        grid.validate();
        const std::size_t n_az = grid.azimuth_count();
        const std::size_t n_el = grid.elevation_count();

        std::vector<SteeringAngles> points;
        points.reserve(n_az * n_el);
        for (std::size_t ia = 0; ia < n_az; ++ia)
        {
            const double az = grid.azimuth_lo_deg + static_cast<double>(ia) * grid.spacing_deg;
            for (std::size_t ie = 0; ie < n_el; ++ie)
            {
                const double el = grid.elevation_lo_deg + static_cast<double>(ie) * grid.spacing_deg;
                points.push_back(SteeringAngles::from_degrees(az, el));
            }
        }
        return points;
    }

    const CodebookEntry &Codebook::entry_at(std::size_t i_azimuth, std::size_t i_elevation) const
    {
        return entries.at(i_azimuth * grid.elevation_count() + i_elevation);
    }

    std::size_t Codebook::nearest_index(const SteeringAngles &target) const
    {
        if (entries.empty())
            throw std::invalid_argument("codebook is empty");
        std::size_t best = 0;
        double best_d2 = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < entries.size(); ++i)
        {
            const double da = entries[i].target.azimuth_rad - target.azimuth_rad;
            const double de = entries[i].target.elevation_rad - target.elevation_rad;
            const double d2 = da * da + de * de;
            if (d2 < best_d2)
            {
                best_d2 = d2;
                best = i;
            }
        }
        return best;
    }

    Codebook build_codebook(const ArrayGeometry &geometry, const AngularGrid &grid,
                            const PhaseSet &set)
    {
        geometry.validate();
        Codebook cb;
        cb.geometry = geometry;
        cb.grid = grid;

        const std::vector<SteeringAngles> targets = angular_grid(grid);
        cb.entries.reserve(targets.size());
        for (const SteeringAngles &target : targets)
        {
            const ComplexVector hbar = upa_response(geometry, target); // surrogate channel, unit gains
            cb.entries.push_back({target, optimal_config(hbar, set, geometry)});
        }
        return cb;
    }

    std::string codebook_to_string(const Codebook &cb)
    {
        nlohmann::json doc;
        doc["version"] = codebook_format_version;
        doc["nx"] = cb.geometry.nx;
        doc["ny"] = cb.geometry.ny;
        doc["delta"] = cb.geometry.delta;
        doc["mask"] = cb.geometry.mask;
        doc["spacing_deg"] = cb.grid.spacing_deg;
        doc["azimuth_range_deg"] = {cb.grid.azimuth_lo_deg, cb.grid.azimuth_hi_deg};
        doc["elevation_range_deg"] = {cb.grid.elevation_lo_deg, cb.grid.elevation_hi_deg};

        nlohmann::json entries = nlohmann::json::array();
        for (const CodebookEntry &entry : cb.entries)
            entries.push_back(entry.config.states);
        doc["entries"] = std::move(entries);
        return doc.dump(1) + "\n";
    }

    void save_codebook(const Codebook &cb, std::ostream &out)
    {
        out << codebook_to_string(cb);
    }

    void save_codebook(const Codebook &cb, const std::string &path)
    {
        std::ofstream out(path, std::ios::binary);
        if (!out)
            throw std::runtime_error("cannot open '" + path + "' for writing");
        save_codebook(cb, out);
    }

    Codebook load_codebook(std::istream &in)
    {
        nlohmann::json doc;
        try
        {
            doc = nlohmann::json::parse(in);
        }
        catch (const nlohmann::json::parse_error &e)
        {
            throw parse_error(std::string("codebook document: ") + e.what());
        }

        try
        {
            const int version = doc.at("version").get<int>();
            if (version != codebook_format_version)
                throw version_error("codebook document version " + std::to_string(version) +
                                    " is not supported (expected " +
                                    std::to_string(codebook_format_version) + ")");

            Codebook cb;
            cb.geometry.nx = doc.at("nx").get<std::size_t>();
            cb.geometry.ny = doc.at("ny").get<std::size_t>();
            cb.geometry.delta = doc.at("delta").get<double>();
            cb.geometry.mask = doc.at("mask").get<std::vector<std::uint8_t>>();
            cb.geometry.validate();

            cb.grid.spacing_deg = doc.at("spacing_deg").get<double>();
            const auto az = doc.at("azimuth_range_deg");
            const auto el = doc.at("elevation_range_deg");
            cb.grid.azimuth_lo_deg = az.at(0).get<double>();
            cb.grid.azimuth_hi_deg = az.at(1).get<double>();
            cb.grid.elevation_lo_deg = el.at(0).get<double>();
            cb.grid.elevation_hi_deg = el.at(1).get<double>();
            cb.grid.validate();

            const auto &entries = doc.at("entries");
            const std::vector<SteeringAngles> targets = angular_grid(cb.grid);
            if (entries.size() != targets.size())
                throw parse_error("codebook document: 'entries' has " + std::to_string(entries.size()) +
                                  " items, grid implies " + std::to_string(targets.size()));

            cb.entries.reserve(targets.size());
            for (std::size_t i = 0; i < entries.size(); ++i)
            {
                const auto &states = entries.at(i);
                if (states.size() != cb.geometry.size())
                    throw parse_error("codebook document: entry " + std::to_string(i) + " has " +
                                      std::to_string(states.size()) + " cell states, expected " +
                                      std::to_string(cb.geometry.size()));
                RisConfiguration config;
                config.states.reserve(states.size());
                for (std::size_t n = 0; n < states.size(); ++n)
                {
                    const int s = states.at(n).get<int>();
                    if (s < 0 || s > absorb_state)
                        throw parse_error("codebook document: entry " + std::to_string(i) + ", cell " +
                                          std::to_string(n) + ": state " + std::to_string(s) +
                                          " is outside 0..7");
                    config.states.push_back(static_cast<std::uint8_t>(s));
                }
                cb.entries.push_back({targets[i], std::move(config)});
            }
            return cb;
        }
        catch (const nlohmann::json::exception &e)
        {
            throw parse_error(std::string("codebook document: ") + e.what());
        }
    }

    Codebook load_codebook_file(const std::string &path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw std::runtime_error("cannot open codebook file '" + path + "'");
        return load_codebook(in);
    }

    bool operator==(const Codebook &a, const Codebook &b)
    {
        if (a.geometry.nx != b.geometry.nx || a.geometry.ny != b.geometry.ny ||
            a.geometry.delta != b.geometry.delta || a.geometry.mask != b.geometry.mask)
            return false;
        if (a.grid.azimuth_lo_deg != b.grid.azimuth_lo_deg || a.grid.azimuth_hi_deg != b.grid.azimuth_hi_deg ||
            a.grid.elevation_lo_deg != b.grid.elevation_lo_deg ||
            a.grid.elevation_hi_deg != b.grid.elevation_hi_deg || a.grid.spacing_deg != b.grid.spacing_deg)
            return false;
        if (a.entries.size() != b.entries.size())
            return false;
        for (std::size_t i = 0; i < a.entries.size(); ++i)
            if (a.entries[i].config.states != b.entries[i].config.states)
                return false;
        return true;
    }

} // namespace ris
