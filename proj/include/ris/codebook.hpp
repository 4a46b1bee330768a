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

#ifndef RIS_CODEBOOK_HPP
#define RIS_CODEBOOK_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "ris/array_model.hpp"

namespace ris
{
    // Inclusive angular grid in degrees. Both interval endpoints belong to the
    // grid, so the spacing must divide each span exactly; anything else is
    // rejected rather than silently truncated.
    struct AngularGrid
    {
        double azimuth_lo_deg = -90.0;
        double azimuth_hi_deg = 90.0;
        double elevation_lo_deg = -45.0;
        double elevation_hi_deg = 45.0;
        double spacing_deg = 3.0;

        // The default 3-degree grid of the prototype codebook: 61 x 31 = 1891 points
        static AngularGrid paper_default() { return AngularGrid{}; }

        std::size_t azimuth_count() const;
        std::size_t elevation_count() const;
        std::size_t size() const { return azimuth_count() * elevation_count(); }
        void validate() const;
    };

    // All grid couples in row-major order: azimuth outer, elevation inner.
    std::vector<SteeringAngles> angular_grid(const AngularGrid &grid);

    struct CodebookEntry
    {
        SteeringAngles target;
        RisConfiguration config;
    };

    struct Codebook
    {
        ArrayGeometry geometry;
        AngularGrid grid;
        std::vector<CodebookEntry> entries; // row-major over the grid

        const CodebookEntry &entry_at(std::size_t i_azimuth, std::size_t i_elevation) const;

        // Index of the entry whose target is closest to the requested angles
        // (Euclidean in the az/el plane; ties resolve to the lower index).
        std::size_t nearest_index(const SteeringAngles &target) const;
    };

    // Build the codebook: for every grid couple the pure UPA response acts as the
    // surrogate cascaded channel (any scaling term cannot change per-cell angles)
    // and the quantized optimal configuration is stored. Deterministic.
    Codebook build_codebook(const ArrayGeometry &geometry, const AngularGrid &grid,
                            const PhaseSet &set);

    // Versioned JSON document; cell states are small integers 0..7 with 7 = absorb.
    // load(save(cb)) is structurally identical to cb and serialization is
    // byte-stable, so builds can be compared as files.
    void save_codebook(const Codebook &cb, std::ostream &out);
    void save_codebook(const Codebook &cb, const std::string &path);
    std::string codebook_to_string(const Codebook &cb);
    Codebook load_codebook(std::istream &in);
    Codebook load_codebook_file(const std::string &path);

    bool operator==(const Codebook &a, const Codebook &b);

} // namespace ris

#endif
