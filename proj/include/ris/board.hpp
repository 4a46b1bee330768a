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

#ifndef RIS_BOARD_HPP
#define RIS_BOARD_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ris/array_model.hpp"

namespace ris
{
    // Physical board parameters. Default is the 10x10 prototype at 5.3 GHz with
    // half-wavelength cell pitch.
    struct BoardSpec
    {
        std::size_t nx = 10;
        std::size_t ny = 10;
        double frequency_hz = 5.3e9;
        double cell_pitch_m = 0.5 * speed_of_light_mps / 5.3e9;

        static BoardSpec paper_default() { return BoardSpec{}; }

        double wavelength_m() const { return speed_of_light_mps / frequency_hz; }
        double spacing_ratio() const { return cell_pitch_m / wavelength_m(); } // the delta of the array model
    };

    // Named cell-activation shape on a board; mask order matches ArrayGeometry
    // (x-major, index = ix*ny + iy).
    struct ActivationPattern
    {
        std::string name;
        std::size_t nx = 0;
        std::size_t ny = 0;
        std::vector<std::uint8_t> mask;

        std::size_t active_count() const;
    };

    // Build one of the canonical activation shapes:
    //   "2x2", "4x4", "8x8"  centered sub-squares (even differences resolve toward
    //                        the lower-left corner)
    //   "10x10"              full board
    //   "off2"               every 2nd cell on both axes, anchored at (0,0)
    //   "off3"               every 3rd cell on both axes, anchored at (0,0)
    // Unknown names throw std::invalid_argument.
    ActivationPattern named_pattern(std::string_view name, const BoardSpec &spec);

    // Wrap an explicit mask (e.g. read from a pattern file) as an ActivationPattern.
    ActivationPattern custom_pattern(std::string name, std::size_t nx, std::size_t ny,
                                     std::vector<std::uint8_t> mask);

    // Effective array geometry of a virtual RIS. Patterns whose active cells form
    // a regular strided subgrid collapse to a dense geometry with the effective
    // spacing ratio (off2 -> 5x5 at delta = 1.0, off3 -> 4x4 at delta = 1.5);
    // irregular patterns keep the base board spacing with the mask applied.
    // An all-off pattern is a degenerate geometry and throws.
    ArrayGeometry virtual_geometry(const BoardSpec &spec, const ActivationPattern &pattern);

    // Geometry of an m_x x m_y tiling of identical boards. Cell pitch is
    // preserved across board seams, so the result is one uniform array.
    ArrayGeometry tile_boards(const BoardSpec &spec, std::size_t m_x, std::size_t m_y);

    // Pattern file format: ny text lines of nx '0'/'1' characters. Line 0 is the
    // top row of the board (iy = ny-1); the last line is iy = 0.
    ActivationPattern load_pattern(std::istream &in, const std::string &name);
    ActivationPattern load_pattern_file(const std::string &path);
    void save_pattern(const ActivationPattern &pattern, std::ostream &out);

} // namespace ris

#endif
