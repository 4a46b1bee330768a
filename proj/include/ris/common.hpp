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

#ifndef RIS_COMMON_HPP
#define RIS_COMMON_HPP

#include <cmath>
#include <stdexcept>
#include <string>

namespace ris
{
    inline constexpr double pi = 3.14159265358979323846;
    inline constexpr double two_pi = 2.0 * pi;
    inline constexpr double speed_of_light_mps = 299792458.0;

    inline double deg2rad(double deg) { return deg * pi / 180.0; }
    inline double rad2deg(double rad) { return rad * 180.0 / pi; }

    // Wrap an angle to [0, 2*pi)
    inline double wrap_two_pi(double rad)
    {
        double w = std::fmod(rad, two_pi);
        if (w < 0.0)
            w += two_pi;
        return w == two_pi ? 0.0 : w;
    }

    // Shortest circular distance between two angles, in [0, pi]
    inline double circular_distance(double a_rad, double b_rad)
    {
        return std::abs(std::remainder(a_rad - b_rad, two_pi));
    }

    inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
    inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

    // Vector/matrix dimensions do not agree
    class shape_error : public std::invalid_argument
    {
    public:
        explicit shape_error(const std::string &what) : std::invalid_argument(what) {}
    };

    // Control-plane bus discipline violation (multi-select, bad address/code)
    class protocol_error : public std::runtime_error
    {
    public:
        explicit protocol_error(const std::string &what) : std::runtime_error(what) {}
    };

    // Malformed serialized document; message carries field/entry context
    class parse_error : public std::runtime_error
    {
    public:
        explicit parse_error(const std::string &what) : std::runtime_error(what) {}
    };

    // Document version is not supported by this build
    class version_error : public parse_error
    {
    public:
        explicit version_error(const std::string &what) : parse_error(what) {}
    };

} // namespace ris

#endif
