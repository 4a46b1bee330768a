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

#include "ris/board.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>

namespace ris
{
    namespace
    {
        ActivationPattern make_pattern(std::string name, const BoardSpec &spec)
        {
            ActivationPattern p;
            p.name = std::move(name);
            p.nx = spec.nx;
            p.ny = spec.ny;
            p.mask.assign(spec.nx * spec.ny, 0);
            return p;
        }

        ActivationPattern centered_square(std::string_view name, std::size_t side, const BoardSpec &spec)
        {
            if (side > spec.nx || side > spec.ny)
                throw std::invalid_argument("pattern '" + std::string(name) + "' does not fit a " +
                                            std::to_string(spec.nx) + "x" + std::to_string(spec.ny) + " board");
            ActivationPattern p = make_pattern(std::string(name), spec);
            const std::size_t x0 = (spec.nx - side) / 2;
            const std::size_t y0 = (spec.ny - side) / 2;
            for (std::size_t ix = x0; ix < x0 + side; ++ix)
                for (std::size_t iy = y0; iy < y0 + side; ++iy)
                    p.mask[ix * spec.ny + iy] = 1;
            return p;
        }

        ActivationPattern strided(std::string_view name, std::size_t stride, const BoardSpec &spec)
        {
            ActivationPattern p = make_pattern(std::string(name), spec);
            for (std::size_t ix = 0; ix < spec.nx; ix += stride)
                for (std::size_t iy = 0; iy < spec.ny; iy += stride)
                    p.mask[ix * spec.ny + iy] = 1;
            return p;
        }

        // Positions of active cells along one axis, sorted and deduplicated
        std::vector<std::size_t> active_axis(const ActivationPattern &p, bool along_x)
        {
            std::vector<std::size_t> out;
            for (std::size_t ix = 0; ix < p.nx; ++ix)
                for (std::size_t iy = 0; iy < p.ny; ++iy)
                    if (p.mask[ix * p.ny + iy])
                        out.push_back(along_x ? ix : iy);
            std::sort(out.begin(), out.end());
            out.erase(std::unique(out.begin(), out.end()), out.end());
            return out;
        }

        // Uniform stride of a sorted index list; 0 if not uniform. A single
        // index reports stride 1 (degenerate but regular).
        std::size_t uniform_stride(const std::vector<std::size_t> &idx)
        {
            if (idx.size() < 2)
                return 1;
            const std::size_t s = idx[1] - idx[0];
            for (std::size_t i = 2; i < idx.size(); ++i)
                if (idx[i] - idx[i - 1] != s)
                    return 0;
            return s;
        }
    } // namespace

    std::size_t ActivationPattern::active_count() const
    {
        return static_cast<std::size_t>(std::count(mask.begin(), mask.end(), std::uint8_t{1}));
    }

    ActivationPattern named_pattern(std::string_view name, const BoardSpec &spec)
    {
        if (name == "2x2")
            return centered_square(name, 2, spec);
        if (name == "4x4")
            return centered_square(name, 4, spec);
        if (name == "8x8")
            return centered_square(name, 8, spec);
        if (name == "10x10")
            return centered_square(name, 10, spec); // the full board at default size
        if (name == "off2")
            return strided(name, 2, spec);
        if (name == "off3")
            return strided(name, 3, spec);
        throw std::invalid_argument("unknown activation pattern '" + std::string(name) + "'");
    }

    ActivationPattern custom_pattern(std::string name, std::size_t nx, std::size_t ny,
                                     std::vector<std::uint8_t> mask)
    {
        if (mask.size() != nx * ny)
            throw shape_error("pattern mask length " + std::to_string(mask.size()) +
                              " does not match " + std::to_string(nx) + "x" + std::to_string(ny));
        ActivationPattern p;
        p.name = std::move(name);
        p.nx = nx;
        p.ny = ny;
        p.mask = std::move(mask);
        return p;
    }

    ArrayGeometry virtual_geometry(const BoardSpec &spec, const ActivationPattern &pattern)
    {
        if (pattern.nx != spec.nx || pattern.ny != spec.ny)
            throw shape_error("activation pattern is " + std::to_string(pattern.nx) + "x" +
                              std::to_string(pattern.ny) + " but the board is " +
                              std::to_string(spec.nx) + "x" + std::to_string(spec.ny));
        if (pattern.active_count() == 0)
            throw std::invalid_argument("activation pattern '" + pattern.name +
                                        "' has no active cell (degenerate geometry)");

        const std::vector<std::size_t> xs = active_axis(pattern, true);
        const std::vector<std::size_t> ys = active_axis(pattern, false);
        const std::size_t sx = uniform_stride(xs);
        const std::size_t sy = uniform_stride(ys);

        const bool rectangular = pattern.active_count() == xs.size() * ys.size();
        if (rectangular && sx != 0 && sy != 0 && sx == sy)
            return ArrayGeometry::full(xs.size(), ys.size(),
                                       static_cast<double>(sx) * spec.spacing_ratio());

        // Irregular shape: keep the base grid and carry the mask
        ArrayGeometry g;
        g.nx = spec.nx;
        g.ny = spec.ny;
        g.delta = spec.spacing_ratio();
        g.mask = pattern.mask;
        g.validate();
        return g;
    }

    ArrayGeometry tile_boards(const BoardSpec &spec, std::size_t m_x, std::size_t m_y)
    {
        if (m_x < 1 || m_y < 1)
            throw std::invalid_argument("tile_boards: board counts must be >= 1");
        return ArrayGeometry::full(m_x * spec.nx, m_y * spec.ny, spec.spacing_ratio());
    }

    ActivationPattern load_pattern(std::istream &in, const std::string &name)
    {
        std::vector<std::string> rows;
        std::string line;
        while (std::getline(in, line))
        {
            if (!line.empty() && line.back() == '\r')
                line.pop_back();
            if (line.empty())
                continue;
            rows.push_back(line);
        }
        if (rows.empty())
            throw parse_error("pattern '" + name + "': file is empty");

        const std::size_t nx = rows.front().size();
        const std::size_t ny = rows.size();
        std::vector<std::uint8_t> mask(nx * ny, 0);
        for (std::size_t r = 0; r < ny; ++r)
        {
            if (rows[r].size() != nx)
                throw parse_error("pattern '" + name + "': row " + std::to_string(r) + " has " +
                                  std::to_string(rows[r].size()) + " columns, expected " + std::to_string(nx));
            const std::size_t iy = ny - 1 - r; // row 0 is the top of the board
            for (std::size_t ix = 0; ix < nx; ++ix)
            {
                const char c = rows[r][ix];
                if (c != '0' && c != '1')
                    throw parse_error("pattern '" + name + "': row " + std::to_string(r) + ", column " +
                                      std::to_string(ix) + ": expected '0' or '1', got '" + std::string(1, c) + "'");
                mask[ix * ny + iy] = static_cast<std::uint8_t>(c - '0');
            }
        }
        return custom_pattern(name, nx, ny, std::move(mask));
    }

    ActivationPattern load_pattern_file(const std::string &path)
    {
        std::ifstream in(path);
        if (!in)
            throw std::runtime_error("cannot open pattern file '" + path + "'");
        return load_pattern(in, path);
    }

    void save_pattern(const ActivationPattern &pattern, std::ostream &out)
    {
        for (std::size_t r = 0; r < pattern.ny; ++r)
        {
            const std::size_t iy = pattern.ny - 1 - r;
            for (std::size_t ix = 0; ix < pattern.nx; ++ix)
                out << (pattern.mask[ix * pattern.ny + iy] ? '1' : '0');
            out << '\n';
        }
    }

} // namespace ris
