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

#include "ris/control_plane.hpp"

#include <cstdio>
#include <ostream>

namespace ris
{

    BoardBusState::BoardBusState(std::size_t nx_, std::size_t ny_, int board_id_)
        : nx(nx_), ny(ny_), board_id(board_id_)
    {
        if (nx < 1 || ny < 1)
            throw std::invalid_argument("board bus state: nx and ny must be >= 1");
        row_lines.assign(nx, 0);
        col_lines.assign(ny, 0);
        latched.assign(nx * ny, absorber_code);
    }

    std::uint8_t BoardBusState::latched_code(std::size_t x, std::size_t y) const
    {
        if (x >= nx || y >= ny)
            throw protocol_error("latched_code: cell (" + std::to_string(x) + "," + std::to_string(y) +
                                 ") is outside the " + std::to_string(nx) + "x" + std::to_string(ny) + " board");
        return latched[x * ny + y];
    }

    void pulse_bus(BoardBusState &state, const std::vector<std::uint8_t> &rows,
                   const std::vector<std::uint8_t> &cols, std::uint8_t code)
    {
        if (rows.size() != state.nx || cols.size() != state.ny)
            throw protocol_error("pulse_bus: selection line counts do not match the board");
        if (code > absorber_code)
            throw protocol_error("pulse_bus: code " + std::to_string(code) + " does not fit the 3-bit phase bus");

        std::size_t rows_high = 0, cols_high = 0;
        for (std::uint8_t r : rows)
            rows_high += (r != 0);
        for (std::uint8_t c : cols)
            cols_high += (c != 0);
        if (rows_high > 1 || cols_high > 1)
            throw protocol_error("pulse_bus: " + std::to_string(rows_high) + " rows and " +
                                 std::to_string(cols_high) +
                                 " columns selected; at most one of each may be high during a write");

        state.row_lines = rows;
        state.col_lines = cols;
        state.phase_bus = {static_cast<std::uint8_t>(code & 1u), static_cast<std::uint8_t>((code >> 1) & 1u),
                           static_cast<std::uint8_t>((code >> 2) & 1u)};

        // Every AND gate sees its row and column line; a high output is the
        // rising edge that clocks that cell's flip-flops with the phase bus.
        for (std::size_t x = 0; x < state.nx; ++x)
            for (std::size_t y = 0; y < state.ny; ++y)
                if (state.row_lines[x] && state.col_lines[y])
                    state.latched[x * state.ny + y] =
                        static_cast<std::uint8_t>(state.phase_bus[0] | (state.phase_bus[1] << 1) |
                                                  (state.phase_bus[2] << 2));

        // Lines return to low after the write
        state.row_lines.assign(state.nx, 0);
        state.col_lines.assign(state.ny, 0);
        state.phase_bus = {0, 0, 0};
    }

    void write_cell(BoardBusState &state, std::size_t x, std::size_t y, std::uint8_t code)
    {
        if (x >= state.nx || y >= state.ny)
            throw protocol_error("write_cell: cell (" + std::to_string(x) + "," + std::to_string(y) +
                                 ") is outside the " + std::to_string(state.nx) + "x" +
                                 std::to_string(state.ny) + " board");
        if (code > absorber_code)
            throw protocol_error("write_cell: code " + std::to_string(code) + " is outside 0..7");

        std::vector<std::uint8_t> rows(state.nx, 0), cols(state.ny, 0);
        rows[x] = 1;
        cols[y] = 1;
        pulse_bus(state, rows, cols, code);
    }

    ProgramTrace program_board(BoardBusState &state, const RisConfiguration &config,
                               double per_cell_latency_s)
    {
        if (!(per_cell_latency_s > 0.0))
            throw std::invalid_argument("program_board: per-cell latency must be > 0");
        if (config.size() == 0)
            return ProgramTrace{{}, per_cell_latency_s, 0.0}; // nothing to program
        if (config.size() != state.cell_count())
            throw shape_error("program_board: configuration has " + std::to_string(config.size()) +
                              " states but the board has " + std::to_string(state.cell_count()) + " cells");

        ProgramTrace trace;
        trace.per_cell_latency_s = per_cell_latency_s;
        trace.steps.reserve(config.size());
        for (std::size_t x = 0; x < state.nx; ++x)
            for (std::size_t y = 0; y < state.ny; ++y)
            {
                const std::uint8_t s = config.states[x * state.ny + y];
                const std::uint8_t code = (s == absorb_state) ? absorber_code : s;
                write_cell(state, x, y, code);
                trace.steps.push_back({state.board_id, x, y, code});
            }
        trace.estimated_time_s = static_cast<double>(trace.steps.size()) * per_cell_latency_s;
        return trace;
    }

    void replay_trace(BoardBusState &state, const ProgramTrace &trace)
    {
        for (const TraceStep &step : trace.steps)
            write_cell(state, step.x, step.y, step.code);
    }

    BusLineCount bus_line_count(std::size_t nx, std::size_t ny)
    {
        if (nx < 1 || ny < 1)
            throw std::invalid_argument("bus_line_count: nx and ny must be >= 1");
        return {nx + ny, 3};
    }

    void export_trace_csv(const ProgramTrace &trace, std::ostream &out)
    {
        out << "board_id,x,y,code,timestamp_s\n";
        char buf[64];
        for (std::size_t i = 0; i < trace.steps.size(); ++i)
        {
            const TraceStep &s = trace.steps[i];
            std::snprintf(buf, sizeof(buf), "%.6g",
                          static_cast<double>(i + 1) * trace.per_cell_latency_s);
            out << s.board_id << ',' << s.x << ',' << s.y << ',' << static_cast<int>(s.code) << ','
                << buf << '\n';
        }
    }

} // namespace ris
