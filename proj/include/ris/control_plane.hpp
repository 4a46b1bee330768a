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

#ifndef RIS_CONTROL_PLANE_HPP
#define RIS_CONTROL_PLANE_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "ris/array_model.hpp"

namespace ris
{
    // 3-bit code routed to the matched-resistor absorber port. Phase index k on
    // the array-model side maps to bus code k, absorber last; the port-to-code
    // assignment is a declared convention frozen by golden tests.
    inline constexpr std::uint8_t absorber_code = 7;

    // Default per-cell write latency: 35 ms for a full 100-cell board.
    inline constexpr double default_cell_latency_s = 0.35e-3;

    // Digital state of one board's configuration fabric: row/column selection
    // lines, the 3-bit phase bus, and the per-cell latched codes. Reset state
    // latches every cell at the absorber code (the board reflects nothing until
    // programmed). Single-owner mutable entity; one writer at a time.
    struct BoardBusState
    {
        std::size_t nx = 0;
        std::size_t ny = 0;
        int board_id = 0;
        std::vector<std::uint8_t> row_lines; // nx lines, 0/1
        std::vector<std::uint8_t> col_lines; // ny lines, 0/1
        std::array<std::uint8_t, 3> phase_bus{};
        std::vector<std::uint8_t> latched; // per cell, x-major like ArrayGeometry

        BoardBusState(std::size_t nx, std::size_t ny, int board_id = 0);

        std::uint8_t latched_code(std::size_t x, std::size_t y) const;
        std::size_t cell_count() const { return nx * ny; }
    };

    struct TraceStep
    {
        int board_id = 0;
        std::size_t x = 0;
        std::size_t y = 0;
        std::uint8_t code = 0;
    };

    struct ProgramTrace
    {
        std::vector<TraceStep> steps;
        double per_cell_latency_s = default_cell_latency_s;
        double estimated_time_s = 0.0; // steps * per-cell latency
    };

    // Drive the selection buses with explicit line levels and latch on the AND
    // gate rising edges. At most one row and one column may be high: raising two
    // rows (or columns) would latch several cells at once, so the emulator
    // rejects it with a protocol_error instead of multi-latching. All lines
    // return to low afterwards.
    void pulse_bus(BoardBusState &state, const std::vector<std::uint8_t> &rows,
                   const std::vector<std::uint8_t> &cols, std::uint8_t code);

    // Latch `code` into cell (x, y), leaving every other latch unchanged.
    void write_cell(BoardBusState &state, std::size_t x, std::size_t y, std::uint8_t code);

    // Write a full configuration cell by cell (x-major order) and return the
    // trace with its time estimate. Phase index k maps to code k, absorb to the
    // absorber code.
    ProgramTrace program_board(BoardBusState &state, const RisConfiguration &config,
                               double per_cell_latency_s = default_cell_latency_s);

    // Re-apply a recorded trace; the final latched state is identical.
    void replay_trace(BoardBusState &state, const ProgramTrace &trace);

    struct BusLineCount
    {
        std::size_t selection_lines = 0; // nx + ny
        std::size_t phase_lines = 0;     // 3
    };

    BusLineCount bus_line_count(std::size_t nx, std::size_t ny);

    // CSV with header board_id,x,y,code,timestamp_s; timestamps are per-step
    // completion times, so the last one equals the trace estimate.
    void export_trace_csv(const ProgramTrace &trace, std::ostream &out);

} // namespace ris

#endif
