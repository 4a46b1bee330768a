#include <doctest.h>

#include <random>
#include <sstream>

#include "ris/control_plane.hpp"

using namespace ris;

TEST_CASE("fresh boards latch every cell at the absorber code")
{
    const BoardBusState board(10, 10);
    for (std::size_t x = 0; x < 10; ++x)
        for (std::size_t y = 0; y < 10; ++y)
            CHECK(board.latched_code(x, y) == absorber_code);
}

TEST_CASE("write_cell touches exactly one latch and releases the lines")
{
    BoardBusState board(10, 10);
    write_cell(board, 2, 3, 5);
    for (std::size_t x = 0; x < 10; ++x)
        for (std::size_t y = 0; y < 10; ++y)
        {
            if (x == 2 && y == 3)
                CHECK(board.latched_code(x, y) == 5);
            else
                CHECK(board.latched_code(x, y) == absorber_code);
        }
    for (std::uint8_t r : board.row_lines)
        CHECK(r == 0);
    for (std::uint8_t c : board.col_lines)
        CHECK(c == 0);
}

TEST_CASE("sequential writes to the same cell: last value wins")
{
    BoardBusState board(4, 4);
    write_cell(board, 1, 1, 2);
    write_cell(board, 1, 1, 6);
    CHECK(board.latched_code(1, 1) == 6);
}

TEST_CASE("writing all 100 cells reproduces the intended grid")
{
    BoardBusState board(10, 10);
    std::vector<std::uint8_t> intended(100);
    for (std::size_t x = 0; x < 10; ++x)
        for (std::size_t y = 0; y < 10; ++y)
        {
            const auto code = static_cast<std::uint8_t>((x * 10 + y) % 8);
            intended[x * 10 + y] = code; // direct array-assignment oracle
            write_cell(board, x, y, code);
        }
    CHECK(board.latched == intended);
}

TEST_CASE("out-of-range coordinates or codes are protocol errors")
{
    BoardBusState board(4, 6);
    CHECK_THROWS_AS(write_cell(board, 4, 0, 1), protocol_error);
    CHECK_THROWS_AS(write_cell(board, 0, 6, 1), protocol_error);
    CHECK_THROWS_AS(write_cell(board, 0, 0, 8), protocol_error);
}

TEST_CASE("multi-row or multi-column selection is rejected, not multi-latched")
{
    BoardBusState board(3, 3);
    std::vector<std::uint8_t> two_rows = {1, 1, 0};
    std::vector<std::uint8_t> one_col = {0, 1, 0};
    CHECK_THROWS_AS(pulse_bus(board, two_rows, one_col, 3), protocol_error);
    for (std::size_t x = 0; x < 3; ++x)
        for (std::size_t y = 0; y < 3; ++y)
            CHECK(board.latched_code(x, y) == absorber_code);

    std::vector<std::uint8_t> one_row = {0, 0, 1};
    std::vector<std::uint8_t> two_cols = {1, 0, 1};
    CHECK_THROWS_AS(pulse_bus(board, one_row, two_cols, 3), protocol_error);

    // idle pulse: nothing selected, nothing latched
    pulse_bus(board, {0, 0, 0}, {0, 0, 0}, 3);
    for (std::size_t x = 0; x < 3; ++x)
        for (std::size_t y = 0; y < 3; ++y)
            CHECK(board.latched_code(x, y) == absorber_code);
}

TEST_CASE("fuzz: 10^4 random writes match a map-assignment oracle")
{
    std::mt19937 rng(97);
    std::uniform_int_distribution<std::size_t> xd(0, 9), yd(0, 9);
    std::uniform_int_distribution<int> cd(0, 7);

    BoardBusState board(10, 10);
    std::vector<std::uint8_t> oracle(100, absorber_code);
    for (int i = 0; i < 10000; ++i)
    {
        const std::size_t x = xd(rng), y = yd(rng);
        const auto code = static_cast<std::uint8_t>(cd(rng));
        write_cell(board, x, y, code);
        oracle[x * 10 + y] = code;
    }
    CHECK(board.latched == oracle);
}

TEST_CASE("program_board maps phase indices to codes and absorb to the absorber")
{
    BoardBusState board(2, 2);
    RisConfiguration config;
    config.states = {0, 3, 6, absorb_state};
    const ProgramTrace trace = program_board(board, config);
    REQUIRE(trace.steps.size() == 4);
    CHECK(board.latched == std::vector<std::uint8_t>{0, 3, 6, absorber_code});
    CHECK(trace.estimated_time_s == doctest::Approx(4 * default_cell_latency_s));
}

TEST_CASE("program_board: 100 cells finish within 35 ms at the default latency")
{
    BoardBusState board(10, 10);
    const ProgramTrace trace = program_board(board, RisConfiguration::all_absorb(100));
    CHECK(trace.steps.size() == 100);
    CHECK(trace.estimated_time_s <= 0.035 + 1e-12);
}

TEST_CASE("program_board: empty configuration programs nothing")
{
    BoardBusState board(2, 2);
    const ProgramTrace trace = program_board(board, RisConfiguration{});
    CHECK(trace.steps.empty());
    CHECK(trace.estimated_time_s == 0.0);
    for (std::size_t x = 0; x < 2; ++x)
        for (std::size_t y = 0; y < 2; ++y)
            CHECK(board.latched_code(x, y) == absorber_code);
}

TEST_CASE("program_board rejects mismatched configuration sizes")
{
    BoardBusState board(2, 2);
    CHECK_THROWS_AS(program_board(board, RisConfiguration::all_absorb(3)), shape_error);
}

TEST_CASE("replaying a trace is idempotent")
{
    std::mt19937 rng(101);
    std::uniform_int_distribution<int> state(0, 7);
    RisConfiguration config;
    config.states.resize(25);
    for (auto &s : config.states)
        s = static_cast<std::uint8_t>(state(rng));

    BoardBusState first(5, 5);
    const ProgramTrace trace = program_board(first, config);
    const auto after_program = first.latched;

    replay_trace(first, trace);
    CHECK(first.latched == after_program);

    BoardBusState second(5, 5);
    replay_trace(second, trace);
    CHECK(second.latched == after_program);
}

TEST_CASE("bus_line_count: nx + ny selection lines and 3 phase lines")
{
    CHECK(bus_line_count(10, 10).selection_lines == 20);
    CHECK(bus_line_count(10, 10).phase_lines == 3);
    CHECK(bus_line_count(1, 1).selection_lines == 2);
    CHECK(bus_line_count(1, 1).phase_lines == 3);
    CHECK(bus_line_count(16, 10).selection_lines == 26);
    CHECK_THROWS_AS(bus_line_count(0, 5), std::invalid_argument);
}

TEST_CASE("trace CSV golden document")
{
    BoardBusState board(2, 1, 4);
    RisConfiguration config;
    config.states = {0, absorb_state};
    const ProgramTrace trace = program_board(board, config);

    std::ostringstream out;
    export_trace_csv(trace, out);
    CHECK(out.str() == "board_id,x,y,code,timestamp_s\n"
                       "4,0,0,0,0.00035\n"
                       "4,1,0,7,0.0007\n");
}
