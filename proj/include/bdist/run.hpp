#pragma once

#include "bdist/game_graph.hpp"
#include "bdist/rational.hpp"
#include "bdist/tracedist.hpp"

#include <cstddef>
#include <optional>
#include <string>

namespace bdist {

enum class OutputFormat { Json, Plain };

struct RunConfig {
    std::string lts_a;
    std::string lts_b;
    Mode mode = Mode::Simulation;
    Selector distance = Selector::Discrete;
    std::optional<Rational> lambda;
    Rational epsilon{1, 1000000};
    std::optional<std::string> label_dist;
    std::optional<std::string> emit_game;      // DOT file
    std::optional<std::string> emit_game_json; // JSON file
    std::optional<std::size_t> oracle_check;   // minimax horizon
    OutputFormat output = OutputFormat::Json;
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int invalid_input = 1;
inline constexpr int incompatible_kind = 2;
inline constexpr int oracle_disagreement = 3;
} // namespace exit_code

struct RunOutcome {
    int status = exit_code::ok;
    std::string report;      // standard output
    std::string diagnostics; // standard error
};

/// Reads both systems, builds the requested game, solves it and renders the
/// report. Never throws for bad input; failures map to the exit codes above.
RunOutcome run(const RunConfig& config);

} // namespace bdist
