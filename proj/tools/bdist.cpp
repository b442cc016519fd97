// Command-line front end: simulation and bisimulation distances between two
// labeled transition systems.

#include "bdist/run.hpp"

#include "CLI11.hpp"

#include <iostream>

int main(int argc, char** argv) {
    using namespace bdist;

    CLI::App app{"Compute simulation and bisimulation distances between labeled transition systems"};
    RunConfig config;

    std::string mode = "sim";
    std::string distance;
    std::string lambda;
    std::string epsilon = "1/1000000";
    std::string output = "json";
    std::size_t horizon = 0;

    app.add_option("lts_a", config.lts_a, "First system (the one being simulated)")->required();
    app.add_option("lts_b", config.lts_b, "Second system")->required();
    app.add_option("--mode", mode, "sim or bisim")->check(CLI::IsMember({"sim", "bisim"}));
    app.add_option("--distance", distance, "discrete, pointwise, discounted, limavg, cantor or maxlead")
        ->required()
        ->check(CLI::IsMember({"discrete", "pointwise", "discounted", "limavg", "cantor", "maxlead"}));
    app.add_option("--lambda", lambda, "Discount factor in [0, 1), e.g. 1/2 (discounted only)");
    app.add_option("--epsilon", epsilon, "Precision of the discounted solver");
    app.add_option("--label-dist", config.label_dist, "Label distance table");
    app.add_option("--emit-game", config.emit_game, "Write the game graph as DOT");
    app.add_option("--emit-game-json", config.emit_game_json, "Write the game graph as JSON");
    auto* oracle = app.add_option("--oracle-check", horizon, "Cross-check with the oracles, minimax horizon in rounds")
                       ->check(CLI::PositiveNumber);
    app.add_option("--output", output, "json or plain")->check(CLI::IsMember({"json", "plain"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int status = app.exit(e);
        return status == 0 ? 0 : exit_code::invalid_input;
    }

    config.mode = *parse_mode(mode);
    config.distance = *parse_selector(distance);
    config.output = output == "plain" ? OutputFormat::Plain : OutputFormat::Json;
    if (*oracle)
        config.oracle_check = horizon;
    try {
        if (!lambda.empty())
            config.lambda = parse_rational(lambda);
        config.epsilon = parse_rational(epsilon);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code::invalid_input;
    }

    RunOutcome outcome = run(config);
    std::cout << outcome.report;
    std::cerr << outcome.diagnostics;
    return outcome.status;
}
