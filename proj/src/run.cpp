#include "bdist/run.hpp"

#include "bdist/error.hpp"
#include "bdist/label_distance.hpp"
#include "bdist/lts.hpp"
#include "bdist/oracle.hpp"
#include "bdist/solvers.hpp"

#include "json.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

namespace bdist {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot read '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << content))
        throw Error("cannot write '" + path + "'");
}

Lts load_lts(const std::string& path) {
    try {
        return parse_lts(read_file(path));
    } catch (const Error& e) {
        throw Error(path + ": " + e.what());
    }
}

DistanceKind make_kind(const RunConfig& config, const Lts& a, const Lts& b) {
    if (config.lambda.has_value() != (config.distance == Selector::Discounted))
        throw Error("--lambda is required for, and only for, the discounted distance");
    if (sgn(config.epsilon) <= 0)
        throw Error("--epsilon must be positive");

    auto label_distance = [&] {
        if (!config.label_dist)
            return LabelDistance(DefaultRule::ZeroElseOne);
        std::set<Label> alphabet = a.alphabet();
        alphabet.merge(b.alphabet());
        try {
            return parse_label_distance(read_file(*config.label_dist), alphabet);
        } catch (const Error& e) {
            throw Error(*config.label_dist + ": " + e.what());
        }
    };

    switch (config.distance) {
    case Selector::Discrete: return DistanceKind::discrete();
    case Selector::PointWise: return DistanceKind::pointwise(label_distance());
    case Selector::Discounted:
        try {
            return DistanceKind::discounted(*config.lambda, label_distance());
        } catch (const std::invalid_argument& e) {
            throw Error(e.what());
        }
    case Selector::LimitAverage: return DistanceKind::limit_average(label_distance());
    case Selector::Cantor: return DistanceKind::cantor();
    case Selector::MaxLead: return DistanceKind::max_lead();
    }
    throw std::logic_error("unknown selector");
}

struct OracleVerdict {
    std::size_t horizon;
    oracle::Bracket bracket;
    std::optional<ExtValue> positional;
    std::optional<bool> classical;
    bool agree = true;
};

bool close_enough(const ExtValue& a, const ExtValue& b, const Rational& tolerance) {
    if (a.is_infinite() || b.is_infinite())
        return a == b;
    return abs(a.finite() - b.finite()) <= tolerance;
}

OracleVerdict check_with_oracles(const GameGraph& g, const DistanceKind& kind, const Lts& a, const Lts& b,
                                 const SolveResult& solved, std::size_t horizon) {
    OracleVerdict verdict{horizon, oracle::bounded_minimax(g, kind, horizon), std::nullopt, std::nullopt, true};
    const Rational tolerance = solved.epsilon.value_or(Rational(0));
    const ExtValue& value = solved.value;

    auto below = [&](const ExtValue& x, const ExtValue& y) { return x <= y || close_enough(x, y, tolerance); };
    verdict.agree = below(verdict.bracket.lower, value) && below(value, verdict.bracket.upper);

    if (kind.selector() != Selector::MaxLead && oracle::within_limits(g)) {
        verdict.positional = oracle::enumerate_positional_value(g, kind);
        verdict.agree = verdict.agree && close_enough(*verdict.positional, value, tolerance);
    }
    if (kind.selector() == Selector::Discrete) {
        verdict.classical = g.mode() == Mode::Simulation ? oracle::classical_simulation(a, b)
                                                         : oracle::classical_bisimulation(a, b);
        verdict.agree = verdict.agree && (*verdict.classical == value.is_zero());
    }
    return verdict;
}

std::string render(const RunConfig& config, const GameGraph& g, const SolveResult& solved, long long elapsed_ms,
                   const std::optional<OracleVerdict>& verdict) {
    if (config.output == OutputFormat::Plain) {
        std::ostringstream out;
        out << "value: " << solved.value.to_string() << '\n';
        out << "exact: " << (solved.exact() ? "true" : "false") << '\n';
        if (solved.epsilon)
            out << "epsilon: " << to_string(*solved.epsilon) << '\n';
        out << "mode: " << name(g.mode()) << '\n';
        out << "distance: " << name(g.selector()) << '\n';
        out << "game_nodes: " << g.node_count() << '\n';
        out << "game_edges: " << g.edge_count() << '\n';
        out << "iterations: " << solved.iterations << '\n';
        out << "elapsed_ms: " << elapsed_ms << '\n';
        if (verdict) {
            out << "oracle: " << (verdict->agree ? "agree" : "DISAGREE") << " (horizon " << verdict->horizon
                << ", bracket [" << verdict->bracket.lower.to_string() << ", " << verdict->bracket.upper.to_string()
                << "]";
            if (verdict->positional)
                out << ", positional " << verdict->positional->to_string();
            if (verdict->classical)
                out << ", classical " << (*verdict->classical ? "holds" : "fails");
            out << ")\n";
        }
        return out.str();
    }

    nlohmann::ordered_json doc;
    doc["value"] = solved.value.to_string();
    doc["exact"] = solved.exact();
    if (solved.epsilon)
        doc["epsilon"] = to_string(*solved.epsilon);
    doc["mode"] = name(g.mode());
    doc["distance"] = name(g.selector());
    doc["game_nodes"] = g.node_count();
    doc["game_edges"] = g.edge_count();
    doc["iterations"] = solved.iterations;
    doc["elapsed_ms"] = elapsed_ms;
    if (verdict) {
        nlohmann::ordered_json o;
        o["horizon"] = verdict->horizon;
        o["lower"] = verdict->bracket.lower.to_string();
        o["upper"] = verdict->bracket.upper.to_string();
        o["positional"] = verdict->positional ? nlohmann::ordered_json(verdict->positional->to_string()) : nullptr;
        o["classical"] = verdict->classical ? nlohmann::ordered_json(*verdict->classical) : nullptr;
        o["agree"] = verdict->agree;
        doc["oracle"] = std::move(o);
    }
    return doc.dump(2) + "\n";
}

} // namespace

RunOutcome run(const RunConfig& config) {
    RunOutcome outcome;
    try {
        const auto start = std::chrono::steady_clock::now();
        const Lts a = load_lts(config.lts_a);
        const Lts b = load_lts(config.lts_b);
        const DistanceKind kind = make_kind(config, a, b);

        const GameGraph game = build_game(config.mode, a, b, kind);
        if (config.emit_game)
            write_file(*config.emit_game, to_dot(game));
        if (config.emit_game_json)
            write_file(*config.emit_game_json, to_json(game));

        SolveOptions options;
        options.epsilon = config.epsilon;
        const SolveResult solved = solve(game, kind, options);
        const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);

        std::optional<OracleVerdict> verdict;
        if (config.oracle_check)
            verdict = check_with_oracles(game, kind, a, b, solved, *config.oracle_check);

        outcome.report = render(config, game, solved, elapsed.count(), verdict);
        if (verdict && !verdict->agree) {
            outcome.status = exit_code::oracle_disagreement;
            outcome.diagnostics = "solver and oracle disagree\n";
        }
    } catch (const KindMismatch& e) {
        outcome.status = exit_code::incompatible_kind;
        outcome.diagnostics = std::string("error: ") + e.what() + "\n";
    } catch (const ValidationError& e) {
        outcome.status = exit_code::invalid_input;
        for (const auto& problem : e.problems())
            outcome.diagnostics += "error: " + problem + "\n";
    } catch (const Error& e) {
        outcome.status = exit_code::invalid_input;
        outcome.diagnostics = std::string("error: ") + e.what() + "\n";
    }
    return outcome;
}

} // namespace bdist
