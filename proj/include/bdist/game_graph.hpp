#pragma once

#include "bdist/label.hpp"
#include "bdist/lts.hpp"
#include "bdist/rational.hpp"
#include "bdist/tracedist.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bdist {

enum class Player : std::uint8_t { Maximizer, Minimizer };
enum class Mode : std::uint8_t { Simulation, Bisimulation };

std::string_view name(Mode mode);
std::optional<Mode> parse_mode(std::string_view text); // "sim" | "bisim"

using NodeId = std::size_t;

/// Provenance of a game node. Maximizer nodes are pairs (s, s'); minimizer
/// nodes additionally carry the label of the maximizer's move and, in the
/// bisimulation game, the side (1 or 2) the maximizer played on. For side 1
/// `left` is the A-state reached and `right` the B-state to answer from; for
/// side 2 `right` is the B-state reached and `left` the A-state to answer from.
struct NodePayload {
    std::size_t left = 0;
    std::size_t right = 0;
    std::optional<std::size_t> label; // index into GameGraph::alphabet()
    std::uint8_t side = 0;            // 0 for maximizer and simulation nodes

    friend bool operator==(const NodePayload&, const NodePayload&) = default;
    friend std::strong_ordering operator<=>(const NodePayload&, const NodePayload&) = default;
};

struct GameEdge {
    NodeId target;
    SignedWeight weight;
};

/// Bipartite weighted turn-based game. Immutable once built; the mutating
/// members exist for the builders and for hand-made test games.
class GameGraph {
public:
    GameGraph(Mode mode, Selector selector) : mode_(mode), selector_(selector) {}

    NodeId add_node(Player owner, NodePayload payload = {});
    void add_edge(NodeId source, NodeId target, SignedWeight weight);
    void set_initial(NodeId node) { initial_ = node; }
    void set_names(std::vector<std::string> left, std::vector<std::string> right, std::vector<Label> alphabet);

    Mode mode() const noexcept { return mode_; }
    Selector selector() const noexcept { return selector_; }
    NodeId initial() const noexcept { return initial_; }

    std::size_t node_count() const noexcept { return owners_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }
    std::size_t count(Player owner) const;

    Player owner(NodeId n) const { return owners_.at(n); }
    const NodePayload& payload(NodeId n) const { return payloads_.at(n); }
    std::span<const GameEdge> out(NodeId n) const { return out_.at(n); }

    const std::vector<Label>& alphabet() const noexcept { return alphabet_; }

    /// "(s,t)" for maximizer nodes, "(s,t,a)" / "(s,t,a,side)" for minimizer
    /// nodes; falls back to indices when no names were attached.
    std::string node_name(NodeId n) const;

    /// Distinct weights on minimizer edges, ascending.
    std::vector<SignedWeight> minimizer_weights() const;

private:
    Mode mode_;
    Selector selector_;
    NodeId initial_ = 0;
    std::vector<Player> owners_;
    std::vector<NodePayload> payloads_;
    std::vector<std::vector<GameEdge>> out_;
    std::size_t edge_count_ = 0;
    std::vector<std::string> left_names_;
    std::vector<std::string> right_names_;
    std::vector<Label> alphabet_;
};

struct BuildOptions {
    /// Materialize only nodes reachable from the initial node. With false,
    /// the full product S×S' plus every minimizer tuple is built.
    bool prune_unreachable = true;
};

/// The simulation game U(A, B): maximizer moves in A with weight 0, the
/// minimizer answers in B with weight f_weight(kind, a, a').
GameGraph build_sim_game(const Lts& a, const Lts& b, const DistanceKind& kind, BuildOptions options = {});

/// The bisimulation game V(A, B): the maximizer may move on either side and
/// the minimizer must answer on the other.
GameGraph build_bisim_game(const Lts& a, const Lts& b, const DistanceKind& kind, BuildOptions options = {});

GameGraph build_game(Mode mode, const Lts& a, const Lts& b, const DistanceKind& kind, BuildOptions options = {});

/// Empty iff the graph alternates between the players, every node has a
/// successor, and maximizer edges all weigh 0.
std::vector<std::string> check_invariants(const GameGraph& g);

/// Deterministic DOT rendering: maximizer nodes as boxes, minimizer nodes
/// as ellipses, exact weights (or "inf") as edge labels.
std::string to_dot(const GameGraph& g);

/// Stable JSON dump of nodes and edges.
std::string to_json(const GameGraph& g);

} // namespace bdist
