#include "bdist/game_graph.hpp"

#include "bdist/error.hpp"

#include "json.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace bdist {

std::string_view name(Mode mode) { return mode == Mode::Simulation ? "sim" : "bisim"; }

std::optional<Mode> parse_mode(std::string_view text) {
    if (text == "sim")
        return Mode::Simulation;
    if (text == "bisim")
        return Mode::Bisimulation;
    return std::nullopt;
}

NodeId GameGraph::add_node(Player owner, NodePayload payload) {
    owners_.push_back(owner);
    payloads_.push_back(std::move(payload));
    out_.emplace_back();
    return owners_.size() - 1;
}

void GameGraph::add_edge(NodeId source, NodeId target, SignedWeight weight) {
    if (target >= node_count())
        throw std::out_of_range("edge target out of range");
    out_.at(source).push_back({target, std::move(weight)});
    ++edge_count_;
}

void GameGraph::set_names(std::vector<std::string> left, std::vector<std::string> right, std::vector<Label> alphabet) {
    left_names_ = std::move(left);
    right_names_ = std::move(right);
    alphabet_ = std::move(alphabet);
}

std::size_t GameGraph::count(Player owner) const {
    return static_cast<std::size_t>(std::count(owners_.begin(), owners_.end(), owner));
}

std::string GameGraph::node_name(NodeId n) const {
    const auto& p = payload(n);
    auto state = [](const std::vector<std::string>& names, std::size_t i) {
        return i < names.size() ? names[i] : std::to_string(i);
    };
    std::string result = "(" + state(left_names_, p.left) + "," + state(right_names_, p.right);
    if (p.label) {
        result += ",";
        result += *p.label < alphabet_.size() ? alphabet_[*p.label].text() : "#" + std::to_string(*p.label);
    }
    if (p.side != 0)
        result += "," + std::to_string(p.side);
    return result + ")";
}

std::vector<SignedWeight> GameGraph::minimizer_weights() const {
    std::set<SignedWeight> weights;
    for (NodeId n = 0; n < node_count(); ++n)
        if (owners_[n] == Player::Minimizer)
            for (const auto& e : out_[n])
                weights.insert(e.weight);
    return {weights.begin(), weights.end()};
}

namespace {

/// Successors of an Lts state with labels replaced by alphabet indices.
using Moves = std::vector<std::vector<std::pair<std::size_t, std::size_t>>>;

Moves index_moves(const IndexedLts& lts, const std::vector<Label>& alphabet) {
    Moves moves(lts.size());
    for (std::size_t s = 0; s < lts.size(); ++s)
        for (const auto& [label, target] : lts.out[s]) {
            auto it = std::lower_bound(alphabet.begin(), alphabet.end(), label);
            moves[s].emplace_back(static_cast<std::size_t>(it - alphabet.begin()), target);
        }
    return moves;
}

class Builder {
public:
    Builder(Mode mode, const Lts& a, const Lts& b, const DistanceKind& kind)
        : mode_(mode), kind_(kind), a_(IndexedLts::from(a)), b_(IndexedLts::from(b)), graph_(mode, kind.selector()) {
        if (kind.selector() == Selector::MaxLead && !(a.has_numeric_labels() && b.has_numeric_labels()))
            throw KindMismatch("maximum-lead distance needs numeric labels on both systems");

        std::set<Label> labels = a.alphabet();
        labels.merge(b.alphabet());
        alphabet_.assign(labels.begin(), labels.end());
        moves_a_ = index_moves(a_, alphabet_);
        moves_b_ = index_moves(b_, alphabet_);

        weights_.resize(alphabet_.size() * alphabet_.size());
    }

    GameGraph build(bool prune) {
        if (prune)
            explore();
        else
            materialize_all();
        graph_.set_initial(ids_.at(NodePayload{a_.initial, b_.initial, std::nullopt, 0}));
        graph_.set_names(a_.names, b_.names, alphabet_);
        return std::move(graph_);
    }

private:
    // f is evaluated once per label pair that actually meets in the game.
    const SignedWeight& weight(std::size_t label_a, std::size_t label_b) {
        auto& slot = weights_[label_a * alphabet_.size() + label_b];
        if (!slot)
            slot = f_weight(kind_, alphabet_[label_a], alphabet_[label_b]);
        return *slot;
    }

    NodeId intern(const NodePayload& p) {
        auto [it, inserted] = ids_.try_emplace(p, 0);
        if (inserted) {
            it->second = graph_.add_node(p.label ? Player::Minimizer : Player::Maximizer, p);
            pending_.push_back(it->second);
        }
        return it->second;
    }

    void expand(NodeId n) {
        const NodePayload p = graph_.payload(n);
        if (!p.label) {
            for (const auto& [label, t] : moves_a_[p.left])
                graph_.add_edge(n, intern({t, p.right, label, side_a()}), 0);
            if (mode_ == Mode::Bisimulation)
                for (const auto& [label, t] : moves_b_[p.right])
                    graph_.add_edge(n, intern({p.left, t, label, 2}), 0);
        } else if (p.side != 2) {
            for (const auto& [label, t] : moves_b_[p.right])
                graph_.add_edge(n, intern({p.left, t, std::nullopt, 0}), weight(*p.label, label));
        } else {
            for (const auto& [label, t] : moves_a_[p.left])
                graph_.add_edge(n, intern({t, p.right, std::nullopt, 0}), weight(label, *p.label));
        }
    }

    std::uint8_t side_a() const { return mode_ == Mode::Bisimulation ? 1 : 0; }

    void explore() {
        intern({a_.initial, b_.initial, std::nullopt, 0});
        while (!pending_.empty()) {
            NodeId n = pending_.front();
            pending_.pop_front();
            expand(n);
        }
    }

    void materialize_all() {
        for (std::size_t s = 0; s < a_.size(); ++s)
            for (std::size_t t = 0; t < b_.size(); ++t)
                intern({s, t, std::nullopt, 0});
        for (std::size_t s = 0; s < a_.size(); ++s)
            for (std::size_t t = 0; t < b_.size(); ++t)
                for (std::size_t l = 0; l < alphabet_.size(); ++l) {
                    intern({s, t, l, side_a()});
                    if (mode_ == Mode::Bisimulation)
                        intern({s, t, l, 2});
                }
        for (NodeId n = 0; n < graph_.node_count(); ++n)
            expand(n);
        pending_.clear();
    }

    Mode mode_;
    const DistanceKind& kind_;
    IndexedLts a_;
    IndexedLts b_;
    GameGraph graph_;
    std::vector<Label> alphabet_;
    Moves moves_a_;
    Moves moves_b_;
    std::vector<std::optional<SignedWeight>> weights_;
    std::map<NodePayload, NodeId> ids_;
    std::deque<NodeId> pending_;
};

} // namespace

GameGraph build_sim_game(const Lts& a, const Lts& b, const DistanceKind& kind, BuildOptions options) {
    return Builder(Mode::Simulation, a, b, kind).build(options.prune_unreachable);
}

GameGraph build_bisim_game(const Lts& a, const Lts& b, const DistanceKind& kind, BuildOptions options) {
    return Builder(Mode::Bisimulation, a, b, kind).build(options.prune_unreachable);
}

GameGraph build_game(Mode mode, const Lts& a, const Lts& b, const DistanceKind& kind, BuildOptions options) {
    return mode == Mode::Simulation ? build_sim_game(a, b, kind, options) : build_bisim_game(a, b, kind, options);
}

std::vector<std::string> check_invariants(const GameGraph& g) {
    std::vector<std::string> problems;
    if (g.node_count() == 0)
        return {"game has no nodes"};
    if (g.initial() >= g.node_count() || g.owner(g.initial()) != Player::Maximizer)
        problems.push_back("initial node is not a maximizer node");
    for (NodeId n = 0; n < g.node_count(); ++n) {
        if (g.out(n).empty())
            problems.push_back("node " + g.node_name(n) + " has no successor");
        for (const auto& e : g.out(n)) {
            if (g.owner(e.target) == g.owner(n))
                problems.push_back("edge " + g.node_name(n) + " -> " + g.node_name(e.target) + " does not alternate");
            if (g.owner(n) == Player::Maximizer && !e.weight.is_zero())
                problems.push_back("maximizer edge from " + g.node_name(n) + " has nonzero weight");
        }
    }
    return problems;
}

std::string to_dot(const GameGraph& g) {
    auto quote = [](const std::string& s) {
        std::string out = "\"";
        for (char c : s) {
            if (c == '"' || c == '\\')
                out += '\\';
            out += c;
        }
        return out + "\"";
    };
    std::ostringstream out;
    out << "digraph game {\n";
    out << "  __start [shape=point];\n";
    for (NodeId n = 0; n < g.node_count(); ++n)
        out << "  n" << n << " [label=" << quote(g.node_name(n))
            << ", shape=" << (g.owner(n) == Player::Maximizer ? "box" : "ellipse") << "];\n";
    out << "  __start -> n" << g.initial() << ";\n";
    for (NodeId n = 0; n < g.node_count(); ++n)
        for (const auto& e : g.out(n))
            out << "  n" << n << " -> n" << e.target << " [label=" << quote(e.weight.to_string()) << "];\n";
    out << "}\n";
    return out.str();
}

std::string to_json(const GameGraph& g) {
    nlohmann::ordered_json doc;
    doc["mode"] = name(g.mode());
    doc["distance"] = name(g.selector());
    doc["initial"] = g.initial();
    auto nodes = nlohmann::ordered_json::array();
    auto edges = nlohmann::ordered_json::array();
    for (NodeId n = 0; n < g.node_count(); ++n) {
        nlohmann::ordered_json node;
        node["id"] = n;
        node["owner"] = g.owner(n) == Player::Maximizer ? "max" : "min";
        node["name"] = g.node_name(n);
        nodes.push_back(std::move(node));
        for (const auto& e : g.out(n)) {
            nlohmann::ordered_json edge;
            edge["source"] = n;
            edge["target"] = e.target;
            edge["weight"] = e.weight.to_string();
            edges.push_back(std::move(edge));
        }
    }
    doc["nodes"] = std::move(nodes);
    doc["edges"] = std::move(edges);
    return doc.dump(2) + "\n";
}

} // namespace bdist
