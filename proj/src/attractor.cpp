#include "bdist/solvers.hpp"

namespace bdist {

NodeSet NodeSet::all(const GameGraph& g, Player owner) {
    NodeSet result(g.node_count());
    for (NodeId n = 0; n < g.node_count(); ++n)
        if (g.owner(n) == owner)
            result.insert(n);
    return result;
}

void NodeSet::insert(NodeId n) {
    if (!bits_.at(n)) {
        bits_[n] = true;
        ++count_;
    }
}

std::vector<NodeId> NodeSet::members() const {
    std::vector<NodeId> result;
    result.reserve(count_);
    for (NodeId n = 0; n < bits_.size(); ++n)
        if (bits_[n])
            result.push_back(n);
    return result;
}

bool NodeSet::is_subset_of(const NodeSet& other) const {
    for (NodeId n = 0; n < bits_.size(); ++n)
        if (bits_[n] && !other.contains(n))
            return false;
    return true;
}

NodeSet cpre(const GameGraph& g, const NodeSet& target) {
    return cpre(g, target, [](const SignedWeight&) { return false; });
}

NodeSet cpre(const GameGraph& g, const NodeSet& target, const DecisiveReply& decisive) {
    NodeSet result(g.node_count());
    for (NodeId u1 = 0; u1 < g.node_count(); ++u1) {
        if (g.owner(u1) != Player::Maximizer)
            continue;
        for (const auto& move : g.out(u1)) {
            bool forced = true;
            for (const auto& reply : g.out(move.target))
                if (!decisive(reply.weight) && !target.contains(reply.target)) {
                    forced = false;
                    break;
                }
            if (forced) {
                result.insert(u1);
                break;
            }
        }
    }
    return result;
}

Attractor cpre_star(const GameGraph& g, const NodeSet& seed) {
    return cpre_star(g, seed, [](const SignedWeight&) { return false; });
}

Attractor cpre_star(const GameGraph& g, const NodeSet& seed, const DecisiveReply& decisive) {
    const std::size_t n = g.node_count();
    // Predecessor lists over non-decisive edges: (source, index of the edge
    // in out(source)). pending[u] counts the non-decisive edges of u whose
    // target is still outside the set.
    std::vector<std::vector<std::pair<NodeId, std::size_t>>> preds(n);
    std::vector<std::size_t> pending(n, 0);
    for (NodeId u = 0; u < n; ++u) {
        auto edges = g.out(u);
        const bool minimizer = g.owner(u) == Player::Minimizer;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (minimizer && decisive(edges[i].weight))
                continue;
            ++pending[u];
            preds[edges[i].target].emplace_back(u, i);
        }
    }

    Attractor result{seed, std::vector<std::optional<std::size_t>>(n), 0, Strategy(n)};
    std::vector<NodeId> frontier = seed.members();
    for (NodeId u : frontier)
        result.rank[u] = 0;

    // Minimizer nodes all of whose replies are decisive force the play
    // already; their maximizer predecessors join in round 1 unless seeded.
    auto admit = [&](NodeId u2, std::size_t round, std::vector<NodeId>& next) {
        for (const auto& [u1, edge] : preds[u2])
            if (!result.nodes.contains(u1)) {
                result.nodes.insert(u1);
                result.rank[u1] = round;
                result.witness[u1] = edge;
                next.push_back(u1);
            }
    };
    std::vector<NodeId> immediate;
    for (NodeId u2 = 0; u2 < n; ++u2)
        if (g.owner(u2) == Player::Minimizer && pending[u2] == 0)
            immediate.push_back(u2);

    for (std::size_t round = 1; !frontier.empty() || !immediate.empty(); ++round) {
        std::vector<NodeId> next;
        for (NodeId u2 : immediate)
            admit(u2, round, next);
        immediate.clear();
        for (NodeId v : frontier)
            for (const auto& [u2, unused] : preds[v]) {
                // Every reply from u2 now lands in the set or is decisive.
                if (--pending[u2] == 0)
                    admit(u2, round, next);
            }
        if (!next.empty())
            result.iterations = round;
        frontier = std::move(next);
    }
    return result;
}

} // namespace bdist
