#include "salv/closure.hpp"

#include <deque>

namespace salv {

std::set<EntityId> dependency_closure(const ArchModel& model, const std::set<EntityId>& seeds,
                                      const std::set<EdgeKind>& kinds,
                                      std::optional<int> depth) {
    for (const EntityId& seed : seeds) {
        if (!model.contains(seed))
            throw Error(ModelError::unknown_seed, "unknown seed '" + seed + "'");
    }

    std::multimap<EntityId, EntityId> adjacent;
    for (const CrossLayerEdge& edge : model.edges()) {
        if (!kinds.empty() && !kinds.count(edge.kind)) continue;
        // Dangling edges (legal before validation) are not traversed.
        if (!model.contains(edge.from) || !model.contains(edge.to)) continue;
        adjacent.emplace(edge.from, edge.to);
        adjacent.emplace(edge.to, edge.from);
    }

    std::set<EntityId> visited(seeds.begin(), seeds.end());
    std::deque<std::pair<EntityId, int>> frontier;
    for (const EntityId& seed : seeds) frontier.emplace_back(seed, 0);

    while (!frontier.empty()) {
        auto [current, dist] = frontier.front();
        frontier.pop_front();
        if (depth && dist >= *depth) continue;
        auto [lo, hi] = adjacent.equal_range(current);
        for (auto it = lo; it != hi; ++it) {
            if (visited.insert(it->second).second) frontier.emplace_back(it->second, dist + 1);
        }
    }
    return visited;
}

} // namespace salv
