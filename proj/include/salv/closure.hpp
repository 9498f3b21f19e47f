#pragma once

#include <optional>
#include <set>

#include "salv/model.hpp"

namespace salv {

/// Breadth-first closure over edges of the given kinds, traversed in both
/// directions, truncated at depth (nullopt = unlimited). An empty kind set
/// means all kinds. Always contains the seeds.
/// Throws Error{unknown_seed} when a seed does not resolve.
std::set<EntityId> dependency_closure(const ArchModel& model, const std::set<EntityId>& seeds,
                                      const std::set<EdgeKind>& kinds,
                                      std::optional<int> depth);

} // namespace salv
