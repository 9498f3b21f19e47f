#pragma once

#include <string>
#include <vector>

#include "salv/model.hpp"

namespace salv {

/// A single model-consistency violation. Violations are data, not
/// failures: an empty list means the model is sound.
struct Violation {
    std::string code;
    std::string subject; // entity id or edge triple
    std::string message;

    auto operator<=>(const Violation&) const = default;
};

/// Checks referential integrity, per-layer invariants and edge layer
/// constraints. Deterministically ordered by (subject, code, message).
std::vector<Violation> validate_model(const ArchModel& model);

inline bool is_valid(const ArchModel& model) { return validate_model(model).empty(); }

} // namespace salv
