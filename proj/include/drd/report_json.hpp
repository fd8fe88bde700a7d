#pragma once

#include <optional>
#include <span>
#include <string>

#include "drd/certify.hpp"
#include "drd/solve.hpp"
#include "drd/theorems.hpp"

namespace drd {

// Stable key order, vertex sets ascending, assignments as sorted [u, dominator]
// pairs; identical inputs give byte-identical text.

std::string to_json(const SolveResult& result);
std::string to_json(const Coverage& coverage, std::optional<bool> minimal = std::nullopt);
std::string to_json(const Certificate& cert);
std::string to_json(const TheoremReport& report);
std::string to_json(const CorpusSummary& summary);
std::string radius_json(std::span<const Vertex> subset, std::optional<int> radius);

}  // namespace drd
