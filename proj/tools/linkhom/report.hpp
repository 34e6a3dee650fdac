#pragma once

#include <string>

#include "json.hpp"
#include "linkhom/conditions.hpp"
#include "linkhom/solver.hpp"
#include "linkhom/structure.hpp"

namespace linkhom::cli {

using Report = nlohmann::ordered_json;

enum class Format { Text, Json };

/// Bumped whenever a field is renamed or removed.
inline constexpr int kFormatVersion = 1;

Report chain_summary(const LinkedChain& chain);
Report condition_json(const ConditionReport& rep);
Report solve_json(const SolveReport& rep);
Report structure_json(const LinkedChain& chain, const StructureDecomposition& d);
Report witness_json(const Witness& w);

/// Text output walks the same tree as the JSON output: scalars as
/// "key: value", scalar arrays and matrices on one line, nested objects
/// indented. A top-level "summary" string is printed first.
std::string render(const Report& report, Format format);

}  // namespace linkhom::cli
