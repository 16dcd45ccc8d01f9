#pragma once

#include "json.hpp"

#include "cqm/decisions.hpp"

namespace cqm {

/// {verdict, witness?, exhaustive?, certificate?, elements?}; only the keys
/// meaningful for the verdict kind are present.
nlohmann::json to_json(const Verdict& v);

}  // namespace cqm
