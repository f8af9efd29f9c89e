#pragma once

#include <cstdint>
#include <optional>

#include <json.hpp>

#include "ffcs/signal_model.hpp"

namespace ffcs {

// Instance schema: {"q", "dims", "entries", "gamma", "seed"}.
// Matrices carry dims [M, N] and a nested row array; signals carry dims [N],
// a flat array and a null gamma. A missing seed is written as null.

nlohmann::json to_json(const SensingMatrix& A, std::optional<std::uint64_t> seed = {});
nlohmann::json to_json(int q, const Signal& x, std::optional<std::uint64_t> seed = {});

/// Throws InvalidParameter on schema violations or entries >= q.
SensingMatrix matrix_from_json(const nlohmann::json& j);
Signal signal_from_json(const nlohmann::json& j);

}  // namespace ffcs
