#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "fdalg/linalg.hpp"

namespace fdalg {

/// Element number idx of F_p^n: coordinate k is base-p digit k of idx.
Vec element_at(const FieldSpec& field, std::size_t n, std::uint64_t idx);

/// Smallest idx in [0, total) with ok(idx) false, or nullopt. Chunks are handed
/// out to `workers` threads (0 = hardware concurrency); the answer does not
/// depend on the worker count.
std::optional<std::uint64_t> first_failure(std::uint64_t total, const std::function<bool(std::uint64_t)>& ok,
                                           unsigned workers = 0);

}  // namespace fdalg
