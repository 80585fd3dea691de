#pragma once

#include <cstddef>
#include <functional>
#include <optional>

namespace qlc {

/// Worker count used by pairwise checks: QLC_THREADS when set (values < 1
/// clamp to 1), otherwise all hardware threads.
std::size_t worker_count();

/// Smallest index idx < count with violation(idx) == true, or nullopt.
/// Result is deterministic regardless of thread schedule.
std::optional<std::size_t> find_first(std::size_t count,
                                      const std::function<bool(std::size_t)>& violation);

}  // namespace qlc
