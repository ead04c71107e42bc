#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

namespace matchfield {

/// Desk-scale guards shared by every enumeration.
struct ResourceLimits {
  std::uint64_t max_candidates = 10'000'000;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  /// Worker count; 0 means MATCHFIELD_THREADS or, failing that, the hardware concurrency.
  unsigned threads = 0;

  /// Throws ResourceError once the deadline has passed.
  void check_deadline() const;
  unsigned worker_count() const;

  static ResourceLimits with_timeout(std::chrono::milliseconds timeout);
};

}  // namespace matchfield
