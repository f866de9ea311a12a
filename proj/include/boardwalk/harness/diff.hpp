#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "boardwalk/harness/endpoint.hpp"
#include "boardwalk/harness/report.hpp"

namespace boardwalk::harness {

/// The reference endpoint misbehaved; nothing can be concluded about the
/// candidate.
class HarnessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DiffOptions {
  std::vector<std::uint64_t> seeds{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
  int max_moves = 200;
};

/// Drives both endpoints through the same seeded random game. The
/// registry's rules for `game_id` pick the moves: before every legal move
/// one illegal probe is sent, which both sides must reject. Each seed is a
/// fresh game on both endpoints and ends at the first divergence.
ComplianceReport diff_candidates(const std::string& game_id, Endpoint& reference,
                                 Endpoint& candidate, const DiffOptions& options = {});

}  // namespace boardwalk::harness
