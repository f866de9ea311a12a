#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "boardwalk/harness/endpoint.hpp"
#include "boardwalk/harness/report.hpp"
#include "boardwalk/harness/trace.hpp"

namespace boardwalk::harness {

/// Replays one trace against a fresh game on `candidate`. Replay stops at
/// the first discrepancy: later steps would only measure the fallout of the
/// first one. Throws TraceError for traces that do not fit the game's board.
ComplianceReport replay_trace(const Trace& trace, Endpoint& candidate);

struct SuiteEntry {
  std::filesystem::path path;
  std::string error;  // set when the file could not be loaded or run
  ComplianceReport report;
};

struct SuiteResult {
  std::vector<SuiteEntry> entries;
  ComplianceReport combined;

  /// Any flag set or any file that failed to load.
  bool failed() const;
};

/// Every *.trace file under `directory` (sorted), each against an endpoint
/// built by `factory` for the trace's game. `game_filter` skips traces of
/// other games unless empty. Throws TraceError if nothing matched.
SuiteResult run_suite(const std::filesystem::path& directory, const EndpointFactory& factory,
                      const std::string& game_filter = "");

}  // namespace boardwalk::harness
