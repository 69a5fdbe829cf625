#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pnmax/graph.hpp"
#include "pnmax/solver.hpp"

namespace pnmax::cli {

// One computed invariant, as persisted and printed by the tool.
struct RunRecord {
  std::string input;  // family spec or file:<hash> descriptor
  std::string kind;
  long value = 0;
  bool feasible = true;
  bool only_trivial = false;
  bool witness_available = false;
  std::vector<int> witness;  // sorted
  std::string method;
  long long ms = 0;
  std::string version;
};

RunRecord make_record(const std::string& input, const std::string& kind,
                      const SolveResult& result, long long ms);

// Deterministic single-line JSON with a fixed field order.
std::string record_to_json(const RunRecord& r);
RunRecord record_from_json(const std::string& text);
std::string records_to_json(const std::vector<RunRecord>& rs);

inline constexpr const char* kCsvHeader = "input,kind,value,method,ms";
std::string record_to_csv(const RunRecord& r);

// 64-bit FNV-1a over the order and adjacency rows, hex encoded.
std::string graph_hash(const Graph& g);

// Cache of records keyed by (graph hash, kind, tool version). Entries
// whose version field differs are ignored. Writes go through a temp file
// and rename, so records appear atomically.
std::string cache_key(const std::string& graph_hash, const std::string& kind,
                      const std::string& version);
std::optional<RunRecord> cache_load(const std::string& dir, const std::string& key,
                                    const std::string& version);
void cache_store(const std::string& dir, const std::string& key, const RunRecord& r);

}  // namespace pnmax::cli
