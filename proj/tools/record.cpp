#include "record.hpp"

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pnmax/version.hpp"

namespace pnmax::cli {

using nlohmann::json;

RunRecord make_record(const std::string& input, const std::string& kind,
                      const SolveResult& result, long long ms) {
  RunRecord r;
  r.input = input;
  r.kind = kind;
  r.value = result.value;
  r.feasible = result.feasible;
  r.only_trivial = result.only_trivial;
  r.witness_available = result.feasible && result.witness_available;
  if (r.witness_available) r.witness = result.witness.vertices();
  r.method = method_name(result.method);
  r.ms = ms;
  r.version = kVersion;
  return r;
}

std::string record_to_json(const RunRecord& r) {
  json j = json::object();
  j["input"] = r.input;
  j["kind"] = r.kind;
  j["value"] = r.value;
  j["feasible"] = r.feasible;
  j["only_trivial"] = r.only_trivial;
  if (r.witness_available) {
    j["witness"] = r.witness;
  } else {
    j["witness"] = nullptr;
  }
  j["method"] = r.method;
  j["ms"] = r.ms;
  j["version"] = r.version;
  return j.dump();
}

RunRecord record_from_json(const std::string& text) {
  const json j = json::parse(text);
  RunRecord r;
  r.input = j.at("input").get<std::string>();
  r.kind = j.at("kind").get<std::string>();
  r.value = j.at("value").get<long>();
  r.feasible = j.at("feasible").get<bool>();
  r.only_trivial = j.at("only_trivial").get<bool>();
  if (!j.at("witness").is_null()) {
    r.witness_available = true;
    r.witness = j.at("witness").get<std::vector<int>>();
  }
  r.method = j.at("method").get<std::string>();
  r.ms = j.at("ms").get<long long>();
  r.version = j.at("version").get<std::string>();
  return r;
}

std::string records_to_json(const std::vector<RunRecord>& rs) {
  std::string out = "[";
  for (std::size_t i = 0; i < rs.size(); ++i) {
    if (i) out += ",";
    out += "\n  " + record_to_json(rs[i]);
  }
  out += rs.empty() ? "]" : "\n]";
  return out;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string record_to_csv(const RunRecord& r) {
  std::ostringstream out;
  out << csv_field(r.input) << "," << r.kind << ",";
  if (r.feasible) {
    out << r.value;
  } else {
    out << "none";
  }
  out << "," << r.method << "," << r.ms;
  return out.str();
}

namespace {

std::uint64_t fnv1a(std::uint64_t h, std::uint64_t x) {
  for (int i = 0; i < 8; ++i) {
    h ^= (x >> (8 * i)) & 0xff;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t x) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

}  // namespace

std::string graph_hash(const Graph& g) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  h = fnv1a(h, static_cast<std::uint64_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) {
    h = fnv1a(h, g.neighbors(v).word(0));
    h = fnv1a(h, g.neighbors(v).word(1));
  }
  return hex64(h);
}

std::string cache_key(const std::string& graph_hash, const std::string& kind,
                      const std::string& version) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : graph_hash + "|" + kind + "|" + version) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return hex64(h);
}

std::optional<RunRecord> cache_load(const std::string& dir, const std::string& key,
                                    const std::string& version) {
  const std::filesystem::path path = std::filesystem::path(dir) / (key + ".json");
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    RunRecord r = record_from_json(buf.str());
    if (r.version != version) return std::nullopt;  // stale entry, ignore
    return r;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void cache_store(const std::string& dir, const std::string& key, const RunRecord& r) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  const fs::path final_path = fs::path(dir) / (key + ".json");
  const fs::path tmp_path =
      fs::path(dir) / (key + ".tmp." + std::to_string(::getpid()));
  {
    std::ofstream out(tmp_path);
    out << record_to_json(r) << "\n";
  }
  fs::rename(tmp_path, final_path);
}

}  // namespace pnmax::cli
