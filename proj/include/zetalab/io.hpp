#pragma once

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "zetalab/arith.hpp"
#include "zetalab/base.hpp"
#include "zetalab/rng.hpp"

namespace zetalab {

using ordered_json = nlohmann::ordered_json;

// 12 significant digits, '.' decimal separator; shared by CSV and the JSON
// decimal-string fields so reruns byte-compare.
inline std::string format_sig12(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::string(buf);
}

inline void write_csv(std::ostream& os, const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows) {
  for (size_t i = 0; i < header.size(); ++i)
    os << (i ? "," : "") << header[i];
  os << "\n";
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
    os << "\n";
  }
}

// ------------------------------------------------------------- manifest

struct RunManifest {
  std::string tool = "zetalab 1.0.0";
  ordered_json config;
  ordered_json tolerances;
  double wall_ms = 0.0;
};

// The manifest goes to stderr so stdout stays byte-comparable across runs
// (wall time is never deterministic).
inline void emit_manifest(const RunManifest& m) {
  ordered_json j;
  j["tool"] = m.tool;
  j["config"] = m.config;
  j["tolerances"] = m.tolerances;
  j["wall_ms"] = m.wall_ms;
  std::cerr << j.dump() << "\n";
}

// ---------------------------------------------------------------- caches

inline std::string cache_dir() {
  if (const char* env = std::getenv("ZETALAB_CACHE_DIR")) return env;
  return ".zetalab-cache";
}

namespace detail {

inline std::uint64_t value_checksum(const std::vector<int64>& v) {
  std::uint64_t h = 0x243f6a8885a308d3ULL;
  for (const int64 x : v) h = splitmix64(h ^ static_cast<std::uint64_t>(x));
  return h;
}

inline std::vector<int64> cache_fresh(const std::string& kind, int64 param) {
  if (kind == "primes") {
    PrimeTable pt(param);
    return pt.primes();
  }
  if (kind == "fd8") return enumerate_8d_family(param);
  require(false, "cache: unknown kind");
  return {};
}

inline bool cache_read(const std::string& path, const std::string& kind,
                       int64 param, std::vector<int64>& out,
                       std::string& reason) {
  std::ifstream in(path);
  if (!in) {
    reason = "missing";
    return false;
  }
  std::string magic, fkind;
  int64 fparam = 0;
  std::uint64_t count = 0, checksum = 0;
  if (!(in >> magic >> fkind >> fparam >> count >> std::hex >> checksum)) {
    reason = "unreadable header";
    return false;
  }
  in >> std::dec;
  if (magic != "zetalab" || fkind != kind || fparam != param) {
    reason = "header mismatch";
    return false;
  }
  out.clear();
  out.reserve(count);
  int64 v = 0;
  while (in >> v) out.push_back(v);
  if (out.size() != count) {
    reason = "count mismatch";
    return false;
  }
  if (!out.empty()) {
    for (size_t i = 1; i < out.size(); ++i)
      if (out[i - 1] >= out[i]) {
        reason = "order violation";
        return false;
      }
  }
  if (value_checksum(out) != checksum) {
    reason = "checksum mismatch";
    return false;
  }
  return true;
}

inline void cache_write(const std::string& path, const std::string& kind,
                        int64 param, const std::vector<int64>& values) {
  namespace fs = std::filesystem;
  fs::create_directories(fs::path(path).parent_path());
  const std::string tmp = path + ".tmp";
  {
    std::ofstream outf(tmp, std::ios::trunc);
    require(bool(outf), "cache: cannot write " + tmp);
    outf << "zetalab " << kind << " " << param << " " << values.size() << " "
         << std::hex << value_checksum(values) << std::dec << "\n";
    for (const int64 v : values) outf << v << "\n";
  }
  fs::rename(tmp, path);
}

}  // namespace detail

// Creates the file on miss, validates header/count/order/checksum on hit, and
// rebuilds (with a stderr warning) when any of those fail.
inline std::string cache_roundtrip(const std::string& kind, int64 param,
                                   std::vector<int64>* values = nullptr) {
  require(kind == "primes" || kind == "fd8", "cache_roundtrip: unknown kind");
  namespace fs = std::filesystem;
  const fs::path dir(cache_dir());
  const std::string path =
      (dir / (kind + "_" + std::to_string(param) + ".txt")).string();
  std::vector<int64> got;
  std::string reason;
  if (!detail::cache_read(path, kind, param, got, reason)) {
    if (reason != "missing")
      std::cerr << "cache: rebuilding " << path << " (" << reason << ")\n";
    got = detail::cache_fresh(kind, param);
    detail::cache_write(path, kind, param, got);
  }
  if (values) *values = std::move(got);
  return path;
}

}  // namespace zetalab
