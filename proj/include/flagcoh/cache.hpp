#pragma once

// On-disk cache of graded quotients, keyed by presentation text and cap.

#include <flagcoh/cohomology.hpp>

#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

namespace flagcoh {

inline constexpr int kCacheSchemaVersion = 1;

inline std::string cache_key(const RingPresentation& p, int cap) {
  const std::string text = p.canonical_text() + "cap=" + std::to_string(cap) + "\n";
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

/// FLAGCOH_CACHE, else $XDG_CACHE_HOME/flagcoh, else ~/.cache/flagcoh.
inline std::optional<std::filesystem::path> cache_directory() {
  if (const char* dir = std::getenv("FLAGCOH_CACHE")) {
    if (*dir == '\0') return std::nullopt;
    return std::filesystem::path(dir);
  }
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "flagcoh";
  if (const char* home = std::getenv("HOME"); home && *home) return std::filesystem::path(home) / ".cache" / "flagcoh";
  return std::nullopt;
}

inline nlohmann::json quotient_to_json(const QuotientRing& ring) {
  nlohmann::json j;
  j["schema_version"] = kCacheSchemaVersion;
  j["presentation"] = ring.presentation().canonical_text();
  j["cap"] = ring.cap();
  j["betti"] = ring.betti();
  nlohmann::json degrees = nlohmann::json::array();
  for (int d = 0; d <= ring.cap(); ++d) {
    const auto& piece = ring.piece(d);
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t k = 0; k < piece.ideal.rank(); ++k) {
      nlohmann::json row = nlohmann::json::array();
      for (const auto& [col, val] : piece.ideal.row(k)) row.push_back({col, val.get_str()});
      rows.push_back(std::move(row));
    }
    nlohmann::json basis = nlohmann::json::array();
    for (const auto& e : ring.standard_monomials(d)) basis.push_back(e);
    degrees.push_back({{"basis", basis}, {"rows", rows}});
  }
  j["degrees"] = std::move(degrees);
  return j;
}

/// Rebuilds the quotient when the stored presentation and cap match exactly.
inline std::optional<QuotientRing> quotient_from_json(const nlohmann::json& j, const RingPresentation& p, int cap,
                                                      QuotientOptions options = {}) {
  if (j.value("schema_version", 0) != kCacheSchemaVersion) return std::nullopt;
  if (j.value("presentation", std::string()) != p.canonical_text() || j.value("cap", -1) != cap) return std::nullopt;
  std::vector<std::vector<SparseVector>> rows;
  for (const auto& degree : j.at("degrees")) {
    std::vector<SparseVector> level;
    for (const auto& row : degree.at("rows")) {
      SparseVector v;
      for (const auto& entry : row) v.emplace_back(entry.at(0).get<std::size_t>(), parse_rational(entry.at(1).get<std::string>()));
      level.push_back(std::move(v));
    }
    rows.push_back(std::move(level));
  }
  QuotientRing ring(p, cap, rows, options);
  if (j.at("betti").get<std::vector<int>>() != ring.betti()) return std::nullopt;
  return ring;
}

enum class CacheStatus { Off, Hit, Miss, Stored };

inline std::string to_string(CacheStatus s) {
  switch (s) {
    case CacheStatus::Off: return "off";
    case CacheStatus::Hit: return "hit";
    case CacheStatus::Miss: return "miss";
    case CacheStatus::Stored: return "miss (stored)";
  }
  return "";
}

struct CachedQuotient {
  QuotientRing ring;
  CacheStatus status;
};

inline CachedQuotient cached_quotient(const RingPresentation& p, int cap, std::optional<std::filesystem::path> dir,
                                      QuotientOptions options = {}) {
  if (!dir) return {QuotientRing(p, cap, options), CacheStatus::Off};
  const auto file = *dir / (cache_key(p, cap) + ".json");
  if (std::ifstream in(file); in) {
    try {
      auto j = nlohmann::json::parse(in);
      if (auto ring = quotient_from_json(j, p, cap, options)) return {std::move(*ring), CacheStatus::Hit};
    } catch (const nlohmann::json::exception&) {
    } catch (const InputError&) {
    }
  }
  QuotientRing ring(p, cap, options);
  std::error_code ec;
  std::filesystem::create_directories(*dir, ec);
  if (ec) return {std::move(ring), CacheStatus::Miss};
  const auto tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return {std::move(ring), CacheStatus::Miss};
    out << quotient_to_json(ring).dump();
  }
  std::filesystem::rename(tmp, file, ec);
  return {std::move(ring), ec ? CacheStatus::Miss : CacheStatus::Stored};
}

}  // namespace flagcoh
