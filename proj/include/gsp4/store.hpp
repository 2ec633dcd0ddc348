/* Copyright 2026 The gsp4 Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef GSP4_STORE_HPP_
#define GSP4_STORE_HPP_

#include <fcntl.h>
#include <openssl/evp.h>
#include <sys/file.h>
#include <unistd.h>

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "gsp4/conjugacy.hpp"
#include "gsp4/dimensions.hpp"
#include "gsp4/irreducibles.hpp"

namespace gsp4 {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

class CacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Payload hash failed to verify.
class HashMismatchError : public CacheError {
 public:
  using CacheError::CacheError;
};

enum class ArtifactKind : std::uint8_t { classes, gl2, induced, whittaker, irreducibles, structure_constants };

inline const char* artifact_name(ArtifactKind k) {
  switch (k) {
    case ArtifactKind::classes: return "classes";
    case ArtifactKind::gl2: return "gl2";
    case ArtifactKind::induced: return "induced";
    case ArtifactKind::whittaker: return "whittaker";
    case ArtifactKind::irreducibles: return "irreducibles";
    case ArtifactKind::structure_constants: return "structure-constants";
  }
  return "?";
}

enum class Encoding : std::uint8_t { json, binary };

struct CacheEntry {
  int schema = kSchemaVersion;
  std::int64_t q = 0;
  ArtifactKind kind = ArtifactKind::classes;
  Encoding encoding = Encoding::json;
  std::string payload;
  std::string hash;  // hex SHA-256 of payload

  bool operator==(const CacheEntry&) const = default;
};

inline std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int n = 0;
  if (EVP_Digest(data.data(), data.size(), md, &n, EVP_sha256(), nullptr) != 1)
    throw CacheError("SHA-256 failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < n; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int{md[i]};
  return os.str();
}

inline CacheEntry make_entry(std::int64_t q, ArtifactKind kind, std::string payload,
                             Encoding enc = Encoding::json) {
  CacheEntry e;
  e.q = q;
  e.kind = kind;
  e.encoding = enc;
  e.payload = std::move(payload);
  e.hash = sha256_hex(e.payload);
  return e;
}

/// $GSP4_CACHE_DIR, else $XDG_CACHE_HOME/gsp4, else ~/.cache/gsp4.
inline std::filesystem::path default_cache_dir() {
  if (const char* d = std::getenv("GSP4_CACHE_DIR"); d && *d) return d;
  if (const char* d = std::getenv("XDG_CACHE_HOME"); d && *d) return std::filesystem::path(d) / "gsp4";
  if (const char* d = std::getenv("HOME"); d && *d) return std::filesystem::path(d) / ".cache" / "gsp4";
  return std::filesystem::temp_directory_path() / "gsp4-cache";
}

/// flock on <dir>/.lock for the lifetime of the object.
class CacheLock {
 public:
  CacheLock(const std::filesystem::path& dir, bool exclusive) {
    auto p = dir / ".lock";
    fd_ = ::open(p.c_str(), O_RDWR | O_CREAT, 0644);
    if (fd_ < 0) throw CacheError("cannot open lock file " + p.string());
    if (::flock(fd_, exclusive ? LOCK_EX : LOCK_SH) != 0) {
      ::close(fd_);
      throw CacheError("cannot lock " + p.string());
    }
  }
  CacheLock(const CacheLock&) = delete;
  CacheLock& operator=(const CacheLock&) = delete;
  ~CacheLock() {
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }

 private:
  int fd_ = -1;
};

/// Layout: <root>/v<schema>/q<q>/<kind>.meta.json and <kind>.payload.
class CacheStore {
 public:
  explicit CacheStore(std::filesystem::path root = default_cache_dir()) : root_(std::move(root)) {}

  const std::filesystem::path& root() const { return root_; }

  void save(const CacheEntry& e) const {
    auto dir = directory(e.schema, e.q);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw CacheError("cannot create " + dir.string() + ": " + ec.message());
    CacheLock lock(dir, true);
    Json meta = {{"schema", e.schema},
                 {"q", e.q},
                 {"kind", artifact_name(e.kind)},
                 {"encoding", e.encoding == Encoding::json ? "json" : "binary"},
                 {"sha256", e.hash},
                 {"bytes", e.payload.size()}};
    write_atomic(dir / (std::string(artifact_name(e.kind)) + ".payload"), e.payload);
    write_atomic(dir / (std::string(artifact_name(e.kind)) + ".meta.json"), meta.dump(2) + "\n");
  }

  /// Loads only on an exact (schema, q, kind) match; nullopt when absent.
  std::optional<CacheEntry> load(std::int64_t q, ArtifactKind kind) const {
    auto dir = directory(kSchemaVersion, q);
    auto meta_path = dir / (std::string(artifact_name(kind)) + ".meta.json");
    auto payload_path = dir / (std::string(artifact_name(kind)) + ".payload");
    if (!std::filesystem::exists(meta_path) || !std::filesystem::exists(payload_path)) return std::nullopt;
    CacheLock lock(dir, false);
    Json meta;
    try {
      meta = Json::parse(read_file(meta_path));
    } catch (const Json::exception& ex) {
      throw CacheError("corrupt cache metadata " + meta_path.string() + ": " + ex.what());
    }
    if (meta.value("schema", -1) != kSchemaVersion || meta.value("q", std::int64_t{-1}) != q ||
        meta.value("kind", std::string()) != artifact_name(kind))
      return std::nullopt;
    CacheEntry e;
    e.q = q;
    e.kind = kind;
    e.encoding = meta.value("encoding", std::string("json")) == "binary" ? Encoding::binary : Encoding::json;
    e.payload = read_file(payload_path);
    e.hash = meta.value("sha256", std::string());
    if (sha256_hex(e.payload) != e.hash) throw HashMismatchError("hash mismatch in " + payload_path.string());
    return e;
  }

  std::filesystem::path directory(int schema, std::int64_t q) const {
    return root_ / ("v" + std::to_string(schema)) / ("q" + std::to_string(q));
  }

 private:
  static std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw CacheError("cannot read " + p.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  }
  static void write_atomic(const std::filesystem::path& p, const std::string& data) {
    auto tmp = p;
    tmp += ".tmp." + std::to_string(::getpid());
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) throw CacheError("cannot write " + tmp.string());
      out.write(data.data(), static_cast<std::streamsize>(data.size()));
      if (!out) throw CacheError("short write to " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, p, ec);
    if (ec) throw CacheError("cannot rename " + tmp.string() + ": " + ec.message());
  }

  std::filesystem::path root_;
};

// ---------------------------------------------------------------------------
// JSON schemas

inline Json to_json(const ClassLabel& l) {
  return {{"family", family_name(l.family)}, {"i", l.i}, {"j", l.j}, {"k", l.k}, {"provisional", l.provisional}};
}

inline Json to_json(const Mat4& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < 4; ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < 4; ++c) row.push_back(int{m(r, c)});
    rows.push_back(row);
  }
  return rows;
}

inline Mat4 mat4_from_json(const Json& j, std::int64_t q) {
  if (!j.is_array() || j.size() != 4) throw CacheError("matrix must have 4 rows");
  Mat4 m;
  for (std::size_t r = 0; r < 4; ++r) {
    if (!j[r].is_array() || j[r].size() != 4) throw CacheError("matrix row must have 4 entries");
    for (std::size_t c = 0; c < 4; ++c) {
      int v = j[r][c].get<int>();
      if (v < 0 || v >= q) throw CacheError("matrix entry out of range");
      m(r, c) = static_cast<Code>(v);
    }
  }
  return m;
}

/// Class list without the per-element class map.
inline Json classes_to_json(const ClassList& L) {
  Json cls = Json::array();
  for (std::size_t c = 0; c < L.size(); ++c) {
    const auto& ci = L.classes[c];
    cls.push_back({{"index", c},
                   {"label", ci.label.str()},
                   {"parts", to_json(ci.label)},
                   {"size", ci.size},
                   {"centralizer_order", ci.centralizer_order},
                   {"representative_index", L.partition.representative[c]},
                   {"representative", to_json(ci.representative)}});
  }
  return {{"q", L.q}, {"group_order", L.group_order}, {"classes", cls}};
}

/// Rebuilds a class list; fingerprints and labels are recomputed from the
/// representatives and must agree with the stored labels.
inline ClassList classes_from_json(const Gsp4& G, const Json& j) {
  ClassList L;
  L.q = j.at("q").get<std::int64_t>();
  if (L.q != G.q()) throw CacheError("class list is for a different q");
  L.group_order = j.at("group_order").get<std::uint64_t>();
  L.partition.group_order = L.group_order;
  for (const auto& c : j.at("classes")) {
    ClassInfo ci;
    ci.representative = mat4_from_json(c.at("representative"), L.q);
    ci.size = c.at("size").get<std::uint64_t>();
    ci.centralizer_order = c.at("centralizer_order").get<std::uint64_t>();
    ElementAnalysis an = analyze(G, ci.representative);
    ci.fingerprint = an.fingerprint;
    ci.label = derive_label(G, an);
    if (ci.label.str() != c.at("label").get<std::string>())
      throw CacheError("stored label " + c.at("label").get<std::string>() + " does not match representative");
    L.partition.representative.push_back(c.at("representative_index").get<std::size_t>());
    L.partition.size.push_back(ci.size);
    L.classes.push_back(ci);
  }
  return L;
}

inline Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

inline Json table_to_json(const ClassList& L, const CharacterTable& T,
                          const std::vector<std::string>& annotation = {},
                          const std::vector<bool>& generic = {}) {
  Json chars = Json::array();
  for (std::size_t i = 0; i < T.size(); ++i) {
    Json values = Json::array();
    for (std::size_t c = 0; c < L.size(); ++c) values.push_back(complex_json(T.characters[i][c]));
    Json row = {{"index", i}, {"degree", T.degrees[i]}};
    if (i < annotation.size() && !annotation[i].empty()) row["family"] = annotation[i];
    if (i < generic.size()) row["generic"] = static_cast<bool>(generic[i]);
    row["values"] = values;
    chars.push_back(row);
  }
  Json labels = Json::array();
  for (const auto& c : L.classes) labels.push_back(c.label.str());
  return {{"q", L.q}, {"group_order", L.group_order}, {"classes", labels}, {"characters", chars}};
}

/// Character values against an existing class list. The class labels must
/// appear in the same order.
inline CharacterTable table_from_json(const ClassList& L, const Json& j) {
  if (j.at("q").get<std::int64_t>() != L.q) throw CacheError("table is for a different q");
  const auto& labels = j.at("classes");
  if (labels.size() != L.size()) throw CacheError("table has the wrong number of classes");
  for (std::size_t c = 0; c < L.size(); ++c)
    if (labels[c].get<std::string>() != L.classes[c].label.str()) throw CacheError("table class order differs");
  CharacterTable T;
  T.partition = &L.partition;
  for (const auto& row : j.at("characters")) {
    std::vector<Complex> v;
    for (const auto& z : row.at("values")) v.emplace_back(z.at(0).get<double>(), z.at(1).get<double>());
    T.characters.emplace_back(L.partition, std::move(v));
    T.degrees.push_back(row.at("degree").get<std::int64_t>());
  }
  return T;
}

inline Json dims_to_json(std::int64_t q) {
  Json rows = Json::array();
  for (const auto& t : padic_types()) {
    Json cs = Json::array();
    for (const auto& c : t.constituents) cs.push_back({{"name", c.name}, {"degree", c.degree(q)}});
    rows.push_back({{"type", t.label},
                    {"representation", t.representation},
                    {"condition", t.condition},
                    {"polynomial", t.dimension.str()},
                    {"dimension", padic_dimension(t, q)},
                    {"constituents", cs}});
  }
  return {{"q", q}, {"rows", rows}};
}

// ---------------------------------------------------------------------------
// CSV

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string r = "\"";
  for (char ch : s) r += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return r + "\"";
}

inline std::string format_double(double x) {
  if (x == 0) x = 0;  // drop the sign of -0
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

inline std::string classes_to_csv(const ClassList& L) {
  std::ostringstream os;
  os << "index,label,family,i,j,k,provisional,size,centralizer_order,representative\n";
  for (std::size_t c = 0; c < L.size(); ++c) {
    const auto& ci = L.classes[c];
    std::string rep;
    for (std::size_t r = 0; r < 4; ++r) {
      if (r) rep += ";";
      for (std::size_t k = 0; k < 4; ++k) rep += (k ? " " : "") + std::to_string(int{ci.representative(r, k)});
    }
    os << c << "," << csv_field(ci.label.str()) << "," << family_name(ci.label.family) << "," << ci.label.i << ","
       << ci.label.j << "," << ci.label.k << "," << (ci.label.provisional ? 1 : 0) << "," << ci.size << ","
       << ci.centralizer_order << "," << rep << "\n";
  }
  return os.str();
}

/// One row per character; each class contributes a _re and an _im column.
inline std::string table_to_csv(const ClassList& L, const CharacterTable& T,
                                const std::vector<std::string>& annotation = {},
                                const std::vector<bool>& generic = {}) {
  std::ostringstream os;
  os << "index,degree,family,generic";
  for (std::size_t c = 0; c < L.size(); ++c) os << ",c" << c << "_re,c" << c << "_im";
  os << "\n";
  for (std::size_t i = 0; i < T.size(); ++i) {
    os << i << "," << T.degrees[i] << "," << csv_field(i < annotation.size() ? annotation[i] : "") << ","
       << (i < generic.size() ? (generic[i] ? "1" : "0") : "");
    for (std::size_t c = 0; c < L.size(); ++c)
      os << "," << format_double(T.characters[i][c].real()) << "," << format_double(T.characters[i][c].imag());
    os << "\n";
  }
  return os.str();
}

inline std::string dims_to_csv(std::int64_t q) {
  std::ostringstream os;
  os << "type,representation,condition,polynomial,dimension,constituents\n";
  for (const auto& t : padic_types()) {
    std::string cs;
    for (std::size_t i = 0; i < t.constituents.size(); ++i) cs += (i ? " + " : "") + t.constituents[i].name;
    os << t.label << "," << csv_field(t.representation) << "," << csv_field(t.condition) << ","
       << csv_field(t.dimension.str()) << "," << padic_dimension(t, q) << "," << csv_field(cs) << "\n";
  }
  return os.str();
}

}  // namespace gsp4

#endif  // GSP4_STORE_HPP_
