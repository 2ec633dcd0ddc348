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

// gsp4: classes, induced characters, the Gelfand-Graev character, the
// irreducible table, decompositions, fixed-vector dimensions and the
// verification suites of GSp(4, F_q).
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 resource guard, 4 cache or I/O error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "gsp4/gsp4.hpp"

namespace {

using namespace gsp4;

constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;
constexpr int kExitCache = 4;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::int64_t q = 3;
  std::string format = "json";
  std::string output;
  std::string cache_dir;
  bool no_cache = false;
  std::size_t max_elements = Gsp4::kDefaultElementLimit;
  bool verbose = false;
};

/// Lazily built artifacts for one q, read through the cache.
class Session {
 public:
  explicit Session(const Options& o)
      : opt_(o), store_(o.cache_dir.empty() ? default_cache_dir() : std::filesystem::path(o.cache_dir)) {}

  std::int64_t q() const { return opt_.q; }

  const Gsp4& group() {
    if (!G_) G_.emplace(Gsp4::for_q(opt_.q));
    return *G_;
  }

  GroupData& data() {
    if (!data_) {
      log("enumerating GSp(4, F_" + std::to_string(opt_.q) + ")");
      data_ = std::make_unique<GroupData>(opt_.q, opt_.max_elements);
      save(ArtifactKind::classes, classes_to_json(data_->L));
    }
    return *data_;
  }

  /// Stable for the session: a cached list stays in use after enumeration.
  const ClassList& classes() {
    if (L_) return *L_;
    if (data_) return data_->L;
    if (auto j = load(ArtifactKind::classes)) {
      L_ = classes_from_json(group(), *j);
      return *L_;
    }
    return data().L;
  }

  /// Table JSON with family names and genericity.
  const Json& table_json() {
    if (table_json_) return *table_json_;
    if (auto j = load(ArtifactKind::irreducibles)) {
      table_json_ = std::move(*j);
      return *table_json_;
    }
    TableData& X = table_data();
    table_json_ = table_to_json(data().L, X.T, X.families.annotation, X.generic);
    save(ArtifactKind::irreducibles, *table_json_);
    return *table_json_;
  }

  const CharacterTable& table() {
    if (!T_) T_ = table_from_json(classes(), table_json());
    return *T_;
  }

  TableData& table_data() {
    if (!X_) {
      GroupData& D = data();
      log("solving the character table");
      X_ = std::make_unique<TableData>(D);
    }
    return *X_;
  }

  Json whittaker_json() {
    if (auto j = load(ArtifactKind::whittaker)) return *j;
    GroupData& D = data();
    auto gg = gelfand_graev(D.G, D.E, D.L);
    Json values = Json::array();
    for (std::size_t c = 0; c < D.L.size(); ++c)
      values.push_back({{"class", D.L.classes[c].label.str()}, {"value", complex_json(gg[c])}});
    Json j = {{"q", opt_.q}, {"norm", as_integer(inner_product(gg, gg))}, {"values", values}};
    save(ArtifactKind::whittaker, j);
    return j;
  }

 private:
  std::optional<Json> load(ArtifactKind k) {
    if (opt_.no_cache) return std::nullopt;
    auto e = store_.load(opt_.q, k);
    if (!e) return std::nullopt;
    log(std::string("cache hit: ") + artifact_name(k));
    return Json::parse(e->payload);
  }
  void save(ArtifactKind k, const Json& j) {
    if (opt_.no_cache) return;
    store_.save(make_entry(opt_.q, k, j.dump()));
  }
  void log(const std::string& s) const {
    if (opt_.verbose) std::cerr << s << "\n";
  }

  Options opt_;
  CacheStore store_;
  std::optional<Gsp4> G_;
  std::unique_ptr<GroupData> data_;
  std::optional<ClassList> L_;
  std::optional<Json> table_json_;
  std::optional<CharacterTable> T_;
  std::unique_ptr<TableData> X_;
};

void emit(const Options& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output, std::ios::binary | std::ios::trunc);
  if (!out) throw CacheError("cannot write " + o.output);
  out << text;
}

void require_format(const Options& o) {
  if (o.format != "json" && o.format != "csv") throw UsageError("--format must be json or csv");
}

/// "linear:a", "steinberg:a", "principal:a,b" or "cuspidal:n".
Gl2Character parse_gl2(std::int64_t q, const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos) throw UsageError("GL(2) character must look like family:params");
  std::string fam = s.substr(0, colon), rest = s.substr(colon + 1);
  std::vector<std::int64_t> v;
  std::stringstream ss(rest);
  for (std::string t; std::getline(ss, t, ',');) {
    try {
      v.push_back(std::stoll(t));
    } catch (const std::exception&) {
      throw UsageError("bad GL(2) parameter '" + t + "'");
    }
  }
  auto need = [&](std::size_t n) {
    if (v.size() != n) throw UsageError(fam + " takes " + std::to_string(n) + " parameter(s)");
  };
  if (fam == "linear") return need(1), Gl2Character::linear(q, v[0]);
  if (fam == "steinberg") return need(1), Gl2Character::steinberg(q, v[0]);
  if (fam == "principal") return need(2), Gl2Character::principal(q, v[0], v[1]);
  if (fam == "cuspidal") return need(1), Gl2Character::cuspidal(q, v[0]);
  throw UsageError("unknown GL(2) family '" + fam + "'");
}

Gl2Character gl2_from_json(std::int64_t q, const Json& j) {
  std::string fam = j.at("family").get<std::string>();
  if (fam == "linear") return Gl2Character::linear(q, j.at("a").get<std::int64_t>());
  if (fam == "steinberg") return Gl2Character::steinberg(q, j.at("a").get<std::int64_t>());
  if (fam == "principal")
    return Gl2Character::principal(q, j.at("a").get<std::int64_t>(), j.at("b").get<std::int64_t>());
  if (fam == "cuspidal") return Gl2Character::cuspidal(q, j.at("n").get<std::int64_t>());
  throw UsageError("unknown GL(2) family '" + fam + "'");
}

Json gl2_to_json(const Gl2Character& pi) {
  Json j = {{"family", gl2_family_name(pi.family)}};
  if (pi.family == Gl2Family::cuspidal) j["n"] = pi.a;
  else j["a"] = pi.a;
  if (pi.family == Gl2Family::principal) j["b"] = pi.b;
  return j;
}

/// {"parabolic":"B","chi1":..,"chi2":..,"sigma":..},
/// {"parabolic":"P","pi":{..},"sigma":..} or {"parabolic":"Q","chi":..,"pi":{..}}.
InducedSpec spec_from_json(std::int64_t q, const Json& j) {
  std::string p = j.at("parabolic").get<std::string>();
  if (p == "B" || p == "b")
    return InducedSpec::borel(q, j.at("chi1").get<std::int64_t>(), j.at("chi2").get<std::int64_t>(),
                              j.value("sigma", std::int64_t{0}));
  if (p == "P" || p == "p") return InducedSpec::siegel(q, gl2_from_json(q, j.at("pi")), j.value("sigma", std::int64_t{0}));
  if (p == "Q" || p == "q") return InducedSpec::klingen(q, j.value("chi", std::int64_t{0}), gl2_from_json(q, j.at("pi")));
  throw UsageError("parabolic must be B, P or Q");
}

Json spec_to_json(const InducedSpec& s) {
  switch (s.parabolic) {
    case Parabolic::borel: return {{"parabolic", "B"}, {"chi1", s.m1}, {"chi2", s.m2}, {"sigma", s.m}};
    case Parabolic::siegel: return {{"parabolic", "P"}, {"pi", gl2_to_json(s.pi)}, {"sigma", s.m}};
    case Parabolic::klingen: return {{"parabolic", "Q"}, {"chi", s.m}, {"pi", gl2_to_json(s.pi)}};
  }
  return {};
}

std::string values_csv(const ClassList& L, const ClassFunction& f) {
  std::ostringstream os;
  os << "index,class,re,im\n";
  for (std::size_t c = 0; c < L.size(); ++c)
    os << c << "," << csv_field(L.classes[c].label.str()) << "," << format_double(f[c].real()) << ","
       << format_double(f[c].imag()) << "\n";
  return os.str();
}

int cmd_classes(const Options& o) {
  require_format(o);
  Session S(o);
  const ClassList& L = S.classes();
  emit(o, o.format == "csv" ? classes_to_csv(L) : classes_to_json(L).dump(2) + "\n");
  return 0;
}

struct InduceArgs {
  std::string parabolic;
  std::int64_t m1 = 0, m2 = 0, sigma = 0, chi = 0;
  std::string pi = "linear:0";
  bool oracle = false;
};

int cmd_induce(const Options& o, const InduceArgs& a) {
  require_format(o);
  InducedSpec spec;
  if (a.parabolic == "b") spec = InducedSpec::borel(o.q, a.m1, a.m2, a.sigma);
  else if (a.parabolic == "p") spec = InducedSpec::siegel(o.q, parse_gl2(o.q, a.pi), a.sigma);
  else if (a.parabolic == "q") spec = InducedSpec::klingen(o.q, a.chi, parse_gl2(o.q, a.pi));
  else throw UsageError("--parabolic must be b, p or q");
  Session S(o);
  const ClassList& L = S.classes();
  ClassFunction f = closed_form_character(L, spec);
  int rc = 0;
  std::optional<double> deviation;
  if (a.oracle) {
    GroupData& D = S.data();
    auto chi = inducing_character(D.G, spec);
    ClassFunction g = induce(chi, D.E, D.L.partition);
    double worst = 0;
    for (std::size_t c = 0; c < L.size(); ++c) worst = std::max(worst, std::abs(f[c] - g[c]));
    deviation = worst;
    if (!(worst <= limits::kInductionTolerance)) rc = kExitVerify;
  }
  if (o.format == "csv") {
    emit(o, values_csv(L, f));
  } else {
    Json values = Json::array();
    for (std::size_t c = 0; c < L.size(); ++c)
      values.push_back({{"class", L.classes[c].label.str()}, {"value", complex_json(f[c])}});
    Json j = {{"q", o.q},
              {"spec", spec_to_json(spec)},
              {"name", spec.str()},
              {"degree", spec.degree(o.q)},
              {"norm", as_integer(inner_product(f, f))},
              {"values", values}};
    if (deviation) j["oracle_max_deviation"] = *deviation;
    emit(o, j.dump(2) + "\n");
  }
  return rc;
}

int cmd_whittaker(const Options& o) {
  require_format(o);
  Session S(o);
  Json j = S.whittaker_json();
  if (o.format == "json") {
    emit(o, j.dump(2) + "\n");
    return 0;
  }
  std::ostringstream os;
  os << "index,class,re,im\n";
  std::size_t i = 0;
  for (const auto& v : j.at("values"))
    os << i++ << "," << csv_field(v.at("class").get<std::string>()) << ","
       << format_double(v.at("value").at(0).get<double>()) << "," << format_double(v.at("value").at(1).get<double>())
       << "\n";
  emit(o, os.str());
  return 0;
}

std::vector<std::string> annotations_of(const Json& t) {
  std::vector<std::string> a;
  for (const auto& c : t.at("characters")) a.push_back(c.value("family", std::string()));
  return a;
}

std::vector<bool> generic_of(const Json& t) {
  std::vector<bool> g;
  for (const auto& c : t.at("characters")) g.push_back(c.value("generic", false));
  return g;
}

int cmd_table(const Options& o) {
  require_format(o);
  Session S(o);
  const Json& t = S.table_json();
  if (o.format == "json") {
    emit(o, t.dump(2) + "\n");
    return 0;
  }
  emit(o, table_to_csv(S.classes(), S.table(), annotations_of(t), generic_of(t)));
  return 0;
}

int cmd_decompose(const Options& o, const std::string& spec_text) {
  require_format(o);
  Json sj;
  try {
    sj = Json::parse(spec_text);
  } catch (const Json::exception& e) {
    throw UsageError(std::string("--spec is not valid JSON: ") + e.what());
  }
  InducedSpec spec;
  try {
    spec = spec_from_json(o.q, sj);
  } catch (const Json::exception& e) {
    throw UsageError(std::string("bad --spec: ") + e.what());
  }
  Session S(o);
  const ClassList& L = S.classes();
  const CharacterTable& T = S.table();
  const Json& t = S.table_json();
  auto names = annotations_of(t);
  auto generic = generic_of(t);
  ClassFunction f = closed_form_character(L, spec);
  auto cs = decompose(f, T.characters);
  Json out = Json::array();
  for (const auto& c : cs) {
    Json r = {{"index", c.index}, {"multiplicity", c.multiplicity}, {"degree", T.degrees[c.index]},
              {"generic", static_cast<bool>(generic[c.index])}};
    if (!names[c.index].empty()) r["family"] = names[c.index];
    out.push_back(r);
  }
  Json j = {{"q", o.q},
            {"spec", spec_to_json(spec)},
            {"name", spec.str()},
            {"degree", spec.degree(o.q)},
            {"norm", as_integer(inner_product(f, f))},
            {"constituents", out}};
  if (o.format == "csv") {
    std::ostringstream os;
    os << "index,multiplicity,degree,generic,family\n";
    for (const auto& r : out)
      os << r["index"].get<std::size_t>() << "," << r["multiplicity"].get<std::int64_t>() << ","
         << r["degree"].get<std::int64_t>() << "," << (r["generic"].get<bool>() ? 1 : 0) << ","
         << csv_field(r.value("family", std::string())) << "\n";
    emit(o, os.str());
  } else {
    emit(o, j.dump(2) + "\n");
  }
  return 0;
}

int cmd_dims(const Options& o) {
  require_format(o);
  if (o.q < 3 || o.q % 2 == 0) throw UsageError("q must be an odd prime power");
  Gsp4::for_q(o.q);  // rejects odd q that are not prime powers
  emit(o, o.format == "csv" ? dims_to_csv(o.q) : dims_to_json(o.q).dump(2) + "\n");
  return 0;
}

int cmd_verify(const Options& o, const std::string& suite_name) {
  Suite suite;
  if (suite_name == "core") suite = Suite::core;
  else if (suite_name == "extended") suite = Suite::extended;
  else throw UsageError("--suite must be core or extended");
  if (o.q != suite_q(suite))
    throw UsageError("the " + suite_name + " suite runs at q=" + std::to_string(suite_q(suite)));
  VerifyProgress progress;
  if (o.verbose) progress = [](const std::string& s) { std::cerr << s << "\n"; };
  VerifyReport R = run_verify_suite(suite, progress);
  emit(o, R.text());
  if (o.verbose)
    for (const auto& t : R.timings) std::cerr << t << "\n";
  return R.pass() ? 0 : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Character theory of GSp(4, F_q)"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--cache-dir", o.cache_dir, "cache root (default $GSP4_CACHE_DIR)");
  app.add_flag("--no-cache", o.no_cache, "recompute instead of reading or writing the cache");
  app.add_option("--max-elements", o.max_elements, "refuse to enumerate larger groups");
  app.add_flag("-v,--verbose", o.verbose, "progress on stderr");

  auto common = [&](CLI::App* c, bool formats) {
    c->add_option("--q", o.q, "odd prime power")->required();
    c->add_option("-o,--output", o.output, "write to a file instead of stdout");
    if (formats) c->add_option("--format", o.format, "json or csv");
  };

  auto* classes = app.add_subcommand("classes", "conjugacy classes");
  common(classes, true);

  InduceArgs ia;
  auto* induce_cmd = app.add_subcommand("induce", "closed-form parabolically induced character");
  common(induce_cmd, true);
  induce_cmd->add_option("--parabolic", ia.parabolic, "b, p or q")->required();
  induce_cmd->add_option("--m1", ia.m1, "B: exponent of chi1");
  induce_cmd->add_option("--m2", ia.m2, "B: exponent of chi2");
  induce_cmd->add_option("--sigma", ia.sigma, "B, P: exponent of sigma");
  induce_cmd->add_option("--chi", ia.chi, "Q: exponent of chi");
  induce_cmd->add_option("--pi", ia.pi, "P, Q: linear:a, steinberg:a, principal:a,b or cuspidal:n");
  induce_cmd->add_flag("--oracle", ia.oracle, "compare against the Frobenius sum");

  auto* whittaker = app.add_subcommand("whittaker", "Gelfand-Graev character");
  common(whittaker, true);

  auto* table = app.add_subcommand("table", "irreducible character table");
  common(table, true);

  std::string spec_text;
  auto* dec = app.add_subcommand("decompose", "decompose an induced character");
  common(dec, true);
  dec->add_option("--spec", spec_text, "induced spec as JSON")->required();

  auto* dims = app.add_subcommand("dims", "dimensions of Gamma(p)-fixed vectors");
  common(dims, true);

  std::string suite_name = "core";
  auto* verify = app.add_subcommand("verify", "acceptance suite");
  common(verify, false);
  verify->add_option("--suite", suite_name, "core (q=3) or extended (q=5)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*classes) return cmd_classes(o);
    if (*induce_cmd) return cmd_induce(o, ia);
    if (*whittaker) return cmd_whittaker(o);
    if (*table) return cmd_table(o);
    if (*dec) return cmd_decompose(o, spec_text);
    if (*dims) return cmd_dims(o);
    if (*verify) return cmd_verify(o, suite_name);
  } catch (const ResourceGuardError& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return kExitResource;
  } catch (const CacheError& e) {
    std::cerr << "cache: " << e.what() << "\n";
    return kExitCache;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerify;
  }
  return kExitUsage;
}
