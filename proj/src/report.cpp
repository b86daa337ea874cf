#include "liesplit/report.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include "liesplit/decomp.hpp"
#include "liesplit/error.hpp"
#include "liesplit/hilton.hpp"

namespace liesplit {

using nlohmann::json;

namespace {

// evaluations of functors on V stay below this many word coordinates
constexpr std::uint64_t kEvalLimit = std::uint64_t(1) << 16;


std::uint64_t checked_pow(int base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    r *= std::uint64_t(base);
    if (r > (1ull << 40)) return r;
  }
  return r;
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw ConfigError(msg);
}

FieldPtr field_for(const RunConfig& cfg) { return field_ptr(cfg.p, cfg.e.value_or(1)); }


std::string tensor_string(const Tensor& t) {
  const Field& f = *t.field;
  std::string out;
  for (const auto& [w, c] : t.terms) {
    std::string coef;
    bool minus = false;
    if (c == f.one()) {
    } else if (f.e() == 1 && c == f.neg(f.one())) {
      minus = true;
    } else {
      coef = std::to_string(c.v) + "*";
    }
    if (!out.empty() || minus) out += minus ? "-" : "+";
    out += coef;
    for (auto l : w) out += "x" + std::to_string(int(l));
  }
  return out.empty() ? "0" : out;
}

json table(std::vector<std::string> columns, json rows) { return {{"columns", std::move(columns)}, {"rows", std::move(rows)}}; }

json witt_cmd(const RunConfig& cfg) {
  json rows = json::array();
  for (int n = 1; n <= cfg.n; ++n) rows.push_back({n, witt_dim(n, cfg.m)});
  return {{"n", cfg.n}, {"m", cfg.m}, {"dim", witt_dim(cfg.n, cfg.m)}, {"table", table({"n", "dim"}, rows)}};
}

json lie_basis_cmd(const RunConfig& cfg) {
  auto f = field_for(cfg);
  json basis = json::array(), words = json::array();
  for (const auto& lw : lyndon_words(cfg.n, cfg.m)) {
    std::string s;
    for (auto l : lw.letters) s += "x" + std::to_string(int(l));
    words.push_back(s);
    basis.push_back(tensor_string(bracketed(lw.letters, cfg.m, f)));
  }
  return {{"n", cfg.n}, {"m", cfg.m}, {"dim", basis.size()}, {"lyndon_words", words}, {"basis", basis}};
}

struct GammaRun {
  SigmaModule module;
  int k = 0;
  std::string functor;
};

GammaRun gamma_of(const RunConfig& cfg) {
  auto f = field_for(cfg);
  FunctorSpec spec = parse_functor(cfg.functor, f);
  int k = degree(spec) > 0 ? degree(spec) : cfg.n;
  require(checked_pow(cfg.n, k) <= kEvalLimit, "n^degree must stay within 65536 coordinates");
  Graded top = evaluate(spec, cfg.n, f, k);
  Graded below = evaluate(spec, cfg.n - 1, f, k);
  return {gamma(f, top[k], below[k], cfg.n, k), k, to_string(spec)};
}

json gamma_cmd(const RunConfig& cfg) {
  auto g = gamma_of(cfg);
  return {{"functor", g.functor}, {"n", cfg.n}, {"degree", g.k}, {"dim", g.module.dim}};
}

json projective_cmd(const RunConfig& cfg) {
  auto g = gamma_of(cfg);
  auto pr = is_projective(g.module);
  auto split = max_projective_summand(g.module, cfg.seed);
  json summands = json::array();
  std::vector<std::pair<std::size_t, bool>> sig;
  for (const auto& s : split.decomposition.summands) sig.push_back({s.module.dim, is_projective(s.module).projective});
  std::sort(sig.begin(), sig.end());
  for (const auto& [d, proj] : sig) summands.push_back({{"dim", d}, {"projective", proj}});
  return {{"functor", g.functor},
          {"n", cfg.n},
          {"degree", g.k},
          {"dim", g.module.dim},
          {"projective", pr.projective},
          {"certificate", pr.certificate},
          {"max_projective_summand_dim", split.projective.module.dim},
          {"decomposition_complete", split.decomposition.complete},
          {"signature", summands}};
}

json block_cmd(const RunConfig& cfg) {
  auto r = block_decomposition(cfg.p, cfg.cap, cfg.m);
  json blocks = json::array();
  for (const auto& b : r.blocks) {
    json stages = json::array();
    for (const auto& s : b.stages)
      stages.push_back({{"label", s.label},
                        {"m", s.m},
                        {"exponents", s.k},
                        {"idempotent", s.idempotent},
                        {"commutes", s.commutes},
                        {"coalgebra", s.coalgebra}});
    json support = json::array();
    for (const auto& c : b.idempotent.components) support.push_back(c.support_size());
    blocks.push_back({{"m", b.m}, {"stages", stages}, {"support", support}});
  }
  json rows = json::array();
  for (const auto& v : r.verdicts) rows.push_back({v.n, v.block, v.dim, v.primitives, v.claims});
  return {{"field", {{"p", r.field.p}, {"e", r.field.e}, {"modulus", r.field.modulus}}},
          {"cap", r.cap},
          {"vdim", r.vdim},
          {"blocks", blocks},
          {"idempotents_exact", r.idempotents_exact},
          {"coalgebra_compatible", r.coalgebra_compatible},
          {"verdicts_hold", r.verdicts_hold},
          {"table", table({"n", "block", "dim", "primitives", "claims"}, rows)}};
}

json split_json(const SplitnessReport& r) {
  json rows = json::array(), degrees = json::array();
  for (const auto& d : r.degrees) {
    degrees.push_back({{"q", d.q},
                       {"q_dim", d.q_dim},
                       {"gamma_dim", d.gamma_dim},
                       {"certified", d.certified},
                       {"projective", d.projective},
                       {"certificate", d.certificate}});
    rows.push_back({d.q, d.q_dim, d.gamma_dim, d.certified, d.projective});
  }
  return {{"gens", r.gens},
          {"cap", r.cap},
          {"m", r.m},
          {"p", r.p},
          {"b_dims", r.b_dims},
          {"degrees", degrees},
          {"certified", r.certified},
          {"verdict", r.verdict},
          {"table", table({"q", "q_dim", "gamma_dim", "certified", "projective"}, rows)}};
}

json split_cmd(const RunConfig& cfg) { return split_json(splitness_check(cfg.gens, cfg.cap, cfg.m, field_for(cfg), cfg.jobs)); }

json hilton_cmd(const RunConfig& cfg) {
  auto r = verify_theorem61(cfg.gens, cfg.target, cfg.m, cfg.p, cfg.mode == "explicit" ? HiltonMode::Explicit : HiltonMode::Dims);
  json letters = json::array(), terms = json::array(), rows = json::array();
  for (const auto& l : r.letters)
    letters.push_back({{"degree", l.degree}, {"dim", l.dim}, {"recursive_dim", l.recursive_dim}, {"from_algebra", l.from_algebra}});
  for (const auto& t : r.terms) {
    terms.push_back({{"expr", t.expr},
                     {"weight", t.weight},
                     {"d", t.d},
                     {"lie_degree", t.lie_degree},
                     {"dim", t.dim},
                     {"letter_counts", t.letter_counts}});
    rows.push_back({t.expr, t.d, t.lie_degree, t.dim});
  }
  json out = {{"p", r.p},       {"target", r.target},       {"vdim", r.vdim},
              {"letters", letters}, {"terms", terms},       {"lie_dim", r.lie_dim},
              {"sum", r.sum},   {"dims_hold", r.dims_hold}, {"multiplicities_hold", r.multiplicities_hold},
              {"flags", r.flags}, {"holds", r.holds},       {"table", table({"expr", "d", "lie_degree", "dim"}, rows)}};
  if (r.explicit_mode) {
    out["explicit_dims"] = r.explicit_dims;
    out["direct_sum"] = r.direct_sum;
  }
  return out;
}

json report_1_1_cmd(const RunConfig& cfg) {
  auto r = theorem_1_1_report(cfg.p, cfg.M, cfg.f, cfg.cap, cfg.m, cfg.jobs);
  json rows = json::array();
  for (int q = 1; q <= cfg.cap; ++q)
    rows.push_back({q, r.split.b_dims[q], r.d_dims[q], r.split.degrees[q - 1].q_dim, r.split.degrees[q - 1].projective});
  return {{"p", r.p},
          {"M", r.M},
          {"f", r.f},
          {"degrees", r.degrees},
          {"d_dims", r.d_dims},
          {"split", split_json(r.split)},
          {"table", table({"q", "b_dim", "d_dim", "q_dim", "projective"}, rows)}};
}

}  // namespace

const std::vector<std::string>& commands() {
  static const std::vector<std::string> c{"witt", "lie-basis", "gamma", "projective", "block", "split", "hilton", "report-1-1"};
  return c;
}

void validate(const RunConfig& cfg) {
  const auto& c = commands();
  require(std::find(c.begin(), c.end(), cfg.command) != c.end(), "unknown command '" + cfg.command + "'");
  require(cfg.format == "json" || cfg.format == "csv", "format must be json or csv");
  require(cfg.format != "csv" || (cfg.command != "lie-basis" && cfg.command != "gamma" && cfg.command != "projective"),
          "csv is only available for dimension tables");
  require(cfg.jobs >= 1, "jobs must be at least 1");
  require(cfg.m >= 1, "m must be at least 1");
  if (cfg.command == "witt") {
    require(cfg.n >= 1, "n must be at least 1");
    return;
  }
  require(is_prime(cfg.p), "p must be prime");
  if (cfg.e) require(*cfg.e >= 1 && *cfg.e <= 8, "e must be in 1..8");
  const std::string& cmd = cfg.command;
  if (cmd == "lie-basis") {
    require(cfg.n >= 1, "n must be at least 1");
    require(checked_pow(cfg.m, cfg.n) <= kEvalLimit, "m^n must stay within 65536 coordinates");
  } else if (cmd == "gamma" || cmd == "projective") {
    require(!cfg.functor.empty(), "functor expression required");
    require(cfg.n >= 1 && cfg.n <= 7, "n must be in 1..7");
  } else if (cmd == "block") {
    require(cfg.cap >= 1 && cfg.cap <= 7, "cap must be in 1..7");
    int need = 0;
    try {
      need = block_field_degree(cfg.p, cfg.cap);
    } catch (const Error& err) {
      throw ConfigError(err.what());
    }
    require(!cfg.e || *cfg.e == need, "block at this cap needs e = " + std::to_string(need));
    require(checked_pow(cfg.m, cfg.cap) <= kEvalLimit, "m^cap must stay within 65536 coordinates");
  } else if (cmd == "split") {
    require(cfg.cap >= 1, "cap must be at least 1");
    require(checked_pow(cfg.m, cfg.cap) <= kEvalLimit, "m^cap must stay within 65536 coordinates");
    for (int g : cfg.gens) require(g >= 1 && g <= cfg.cap, "generating degrees must lie in 1..cap");
  } else if (cmd == "hilton") {
    require(cfg.target >= 1, "target must be at least 1");
    require(!cfg.gens.empty(), "letter degrees required");
    require(cfg.mode == "dims" || cfg.mode == "explicit", "mode must be dims or explicit");
  } else if (cmd == "report-1-1") {
    require(cfg.cap >= 1, "cap must be at least 1");
    require(cfg.M.size() == cfg.f.size(), "M and f must have the same length");
    require(checked_pow(cfg.m, cfg.cap) <= kEvalLimit, "m^cap must stay within 65536 coordinates");
  }
}

json config_json(const RunConfig& cfg) {
  json j = {{"command", cfg.command}, {"p", cfg.p},       {"m", cfg.m},         {"n", cfg.n},
            {"cap", cfg.cap},         {"target", cfg.target}, {"gens", cfg.gens}, {"M", cfg.M},
            {"f", cfg.f},             {"functor", cfg.functor}, {"mode", cfg.mode}, {"seed", cfg.seed},
            {"jobs", cfg.jobs},       {"format", cfg.format}, {"dry_run", cfg.dry_run}};
  j["e"] = cfg.e ? json(*cfg.e) : json(nullptr);
  return j;
}

RunOutcome run(const RunConfig& cfg) {
  auto start = std::chrono::steady_clock::now();
  RunOutcome out;
  json& rep = out.report;
  rep["schema_version"] = kSchemaVersion;
  rep["library_version"] = kLibraryVersion;
  rep["command"] = cfg.command;
  rep["config"] = config_json(cfg);
  try {
    validate(cfg);
    if (cfg.dry_run) {
      rep["result"] = {{"valid", true}};
    } else {
      log(LogLevel::Info, "running " + cfg.command);
      const std::string& c = cfg.command;
      if (c == "witt") rep["result"] = witt_cmd(cfg);
      else if (c == "lie-basis") rep["result"] = lie_basis_cmd(cfg);
      else if (c == "gamma") rep["result"] = gamma_cmd(cfg);
      else if (c == "projective") rep["result"] = projective_cmd(cfg);
      else if (c == "block") rep["result"] = block_cmd(cfg);
      else if (c == "split") rep["result"] = split_cmd(cfg);
      else if (c == "hilton") rep["result"] = hilton_cmd(cfg);
      else rep["result"] = report_1_1_cmd(cfg);
    }
  } catch (const ConfigError& err) {
    out.exit_code = 2;
    rep["error"] = {{"kind", "ConfigError"}, {"message", err.what()}};
  } catch (const Error& err) {
    out.exit_code = 1;
    rep["error"] = {{"kind", error_name(err.kind())}, {"message", err.what()}};
  }
  if (out.exit_code) log(LogLevel::Error, rep["error"]["message"].get<std::string>());
  rep["timing"] = {{"wall_seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()}};
  return out;
}

std::string render(const json& report, const std::string& format) {
  if (format != "csv") return report.dump(2) + "\n";
  std::ostringstream os;
  if (report.contains("error")) {
    os << "error,message\n" << report["error"]["kind"].get<std::string>() << ",\"" << report["error"]["message"].get<std::string>() << "\"\n";
    return os.str();
  }
  if (!report.contains("result") || !report["result"].contains("table")) return report.dump(2) + "\n";
  const json& t = report["result"]["table"];
  auto cell = [](const json& v) { return v.is_string() ? "\"" + v.get<std::string>() + "\"" : v.dump(); };
  for (std::size_t i = 0; i < t["columns"].size(); ++i) os << (i ? "," : "") << t["columns"][i].get<std::string>();
  os << "\n";
  for (const auto& row : t["rows"]) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << cell(row[i]);
    os << "\n";
  }
  return os.str();
}

json without_timing(json report) {
  report.erase("timing");
  return report;
}

LogLevel log_level() {
  static const LogLevel level = [] {
    const char* v = std::getenv("LIESPLIT_LOG");
    std::string s = v ? v : "warn";
    if (s == "error") return LogLevel::Error;
    if (s == "info") return LogLevel::Info;
    if (s == "debug") return LogLevel::Debug;
    return LogLevel::Warn;
  }();
  return level;
}

void log(LogLevel level, const std::string& msg) {
  static const char* names[] = {"error", "warn", "info", "debug"};
  if (level <= log_level()) std::cerr << "[liesplit " << names[int(level)] << "] " << msg << "\n";
}

}  // namespace liesplit
