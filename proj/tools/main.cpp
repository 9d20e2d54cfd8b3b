// signpat: exact qualitative analysis of sign patterns. Decides sign
// k-potence, computes Frobenius/cyclic normal forms and reduced forms,
// generates sign idempotent and sign k-potent patterns, decides whether a
// sign k-potent pattern allows k-potence, and builds exact rational
// realizations.
//
// Exit codes: 0 decided/produced, 1 well-formed negative answer,
// 2 usage or input error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "signpat/cyclic.hpp"
#include "signpat/idem_builder.hpp"
#include "signpat/kpotent_builder.hpp"
#include "signpat/oracle.hpp"
#include "signpat/pattern_text.hpp"
#include "signpat/realization.hpp"
#include "signpat/reduction.hpp"
#include "signpat/structure.hpp"

using json = nlohmann::json;
using namespace signpat;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitError = 2;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SignMatrix load_pattern(const std::string& path, bool generalized) {
  const std::string text = read_input(path);
  // JSON pattern document: {"n": ..., "rows": ["+-0...", ...]}.
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    if (c == '{') {
      const json doc = json::parse(text);
      std::string joined;
      for (const auto& row : doc.at("rows"))
        joined += row.get<std::string>() + "\n";
      SignMatrix m = parse_pattern(joined, generalized);
      if (doc.contains("n") && doc.at("n").get<int>() != m.order())
        throw ParseError("JSON field n does not match the rows");
      return m;
    }
    break;
  }
  return parse_pattern(text, generalized);
}

json pattern_json(const SignMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    std::string r;
    for (int j = 0; j < m.cols(); ++j) r.push_back(to_char(m.get(i, j)));
    rows.push_back(r);
  }
  return json{{"n", m.order()}, {"rows", rows}};
}

json realization_json(const RationalMatrix& b, const SignMatrix& a, int k) {
  json entries = json::array();
  for (int i = 0; i < b.order(); ++i) {
    json row = json::array();
    for (int j = 0; j < b.order(); ++j) row.push_back(to_string(b.at(i, j)));
    entries.push_back(row);
  }
  json doc{{"n", b.order()}, {"k", k}, {"entries", entries},
           {"verified", verify_realization(b, a, k)}};
  doc["pattern"] = pattern_json(a)["rows"];
  return doc;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

struct GlobalFlags {
  bool json = false;
  bool generalized = false;
  int jobs = 1;
  int kmax = 0;
  std::uint64_t seed = 1;
};

int cmd_check(const std::string& file, const GlobalFlags& g) {
  const SignMatrix a = load_pattern(file, g.generalized);
  if (!a.is_proper()) {
    std::cerr << "potence is defined for proper patterns only\n";
    return kExitError;
  }
  const PotenceReport rep = potence_index(a, g.kmax);
  if (g.json) {
    json doc{{"command", "check"},
             {"n", a.order()},
             {"k", rep.k ? json(*rep.k) : json(nullptr)},
             {"idempotent", rep.k && *rep.k == 1},
             {"period_entered", rep.period_entered},
             {"powers_examined", rep.powers_examined}};
    std::cout << doc.dump(2) << "\n";
  } else if (rep.k) {
    std::cout << "sign " << *rep.k << "-potent"
              << (*rep.k == 1 ? " (idempotent)" : "") << "\n";
  } else if (rep.period_entered) {
    std::cout << "not sign k-potent for any k (power cycle does not return "
                 "to the pattern)\n";
  } else {
    std::cout << "not sign k-potent for any k <= "
              << (g.kmax > 0 ? g.kmax : default_potence_cap(a.order())) << "\n";
  }
  return rep.k ? kExitOk : kExitNegative;
}

int cmd_fnf(const std::string& file, const GlobalFlags& g) {
  const SignMatrix a = load_pattern(file, g.generalized);
  const FrobeniusForm f = frobenius_normal_form(a);
  const SignMatrix p = apply_form(a, f);
  if (g.json) {
    json kinds = json::array();
    for (auto k : f.kinds)
      kinds.push_back(k == DiagBlockKind::Irreducible ? "irreducible" : "zero");
    json doc{{"command", "fnf"},
             {"perm", f.perm},
             {"block_sizes", f.block_sizes},
             {"kinds", kinds},
             {"pattern", pattern_json(p)}};
    std::cout << doc.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "blocks:";
  for (std::size_t b = 0; b < f.block_sizes.size(); ++b)
    std::cout << " " << f.block_sizes[b]
              << (f.kinds[b] == DiagBlockKind::ZeroOne ? "(zero)" : "");
  std::cout << "\npermutation (old->new, 1-based):";
  for (int v : f.perm) std::cout << " " << v + 1;
  std::cout << "\n" << format_pattern(p);
  return kExitOk;
}

int cmd_reduce(const std::string& file, const GlobalFlags& g) {
  const SignMatrix a = load_pattern(file, g.generalized);
  const ReducedMatrix r = reduce(a);
  if (g.json) {
    json doc{{"command", "reduce"},
             {"class_sizes", r.class_sizes},
             {"pattern", pattern_json(r.entries)}};
    std::cout << doc.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "class sizes:";
  for (int s : r.class_sizes) std::cout << " " << s;
  std::cout << "\n" << format_pattern(r.entries);
  return kExitOk;
}

int cmd_cnf(const std::string& file, const GlobalFlags& g) {
  const SignMatrix a = load_pattern(file, g.generalized);
  const CnfOutcome out = to_cyclic_normal_form(a);
  if (!out.cnf) {
    std::cerr << "diagonal block " << out.failed_block + 1
              << " has no cyclic structure; the pattern is not sign k-potent "
                 "for any k\n";
    return kExitNegative;
  }
  const CyclicForm& form = out.cnf->form;
  if (g.json) {
    json blocks = json::array();
    for (const auto& b : form.blocks)
      blocks.push_back(json{{"type", to_string(b.tag)},
                            {"class_sizes", b.class_sizes},
                            {"alpha", std::string(1, to_char(b.alpha))}});
    json sig = json::array();
    for (Sign s : form.signature) sig.push_back(std::string(1, to_char(s)));
    json doc{{"command", "cnf"},
             {"perm", form.perm},
             {"signature", sig},
             {"blocks", blocks},
             {"pattern", pattern_json(out.cnf->pattern)}};
    std::cout << doc.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "blocks:";
  for (const auto& b : form.blocks) std::cout << " " << to_string(b.tag);
  std::cout << "\npermutation (old->new, 1-based):";
  for (int v : form.perm) std::cout << " " << v + 1;
  std::cout << "\nsignature:";
  for (Sign s : form.signature) std::cout << " " << to_char(s);
  std::cout << "\n" << format_pattern(out.cnf->pattern);
  return kExitOk;
}

int emit_generated(const std::vector<SignMatrix>& out, const GlobalFlags& g,
                   const json& extra) {
  if (g.json) {
    json doc = extra;
    doc["count"] = out.size();
    json mats = json::array();
    for (const SignMatrix& m : out) {
      json entry = pattern_json(m);
      const PotenceReport rep = potence_index(m);
      entry["k"] = rep.k ? json(*rep.k) : json(nullptr);
      mats.push_back(entry);
    }
    doc["matrices"] = mats;
    std::cout << doc.dump(2) << "\n";
  } else {
    bool first = true;
    for (const SignMatrix& m : out) {
      if (!first) std::cout << "\n";
      first = false;
      std::cout << format_pattern(m);
    }
  }
  return kExitOk;
}

int cmd_gen_idem(const std::string& diag_str, bool sample, long long nsamples,
                 const std::string& expand_str, const GlobalFlags& g) {
  const DiagSpec spec = parse_diag_spec(diag_str);
  std::vector<SignMatrix> out;
  if (sample) {
    sample_idempotent(spec, nsamples, g.seed,
                      [&](const SignMatrix& m) { out.push_back(m); });
  } else {
    generate_idempotent(spec, [&](const SignMatrix& m) { out.push_back(m); },
                        nullptr, g.jobs);
  }
  if (!expand_str.empty()) {
    std::vector<int> sizes;
    std::stringstream ss{expand_str};
    std::string tok;
    while (std::getline(ss, tok, ',')) sizes.push_back(std::stoi(tok));
    if (sizes.size() != spec.diag.size())
      throw std::runtime_error("--expand needs one class size per diagonal entry");
    for (SignMatrix& m : out) m = expand(m, sizes);
  }
  return emit_generated(out, g,
                        json{{"command", "gen-idem"}, {"diag", diag_str}});
}

int cmd_gen_kpotent(const std::string& blocks_str, const std::string& strategy_str,
                    bool sample, long long nsamples, const GlobalFlags& g) {
  const KDiagSpec spec = parse_block_spec(blocks_str);
  Strategy strategy;
  if (strategy_str == "single") {
    strategy = Strategy::SinglePass;
  } else if (strategy_str == "filtered") {
    strategy = Strategy::Filtered;
  } else if (strategy_str == "auto") {
    strategy = spec.zero_runs() >= 2 ? Strategy::Filtered : Strategy::SinglePass;
  } else {
    throw std::runtime_error("--strategy must be single, filtered or auto");
  }
  std::vector<SignMatrix> out;
  if (sample) {
    sample_kpotent(spec, strategy, nsamples, g.seed,
                   [&](const SignMatrix& m) { out.push_back(m); });
  } else {
    generate_kpotent(spec, strategy, [&](const SignMatrix& m) { out.push_back(m); },
                     nullptr, g.jobs);
  }
  return emit_generated(out, g,
                        json{{"command", "gen-kpotent"},
                             {"blocks", blocks_str},
                             {"k", spec.potence()}});
}

int cmd_allows(const std::string& file, const std::string& realize_path,
               const GlobalFlags& g) {
  const SignMatrix a = load_pattern(file, g.generalized);
  if (!a.is_proper()) {
    std::cerr << "the allow question is posed for proper patterns only\n";
    return kExitError;
  }
  AllowsDecision d;
  try {
    d = allows_kpotence(a);
  } catch (const NotKPotentError& e) {
    std::cerr << e.what() << "\n";
    return kExitError;
  }
  json doc{{"command", "allows"}, {"k", d.k}, {"allows", d.allows}};
  if (!d.allows) {
    json v = json::array();
    for (auto [i, j] : d.ppo.violations) v.push_back(json::array({i + 1, j + 1}));
    doc["ppo_violations"] = v;
  }
  if (d.allows && !realize_path.empty()) {
    const CnfOutcome out = to_cyclic_normal_form(a);
    const RationalMatrix b = build_realization(a, *out.cnf);
    write_output(realize_path, realization_json(b, a, d.k).dump(2) + "\n");
    doc["realization"] = realize_path;
  }
  if (g.json) {
    std::cout << doc.dump(2) << "\n";
  } else if (d.allows) {
    std::cout << "sign " << d.k << "-potent and allows " << d.k << "-potence (PPO)\n";
  } else {
    std::cout << "sign " << d.k << "-potent but does NOT allow " << d.k
              << "-potence: PPO violation";
    for (auto [i, j] : d.ppo.violations)
      std::cout << " (" << i + 1 << "," << j + 1 << ")";
    std::cout << "\n";
  }
  return d.allows ? kExitOk : kExitNegative;
}

int cmd_realize(const std::string& file, const std::string& out_path,
                const GlobalFlags& g) {
  const SignMatrix a = load_pattern(file, g.generalized);
  if (!a.is_proper()) {
    std::cerr << "realizations are built for proper patterns only\n";
    return kExitError;
  }
  AllowsDecision d;
  try {
    d = allows_kpotence(a);
  } catch (const NotKPotentError& e) {
    std::cerr << e.what() << "\n";
    return kExitError;
  }
  if (!d.allows) {
    std::cerr << "no realization exists: PPO violation";
    for (auto [i, j] : d.ppo.violations)
      std::cerr << " (" << i + 1 << "," << j + 1 << ")";
    std::cerr << "\n";
    return kExitNegative;
  }
  const CnfOutcome out = to_cyclic_normal_form(a);
  const RationalMatrix b = build_realization(a, *out.cnf);
  write_output(out_path, realization_json(b, a, d.k).dump(2) + "\n");
  return kExitOk;
}

int cmd_verify(const std::string& file, const std::string& pattern_path,
               const GlobalFlags& g) {
  const json doc = json::parse(read_input(file));
  const int n = doc.at("n").get<int>();
  const int k = doc.at("k").get<int>();
  RationalMatrix b(n);
  const auto& entries = doc.at("entries");
  if (int(entries.size()) != n) throw std::runtime_error("bad entries row count");
  for (int i = 0; i < n; ++i) {
    if (int(entries[i].size()) != n) throw std::runtime_error("bad entries row length");
    for (int j = 0; j < n; ++j)
      b.at(i, j) = rational_from_string(entries[i][j].get<std::string>());
  }
  SignMatrix a;
  if (!pattern_path.empty()) {
    a = load_pattern(pattern_path, g.generalized);
  } else if (doc.contains("pattern")) {
    std::string joined;
    for (const auto& row : doc.at("pattern")) joined += row.get<std::string>() + "\n";
    a = parse_pattern(joined, false);
  } else {
    // Without a target pattern, check against the matrix's own signs.
    a = sign_pattern_of(b);
  }
  const bool ok = verify_realization(b, a, k);
  if (g.json) {
    std::cout << json{{"command", "verify"}, {"k", k}, {"verified", ok}}.dump(2)
              << "\n";
  } else {
    std::cout << (ok ? "verified: B^(k+1) = B exactly and sgn(B) matches\n"
                     : "verification FAILED\n");
  }
  return ok ? kExitOk : kExitNegative;
}

int cmd_enumerate(int n, const std::string& shape, const std::string& diag_str,
                  const std::string& predicate, int k, bool want_census,
                  bool no_prune, const GlobalFlags& g) {
  EnumSpec spec;
  spec.n = n;
  spec.prune_masked_amb = !no_prune;
  if (shape == "full") {
    spec.shape = EnumSpec::Shape::Full;
  } else if (shape == "upper") {
    spec.shape = EnumSpec::Shape::UpperTriangular;
    spec.diag = parse_diag_spec(diag_str).diag;
  } else {
    throw std::runtime_error("--shape must be full or upper");
  }
  if (predicate == "idem") {
    spec.predicate = EnumSpec::Predicate::Idempotent;
  } else if (predicate == "kpotent") {
    spec.predicate = EnumSpec::Predicate::KPotent;
    spec.k = k;
  } else if (predicate == "potent") {
    spec.predicate = EnumSpec::Predicate::PotentAny;
  } else {
    throw std::runtime_error("--predicate must be idem, kpotent or potent");
  }
  if (want_census) {
    const Census c = census(spec, g.jobs);
    if (g.json) {
      std::cout << json{{"command", "enumerate"},
                        {"census", true},
                        {"total", c.total},
                        {"classes", c.classes}}
                       .dump(2)
                << "\n";
    } else {
      std::cout << "total " << c.total << ", equivalence classes " << c.classes
                << "\n";
    }
    return kExitOk;
  }
  std::vector<SignMatrix> out;
  enumerate(spec, [&](const SignMatrix& m) { out.push_back(m); }, g.jobs);
  return emit_generated(out, g, json{{"command", "enumerate"}});
}

int cmd_equiv(const std::string& file_a, const std::string& file_b,
              const GlobalFlags& g) {
  const SignMatrix a = load_pattern(file_a, g.generalized);
  if (file_b.empty()) {
    const SignMatrix c = canonical_form(a);
    if (g.json)
      std::cout << json{{"command", "equiv"}, {"canonical", pattern_json(c)}}.dump(2)
                << "\n";
    else
      std::cout << format_pattern(c);
    return kExitOk;
  }
  const SignMatrix b = load_pattern(file_b, g.generalized);
  const bool eq = a.order() == b.order() && canonical_form(a) == canonical_form(b);
  if (g.json)
    std::cout << json{{"command", "equiv"}, {"equivalent", eq}}.dump(2) << "\n";
  else
    std::cout << (eq ? "equivalent\n" : "not equivalent\n");
  return eq ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "signpat: exact sign pattern analysis (sign k-potence, normal forms, "
      "generators, allow decisions, rational realizations)"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags g;
  app.add_flag("--json", g.json, "machine-readable JSON output");
  app.add_flag("--generalized", g.generalized, "accept '#' entries in inputs");
  app.add_option("--jobs", g.jobs, "parallel workers for enumeration/generation")
      ->default_val(1);
  app.add_option("--kmax", g.kmax,
                 "potence search cap (default 2*lcm(1..n), at most 2520)");
  app.add_option("--seed", g.seed,
                 "seed for --sample; generator is the 64-bit LCG "
                 "x <- 6364136223846793005*x + 1442695040888963407, "
                 "pick = (x >> 33) % choices")
      ->default_val(1);

  std::string file, file_b, out_path, realize_path, pattern_path;
  std::string diag_str, blocks_str, expand_str;
  std::string strategy_str = "auto", shape_str = "full", predicate_str = "idem";
  bool all_flag = false, census_flag = false, no_prune = false;
  long long nsamples = 0;
  int n = 1, k = 1;

  auto* check = app.add_subcommand("check", "decide the sign potence index");
  check->add_option("file", file, "pattern file or -")->required();

  auto* fnf = app.add_subcommand("fnf", "Frobenius normal form");
  fnf->add_option("file", file)->required();

  auto* reduce_cmd = app.add_subcommand("reduce", "coarsest block partition and reduced pattern");
  reduce_cmd->add_option("file", file)->required();

  auto* cnf = app.add_subcommand("cnf", "cyclic normal form");
  cnf->add_option("file", file)->required();

  auto* gen_idem = app.add_subcommand("gen-idem", "generate sign idempotent patterns");
  gen_idem->add_option("--diag", diag_str, "diagonal over 0/+, e.g. +0+")->required();
  auto* gi_all = gen_idem->add_flag("--all", all_flag, "emit every pattern (default)");
  auto* gi_sample = gen_idem->add_option("--sample", nsamples, "emit N seeded samples");
  gi_sample->excludes(gi_all);
  gen_idem->add_option("--expand", expand_str, "class sizes n1,n2,... for expansion");

  auto* gen_kpot = app.add_subcommand("gen-kpotent", "generate sign k-potent patterns");
  gen_kpot->add_option("--blocks", blocks_str, "diagonal blocks, e.g. P2,0,P2,Q1")
      ->required();
  gen_kpot->add_option("--strategy", strategy_str, "single | filtered | auto");
  auto* gk_all = gen_kpot->add_flag("--all", all_flag, "emit every pattern (default)");
  auto* gk_sample = gen_kpot->add_option("--sample", nsamples, "emit N seeded samples");
  gk_sample->excludes(gk_all);

  auto* allows = app.add_subcommand("allows", "decide whether a sign k-potent pattern allows k-potence");
  allows->add_option("file", file)->required();
  allows->add_option("--realize", realize_path, "write a realization JSON here when allowed");

  auto* realize = app.add_subcommand("realize", "build an exact rational realization");
  realize->add_option("file", file)->required();
  realize->add_option("-o,--out", out_path, "output path (default stdout)");

  auto* verify = app.add_subcommand("verify", "re-check a realization file");
  verify->add_option("file", file, "realization JSON")->required();
  verify->add_option("--pattern", pattern_path, "pattern to check against");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "exhaustive search oracle");
  enumerate_cmd->add_option("--n", n, "order")->required();
  enumerate_cmd->add_option("--shape", shape_str, "full | upper");
  enumerate_cmd->add_option("--diag", diag_str, "diagonal for --shape upper");
  enumerate_cmd->add_option("--predicate", predicate_str, "idem | kpotent | potent");
  enumerate_cmd->add_option("--k", k, "exact potence index for --predicate kpotent");
  enumerate_cmd->add_flag("--census", census_flag, "report totals and equivalence classes");
  enumerate_cmd->add_flag("--no-prune", no_prune, "disable the masked-ambiguity early exit");

  auto* equiv = app.add_subcommand("equiv", "canonical form / equivalence of two patterns");
  equiv->add_option("a", file)->required();
  equiv->add_option("b", file_b);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitError;
  }

  try {
    if (*check) return cmd_check(file, g);
    if (*fnf) return cmd_fnf(file, g);
    if (*reduce_cmd) return cmd_reduce(file, g);
    if (*cnf) return cmd_cnf(file, g);
    if (*gen_idem) return cmd_gen_idem(diag_str, bool(*gi_sample), nsamples, expand_str, g);
    if (*gen_kpot) return cmd_gen_kpotent(blocks_str, strategy_str, bool(*gk_sample), nsamples, g);
    if (*allows) return cmd_allows(file, realize_path, g);
    if (*realize) return cmd_realize(file, out_path, g);
    if (*verify) return cmd_verify(file, pattern_path, g);
    if (*enumerate_cmd)
      return cmd_enumerate(n, shape_str, diag_str, predicate_str, k, census_flag, no_prune, g);
    if (*equiv) return cmd_equiv(file, file_b, g);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
