#pragma once
// Command-line front end: argument handling, report assembly and rendering.

#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "uvbraid/analysis.hpp"

namespace uvb::cli {

using json = nlohmann::ordered_json;

struct Check {
  std::string tag;
  bool pass = true;
  json details;  // null when there is nothing to add
  bool show_details = true;
};

struct Report {
  std::string command;
  std::string flavor;
  int n = 0;
  int c = 0;
  std::string family;
  std::string params;
  std::string mode;
  std::uint64_t seed = 0;
  std::string headline;  // one-line summary for text mode
  std::vector<Check> checks;
  std::vector<std::string> notes;

  bool all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
  }
  void add(std::string tag, bool pass, json details = nullptr, bool show = true) {
    checks.push_back({std::move(tag), pass, std::move(details), show});
  }
};

inline json to_json(const Report& r) {
  json j;
  j["command"] = r.command;
  j["group"] = {{"flavor", r.flavor}, {"n", r.n}, {"c", r.c}};
  j["family"] = r.family.empty() ? json(nullptr) : json(r.family);
  j["params"] = r.params.empty() ? json(nullptr) : json(r.params);
  j["mode"] = r.mode;
  j["seed"] = r.seed;
  json checks = json::array();
  for (const auto& c : r.checks) {
    json e;
    e["tag"] = c.tag;
    e["status"] = c.pass ? "pass" : "fail";
    if (!c.details.is_null()) e["details"] = c.details;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

/// Stable line-oriented rendering.
inline std::string to_text(const Report& r) {
  std::ostringstream os;
  if (!r.headline.empty()) os << r.headline << "\n";
  if (!r.flavor.empty()) os << "group: " << r.flavor << "(n=" << r.n << ",c=" << r.c << ")\n";
  if (!r.family.empty()) os << "family: " << r.family << "\n";
  if (!r.params.empty()) os << "params: " << r.params << "\n";
  os << "mode: " << r.mode << "\n";
  std::size_t passed = 0;
  for (const auto& c : r.checks) {
    if (c.pass) ++passed;
    os << (c.pass ? "[pass] " : "[FAIL] ") << c.tag;
    if (!c.details.is_null() && (c.show_details || !c.pass)) os << "  " << c.details.dump();
    os << "\n";
  }
  for (const auto& note : r.notes) os << "note: " << note << "\n";
  os << "result: " << passed << "/" << r.checks.size() << " checks pass\n";
  return os.str();
}

inline void emit_report(const Report& r, bool as_json, std::ostream& out) {
  if (as_json) {
    out << to_json(r).dump(2) << "\n";
  } else {
    out << to_text(r);
  }
}

inline json render(const QVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

inline json render(const std::vector<std::vector<std::string>>& rows) { return json(rows); }

// ---------------------------------------------------------------------------
// Options
// ---------------------------------------------------------------------------

struct Options {
  std::string verb;
  std::string thm;
  std::string group;
  int n = 3;
  std::optional<int> c;
  std::optional<int> k;
  std::string family;
  std::string params;
  bool symbolic = false;
  bool sampled = false;
  std::optional<long> mod;
  std::string word;
  std::string map = "phi";
  int t0 = 1;
  bool json = false;
  std::uint64_t seed = 1;
  int block_size = 2;
  std::string relations;
  std::string subsystem = "full";
};

inline std::string quote_arg(const std::string& a) {
  if (!a.empty() && a.find_first_of(" \t\"'") == std::string::npos) return a;
  std::string out = "\"";
  for (char ch : a) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

namespace detail {

inline std::optional<Family> family_of(const Options& o) {
  if (o.family.empty()) return std::nullopt;
  return parse_family(o.family);
}

inline GroupSpec spec_of(const Options& o, std::optional<Family> fam = std::nullopt) {
  std::string g = o.group;
  if (g.empty()) {
    if (fam && is_omega(*fam)) {
      g = "uw";
    } else if (fam && (*fam == Family::Burau || *fam == Family::FRep)) {
      g = "vb";
    } else {
      g = "uv";
    }
  }
  std::optional<int> ck = o.c;
  if (o.k) {
    if (ck && *ck != *o.k) throw std::invalid_argument("--c and --k disagree");
    ck = o.k;
  }
  bool fixed = g == "vb" || g == "wb" || g == "vt" || g == "wt" || g == "vsg" || g == "wsg";
  if (!ck && !fixed) {
    ck = (fam && is_epsilon(*fam)) ? 2 : 1;
  }
  return make_spec(g, o.n, ck);
}

inline void fill_header(Report& r, const Options& o, const GroupSpec& spec) {
  r.flavor = spec.flavor;
  r.n = spec.n;
  r.c = spec.c;
  r.family = o.family;
  r.params = o.params;
  r.seed = o.seed;
}

inline json relation_details(const RelationOutcome& out) {
  json d = {{"lhs", out.lhs}, {"rhs", out.rhs}};
  if (!out.pass) d["residue"] = render(out.residue);
  return d;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Verbs
// ---------------------------------------------------------------------------

inline Report cmd_verify(const Options& o) {
  if (o.symbolic && o.sampled) throw std::invalid_argument("--symbolic and --sampled are exclusive");
  auto fam = detail::family_of(o);
  if (!fam) throw std::invalid_argument("verify requires --family");
  GroupSpec spec = detail::spec_of(o, fam);
  LocalRep rep = build_local_rep(*fam, spec, parse_assignment(o.params));
  VerifyMode mode = o.sampled ? VerifyMode::Sampled : VerifyMode::Symbolic;
  std::vector<Relation> rels = o.relations.empty() ? relations(spec) : [&] {
    std::vector<std::string> tags;
    std::stringstream ss(o.relations);
    for (std::string t; std::getline(ss, t, ';');)
      if (!t.empty()) tags.push_back(t);
    return select_relations(spec, tags);
  }();
  VerificationReport vr = verify_relations(rep, spec, rels, mode, o.seed);
  Report r;
  detail::fill_header(r, o, spec);
  r.mode = mode_name(mode);
  for (const auto& out : vr.outcomes) r.add(out.tag, out.pass, detail::relation_details(out), false);
  if (mode == VerifyMode::Sampled) {
    r.notes.push_back("sampled mode is advisory; symbolic mode is authoritative");
    for (const auto& pt : vr.sample_points) {
      std::string s;
      for (const auto& [name, x] : pt) s += (s.empty() ? "" : ",") + name + "=" + x.to_string();
      r.notes.push_back("sample point " + s);
    }
  }
  r.headline = std::to_string(vr.pass_count()) + "/" + std::to_string(vr.outcomes.size()) + " relations pass";
  return r;
}

inline Report cmd_constraints(const Options& o) {
  GroupSpec spec = detail::spec_of(o);
  if (o.block_size != 2 && o.block_size != 3) throw std::invalid_argument("--block-size must be 2 or 3");
  ConstraintSystem sys;
  if (o.relations.empty()) {
    ConstraintPreset preset = o.block_size == 3 ? ConstraintPreset::ThreeLocalUV
                              : spec.welded     ? ConstraintPreset::TwoLocalWelded
                                                : ConstraintPreset::TwoLocalUV;
    sys = generate_constraints(preset);
    auto [pspec, tags] = constraint_preset_relations(preset);
    spec = pspec;
  } else {
    std::vector<std::string> tags;
    std::stringstream ss(o.relations);
    for (std::string t; std::getline(ss, t, ';');)
      if (!t.empty()) tags.push_back(t);
    sys = generate_constraints(o.block_size, spec, tags);
  }
  Report r;
  detail::fill_header(r, o, spec);
  r.mode = "symbolic";
  json eqs = json::array();
  for (std::size_t i = 0; i < sys.equations.size(); ++i)
    eqs.push_back({{"equation", sys.equations[i].to_string() + " = 0"}, {"provenance", sys.provenance[i]}});
  r.add("constraint-system", true, {{"unknowns", sys.unknowns}, {"count", sys.equations.size()}, {"equations", eqs}});
  r.headline = std::to_string(sys.equations.size()) + " equations in " + std::to_string(sys.unknowns.size()) +
               " unknowns";
  return r;
}

inline Report cmd_enumerate(const Options& o) {
  if (!o.mod) throw std::invalid_argument("enumerate requires --mod <prime>");
  if (o.block_size != 2) throw std::invalid_argument("finite-field scans are offered for --block-size 2 only");
  const long p = *o.mod;
  ConstraintSystem full = generate_constraints(ConstraintPreset::TwoLocalUV);
  MultiPoly det_r = MultiPoly::variable("r1") * MultiPoly::variable("r4") -
                    MultiPoly::variable("r2") * MultiPoly::variable("r3");
  MultiPoly det_s = MultiPoly::variable("s1_1") * MultiPoly::variable("s4_1") -
                    MultiPoly::variable("s2_1") * MultiPoly::variable("s3_1");
  Report r;
  detail::fill_header(r, o, make_spec("uv", 3, 1));
  r.mode = "mod " + std::to_string(p);
  ConstraintSystem rho = full.restricted_to({"r1", "r2", "r3", "r4"});
  ModPSolutions rs = enumerate_solutions_mod_p(rho, p, {det_r}, classify_two_local_rho);
  auto bucket = [](const ModPSolutions& s, const std::string& b) {
    auto it = s.buckets.find(b);
    return it == s.buckets.end() ? std::size_t{0} : it->second.size();
  };
  json rho_counts = {{"solutions", rs.solutions.size()},
                     {"identity", bucket(rs, "identity")},
                     {"antidiagonal", bucket(rs, "antidiagonal")},
                     {"other", bucket(rs, "other")}};
  r.add("rho-subsystem: p solutions (identity + p-1 antidiagonal)",
        rs.solutions.size() == static_cast<std::size_t>(p) && bucket(rs, "identity") == 1 &&
            bucket(rs, "antidiagonal") == static_cast<std::size_t>(p - 1),
        rho_counts);
  if (o.subsystem == "full") {
    ModPSolutions fs = enumerate_solutions_mod_p(full, p, {det_r, det_s}, classify_two_local_rho);
    std::size_t anti = bucket(fs, "antidiagonal");
    std::size_t expected = static_cast<std::size_t>((p - 1) * gl2_order(p));
    r.add("full system: sigma unconstrained on the antidiagonal bucket", anti == expected,
          {{"antidiagonal", anti}, {"expected", expected}, {"gl2_order", gl2_order(p)}});
    r.add("full system: identity rho forces identity sigma", bucket(fs, "identity") == 1,
          {{"identity", bucket(fs, "identity")}});
    r.add("full system: no other rho blocks", bucket(fs, "other") == 0, {{"other", bucket(fs, "other")}});
  } else if (o.subsystem != "rho") {
    throw std::invalid_argument("--subsystem must be rho or full");
  }
  r.headline = std::to_string(rs.solutions.size()) + " rho solutions mod " + std::to_string(p);
  return r;
}

inline Report cmd_irreducibility(const Options& o) {
  auto fam = detail::family_of(o);
  if (!fam) throw std::invalid_argument("irreducibility requires --family");
  GroupSpec spec = detail::spec_of(o, fam);
  uvb::detail::check_compatible(*fam, spec);
  Assignment a = parse_assignment(o.params);
  IrreducibilityAnalysis res = analyze_irreducibility(*fam, spec, a);
  Report r;
  detail::fill_header(r, o, spec);
  r.mode = "exact";
  json crit = {{"verdict", res.verdict.reducible ? "reducible" : "irreducible"}, {"reason", res.verdict.reason}};
  if (res.verdict.witness) {
    crit["witness"] = render(*res.verdict.witness);
    crit["side"] = side_name(res.verdict.side);
  }
  r.add("criterion", true, crit);
  r.add("burnside-oracle agrees", res.agrees(),
        {{"algebra_dim", res.algebra_dim}, {"full_dim", res.full_dim}});
  if (res.verdict.reducible) r.add("witness invariant", res.witness_invariant);
  r.notes = res.verdict.notes;
  r.headline = res.verdict.to_string();
  return r;
}

inline Report cmd_homomorphism(const Options& o) {
  GroupSpec spec = detail::spec_of(o);
  Word w = parse_word(o.word, spec);
  Report r;
  detail::fill_header(r, o, spec);
  r.mode = o.map;
  if (o.map == "phi") {
    CountedPerm img = phi(w, o.t0, spec);
    r.headline = img.to_string();
    r.add("phi(t0=" + std::to_string(o.t0) + ")", true, {{"word", w.to_string()}, {"image", r.headline}});
  } else if (o.map == "piK" || o.map == "piP") {
    Permutation img = perm_image(w, o.map == "piK" ? PermMap::PiK : PermMap::PiP, spec.n);
    r.headline = img.to_string();
    r.add(o.map, true, {{"word", w.to_string()}, {"image", r.headline}});
  } else if (o.map == "abelianize") {
    r.headline = abelianize(w, spec).to_string();
    r.add("abelianize", true, {{"word", w.to_string()}, {"image", r.headline}});
  } else {
    throw std::invalid_argument("--map must be piK, piP, phi or abelianize");
  }
  return r;
}

inline Report cmd_word(const Options& o) {
  GroupSpec spec = detail::spec_of(o);
  Word w = parse_word(o.word, spec);
  Report r;
  detail::fill_header(r, o, spec);
  r.mode = "exact";
  Word red = free_reduce(w, spec);
  r.headline = red.empty() ? "(empty word)" : red.to_string();
  json d = {{"parsed", w.to_string()},
            {"free_reduced", red.to_string()},
            {"length", red.size()},
            {"piK", perm_image(w, PermMap::PiK, spec.n).to_string()},
            {"piP", perm_image(w, PermMap::PiP, spec.n).to_string()},
            {"abelianization", abelianize(w, spec).to_string()}};
  if (spec.n == 2 && !spec.singular) d["normal_form"] = normal_form_n2(w, spec).to_string();
  r.add("word", true, d);
  if (spec.n > 2) r.notes.push_back("no normal form for n >= 3; equality is only semi-decided");
  return r;
}

// ---------------------------------------------------------------------------
// Theorem suites
// ---------------------------------------------------------------------------

inline const std::vector<std::pair<std::string, std::string>>& theorem_suites() {
  static const std::vector<std::pair<std::string, std::string>> ids = {
      {"two-local", "homogeneous 2-local family satisfies UV_n(c) and is equivalent to the primed form"},
      {"two-local-equations", "2-local constraint system and its finite-field uniqueness scan"},
      {"two-local-irreducibility", "closed-form reducibility criterion agrees with the Burnside oracle"},
      {"three-local", "3-local families satisfy UV_n(2) and carry invariant (co)vectors"},
      {"forbidden", "phi separates both sides of the forbidden moves"},
      {"welded", "welded 2-local families, equations, equivalences and criteria"},
      {"abelianization", "UW_n(c) abelianizes to Z^c + Z_2"},
      {"quotient-factoring", "which projections to S_n factor through UW_n(c)"},
      {"classical", "Burau and F-representation satisfy the braid quotient"},
  };
  return ids;
}

inline Report cmd_verify_thm(const Options& o) {
  Report r;
  r.mode = "symbolic";
  r.seed = o.seed;
  const std::string& id = o.thm;
  auto verify_all = [&](Family f, const GroupSpec& spec) {
    VerificationReport vr = verify_relations(build_local_rep(f, spec), spec, VerifyMode::Symbolic);
    json fails = json::array();
    for (const auto& out : vr.outcomes)
      if (!out.pass) fails.push_back(out.tag);
    r.add(family_name(f) + " over " + spec.summary(), vr.all_pass(),
          {{"relations", vr.outcomes.size()}, {"failed", fails}});
  };
  if (id == "two-local") {
    for (int n : {3, 4, 5})
      for (int c : {1, 2}) verify_all(Family::Upsilon, make_spec("uv", n, c));
    for (int c : {1, 2}) {
      GroupSpec spec = make_spec("uv", 4, c);
      auto eq = conjugation_equivalence(build_local_rep(Family::Upsilon, spec),
                                        build_local_rep(Family::UpsilonPrime, spec, upsilon_conjugated_binding(c)));
      r.add("upsilon ~ upsilon-prime over " + spec.summary(), eq.found, {{"q", eq.q_label}});
    }
  } else if (id == "two-local-equations") {
    ConstraintSystem sys = generate_constraints(ConstraintPreset::TwoLocalUV);
    r.add("15 equations in 8 unknowns", sys.equations.size() == 15 && sys.unknowns.size() == 8,
          {{"equations", sys.equations.size()}, {"unknowns", sys.unknowns.size()}});
    bool solved = std::all_of(sys.equations.begin(), sys.equations.end(), [](const MultiPoly& e) {
      return RatFunc(e).substitute(classified_two_local_rho()).is_zero();
    });
    r.add("r1 = r4 = 0, r3 = 1/r2 solves every equation", solved);
    for (long p : {5L, 7L}) {
      Options sub = o;
      sub.mod = p;
      sub.block_size = 2;
      Report e = cmd_enumerate(sub);
      for (auto& c : e.checks) r.add("mod " + std::to_string(p) + ": " + c.tag, c.pass, c.details);
    }
  } else if (id == "two-local-irreducibility" || id == "welded") {
    Sampler rng(o.seed);
    std::vector<std::pair<Family, GroupSpec>> cases;
    if (id == "welded") {
      for (int n : {3, 4})
        for (int c : {1, 2})
          for (Family f : {Family::Omega1, Family::Omega2, Family::Omega3}) verify_all(f, make_spec("uw", n, c));
      ConstraintSystem w = generate_constraints(ConstraintPreset::TwoLocalWelded);
      r.add("welded relation adds 3 equations", w.equations.size() == 3, {{"equations", w.equations.size()}});
      for (auto [f, fp] : {std::pair{Family::Omega1, Family::Omega1p}, std::pair{Family::Omega2, Family::Omega2p},
                           std::pair{Family::Omega3, Family::Omega3p}}) {
        GroupSpec spec = make_spec("uw", 4, 2);
        auto eq = conjugation_equivalence(build_local_rep(f, spec), build_local_rep(fp, spec));
        r.add(family_name(f) + " ~ " + family_name(fp), eq.found, {{"q", eq.q_label}});
      }
      for (Family f : {Family::Omega1p, Family::Omega2p, Family::Omega3p}) cases.push_back({f, make_spec("uw", 3, 1)});
    } else {
      for (int n : {3, 4})
        for (int c : {1, 2}) cases.push_back({Family::UpsilonPrime, make_spec("uv", n, c)});
    }
    for (const auto& [f, spec] : cases) {
      std::size_t agree = 0, total = 0;
      bool witnesses = true;
      for (bool on : {true, false}) {
        for (int k = 0; k < 10; ++k) {
          IrreducibilityAnalysis res = analyze_irreducibility(f, spec, sample_criterion_parameters(f, spec, rng, on));
          ++total;
          if (res.agrees()) ++agree;
          if (res.verdict.reducible && !res.witness_invariant) witnesses = false;
        }
      }
      r.add("criterion vs oracle: " + family_name(f) + " over " + spec.summary(), agree == total && witnesses,
            {{"agree", agree}, {"samples", total}});
    }
  } else if (id == "three-local") {
    for (int n : {4, 5})
      for (Family f : {Family::Epsilon1, Family::Epsilon2, Family::Epsilon3, Family::Epsilon4})
        verify_all(f, make_spec("uv", n, 2));
    Sampler rng(o.seed);
    GroupSpec spec = make_spec("uv", 4, 2);
    for (Family f : {Family::Epsilon1, Family::Epsilon2, Family::Epsilon3, Family::Epsilon4}) {
      Assignment a = sample_criterion_parameters(f, spec, rng, true);
      if (f == Family::Epsilon3) a["r6"] = GaussianRational(2);
      IrreducibilityAnalysis res = analyze_irreducibility(f, spec, a);
      r.add(family_name(f) + " witness invariant, algebra proper", res.witness_invariant && !res.oracle_irreducible(),
            {{"witness", render(*res.verdict.witness)}, {"side", side_name(res.verdict.side)},
             {"algebra_dim", res.algebra_dim}});
    }
    for (const auto& reading : epsilon4_covector_readings(4)) {
      r.notes.push_back("epsilon4 covector " + reading.label + (reading.invariant ? " is" : " is not") +
                        " left-invariant");
    }
  } else if (id == "forbidden") {
    for (int n : {3, 4, 5}) {
      GroupSpec spec = make_spec("uv", n, 2);
      for (int i = 1; i <= n - 2; ++i) {
        for (int t = 1; t <= 2; ++t) {
          for (const Relation& rel : {welded_relation(i, t), welded_relation_mirror(i, t)}) {
            for (int t0 = 1; t0 <= 2; ++t0) {
              FactorResult fr = factor_check(rel, HomMap::Phi, spec, t0);
              r.add(rel.tag + " phi(t0=" + std::to_string(t0) + ") n=" + std::to_string(n), !fr.kills,
                    {{"lhs", fr.lhs.to_string()}, {"rhs", fr.rhs.to_string()}}, false);
            }
          }
        }
      }
    }
  } else if (id == "abelianization") {
    for (int n : {3, 4, 5})
      for (int c : {1, 2, 3}) {
        GroupSpec spec = make_spec("uw", n, c);
        bool ok = true;
        for (const auto& rel : relations(spec)) ok = ok && abelianize(rel.relator(), spec).is_zero();
        r.add("relators of " + spec.summary() + " abelianize to zero", ok);
      }
  } else if (id == "quotient-factoring") {
    for (int n : {3, 4, 5}) {
      GroupSpec spec = make_spec("uw", n, 1);
      for (HomMap m : {HomMap::PiP, HomMap::PiK}) {
        FactorResult fr = factor_check(welded_relation(1, 1), m, spec);
        r.add(hom_map_name(m) + " kills WR1[i=1,t=1] n=" + std::to_string(n), fr.kills,
              {{"lhs", fr.lhs.perm.to_string()}, {"rhs", fr.rhs.perm.to_string()}});
      }
    }
    r.notes.push_back("pi^K sends sigma to 1, so the welded relation maps to s_i = s_{i+1}; pi^P maps it to the "
                      "Coxeter braid relation");
  } else if (id == "classical") {
    for (int n : {3, 4}) {
      verify_all(Family::Burau, make_spec("vb", n));
      verify_all(Family::FRep, make_spec("vb", n));
    }
  } else {
    std::string known;
    for (const auto& [k, d] : theorem_suites()) known += (known.empty() ? "" : ", ") + k;
    throw std::invalid_argument("unknown theorem suite '" + id + "' (known: " + known + ")");
  }
  r.headline = id + ": " + std::to_string(std::count_if(r.checks.begin(), r.checks.end(),
                                                        [](const Check& c) { return c.pass; })) +
               "/" + std::to_string(r.checks.size()) + " checks pass";
  return r;
}

// ---------------------------------------------------------------------------
// Entry point
// ---------------------------------------------------------------------------

/// Runs one invocation. Exit code: 0 all checks pass, 1 some check failed,
/// 2 usage or domain error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verification laboratory for universal virtual and welded braid groups", "uvbraid"};
  app.set_help_all_flag("--help-all");
  Options o;
  std::vector<std::string> positional;
  app.add_option("verb", positional,
                 "verify | constraints | enumerate | irreducibility | homomorphism | word | verify-thm <suite>")
      ->required();
  app.add_option("--group", o.group, "uv|uw|vb|wb|vt|wt|vsg|wsg|mvb|mwb");
  app.add_option("--n", o.n, "number of strands");
  app.add_option("--c", o.c, "number of crossing types");
  app.add_option("--k", o.k, "number of crossing families for mvb/mwb");
  app.add_option("--family", o.family, "representation family");
  app.add_option("--params", o.params, "parameter assignment name=value,...");
  app.add_flag("--symbolic", o.symbolic, "full symbolic expansion (default)");
  app.add_flag("--sampled", o.sampled, "advisory random-point evaluation");
  app.add_option("--mod", o.mod, "odd prime for finite-field scans");
  app.add_option("--word", o.word, "word, e.g. \"r1 s2,1 s1,1^-1\"");
  app.add_option("--map", o.map, "piK|piP|phi|abelianize");
  app.add_option("--t0", o.t0, "distinguished crossing type for phi");
  app.add_flag("--json", o.json, "emit JSON");
  app.add_option("--seed", o.seed, "seed for all sampling");
  app.add_option("--block-size", o.block_size, "block size k for constraint generation");
  app.add_option("--relations", o.relations, "';'-separated relation tags");
  app.add_option("--subsystem", o.subsystem, "rho|full for finite-field scans");

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }
  o.verb = positional.front();
  std::string command = "uvbraid";
  for (const auto& a : args) command += " " + quote_arg(a);
  try {
    if (o.verb == "verify-thm") {
      if (positional.size() != 2) throw std::invalid_argument("verify-thm takes exactly one suite id");
      o.thm = positional[1];
    } else if (positional.size() != 1) {
      throw std::invalid_argument("unexpected extra argument '" + positional[1] + "'");
    }
    Report r;
    if (o.verb == "verify") {
      r = cmd_verify(o);
    } else if (o.verb == "constraints") {
      r = cmd_constraints(o);
    } else if (o.verb == "enumerate") {
      r = cmd_enumerate(o);
    } else if (o.verb == "irreducibility") {
      r = cmd_irreducibility(o);
    } else if (o.verb == "homomorphism") {
      r = cmd_homomorphism(o);
    } else if (o.verb == "word") {
      r = cmd_word(o);
    } else if (o.verb == "verify-thm") {
      r = cmd_verify_thm(o);
    } else {
      throw std::invalid_argument("unknown verb '" + o.verb + "'");
    }
    r.command = command;
    emit_report(r, o.json, out);
    return r.all_pass() ? 0 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, out, err);
}

}  // namespace uvb::cli
