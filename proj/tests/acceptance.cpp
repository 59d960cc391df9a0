// Acceptance harness: one PASS/FAIL line per criterion.

#include <chrono>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "uvbraid/uvbraid.hpp"

using namespace uvb;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

int g_failures = 0;

void report(int id, const std::string& name, Outcome& o, double secs) {
  std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << name << " (" << std::fixed
            << std::setprecision(2) << secs << " s)" << o.detail.str() << "\n";
  std::cout.unsetf(std::ios::fixed);
  if (!o.pass) ++g_failures;
}

QVector geometric(const GaussianRational& q, std::size_t len) {
  QVector out;
  GaussianRational x(1);
  for (std::size_t a = 0; a < len; ++a, x = x * q) out.push_back(x);
  return out;
}

QVector unit(std::size_t len, std::size_t at) {
  QVector out(len, GaussianRational(0));
  out[at] = GaussianRational(1);
  return out;
}

Word random_word(std::mt19937_64& rng, const GroupSpec& spec, std::size_t len) {
  Word w;
  for (std::size_t k = 0; k < len; ++k) {
    int i = 1 + static_cast<int>(rng() % static_cast<unsigned>(spec.n - 1));
    int exp = rng() % 2 ? 1 : -1;
    if (rng() % 2) {
      w.letters.push_back({Generator::rho(i), exp});
    } else {
      w.letters.push_back({Generator::sigma(i, 1 + static_cast<int>(rng() % static_cast<unsigned>(spec.c))), exp});
    }
  }
  return w;
}

void criterion1() {
  auto t0 = Clock::now();
  Outcome o;
  std::size_t total = 0;
  for (int n : {3, 4, 5, 6}) {
    for (int c : {1, 2, 3}) {
      GroupSpec spec = make_spec("uv", n, c);
      VerificationReport vr =
          verify_relations(build_local_rep(Family::Upsilon, spec), spec, VerifyMode::Symbolic);
      total += vr.outcomes.size();
      o.require(vr.all_pass(), spec.summary());
    }
  }
  double secs = seconds_since(t0);
  o.detail << " " << total << " relations over 12 groups";
  o.require(secs < 60, "runtime budget 60 s");
  report(1, "upsilon satisfies uv(n,c), n in 3..6, c in 1..3", o, secs);
}

void criterion2() {
  auto t0 = Clock::now();
  Outcome o;
  ConstraintSystem two = generate_constraints(ConstraintPreset::TwoLocalUV);
  o.require(two.equations.size() == 15 && two.unknowns.size() == 8, "15 equations in 8 unknowns");
  o.require(oracle::matches_up_to_scalar(two.equations, oracle::two_local_oracle()), "2-local equations match");
  ConstraintSystem welded = generate_constraints(ConstraintPreset::TwoLocalWelded);
  o.require(oracle::matches_up_to_scalar(welded.equations, oracle::welded_oracle()), "welded equations match");
  o.detail << " 2-local: " << two.equations.size() << " eqs, welded: " << welded.equations.size() << " eqs";
  report(2, "constraint regeneration", o, seconds_since(t0));
}

void criterion3() {
  auto t0 = Clock::now();
  Outcome o;
  ConstraintSystem full = generate_constraints(ConstraintPreset::TwoLocalUV);
  ConstraintSystem rho = full.restricted_to({"r1", "r2", "r3", "r4"});
  MultiPoly det_r = oracle::v("r1") * oracle::v("r4") - oracle::v("r2") * oracle::v("r3");
  MultiPoly det_s = oracle::v("s1_1") * oracle::v("s4_1") - oracle::v("s2_1") * oracle::v("s3_1");
  for (long p : {5L, 7L, 11L}) {
    auto tp = Clock::now();
    ModPSolutions rs = enumerate_solutions_mod_p(rho, p, {det_r}, classify_two_local_rho);
    std::size_t anti = rs.buckets.count("antidiagonal") ? rs.buckets.at("antidiagonal").size() : 0;
    std::size_t ident = rs.buckets.count("identity") ? rs.buckets.at("identity").size() : 0;
    std::string tag = "p=" + std::to_string(p);
    o.require(rs.solutions.size() == static_cast<std::size_t>(p), tag + " rho solution count");
    o.require(ident == 1 && anti == static_cast<std::size_t>(p - 1), tag + " identity + p-1 antidiagonal");
    for (std::size_t idx : rs.buckets.count("antidiagonal") ? rs.buckets.at("antidiagonal") : std::vector<std::size_t>{}) {
      o.require((rs.value(idx, "r2") * rs.value(idx, "r3")) % p == 1, tag + " r2 r3 = 1");
    }
    ModPSolutions fs = enumerate_solutions_mod_p(full, p, {det_r, det_s}, classify_two_local_rho);
    std::size_t fanti = fs.buckets.count("antidiagonal") ? fs.buckets.at("antidiagonal").size() : 0;
    o.require(fanti == static_cast<std::size_t>((p - 1) * gl2_order(p)), tag + " sigma free on antidiagonal");
    double secs = seconds_since(tp);
    o.require(secs < 30, tag + " runtime budget 30 s");
    o.detail << " " << tag << ": " << rs.solutions.size() << " rho, " << fanti << " antidiagonal full";
  }
  report(3, "finite-field uniqueness for p in {5,7,11}", o, seconds_since(t0));
}

void criterion4() {
  auto t0 = Clock::now();
  Outcome o;
  Sampler rng(20261019);
  std::vector<std::pair<Family, GroupSpec>> cases;
  for (int n : {3, 4})
    for (int c : {1, 2}) cases.push_back({Family::UpsilonPrime, make_spec("uv", n, c)});
  for (Family f : {Family::Omega1p, Family::Omega2p, Family::Omega3p}) cases.push_back({f, make_spec("uw", 3, 1)});
  std::size_t samples = 0, reducible = 0;
  for (const auto& [f, spec] : cases) {
    for (bool on : {true, false}) {
      for (int k = 0; k < 50; ++k) {
        Assignment a = sample_criterion_parameters(f, spec, rng, on);
        IrreducibilityAnalysis res = analyze_irreducibility(f, spec, a);
        ++samples;
        o.require(res.agrees(), family_name(f) + " " + spec.summary() + " disagreement");
        o.require(res.verdict.reducible == on, family_name(f) + " sample landed on the wrong side of the locus");
        if (res.verdict.reducible) {
          ++reducible;
          o.require(res.witness_invariant, family_name(f) + " witness not invariant");
        }
      }
    }
  }
  double secs = seconds_since(t0);
  o.require(secs < 300, "runtime budget 5 min");
  o.detail << " " << samples << " samples, " << reducible << " reducible";
  report(4, "irreducibility criterion agrees with the Burnside oracle", o, secs);
}

void criterion5() {
  auto t0 = Clock::now();
  Outcome o;
  const std::vector<Family> eps = {Family::Epsilon1, Family::Epsilon2, Family::Epsilon3, Family::Epsilon4};
  for (int n : {4, 5}) {
    GroupSpec spec = make_spec("uv", n, 2);
    for (Family f : eps) {
      VerificationReport vr = verify_relations(build_local_rep(f, spec), spec, VerifyMode::Symbolic);
      o.require(vr.all_pass(), family_name(f) + " " + spec.summary());
    }
  }
  Sampler rng(5);
  for (int n : {4, 5}) {
    GroupSpec spec = make_spec("uv", n, 2);
    const std::size_t m = static_cast<std::size_t>(n + 1);
    for (Family f : eps) {
      LocalRep rep = symbolic_local_rep(f, spec);
      Assignment a = sample_point(rep, rng, 9);
      if (f == Family::Epsilon3) {
        a["r6"] = GaussianRational(2);
        while (violated_condition(rep, a)) {
          a = sample_point(rep, rng, 9);
          a["r6"] = GaussianRational(2);
        }
      }
      std::vector<QMatrix> mats = specialized_generators(f, spec, a);
      std::string tag = family_name(f) + " n=" + std::to_string(n);
      if (f == Family::Epsilon1) o.require(invariant_check(mats, unit(m, 0), Side::Column), tag + " witness");
      if (f == Family::Epsilon2) o.require(invariant_check(mats, unit(m, m - 1), Side::Column), tag + " witness");
      if (f == Family::Epsilon3)
        o.require(invariant_check(mats, geometric(GaussianRational::fraction(1, 2), m), Side::Column),
                  tag + " witness");
      o.require(burnside_dim(mats) < m * m, tag + " algebra is proper");
    }
    for (const auto& reading : epsilon4_covector_readings(n)) {
      o.detail << " n=" << n << " eps4 " << reading.label << (reading.invariant ? " holds" : " fails") << ";";
    }
  }
  report(5, "3-local families, witnesses, proper algebras", o, seconds_since(t0));
}

void criterion6() {
  auto t0 = Clock::now();
  Outcome o;
  for (int n : {3, 4, 5})
    for (int c : {1, 2}) {
      GroupSpec spec = make_spec("uw", n, c);
      for (Family f : {Family::Omega1, Family::Omega2, Family::Omega3}) {
        VerificationReport vr = verify_relations(build_local_rep(f, spec), spec, VerifyMode::Symbolic);
        o.require(vr.all_pass(), family_name(f) + " " + spec.summary());
      }
    }
  for (int c : {1, 2}) {
    GroupSpec uv = make_spec("uv", 4, c);
    auto eq = conjugation_equivalence(build_local_rep(Family::Upsilon, uv),
                                      build_local_rep(Family::UpsilonPrime, uv, upsilon_conjugated_binding(c)));
    o.require(eq.found && eq.witness.has_value(), "upsilon ~ upsilon-prime c=" + std::to_string(c));
    GroupSpec uw = make_spec("uw", 4, c);
    for (auto [f, fp] : {std::pair{Family::Omega1, Family::Omega1p}, std::pair{Family::Omega2, Family::Omega2p},
                         std::pair{Family::Omega3, Family::Omega3p}}) {
      auto e = conjugation_equivalence(build_local_rep(f, uw), build_local_rep(fp, uw));
      o.require(e.found && e.witness.has_value(), family_name(f) + " ~ " + family_name(fp));
    }
  }
  report(6, "welded families and diagonal equivalences", o, seconds_since(t0));
}

void criterion7() {
  auto t0 = Clock::now();
  Outcome o;
  std::size_t phi_checks = 0;
  for (int n : {3, 4, 5}) {
    for (int c : {1, 2}) {
      GroupSpec spec = make_spec("uv", n, c);
      for (int i = 1; i <= n - 2; ++i) {
        Permutation si = Permutation::transposition(n, i), sj = Permutation::transposition(n, i + 1);
        for (int t = 1; t <= c; ++t) {
          for (int t0v = 1; t0v <= c; ++t0v) {
            long count = t == t0v ? 2 : 0;
            FactorResult f1 = factor_check(welded_relation(i, t), HomMap::Phi, spec, t0v);
            FactorResult f2 = factor_check(welded_relation_mirror(i, t), HomMap::Phi, spec, t0v);
            o.require(!f1.kills && f1.lhs == CountedPerm{count, si} && f1.rhs == CountedPerm{count, sj},
                      "phi images WR1 n=" + std::to_string(n));
            o.require(!f2.kills && f2.lhs == CountedPerm{count, sj} && f2.rhs == CountedPerm{count, si},
                      "phi images WR2 n=" + std::to_string(n));
            phi_checks += 2;
          }
        }
      }
    }
  }
  bool pik_wr1 = true;
  for (int n : {3, 4, 5}) {
    GroupSpec spec = make_spec("uw", n, 1);
    for (int i = 1; i <= n - 2; ++i) {
      FactorResult fr = factor_check(welded_relation(i, 1), HomMap::PiK, spec);
      if (!fr.kills) {
        pik_wr1 = false;
        if (i == 1 && n == 3)
          o.detail << " piK(WR1) lhs " << fr.lhs.perm.to_string() << " vs rhs " << fr.rhs.perm.to_string() << ";";
      }
    }
  }
  o.require(pik_wr1, "piK kills the WR1 relator");
  std::size_t pip_fail = 0, pik_fail = 0, rels = 0;
  for (const auto& name : spec_names()) {
    bool fixed = name != "uv" && name != "uw" && name != "mvb" && name != "mwb";
    for (int n : {3, 4, 5}) {
      for (int c : {1, 2}) {
        if (fixed && c > 1) continue;
        GroupSpec spec = fixed ? make_spec(name, n) : make_spec(name, n, c);
        for (const auto& rel : relations(spec)) {
          ++rels;
          if (!factor_check(rel, HomMap::PiP, spec).kills) ++pip_fail;
          if (!factor_check(rel, HomMap::PiK, spec).kills) {
            if (pik_fail == 0) o.detail << " first piK survivor: " << rel.tag << " in " << spec.summary() << ";";
            ++pik_fail;
          }
        }
      }
    }
  }
  o.require(pip_fail == 0, "piP kills every relation");
  o.require(pik_fail == 0, "piK kills every relation");
  o.detail << " " << phi_checks << " phi checks, " << rels << " relations, piP survivors " << pip_fail
           << ", piK survivors " << pik_fail;
  report(7, "forbidden moves and factoring through S_n", o, seconds_since(t0));
}

void criterion8() {
  auto t0 = Clock::now();
  Outcome o;
  std::mt19937_64 rng(8);
  for (int k = 0; k < 500; ++k) {
    GroupSpec spec = make_spec("uw", 3 + static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 3));
    Word w = random_word(rng, spec, rng() % 12), v = random_word(rng, spec, rng() % 12);
    o.require(abelianize(w * v, spec) == abelianize(w, spec) + abelianize(v, spec), "additivity");
  }
  for (int n : {3, 4, 5})
    for (int c : {1, 2, 3}) {
      GroupSpec spec = make_spec("uw", n, c);
      for (const auto& rel : relations(spec)) o.require(abelianize(rel.relator(), spec).is_zero(), rel.tag);
      o.require(abelianize(welded_relation(1, 1).relator(), spec).is_zero(), "WR1 relator");
    }
  report(8, "abelianization onto Z^c + Z_2", o, seconds_since(t0));
}

void criterion9() {
  auto t0 = Clock::now();
  Outcome o;
  for (int n : {3, 4}) {
    GroupSpec spec = make_spec("vb", n);
    for (Family f : {Family::Burau, Family::FRep}) {
      LocalRep rep = build_local_rep(f, spec);
      std::vector<Relation> braid;
      for (const auto& rel : relations(spec))
        if (rel.tag.rfind("BR", 0) == 0 || rel.tag.rfind("CR", 0) == 0) braid.push_back(rel);
      VerificationReport vr = verify_relations(rep, spec, braid, VerifyMode::Symbolic);
      o.require(!braid.empty() && vr.all_pass(), family_name(f) + " " + spec.summary());
      o.require(rep.degree == (f == Family::FRep ? n + 1 : n), family_name(f) + " degree");
    }
  }
  report(9, "Burau and F-representation satisfy the braid relations", o, seconds_since(t0));
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  std::cout << (9 - g_failures) << "/9 criteria pass\n";
  return g_failures == 0 ? 0 : 1;
}
