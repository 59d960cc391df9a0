#pragma once
// Verification engines: symbolic relation checking, constraint generation,
// finite-field scans, irreducibility criteria and the Burnside oracle,
// spinning, invariant vectors and homomorphism factoring.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "uvbraid/exactnum.hpp"
#include "uvbraid/linalg.hpp"
#include "uvbraid/presentations.hpp"
#include "uvbraid/representations.hpp"

namespace uvb {

// ---------------------------------------------------------------------------
// Random sampling
// ---------------------------------------------------------------------------

/// Deterministic across platforms: draws are taken straight from mt19937_64
/// output rather than through <random> distributions.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  long uniform(long lo, long hi) {
    auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(rng_() % span);
  }
  long nonzero(long lo, long hi) {
    long v = 0;
    while (v == 0) v = uniform(lo, hi);
    return v;
  }
  /// p/q with |p| <= bound, 1 <= q <= bound.
  GaussianRational rational(long bound) {
    return GaussianRational::fraction(uniform(-bound, bound), uniform(1, bound));
  }

 private:
  std::mt19937_64 rng_;
};

// ---------------------------------------------------------------------------
// Relation verification
// ---------------------------------------------------------------------------

enum class VerifyMode { Symbolic, Sampled };

inline std::string mode_name(VerifyMode m) { return m == VerifyMode::Symbolic ? "symbolic" : "sampled"; }

struct RelationOutcome {
  std::string tag;
  bool pass = false;
  std::string lhs;
  std::string rhs;
  std::vector<std::vector<std::string>> residue;  // rendered on failure
};

struct VerificationReport {
  std::string spec_summary;
  std::string rep_name;
  VerifyMode mode = VerifyMode::Symbolic;
  std::vector<RelationOutcome> outcomes;
  std::vector<Assignment> sample_points;

  bool all_pass() const {
    return std::all_of(outcomes.begin(), outcomes.end(), [](const RelationOutcome& o) { return o.pass; });
  }
  std::size_t pass_count() const {
    return static_cast<std::size_t>(
        std::count_if(outcomes.begin(), outcomes.end(), [](const RelationOutcome& o) { return o.pass; }));
  }
};

/// Relations of `spec` whose tags are listed, in the order given.
inline std::vector<Relation> select_relations(const GroupSpec& spec, const std::vector<std::string>& tags) {
  std::vector<Relation> all = relations(spec);
  for (int i = 1; i <= spec.n - 2; ++i) {
    for (int t = 1; t <= spec.c; ++t) {
      if (!spec.welded) all.push_back(welded_relation(i, t));
      all.push_back(welded_relation_mirror(i, t));
    }
  }
  std::vector<Relation> out;
  for (const auto& tag : tags) {
    auto it = std::find_if(all.begin(), all.end(), [&](const Relation& r) { return r.tag == tag; });
    if (it == all.end()) throw std::invalid_argument("no relation tagged '" + tag + "' in " + spec.summary());
    out.push_back(*it);
  }
  return out;
}

namespace detail {

inline std::vector<std::string> block_variables(const LocalRep& rep) {
  std::set<std::string> names;
  auto collect = [&](const RMatrix& m) {
    for (const auto& x : m.entries()) {
      for (auto& v : x.num().used_variables()) names.insert(v);
      for (auto& v : x.den().used_variables()) names.insert(v);
    }
  };
  collect(rep.blocks.rho);
  for (const auto& [t, b] : rep.blocks.sigma) collect(b);
  for (const auto& cond : rep.side_conditions) {
    for (auto& v : cond.expr.num().used_variables()) names.insert(v);
    for (auto& v : cond.expr.den().used_variables()) names.insert(v);
  }
  return {names.begin(), names.end()};
}

}  // namespace detail

/// Random sample point avoiding every side-condition zero and undefined entry.
inline Assignment sample_point(const LocalRep& rep, Sampler& rng, long bound = 1000000) {
  std::vector<std::string> vars = detail::block_variables(rep);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Assignment point;
    for (const auto& v : vars) point[v] = rng.rational(bound);
    if (violated_condition(rep, point)) continue;
    try {
      (void)specialize(rep.blocks, point);
    } catch (const VanishingDenominator&) {
      continue;
    }
    return point;
  }
  throw Error("could not find a sample point avoiding the side-conditions");
}

/// Checks every relation. Symbolic mode expands each residue eval(lhs) - eval(rhs)
/// fully; sampled mode evaluates at `samples` random points and is advisory.
inline VerificationReport verify_relations(const LocalRep& rep, const GroupSpec& spec,
                                           const std::vector<Relation>& rels, VerifyMode mode,
                                           std::uint64_t seed = 0, int samples = 3) {
  for (int t = 1; t <= spec.c; ++t) {
    if (rep.blocks.sigma.count(t) == 0) {
      throw FamilyMismatch(rep.name + " has no block for crossing type " + std::to_string(t));
    }
  }
  VerificationReport report;
  report.spec_summary = spec.summary();
  report.rep_name = rep.name;
  report.mode = mode;
  const auto degree = static_cast<std::size_t>(spec.n + rep.block_size - 2);

  std::vector<BlockSet<GaussianRational>> sampled;
  if (mode == VerifyMode::Sampled) {
    Sampler rng(seed);
    for (int s = 0; s < std::max(samples, 3); ++s) {
      report.sample_points.push_back(sample_point(rep, rng));
      sampled.push_back(specialize(rep.blocks, report.sample_points.back()));
    }
  }
  for (const auto& rel : rels) {
    RelationOutcome out;
    out.tag = rel.tag;
    out.lhs = rel.lhs.to_string();
    out.rhs = rel.rhs.to_string();
    if (mode == VerifyMode::Symbolic) {
      RMatrix residue = eval_word(rep.blocks, spec, degree, rel.lhs) - eval_word(rep.blocks, spec, degree, rel.rhs);
      out.pass = residue.is_zero_matrix();
      if (!out.pass) out.residue = residue.rendered();
    } else {
      out.pass = true;
      for (const auto& blocks : sampled) {
        QMatrix residue = eval_word(blocks, spec, degree, rel.lhs) - eval_word(blocks, spec, degree, rel.rhs);
        if (!residue.is_zero_matrix()) {
          out.pass = false;
          out.residue = residue.rendered();
          break;
        }
      }
    }
    report.outcomes.push_back(std::move(out));
  }
  return report;
}

inline VerificationReport verify_relations(const LocalRep& rep, const GroupSpec& spec, VerifyMode mode,
                                           std::uint64_t seed = 0) {
  return verify_relations(rep, spec, relations(spec), mode, seed);
}

// ---------------------------------------------------------------------------
// Constraint systems
// ---------------------------------------------------------------------------

struct ConstraintSystem {
  std::vector<std::string> unknowns;
  std::vector<MultiPoly> equations;  // each required to vanish
  std::vector<std::string> provenance;

  /// Equations whose variables all lie in `vars`.
  ConstraintSystem restricted_to(const std::vector<std::string>& vars) const {
    ConstraintSystem out;
    for (const auto& u : unknowns)
      if (std::find(vars.begin(), vars.end(), u) != vars.end()) out.unknowns.push_back(u);
    for (std::size_t i = 0; i < equations.size(); ++i) {
      auto used = equations[i].used_variables();
      bool inside = std::all_of(used.begin(), used.end(), [&](const std::string& v) {
        return std::find(vars.begin(), vars.end(), v) != vars.end();
      });
      if (inside) {
        out.equations.push_back(equations[i]);
        out.provenance.push_back(provenance[i]);
      }
    }
    return out;
  }
};

/// p and q agree up to a nonzero scalar factor.
inline bool same_up_to_scalar(const MultiPoly& p, const MultiPoly& q) {
  if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
  if (p.term_count() != q.term_count()) return false;
  VarList vars = MultiPoly::merged_vars(p.vars(), q.vars());
  MultiPoly a = p.reembed(vars);
  MultiPoly b = q.reembed(vars);
  return (a.scaled(b.leading_coefficient()) - b.scaled(a.leading_coefficient())).is_zero();
}

/// Generic k x k blocks: R = (r1 .. r_{k^2}) row-major, S_t = (s1_t .. s{k^2}_t).
inline std::pair<ParameterSet, BlockSet<RatFunc>> generic_blocks(int k, int c) {
  std::vector<std::string> names;
  for (int j = 1; j <= k * k; ++j) names.push_back("r" + std::to_string(j));
  for (int t = 1; t <= c; ++t)
    for (int j = 1; j <= k * k; ++j) names.push_back("s" + std::to_string(j) + "_" + std::to_string(t));
  ParameterSet P(names);
  BlockSet<RatFunc> blocks;
  auto fill = [&](const std::string& prefix, const std::string& suffix) {
    RMatrix m(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) m(a, b) = P(prefix + std::to_string(a * k + b + 1) + suffix);
    return m;
  };
  blocks.rho = fill("r", "");
  for (int t = 1; t <= c; ++t) blocks.sigma[t] = fill("s", "_" + std::to_string(t));
  return {P, blocks};
}

/// Residue entries of each relation over generic blocks (after `fixed`
/// substitutions), reduced to numerators and deduplicated up to scalars.
inline ConstraintSystem generate_constraints(int k, const GroupSpec& spec, const std::vector<Relation>& rels,
                                             const ParamBinding& fixed = {}) {
  if (k != 2 && k != 3) throw std::invalid_argument("block size must be 2 or 3");
  auto [P, blocks] = generic_blocks(k, spec.c);
  if (!fixed.empty()) {
    auto subst = [&](const RMatrix& m) { return m.map([&](const RatFunc& x) { return x.substitute(fixed); }); };
    blocks.rho = subst(blocks.rho);
    for (auto& [t, b] : blocks.sigma) b = subst(b);
  }
  const auto degree = static_cast<std::size_t>(spec.n + k - 2);
  ConstraintSystem sys;
  std::vector<MultiPoly> keys;
  for (const auto& rel : rels) {
    RMatrix residue = eval_word(blocks, spec, degree, rel.lhs) - eval_word(blocks, spec, degree, rel.rhs);
    for (std::size_t r = 0; r < degree; ++r) {
      for (std::size_t c = 0; c < degree; ++c) {
        const RatFunc& e = residue(r, c);
        if (e.is_zero()) continue;
        MultiPoly eq = e.num();
        MultiPoly key = eq.scaled(eq.leading_coefficient().inverse());
        if (std::find(keys.begin(), keys.end(), key) != keys.end()) continue;
        keys.push_back(key);
        sys.equations.push_back(eq);
        sys.provenance.push_back(rel.tag + "(" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")");
      }
    }
  }
  std::set<std::string> used;
  for (const auto& eq : sys.equations)
    for (auto& v : eq.used_variables()) used.insert(v);
  for (const auto& name : P.names())
    if (used.count(name)) sys.unknowns.push_back(name);
  return sys;
}

inline ConstraintSystem generate_constraints(int k, const GroupSpec& spec, const std::vector<std::string>& tags,
                                             const ParamBinding& fixed = {}) {
  return generate_constraints(k, spec, select_relations(spec, tags), fixed);
}

enum class ConstraintPreset { TwoLocalUV, TwoLocalWelded, ThreeLocalUV };

/// Relation subsets sufficient for homogeneous k-local classification.
inline std::pair<GroupSpec, std::vector<std::string>> constraint_preset_relations(ConstraintPreset preset) {
  switch (preset) {
    case ConstraintPreset::TwoLocalUV:
      return {make_spec("uv", 3, 1), {"PR1[i=1]", "PR3[i=1]", "MR2[i=1,t=1]"}};
    case ConstraintPreset::TwoLocalWelded:
      return {make_spec("uw", 3, 1), {"WR1[i=1,t=1]"}};
    case ConstraintPreset::ThreeLocalUV:
    default:
      return {make_spec("uv", 4, 2),
              {"PR1[i=1]", "PR2[i=1,j=3]", "PR3[i=1]", "CR[i=1,j=3,t=1,l=1]", "CR[i=1,j=3,t=1,l=2]",
               "CR[i=1,j=3,t=2,l=1]", "CR[i=1,j=3,t=2,l=2]", "MR2[i=1,t=1]", "MR2[i=1,t=2]"}};
  }
}

/// r1 = r4 = 0, r3 = 1/r2: the rho block forced by the 2-local classification.
inline ParamBinding classified_two_local_rho() {
  ParameterSet P(std::vector<std::string>{"r2"});
  return {{"r1", RatFunc(0)}, {"r4", RatFunc(0)}, {"r3", RatFunc(1) / P("r2")}};
}

inline ConstraintSystem generate_constraints(ConstraintPreset preset) {
  auto [spec, tags] = constraint_preset_relations(preset);
  int k = preset == ConstraintPreset::ThreeLocalUV ? 3 : 2;
  ParamBinding fixed;
  if (preset == ConstraintPreset::TwoLocalWelded) fixed = classified_two_local_rho();
  return generate_constraints(k, spec, tags, fixed);
}

// ---------------------------------------------------------------------------
// Finite-field enumeration
// ---------------------------------------------------------------------------

inline bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

namespace detail {

inline long mod(long a, long p) { return ((a % p) + p) % p; }

inline long mod_inverse(long a, long p) {
  long result = 1;
  long base = mod(a, p);
  for (long e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return result;
}

/// Polynomial with coefficients reduced mod p, variables indexed by scan position.
struct ModPoly {
  std::vector<std::pair<long, std::vector<std::pair<std::size_t, unsigned>>>> terms;
  std::size_t last = 0;  // highest scan position used
  bool constant = true;

  long eval(const std::vector<long>& x, long p) const {
    long sum = 0;
    for (const auto& [coef, vars] : terms) {
      long term = coef;
      for (const auto& [idx, e] : vars)
        for (unsigned k = 0; k < e; ++k) term = term * x[idx] % p;
      sum = (sum + term) % p;
    }
    return sum;
  }
};

inline ModPoly compile_mod_p(const MultiPoly& poly, const std::vector<std::string>& order, long p) {
  ModPoly out;
  const auto& vars = *poly.vars();
  std::vector<std::size_t> where(vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i) {
    auto it = std::find(order.begin(), order.end(), vars[i]);
    where[i] = it == order.end() ? order.size() : static_cast<std::size_t>(it - order.begin());
  }
  for (const auto& [e, c] : poly.terms()) {
    if (!c.is_real()) throw std::invalid_argument("mod-p scan: coefficient with imaginary part");
    mpz_class num = c.re().get_num() % p;
    mpz_class den = c.re().get_den() % p;
    if (den == 0) throw std::invalid_argument("mod-p scan: coefficient denominator divisible by p");
    long coef = mod(num.get_si(), p) * mod_inverse(den.get_si(), p) % p;
    std::vector<std::pair<std::size_t, unsigned>> mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (where[i] == order.size()) throw std::invalid_argument("mod-p scan: variable '" + vars[i] + "' not scanned");
      mono.emplace_back(where[i], e[i]);
      out.last = std::max(out.last, where[i]);
      out.constant = false;
    }
    out.terms.emplace_back(coef, std::move(mono));
  }
  return out;
}

}  // namespace detail

struct ModPSolutions {
  long p = 0;
  std::vector<std::string> unknowns;
  std::vector<std::vector<long>> solutions;
  std::map<std::string, std::vector<std::size_t>> buckets;  // label -> solution indices

  long value(std::size_t solution, const std::string& name) const {
    auto it = std::find(unknowns.begin(), unknowns.end(), name);
    if (it == unknowns.end()) throw std::invalid_argument("unknown '" + name + "' not scanned");
    return solutions[solution][static_cast<std::size_t>(it - unknowns.begin())];
  }
};

using SolutionClassifier = std::function<std::string(const ModPSolutions&, std::size_t)>;

/// Buckets of the 2-local rho block: identity, antidiagonal with r2*r3 = 1, other.
inline std::string classify_two_local_rho(const ModPSolutions& s, std::size_t i) {
  long p = s.p;
  long r1 = s.value(i, "r1");
  long r2 = s.value(i, "r2");
  long r3 = s.value(i, "r3");
  long r4 = s.value(i, "r4");
  if (r1 == 1 && r4 == 1 && r2 == 0 && r3 == 0) return "identity";
  if (r1 == 0 && r4 == 0 && r2 * r3 % p == 1) return "antidiagonal";
  return "other";
}

/// Exhaustive scan of F_p^k by backtracking: each equation (and each
/// invertibility condition) is checked as soon as its last variable is set.
inline ModPSolutions enumerate_solutions_mod_p(const ConstraintSystem& sys, long p,
                                               const std::vector<MultiPoly>& nonzero_conditions,
                                               const SolutionClassifier& classify = {}) {
  if (p % 2 == 0 || !is_prime(p)) throw std::invalid_argument("modulus must be an odd prime");
  if (p > 13) throw std::invalid_argument("modulus above desk scale (p <= 13)");
  if (sys.unknowns.size() > 8) throw std::invalid_argument("more than 8 unknowns");
  ModPSolutions out;
  out.p = p;
  out.unknowns = sys.unknowns;
  const std::size_t k = sys.unknowns.size();
  std::vector<std::vector<detail::ModPoly>> eqs_at(k + 1);
  std::vector<std::vector<detail::ModPoly>> conds_at(k + 1);
  auto place = [&](const MultiPoly& poly, std::vector<std::vector<detail::ModPoly>>& slot) {
    detail::ModPoly mp = detail::compile_mod_p(poly, sys.unknowns, p);
    slot[mp.constant ? k : mp.last].push_back(std::move(mp));
  };
  for (const auto& eq : sys.equations) place(eq, eqs_at);
  for (const auto& cond : nonzero_conditions) place(cond, conds_at);
  std::vector<long> x(k, 0);
  for (const auto& e : eqs_at[k])
    if (e.eval(x, p) != 0) return out;
  for (const auto& c : conds_at[k])
    if (c.eval(x, p) == 0) return out;
  if (k == 0) {
    out.solutions.push_back({});
  } else {
    std::function<void(std::size_t)> scan = [&](std::size_t pos) {
      for (long v = 0; v < p; ++v) {
        x[pos] = v;
        bool ok = std::all_of(eqs_at[pos].begin(), eqs_at[pos].end(),
                              [&](const detail::ModPoly& e) { return e.eval(x, p) == 0; }) &&
                  std::all_of(conds_at[pos].begin(), conds_at[pos].end(),
                              [&](const detail::ModPoly& c) { return c.eval(x, p) != 0; });
        if (!ok) continue;
        if (pos + 1 == k) {
          out.solutions.push_back(x);
        } else {
          scan(pos + 1);
        }
      }
    };
    scan(0);
  }
  if (classify) {
    for (std::size_t i = 0; i < out.solutions.size(); ++i) out.buckets[classify(out, i)].push_back(i);
  }
  return out;
}

/// |GL_2(F_p)| = (p^2 - 1)(p^2 - p).
inline long gl2_order(long p) { return (p * p - 1) * (p * p - p); }

// ---------------------------------------------------------------------------
// Invariant subspaces and the Burnside oracle
// ---------------------------------------------------------------------------

enum class Side { Column, Row };

inline std::string side_name(Side s) { return s == Side::Column ? "column" : "row"; }

/// True iff M v lies in span(v) for every M (column), or v M does (row).
template <class T>
bool invariant_check(const std::vector<Matrix<T>>& mats, const std::vector<T>& v, Side side) {
  std::size_t pivot = 0;
  while (pivot < v.size() && is_zero(v[pivot])) ++pivot;
  if (pivot == v.size()) throw std::invalid_argument("invariant_check: zero vector");
  for (const auto& m : mats) {
    if (m.rows() != v.size() || m.cols() != v.size()) throw DimensionMismatch("invariant_check: size mismatch");
    std::vector<T> image(v.size());
    for (std::size_t a = 0; a < v.size(); ++a) {
      T sum{};
      for (std::size_t b = 0; b < v.size(); ++b) {
        const T& entry = side == Side::Column ? m(a, b) : m(b, a);
        if (is_zero(entry) || is_zero(v[b])) continue;
        sum += entry * v[b];
      }
      image[a] = std::move(sum);
    }
    T lambda = image[pivot] / v[pivot];
    for (std::size_t a = 0; a < v.size(); ++a) {
      if (!is_zero(image[a] - lambda * v[a])) return false;
    }
  }
  return true;
}

namespace detail {

inline QVector flatten(const QMatrix& m) { return m.entries(); }

inline QVector apply(const QMatrix& m, const QVector& v) {
  QVector out(m.rows(), GaussianRational(0));
  for (std::size_t a = 0; a < m.rows(); ++a)
    for (std::size_t b = 0; b < m.cols(); ++b)
      if (!m(a, b).is_zero() && !v[b].is_zero()) out[a] += m(a, b) * v[b];
  return out;
}

}  // namespace detail

/// Dimension of the algebra spanned by all products of the generators
/// (empty product included), closed breadth-first by word length.
inline std::size_t burnside_dim(const std::vector<QMatrix>& mats) {
  if (mats.empty()) throw std::invalid_argument("burnside_dim: no matrices");
  const std::size_t m = mats.front().rows();
  for (const auto& g : mats)
    if (g.rows() != m || g.cols() != m) throw DimensionMismatch("burnside_dim: matrices must be m x m");
  EchelonBasis basis(m * m);
  QMatrix id = QMatrix::identity(m);
  basis.insert(detail::flatten(id));
  std::vector<QMatrix> frontier{id};
  while (!frontier.empty() && basis.rank() < m * m) {
    std::vector<QMatrix> next;
    for (const auto& f : frontier) {
      for (const auto& g : mats) {
        QMatrix prod = g * f;
        if (basis.insert(detail::flatten(prod))) next.push_back(std::move(prod));
      }
    }
    frontier = std::move(next);
  }
  return basis.rank();
}

/// Echelon basis of the smallest subspace containing `seeds` and invariant under `mats`.
inline std::vector<QVector> spin(const std::vector<QMatrix>& mats, const std::vector<QVector>& seeds) {
  if (seeds.empty()) return {};
  const std::size_t m = seeds.front().size();
  EchelonBasis basis(m);
  std::vector<QVector> frontier;
  for (const auto& s : seeds) {
    if (s.size() != m) throw DimensionMismatch("spin: seed size mismatch");
    if (basis.insert(s)) frontier.push_back(s);
  }
  while (!frontier.empty()) {
    std::vector<QVector> next;
    for (const auto& v : frontier) {
      for (const auto& g : mats) {
        QVector img = detail::apply(g, v);
        if (basis.insert(img)) next.push_back(std::move(img));
      }
    }
    frontier = std::move(next);
  }
  return basis.rows();
}

// ---------------------------------------------------------------------------
// Reducibility criteria
// ---------------------------------------------------------------------------

struct ReducibilityVerdict {
  bool reducible = false;
  std::optional<QVector> witness;
  Side side = Side::Column;
  std::string reason;
  std::vector<std::string> notes;

  std::string to_string() const {
    if (!reducible) return "irreducible";
    std::string out = "reducible; witness [";
    for (std::size_t i = 0; i < witness->size(); ++i) {
      if (i) out += ",";
      out += (*witness)[i].to_string();
    }
    return out + "]" + (side == Side::Column ? "^T" : "");
  }
};

inline bool reducibility_family_supported(Family f) {
  return f == Family::UpsilonPrime || f == Family::Omega1p || f == Family::Omega2p || f == Family::Omega3p ||
         is_epsilon(f);
}

/// Closed-form reducibility verdicts; reducible verdicts carry an invariant
/// column vector or row covector.
inline ReducibilityVerdict reducibility_criterion(Family f, const GroupSpec& spec, const Assignment& params) {
  if (!reducibility_family_supported(f)) {
    throw std::invalid_argument("no reducibility criterion for family " + family_name(f));
  }
  LocalRep rep = symbolic_local_rep(f, spec);
  for (const auto& name : rep.params.names()) {
    if (params.count(name) == 0) throw std::invalid_argument("missing parameter '" + name + "'");
  }
  if (auto bad = violated_condition(rep, params)) throw SideConditionViolation("side-condition violated: " + *bad);
  for (const auto& [name, v] : params) {
    if (!rep.params.contains(name)) throw std::invalid_argument("parameter '" + name + "' is not declared by " + rep.name);
  }
  auto s = [&](int j, int t) { return params.at(detail::sname(j, t)); };
  const GaussianRational one(1);
  const auto n = static_cast<std::size_t>(spec.n);
  const auto m = static_cast<std::size_t>(rep.degree);
  ReducibilityVerdict v;
  auto ones = [&](Side side) {
    v.reducible = true;
    v.side = side;
    v.witness = QVector(m, one);
  };
  auto all_t = [&](const std::function<bool(int)>& pred) {
    for (int t = 1; t <= spec.c; ++t)
      if (!pred(t)) return false;
    return true;
  };

  switch (f) {
    case Family::UpsilonPrime: {
      bool rows = all_t([&](int t) { return s(1, t) + s(2, t) == one && s(3, t) + s(4, t) == one; });
      bool cols = all_t([&](int t) { return s(1, t) + s(3, t) == one && s(2, t) + s(4, t) == one; });
      if (rows) {
        ones(Side::Column);
        v.reason = "s1_t + s2_t = 1 and s3_t + s4_t = 1 for all t";
      } else if (cols) {
        ones(Side::Row);
        v.reason = "s1_t + s3_t = 1 and s2_t + s4_t = 1 for all t";
      } else {
        v.reason = "neither branch holds uniformly in t";
      }
      break;
    }
    case Family::Omega1p:
    case Family::Omega2p:
    case Family::Omega3p: {
      const GaussianRational r2 = params.at("r2");
      if (f == Family::Omega1p) {
        if (all_t([&](int t) { return s(2, t) == r2 && s(3, t) == r2.inverse(); })) {
          ones(Side::Column);
          v.reason = "s2_t = r2 and s3_t = 1/r2";
        }
      } else if (f == Family::Omega2p) {
        if (all_t([&](int t) { return s(2, t) / r2 + s(4, t) == one; })) {
          ones(Side::Row);
          v.reason = "s2_t/r2 + s4_t = 1";
        }
      } else if (all_t([&](int t) { return s(1, t) + s(2, t) / r2 == one; })) {
        ones(Side::Column);
        v.reason = "s1_t + s2_t/r2 = 1";
      }
      if (!v.reducible) v.reason = "criterion fails";
      if (spec.c > 1) v.notes.push_back("criterion applied for every crossing type t (quantifier implicit)");
      break;
    }
    case Family::Epsilon1:
    case Family::Epsilon2: {
      QVector w(m, GaussianRational(0));
      w[f == Family::Epsilon1 ? 0 : m - 1] = one;
      v.reducible = true;
      v.side = Side::Column;
      v.witness = w;
      v.reason = f == Family::Epsilon1 ? "e_1 is fixed" : "e_{n+1} is fixed";
      break;
    }
    case Family::Epsilon3: {
      QVector w(m);
      GaussianRational q = params.at("r6").inverse();
      for (std::size_t k = 0; k < m; ++k) w[k] = pow(q, static_cast<unsigned>(k));
      v.reducible = true;
      v.side = Side::Column;
      v.witness = w;
      v.reason = "(1, r6^-1, ..., r6^-n)^T is invariant";
      break;
    }
    case Family::Epsilon4: {
      QVector w(m);
      GaussianRational r2 = params.at("r2");
      for (std::size_t k = 0; k < m; ++k) w[k] = pow(r2, static_cast<unsigned>(k));
      v.reducible = true;
      v.side = Side::Row;
      v.witness = w;
      v.reason = "(1, r2, ..., r2^n) is left-invariant";
      v.notes.push_back("the covector (1, r2^-1, ..., r2^-n) is not invariant; see epsilon4 row-vector readings");
      break;
    }
    default:
      break;
  }
  (void)n;
  return v;
}

/// Specialized embedded generator images of a family at a parameter point.
inline std::vector<QMatrix> specialized_generators(Family f, const GroupSpec& spec, const Assignment& params) {
  LocalRep rep = symbolic_local_rep(f, spec);
  BlockSet<GaussianRational> blocks = specialize(rep, params);
  return generator_images(blocks, spec, static_cast<std::size_t>(rep.degree));
}

struct IrreducibilityAnalysis {
  ReducibilityVerdict verdict;
  std::size_t algebra_dim = 0;
  std::size_t full_dim = 0;  // m^2
  bool witness_invariant = false;

  bool oracle_irreducible() const { return algebra_dim == full_dim; }
  bool agrees() const { return verdict.reducible != oracle_irreducible(); }
};

/// Criterion verdict cross-checked against the Burnside dimension and the witness.
inline IrreducibilityAnalysis analyze_irreducibility(Family f, const GroupSpec& spec, const Assignment& params) {
  IrreducibilityAnalysis out;
  out.verdict = reducibility_criterion(f, spec, params);
  std::vector<QMatrix> mats = specialized_generators(f, spec, params);
  out.full_dim = mats.front().rows() * mats.front().rows();
  out.algebra_dim = burnside_dim(mats);
  if (out.verdict.reducible) out.witness_invariant = invariant_check(mats, *out.verdict.witness, out.verdict.side);
  return out;
}

/// Random parameters for a criterion family. `on_locus` solves a criterion
/// branch; otherwise parameters are rejection-sampled off the locus.
/// `mixed` (upsilon-prime, c >= 2) puts type 1 on the row-sum branch and
/// type 2 on the column-sum branch.
inline Assignment sample_criterion_parameters(Family f, const GroupSpec& spec, Sampler& rng, bool on_locus,
                                              bool mixed = false) {
  LocalRep rep = symbolic_local_rep(f, spec);
  auto draw = [&]() { return GaussianRational(rng.uniform(-9, 9)); };
  auto draw_nz = [&]() { return GaussianRational(rng.nonzero(-9, 9)); };
  for (int attempt = 0; attempt < 100000; ++attempt) {
    Assignment a;
    const GaussianRational one(1);
    if (f == Family::UpsilonPrime) {
      int branch = static_cast<int>(rng.uniform(1, 2));
      for (int t = 1; t <= spec.c; ++t) {
        auto n1 = detail::sname(1, t), n2 = detail::sname(2, t), n3 = detail::sname(3, t), n4 = detail::sname(4, t);
        int b = mixed ? (t == 1 ? 1 : 2) : branch;
        if (on_locus || mixed) {
          if (b == 1) {
            a[n1] = draw();
            a[n3] = draw();
            a[n2] = one - a[n1];
            a[n4] = one - a[n3];
          } else {
            a[n1] = draw();
            a[n2] = draw();
            a[n3] = one - a[n1];
            a[n4] = one - a[n2];
          }
        } else {
          a[n1] = draw();
          a[n2] = draw();
          a[n3] = draw();
          a[n4] = draw();
        }
      }
    } else if (is_omega(f)) {
      GaussianRational r2 = draw_nz();
      a["r2"] = r2;
      for (int t = 1; t <= spec.c; ++t) {
        auto n1 = detail::sname(1, t), n2 = detail::sname(2, t), n3 = detail::sname(3, t), n4 = detail::sname(4, t);
        if (f == Family::Omega1p) {
          a[n2] = on_locus ? r2 : draw_nz();
          a[n3] = on_locus ? r2.inverse() : draw_nz();
        } else if (f == Family::Omega2p) {
          a[n4] = draw_nz();
          a[n2] = on_locus ? r2 * (one - a[n4]) : draw_nz();
        } else {
          a[n1] = draw_nz();
          a[n2] = on_locus ? r2 * (one - a[n1]) : draw_nz();
        }
      }
    } else {
      for (const auto& name : rep.params.names()) a[name] = draw_nz();
    }
    if (violated_condition(rep, a)) continue;
    if (!on_locus && !mixed && reducibility_family_supported(f) && !is_epsilon(f) &&
        reducibility_criterion(f, spec, a).reducible) {
      continue;
    }
    return a;
  }
  throw Error("sampling failed for family " + family_name(f));
}

// ---------------------------------------------------------------------------
// Open question: which covector is invariant for epsilon4
// ---------------------------------------------------------------------------

struct CovectorReading {
  std::string label;
  bool invariant = false;  // symbolic, over every generator
};

/// Tests the candidate left-invariant covectors for epsilon4 symbolically:
/// (1, r2^-1, ..., r2^-n), (1, r6^-1, ..., r6^-n) with r6 a free symbol, and (1, r2, ..., r2^n).
inline std::vector<CovectorReading> epsilon4_covector_readings(int n) {
  GroupSpec spec = make_spec("uv", n, 2);
  LocalRep rep = symbolic_local_rep(Family::Epsilon4, spec);
  std::vector<RMatrix> mats = generator_images(rep.blocks, spec, static_cast<std::size_t>(rep.degree));
  const auto m = static_cast<std::size_t>(rep.degree);
  auto geometric = [&](const RatFunc& q) {
    std::vector<RatFunc> v(m);
    RatFunc p(1);
    for (std::size_t k = 0; k < m; ++k) {
      v[k] = p;
      p *= q;
    }
    return v;
  };
  RatFunc r2 = rep.params("r2");
  RatFunc r6(MultiPoly::variable("r6"));
  std::vector<CovectorReading> out;
  out.push_back({"(1, r2^-1, ..., r2^-n)", invariant_check(mats, geometric(RatFunc(1) / r2), Side::Row)});
  out.push_back({"(1, r6^-1, ..., r6^-n)", invariant_check(mats, geometric(RatFunc(1) / r6), Side::Row)});
  out.push_back({"(1, r2, ..., r2^n)", invariant_check(mats, geometric(r2), Side::Row)});
  return out;
}

// ---------------------------------------------------------------------------
// Homomorphism factoring
// ---------------------------------------------------------------------------

enum class HomMap { PiK, PiP, Phi };

inline std::string hom_map_name(HomMap m) {
  switch (m) {
    case HomMap::PiK:
      return "piK";
    case HomMap::PiP:
      return "piP";
    default:
      return "phi";
  }
}

/// Image in Z x S_n; pi^K and pi^P have zero count.
inline CountedPerm hom_image(const Word& w, HomMap map, const GroupSpec& spec, int t0 = 1) {
  switch (map) {
    case HomMap::PiK:
      return {0, perm_image(w, PermMap::PiK, spec.n)};
    case HomMap::PiP:
      return {0, perm_image(w, PermMap::PiP, spec.n)};
    default:
      return phi(w, t0, spec);
  }
}

struct FactorResult {
  bool kills = false;
  CountedPerm lhs;
  CountedPerm rhs;
  CountedPerm relator;
};

/// "kills" iff the relator maps to the identity; otherwise the two sides are distinguished.
inline FactorResult factor_check(const Relation& rel, HomMap map, const GroupSpec& spec, int t0 = 1) {
  FactorResult out;
  out.lhs = hom_image(rel.lhs, map, spec, t0);
  out.rhs = hom_image(rel.rhs, map, spec, t0);
  out.relator = hom_image(rel.relator(), map, spec, t0);
  out.kills = out.relator.count == 0 && out.relator.perm.is_identity();
  return out;
}

}  // namespace uvb
