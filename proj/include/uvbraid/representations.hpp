#pragma once
// Parametric homogeneous k-local representation families, word evaluation and
// diagonal conjugation witnesses.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uvbraid/exactnum.hpp"
#include "uvbraid/linalg.hpp"
#include "uvbraid/presentations.hpp"

namespace uvb {

enum class Family {
  Upsilon,
  UpsilonPrime,
  Epsilon1,
  Epsilon2,
  Epsilon3,
  Epsilon4,
  Omega1,
  Omega2,
  Omega3,
  Omega1p,
  Omega2p,
  Omega3p,
  Burau,
  FRep,
};

inline const std::vector<std::pair<Family, std::string>>& family_names() {
  static const std::vector<std::pair<Family, std::string>> names = {
      {Family::Upsilon, "upsilon"},   {Family::UpsilonPrime, "upsilon-prime"},
      {Family::Epsilon1, "epsilon1"}, {Family::Epsilon2, "epsilon2"},
      {Family::Epsilon3, "epsilon3"}, {Family::Epsilon4, "epsilon4"},
      {Family::Omega1, "omega1"},     {Family::Omega2, "omega2"},
      {Family::Omega3, "omega3"},     {Family::Omega1p, "omega1p"},
      {Family::Omega2p, "omega2p"},   {Family::Omega3p, "omega3p"},
      {Family::Burau, "burau"},       {Family::FRep, "f-rep"},
  };
  return names;
}

inline std::string family_name(Family f) {
  for (const auto& [fam, name] : family_names())
    if (fam == f) return name;
  return "?";
}

/// Accepts the CLI spelling ("upsilon-prime", "f-rep") and underscore variants.
inline Family parse_family(std::string_view text) {
  std::string s(text);
  for (auto& ch : s)
    if (ch == '_') ch = '-';
  for (const auto& [fam, name] : family_names())
    if (name == s) return fam;
  throw std::invalid_argument("unknown representation family '" + std::string(text) + "'");
}

inline int family_block_size(Family f) {
  switch (f) {
    case Family::Epsilon1:
    case Family::Epsilon2:
    case Family::Epsilon3:
    case Family::Epsilon4:
    case Family::FRep:
      return 3;
    default:
      return 2;
  }
}

inline bool is_omega(Family f) {
  return f == Family::Omega1 || f == Family::Omega2 || f == Family::Omega3 || f == Family::Omega1p ||
         f == Family::Omega2p || f == Family::Omega3p;
}
inline bool is_epsilon(Family f) {
  return f == Family::Epsilon1 || f == Family::Epsilon2 || f == Family::Epsilon3 || f == Family::Epsilon4;
}

/// Images of the generators as k x k blocks; homogeneous by construction.
template <class T>
struct BlockSet {
  Matrix<T> rho;
  std::map<int, Matrix<T>> sigma;  // keyed by crossing type t
};

struct SideCondition {
  RatFunc expr;  // required to be nonzero
  std::string label;
};

using ParamBinding = std::map<std::string, RatFunc>;

struct LocalRep {
  Family family = Family::Upsilon;
  std::string name;
  GroupSpec spec;
  int block_size = 2;
  int degree = 2;  // m = n + k - 2
  ParameterSet params;
  std::vector<SideCondition> side_conditions;
  BlockSet<RatFunc> blocks;
  ParamBinding binding;  // substitutions applied to the declared parameters

  const RMatrix& rho_block() const { return blocks.rho; }
  const RMatrix& sigma_block(int t) const { return blocks.sigma.at(t); }
};

class FamilyMismatch : public Error {
 public:
  using Error::Error;
};

class SideConditionViolation : public Error {
 public:
  using Error::Error;
};

namespace detail {

inline std::string sname(int j, int t) { return "s" + std::to_string(j) + "_" + std::to_string(t); }

inline std::vector<std::string> declared_parameters(Family f, int c) {
  std::vector<std::string> names;
  auto per_type = [&](std::initializer_list<int> js) {
    for (int t = 1; t <= c; ++t)
      for (int j : js) names.push_back(sname(j, t));
  };
  switch (f) {
    case Family::Upsilon:
      names.push_back("r2");
      per_type({1, 2, 3, 4});
      break;
    case Family::UpsilonPrime:
      per_type({1, 2, 3, 4});
      break;
    case Family::Epsilon1:
      names.push_back("r6");
      per_type({5, 6, 8, 9});
      break;
    case Family::Epsilon2:
      names.push_back("r2");
      per_type({1, 2, 4, 5});
      break;
    case Family::Epsilon3:
      names.push_back("r6");
      per_type({4, 5});
      break;
    case Family::Epsilon4:
      names.push_back("r2");
      per_type({5, 8});
      break;
    case Family::Omega1:
    case Family::Omega1p:
      names.push_back("r2");
      per_type({2, 3});
      break;
    case Family::Omega2:
    case Family::Omega2p:
      names.push_back("r2");
      per_type({2, 4});
      break;
    case Family::Omega3:
    case Family::Omega3p:
      names.push_back("r2");
      per_type({1, 2});
      break;
    case Family::Burau:
    case Family::FRep:
      names.push_back("t");
      break;
  }
  return names;
}

inline void check_compatible(Family f, const GroupSpec& spec) {
  std::string fam = family_name(f);
  if (spec.n < 2) throw FamilyMismatch(fam + ": need n >= 2");
  if (is_epsilon(f) && spec.c != 2) {
    throw FamilyMismatch(fam + " is defined for c = 2 only, got c = " + std::to_string(spec.c));
  }
  if (is_omega(f) && !spec.welded) throw FamilyMismatch(fam + " requires a welded group");
  if ((f == Family::Burau || f == Family::FRep) && (spec.c != 1 || spec.braid_rel_types.count(1) == 0)) {
    throw FamilyMismatch(fam + " requires a braid quotient with c = 1");
  }
}

}  // namespace detail

/// Symbolic blocks of a family before any parameter binding.
inline LocalRep symbolic_local_rep(Family f, const GroupSpec& spec) {
  detail::check_compatible(f, spec);
  LocalRep rep;
  rep.family = f;
  rep.name = family_name(f);
  rep.spec = spec;
  rep.block_size = family_block_size(f);
  rep.degree = spec.n + rep.block_size - 2;
  rep.params = ParameterSet(detail::declared_parameters(f, spec.c));
  const ParameterSet& P = rep.params;
  using detail::sname;
  auto s = [&](int j, int t) { return P(sname(j, t)); };
  auto nonzero = [&](const RatFunc& e, const std::string& label) { rep.side_conditions.push_back({e, label}); };
  const RatFunc one(1);
  const RatFunc zero(0);
  const int c = spec.c;

  switch (f) {
    case Family::Upsilon:
    case Family::UpsilonPrime: {
      if (f == Family::Upsilon) {
        RatFunc r2 = P("r2");
        rep.blocks.rho = RMatrix{{zero, r2}, {one / r2, zero}};
        nonzero(r2, "r2 != 0");
      } else {
        rep.blocks.rho = RMatrix{{zero, one}, {one, zero}};
      }
      for (int t = 1; t <= c; ++t) {
        rep.blocks.sigma[t] = RMatrix{{s(1, t), s(2, t)}, {s(3, t), s(4, t)}};
        nonzero(s(1, t) * s(4, t) - s(2, t) * s(3, t), "det sigma block t=" + std::to_string(t) + " != 0");
      }
      break;
    }
    case Family::Epsilon1: {
      RatFunc r6 = P("r6");
      rep.blocks.rho = RMatrix{{one, zero, zero}, {zero, zero, r6}, {zero, one / r6, zero}};
      nonzero(r6, "r6 != 0");
      for (int t = 1; t <= c; ++t) {
        rep.blocks.sigma[t] = RMatrix{{one, zero, zero}, {zero, s(5, t), s(6, t)}, {zero, s(8, t), s(9, t)}};
        nonzero(s(5, t) * s(9, t) - s(6, t) * s(8, t), "s5_t*s9_t - s6_t*s8_t != 0, t=" + std::to_string(t));
      }
      break;
    }
    case Family::Epsilon2: {
      RatFunc r2 = P("r2");
      rep.blocks.rho = RMatrix{{zero, r2, zero}, {one / r2, zero, zero}, {zero, zero, one}};
      nonzero(r2, "r2 != 0");
      for (int t = 1; t <= c; ++t) {
        rep.blocks.sigma[t] = RMatrix{{s(1, t), s(2, t), zero}, {s(4, t), s(5, t), zero}, {zero, zero, one}};
        nonzero(s(1, t) * s(5, t) - s(2, t) * s(4, t), "s1_t*s5_t - s2_t*s4_t != 0, t=" + std::to_string(t));
      }
      break;
    }
    case Family::Epsilon3: {
      RatFunc r6 = P("r6");
      rep.blocks.rho = RMatrix{{one, zero, zero}, {one / r6, RatFunc(-1), r6}, {zero, zero, one}};
      nonzero(r6, "r6 != 0");
      for (int t = 1; t <= c; ++t) {
        rep.blocks.sigma[t] = RMatrix{{one, zero, zero},
                                      {s(4, t), s(5, t), r6 * (one - r6 * s(4, t) - s(5, t))},
                                      {zero, zero, one}};
        nonzero(s(5, t), sname(5, t) + " != 0");
      }
      break;
    }
    case Family::Epsilon4: {
      RatFunc r2 = P("r2");
      rep.blocks.rho = RMatrix{{one, r2, zero}, {zero, RatFunc(-1), zero}, {zero, one / r2, one}};
      nonzero(r2, "r2 != 0");
      for (int t = 1; t <= c; ++t) {
        rep.blocks.sigma[t] = RMatrix{{one, r2 * (one - s(5, t) - r2 * s(8, t)), zero},
                                      {zero, s(5, t), zero},
                                      {zero, s(8, t), one}};
        nonzero(s(5, t), sname(5, t) + " != 0");
      }
      break;
    }
    case Family::Omega1:
    case Family::Omega2:
    case Family::Omega3:
    case Family::Omega1p:
    case Family::Omega2p:
    case Family::Omega3p: {
      RatFunc r2 = P("r2");
      bool primed = f == Family::Omega1p || f == Family::Omega2p || f == Family::Omega3p;
      rep.blocks.rho = primed ? RMatrix{{zero, one}, {one, zero}} : RMatrix{{zero, r2}, {one / r2, zero}};
      for (const auto& name : P.names()) nonzero(P(name), name + " != 0");
      for (int t = 1; t <= c; ++t) {
        switch (f) {
          case Family::Omega1:
            rep.blocks.sigma[t] = RMatrix{{zero, s(2, t)}, {s(3, t), zero}};
            break;
          case Family::Omega2:
            rep.blocks.sigma[t] = RMatrix{{zero, s(2, t)}, {one / r2, s(4, t)}};
            break;
          case Family::Omega3:
            rep.blocks.sigma[t] = RMatrix{{s(1, t), s(2, t)}, {one / r2, zero}};
            break;
          case Family::Omega1p:
            rep.blocks.sigma[t] = RMatrix{{zero, s(2, t) / r2}, {r2 * s(3, t), zero}};
            break;
          case Family::Omega2p:
            rep.blocks.sigma[t] = RMatrix{{zero, s(2, t) / r2}, {one, s(4, t)}};
            break;
          default:
            rep.blocks.sigma[t] = RMatrix{{s(1, t), s(2, t) / r2}, {one, zero}};
            break;
        }
      }
      break;
    }
    case Family::Burau: {
      RatFunc tt = P("t");
      rep.blocks.rho = RMatrix{{zero, one}, {one, zero}};
      rep.blocks.sigma[1] = RMatrix{{one - tt, tt}, {one, zero}};
      nonzero(tt, "t != 0");
      break;
    }
    case Family::FRep: {
      RatFunc tt = P("t");
      rep.blocks.rho = RMatrix{{one, one, zero}, {zero, RatFunc(-1), zero}, {zero, one, one}};
      rep.blocks.sigma[1] = RMatrix{{one, one, zero}, {zero, -tt, zero}, {zero, tt, one}};
      nonzero(tt, "t != 0");
      break;
    }
  }
  return rep;
}

/// Builds a family and applies a (possibly partial, possibly symbolic)
/// parameter binding. Throws if a side-condition becomes identically zero.
inline LocalRep build_local_rep(Family f, const GroupSpec& spec, const ParamBinding& binding = {}) {
  LocalRep rep = symbolic_local_rep(f, spec);
  if (binding.empty()) return rep;
  for (const auto& [name, value] : binding) {
    if (!rep.params.contains(name)) {
      throw std::invalid_argument("parameter '" + name + "' is not declared by family " + rep.name);
    }
  }
  auto subst = [&](const RMatrix& m) { return m.map([&](const RatFunc& x) { return x.substitute(binding); }); };
  for (auto& cond : rep.side_conditions) {
    cond.expr = cond.expr.substitute(binding);
    if (cond.expr.is_zero()) throw SideConditionViolation("side-condition violated: " + cond.label);
  }
  try {
    rep.blocks.rho = subst(rep.blocks.rho);
    for (auto& [t, block] : rep.blocks.sigma) block = subst(block);
  } catch (const DivisionByZero&) {
    throw SideConditionViolation("parameter binding makes a block entry undefined");
  }
  rep.binding = binding;
  return rep;
}

inline LocalRep build_local_rep(Family f, const GroupSpec& spec, const Assignment& values) {
  ParamBinding binding;
  for (const auto& [name, v] : values) binding[name] = RatFunc(v);
  return build_local_rep(f, spec, binding);
}

/// Primed-family entries obtained by conjugating upsilon with diag(1, q, q^2, ...), q = 1/r2:
/// s2 -> s2/r2, s3 -> r2*s3, s1 and s4 fixed.
inline ParamBinding upsilon_conjugated_binding(int c) {
  ParameterSet P(std::vector<std::string>{"r2"});
  RatFunc r2 = P("r2");
  ParamBinding out;
  for (int t = 1; t <= c; ++t) {
    out[detail::sname(2, t)] = RatFunc(MultiPoly::variable(detail::sname(2, t))) / r2;
    out[detail::sname(3, t)] = r2 * RatFunc(MultiPoly::variable(detail::sname(3, t)));
  }
  return out;
}

template <class T>
BlockSet<GaussianRational> specialize(const BlockSet<T>& blocks, const Assignment& point) {
  BlockSet<GaussianRational> out;
  out.rho = specialize(blocks.rho, point);
  for (const auto& [t, b] : blocks.sigma) out.sigma[t] = specialize(b, point);
  return out;
}

/// Every side condition evaluated at `point`; returns the label of the first violation.
inline std::optional<std::string> violated_condition(const LocalRep& rep, const Assignment& point) {
  for (const auto& cond : rep.side_conditions) {
    try {
      if (cond.expr.evaluate(point).is_zero()) return cond.label;
    } catch (const VanishingDenominator&) {
      return cond.label + " (undefined)";
    }
  }
  return std::nullopt;
}

inline BlockSet<GaussianRational> specialize(const LocalRep& rep, const Assignment& point) {
  if (auto bad = violated_condition(rep, point)) throw SideConditionViolation("side-condition violated: " + *bad);
  return specialize(rep.blocks, point);
}

/// Product of the block-embedded generator images, left to right.
template <class T>
Matrix<T> eval_word(const BlockSet<T>& blocks, const GroupSpec& spec, std::size_t degree, const Word& w) {
  Matrix<T> acc = Matrix<T>::identity(degree);
  std::map<int, Matrix<T>> sigma_inverse;
  for (const auto& l : w.letters) {
    validate_generator(l.gen, spec);
    if (l.gen.is_rho()) {
      right_multiply_block(acc, blocks.rho, static_cast<std::size_t>(l.gen.i));
      continue;
    }
    const Matrix<T>& block = blocks.sigma.at(l.gen.t);
    if (l.exp > 0 || spec.is_involutive(l.gen)) {
      right_multiply_block(acc, block, static_cast<std::size_t>(l.gen.i));
    } else {
      auto it = sigma_inverse.find(l.gen.t);
      if (it == sigma_inverse.end()) it = sigma_inverse.emplace(l.gen.t, inverse(block)).first;
      right_multiply_block(acc, it->second, static_cast<std::size_t>(l.gen.i));
    }
  }
  return acc;
}

inline RMatrix eval_word(const LocalRep& rep, const Word& w) {
  return eval_word(rep.blocks, rep.spec, static_cast<std::size_t>(rep.degree), w);
}

/// Embedded images of every generator: rho_1..rho_{n-1}, then sigma_{i,t} by t then i.
template <class T>
std::vector<Matrix<T>> generator_images(const BlockSet<T>& blocks, const GroupSpec& spec, std::size_t degree) {
  std::vector<Matrix<T>> out;
  for (int i = 1; i <= spec.n - 1; ++i) out.push_back(block_embed(blocks.rho, static_cast<std::size_t>(i), degree));
  for (const auto& [t, b] : blocks.sigma)
    for (int i = 1; i <= spec.n - 1; ++i) out.push_back(block_embed(b, static_cast<std::size_t>(i), degree));
  return out;
}

inline std::vector<Generator> generator_list(const GroupSpec& spec) {
  std::vector<Generator> out;
  for (int i = 1; i <= spec.n - 1; ++i) out.push_back(Generator::rho(i));
  for (int t = 1; t <= spec.c; ++t)
    for (int i = 1; i <= spec.n - 1; ++i) out.push_back(Generator::sigma(i, t));
  return out;
}

/// Q^{-1} M Q for Q = diag(1, q, ..., q^{m-1}): entry (a, b) scales by q^{b-a}.
inline RMatrix diagonal_conjugate(const RMatrix& m, const RatFunc& q) {
  std::size_t n = m.rows();
  std::vector<RatFunc> pos(n, RatFunc(1));
  std::vector<RatFunc> neg(n, RatFunc(1));
  RatFunc qinv = q.inverse();
  for (std::size_t k = 1; k < n; ++k) {
    pos[k] = pos[k - 1] * q;
    neg[k] = neg[k - 1] * qinv;
  }
  RMatrix out(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (m(a, b).is_zero()) continue;
      out(a, b) = m(a, b) * (b >= a ? pos[b - a] : neg[a - b]);
    }
  }
  return out;
}

inline RMatrix diagonal_witness(const RatFunc& q, std::size_t m) {
  RMatrix out(m, m);
  RatFunc p(1);
  for (std::size_t k = 0; k < m; ++k) {
    out(k, k) = p;
    p *= q;
  }
  return out;
}

struct EquivalenceResult {
  bool found = false;
  std::string q_label;             // "1", "1/r2", "1/r6"
  std::optional<RMatrix> witness;  // Q with Q^{-1} A(g) Q = B(g)
  std::vector<std::string> mismatches;  // per rejected candidate
};

/// Searches Q = diag(1, q, q^2, ...) with q in {1, 1/r2, 1/r6} such that
/// Q^{-1} A(g) Q = B(g) symbolically for every generator g.
inline EquivalenceResult conjugation_equivalence(const LocalRep& a, const LocalRep& b) {
  if (a.degree != b.degree) {
    throw DimensionMismatch("conjugation_equivalence: degree " + std::to_string(a.degree) + " vs " +
                            std::to_string(b.degree));
  }
  if (a.spec.n != b.spec.n || a.spec.c != b.spec.c) {
    throw std::invalid_argument("conjugation_equivalence: representations of different groups");
  }
  std::vector<std::pair<std::string, RatFunc>> candidates = {{"1", RatFunc(1)}};
  for (const char* name : {"r2", "r6"}) {
    if (a.params.contains(name) || b.params.contains(name)) {
      candidates.emplace_back(std::string("1/") + name, RatFunc(1) / RatFunc(MultiPoly::variable(name)));
    }
  }
  EquivalenceResult result;
  const auto m = static_cast<std::size_t>(a.degree);
  for (const auto& [label, q] : candidates) {
    std::optional<std::string> mismatch;
    for (const Generator& g : generator_list(a.spec)) {
      Word w{Letter{g, 1}};
      RMatrix lhs = diagonal_conjugate(eval_word(a, w), q);
      RMatrix rhs = eval_word(b, w);
      if (lhs != rhs) {
        mismatch = "q=" + label + ": first mismatch at " + g.to_string();
        break;
      }
    }
    if (!mismatch) {
      result.found = true;
      result.q_label = label;
      result.witness = diagonal_witness(q, m);
      return result;
    }
    result.mismatches.push_back(*mismatch);
  }
  return result;
}

}  // namespace uvb
