#pragma once
// Generators, words, group presentations for the universal virtual/welded
// braid groups and their quotients, and the homomorphisms onto S_n.

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "uvbraid/exactnum.hpp"

namespace uvb {

enum class GenKind { Rho, Sigma };

struct Generator {
  GenKind kind = GenKind::Rho;
  int i = 1;  // strand index 1..n-1
  int t = 0;  // crossing type 1..c, 0 for rho

  static Generator rho(int i) { return {GenKind::Rho, i, 0}; }
  static Generator sigma(int i, int t) { return {GenKind::Sigma, i, t}; }
  bool is_rho() const noexcept { return kind == GenKind::Rho; }

  friend bool operator==(const Generator&, const Generator&) = default;
  friend auto operator<=>(const Generator&, const Generator&) = default;

  std::string to_string() const {
    return is_rho() ? "r" + std::to_string(i) : "s" + std::to_string(i) + "," + std::to_string(t);
  }
};

struct Letter {
  Generator gen;
  int exp = 1;  // +1 or -1

  Letter inverse() const { return {gen, -exp}; }
  friend bool operator==(const Letter&, const Letter&) = default;
  std::string to_string() const { return gen.to_string() + (exp < 0 ? "^-1" : ""); }
};

/// Word in the free group on the generators.
struct Word {
  std::vector<Letter> letters;

  Word() = default;
  Word(std::initializer_list<Letter> ls) : letters(ls) {}
  explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}

  bool empty() const noexcept { return letters.empty(); }
  std::size_t size() const noexcept { return letters.size(); }

  Word inverse() const {
    Word out;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) out.letters.push_back(it->inverse());
    return out;
  }
  friend Word operator*(const Word& a, const Word& b) {
    Word out = a;
    out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
    return out;
  }
  friend bool operator==(const Word&, const Word&) = default;

  std::string to_string() const {
    std::string out;
    for (const auto& l : letters) {
      if (!out.empty()) out += ' ';
      out += l.to_string();
    }
    return out;
  }
};

inline Letter R(int i) { return {Generator::rho(i), 1}; }
inline Letter S(int i, int t) { return {Generator::sigma(i, t), 1}; }

/// Which relation families hold; reproduces UV, UW and the named quotients.
struct GroupSpec {
  std::string flavor = "uv";
  int n = 2;
  int c = 1;
  bool welded = false;
  std::set<int> braid_rel_types;
  std::set<int> involutive_types;
  bool singular = false;

  bool is_involutive(const Generator& g) const {
    return g.is_rho() || involutive_types.count(g.t) != 0;
  }
  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

  std::string summary() const {
    return flavor + "(n=" + std::to_string(n) + ",c=" + std::to_string(c) + ")";
  }
};

inline const std::vector<std::string>& spec_names() {
  static const std::vector<std::string> names = {"uv", "uw", "vb", "wb", "vt", "wt", "vsg", "wsg", "mvb", "mwb"};
  return names;
}

/// Builds the presentation flags for a named group. `c_or_k` is required for
/// uv/uw/mvb/mwb; for the fixed-c flavors it may be omitted or must agree.
inline GroupSpec make_spec(std::string_view name, int n, std::optional<int> c_or_k = std::nullopt) {
  if (n < 2) throw std::invalid_argument("number of strands must be at least 2, got " + std::to_string(n));
  std::string nm(name);
  if (std::find(spec_names().begin(), spec_names().end(), nm) == spec_names().end()) {
    throw std::invalid_argument("unknown group name '" + nm + "'");
  }
  GroupSpec spec;
  spec.flavor = nm;
  spec.n = n;
  auto fixed_c = [&](int c) {
    if (c_or_k && *c_or_k != c) {
      throw std::invalid_argument(nm + " requires c = " + std::to_string(c) + ", got " + std::to_string(*c_or_k));
    }
    spec.c = c;
  };
  auto free_c = [&]() {
    if (!c_or_k) throw std::invalid_argument(nm + " requires a crossing-type count");
    if (*c_or_k < 1) throw std::invalid_argument("crossing-type count must be at least 1");
    spec.c = *c_or_k;
  };
  bool welded_flavor = nm[0] == 'u' ? nm == "uw" : (nm[0] == 'w' || nm == "mwb");
  spec.welded = welded_flavor;
  if (nm == "uv" || nm == "uw") {
    free_c();
  } else if (nm == "vb" || nm == "wb") {
    fixed_c(1);
    spec.braid_rel_types = {1};
  } else if (nm == "vt" || nm == "wt") {
    fixed_c(1);
    spec.involutive_types = {1};
  } else if (nm == "vsg" || nm == "wsg") {
    fixed_c(2);
    spec.braid_rel_types = {1, 2};
    spec.singular = true;
  } else {  // mvb / mwb
    free_c();
    for (int t = 1; t <= spec.c; ++t) spec.braid_rel_types.insert(t);
  }
  return spec;
}

struct Relation {
  Word lhs;
  Word rhs;
  std::string tag;

  Word relator() const { return lhs * rhs.inverse(); }
};

namespace detail {

inline std::string tag(const std::string& family, std::initializer_list<std::pair<const char*, int>> idx) {
  std::string out = family + "[";
  bool first = true;
  for (const auto& [k, v] : idx) {
    if (!first) out += ",";
    out += std::string(k) + "=" + std::to_string(v);
    first = false;
  }
  return out + "]";
}

}  // namespace detail

/// The welded relation r_i s_{i+1,t} s_{i,t} = s_{i+1,t} s_{i,t} r_{i+1}.
inline Relation welded_relation(int i, int t) {
  return {Word{R(i), S(i + 1, t), S(i, t)}, Word{S(i + 1, t), S(i, t), R(i + 1)},
          detail::tag("WR1", {{"i", i}, {"t", t}})};
}

/// The mirrored over-forbidden move r_{i+1} s_{i,t} s_{i+1,t} = s_{i,t} s_{i+1,t} r_i.
inline Relation welded_relation_mirror(int i, int t) {
  return {Word{R(i + 1), S(i, t), S(i + 1, t)}, Word{S(i, t), S(i + 1, t), R(i)},
          detail::tag("WR2", {{"i", i}, {"t", t}})};
}

/// Exhaustive, duplicate-free relation list for the presentation.
inline std::vector<Relation> relations(const GroupSpec& spec) {
  using detail::tag;
  const int n = spec.n;
  const int c = spec.c;
  std::vector<Relation> out;
  for (int i = 1; i <= n - 2; ++i)
    out.push_back({Word{R(i), R(i + 1), R(i)}, Word{R(i + 1), R(i), R(i + 1)}, tag("PR1", {{"i", i}})});
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j)
      out.push_back({Word{R(i), R(j)}, Word{R(j), R(i)}, tag("PR2", {{"i", i}, {"j", j}})});
  for (int i = 1; i <= n - 1; ++i) out.push_back({Word{R(i), R(i)}, Word{}, tag("PR3", {{"i", i}})});
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j)
      for (int t = 1; t <= c; ++t)
        for (int l = 1; l <= c; ++l)
          out.push_back({Word{S(i, t), S(j, l)}, Word{S(j, l), S(i, t)},
                         tag("CR", {{"i", i}, {"j", j}, {"t", t}, {"l", l}})});
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n - 1; ++j)
      if (std::abs(i - j) >= 2)
        for (int t = 1; t <= c; ++t)
          out.push_back({Word{S(i, t), R(j)}, Word{R(j), S(i, t)}, tag("MR1", {{"i", i}, {"j", j}, {"t", t}})});
  for (int i = 1; i <= n - 2; ++i)
    for (int t = 1; t <= c; ++t)
      out.push_back({Word{R(i), R(i + 1), S(i, t)}, Word{S(i + 1, t), R(i), R(i + 1)},
                     tag("MR2", {{"i", i}, {"t", t}})});
  if (spec.welded)
    for (int i = 1; i <= n - 2; ++i)
      for (int t = 1; t <= c; ++t) out.push_back(welded_relation(i, t));
  for (int t : spec.braid_rel_types)
    for (int i = 1; i <= n - 2; ++i)
      out.push_back({Word{S(i, t), S(i + 1, t), S(i, t)}, Word{S(i + 1, t), S(i, t), S(i + 1, t)},
                     tag("BR", {{"i", i}, {"t", t}})});
  for (int t : spec.involutive_types)
    for (int i = 1; i <= n - 1; ++i)
      out.push_back({Word{S(i, t), S(i, t)}, Word{}, tag("INV", {{"i", i}, {"t", t}})});
  if (spec.singular) {
    // sigma_i = s_{i,1}, tau_i = s_{i,2}
    for (int i = 1; i <= n - 1; ++i)
      out.push_back({Word{S(i, 1), S(i, 2)}, Word{S(i, 2), S(i, 1)}, tag("SR1", {{"i", i}})});
    for (int i = 1; i <= n - 2; ++i) {
      out.push_back({Word{S(i, 1), S(i + 1, 1), S(i, 2)}, Word{S(i + 1, 2), S(i, 1), S(i + 1, 1)},
                     tag("SR2", {{"i", i}})});
      out.push_back({Word{S(i + 1, 1), S(i, 1), S(i + 1, 2)}, Word{S(i, 2), S(i + 1, 1), S(i, 1)},
                     tag("SR3", {{"i", i}})});
    }
  }
  return out;
}

inline void validate_generator(const Generator& g, const GroupSpec& spec, std::size_t pos = 0) {
  if (g.i < 1 || g.i > spec.n - 1) {
    throw ParseError("strand index " + std::to_string(g.i) + " out of range 1.." + std::to_string(spec.n - 1), pos);
  }
  if (!g.is_rho() && (g.t < 1 || g.t > spec.c)) {
    throw ParseError("type index " + std::to_string(g.t) + " > c = " + std::to_string(spec.c), pos);
  }
}

/// Parses whitespace-separated tokens `r<i>`, `s<i>,<t>`, each optionally `^-1`.
inline Word parse_word(std::string_view text, const GroupSpec& spec) {
  Word w;
  std::size_t pos = 0;
  auto read_int = [&](std::size_t& p, std::size_t token_start) {
    std::size_t start = p;
    while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p])) != 0) ++p;
    if (p == start) throw ParseError("expected digits", p);
    if (p - start > 6) throw ParseError("index too large", token_start);
    return std::stoi(std::string(text.substr(start, p - start)));
  };
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos])) != 0) {
      ++pos;
      continue;
    }
    std::size_t start = pos;
    Generator g;
    if (text[pos] == 'r') {
      ++pos;
      g = Generator::rho(read_int(pos, start));
    } else if (text[pos] == 's') {
      ++pos;
      int i = read_int(pos, start);
      if (pos >= text.size() || text[pos] != ',') throw ParseError("expected ',' after sigma strand index", pos);
      ++pos;
      g = Generator::sigma(i, read_int(pos, start));
    } else {
      throw ParseError(std::string("unexpected character '") + text[pos] + "'", pos);
    }
    int exp = 1;
    if (pos < text.size() && text[pos] == '^') {
      if (text.substr(pos, 3) != "^-1") throw ParseError("only the exponent ^-1 is allowed", pos);
      exp = -1;
      pos += 3;
    }
    if (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])) == 0) {
      throw ParseError("expected whitespace between letters", pos);
    }
    validate_generator(g, spec, start);
    w.letters.push_back({g, exp});
  }
  return w;
}

/// Free cancellation plus removal of squares of involutive generators; the
/// inverse of an involutive letter is rewritten to the letter itself.
inline Word free_reduce(const Word& w, const GroupSpec& spec) {
  std::vector<Letter> stack;
  for (Letter l : w.letters) {
    if (spec.is_involutive(l.gen)) l.exp = 1;
    bool cancels = !stack.empty() && stack.back().gen == l.gen &&
                   (spec.is_involutive(l.gen) || stack.back().exp == -l.exp);
    if (cancels) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return Word(std::move(stack));
}

/// Normal form in UV_2(c) = F_c * Z_2: reduced sigma syllables separated by
/// single r1 letters. For n = 2 every relation except r1^2 = 1 (and sigma
/// squares in twin quotients) is vacuous, so free reduction decides equality.
/// The singular quotients keep a commutation relation at n = 2 and are rejected.
inline Word normal_form_n2(const Word& w, const GroupSpec& spec) {
  if (spec.n != 2) throw std::invalid_argument("normal_form_n2 requires n = 2");
  if (spec.singular) throw std::invalid_argument("normal_form_n2: singular quotients are not free products");
  return free_reduce(w, spec);
}

// ---------------------------------------------------------------------------
// Symmetric group
// ---------------------------------------------------------------------------

/// Element of S_n; images are 0-based. Product (p*q)(x) = p(q(x)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int n) : images_(static_cast<std::size_t>(n)) {
    std::iota(images_.begin(), images_.end(), 0);
  }
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int x : images_) {
      if (x < 0 || x >= static_cast<int>(images_.size()) || seen[x]) throw std::invalid_argument("not a bijection");
      seen[x] = true;
    }
  }
  /// Adjacent transposition s_i = (i i+1), 1-based i.
  static Permutation transposition(int n, int i) {
    Permutation p(n);
    std::swap(p.images_[i - 1], p.images_[i]);
    return p;
  }

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x]; }
  const std::vector<int>& images() const noexcept { return images_; }
  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != static_cast<int>(i)) return false;
    return true;
  }
  Permutation inverse() const {
    Permutation out(size());
    for (int i = 0; i < size(); ++i) out.images_[images_[i]] = i;
    return out;
  }
  friend Permutation operator*(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size()) throw std::invalid_argument("permutation size mismatch");
    Permutation out(p.size());
    for (int i = 0; i < p.size(); ++i) out.images_[i] = p.images_[q.images_[i]];
    return out;
  }
  friend bool operator==(const Permutation&, const Permutation&) = default;

  /// Disjoint-cycle notation on 1..n, e.g. "(1 2 3)"; identity is "id".
  std::string to_string() const {
    std::string out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t s = 0; s < images_.size(); ++s) {
      if (seen[s] || images_[s] == static_cast<int>(s)) continue;
      out += "(";
      std::size_t x = s;
      bool first = true;
      while (!seen[x]) {
        seen[x] = true;
        if (!first) out += " ";
        out += std::to_string(x + 1);
        first = false;
        x = static_cast<std::size_t>(images_[x]);
      }
      out += ")";
    }
    return out.empty() ? "id" : out;
  }

 private:
  std::vector<int> images_;
};

enum class PermMap { PiK, PiP, IotaCheck };

/// Image of a word under pi^K (sigma -> 1, rho_i -> s_i) or pi^P (both -> s_i).
/// IotaCheck requires a pure-rho word and checks that both projections
/// undo the splitting s_i -> rho_i.
inline Permutation perm_image(const Word& w, PermMap map, int n) {
  Permutation acc(n);
  if (map == PermMap::IotaCheck) {
    Permutation direct(n);
    for (const auto& l : w.letters) {
      if (!l.gen.is_rho()) throw std::invalid_argument("iota_check: word contains sigma letters");
      direct = direct * Permutation::transposition(n, l.gen.i);
    }
    Permutation via_p = perm_image(w, PermMap::PiP, n);
    Permutation via_k = perm_image(w, PermMap::PiK, n);
    if (!(via_p == direct) || !(via_k == direct)) throw Error("iota_check: projection does not split");
    return direct;
  }
  for (const auto& l : w.letters) {
    if (l.gen.is_rho() || map == PermMap::PiP) acc = acc * Permutation::transposition(n, l.gen.i);
  }
  return acc;
}

/// Element of Z x S_n.
struct CountedPerm {
  long count = 0;
  Permutation perm;

  friend bool operator==(const CountedPerm&, const CountedPerm&) = default;
  std::string to_string() const { return "(" + std::to_string(count) + ", " + perm.to_string() + ")"; }
};

/// phi(rho_i) = (0, s_i), phi(sigma_{i,t0}) = (1, id), phi(sigma_{i,t}) = (0, id) otherwise.
inline CountedPerm phi(const Word& w, int t0, const GroupSpec& spec) {
  if (t0 < 1 || t0 > spec.c) throw std::invalid_argument("t0 out of range 1..c");
  CountedPerm out{0, Permutation(spec.n)};
  for (const auto& l : w.letters) {
    if (l.gen.is_rho()) {
      out.perm = out.perm * Permutation::transposition(spec.n, l.gen.i);
    } else if (l.gen.t == t0) {
      out.count += l.exp;
    }
  }
  return out;
}

/// Image in Z^c (+) Z_2: signed sigma counts per type, rho parity.
struct Abelianization {
  std::vector<long> sigma_exponents;
  int rho_parity = 0;

  bool is_zero() const {
    return rho_parity == 0 && std::all_of(sigma_exponents.begin(), sigma_exponents.end(), [](long x) { return x == 0; });
  }
  friend bool operator==(const Abelianization&, const Abelianization&) = default;
  Abelianization operator+(const Abelianization& o) const {
    Abelianization out = *this;
    for (std::size_t t = 0; t < out.sigma_exponents.size(); ++t) out.sigma_exponents[t] += o.sigma_exponents[t];
    out.rho_parity = (out.rho_parity + o.rho_parity) % 2;
    return out;
  }
  std::string to_string() const {
    std::string out = "((";
    for (std::size_t t = 0; t < sigma_exponents.size(); ++t) {
      if (t) out += ", ";
      out += std::to_string(sigma_exponents[t]);
    }
    return out + "), " + std::to_string(rho_parity) + ")";
  }
};

inline Abelianization abelianize(const Word& w, const GroupSpec& spec) {
  Abelianization out{std::vector<long>(static_cast<std::size_t>(spec.c), 0), 0};
  for (const auto& l : w.letters) {
    if (l.gen.is_rho()) {
      out.rho_parity ^= 1;
    } else {
      out.sigma_exponents[static_cast<std::size_t>(l.gen.t - 1)] += l.exp;
    }
  }
  return out;
}

}  // namespace uvb
