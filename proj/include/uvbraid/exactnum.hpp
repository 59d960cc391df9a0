#pragma once
// Exact scalar tower: Gaussian rationals, multivariate polynomials over them,
// and rational functions in named parameters.

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace uvb {

/// Base class of every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// A rational function evaluated to a point where its denominator is zero.
class VanishingDenominator : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// ---------------------------------------------------------------------------
// GaussianRational
// ---------------------------------------------------------------------------

/// Element of Q(i) held as a pair of canonical GMP rationals.
class GaussianRational {
 public:
  GaussianRational() : re_(0), im_(0) {}
  GaussianRational(long v) : re_(v), im_(0) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }
  static GaussianRational fraction(long num, long den) {
    if (den == 0) throw DivisionByZero("zero denominator in rational literal");
    return GaussianRational(mpq_class(num, den));
  }
  static GaussianRational imaginary_unit() { return GaussianRational(mpq_class(0), mpq_class(1)); }

  const mpq_class& re() const noexcept { return re_; }
  const mpq_class& im() const noexcept { return im_; }
  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return GaussianRational(re_, -im_); }
  GaussianRational inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero Gaussian rational");
    mpq_class norm = re_ * re_ + im_ * im_;
    return GaussianRational(mpq_class(re_ / norm), mpq_class(-im_ / norm));
  }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return GaussianRational(mpq_class(a.re_ + b.re_), mpq_class(a.im_ + b.im_));
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return GaussianRational(mpq_class(a.re_ - b.re_), mpq_class(a.im_ - b.im_));
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return GaussianRational(mpq_class(a.re_ * b.re_ - a.im_ * b.im_),
                            mpq_class(a.re_ * b.im_ + a.im_ * b.re_));
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    return a * b.inverse();
  }
  GaussianRational operator-() const { return GaussianRational(mpq_class(-re_), mpq_class(-im_)); }
  GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
  GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
  GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
  GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  /// Canonical rendering: "p/q", "r/s*i" or "p/q+r/s*i".
  std::string to_string() const {
    if (sgn(im_) == 0) return re_.get_str();
    std::string imag = mpq_class(abs(im_)).get_str() + "*i";
    if (sgn(re_) == 0) return (sgn(im_) < 0 ? "-" : "") + imag;
    return re_.get_str() + (sgn(im_) < 0 ? "-" : "+") + imag;
  }

  /// Parses "3", "-2/5", "1/2+3/4*i", "-i", "2*i".
  static GaussianRational parse(std::string_view text);

 private:
  mpq_class re_;
  mpq_class im_;
};

inline GaussianRational pow(const GaussianRational& base, unsigned exponent) {
  GaussianRational result(1);
  GaussianRational b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

namespace detail {

inline mpq_class parse_rational(std::string_view text, std::size_t offset) {
  if (text.empty()) throw ParseError("empty rational", offset);
  std::size_t slash = text.find('/');
  auto digits_ok = [](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char ch) {
             return std::isdigit(static_cast<unsigned char>(ch)) != 0;
           });
  };
  std::string_view num = text.substr(0, slash);
  if (!digits_ok(num)) throw ParseError("malformed rational '" + std::string(text) + "'", offset);
  mpq_class value;
  if (slash == std::string_view::npos) {
    value = mpz_class(std::string(num));
  } else {
    std::string_view den = text.substr(slash + 1);
    if (!digits_ok(den)) throw ParseError("malformed rational '" + std::string(text) + "'", offset);
    mpz_class d(std::string{den});
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", offset);
    value = mpq_class(mpz_class(std::string(num)), d);
    value.canonicalize();
  }
  return value;
}

}  // namespace detail

inline GaussianRational GaussianRational::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty scalar", 0);
  mpq_class re = 0;
  mpq_class im = 0;
  std::size_t pos = 0;
  bool any = false;
  while (pos < text.size()) {
    int sign = 1;
    std::size_t term_start = pos;
    if (text[pos] == '+' || text[pos] == '-') {
      if (text[pos] == '-') sign = -1;
      ++pos;
    } else if (any) {
      throw ParseError("expected '+' or '-' between terms", pos);
    }
    std::size_t end = pos;
    while (end < text.size() && text[end] != '+' && text[end] != '-') ++end;
    std::string_view term = text.substr(pos, end - pos);
    if (term.empty()) throw ParseError("dangling sign", term_start);
    bool imaginary = false;
    if (term == "i") {
      imaginary = true;
      term = "1";
    } else if (term.size() > 2 && term.substr(term.size() - 2) == "*i") {
      imaginary = true;
      term = term.substr(0, term.size() - 2);
    }
    mpq_class value = detail::parse_rational(term, pos);
    if (sign < 0) value = -value;
    (imaginary ? im : re) += value;
    any = true;
    pos = end;
  }
  return GaussianRational(re, im);
}

// ---------------------------------------------------------------------------
// MultiPoly
// ---------------------------------------------------------------------------

using VarList = std::shared_ptr<const std::vector<std::string>>;

inline const VarList& empty_var_list() {
  static const VarList empty = std::make_shared<const std::vector<std::string>>();
  return empty;
}

inline VarList make_var_list(std::vector<std::string> names) {
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

using Exponents = std::vector<std::uint16_t>;

/// Graded lexicographic order over the declared variable order.
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const {
    unsigned da = 0;
    unsigned db = 0;
    for (auto e : a) da += e;
    for (auto e : b) db += e;
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

class MultiPoly;
using Assignment = std::map<std::string, GaussianRational>;

/// Sparse polynomial with dense exponent vectors over a declared variable list.
/// Zero coefficients are never stored.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, GaussianRational, GrlexLess>;

  MultiPoly() : vars_(empty_var_list()) {}
  MultiPoly(const GaussianRational& c) : vars_(empty_var_list()) {  // NOLINT
    if (!c.is_zero()) terms_.emplace(Exponents{}, c);
  }
  MultiPoly(long c) : MultiPoly(GaussianRational(c)) {}  // NOLINT

  static MultiPoly variable(const VarList& vars, std::size_t index) {
    if (index >= vars->size()) throw std::out_of_range("variable index out of range");
    MultiPoly p;
    p.vars_ = vars;
    Exponents e(vars->size(), 0);
    e[index] = 1;
    p.terms_.emplace(std::move(e), GaussianRational(1));
    return p;
  }
  static MultiPoly variable(const VarList& vars, const std::string& name) {
    auto it = std::find(vars->begin(), vars->end(), name);
    if (it == vars->end()) throw std::invalid_argument("unknown variable '" + name + "'");
    return variable(vars, static_cast<std::size_t>(it - vars->begin()));
  }
  static MultiPoly variable(const std::string& name) { return variable(make_var_list({name}), 0); }

  const VarList& vars() const noexcept { return vars_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  bool is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
  }
  GaussianRational constant_value() const {
    for (const auto& [e, c] : terms_)
      if (std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; })) return c;
    return GaussianRational(0);
  }
  bool is_monomial() const { return terms_.size() == 1; }

  /// Leading term in grlex order; undefined for the zero polynomial.
  const std::pair<const Exponents, GaussianRational>& leading() const { return *terms_.rbegin(); }
  const GaussianRational& leading_coefficient() const { return terms_.rbegin()->second; }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) {
      unsigned s = 0;
      for (auto x : e) s += x;
      d = std::max(d, s);
    }
    return d;
  }

  /// Names of variables with a nonzero exponent in some term.
  std::vector<std::string> used_variables() const {
    std::vector<bool> used(vars_->size(), false);
    for (const auto& [e, c] : terms_)
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0) used[i] = true;
    std::vector<std::string> out;
    for (std::size_t i = 0; i < used.size(); ++i)
      if (used[i]) out.push_back((*vars_)[i]);
    return out;
  }

  /// Same polynomial over a superset variable list.
  MultiPoly reembed(const VarList& target) const {
    if (target == vars_) return *this;
    std::vector<std::size_t> where(vars_->size());
    for (std::size_t i = 0; i < vars_->size(); ++i) {
      auto it = std::find(target->begin(), target->end(), (*vars_)[i]);
      if (it == target->end()) throw std::invalid_argument("reembed: variable list is not a superset");
      where[i] = static_cast<std::size_t>(it - target->begin());
    }
    MultiPoly out;
    out.vars_ = target;
    for (const auto& [e, c] : terms_) {
      Exponents ne(target->size(), 0);
      for (std::size_t i = 0; i < e.size(); ++i) ne[where[i]] = e[i];
      out.terms_.emplace(std::move(ne), c);
    }
    return out;
  }

  /// Variable list covering both operands: a's order, then b's extras.
  static VarList merged_vars(const VarList& a, const VarList& b) {
    if (a == b || b->empty()) return a;
    if (a->empty()) return b;
    if (*a == *b) return a;
    std::vector<std::string> names = *a;
    bool grew = false;
    for (const auto& v : *b) {
      if (std::find(names.begin(), names.end(), v) == names.end()) {
        names.push_back(v);
        grew = true;
      }
    }
    if (!grew) return a;
    if (names.size() == b->size()) {
      // b already covers a; keep b's declared order.
      bool covers = std::all_of(a->begin(), a->end(), [&](const std::string& v) {
        return std::find(b->begin(), b->end(), v) != b->end();
      });
      if (covers) return b;
    }
    return make_var_list(std::move(names));
  }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    VarList vars = merged_vars(a.vars_, b.vars_);
    MultiPoly out = a.reembed(vars);
    MultiPoly rhs = b.reembed(vars);
    for (auto& [e, c] : rhs.terms_) out.add_term(e, c);
    return out;
  }
  MultiPoly operator-() const {
    MultiPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
  }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    VarList vars = merged_vars(a.vars_, b.vars_);
    MultiPoly lhs = a.reembed(vars);
    MultiPoly rhs = b.reembed(vars);
    MultiPoly out;
    out.vars_ = vars;
    if (lhs.is_zero() || rhs.is_zero()) return out;
    Exponents e(vars->size());
    for (const auto& [ea, ca] : lhs.terms_) {
      for (const auto& [eb, cb] : rhs.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }
  MultiPoly scaled(const GaussianRational& s) const {
    MultiPoly out;
    out.vars_ = vars_;
    if (s.is_zero()) return out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * s);
    return out;
  }

  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    VarList vars = merged_vars(a.vars_, b.vars_);
    if (vars == a.vars_ && vars == b.vars_) return a.terms_ == b.terms_;
    return a.reembed(vars).terms_ == b.reembed(vars).terms_;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  /// Largest monomial dividing every term (exponent-wise minimum).
  Exponents monomial_content() const {
    Exponents g(vars_->size(), 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (first) {
        g = e;
        first = false;
      } else {
        for (std::size_t i = 0; i < g.size(); ++i) g[i] = std::min(g[i], e[i]);
      }
    }
    return g;
  }

  /// Divides every exponent vector by `m`; caller guarantees divisibility.
  MultiPoly divided_by_monomial(const Exponents& m) const {
    MultiPoly out;
    out.vars_ = vars_;
    for (const auto& [e, c] : terms_) {
      Exponents ne = e;
      for (std::size_t i = 0; i < ne.size(); ++i) ne[i] = static_cast<std::uint16_t>(ne[i] - m[i]);
      out.terms_.emplace(std::move(ne), c);
    }
    return out;
  }

  static MultiPoly monomial(const VarList& vars, Exponents e, GaussianRational c = GaussianRational(1)) {
    MultiPoly out;
    out.vars_ = vars;
    if (!c.is_zero()) out.terms_.emplace(std::move(e), std::move(c));
    return out;
  }

  /// Exact quotient a / b, or nullopt when b does not divide a.
  static std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    VarList vars = merged_vars(a.vars_, b.vars_);
    MultiPoly rem = a.reembed(vars);
    MultiPoly div = b.reembed(vars);
    MultiPoly quot;
    quot.vars_ = vars;
    const auto& [lead_e, lead_c] = div.leading();
    while (!rem.is_zero()) {
      const auto& [re, rc] = rem.leading();
      Exponents qe(vars->size());
      for (std::size_t i = 0; i < qe.size(); ++i) {
        if (re[i] < lead_e[i]) return std::nullopt;
        qe[i] = static_cast<std::uint16_t>(re[i] - lead_e[i]);
      }
      MultiPoly step = monomial(vars, qe, rc / lead_c);
      quot.add_term(qe, rc / lead_c);
      rem = rem - step * div;
    }
    return quot;
  }

  GaussianRational evaluate(const Assignment& point) const {
    std::vector<std::optional<GaussianRational>> values(vars_->size());
    GaussianRational sum(0);
    for (const auto& [e, c] : terms_) {
      GaussianRational term = c;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!values[i]) {
          auto it = point.find((*vars_)[i]);
          if (it == point.end()) throw Error("missing binding for variable '" + (*vars_)[i] + "'");
          values[i] = it->second;
        }
        term *= pow(*values[i], e[i]);
      }
      sum += term;
    }
    return sum;
  }

  /// Rendering in descending graded-lex order, e.g. "r2^2*s1_1 - 3*s4_1 + 1/2".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      std::string term = render_term(it->first, it->second);
      if (first) {
        out = term;
        first = false;
      } else if (!term.empty() && term[0] == '-') {
        out += " - " + term.substr(1);
      } else {
        out += " + " + term;
      }
    }
    return out;
  }

 private:
  void add_term(const Exponents& e, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  std::string render_term(const Exponents& e, const GaussianRational& c) const {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += (*vars_)[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) return c.to_string();
    if (c.is_one()) return mono;
    if (c == GaussianRational(-1)) return "-" + mono;
    if (c.is_real() || sgn(c.re()) == 0) return c.to_string() + "*" + mono;
    return "(" + c.to_string() + ")*" + mono;
  }

  VarList vars_;
  TermMap terms_;
};

// ---------------------------------------------------------------------------
// RatFunc
// ---------------------------------------------------------------------------

/// Quotient of two polynomials. No multivariate GCD is taken; equality is
/// decided by cross-multiplication. Common monomial factors are cancelled and
/// the denominator is kept monic.
class RatFunc {
 public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}                      // NOLINT
  RatFunc(const GaussianRational& c) : num_(c), den_(1) {}   // NOLINT
  RatFunc(MultiPoly p) : num_(std::move(p)), den_(1) {}      // NOLINT
  RatFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    normalize();
  }

  static RatFunc variable(const VarList& vars, const std::string& name) {
    return RatFunc(MultiPoly::variable(vars, name));
  }

  const MultiPoly& num() const noexcept { return num_; }
  const MultiPoly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  GaussianRational constant_value() const { return num_.constant_value() / den_.constant_value(); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    if (a.den_.is_monomial() && b.den_.is_monomial()) {
      // Both denominators are monic monomials: use their lcm.
      VarList vars = MultiPoly::merged_vars(a.den_.vars(), b.den_.vars());
      MultiPoly da = a.den_.reembed(vars);
      MultiPoly db = b.den_.reembed(vars);
      const Exponents& ea = da.leading().first;
      const Exponents& eb = db.leading().first;
      Exponents lcm(vars->size());
      Exponents fa(vars->size());
      Exponents fb(vars->size());
      for (std::size_t i = 0; i < lcm.size(); ++i) {
        lcm[i] = std::max(ea[i], eb[i]);
        fa[i] = static_cast<std::uint16_t>(lcm[i] - ea[i]);
        fb[i] = static_cast<std::uint16_t>(lcm[i] - eb[i]);
      }
      MultiPoly num = a.num_ * MultiPoly::monomial(vars, fa) + b.num_ * MultiPoly::monomial(vars, fb);
      return RatFunc(std::move(num), MultiPoly::monomial(vars, lcm));
    }
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  RatFunc operator-() const {
    RatFunc out = *this;
    out.num_ = -out.num_;
    return out;
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    if (a.den_ == b.num_ && !a.den_.is_constant()) return RatFunc(a.num_, b.den_);
    if (b.den_ == a.num_ && !b.den_.is_constant()) return RatFunc(b.num_, a.den_);
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  RatFunc inverse() const {
    if (is_zero()) throw DivisionByZero("division by the zero rational function");
    return RatFunc(den_, num_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  /// a == b iff a.num * b.den - b.num * a.den is the zero polynomial.
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    if (a.num_.is_zero() || b.num_.is_zero()) return a.num_.is_zero() && b.num_.is_zero();
    return (a.num_ * b.den_ - b.num_ * a.den_).is_zero();
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  GaussianRational evaluate(const Assignment& point) const {
    GaussianRational d = den_.evaluate(point);
    if (d.is_zero()) {
      throw VanishingDenominator("denominator vanishes: " + den_.to_string() + " = 0 at the requested point");
    }
    return num_.evaluate(point) / d;
  }

  /// Replaces each mapped variable by a rational function.
  RatFunc substitute(const std::map<std::string, RatFunc>& values) const {
    return RatFunc(substitute_poly(num_, values)) / substitute_poly(den_, values);
  }

  std::string to_string() const {
    if (den_.is_constant()) return (num_.scaled(den_.constant_value().inverse())).to_string();
    std::string n = num_.to_string();
    std::string d = den_.to_string();
    if (num_.term_count() > 1) n = "(" + n + ")";
    if (den_.term_count() > 1 || d.find('*') != std::string::npos) d = "(" + d + ")";
    return n + "/" + d;
  }

 private:
  static RatFunc substitute_poly(const MultiPoly& p, const std::map<std::string, RatFunc>& values) {
    const auto& vars = *p.vars();
    std::vector<RatFunc> base(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) {
      auto it = values.find(vars[i]);
      base[i] = it != values.end() ? it->second : RatFunc(MultiPoly::variable(p.vars(), i));
    }
    RatFunc sum;
    for (const auto& [e, c] : p.terms()) {
      RatFunc term(c);
      for (std::size_t i = 0; i < e.size(); ++i)
        for (unsigned k = 0; k < e[i]; ++k) term *= base[i];
      sum += term;
    }
    return sum;
  }

  void normalize() {
    if (num_.is_zero()) {
      num_ = MultiPoly();
      den_ = MultiPoly(1);
      return;
    }
    if (den_.is_constant()) {
      GaussianRational d = den_.constant_value();
      if (!d.is_one()) num_ = num_.scaled(d.inverse());
      den_ = MultiPoly(1);
      return;
    }
    VarList vars = MultiPoly::merged_vars(num_.vars(), den_.vars());
    num_ = num_.reembed(vars);
    den_ = den_.reembed(vars);
    Exponents gn = num_.monomial_content();
    Exponents gd = den_.monomial_content();
    bool any = false;
    for (std::size_t i = 0; i < gn.size(); ++i) {
      gn[i] = std::min(gn[i], gd[i]);
      if (gn[i] != 0) any = true;
    }
    if (any) {
      num_ = num_.divided_by_monomial(gn);
      den_ = den_.divided_by_monomial(gn);
    }
    GaussianRational lc = den_.leading_coefficient();
    if (!lc.is_one()) {
      GaussianRational inv = lc.inverse();
      num_ = num_.scaled(inv);
      den_ = den_.scaled(inv);
    }
    if (den_.is_constant()) {
      den_ = MultiPoly(1);
      return;
    }
    if (num_.term_count() == den_.term_count()) {
      // num a scalar multiple of den collapses to a constant.
      GaussianRational ratio = num_.leading_coefficient();
      if ((num_ - den_.scaled(ratio)).is_zero()) {
        num_ = MultiPoly(ratio);
        den_ = MultiPoly(1);
      }
    }
  }

  MultiPoly num_;
  MultiPoly den_;
};

/// Declared parameter list of a representation family; hands out variables
/// that share one exponent layout.
class ParameterSet {
 public:
  ParameterSet() : vars_(empty_var_list()) {}
  explicit ParameterSet(std::vector<std::string> names) : vars_(make_var_list(std::move(names))) {}
  const VarList& vars() const noexcept { return vars_; }
  const std::vector<std::string>& names() const noexcept { return *vars_; }
  RatFunc operator()(const std::string& name) const { return RatFunc::variable(vars_, name); }
  bool contains(const std::string& name) const {
    return std::find(vars_->begin(), vars_->end(), name) != vars_->end();
  }

 private:
  VarList vars_;
};

inline std::ostream& operator<<(std::ostream& os, const GaussianRational& x) { return os << x.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const MultiPoly& x) { return os << x.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const RatFunc& x) { return os << x.to_string(); }

/// Parses "name=value,name=value" with Gaussian-rational values.
inline Assignment parse_assignment(std::string_view text) {
  Assignment out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(pos, end - pos);
    std::size_t eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) throw ParseError("expected name=value", pos);
    std::string name(item.substr(0, eq));
    try {
      out[name] = GaussianRational::parse(item.substr(eq + 1));
    } catch (const ParseError& e) {
      throw ParseError("bad value for '" + name + "': " + e.what(), pos + eq + 1);
    }
    pos = end + 1;
  }
  return out;
}

}  // namespace uvb
