#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lieeq/error.hpp"

namespace lieeq {

inline double to_double(double c) { return c; }
inline double to_double(const mpq_class& c) { return c.get_d(); }
inline void canonicalize(double&) {}
inline void canonicalize(mpq_class& c) { c.canonicalize(); }

/// Sparse polynomial in a fixed number of variables x1..xm. Coefficients are
/// double or mpq_class; zero coefficients are never stored.
template <class C>
class MultiPoly {
 public:
  using Exponents = std::vector<int>;
  using Terms = std::map<Exponents, C>;

  MultiPoly() = default;
  explicit MultiPoly(int nvars) : nvars_(nvars) {}

  static MultiPoly constant(int nvars, const C& c) { return monomial(nvars, Exponents(static_cast<std::size_t>(nvars), 0), c); }
  /// x_{i+1}, 0-based index.
  static MultiPoly variable(int nvars, int i) {
    Exponents e(static_cast<std::size_t>(nvars), 0);
    e.at(static_cast<std::size_t>(i)) = 1;
    return monomial(nvars, std::move(e), C(1));
  }
  static MultiPoly monomial(int nvars, Exponents e, const C& c) {
    MultiPoly p(nvars);
    p.add_term(e, c);
    return p;
  }

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Total degree; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int a : e) s += a;
      d = std::max(d, s);
    }
    return d;
  }

  void add_term(const Exponents& e, const C& c) {
    if (static_cast<int>(e.size()) != nvars_) throw Error(ErrorKind::InvalidArgument, "exponent length mismatch");
    for (int a : e) {
      if (a < 0) throw Error(ErrorKind::InvalidArgument, "negative exponent");
    }
    C value = c;
    canonicalize(value);
    if (value == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, value);
    if (!inserted) {
      it->second += value;
      if (it->second == 0) terms_.erase(it);
    }
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, C(-c));
    return *this;
  }
  MultiPoly& operator*=(const C& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const C& s) { return a *= s; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_same(b);
    MultiPoly out(a.nvars_);
    Exponents e(static_cast<std::size_t>(a.nvars_));
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, C(ca * cb));
      }
    }
    return out;
  }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }

  MultiPoly pow(unsigned n) const {
    MultiPoly result = constant(nvars_, C(1));
    MultiPoly base = *this;
    while (n > 0) {
      if (n & 1u) result = result * base;
      n >>= 1u;
      if (n > 0) base = base * base;
    }
    return result;
  }

  MultiPoly derivative(int var) const {
    const auto v = check_var(var);
    MultiPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
      if (e[v] == 0) continue;
      Exponents d = e;
      --d[v];
      out.add_term(d, C(c * e[v]));
    }
    return out;
  }

  /// Antiderivative in one variable vanishing at x_var = 0.
  MultiPoly integrate(int var) const {
    const auto v = check_var(var);
    MultiPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
      Exponents d = e;
      ++d[v];
      out.add_term(d, C(c / (e[v] + 1)));
    }
    return out;
  }

  /// Sets x_var = value; the variable stays in the signature with exponent 0.
  MultiPoly substitute(int var, const C& value) const {
    const auto v = check_var(var);
    C x = value;
    canonicalize(x);
    MultiPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
      Exponents d = e;
      C factor(1);
      for (int a = 0; a < e[v]; ++a) factor *= x;
      d[v] = 0;
      out.add_term(d, C(c * factor));
    }
    return out;
  }

  /// Exact evaluation in the coefficient type.
  C evaluate(std::span<const C> x) const {
    check_point(x.size());
    std::vector<C> xs(x.begin(), x.end());
    for (auto& v : xs) canonicalize(v);
    C sum(0);
    for (const auto& [e, c] : terms_) {
      C term = c;
      for (std::size_t i = 0; i < e.size(); ++i) {
        for (int a = 0; a < e[i]; ++a) term *= xs[i];
      }
      sum += term;
    }
    return sum;
  }

  double evaluate_double(std::span<const double> x) const {
    check_point(x.size());
    double sum = 0.0;
    for (const auto& [e, c] : terms_) {
      double term = to_double(c);
      for (std::size_t i = 0; i < e.size(); ++i) {
        for (int a = 0; a < e[i]; ++a) term *= x[i];
      }
      sum += term;
    }
    return sum;
  }

 private:
  void check_same(const MultiPoly& o) const {
    if (o.nvars_ != nvars_) throw Error(ErrorKind::InvalidArgument, "polynomials have different variable counts");
  }
  std::size_t check_var(int var) const {
    if (var < 0 || var >= nvars_) throw Error(ErrorKind::InvalidArgument, "variable index out of range");
    return static_cast<std::size_t>(var);
  }
  void check_point(std::size_t n) const {
    if (n != static_cast<std::size_t>(nvars_)) throw Error(ErrorKind::InvalidArgument, "point dimension mismatch");
  }

  int nvars_ = 0;
  Terms terms_;
};

/// Flattened copy of a polynomial for repeated double evaluation; powers of
/// each coordinate are tabulated once per call.
class PolyEvaluator {
 public:
  template <class C>
  explicit PolyEvaluator(const MultiPoly<C>& p) : nvars_(p.nvars()), max_exp_(0) {
    for (const auto& [e, c] : p.terms()) {
      coeffs_.push_back(to_double(c));
      for (int a : e) {
        exps_.push_back(a);
        max_exp_ = std::max(max_exp_, a);
      }
    }
  }

  double operator()(std::span<const double> x) const {
    if (x.size() != static_cast<std::size_t>(nvars_)) {
      throw Error(ErrorKind::InvalidArgument, "point dimension mismatch");
    }
    const auto stride = static_cast<std::size_t>(max_exp_ + 1);
    std::vector<double> pw(static_cast<std::size_t>(nvars_) * stride);
    for (std::size_t i = 0; i < x.size(); ++i) {
      pw[i * stride] = 1.0;
      for (std::size_t a = 1; a < stride; ++a) pw[i * stride + a] = pw[i * stride + a - 1] * x[i];
    }
    double sum = 0.0;
    const int* e = exps_.data();
    for (double c : coeffs_) {
      double term = c;
      for (std::size_t i = 0; i < x.size(); ++i) term *= pw[i * stride + static_cast<std::size_t>(*e++)];
      sum += term;
    }
    return sum;
  }

 private:
  int nvars_;
  int max_exp_;
  std::vector<double> coeffs_;
  std::vector<int> exps_;
};

using RealPoly = MultiPoly<double>;
using RationalPoly = MultiPoly<mpq_class>;

RealPoly to_real(const RationalPoly& p);

/// Grammar: terms joined by + or -, factors joined by *, a factor is a
/// decimal number, x<i> or x<i>^<n> with 1 <= i <= nvars. Whitespace is
/// ignored. Throws ParseError.
RealPoly parse_poly(std::string_view text, int nvars);
std::string to_string(const RealPoly& p);
std::string to_string(const RationalPoly& p);

}  // namespace lieeq
