#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

namespace graphpoly {

using Integer = mpz_class;
using Rational = mpq_class;

/// Exact sparse multivariate polynomial with rational coefficients.
///
/// Normal form: variables sorted by name, variables that occur in no term are
/// dropped, zero coefficients are never stored. Terms are kept in graded
/// lexicographic order, so two polynomials are equal iff their normal forms
/// are structurally equal and the text serialization is canonical.
class Polynomial {
 public:
  using Exponents = std::vector<std::uint32_t>;

  struct GradedLex {
    bool operator()(const Exponents& a, const Exponents& b) const;
  };
  using Terms = std::map<Exponents, Rational, GradedLex>;

  Polynomial() = default;
  Polynomial(int c);  // NOLINT: constants convert implicitly
  Polynomial(const Rational& c);  // NOLINT
  Polynomial(const Integer& c);   // NOLINT

  static Polynomial variable(const std::string& name);
  static Polynomial monomial(const std::string& name, std::uint32_t power,
                             const Rational& coefficient = 1);
  /// Builds from arbitrary terms; normalizes (variables may be unsorted).
  static Polynomial from_terms(std::vector<std::string> variables,
                               std::vector<std::pair<Exponents, Rational>> terms);
  /// coefficients[i] is the coefficient of name^i.
  static Polynomial univariate(const std::string& name, std::span<const Integer> coefficients);
  static Polynomial univariate(const std::string& name, std::span<const Rational> coefficients);

  /// Parses the text form, also accepting parentheses, '^' powers and implicit
  /// multiplication, e.g. "x^2(x+2)(x-2)" or "3/2*x*y^2 - z".
  static Polynomial parse(std::string_view text);
  static Polynomial from_json(const nlohmann::json& j);

  const std::vector<std::string>& variables() const { return vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return vars_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  bool has_integer_coefficients() const;

  std::uint32_t degree(std::string_view var) const;
  std::uint32_t total_degree() const;
  Rational coefficient(const Exponents& e) const;
  /// Coefficient of the monomial given as (variable, power) pairs.
  Rational coefficient(const std::vector<std::pair<std::string, std::uint32_t>>& monomial) const;
  /// Coefficients c_0..c_d of a polynomial in at most the single variable `var`.
  std::vector<Rational> univariate_coefficients(std::string_view var) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  Polynomial scaled(const Rational& c) const;
  Polynomial pow(std::uint32_t k) const;

  /// Simultaneous algebraic substitution; unbound variables are kept.
  Polynomial substitute(const std::map<std::string, Polynomial>& bindings) const;
  /// Renames variables; the image names must not collide with kept names.
  Polynomial renamed(const std::map<std::string, std::string>& names) const;
  /// Exact value; throws DomainError if a variable has no binding.
  Rational evaluate(const std::map<std::string, Rational>& point) const;

  /// Canonical text, e.g. "x^5 - 4*x^3 + 3*x".
  std::string to_string() const;
  nlohmann::json to_json() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

 private:
  Polynomial(std::vector<std::string> vars, Terms terms)
      : vars_(std::move(vars)), terms_(std::move(terms)) {}

  /// Re-expresses the terms over a superset of the current variables.
  Terms lifted(const std::vector<std::string>& to) const;
  void normalize();

  std::vector<std::string> vars_;
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// Unique polynomial of bidegree at most (x_degree, y_degree) through the
/// sample values on a full grid of (x_degree+1) x (y_degree+1) distinct nodes.
struct GridSample {
  Rational x;
  Rational y;
  Rational value;
};
Polynomial interpolate_bivariate(std::span<const GridSample> samples, std::uint32_t x_degree,
                                 std::uint32_t y_degree, const std::string& x_name = "x",
                                 const std::string& y_name = "y");

/// Newton interpolation through (nodes[i], values[i]); nodes pairwise distinct.
std::vector<Rational> interpolate_univariate(std::span<const Rational> nodes,
                                             std::span<const Rational> values);

std::string to_string(const Rational& q);

}  // namespace graphpoly
