#pragma once

#include "kvlab/rational.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace kvlab {

// Sorted multiset of variable names; the empty monomial is the constant 1.
using Monomial = std::vector<std::string>;

/** Multivariate polynomial with rational coefficients, kept in expanded form. */
class Polynomial {
 public:
  Polynomial() = default;
  static Polynomial constant(const Rational& c);
  static Polynomial variable(const std::string& name);

  /**
   * Parses integer-coefficient expressions built from identifiers
   * ([A-Za-z_][A-Za-z0-9_]*), integers, + - * /, and parentheses.
   * Division is only allowed by a nonzero constant.
   */
  static Polynomial parse(std::string_view text);

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial operator-() const;

  /** Replaces every variable found in `values` by its value. */
  Polynomial substitute(const std::map<std::string, Rational>& values) const;

  /**
   * Coefficients of a polynomial that is linear and homogeneous in
   * `unknowns` once all other variables have been substituted; throws
   * ParseError on leftover variables, constant terms or nonlinearity.
   */
  RatVector linear_coefficients(const std::vector<std::string>& unknowns) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void add_term(const Monomial& m, const Rational& c);
  std::map<Monomial, Rational> terms_;
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);
Polynomial operator*(Polynomial a, const Polynomial& b);

}  // namespace kvlab
