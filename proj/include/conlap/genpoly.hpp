#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "conlap/numeric.hpp"

namespace conlap {

/// Univariate polynomial with exact rational coefficients, ascending degree.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class GenPoly {
 public:
  GenPoly() = default;
  explicit GenPoly(std::vector<Rational> coefficients);
  GenPoly(std::initializer_list<long> coefficients);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Degree, or -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coefficient(std::size_t k) const;
  bool is_integral() const;

  Rational operator()(const Rational& x) const;
  GenPoly derivative() const;
  /// Antiderivative with zero constant term.
  GenPoly antiderivative() const;

  friend GenPoly operator+(const GenPoly& a, const GenPoly& b);
  friend GenPoly operator-(const GenPoly& a, const GenPoly& b);
  friend GenPoly operator*(const GenPoly& a, const GenPoly& b);
  friend bool operator==(const GenPoly& a, const GenPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Human-readable form such as "1+26x+72x^2+48x^3".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace conlap
