#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace conlap {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Canonicalized rational; gmp keeps num/den reduced only after canonicalize().
inline Rational make_rational(const BigInt& num, const BigInt& den = 1) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "3", "-2/7" or a finite decimal such as "0.25" exactly.
Rational parse_rational(std::string_view text);

std::string to_string(const BigInt& v);
std::string to_string(const Rational& v);

}  // namespace conlap
