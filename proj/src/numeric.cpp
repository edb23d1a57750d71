#include "conlap/numeric.hpp"

#include <cctype>

namespace conlap {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  if (auto slash = s.find('/'); slash != std::string::npos) {
    BigInt num, den;
    if (num.set_str(s.substr(0, slash), 10) != 0 || den.set_str(s.substr(slash + 1), 10) != 0)
      throw std::invalid_argument("malformed rational: " + s);
    return make_rational(num, den);
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::size_t frac_len = s.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+")
      throw std::invalid_argument("malformed decimal: " + s);
    if (digits[0] == '+') digits.erase(0, 1);
    BigInt num;
    if (num.set_str(digits, 10) != 0) throw std::invalid_argument("malformed decimal: " + s);
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
    return make_rational(num, den);
  }
  if (s[0] == '+') s.erase(0, 1);
  BigInt num;
  if (num.set_str(s, 10) != 0) throw std::invalid_argument("malformed integer: " + s);
  return make_rational(num);
}

std::string to_string(const BigInt& v) { return v.get_str(); }

std::string to_string(const Rational& v) {
  Rational c = v;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

}  // namespace conlap
