#include "matsec/rational.hpp"

#include <cctype>

#include "matsec/errors.hpp"

namespace matsec {

Rat make_rat(long num, long den) {
  if (den == 0) throw InputError("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat parse_rat(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational literal");
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    Rat q;
    if (q.set_str(text, 10) != 0) throw ParseError("bad rational literal: " + text);
    if (q.get_den() == 0) throw ParseError("zero denominator: " + text);
    q.canonicalize();
    return q;
  }
  auto dot = text.find('.');
  if (dot == std::string::npos) {
    try {
      Rat q(text, 10);
      q.canonicalize();
      return q;
    } catch (const std::invalid_argument&) {
      throw ParseError("bad integer literal: " + text);
    }
  }
  // Decimal literal: digits '.' digits, with optional sign.
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  size_t frac_len = text.size() - dot - 1;
  if (digits.empty() || digits == "-" || digits == "+")
    throw ParseError("bad decimal literal: " + text);
  for (size_t i = 0; i < digits.size(); ++i) {
    char c = digits[i];
    if (i == 0 && (c == '-' || c == '+')) continue;
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError("bad decimal literal: " + text);
  }
  mpz_class num(digits, 10);
  mpz_class den = 1;
  for (size_t i = 0; i < frac_len; ++i) den *= 10;
  Rat q(num, den);
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double rat_double(const Rat& q) { return q.get_d(); }

}  // namespace matsec
