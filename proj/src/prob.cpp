#include "matsec/prob.hpp"

#include "matsec/errors.hpp"

namespace matsec {

Prob Prob::rational(const Rat& q) {
  if (q < 0 || q > 1) throw InputError("probability out of [0,1]: " + rat_str(q));
  Prob p;
  p.rational_ = true;
  p.value_ = q;
  return p;
}

Prob Prob::exp_of(const Rat& exponent) {
  if (exponent > 0) throw InputError("e^x with x > 0 is not a probability");
  if (exponent == 0) return rational(Rat(1));
  Prob p;
  p.rational_ = false;
  p.exponent_ = exponent;
  return p;
}

Prob Prob::parse(const std::string& text) {
  if (text.rfind("e^", 0) == 0) return exp_of(parse_rat(text.substr(2)));
  if (text.rfind("exp(", 0) == 0 && text.back() == ')')
    return exp_of(parse_rat(text.substr(4, text.size() - 5)));
  return rational(parse_rat(text));
}

const Rat& Prob::rat() const {
  if (!rational_)
    throw NeedsRealMode("probability e^" + rat_str(exponent_) +
                        " is irrational; use high-precision mode");
  return value_;
}

Real Prob::real() const {
  if (rational_) return to_real(value_);
  return exp(to_real(exponent_));
}

double Prob::approx() const { return real().convert_to<double>(); }

std::string Prob::str() const {
  if (rational_) return rat_str(value_);
  return "e^" + rat_str(exponent_);
}

}  // namespace matsec
