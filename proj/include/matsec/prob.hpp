#pragma once

#include <string>

#include "matsec/rational.hpp"
#include "matsec/real.hpp"

namespace matsec {

// A probability parameter that stays exact when it can. Rational values
// support fully rational enumeration; e^{q} values (the threshold
// algorithm's default sampling rate is e^{-1/2}) are carried symbolically
// and evaluated at 50 digits when needed.
class Prob {
 public:
  static Prob rational(const Rat& q);
  static Prob exp_of(const Rat& exponent);  // e^{exponent}

  // "1/2", "0.25", "e^-1/2", "exp(-1/2)".
  static Prob parse(const std::string& text);

  bool is_rational() const { return rational_; }
  const Rat& rat() const;  // throws NeedsRealMode if irrational
  Real real() const;
  double approx() const;
  std::string str() const;

 private:
  Prob() = default;
  bool rational_ = true;
  Rat value_;     // the probability itself when rational_
  Rat exponent_;  // e^{exponent_} otherwise
};

}  // namespace matsec
