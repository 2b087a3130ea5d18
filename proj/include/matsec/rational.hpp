#pragma once

#include <gmpxx.h>

#include <string>

namespace matsec {

// Exact rational scalar used everywhere a spec value must be exact:
// densities, critical values, expectations, decomposition coefficients.
using Rat = mpq_class;

// mpq_class(num, den) does not canonicalize; this does.
Rat make_rat(long num, long den);

// Accepts "p/q", plain integers, and decimal literals ("0.25" -> 1/4).
Rat parse_rat(const std::string& text);

// "p/q" when den != 1, else "p".
std::string rat_str(const Rat& q);

double rat_double(const Rat& q);

}  // namespace matsec
