#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include "matsec/rational.hpp"

namespace matsec {

// High-precision float (50 decimal digits) for guarantee constants and
// for expectations whose sampling probability is irrational.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<50>>;

Real to_real(const Rat& q);

// Shared guarantee constants, each computed once at full precision.
namespace consts {
const Real& euler_e();          // e
const Real& inv_e();            // 1/e
const Real& exp_minus_half();   // e^{-1/2}
const Real& half_inv_e();       // 1/(2e)
const Real& one_minus_inv_e();  // 1 - 1/e
const Real& general_ratio();    // 2e^2/(e-1)
}  // namespace consts

}  // namespace matsec
