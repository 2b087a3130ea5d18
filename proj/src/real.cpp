#include "matsec/real.hpp"

namespace matsec {

Real to_real(const Rat& q) {
  Real r;
  mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

namespace consts {

const Real& euler_e() {
  static const Real v = exp(Real(1));
  return v;
}

const Real& inv_e() {
  static const Real v = Real(1) / euler_e();
  return v;
}

const Real& exp_minus_half() {
  static const Real v = exp(Real(-1) / 2);
  return v;
}

const Real& half_inv_e() {
  static const Real v = Real(1) / (2 * euler_e());
  return v;
}

const Real& one_minus_inv_e() {
  static const Real v = Real(1) - inv_e();
  return v;
}

const Real& general_ratio() {
  static const Real v = 2 * euler_e() * euler_e() / (euler_e() - 1);
  return v;
}

}  // namespace consts
}  // namespace matsec
