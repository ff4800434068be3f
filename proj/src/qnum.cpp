#include "qdual/qnum.hpp"

#include <boost/math/constants/constants.hpp>

namespace qdual {

real50 to_real50(const Rat& r) {
  return real50(r.get_num().get_str()) / real50(r.get_den().get_str());
}

namespace {

// e^{-2 pi i y} for rational y; +-1 are produced exactly.
complex50 unit_phase(const Rat& y) {
  Rat f = frac_part(y);
  if (f == 0) return complex50(1);
  if (f == Rat(1, 2)) return complex50(-1);
  real50 theta = 2 * boost::math::constants::pi<real50>() * to_real50(f);
  return complex50(cos(theta), -sin(theta));
}

}  // namespace

bool qnum_is_zero(const QParam& q, const ComplexScalar& t) {
  if (q.classical()) return t.re == 0 && t.im == 0;
  return t.re == 0 && is_integer(2 * t.im);
}

std::optional<int> qnum_exact_sign(const QParam& q, const ComplexScalar& t) {
  if (q.classical()) {
    if (t.im != 0) return std::nullopt;
    return sign_of(t.re);
  }
  if (!is_integer(2 * t.im)) return std::nullopt;  // phase is not +-1: value not real
  int s = sign_of(t.re);
  return is_integer(t.im) ? s : -s;
}

QValue qnum(const QParam& q, const ComplexScalar& t) {
  QValue out;
  if (q.classical()) {
    out.value = complex50(to_real50(t.re), to_real50(t.im));
    if (t.im == 0) out.exact_sign = sign_of(t.re);
    return out;
  }
  if (qnum_is_zero(q, t)) {
    out.value = complex50(0);
    out.exact_sign = 0;
    return out;
  }
  real50 b = to_real50(q.q);
  real50 bt = pow(b, to_real50(t.re));
  complex50 phi = unit_phase(t.im);
  real50 den = b - 1 / b;
  out.value = (bt * phi - (1 / bt) * conj(phi)) / den;
  out.exact_sign = qnum_exact_sign(q, t);
  return out;
}

QValue qnum(const QParam& q, const Rat& t) { return qnum(q, ComplexScalar{t, Rat(0)}); }

}  // namespace qdual
