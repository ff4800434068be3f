#pragma once

#include <boost/multiprecision/cpp_complex.hpp>

#include <optional>

#include "qdual/params.hpp"

namespace qdual {

/// Working precision for numeric values: verdicts never depend on these, all
/// sign and zero decisions are taken in exact rational arithmetic first.
using real50 = boost::multiprecision::cpp_bin_float_50;
using complex50 = boost::multiprecision::cpp_complex_50;

real50 to_real50(const Rat& r);

/// Spectral parameter t = re + i * im * (2 pi / |log q|), with q the base the
/// scalar is evaluated against. At q = 1 the unit degenerates and im is the
/// literal imaginary part.
struct ComplexScalar {
  Rat re;
  Rat im;
  bool real() const { return im == 0; }
};

struct QValue {
  complex50 value;
  /// Present whenever the value is provably real (exact phase analysis); it
  /// is then authoritative for the engine's decisions.
  std::optional<int> exact_sign;
  /// Present on ratio-type values with purely imaginary spectral parameter.
  std::optional<bool> is_unit_modulus;
};

/// Exact predicate: (t)_q = 0 iff q^{2t} = 1, i.e. t.re = 0 and 2 * t.im is an
/// integer (at q = 1: t = 0).
bool qnum_is_zero(const QParam& q, const ComplexScalar& t);

/// When the phase e^{-2 pi i t.im} is +-1 the value is real and its sign is
/// computed exactly; returns the sign, or nullopt when the value is not
/// provably real.
std::optional<int> qnum_exact_sign(const QParam& q, const ComplexScalar& t);

/// (t)_q = (q^t - q^{-t})/(q - q^{-1}) for q < 1; the limit value t at q = 1.
/// The imaginary part of t contributes an exact root of unity e^{-2 pi i t.im}
/// to q^t, so all zero/pole classification is rational.
QValue qnum(const QParam& q, const ComplexScalar& t);
QValue qnum(const QParam& q, const Rat& t);

}  // namespace qdual
