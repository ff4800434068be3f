#include "qdual/unitarity.hpp"

#include <tuple>

#include "qdual/errors.hpp"
#include "qdual/weights.hpp"
#include "qdual/weyl.hpp"

namespace qdual {

const char* verdict_kind_str(VerdictKind k) {
  switch (k) {
    case VerdictKind::Unitary: return "Unitary";
    case VerdictKind::NotUnitary: return "NotUnitary";
    case VerdictKind::NoHermitianForm: return "NoHermitianForm";
    case VerdictKind::UnknownAtCutoff: return "UnknownAtCutoff";
  }
  return "?";
}

bool FactorKey::operator<(const FactorKey& o) const {
  return std::tie(k, z_re, z_im, len_sq) < std::tie(o.k, o.z_re, o.z_im, o.len_sq);
}

bool FactorKey::operator==(const FactorKey& o) const {
  return std::tie(k, z_re, z_im, len_sq) == std::tie(o.k, o.z_re, o.z_im, o.len_sq);
}

namespace {

// Combines q *= f, propagating exactness: a product sign is exact only when
// every factor sign is; unit modulus only when every factor has it.
void accumulate(QValue& acc, const QValue& f, long exponent = 1) {
  if (exponent == 0) return;
  complex50 fe = f.value;
  for (long e = 1; e < exponent; ++e) fe *= f.value;
  acc.value *= fe;
  if (acc.exact_sign && f.exact_sign) {
    int s = *f.exact_sign;
    int se = (exponent % 2 == 0) ? (s == 0 ? 0 : 1) : s;
    acc.exact_sign = *acc.exact_sign * se;
  } else {
    acc.exact_sign.reset();
  }
  if (!(acc.is_unit_modulus && *acc.is_unit_modulus && f.is_unit_modulus && *f.is_unit_modulus))
    acc.is_unit_modulus.reset();
}

QValue one_value() {
  QValue v;
  v.value = complex50(1);
  v.exact_sign = 1;
  v.is_unit_modulus = true;
  return v;
}

}  // namespace

QValue rank_one_eigenvalue(const QParam& q, const Rat& alpha_len_sq, const Rat& m, const Rat& s,
                           const ComplexScalar& z) {
  Rat am = abs(m);
  if (s < am || !is_integer(s - m))
    throw DomainError("spin " + rat_str(s) + " incompatible with weight " + rat_str(m));
  Rat d = alpha_len_sq / 2;
  if (!is_integer(d) || sign_of(d) <= 0)
    throw DomainError("root length^2 must be a positive even integer, got " +
                      rat_str(alpha_len_sq));
  // In the classical degeneration the spectral parameter is used literally;
  // otherwise the imaginary unit 2 pi / |log q| rescales by d when passing to
  // q_alpha = q^d.
  QParam qa = q.classical() ? q : QParam(rat_pow(q.q, d));
  Rat yscale = q.classical() ? Rat(1) : d;

  QValue acc = one_value();
  if (sign_of(z.re) != 0) acc.is_unit_modulus.reset();
  for (Rat k = am + 1; k <= s; k += 1) {
    ComplexScalar num{k - z.re, -z.im * yscale};
    ComplexScalar den{k + z.re, z.im * yscale};
    if (qnum_is_zero(qa, den))
      throw PoleInDenominator("(" + rat_str(k) + " + z) vanishes at z = " + rat_str(z.re) +
                              " + i*" + rat_str(z.im));
    if (qnum_is_zero(qa, num)) {
      acc.value = complex50(0);
      acc.exact_sign = 0;
      return acc;
    }
    QValue nv = qnum(qa, num);
    QValue dv = qnum(qa, den);
    acc.value *= nv.value / dv.value;
    if (acc.exact_sign && nv.exact_sign && dv.exact_sign)
      acc.exact_sign = *acc.exact_sign * *nv.exact_sign * *dv.exact_sign;
    else
      acc.exact_sign.reset();
  }
  return acc;
}

QValue rank_one_det(const RootSystem& rs, const QParam& q, const Weight& mu, const Weight& lam,
                    int i, const ComplexScalar& z) {
  SpinMultiset spins = sl2_spin_content(rs, mu, lam, i);
  Rat len_sq = Rat(2) * rs.d[static_cast<std::size_t>(i - 1)];
  Rat m = lam[static_cast<std::size_t>(i - 1)] / 2;
  QValue acc = one_value();
  if (sign_of(z.re) != 0) acc.is_unit_modulus.reset();
  for (const auto& [s, mult] : spins.entries)
    accumulate(acc, rank_one_eigenvalue(q, len_sq, m, s, z), mult);
  return acc;
}

QValue intertwiner_det(const RootSystem& rs, const QParam& q, const Weight& mu,
                       const ParamPair& p, const WeylWord& word) {
  if (weyl_length(rs, word) != static_cast<long>(word.size()))
    throw NotReduced("word " + word_str(word) + " is not reduced");
  Weight lam = p.lambda;
  ComplexWeight nu = p.nu;
  QValue acc = one_value();
  // Rightmost letter acts first; the parameters are transported across each
  // applied reflection.
  for (std::size_t j = word.size(); j-- > 0;) {
    int i = word[j];
    std::size_t ix = static_cast<std::size_t>(i - 1);
    ComplexScalar z{nu.re[ix] / 2, nu.im[ix] / 2};
    accumulate(acc, rank_one_det(rs, q, mu, lam, i, z));
    lam = reflect(rs, i, lam);
    nu = reflect(rs, i, nu);
  }
  return acc;
}

std::map<FactorKey, long> det_factor_map(const RootSystem& rs, const Weight& mu,
                                         const ParamPair& p, const WeylWord& word) {
  if (weyl_length(rs, word) != static_cast<long>(word.size()))
    throw NotReduced("word " + word_str(word) + " is not reduced");
  Weight lam = p.lambda;
  ComplexWeight nu = p.nu;
  std::map<FactorKey, long> out;
  for (std::size_t j = word.size(); j-- > 0;) {
    int i = word[j];
    std::size_t ix = static_cast<std::size_t>(i - 1);
    Rat z_re = nu.re[ix] / 2;
    Rat z_im = nu.im[ix] / 2;
    Rat len_sq = Rat(2) * rs.d[ix];
    Rat m = lam[ix] / 2;
    SpinMultiset spins = sl2_spin_content(rs, mu, lam, i);
    for (const auto& [s, mult] : spins.entries)
      for (Rat k = abs(m) + 1; k <= s; k += 1) {
        long& e = out[FactorKey{k, z_re, z_im, len_sq}];
        e += mult;
        if (e == 0) out.erase(FactorKey{k, z_re, z_im, len_sq});
      }
    lam = reflect(rs, i, lam);
    nu = reflect(rs, i, nu);
  }
  return out;
}

UnitarityVerdict signature_rank1(const QParam& q, const ParamPair& p, long cutoff) {
  (void)q;  // every exact sign below is uniform over 0 < q <= 1
  const RootSystem& rs = root_system("A1");
  if (p.lambda.rank() != 1 || p.nu.re.rank() != 1 || p.nu.im.rank() != 1)
    throw WrongType("signature_rank1 expects rank-1 parameters");
  if (!is_integral(p.lambda)) throw NotDominant("lambda must be an integral weight");

  UnitarityVerdict v;
  v.cutoff = -1;  // every rank-1 verdict below is exact, not cutoff-bounded
  v.certified_ktypes = static_cast<long>(enumerate_ktypes(rs, p.lambda, Rat(cutoff)).size());

  if (!hermitian_exists(rs, p)) {
    v.kind = VerdictKind::NoHermitianForm;
    v.certified_ktypes = 0;
    return v;
  }

  Rat zr = abs(p.nu.re[0] / 2);
  if (sign_of(zr) == 0) {
    // Purely imaginary spectral parameter: every eigenvalue has unit modulus,
    // the invariant form is definite.
    v.kind = VerdictKind::Unitary;
    v.note = "unitary principal series";
    return v;
  }
  // A hermitian witness with nonzero nu.re forces lambda = 0 in rank 1: the
  // identity cannot negate nu.re and the simple reflection moves lambda.
  if (!is_zero(p.lambda)) throw EngineError("rank-1 hermitian pair with nonzero re and lambda");

  // Spherical case: the eigenvalue on the 2s omega_1 K-type is the real ratio
  // prod_{k=1}^{s} (k - zr)_q / (k + zr)_q after the root-of-unity phases of
  // numerator and denominator cancel.
  if (zr < 1) {
    v.kind = VerdictKind::Unitary;
    v.note = "complementary series";
    return v;
  }
  if (zr == 1) {
    v.kind = VerdictKind::Unitary;
    v.note = "form degenerates off the minimal K-type; the quotient is the trivial module";
    return v;
  }
  v.kind = VerdictKind::NotUnitary;
  Weight mu = Weight::zero(1);
  mu[0] = 2;
  v.witness = Witness{mu, "eigenvalue (1 - z)_q/(1 + z)_q < 0 at z = " + rat_str(zr)};
  return v;
}

ParamPair typeA_shift_reduce(int n, const QParam& q, const ParamPair& p) {
  (void)q;  // the shift is a lattice translation, uniform in q
  int rank = n - 1;
  if (n < 2 || p.lambda.rank() != rank || p.nu.re.rank() != rank || p.nu.im.rank() != rank)
    throw WrongType("typeA_shift_reduce expects A_{n-1} parameters");
  Weight shift = reduce_small_typeA(n, p.nu.im);
  ParamPair out = p;
  out.nu.im = p.nu.im - shift;
  return out;
}

}  // namespace qdual
