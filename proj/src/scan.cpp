#include <algorithm>
#include <map>
#include <tuple>
#include <vector>

#include "qdual/errors.hpp"
#include "qdual/unitarity.hpp"
#include "qdual/weights.hpp"
#include "qdual/weyl.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qdual {

namespace {

// Tolerance of the numeric branch (50-digit floats; mixed-phase factor ratios
// are O(1) and bounded away from 0, so twelve digits of slack is generous).
const real50& num_tol() {
  static const real50 t("1e-12");
  return t;
}

complex50 int_pow(const complex50& v, long e) {
  complex50 out(1);
  for (long i = 0; i < e; ++i) out *= v;
  return out;
}

// A factor's root-of-unity phases cancel between numerator and denominator
// exactly when they are +-1; then the ratio is sign(k - b t) times a positive
// real and every root of the determinant is rational.
bool phase_real(const QParam& q, const PathFactor& f) {
  if (q.classical()) return sign_of(f.c) == 0;
  return is_integer(f.c * f.len_sq);
}

// Value of (k - (bt + ic))_{q_alpha} / (k + (bt + ic))_{q_alpha} at rational t.
complex50 factor_ratio(const QParam& q, const PathFactor& f, const Rat& t) {
  Rat d = f.len_sq / 2;
  QParam qa = q.classical() ? q : QParam(rat_pow(q.q, d));
  Rat yscale = q.classical() ? Rat(1) : d;
  ComplexScalar num{f.k - f.b * t, -f.c * yscale};
  ComplexScalar den{f.k + f.b * t, f.c * yscale};
  return qnum(qa, num).value / qnum(qa, den).value;
}

struct SignEval {
  int sign = 0;
  std::string error;
};

// Sign of det(t)/det(0) at a rational t that is not a root: exact over the
// phase-real factors, 50-digit numerics over the rest. The product of the
// mixed-phase ratios, normalized at t = 0, is real by hermiticity along the
// path; its failure to look real is reported, never rounded away.
SignEval sign_at(const QParam& q, const KTypePlan& kp, const Rat& t, const complex50& norm) {
  SignEval out;
  int exact = 1;
  bool any_complex = false;
  complex50 numeric(1);
  for (const PathFactor& f : kp.factors) {
    if (phase_real(q, f)) {
      int fs = sign_of(f.k - f.b * t);
      if (fs == 0) {
        out.error = "exact factor vanishes at a sample point t = " + rat_str(t);
        return out;
      }
      if (f.exponent % 2 != 0 && fs < 0) exact = -exact;
    } else {
      any_complex = true;
      numeric *= int_pow(factor_ratio(q, f, t), f.exponent);
    }
  }
  if (!any_complex) {
    out.sign = exact;
    return out;
  }
  numeric /= norm;
  real50 re = numeric.real(), im = numeric.imag();
  real50 are = abs(re), aim = abs(im);
  real50 mag = are > 1 ? are : real50(1);
  if (aim > num_tol() * mag) {
    out.error = "determinant ratio is not real within tolerance at t = " + rat_str(t);
    return out;
  }
  if (are <= num_tol()) {
    out.error = "determinant ratio sign is ambiguous at t = " + rat_str(t);
    return out;
  }
  out.sign = (re > 0 ? exact : -exact);
  return out;
}

KTypeReport analyze_ktype(const ScanPlan& plan, const KTypePlan& kp, long steps) {
  KTypeReport rep;
  rep.mu = kp.mu;
  rep.dim = kp.dim;
  rep.gate_ok = kp.gate_ok;
  const QParam& q = plan.q;

  // Roots in (0, 1] come only from phase-real factors: k - b t = 0. The
  // denominators k + b t stay >= 1 on the whole path (k >= 1, b >= 0 after
  // the chamber adjustment), so no factor has a pole.
  std::map<Rat, long> roots;
  for (const PathFactor& f : kp.factors) {
    if (sign_of(f.b) < 0) throw EngineError("negative slope in a scan factor");
    if (!phase_real(q, f) || sign_of(f.b) == 0) continue;
    Rat t = f.k / f.b;
    if (t <= 1) roots[t] += f.exponent;
  }

  std::vector<Rat> bounds;
  bounds.push_back(Rat(0));
  for (const auto& [t, e] : roots) bounds.push_back(t);
  bool target_zero = !roots.empty() && std::prev(roots.end())->first == 1;
  if (!target_zero) bounds.push_back(Rat(1));
  rep.interior_zero = !roots.empty() && roots.begin()->first < 1;

  // Normalization det(0) of the mixed-phase part, shared by all evaluations.
  complex50 norm(1);
  for (const PathFactor& f : kp.factors)
    if (!phase_real(q, f)) norm *= int_pow(factor_ratio(q, f, Rat(0)), f.exponent);

  std::vector<int> seg_sign;
  for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
    Rat mid = (bounds[i] + bounds[i + 1]) / 2;
    SignEval se = sign_at(q, kp, mid, norm);
    if (!se.error.empty()) {
      rep.error = se.error;
      return rep;
    }
    seg_sign.push_back(se.sign);
  }
  if (seg_sign.empty() || seg_sign.front() != 1) {
    rep.error = "determinant ratio is not positive near the unitary base point";
    return rep;
  }

  for (std::size_t i = 0; i + 1 < seg_sign.size(); ++i)
    if (seg_sign[i] != seg_sign[i + 1]) {
      rep.sign_change = true;
      rep.violation_t = bounds[i + 1];
      break;
    }
  rep.target_sign = target_zero ? 0 : seg_sign.back();
  if (rep.target_sign < 0 && !rep.violation_t) rep.violation_t = Rat(1);

  // Cross-check the interval signs against direct sampling.
  for (long n = 1; n <= steps; ++n) {
    Rat t = Rat(n) / Rat(steps);
    if (roots.count(t)) continue;
    auto up = std::upper_bound(bounds.begin(), bounds.end(), t);
    std::size_t seg = static_cast<std::size_t>(up - bounds.begin()) - 1;
    if (seg >= seg_sign.size()) seg = seg_sign.size() - 1;
    SignEval se = sign_at(q, kp, t, norm);
    if (!se.error.empty()) {
      rep.error = se.error;
      return rep;
    }
    if (se.sign != seg_sign[seg]) {
      rep.error = "sampled sign disagrees with the interval sign at t = " + rat_str(t);
      return rep;
    }
  }
  return rep;
}

KTypeReport safe_analyze(const ScanPlan& plan, const KTypePlan& kp, long steps) {
  try {
    return analyze_ktype(plan, kp, steps);
  } catch (const std::exception& e) {
    KTypeReport rep;
    rep.mu = kp.mu;
    rep.dim = kp.dim;
    rep.gate_ok = kp.gate_ok;
    rep.error = e.what();
    return rep;
  }
}

}  // namespace

ScanPlan build_scan_plan(const RootSystem& rs, const QParam& q, const ParamPair& p, long cutoff) {
  if (cutoff < 0) throw DomainError("K-type cutoff must be nonnegative");
  if (p.lambda.rank() != rs.rank || p.nu.re.rank() != rs.rank || p.nu.im.rank() != rs.rank)
    throw DimensionMismatch("parameter rank does not match " + rs.label);
  if (!is_integral(p.lambda)) throw DomainError("lambda must be an integral weight");
  if (!is_almost_real(rs, p.nu)) throw DomainError("the scan requires an almost real nu");

  ScanPlan plan;
  plan.rs = &rs;
  plan.q = q;
  plan.cutoff = cutoff;

  // Move nu.re into the dominant chamber (transporting lambda and nu.im along)
  // so every factor slope below is nonnegative and the path is pole-free.
  auto [dre, wd] = dominant_representative(rs, p.nu.re);
  plan.p.lambda = apply_word(rs, wd, p.lambda);
  plan.p.nu = ComplexWeight{dre, apply_word(rs, wd, p.nu.im)};

  auto h = hermitian_exists(rs, plan.p);
  if (!h) return plan;
  plan.hermitian = true;
  plan.witness = *h;
  plan.minimal = minimal_ktype(rs, plan.p.lambda);

  std::vector<Weight> mus = enumerate_ktypes(rs, plan.p.lambda, Rat(cutoff));
  // Multiplicity tables are built here, before any parallel region; the scan
  // kernels then only read shared immutable state.
  for (const Weight& mu : mus) prefetch_multiplicities(rs, mu);

  for (const Weight& mu : mus) {
    KTypePlan kp;
    kp.mu = mu;
    kp.dim = ktype_multiplicity(rs, mu, plan.p.lambda);
    bool spin_free = true;
    std::map<std::tuple<Rat, Rat, Rat, Rat>, long> agg;
    Weight lam = plan.p.lambda;
    Weight re = plan.p.nu.re;
    Weight im = plan.p.nu.im;
    for (std::size_t j = plan.witness.size(); j-- > 0;) {
      int i = plan.witness[j];
      std::size_t ix = static_cast<std::size_t>(i - 1);
      Rat m = lam[ix] / 2;
      Rat b = re[ix] / 2;
      Rat c = im[ix] / 2;
      Rat len_sq = Rat(2) * rs.d[ix];
      SpinMultiset spins = sl2_spin_content(rs, mu, lam, i);
      for (const auto& [s, mult] : spins.entries) {
        if (mult > 1) spin_free = false;
        for (Rat k = abs(m) + 1; k <= s; k += 1) agg[{k, b, c, len_sq}] += mult;
      }
      lam = reflect(rs, i, lam);
      re = reflect(rs, i, re);
      im = reflect(rs, i, im);
    }
    kp.gate_ok = (kp.dim == 1) || spin_free;
    for (const auto& [key, e] : agg)
      kp.factors.push_back(
          PathFactor{std::get<0>(key), std::get<1>(key), std::get<2>(key), std::get<3>(key), e});
    plan.ktypes.push_back(std::move(kp));
  }
  return plan;
}

std::vector<KTypeReport> scan_ktypes_serial(const ScanPlan& plan, long steps) {
  if (steps < 1) throw DomainError("steps must be positive");
  std::vector<KTypeReport> out;
  out.reserve(plan.ktypes.size());
  for (const KTypePlan& kp : plan.ktypes) out.push_back(safe_analyze(plan, kp, steps));
  return out;
}

std::vector<KTypeReport> scan_ktypes_parallel(const ScanPlan& plan, long steps, int jobs,
                                              const std::atomic<bool>* cancel) {
  if (steps < 1) throw DomainError("steps must be positive");
  std::vector<KTypeReport> out(plan.ktypes.size());
  long n = static_cast<long>(plan.ktypes.size());
#ifdef _OPENMP
  int nthreads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
#else
  (void)jobs;
#endif
  for (long i = 0; i < n; ++i) {
    std::size_t ix = static_cast<std::size_t>(i);
    if (cancel && cancel->load(std::memory_order_relaxed)) {
      out[ix].mu = plan.ktypes[ix].mu;
      out[ix].dim = plan.ktypes[ix].dim;
      out[ix].gate_ok = plan.ktypes[ix].gate_ok;
      out[ix].error = "cancelled";
      continue;
    }
    out[ix] = safe_analyze(plan, plan.ktypes[ix], steps);
  }
  return out;
}

UnitarityVerdict merge_reports(const ScanPlan& plan, const std::vector<KTypeReport>& reports) {
  UnitarityVerdict v;
  v.cutoff = plan.cutoff;
  if (!plan.hermitian) {
    v.kind = VerdictKind::NoHermitianForm;
    return v;
  }

  for (const KTypeReport& r : reports)
    if (r.error.empty() && !r.sign_change && r.target_sign > 0 && r.gate_ok &&
        (!r.interior_zero || r.dim == 1))
      ++v.certified_ktypes;

  // A certified violation settles the question regardless of errors elsewhere.
  // K-types whose determinant vanishes at the target carry no signature there:
  // they fall into the radical of the form and are judged by the degenerate
  // branch below, not by their path history.
  for (const KTypeReport& r : reports) {
    if (!r.error.empty()) continue;
    if (r.target_sign == 0) continue;
    if (r.sign_change || r.target_sign < 0) {
      v.kind = VerdictKind::NotUnitary;
      std::string detail = r.violation_t
                               ? "determinant changes sign at t = " + rat_str(*r.violation_t)
                               : "determinant negative at the target";
      v.witness = Witness{r.mu, detail};
      return v;
    }
  }
  for (const KTypeReport& r : reports)
    if (!r.error.empty()) {
      v.kind = VerdictKind::UnknownAtCutoff;
      v.note = "K-type " + weight_str(r.mu) + ": " + r.error;
      return v;
    }

  std::vector<const KTypeReport*> zeros;
  for (const KTypeReport& r : reports)
    if (r.target_sign == 0) zeros.push_back(&r);

  if (zeros.empty()) {
    for (const KTypeReport& r : reports) {
      if (!r.gate_ok) {
        v.kind = VerdictKind::UnknownAtCutoff;
        v.note = "multiplicity space of K-type " + weight_str(r.mu) +
                 " is not certified multiplicity-free";
        return v;
      }
      if (r.interior_zero && r.dim > 1) {
        v.kind = VerdictKind::UnknownAtCutoff;
        v.note = "interior determinant zero on the higher-multiplicity K-type " + weight_str(r.mu);
        return v;
      }
    }
    v.kind = VerdictKind::Unitary;
    v.note = "signature constant along the deformation path";
    return v;
  }

  // Degenerate target: if the form dies on every K-type except the minimal
  // one, the quotient is supported on the minimal K-type and is unitary.
  bool minimal_positive = false;
  bool nonminimal_all_zero = true;
  for (const KTypeReport& r : reports) {
    if (r.mu == plan.minimal)
      minimal_positive = (r.target_sign > 0);
    else if (r.target_sign != 0)
      nonminimal_all_zero = false;
  }
  if (minimal_positive && nonminimal_all_zero) {
    v.kind = VerdictKind::Unitary;
    v.note = "form degenerates off the minimal K-type; the quotient is unitary";
    return v;
  }
  v.kind = VerdictKind::UnknownAtCutoff;
  v.note = "determinant vanishes at the target on K-type " + weight_str(zeros.front()->mu);
  return v;
}

UnitarityVerdict unitarity_scan(const RootSystem& rs, const QParam& q, const ParamPair& p,
                                long cutoff, long steps, int jobs) {
  ScanPlan plan = build_scan_plan(rs, q, p, cutoff);
  std::vector<KTypeReport> reports;
  if (plan.hermitian)
    reports = (jobs == 1) ? scan_ktypes_serial(plan, steps)
                          : scan_ktypes_parallel(plan, steps, jobs);
  return merge_reports(plan, reports);
}

CompareReport compare_q_classical(const RootSystem& rs, const ParamPair& p,
                                  const std::vector<QParam>& qs, long cutoff, long steps) {
  CompareReport rep;
  auto decide = [&](const QParam& q) {
    if (rs.label == "A1") return signature_rank1(q, p, cutoff);
    return unitarity_scan(rs, q, p, cutoff, steps, 1);
  };
  bool saw_classical = false;
  for (const QParam& q : qs) {
    if (q.classical()) saw_classical = true;
    rep.entries.push_back(CompareEntry{q.q, decide(q)});
  }
  if (!saw_classical) rep.entries.push_back(CompareEntry{Rat(1), decide(QParam(Rat(1)))});

  std::optional<VerdictKind> kind;
  for (const CompareEntry& e : rep.entries) {
    if (e.verdict.kind == VerdictKind::UnknownAtCutoff) continue;
    if (!kind)
      kind = e.verdict.kind;
    else if (*kind != e.verdict.kind)
      rep.all_certified_agree = false;
  }
  return rep;
}

}  // namespace qdual
