#pragma once

#include <atomic>
#include <map>
#include <string>

#include "qdual/qnum.hpp"

namespace qdual {

enum class VerdictKind { Unitary, NotUnitary, NoHermitianForm, UnknownAtCutoff };
const char* verdict_kind_str(VerdictKind k);

struct Witness {
  Weight ktype;
  std::string detail;  // path point / spin responsible for the violation
};

/// NotUnitary always carries a witness. Unitary verdicts from the K-type scan
/// are qualified by the cutoff; cutoff = -1 marks an exact rank-1 certificate
/// that is unbounded in the K-type direction.
struct UnitarityVerdict {
  VerdictKind kind = VerdictKind::UnknownAtCutoff;
  std::optional<Witness> witness;
  long cutoff = 0;
  long certified_ktypes = 0;
  std::string note;
};

/// prod_{k=|m|+1}^{s} (k - z)_{q_alpha} / (k + z)_{q_alpha} with
/// q_alpha = q^{alpha_len_sq/2}; the empty product (s = |m|) is 1. The
/// imaginary part of z is in units of 2 pi / |log q| (global q), converted
/// internally to the q_alpha scale.
QValue rank_one_eigenvalue(const QParam& q, const Rat& alpha_len_sq, const Rat& m, const Rat& s,
                           const ComplexScalar& z);

/// Determinant of the rank-one intertwiner on the multiplicity space of mu at
/// the weight lam along alpha_i: product of eigenvalues over the sl2 spin
/// content, with spin multiplicities as exponents.
QValue rank_one_det(const RootSystem& rs, const QParam& q, const Weight& mu, const Weight& lam,
                    int i, const ComplexScalar& z);

/// Determinant along a reduced word, composed right-to-left with parameter
/// transport: at each step z = (nu_cur, alpha_i^vee)/2, then
/// (lam, nu) <- (s_i lam, s_i nu). Reduced-word independent.
QValue intertwiner_det(const RootSystem& rs, const QParam& q, const Weight& mu,
                       const ParamPair& p, const WeylWord& word);

/// Symbolic factorization of intertwiner_det: total integer exponents of the
/// ratio factors (k - z)/(k + z), keyed by (k, z, root length). Equal maps
/// certify exactly equal determinant values.
struct FactorKey {
  Rat k, z_re, z_im, len_sq;
  bool operator<(const FactorKey& o) const;
  bool operator==(const FactorKey& o) const;
};
std::map<FactorKey, long> det_factor_map(const RootSystem& rs, const Weight& mu,
                                         const ParamPair& p, const WeylWord& word);

/// Exact rank-1 decision. cutoff only bounds the reported certificate count;
/// the sign pattern is provably eventually constant.
UnitarityVerdict signature_rank1(const QParam& q, const ParamPair& p, long cutoff);

// --- signature-continuity scan -------------------------------------------

/// One aggregated ratio factor (k - z_j(t))/(k + z_j(t)) of a K-type
/// determinant along the scan path, z_j(t) = b t + i c.
struct PathFactor {
  Rat k;       // k >= |m| + 1, half-integer
  Rat b;       // real slope; nonnegative after the chamber adjustment
  Rat c;       // imaginary coefficient, units of 2 pi / |log q|
  Rat len_sq;  // (beta_j, beta_j): the factor's q-number base is q^{len_sq/2}
  long exponent = 0;
};

struct KTypePlan {
  Weight mu;
  long dim = 0;  // ktype_multiplicity(mu, lambda)
  bool gate_ok = false;  // 1-dimensional or spin-multiplicity-free at every step
  std::vector<PathFactor> factors;
};

/// Immutable input of the per-K-type path analyses: shared by all workers.
struct ScanPlan {
  const RootSystem* rs = nullptr;
  QParam q{Rat(1)};
  ParamPair p;       // chamber-adjusted so nu.re is dominant
  WeylWord witness;  // reduced hermitian witness of the adjusted pair
  Weight minimal;    // minimal K-type of lambda
  std::vector<KTypePlan> ktypes;
  bool hermitian = false;
  long cutoff = 0;
};

/// Adjusts the pair inside its equivalence class so nu.re is dominant (this
/// makes every denominator factor strictly positive along the path), finds
/// the hermitian witness and precomputes per-K-type factor lists. Multiplicity
/// tables are prefetched here so the scan itself only reads shared state.
ScanPlan build_scan_plan(const RootSystem& rs, const QParam& q, const ParamPair& p, long cutoff);

struct KTypeReport {
  Weight mu;
  long dim = 0;
  bool gate_ok = false;
  int target_sign = 0;
  bool sign_change = false;
  bool interior_zero = false;
  std::optional<Rat> violation_t;  // first path point witnessing a violation
  std::string error;               // nonempty: this K-type could not be certified
};

/// Reference implementation: plain ordered loop over the plan's K-types.
std::vector<KTypeReport> scan_ktypes_serial(const ScanPlan& plan, long steps);

/// OpenMP kernel over K-types. Results are bitwise identical to the serial
/// reference (exact arithmetic, deterministic ordered merge); `cancel` is a
/// cooperative cancellation flag checked between K-types.
std::vector<KTypeReport> scan_ktypes_parallel(const ScanPlan& plan, long steps, int jobs,
                                              const std::atomic<bool>* cancel = nullptr);

/// Deterministic merge, ordered by K-type.
UnitarityVerdict merge_reports(const ScanPlan& plan, const std::vector<KTypeReport>& reports);

/// Signature continuity along the straight-line path from nu.re = 0 (unitary
/// base point) to the target. jobs = 1 runs the serial reference; jobs != 1
/// runs the OpenMP kernel (0 = all cores).
UnitarityVerdict unitarity_scan(const RootSystem& rs, const QParam& q, const ParamPair& p,
                                long cutoff, long steps, int jobs = 1);

struct CompareEntry {
  Rat q;
  UnitarityVerdict verdict;
};
struct CompareReport {
  std::vector<CompareEntry> entries;  // the given qs in order, classical 1 last
  bool all_certified_agree = true;    // over non-Unknown verdicts
};

CompareReport compare_q_classical(const RootSystem& rs, const ParamPair& p,
                                  const std::vector<QParam>& qs, long cutoff, long steps = 64);

/// Type A_{n-1} only: subtract from nu.im the lattice point that makes it
/// small. The unitarity question is invariant under the shift, so deciding at
/// the result answers the original.
ParamPair typeA_shift_reduce(int n, const QParam& q, const ParamPair& p);

}  // namespace qdual
