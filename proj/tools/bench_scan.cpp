// Benchmarks the K-type scan: serial reference vs the OpenMP kernel on the
// same plan, verifying that the reports agree field-for-field before timing
// is trusted. Usage: bench_scan [label] [cutoff] [steps]

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "qdual/unitarity.hpp"

using namespace qdual;

namespace {

bool reports_equal(const std::vector<KTypeReport>& a, const std::vector<KTypeReport>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const KTypeReport &x = a[i], &y = b[i];
    if (x.mu != y.mu || x.dim != y.dim || x.gate_ok != y.gate_ok ||
        x.target_sign != y.target_sign || x.sign_change != y.sign_change ||
        x.interior_zero != y.interior_zero || x.violation_t != y.violation_t ||
        x.error != y.error)
      return false;
  }
  return true;
}

template <typename F>
double time_ms(F&& f, int reps) {
  auto t0 = std::chrono::steady_clock::now();
  for (int r = 0; r < reps; ++r) f();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

}  // namespace

int main(int argc, char** argv) {
  std::string label = argc > 1 ? argv[1] : "B2";
  if (label == "-h" || label == "--help") {
    std::cout << "usage: bench_scan [label] [cutoff] [steps]   (default: B2 16 256)\n";
    return 0;
  }
  long cutoff = argc > 2 ? std::atol(argv[2]) : 16;
  long steps = argc > 3 ? std::atol(argv[3]) : 256;

  const RootSystem& rs = root_system(label);
  // Spherical pair with a generic real part: the hermitian witness exists for
  // every real nu when lambda = 0 in types with w0 = -1 (B2 default).
  Weight re = Weight::zero(rs.rank);
  for (int i = 0; i < rs.rank; ++i) re[i] = Rat(1, 2 + i);
  ParamPair p{Weight::zero(rs.rank), ComplexWeight{re, Weight::zero(rs.rank)}};
  QParam q(Rat(1, 2));

  ScanPlan plan = build_scan_plan(rs, q, p, cutoff);
  if (!plan.hermitian) {
    std::cerr << "no hermitian form at the benchmark point; nothing to scan\n";
    return 1;
  }
  std::cout << label << ": " << plan.ktypes.size() << " K-types, cutoff " << cutoff << ", steps "
            << steps << "\n";

  std::vector<KTypeReport> serial, parallel;
  double ts = time_ms([&] { serial = scan_ktypes_serial(plan, steps); }, 3);
  double tp = time_ms([&] { parallel = scan_ktypes_parallel(plan, steps, 0); }, 3);

  if (!reports_equal(serial, parallel)) {
    std::cerr << "MISMATCH between serial and parallel reports\n";
    return 1;
  }
  UnitarityVerdict v = merge_reports(plan, serial);
  std::cout << "serial   " << ts << " ms\n";
  std::cout << "parallel " << tp << " ms\n";
  std::cout << "speedup  " << (tp > 0 ? ts / tp : 0.0) << "x\n";
  std::cout << "verdict  " << verdict_kind_str(v.kind) << " (certified " << v.certified_ktypes
            << " K-types)\n";
  return 0;
}
