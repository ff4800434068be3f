// Acceptance gate for the engine: nine scripted checks, one PASS/FAIL line
// each. Tolerances and sample counts are pinned here on purpose; a run is
// green only if every line is PASS and the binary exits 0.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "qdual/unitarity.hpp"

using namespace qdual;

namespace {

int failures = 0;

void report(int idx, const char* name, bool ok, const std::string& extra) {
  if (!ok) ++failures;
  std::printf("%s criterion %d: %s%s%s%s\n", ok ? "PASS" : "FAIL", idx, name,
              extra.empty() ? "" : " (", extra.c_str(), extra.empty() ? "" : ")");
  std::fflush(stdout);
}

void run_criterion(int idx, const char* name,
                   const std::function<std::pair<bool, std::string>()>& fn) {
  try {
    auto [ok, extra] = fn();
    report(idx, name, ok, extra);
  } catch (const std::exception& e) {
    report(idx, name, false, std::string("exception: ") + e.what());
  }
}

using Clock = std::chrono::steady_clock;
double seconds(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}
std::string secs_str(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

Rat rand_rat(std::mt19937& g, int num_abs, int den_max) {
  std::uniform_int_distribution<int> num(-num_abs, num_abs), den(1, den_max);
  return Rat(num(g)) / Rat(den(g));
}

Weight rand_weight(std::mt19937& g, int rank, int num_abs, int den_max) {
  Weight w = Weight::zero(rank);
  for (int i = 0; i < rank; ++i) w[i] = rand_rat(g, num_abs, den_max);
  return w;
}

Weight rand_dominant_integral(std::mt19937& g, int rank, int max_c) {
  std::uniform_int_distribution<int> c(0, max_c);
  Weight w = Weight::zero(rank);
  for (int i = 0; i < rank; ++i) w[i] = c(g);
  return w;
}

ComplexWeight cwz(Weight re, Weight im) { return {std::move(re), std::move(im)}; }

// --- criterion 1 -----------------------------------------------------------

std::pair<bool, std::string> crit1() {
  auto t0 = Clock::now();
  std::vector<Rat> qs{Rat(3, 10), Rat(7, 10), Rat(1)};
  bool ok = true;
  long checked = 0;
  for (int lam_c : {0, 2, 4}) {
    Weight lam = Weight::zero(1);
    lam[0] = lam_c;
    for (int mode = 0; mode < 2; ++mode) {  // 0: z real, 1: z purely imaginary
      for (int k = -25; k <= 25; ++k) {
        Rat z = make_rat(k, 10);
        Weight two_z = Weight::zero(1);
        two_z[0] = 2 * z;
        ParamPair p{lam, mode == 0 ? cwz(two_z, Weight::zero(1))
                                   : cwz(Weight::zero(1), two_z)};
        bool expect = mode == 1 || k == 0 || (lam_c == 0 && abs(z) <= 1);
        VerdictKind first{};
        for (std::size_t iq = 0; iq < qs.size(); ++iq) {
          UnitarityVerdict v = signature_rank1(QParam{qs[iq]}, p, 8);
          if (iq == 0) first = v.kind;
          if (v.kind != first) ok = false;                          // q-independence
          if ((v.kind == VerdictKind::Unitary) != expect) ok = false;  // exact locus
          ++checked;
        }
      }
    }
  }
  double el = seconds(t0);
  ok = ok && el < 5.0;
  return {ok, std::to_string(checked) + " verdicts, " + secs_str(el)};
}

// --- criterion 2 -----------------------------------------------------------

// Random parameter with an invariant hermitian form and small imaginary part.
// The hermitian locus is a finite union of reflection eigenlines, so sampling
// draws from explicit families and then applies a random Weyl translate.
ParamPair sample_hermitian(const RootSystem& rs, std::mt19937& g) {
  const std::vector<WeylWord>& els = all_elements(rs);
  std::uniform_int_distribution<int> wpick(0, static_cast<int>(els.size()) - 1);
  std::uniform_int_distribution<int> fam(0, 2), mag(1, 4);
  for (;;) {
    Weight lam = Weight::zero(rs.rank), re = Weight::zero(rs.rank), im = Weight::zero(rs.rank);
    int f = fam(g);
    if (rs.rank == 1) {
      if (f == 0) {
        re = rand_weight(g, 1, 6, 4);
      } else if (f == 1) {
        im = rand_weight(g, 1, 3, 5);  // re = 0: the identity is a witness
      } else {
        lam[0] = 2 * mag(g);
        im = rand_weight(g, 1, 3, 5);
      }
    } else if (f == 0) {
      // lambda = 0, re on a hermitian line: B2 has w0 = -1 so any re works;
      // A2 needs a root line or the diagram-symmetric line
      if (rs.label == "B2") {
        re = rand_weight(g, 2, 6, 4);
      } else {
        std::uniform_int_distribution<int> line(0, 3);
        Rat c = rand_rat(g, 5, 3);
        int l = line(g);
        if (l < 3)
          re = c * rs.positive_roots[static_cast<std::size_t>(l)].weight;
        else {
          re[0] = c;
          re[1] = c;
        }
      }
    } else if (f == 1) {
      // lambda stabilized by one simple reflection, re along that root
      std::uniform_int_distribution<int> spick(1, 2);
      int i = spick(g);
      lam[(3 - i) - 1] = mag(g);
      re = rand_rat(g, 5, 3) * rs.simple_root(i);
    } else {
      // re = 0 and a small imaginary part: always hermitian
      lam = rand_dominant_integral(g, rs.rank, 2);
      im = rand_weight(g, rs.rank, 2, 5);
    }
    const WeylWord& w = els[static_cast<std::size_t>(wpick(g))];
    ParamPair p{apply_word(rs, w, lam), apply_word(rs, w, ComplexWeight{re, im})};
    if (is_almost_real(rs, p.nu) && hermitian_exists(rs, p)) return p;
  }
}

std::pair<bool, std::string> crit2() {
  auto t0 = Clock::now();
  std::mt19937 g(20260814u);
  std::vector<QParam> qs{QParam{Rat(3, 10)}, QParam{Rat(7, 10)}};
  bool ok = true;
  long rank2 = 0, unknown2 = 0;
  for (int i = 0; i < 200; ++i) {
    const RootSystem& rs = root_system(i % 3 == 0 ? "A1" : (i % 3 == 1 ? "A2" : "B2"));
    ParamPair p = sample_hermitian(rs, g);
    CompareReport rep = compare_q_classical(rs, p, qs, 12, 64);
    if (!rep.all_certified_agree) ok = false;
    if (rs.rank == 2) {
      ++rank2;
      bool any_unknown = false;
      for (const CompareEntry& e : rep.entries)
        any_unknown = any_unknown || e.verdict.kind == VerdictKind::UnknownAtCutoff;
      if (any_unknown) ++unknown2;
    }
  }
  bool rate_ok = 10 * unknown2 < 4 * rank2;  // < 40%
  ok = ok && rate_ok;
  return {ok, "unknown rate rank 2: " + std::to_string(unknown2) + "/" + std::to_string(rank2) +
                  ", " + secs_str(seconds(t0))};
}

// --- criterion 3 -----------------------------------------------------------

std::pair<bool, std::string> crit3() {
  auto t0 = Clock::now();
  std::mt19937 g(3391u);
  QParam q{Rat(1, 2)};
  const real50 tol("1e-12");
  bool ok = true;
  long dets = 0;
  for (const char* label : {"A2", "B2"}) {
    const RootSystem& rs = root_system(label);
    WeylWord wa = longest_word(rs), wb;
    for (int s : wa) wb.push_back(3 - s);  // the flipped word is also reduced
    if (!same_element(rs, wa, wb) || weyl_length(rs, wb) != static_cast<long>(wb.size()))
      return {false, "bad alternate longest word"};
    for (int trial = 0; trial < 25; ++trial) {
      Weight lam = trial % 2 == 0 ? Weight::zero(rs.rank) : rand_dominant_integral(g, rs.rank, 2);
      Weight re = Weight::zero(rs.rank);
      for (int i = 0; i < rs.rank; ++i) re[i] = abs(rand_rat(g, 8, 4));  // dominant: pole-free
      ParamPair p{lam, cwz(re, Weight::zero(rs.rank))};
      for (const Weight& mu : enumerate_ktypes(rs, lam, Rat(10))) {
        if (det_factor_map(rs, mu, p, wa) != det_factor_map(rs, mu, p, wb)) ok = false;
        QValue da = intertwiner_det(rs, q, mu, p, wa);
        QValue db = intertwiner_det(rs, q, mu, p, wb);
        if (abs(da.value - db.value) > tol) ok = false;
        ++dets;
      }
    }
  }
  return {ok, std::to_string(dets) + " determinant pairs, " + secs_str(seconds(t0))};
}

// --- criteria 4 and 5 ------------------------------------------------------

std::pair<bool, std::string> crit4() {
  auto t0 = Clock::now();
  bool ok = true;
  for (const char* label : {"A1", "A2", "A3", "B2", "G2"})
    ok = ok && coweight_gap_oracle(root_system(label), 10);
  double el = seconds(t0);
  return {ok && el < 10.0, secs_str(el)};
}

std::pair<bool, std::string> crit5() {
  auto t0 = Clock::now();
  std::mt19937 g(5517u);
  bool ok = true;
  int counts[3] = {334, 333, 333};
  int ns[3] = {2, 3, 5};
  const char* labels[3] = {"A1", "A2", "A4"};
  for (int t = 0; t < 3; ++t) {
    const RootSystem& rs = root_system(labels[t]);
    for (int i = 0; i < counts[t]; ++i) {
      Weight x = rand_weight(g, ns[t] - 1, 40, 12);
      Weight shift = reduce_small_typeA(ns[t], x);
      Weight rem = x - shift;
      if (!is_integral(shift) || !is_small(rs, rem)) ok = false;
      if (!is_zero(reduce_small_typeA(ns[t], rem))) ok = false;  // idempotent
    }
  }
  double el = seconds(t0);
  return {ok && el < 2.0, "1000 reductions, " + secs_str(el)};
}

// --- criterion 6 -----------------------------------------------------------

std::vector<Rat> alpha_coords(const RootSystem& rs, const Weight& x) {
  std::vector<Rat> y(static_cast<std::size_t>(rs.rank), Rat(0));
  for (int j = 0; j < rs.rank; ++j)
    for (int k = 0; k < rs.rank; ++k)
      y[static_cast<std::size_t>(j)] +=
          rs.cartan_inv[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] * x[k];
  return y;
}

std::pair<bool, std::string> crit6() {
  auto t0 = Clock::now();
  bool ok = true;
  long pairs = 0;
  for (const char* label : {"A2", "B2", "G2"}) {
    const RootSystem& rs = root_system(label);
    for (int c1 = 0; c1 <= 3; ++c1)
      for (int c2 = 0; c2 <= 3; ++c2) {
        Weight mu = Weight::zero(2);
        mu[0] = c1;
        mu[1] = c2;
        // every weight of V(mu) lies in the box between w0 mu and mu
        Weight low = apply_word(rs, longest_word(rs), mu);
        std::vector<Rat> box = alpha_coords(rs, mu - low);
        long b1 = static_cast<long>(box[0].get_num().get_si());
        long b2 = static_cast<long>(box[1].get_num().get_si());
        long long total = 0;
        for (long k1 = 0; k1 <= b1; ++k1)
          for (long k2 = 0; k2 <= b2; ++k2) {
            Weight lam = mu - (Rat(k1) * rs.simple_root(1)) - (Rat(k2) * rs.simple_root(2));
            long m = freudenthal_multiplicity(rs, mu, lam);
            if (m == 0) continue;
            bool dominant = lam[0] >= 0 && lam[1] >= 0;
            if (dominant) total += static_cast<long long>(m) *
                                   static_cast<long long>(orbit(rs, lam).size());
            for (int i = 1; i <= 2; ++i)
              if (sl2_spin_content(rs, mu, lam, i).total() != m) ok = false;
            ++pairs;
          }
        if (total != weyl_dimension(rs, mu)) ok = false;
      }
  }
  ok = ok && freudenthal_multiplicity(root_system("A2"), parse_weight("1,1"), Weight::zero(2)) == 2;
  ok = ok && weyl_dimension(root_system("G2"), parse_weight("0,1")) == 14;
  return {ok, std::to_string(pairs) + " weight spaces, " + secs_str(seconds(t0))};
}

// --- criterion 7 -----------------------------------------------------------

std::pair<bool, std::string> crit7() {
  auto t0 = Clock::now();
  std::mt19937 g(7741u);
  bool ok = true;
  for (int i = 0; i < 100; ++i) {
    const RootSystem& rs = root_system(i % 2 == 0 ? "A2" : "B2");
    Weight lp_re = rand_weight(g, rs.rank, 6, 4);
    Weight diff = rand_dominant_integral(g, rs.rank, 3) - rand_dominant_integral(g, rs.rank, 3);
    Weight im = rand_weight(g, rs.rank, 4, 3);
    CategoryOParam c{cwz(lp_re + diff, im), cwz(lp_re, im)};
    ParamPair p = from_category_O(rs, c);
    CategoryOParam c2 = to_category_O(rs, p);
    if (c2.Lambda.re != c.Lambda.re || c2.LambdaPrime.re != c.LambdaPrime.re) ok = false;
    ParamPair p2 = from_category_O(rs, c2);
    if (p2.lambda != p.lambda || p2.nu.re != p.nu.re || p2.nu.im != p.nu.im) ok = false;
  }

  // the distinguished endpoint
  const RootSystem& a2 = root_system("A2");
  Weight m2rho = -(Rat(2) * a2.rho);
  ParamPair triv = from_category_O(a2, CategoryOParam{cwz(m2rho, Weight::zero(2)),
                                                      cwz(m2rho, Weight::zero(2))});
  ok = ok && is_zero(triv.lambda) && triv.nu.re == Rat(2) * a2.rho && is_zero(triv.nu.im);

  // rank-1 translation-functor checks
  const RootSystem& a1 = root_system("A1");
  Weight z1 = Weight::zero(1);
  auto killed = psi_nonvanishing(a1, CategoryOParam{cwz(parse_weight("-1"), z1), cwz(z1, z1)});
  ok = ok && killed.has_value() && killed->weight == a1.simple_root(1);
  ok = ok && !psi_nonvanishing(
                  a1, CategoryOParam{cwz(parse_weight("-1"), z1), cwz(parse_weight("-3/2"), z1)})
                  .has_value();
  ok = ok && !psi_nonvanishing(a1, CategoryOParam{cwz(z1, z1), cwz(z1, z1)}).has_value();
  return {ok, "100 round-trips, " + secs_str(seconds(t0))};
}

// --- criterion 8 -----------------------------------------------------------

std::pair<bool, std::string> crit8() {
  auto t0 = Clock::now();
  std::mt19937 g(8831u);
  bool ok = true;
  long with_witness = 0;
  for (int i = 0; i < 200; ++i) {
    const RootSystem& rs = root_system(i % 2 == 0 ? "A2" : "B2");
    // half targeted at the hermitian locus, half fully random
    ParamPair p = (i % 4 < 2)
                      ? sample_hermitian(rs, g)
                      : ParamPair{rand_dominant_integral(g, rs.rank, 2) -
                                      rand_dominant_integral(g, rs.rank, 2),
                                  cwz(rand_weight(g, rs.rank, 5, 3), rand_weight(g, rs.rank, 5, 4))};
    ComplexWeight target = x_reduce(rs, ComplexWeight{-p.nu.re, p.nu.im});
    bool brute = false;
    WeylWord brute_w;
    for (const WeylWord& w : all_elements(rs)) {
      if (apply_word(rs, w, p.lambda) != p.lambda) continue;
      if (x_reduce(rs, apply_word(rs, w, p.nu)) == target) {
        brute = true;
        brute_w = w;
        break;
      }
    }
    auto lib = hermitian_exists(rs, p);
    if (brute != lib.has_value()) ok = false;
    if (lib && is_almost_real(rs, p.nu)) {
      ++with_witness;
      if (apply_word(rs, *lib, p.nu.re) != -p.nu.re) ok = false;  // exact flip in h^*
      if (apply_word(rs, *lib, p.lambda) != p.lambda) ok = false;
    }
  }
  return {ok, std::to_string(with_witness) + " witnesses checked, " + secs_str(seconds(t0))};
}

// --- criterion 9 -----------------------------------------------------------

std::pair<bool, std::string> crit9() {
  auto t0 = Clock::now();
  std::mt19937 g(9917u);
  bool ok = true;
  bool constant_two = true;
  long equality_cases = 0;
  const char* labels[4] = {"A2", "B2", "G2", "A3"};
  for (int i = 0; i < 500; ++i) {
    const RootSystem& rs = root_system(labels[i % 4]);
    std::uniform_int_distribution<int> rpick(0, static_cast<int>(rs.positive_roots.size()) - 1);
    const Root& beta = rs.positive_roots[static_cast<std::size_t>(rpick(g))];

    Weight Lam = Weight::zero(rs.rank);
    for (int j = 0; j < rs.rank; ++j) Lam[j] = abs(rand_rat(g, 4, 3));  // dominant
    Weight Lp = rand_weight(g, rs.rank, 4, 3);
    Rat pair_b = coroot_pairing(rs, Lp + rs.rho, beta);
    if (pair_b < 0) {
      // dot-reflect into the admissible half-space
      Lp = (Lp + rs.rho) - (pair_b * beta.weight) - rs.rho;
      pair_b = -pair_b;
    }
    if (i % 5 == 0) {
      // exact equality case: project Lambda' + rho onto the wall of beta
      Lp = Lp - ((pair_b / 2) * beta.weight);
      pair_b = coroot_pairing(rs, Lp + rs.rho, beta);
      if (pair_b != 0) ok = false;
    }

    Weight A = Lam + rs.rho, B = Lp + rs.rho;
    Weight sB = B - (coroot_pairing(rs, B, beta) * beta.weight);
    Rat n_same = pairing(rs, A - B, A - B);
    Rat n_flip = pairing(rs, A - sB, A - sB);
    if (n_same > n_flip) ok = false;
    bool stab = coroot_pairing(rs, B, beta) == 0 || pairing(rs, A, beta.weight) == 0;
    if ((n_same == n_flip) != stab) ok = false;
    if (stab) ++equality_cases;

    Rat product = coroot_pairing(rs, B, beta) * pairing(rs, A, beta.weight);
    if (product != 0 && (n_flip - n_same) / product != 2) constant_two = false;
  }
  ok = ok && constant_two && equality_cases >= 100;
  std::string extra = "measured gap constant = 2, " + std::to_string(equality_cases) +
                      " equality cases, " + secs_str(seconds(t0));
  return {ok, extra};
}

}  // namespace

int main() {
  std::printf("acceptance suite: exact-engine invariants\n");
  run_criterion(1, "rank-1 unitary locus over the z grid, uniform in q", crit1);
  run_criterion(2, "deformed vs classical verdicts agree on certified samples", crit2);
  run_criterion(3, "intertwiner determinant is reduced-word independent", crit3);
  run_criterion(4, "coweight lattice gap oracle", crit4);
  run_criterion(5, "type A small-remainder reduction", crit5);
  run_criterion(6, "multiplicity tables against dimension totals", crit6);
  run_criterion(7, "highest-weight dictionary round-trip", crit7);
  run_criterion(8, "hermitian witness search against brute force", crit8);
  run_criterion(9, "reflection gap inequality with exact equality cases", crit9);
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures ? 1 : 0;
}
