#include <cstdlib>
#include <functional>
#include <map>
#include <vector>

#include "doctest.h"
#include "qdual/weights.hpp"

using namespace qdual;

namespace {

// Coordinates of x in the simple-root basis, exact.
std::vector<Rat> alpha_coords(const RootSystem& rs, const Weight& x) {
  std::vector<Rat> y(static_cast<std::size_t>(rs.rank));
  for (int j = 0; j < rs.rank; ++j) {
    Rat acc(0);
    for (int k = 0; k < rs.rank; ++k)
      acc += rs.cartan_inv[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] * x[k];
    y[static_cast<std::size_t>(j)] = acc;
  }
  return y;
}

// Kostant partition function: number of ways to write x as a nonnegative
// integer combination of positive roots. Independent recursion used as an
// oracle against Freudenthal.
long kostant_partition(const RootSystem& rs, const Weight& x) {
  std::vector<Rat> y = alpha_coords(rs, x);
  std::vector<long> rem;
  for (const Rat& v : y) {
    if (!is_integer(v) || v < 0) return 0;
    rem.push_back(static_cast<long>(v.get_num().get_si()));
  }
  long n = static_cast<long>(rs.positive_roots.size());
  std::function<long(long, std::vector<long>&)> rec = [&](long i, std::vector<long>& r) -> long {
    bool zero = true;
    for (long v : r) zero = zero && v == 0;
    if (zero) return 1;
    if (i == n) return 0;
    const Root& b = rs.positive_roots[static_cast<std::size_t>(i)];
    long count = 0;
    std::vector<long> r2 = r;
    while (true) {
      count += rec(i + 1, r2);
      bool fits = true;
      for (int j = 0; j < rs.rank; ++j) {
        r2[static_cast<std::size_t>(j)] -= b.alpha[static_cast<std::size_t>(j)];
        if (r2[static_cast<std::size_t>(j)] < 0) fits = false;
      }
      if (!fits) break;
    }
    return count;
  };
  return rec(0, rem);
}

// Kostant multiplicity formula, the alternating sum over the Weyl group.
long kostant_multiplicity(const RootSystem& rs, const Weight& mu, const Weight& lam) {
  long m = 0;
  for (const WeylWord& w : all_elements(rs)) {
    Weight arg = apply_word(rs, w, mu + rs.rho) - (lam + rs.rho);
    long sign = weyl_length(rs, w) % 2 == 0 ? 1 : -1;
    m += sign * kostant_partition(rs, arg);
  }
  return m;
}

long long orbit_sum_dimension(const RootSystem& rs, const Weight& mu) {
  // sum of m(lam) |W lam| over dominant lam below mu: walks the coordinate
  // box of mu - w0 mu in the alpha basis.
  Weight low = apply_word(rs, longest_word(rs), mu);
  std::vector<Rat> box = alpha_coords(rs, mu - low);
  std::vector<long> max_c;
  for (const Rat& v : box) {
    REQUIRE(is_integer(v));
    max_c.push_back(static_cast<long>(v.get_num().get_si()));
  }
  long long total = 0;
  std::vector<long> c(static_cast<std::size_t>(rs.rank), 0);
  std::function<void(int)> walk = [&](int pos) {
    if (pos == rs.rank) {
      Weight lam = mu;
      for (int j = 0; j < rs.rank; ++j)
        lam = lam - (Rat(c[static_cast<std::size_t>(j)]) * rs.simple_root(j + 1));
      for (int i = 0; i < rs.rank; ++i)
        if (lam[i] < 0) return;
      long m = freudenthal_multiplicity(rs, mu, lam);
      if (m > 0) total += static_cast<long long>(m) * static_cast<long long>(orbit(rs, lam).size());
      return;
    }
    for (long k = 0; k <= max_c[static_cast<std::size_t>(pos)]; ++k) {
      c[static_cast<std::size_t>(pos)] = k;
      walk(pos + 1);
    }
    c[static_cast<std::size_t>(pos)] = 0;
  };
  walk(0);
  return total;
}

}  // namespace

TEST_CASE("A1 strings have multiplicity one") {
  const RootSystem& rs = root_system("A1");
  for (int n : {0, 1, 4, 7}) {
    Weight mu = Weight::zero(1);
    mu[0] = n;
    CHECK(weyl_dimension(rs, mu) == n + 1);
    for (int k = -n - 2; k <= n + 2; ++k) {
      Weight lam = Weight::zero(1);
      lam[0] = k;
      long expect = (std::abs(k) <= n && (k - n) % 2 == 0) ? 1 : 0;
      CHECK(freudenthal_multiplicity(rs, mu, lam) == expect);
    }
  }
}

TEST_CASE("Freudenthal agrees with the Kostant alternating sum") {
  for (const char* label : {"A2", "B2"}) {
    const RootSystem& rs = root_system(label);
    for (const char* mut : {"1,1", "2,0", "2,1"}) {
      Weight mu = parse_weight(mut);
      for (const char* lamt : {"0,0", "1,1", "1,0", "0,1", "-1,2", "2,-1", "1,-1"}) {
        Weight lam = parse_weight(lamt);
        CHECK(freudenthal_multiplicity(rs, mu, lam) == kostant_multiplicity(rs, mu, lam));
      }
    }
  }
}

TEST_CASE("classical dimensions") {
  const RootSystem& a2 = root_system("A2");
  CHECK(weyl_dimension(a2, parse_weight("1,0")) == 3);
  CHECK(weyl_dimension(a2, parse_weight("1,1")) == 8);
  CHECK(weyl_dimension(a2, parse_weight("2,0")) == 6);
  CHECK(weyl_dimension(a2, parse_weight("3,0")) == 10);
  const RootSystem& b2 = root_system("B2");
  CHECK(weyl_dimension(b2, parse_weight("1,0")) == 5);
  CHECK(weyl_dimension(b2, parse_weight("0,1")) == 4);
  CHECK(weyl_dimension(b2, parse_weight("0,2")) == 10);
  CHECK(weyl_dimension(b2, parse_weight("1,1")) == 16);
  const RootSystem& g2 = root_system("G2");
  CHECK(weyl_dimension(g2, parse_weight("1,0")) == 7);
  CHECK(weyl_dimension(g2, parse_weight("0,1")) == 14);
  CHECK_THROWS_AS(weyl_dimension(a2, parse_weight("-1,0")), NotDominant);
}

TEST_CASE("adjoint representations") {
  // zero weight space of the adjoint has dimension = rank
  CHECK(freudenthal_multiplicity(root_system("A2"), parse_weight("1,1"), Weight::zero(2)) == 2);
  CHECK(freudenthal_multiplicity(root_system("B2"), parse_weight("0,2"), Weight::zero(2)) == 2);
  CHECK(freudenthal_multiplicity(root_system("G2"), parse_weight("0,1"), Weight::zero(2)) == 2);
  // roots have multiplicity one
  const RootSystem& g2 = root_system("G2");
  for (const Root& b : g2.positive_roots)
    CHECK(freudenthal_multiplicity(g2, parse_weight("0,1"), b.weight) == 1);
}

TEST_CASE("multiplicity totals reproduce the Weyl dimension") {
  CHECK(orbit_sum_dimension(root_system("A2"), parse_weight("2,1")) ==
        weyl_dimension(root_system("A2"), parse_weight("2,1")));
  CHECK(orbit_sum_dimension(root_system("B2"), parse_weight("1,1")) ==
        weyl_dimension(root_system("B2"), parse_weight("1,1")));
  CHECK(orbit_sum_dimension(root_system("G2"), parse_weight("1,0")) ==
        weyl_dimension(root_system("G2"), parse_weight("1,0")));
}

TEST_CASE("multiplicity is Weyl invariant and vanishes off the root lattice") {
  const RootSystem& rs = root_system("B2");
  Weight mu = parse_weight("1,1");
  Weight lam = parse_weight("1,-1");
  CHECK(freudenthal_multiplicity(rs, mu, lam) ==
        freudenthal_multiplicity(rs, mu, reflect(rs, 1, lam)));
  CHECK(freudenthal_multiplicity(rs, mu, reflect(rs, 2, lam)) ==
        freudenthal_multiplicity(rs, mu, lam));
  // mu - lam outside the root lattice: multiplicity 0
  CHECK(freudenthal_multiplicity(root_system("A2"), parse_weight("1,1"), parse_weight("1,0")) == 0);
  CHECK(freudenthal_multiplicity(rs, mu, parse_weight("1/2,0")) == 0);
  CHECK_THROWS_AS(freudenthal_multiplicity(rs, parse_weight("-1,1"), lam), NotDominant);
}

TEST_CASE("spin content decomposes the weight string") {
  const RootSystem& a2 = root_system("A2");
  SpinMultiset sm = sl2_spin_content(a2, parse_weight("1,1"), Weight::zero(2), 1);
  REQUIRE(sm.entries.size() == 2);
  CHECK(sm.entries.at(Rat(0)) == 1);
  CHECK(sm.entries.at(Rat(1)) == 1);
  CHECK(sm.total() == 2);

  // totals match the plain multiplicity at every sampled weight
  for (const char* label : {"A2", "B2", "G2"}) {
    const RootSystem& rs = root_system(label);
    for (const char* mut : {"1,1", "2,0", "0,1"}) {
      Weight mu = parse_weight(mut);
      for (const char* lamt : {"0,0", "1,0", "-1,1", "1,-2", "0,2"}) {
        Weight lam = parse_weight(lamt);
        for (int i = 1; i <= rs.rank; ++i) {
          SpinMultiset s = sl2_spin_content(rs, mu, lam, i);
          CHECK(s.total() == freudenthal_multiplicity(rs, mu, lam));
        }
      }
    }
  }
}

TEST_CASE("K-type enumeration") {
  const RootSystem& a1 = root_system("A1");
  auto ks = enumerate_ktypes(a1, Weight::zero(1), Rat(4));
  REQUIRE(ks.size() == 5);
  for (std::size_t s = 0; s < ks.size(); ++s) CHECK(ks[s][0] == 2 * static_cast<long>(s));

  const RootSystem& a2 = root_system("A2");
  Weight lam = parse_weight("1,0");
  auto ka = enumerate_ktypes(a2, lam, Rat(6));
  REQUIRE(!ka.empty());
  CHECK(ka.front() == lam);  // the minimal K-type comes first
  for (const Weight& mu : ka) {
    CHECK(ktype_multiplicity(a2, mu, lam) > 0);
    CHECK(coroot_height(a2, mu - lam) >= 0);
    CHECK(is_integer(coroot_height(a2, mu - lam)));
    CHECK(coroot_height(a2, mu) <= 6);
  }
  // heights are nondecreasing along the enumeration
  for (std::size_t i = 0; i + 1 < ka.size(); ++i)
    CHECK(coroot_height(a2, ka[i]) <= coroot_height(a2, ka[i + 1]));
}

TEST_CASE("ktype multiplicity equals the weight multiplicity") {
  const RootSystem& b2 = root_system("B2");
  Weight mu = parse_weight("1,1");
  for (const char* lamt : {"0,1", "1,-1", "-1,0"}) {
    Weight lam = parse_weight(lamt);
    CHECK(ktype_multiplicity(b2, mu, lam) == freudenthal_multiplicity(b2, mu, lam));
  }
  CHECK_THROWS(ktype_multiplicity(b2, mu, parse_weight("1/2,0")));
}

TEST_CASE("coroot height is linear") {
  const RootSystem& g2 = root_system("G2");
  CHECK(coroot_height(g2, g2.simple_root(1)) == 1);
  CHECK(coroot_height(g2, g2.simple_root(2)) == 1);
  Weight x = parse_weight("2,1"), y = parse_weight("-1,1");
  CHECK(coroot_height(g2, x + y) == coroot_height(g2, x) + coroot_height(g2, y));
  prefetch_multiplicities(g2, parse_weight("1,0"));
  CHECK(freudenthal_multiplicity(g2, parse_weight("1,0"), parse_weight("1,0")) == 1);
}
