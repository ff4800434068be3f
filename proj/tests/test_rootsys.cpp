#include <algorithm>

#include "doctest.h"
#include "qdual/rootsys.hpp"

using namespace qdual;

TEST_CASE("positive root counts match the classical closure sizes") {
  struct Row {
    const char* label;
    std::size_t count;
  };
  const Row rows[] = {{"A1", 1},  {"A2", 3},  {"A3", 6},  {"A5", 15}, {"B2", 4},
                      {"B3", 9},  {"C3", 9},  {"C4", 16}, {"D4", 12}, {"D5", 20},
                      {"E6", 36}, {"E7", 63}, {"E8", 120}, {"F4", 24}, {"G2", 6}};
  for (const Row& r : rows) {
    const RootSystem& rs = root_system(r.label);
    CHECK(rs.positive_roots.size() == r.count);
    // rho really is the half-sum: (rho, alpha_i^vee) = 1 for every simple i.
    Weight sum = Weight::zero(rs.rank);
    for (const Root& b : rs.positive_roots) sum = sum + b.weight;
    for (int i = 0; i < rs.rank; ++i) CHECK(sum[i] == 2 * rs.rho[i]);
  }
}

TEST_CASE("Weyl group orders follow the product formulas") {
  CHECK(root_system("A1").weyl_order == 2);
  CHECK(root_system("A2").weyl_order == 6);
  CHECK(root_system("A4").weyl_order == 120);
  CHECK(root_system("B2").weyl_order == 8);
  CHECK(root_system("B4").weyl_order == 384);
  CHECK(root_system("C3").weyl_order == 48);
  CHECK(root_system("D4").weyl_order == 192);
  CHECK(root_system("D6").weyl_order == 23040);
  CHECK(root_system("E6").weyl_order == 51840);
  CHECK(root_system("E7").weyl_order == 2903040);
  CHECK(root_system("E8").weyl_order == 696729600);
  CHECK(root_system("F4").weyl_order == 1152);
  CHECK(root_system("G2").weyl_order == 12);
}

TEST_CASE("simple roots come first and alpha coordinates are consistent") {
  for (const char* label : {"A3", "B3", "C3", "D4", "F4", "G2"}) {
    const RootSystem& rs = root_system(label);
    for (int i = 0; i < rs.rank; ++i) {
      const Root& b = rs.positive_roots[static_cast<std::size_t>(i)];
      CHECK(b.height == 1);
      for (int j = 0; j < rs.rank; ++j)
        CHECK(b.alpha[static_cast<std::size_t>(j)] == (i == j ? 1 : 0));
      CHECK(b.weight == rs.simple_root(i + 1));
    }
    long prev = 0;
    for (const Root& b : rs.positive_roots) {
      CHECK(b.height >= prev);
      prev = b.height;
      // weight = sum_j alpha_j * simple_j, exact in omega coordinates
      Weight rebuilt = Weight::zero(rs.rank);
      for (int j = 0; j < rs.rank; ++j)
        rebuilt = rebuilt + (Rat(b.alpha[static_cast<std::size_t>(j)]) * rs.simple_root(j + 1));
      CHECK(rebuilt == b.weight);
      CHECK(b.length_sq == pairing(rs, b.weight, b.weight));
      CHECK(b.q_exponent == b.length_sq / 2);
    }
  }
}

TEST_CASE("lengths are normalized with short roots at 2") {
  const RootSystem& b2 = root_system("B2");
  int shorts = 0, longs = 0;
  for (const Root& b : b2.positive_roots) {
    if (b.length_sq == 2) ++shorts;
    if (b.length_sq == 4) ++longs;
  }
  CHECK(shorts == 2);
  CHECK(longs == 2);

  const RootSystem& g2 = root_system("G2");
  shorts = longs = 0;
  for (const Root& b : g2.positive_roots) {
    if (b.length_sq == 2) ++shorts;
    if (b.length_sq == 6) ++longs;
  }
  CHECK(shorts == 3);
  CHECK(longs == 3);

  for (const char* label : {"A4", "B3", "C4", "D4", "E6", "F4", "G2"}) {
    const RootSystem& rs = root_system(label);
    long dmin = rs.d[0];
    for (long v : rs.d) dmin = std::min(dmin, v);
    CHECK(dmin == 1);
  }
}

TEST_CASE("the form is the coroot-dual pairing") {
  for (const char* label : {"A2", "B3", "C3", "F4", "G2"}) {
    const RootSystem& rs = root_system(label);
    // (omega_i, alpha_j^vee) = delta_ij
    for (int i = 0; i < rs.rank; ++i) {
      Weight omega = Weight::zero(rs.rank);
      omega[i] = 1;
      for (int j = 0; j < rs.rank; ++j) {
        const Root& aj = rs.positive_roots[static_cast<std::size_t>(j)];
        CHECK(coroot_pairing(rs, omega, aj) == (i == j ? 1 : 0));
      }
    }
    // form symmetry and cartan[i][j] = (alpha_j, alpha_i^vee)
    for (int i = 0; i < rs.rank; ++i)
      for (int j = 0; j < rs.rank; ++j) {
        CHECK(pairing(rs, rs.simple_root(i + 1), rs.simple_root(j + 1)) ==
              pairing(rs, rs.simple_root(j + 1), rs.simple_root(i + 1)));
        const Root& ai = rs.positive_roots[static_cast<std::size_t>(i)];
        CHECK(coroot_pairing(rs, rs.simple_root(j + 1), ai) ==
              rs.cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
      }
  }
}

TEST_CASE("embedded coroots pair integrally with the weight lattice") {
  for (const char* label : {"A3", "B2", "G2"}) {
    const RootSystem& rs = root_system(label);
    for (int j = 0; j < rs.rank; ++j) {
      const Weight& cov = rs.coroot_basis[static_cast<std::size_t>(j)];
      const Root& aj = rs.positive_roots[static_cast<std::size_t>(j)];
      // the embedded coroot is 2 alpha / (alpha, alpha)
      CHECK(cov == Rat(2) / aj.length_sq * aj.weight);
    }
  }
}

TEST_CASE("invalid labels are rejected") {
  CHECK_THROWS_AS(root_system("A0"), InvalidType);
  CHECK_THROWS_AS(root_system("B1"), InvalidType);
  CHECK_THROWS_AS(root_system("C1"), InvalidType);
  CHECK_THROWS_AS(root_system("D3"), InvalidType);
  CHECK_THROWS_AS(root_system("E5"), InvalidType);
  CHECK_THROWS_AS(root_system("E9"), InvalidType);
  CHECK_THROWS_AS(root_system("F5"), InvalidType);
  CHECK_THROWS_AS(root_system("G3"), InvalidType);
  CHECK_THROWS_AS(root_system("H2"), InvalidType);
  CHECK_THROWS_AS(root_system("A11"), InvalidType);
  CHECK_THROWS_AS(root_system(""), InvalidType);
  CHECK_THROWS_AS(root_system("A2x"), InvalidType);
  CHECK_THROWS_AS(root_system("A"), InvalidType);
}

TEST_CASE("the cache returns one instance per label") {
  const RootSystem& a = root_system("D5");
  const RootSystem& b = root_system("D5");
  CHECK(&a == &b);
}

TEST_CASE("weight text round-trips") {
  Weight w = parse_weight("3/2,-1/3,0");
  CHECK(w.rank() == 3);
  CHECK(w[0] == Rat(3, 2));
  CHECK(w[1] == Rat(-1, 3));
  CHECK(weight_str(w) == "3/2,-1/3,0");
  CHECK(parse_weight(weight_str(w)) == w);
  CHECK_THROWS(parse_weight(""));
  CHECK_THROWS(parse_weight("1,,2"));
  CHECK_THROWS(parse_weight("1/0"));
  CHECK(is_integral(parse_weight("4,-2")));
  CHECK(!is_integral(parse_weight("1/2,0")));
  CHECK(is_zero(Weight::zero(4)));
}
