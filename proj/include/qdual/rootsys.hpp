#pragma once

#include <string>
#include <vector>

#include "qdual/errors.hpp"
#include "qdual/rat.hpp"

namespace qdual {

/// Vector in h^*, stored in fundamental-weight coordinates:
/// x = sum_i x_i omega_i, so x_i = (x, alpha_i^vee) by construction.
struct Weight {
  std::vector<Rat> c;

  Weight() = default;
  explicit Weight(std::vector<Rat> coords) : c(std::move(coords)) {}
  static Weight zero(int rank) { return Weight(std::vector<Rat>(static_cast<size_t>(rank))); }

  int rank() const { return static_cast<int>(c.size()); }
  const Rat& operator[](int i) const { return c[static_cast<size_t>(i)]; }
  Rat& operator[](int i) { return c[static_cast<size_t>(i)]; }

  bool operator==(const Weight& o) const { return c == o.c; }
  bool operator!=(const Weight& o) const { return !(*this == o); }
  /// Lexicographic order on coordinates; used for ordered containers and for
  /// deterministic output, carries no representation-theoretic meaning.
  bool operator<(const Weight& o) const;
};

Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);
Weight operator-(const Weight& a);
Weight operator*(const Rat& s, const Weight& a);

bool is_integral(const Weight& x);
bool is_zero(const Weight& x);

/// Shared text format: comma-separated exact rationals, e.g. "1,0" or "3/2,-1/3".
Weight parse_weight(const std::string& s);
std::string weight_str(const Weight& x);

/// One root beta, cached in every representation downstream code consumes.
struct Root {
  Weight weight;           ///< omega-coordinates of beta
  std::vector<long> alpha; ///< coordinates of beta in the simple-root basis (integers)
  Rat length_sq;           ///< (beta, beta)
  Rat q_exponent;          ///< (beta, beta)/2, so q_beta = q^{q_exponent}
  long height = 0;         ///< sum of the simple-root coordinates
};

/// Immutable datum of an irreducible root system, normalized so short roots
/// have squared length 2. All coordinates are in the omega basis.
struct RootSystem {
  std::string label;  ///< "<series><rank>", e.g. "B2"
  char series = 0;    ///< 'A'..'G'
  int rank = 0;

  /// cartan[i][j] = (alpha_j, alpha_i^vee); columns are simple roots in
  /// omega-coordinates.
  std::vector<std::vector<long>> cartan;
  /// Symmetrizers d_i = (alpha_i, alpha_i)/2, normalized so min_i d_i = 1.
  std::vector<long> d;
  std::vector<std::vector<Rat>> cartan_inv;
  /// form[i][j] = (omega_i, omega_j); equals diag(d) applied to cartan_inv
  /// columns, symmetric positive definite.
  std::vector<std::vector<Rat>> form;
  /// All positive roots, simple ones first, then by (height, lex).
  std::vector<Root> positive_roots;
  Weight rho;  ///< (1, ..., 1): half-sum of positive roots
  /// Embedded simple coroots alpha_j^vee as elements of h^* (omega-coords);
  /// these generate the image of Q^vee under the form.
  std::vector<Weight> coroot_basis;
  long long weyl_order = 0;  ///< |W| by the classical product formula

  Weight simple_root(int i) const;  ///< 1-based simple index
  long simple_d(int i) const { return d[static_cast<size_t>(i - 1)]; }
};

/// Validates (series, rank) and constructs the full immutable datum.
/// Positive roots are obtained as the closure of the simple roots under the
/// simple reflections, filtered by positivity in the alpha basis.
RootSystem build_root_system(char series, int rank);

/// Cached lookup by label ("A2", "G2", ...). Thread-safe; the returned
/// reference is valid for the lifetime of the program.
const RootSystem& root_system(const std::string& label);

/// x^T form y: the W-invariant bilinear form with (alpha,alpha) = 2 for short
/// alpha.
Rat pairing(const RootSystem& rs, const Weight& x, const Weight& y);

/// (x, alpha^vee) = 2 (x, alpha) / (alpha, alpha).
Rat coroot_pairing(const RootSystem& rs, const Weight& x, const Root& alpha);

}  // namespace qdual
