#pragma once

#include <optional>
#include <utility>

#include "qdual/weights.hpp"

namespace qdual {

/// Deformation parameter: exact rational 0 < q < 1, or the classical marker
/// q = 1, which selects all q -> 1 limit formulas.
struct QParam {
  Rat q;
  explicit QParam(Rat v) : q(std::move(v)) {
    if (q <= 0 || q > 1) throw InvalidQ("q must satisfy 0 < q <= 1, got " + rat_str(q));
  }
  bool classical() const { return q == 1; }
};

/// (lambda, nu): lambda in the weight lattice P, nu a representative of its
/// class in X = h^* modulo the imaginary coroot lattice.
struct ParamPair {
  Weight lambda;
  ComplexWeight nu;
};

/// (Lambda, Lambda') indexing a pair of highest weights on the category-O
/// side of the translation.
struct CategoryOParam {
  ComplexWeight Lambda, LambdaPrime;
};

/// Dominance in the deformed sense: no positive root has (nu, alpha^vee) in
/// Z_{<0} shifted by the imaginary lattice. Checked over positive roots; the
/// imaginary condition at q < 1 is (nu.im, alpha) in Z, at q = 1 it is
/// (nu.im, alpha^vee) = 0.
bool is_dominant(const RootSystem& rs, const QParam& q, const ComplexWeight& nu);

/// |(x, alpha)| < 1 for every positive root alpha.
bool is_small(const RootSystem& rs, const Weight& x);

/// nu is almost real iff its imaginary coefficient vector is small.
bool is_almost_real(const RootSystem& rs, const ComplexWeight& nu);

/// Canonical X-representative: nu.im reduced to the fundamental
/// parallelepiped [0,1)^rank in coordinates of the embedded coroot basis;
/// nu.re untouched.
ComplexWeight x_reduce(const RootSystem& rs, const ComplexWeight& nu);

/// Diagonal W-equivalence of parameter pairs, with the nu comparison taken
/// in X (x_reduce after acting).
bool equivalent(const RootSystem& rs, const ParamPair& p1, const ParamPair& p2);

/// Canonical orbit representative and a word realizing it: lambda dominant
/// (lowest-index rule); within the stabilizer of lambda, nu.re is taken to
/// its antidominant representative (the dominance-order minimum, which is
/// basis-independent), remaining ties broken by lexicographic minimization of
/// the X-reduced nu.im.
std::pair<ParamPair, WeylWord> canonicalize(const RootSystem& rs, const ParamPair& p);

/// Some w with w(lambda) = lambda and w(nu) = -conj(nu) in X, i.e. the real
/// part flips sign and the im part is preserved modulo the lattice; nullopt
/// when no such w exists. The search runs over the stabilizer of lambda after
/// dominance reduction.
std::optional<WeylWord> hermitian_exists(const RootSystem& rs, const ParamPair& p);

/// Type A_{n-1} only: the integral coweight lambda with x - lambda small,
/// computed by lifting x to R^n modulo (1,...,1), flooring coordinatewise and
/// projecting back.
Weight reduce_small_typeA(int n, const Weight& x);

/// Brute-force check that no nonzero element of the coroot lattice with
/// coefficient height <= height_bound pairs below 2 with every root.
bool coweight_gap_oracle(const RootSystem& rs, int height_bound);

/// (lambda, nu) = (Lambda - Lambda', x_reduce(-Lambda - Lambda' - 2 rho)).
ParamPair from_category_O(const RootSystem& rs, const CategoryOParam& c);

/// Lambda = (lambda - nu)/2 - rho, Lambda' = (-lambda - nu)/2 - rho.
CategoryOParam to_category_O(const RootSystem& rs, const ParamPair& p);

/// Nonvanishing criterion for the translation functor: returns nullopt when
/// no positive root alpha has (Lambda + rho, alpha^vee) = 0 with
/// (Lambda' + rho, alpha^vee) a nonnegative integer; otherwise the first
/// violating root (the functor kills the module).
std::optional<Root> psi_nonvanishing(const RootSystem& rs, const CategoryOParam& c);

/// Unique dominant element of the W-orbit of lam; always has K-type
/// multiplicity 1 at lam.
Weight minimal_ktype(const RootSystem& rs, const Weight& lam);

enum class EmbeddingDirection { Sub, Quot, Both, Neither };

/// Sub iff (lambda - nu)/2 - rho is dominant, Quot iff -(lambda - nu)/2 - rho
/// is dominant.
EmbeddingDirection embedding_direction(const RootSystem& rs, const QParam& q, const ParamPair& p);

const char* embedding_direction_str(EmbeddingDirection d);

}  // namespace qdual
