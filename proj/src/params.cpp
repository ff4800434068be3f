#include "qdual/params.hpp"

#include <algorithm>

namespace qdual {

bool is_dominant(const RootSystem& rs, const QParam& q, const ComplexWeight& nu) {
  for (const Root& beta : rs.positive_roots) {
    Rat re = coroot_pairing(rs, nu.re, beta);
    if (!is_integer(re) || re >= 0) continue;
    // real part sits in Z_{<0}; the pair violates dominance iff the imaginary
    // part lies on the lattice for this root
    bool on_lattice;
    if (q.classical())
      on_lattice = coroot_pairing(rs, nu.im, beta) == 0;
    else
      on_lattice = is_integer(pairing(rs, nu.im, beta.weight));
    if (on_lattice) return false;
  }
  return true;
}

bool is_small(const RootSystem& rs, const Weight& x) {
  for (const Root& beta : rs.positive_roots) {
    Rat p = pairing(rs, x, beta.weight);
    if (p >= 1 || p <= -1) return false;
  }
  return true;
}

bool is_almost_real(const RootSystem& rs, const ComplexWeight& nu) {
  return is_small(rs, nu.im);
}

// Coordinates of x with respect to the embedded coroot basis; exact because
// the basis change is diag(d) * cartan_inv.
static std::vector<Rat> coroot_lattice_coords(const RootSystem& rs, const Weight& x) {
  std::vector<Rat> c(static_cast<size_t>(rs.rank), Rat(0));
  for (int j = 0; j < rs.rank; ++j) {
    for (int k = 0; k < rs.rank; ++k)
      c[static_cast<size_t>(j)] += rs.cartan_inv[static_cast<size_t>(j)][static_cast<size_t>(k)] * x[k];
    c[static_cast<size_t>(j)] *= rs.d[static_cast<size_t>(j)];
  }
  return c;
}

ComplexWeight x_reduce(const RootSystem& rs, const ComplexWeight& nu) {
  std::vector<Rat> c = coroot_lattice_coords(rs, nu.im);
  Weight reduced = Weight::zero(rs.rank);
  for (int j = 0; j < rs.rank; ++j) {
    Rat cj = frac_part(c[static_cast<size_t>(j)]);
    if (cj == 0) continue;
    reduced = reduced + (cj * rs.coroot_basis[static_cast<size_t>(j)]);
  }
  return {nu.re, reduced};
}

bool equivalent(const RootSystem& rs, const ParamPair& p1, const ParamPair& p2) {
  ComplexWeight target = x_reduce(rs, p1.nu);
  for (const WeylWord& w : all_elements(rs)) {
    if (apply_word(rs, w, p2.lambda) != p1.lambda) continue;
    if (x_reduce(rs, apply_word(rs, w, p2.nu)) == target) return true;
  }
  return false;
}

static std::vector<int> stabilizer_generators(const RootSystem& rs, const Weight& dominant_lam) {
  std::vector<int> gens;
  for (int i = 1; i <= rs.rank; ++i)
    if (dominant_lam[i - 1] == 0) gens.push_back(i);
  return gens;
}

std::pair<ParamPair, WeylWord> canonicalize(const RootSystem& rs, const ParamPair& p) {
  auto [dom, w1] = dominant_representative(rs, p.lambda);
  ComplexWeight nu1 = apply_word(rs, w1, p.nu);

  std::vector<int> gens = stabilizer_generators(rs, dom);
  std::optional<ComplexWeight> best;
  std::optional<WeylWord> best_u;
  for (const WeylWord& u : parabolic_elements(rs, gens)) {
    Weight re = apply_word(rs, u, nu1.re);
    bool antidominant = true;
    for (int j : gens)
      if (re[j - 1] > 0) antidominant = false;
    if (!antidominant) continue;
    ComplexWeight cand = x_reduce(rs, {re, apply_word(rs, u, nu1.im)});
    if (!best || cand.re < best->re ||
        (cand.re == best->re && cand.im < best->im)) {
      best = cand;
      best_u = u;
    }
  }
  // the antidominant representative of nu1.re under the stabilizer always
  // exists, so `best` is set
  WeylWord word = reduce_word(rs, concat(*best_u, w1));
  return {ParamPair{dom, *best}, word};
}

std::optional<WeylWord> hermitian_exists(const RootSystem& rs, const ParamPair& p) {
  auto [dom, w1] = dominant_representative(rs, p.lambda);
  ComplexWeight nu1 = apply_word(rs, w1, p.nu);
  ComplexWeight target = x_reduce(rs, {-nu1.re, nu1.im});

  for (const WeylWord& u : parabolic_elements(rs, stabilizer_generators(rs, dom))) {
    if (x_reduce(rs, apply_word(rs, u, nu1)) == target)
      return reduce_word(rs, concat(inverse_word(w1), concat(u, w1)));
  }
  return std::nullopt;
}

Weight reduce_small_typeA(int n, const Weight& x) {
  if (n < 2) throw WrongType("reduce_small_typeA: need n >= 2");
  if (x.rank() != n - 1)
    throw DimensionMismatch("reduce_small_typeA: weight rank " + std::to_string(x.rank()) +
                            " for A" + std::to_string(n - 1));
  // lift to R^n mod (1,...,1): nu_k = sum_{i>=k} x_i, nu_n = 0
  std::vector<Rat> lift(static_cast<size_t>(n), Rat(0));
  for (int k = n - 2; k >= 0; --k) lift[static_cast<size_t>(k)] = lift[static_cast<size_t>(k + 1)] + x[k];
  std::vector<Rat> floors(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) floors[static_cast<size_t>(k)] = Rat(rat_floor(lift[static_cast<size_t>(k)]));
  Weight lam = Weight::zero(n - 1);
  for (int i = 0; i < n - 1; ++i) lam[i] = floors[static_cast<size_t>(i)] - floors[static_cast<size_t>(i + 1)];
  return lam;
}

bool coweight_gap_oracle(const RootSystem& rs, int height_bound) {
  if (height_bound < 1) throw DomainError("coweight_gap_oracle: height_bound >= 1 required");
  std::vector<long> n(static_cast<size_t>(rs.rank), 0);
  bool found = false;
  auto recurse = [&](auto&& self, int pos, int budget) -> void {
    if (found) return;
    if (pos == rs.rank) {
      bool zero = std::all_of(n.begin(), n.end(), [](long v) { return v == 0; });
      if (zero) return;
      Weight x = Weight::zero(rs.rank);
      for (int j = 0; j < rs.rank; ++j)
        if (n[static_cast<size_t>(j)] != 0) x = x + (Rat(n[static_cast<size_t>(j)]) * rs.coroot_basis[static_cast<size_t>(j)]);
      for (const Root& beta : rs.positive_roots) {
        Rat p = pairing(rs, x, beta.weight);
        if (p >= 2 || p <= -2) return;  // this candidate is blocked
      }
      found = true;  // nonzero lattice vector pairing small with every root
      return;
    }
    for (long v = -budget; v <= budget; ++v) {
      n[static_cast<size_t>(pos)] = v;
      self(self, pos + 1, budget - static_cast<int>(std::abs(v)));
      if (found) return;
    }
    n[static_cast<size_t>(pos)] = 0;
  };
  recurse(recurse, 0, height_bound);
  return !found;
}

ParamPair from_category_O(const RootSystem& rs, const CategoryOParam& c) {
  Weight lam_re = c.Lambda.re - c.LambdaPrime.re;
  Weight lam_im = c.Lambda.im - c.LambdaPrime.im;
  if (!is_zero(lam_im) || !is_integral(lam_re))
    throw NonIntegralDifference("Lambda - Lambda' = " + weight_str(lam_re) +
                                " + i*(" + weight_str(lam_im) + ") is not in P");
  Rat two(2);
  ComplexWeight nu{-c.Lambda.re - c.LambdaPrime.re - (two * rs.rho),
                   -c.Lambda.im - c.LambdaPrime.im};
  return {lam_re, x_reduce(rs, nu)};
}

CategoryOParam to_category_O(const RootSystem& rs, const ParamPair& p) {
  Rat half(1, 2);
  ComplexWeight Lambda{(half * (p.lambda - p.nu.re)) - rs.rho, -half * p.nu.im};
  ComplexWeight LambdaPrime{(half * (-p.lambda - p.nu.re)) - rs.rho, -half * p.nu.im};
  return {Lambda, LambdaPrime};
}

std::optional<Root> psi_nonvanishing(const RootSystem& rs, const CategoryOParam& c) {
  for (const Root& beta : rs.positive_roots) {
    bool first_zero = coroot_pairing(rs, c.Lambda.re + rs.rho, beta) == 0 &&
                      coroot_pairing(rs, c.Lambda.im, beta) == 0;
    if (!first_zero) continue;
    Rat re = coroot_pairing(rs, c.LambdaPrime.re + rs.rho, beta);
    bool second_nonneg_int =
        coroot_pairing(rs, c.LambdaPrime.im, beta) == 0 && is_integer(re) && re >= 0;
    if (second_nonneg_int) return beta;
  }
  return std::nullopt;
}

Weight minimal_ktype(const RootSystem& rs, const Weight& lam) {
  return dominant_representative(rs, lam).first;
}

EmbeddingDirection embedding_direction(const RootSystem& rs, const QParam& q, const ParamPair& p) {
  Rat half(1, 2);
  ComplexWeight sub{(half * (p.lambda - p.nu.re)) - rs.rho, -half * p.nu.im};
  ComplexWeight quot{(half * (p.nu.re - p.lambda)) - rs.rho, half * p.nu.im};
  bool s = is_dominant(rs, q, sub);
  bool t = is_dominant(rs, q, quot);
  if (s && t) return EmbeddingDirection::Both;
  if (s) return EmbeddingDirection::Sub;
  if (t) return EmbeddingDirection::Quot;
  return EmbeddingDirection::Neither;
}

const char* embedding_direction_str(EmbeddingDirection d) {
  switch (d) {
    case EmbeddingDirection::Sub: return "Sub";
    case EmbeddingDirection::Quot: return "Quot";
    case EmbeddingDirection::Both: return "Both";
    case EmbeddingDirection::Neither: return "Neither";
  }
  return "?";
}

}  // namespace qdual
