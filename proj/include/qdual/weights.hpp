#pragma once

#include <map>

#include "qdual/weyl.hpp"

namespace qdual {

/// Decomposition of a weight space, viewed along one sl2 triple, into spins:
/// maps a half-integer spin s >= 0 to its multiplicity N_s > 0.
struct SpinMultiset {
  std::map<Rat, long> entries;
  long total() const {
    long t = 0;
    for (const auto& e : entries) t += e.second;
    return t;
  }
};

/// dim V(mu)_lam by the Freudenthal recursion; 0 when mu - lam is not in the
/// root lattice cone. Tables are memoized per (root system, mu); the cache is
/// internally synchronized and observationally pure.
long freudenthal_multiplicity(const RootSystem& rs, const Weight& mu, const Weight& lam);

/// dim V(mu) = prod_{beta > 0} (mu + rho, beta) / (rho, beta).
long long weyl_dimension(const RootSystem& rs, const Weight& mu);

/// Multiplicity of the K-type V(mu) in the principal series at lam: equals
/// dim V(mu)_lam, independent of nu and of q.
long ktype_multiplicity(const RootSystem& rs, const Weight& mu, const Weight& lam);

/// Spin content of the lam weight string of V(mu) along alpha_i:
/// N_s = dim V(mu)_{lam+(s-m) alpha_i} - dim V(mu)_{lam+(s-m+1) alpha_i} for
/// s >= |m|, s = m (mod 1), with m = (lam, alpha_i^vee)/2.
SpinMultiset sl2_spin_content(const RootSystem& rs, const Weight& mu, const Weight& lam, int i);

/// All dominant integral mu with (mu, rho^vee) <= cutoff, mu - lam in the
/// root lattice and dim V(mu)_lam > 0, ordered by (height, lex): the K-types
/// a unitarity scan at lam traverses.
std::vector<Weight> enumerate_ktypes(const RootSystem& rs, const Weight& lam, const Rat& cutoff);

/// (mu, rho^vee) = sum of the alpha-basis coordinates of mu.
Rat coroot_height(const RootSystem& rs, const Weight& mu);

/// Force-build the multiplicity table for mu so subsequent concurrent readers
/// never take the construction path.
void prefetch_multiplicities(const RootSystem& rs, const Weight& mu);

}  // namespace qdual
