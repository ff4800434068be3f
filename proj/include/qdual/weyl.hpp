#pragma once

#include <utility>
#include <vector>

#include "qdual/rootsys.hpp"

namespace qdual {

/// Word in the simple reflections, 1-based letters; the empty word is the
/// identity. As a group element [w1, ..., wk] means s_{w1} ... s_{wk}, so the
/// rightmost letter acts first on a vector.
using WeylWord = std::vector<int>;

/// nu = re + i (2 pi / |log q|) im. The encoding is q-independent: q enters
/// only when a predicate or value is evaluated. At q = 1 the unit degenerates
/// and im is read as the literal imaginary part.
struct ComplexWeight {
  Weight re, im;
  bool operator==(const ComplexWeight& o) const { return re == o.re && im == o.im; }
  bool operator!=(const ComplexWeight& o) const { return !(*this == o); }
};

/// Text format "1,2,1"; the empty string is the identity.
WeylWord parse_word(const std::string& s);
std::string word_str(const WeylWord& w);

Weight reflect(const RootSystem& rs, int i, const Weight& x);
ComplexWeight reflect(const RootSystem& rs, int i, const ComplexWeight& x);

WeylWord concat(const WeylWord& a, const WeylWord& b);
WeylWord inverse_word(const WeylWord& w);

Weight apply_word(const RootSystem& rs, const WeylWord& w, const Weight& x);
ComplexWeight apply_word(const RootSystem& rs, const WeylWord& w, const ComplexWeight& x);

/// Unique dominant element of the orbit, together with a word sending x to it
/// (always reflect at the lowest simple index with negative pairing: the
/// returned word is deterministic and reduced).
std::pair<Weight, WeylWord> dominant_representative(const RootSystem& rs, const Weight& x);

/// w.x = w(x + rho) - rho. On a ComplexWeight the shift touches the real part
/// only (rho is real).
Weight dot_apply(const RootSystem& rs, const WeylWord& w, const Weight& x);
ComplexWeight dot_apply(const RootSystem& rs, const WeylWord& w, const ComplexWeight& x);

inline constexpr long long kOrbitBound = 10000000;

/// Full W-orbit of x, deduplicated, sorted lexicographically.
std::vector<Weight> orbit(const RootSystem& rs, const Weight& x, long long bound = kOrbitBound);

/// Reduced word for the longest element w0; length = |positive roots|.
WeylWord longest_word(const RootSystem& rs);

/// Number of positive roots sent to negative ones; this equals the reduced
/// length of the element represented by w.
int weyl_length(const RootSystem& rs, const WeylWord& w);

/// Element equality is decidable on the regular vector rho.
bool is_identity(const RootSystem& rs, const WeylWord& w);
bool same_element(const RootSystem& rs, const WeylWord& a, const WeylWord& b);

/// Canonical reduced word for the element w represents (repeatedly strip the
/// lowest right descent).
WeylWord reduce_word(const RootSystem& rs, const WeylWord& w);

/// Reduced words for every element of W, ordered by (length, BFS discovery);
/// the identity comes first. Memoized per root system; guarded by `bound`.
const std::vector<WeylWord>& all_elements(const RootSystem& rs, long long bound = kOrbitBound);

/// Elements of the parabolic subgroup generated by the given 1-based simple
/// indices, same ordering contract as all_elements. Not memoized.
std::vector<WeylWord> parabolic_elements(const RootSystem& rs, const std::vector<int>& gens,
                                         long long bound = kOrbitBound);

}  // namespace qdual
