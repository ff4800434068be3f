#include "qdual/weyl.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>

namespace qdual {

WeylWord parse_word(const std::string& s) {
  WeylWord out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("bad word letter: '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

std::string word_str(const WeylWord& w) {
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(w[i]);
  }
  return out;
}

static void check_letter(const RootSystem& rs, int i) {
  if (i < 1 || i > rs.rank)
    throw IndexOutOfRange("simple index " + std::to_string(i) + " in " + rs.label);
}

Weight reflect(const RootSystem& rs, int i, const Weight& x) {
  check_letter(rs, i);
  if (x.rank() != rs.rank) throw DimensionMismatch("reflect: weight rank");
  // s_i(x) = x - (x, alpha_i^vee) alpha_i, and (x, alpha_i^vee) is coordinate i
  Weight out = x;
  const Rat& coeff = x[i - 1];
  if (coeff == 0) return out;
  for (int r = 0; r < rs.rank; ++r)
    out[r] -= coeff * rs.cartan[static_cast<size_t>(r)][static_cast<size_t>(i - 1)];
  return out;
}

ComplexWeight reflect(const RootSystem& rs, int i, const ComplexWeight& x) {
  return {reflect(rs, i, x.re), reflect(rs, i, x.im)};
}

WeylWord concat(const WeylWord& a, const WeylWord& b) {
  WeylWord out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

WeylWord inverse_word(const WeylWord& w) { return WeylWord(w.rbegin(), w.rend()); }

Weight apply_word(const RootSystem& rs, const WeylWord& w, const Weight& x) {
  Weight cur = x;
  for (auto it = w.rbegin(); it != w.rend(); ++it) cur = reflect(rs, *it, cur);
  return cur;
}

ComplexWeight apply_word(const RootSystem& rs, const WeylWord& w, const ComplexWeight& x) {
  return {apply_word(rs, w, x.re), apply_word(rs, w, x.im)};
}

std::pair<Weight, WeylWord> dominant_representative(const RootSystem& rs, const Weight& x) {
  Weight cur = x;
  WeylWord applied;  // reflections in application order
  for (;;) {
    int neg = 0;
    for (int i = 1; i <= rs.rank; ++i) {
      if (cur[i - 1] < 0) {
        neg = i;
        break;
      }
    }
    if (neg == 0) break;
    cur = reflect(rs, neg, cur);
    applied.push_back(neg);
  }
  return {cur, inverse_word(applied)};
}

Weight dot_apply(const RootSystem& rs, const WeylWord& w, const Weight& x) {
  return apply_word(rs, w, x + rs.rho) - rs.rho;
}

ComplexWeight dot_apply(const RootSystem& rs, const WeylWord& w, const ComplexWeight& x) {
  return {dot_apply(rs, w, x.re), apply_word(rs, w, x.im)};
}

std::vector<Weight> orbit(const RootSystem& rs, const Weight& x, long long bound) {
  if (rs.weyl_order > bound)
    throw OrbitTooLarge("|W(" + rs.label + ")| = " + std::to_string(rs.weyl_order) +
                        " exceeds bound " + std::to_string(bound));
  if (x.rank() != rs.rank) throw DimensionMismatch("orbit: weight rank");
  std::set<Weight> seen{x};
  std::vector<Weight> queue{x};
  for (size_t head = 0; head < queue.size(); ++head) {
    Weight cur = queue[head];
    for (int i = 1; i <= rs.rank; ++i) {
      Weight nxt = reflect(rs, i, cur);
      if (seen.insert(nxt).second) queue.push_back(nxt);
    }
  }
  return std::vector<Weight>(seen.begin(), seen.end());
}

WeylWord longest_word(const RootSystem& rs) {
  return dominant_representative(rs, -rs.rho).second;
}

static bool root_vector_negative(const RootSystem& rs, const Weight& w) {
  // convert to the alpha basis; a root is negative iff its coordinates are <= 0
  for (int k = 0; k < rs.rank; ++k) {
    Rat ck = 0;
    for (int j = 0; j < rs.rank; ++j)
      ck += rs.cartan_inv[static_cast<size_t>(k)][static_cast<size_t>(j)] * w[j];
    int s = sign_of(ck);
    if (s < 0) return true;
    if (s > 0) return false;
  }
  return false;
}

int weyl_length(const RootSystem& rs, const WeylWord& w) {
  int len = 0;
  for (const Root& beta : rs.positive_roots)
    if (root_vector_negative(rs, apply_word(rs, w, beta.weight))) ++len;
  return len;
}

bool is_identity(const RootSystem& rs, const WeylWord& w) {
  return apply_word(rs, w, rs.rho) == rs.rho;
}

bool same_element(const RootSystem& rs, const WeylWord& a, const WeylWord& b) {
  return apply_word(rs, a, rs.rho) == apply_word(rs, b, rs.rho);
}

WeylWord reduce_word(const RootSystem& rs, const WeylWord& w) {
  for (int i : w) check_letter(rs, i);
  WeylWord cur = w, stripped;
  while (!is_identity(rs, cur)) {
    int desc = 0;
    for (int i = 1; i <= rs.rank && desc == 0; ++i)
      if (root_vector_negative(rs, apply_word(rs, cur, rs.simple_root(i)))) desc = i;
    if (desc == 0) throw EngineError("reduce_word: non-identity element without descent");
    cur.push_back(desc);  // cur <- cur * s_desc, length drops by one
    stripped.push_back(desc);
  }
  return inverse_word(stripped);
}

static std::vector<WeylWord> bfs_elements(const RootSystem& rs, const std::vector<int>& gens,
                                          long long bound) {
  std::vector<WeylWord> out{{}};
  std::set<Weight> seen{rs.rho};
  for (size_t head = 0; head < out.size(); ++head) {
    WeylWord base = out[head];
    for (int i : gens) {
      WeylWord cand = concat(base, {i});
      Weight key = apply_word(rs, cand, rs.rho);
      if (seen.insert(key).second) {
        if (static_cast<long long>(out.size()) >= bound)
          throw OrbitTooLarge("group enumeration exceeds bound " + std::to_string(bound));
        out.push_back(cand);
      }
    }
  }
  return out;
}

const std::vector<WeylWord>& all_elements(const RootSystem& rs, long long bound) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<std::vector<WeylWord>>> cache;
  if (rs.weyl_order > bound)
    throw OrbitTooLarge("|W(" + rs.label + ")| = " + std::to_string(rs.weyl_order) +
                        " exceeds bound " + std::to_string(bound));
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(rs.label);
  if (it == cache.end()) {
    std::vector<int> gens;
    for (int i = 1; i <= rs.rank; ++i) gens.push_back(i);
    it = cache.emplace(rs.label,
                       std::make_unique<std::vector<WeylWord>>(bfs_elements(rs, gens, bound)))
             .first;
  }
  return *it->second;
}

std::vector<WeylWord> parabolic_elements(const RootSystem& rs, const std::vector<int>& gens,
                                         long long bound) {
  for (int i : gens) check_letter(rs, i);
  return bfs_elements(rs, gens, bound);
}

}  // namespace qdual
