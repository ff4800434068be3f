#include "qdual/weights.hpp"

#include <algorithm>
#include <memory>
#include <mutex>

namespace qdual {

namespace {

void require_dominant_integral(const RootSystem& rs, const Weight& mu, const char* where) {
  if (mu.rank() != rs.rank) throw DimensionMismatch(std::string(where) + ": rank");
  for (int i = 0; i < rs.rank; ++i)
    if (!is_integer(mu[i]) || mu[i] < 0)
      throw NotDominant(std::string(where) + ": " + weight_str(mu) + " is not dominant integral");
}

std::vector<Rat> alpha_coords(const RootSystem& rs, const Weight& x) {
  std::vector<Rat> out(static_cast<size_t>(rs.rank), Rat(0));
  for (int k = 0; k < rs.rank; ++k)
    for (int j = 0; j < rs.rank; ++j)
      out[static_cast<size_t>(k)] += rs.cartan_inv[static_cast<size_t>(k)][static_cast<size_t>(j)] * x[j];
  return out;
}

// Immutable weight-multiplicity table of one V(mu). Multiplicities are stored
// at dominant weights only; general lookups go through the dominant
// representative (W-invariance of weight multiplicities).
class MultTable {
 public:
  MultTable(const RootSystem& rs, const Weight& mu) : rs_(rs), mu_(mu) {
    box_ = alpha_coords(rs, mu - apply_word(rs, longest_word(rs), mu));
    for (const Rat& c : box_)
      if (!is_integer(c) || c < 0) throw NotDominant("weight box of " + weight_str(mu));

    // collect dominant weights of the box by increasing depth mu - lam
    std::vector<std::pair<long, Weight>> dominants;
    std::vector<long> digits(static_cast<size_t>(rs.rank), 0);
    collect(dominants, digits, 0, 0);
    std::sort(dominants.begin(), dominants.end(),
              [](const auto& a, const auto& b) {
                if (a.first != b.first) return a.first < b.first;
                return b.second < a.second;  // higher weights first within a depth level
              });

    Rat mu_norm = norm_sq_shifted(mu);
    for (const auto& [depth, lam] : dominants) {
      if (depth == 0) {
        mult_[lam] = 1;
        continue;
      }
      // Freudenthal: ((mu+rho)^2 - (lam+rho)^2) m(lam)
      //            = 2 sum_{beta>0} sum_{k>=1} (lam + k beta, beta) m(lam + k beta)
      Rat acc = 0;
      for (const Root& beta : rs.positive_roots) {
        for (long k = 1;; ++k) {
          Weight up = lam + (Rat(k) * beta.weight);
          long m = lookup(up);
          if (m == 0 && !inside_box(up)) break;
          if (m != 0) acc += Rat(m) * pairing(rs, up, beta.weight);
        }
      }
      Rat denom = mu_norm - norm_sq_shifted(lam);
      if (denom <= 0) throw EngineError("freudenthal: nonpositive denominator");
      Rat m = 2 * acc / denom;
      if (!is_integer(m) || m < 0) throw EngineError("freudenthal: non-integral multiplicity");
      mult_[lam] = m.get_num().get_si();
    }
  }

  long lookup(const Weight& lam) const {
    if (!inside_box(lam)) return 0;
    Weight dom = dominant_representative(rs_, lam).first;
    auto it = mult_.find(dom);
    return it == mult_.end() ? 0 : it->second;
  }

 private:
  Rat norm_sq_shifted(const Weight& x) const {
    Weight s = x + rs_.rho;
    return pairing(rs_, s, s);
  }

  bool inside_box(const Weight& lam) const {
    std::vector<Rat> c = alpha_coords(rs_, mu_ - lam);
    for (int i = 0; i < rs_.rank; ++i) {
      const Rat& ci = c[static_cast<size_t>(i)];
      if (!is_integer(ci) || ci < 0 || ci > box_[static_cast<size_t>(i)]) return false;
    }
    return true;
  }

  void collect(std::vector<std::pair<long, Weight>>& dominants, std::vector<long>& digits,
               int pos, long depth) {
    if (pos == rs_.rank) {
      Weight lam = mu_;
      for (int j = 0; j < rs_.rank; ++j) {
        if (digits[static_cast<size_t>(j)] == 0) continue;
        Weight aj = rs_.simple_root(j + 1);
        lam = lam - (Rat(digits[static_cast<size_t>(j)]) * aj);
      }
      for (int i = 0; i < rs_.rank; ++i)
        if (lam[i] < 0) return;
      dominants.emplace_back(depth, lam);
      return;
    }
    long hi = box_[static_cast<size_t>(pos)].get_num().get_si();
    for (long v = 0; v <= hi; ++v) {
      digits[static_cast<size_t>(pos)] = v;
      collect(dominants, digits, pos + 1, depth + v);
    }
    digits[static_cast<size_t>(pos)] = 0;
  }

  const RootSystem& rs_;
  Weight mu_;
  std::vector<Rat> box_;  // alpha-coordinates of mu - w0(mu): all weights lie in 0 <= c <= box
  std::map<Weight, long> mult_;
};

const MultTable& table_for(const RootSystem& rs, const Weight& mu) {
  static std::mutex mu_lock;
  static std::map<std::pair<std::string, Weight>, std::unique_ptr<MultTable>> cache;
  require_dominant_integral(rs, mu, "freudenthal_multiplicity");
  std::lock_guard<std::mutex> lock(mu_lock);
  auto key = std::make_pair(rs.label, mu);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, std::make_unique<MultTable>(rs, mu)).first;
  return *it->second;
}

}  // namespace

long freudenthal_multiplicity(const RootSystem& rs, const Weight& mu, const Weight& lam) {
  if (lam.rank() != rs.rank) throw DimensionMismatch("freudenthal_multiplicity: rank");
  return table_for(rs, mu).lookup(lam);
}

void prefetch_multiplicities(const RootSystem& rs, const Weight& mu) { table_for(rs, mu); }

long long weyl_dimension(const RootSystem& rs, const Weight& mu) {
  require_dominant_integral(rs, mu, "weyl_dimension");
  Rat prod = 1;
  Weight shifted = mu + rs.rho;
  for (const Root& beta : rs.positive_roots)
    prod *= pairing(rs, shifted, beta.weight) / pairing(rs, rs.rho, beta.weight);
  if (!is_integer(prod) || prod <= 0) throw EngineError("weyl_dimension: non-integral value");
  return prod.get_num().get_si();
}

long ktype_multiplicity(const RootSystem& rs, const Weight& mu, const Weight& lam) {
  require_dominant_integral(rs, mu, "ktype_multiplicity");
  if (!is_integral(lam)) throw NotDominant("ktype_multiplicity: lam must be integral");
  return freudenthal_multiplicity(rs, mu, lam);
}

SpinMultiset sl2_spin_content(const RootSystem& rs, const Weight& mu, const Weight& lam, int i) {
  require_dominant_integral(rs, mu, "sl2_spin_content");
  if (i < 1 || i > rs.rank) throw IndexOutOfRange("sl2_spin_content: index " + std::to_string(i));
  Rat m = lam[i - 1] / 2;
  Rat am = abs(m);
  Weight ai = rs.simple_root(i);

  SpinMultiset out;
  const MultTable& table = table_for(rs, mu);
  // walk s = |m|, |m|+1, ... until the alpha_i string through lam leaves V(mu)
  for (Rat s = am;; s += 1) {
    Rat steps_up = s - m;  // integer by construction
    Weight at = lam + (steps_up * ai);
    long here = table.lookup(at);
    long above = table.lookup(at + ai);
    long n = here - above;
    if (n < 0) throw EngineError("sl2_spin_content: negative string difference");
    if (n > 0) out.entries[s] = n;
    if (here == 0) break;
  }
  return out;
}

Rat coroot_height(const RootSystem& rs, const Weight& mu) {
  Rat h = 0;
  for (const Rat& c : alpha_coords(rs, mu)) h += c;
  return h;
}

std::vector<Weight> enumerate_ktypes(const RootSystem& rs, const Weight& lam, const Rat& cutoff) {
  if (!is_integral(lam)) throw NotDominant("enumerate_ktypes: lam must be integral");
  std::vector<Rat> omega_heights;  // (omega_i, rho^vee)
  for (int i = 0; i < rs.rank; ++i) {
    Rat h = 0;
    for (int k = 0; k < rs.rank; ++k)
      h += rs.cartan_inv[static_cast<size_t>(k)][static_cast<size_t>(i)];
    omega_heights.push_back(h);
  }

  std::vector<Weight> out;
  Weight mu = Weight::zero(rs.rank);
  auto recurse = [&](auto&& self, int pos, Rat budget) -> void {
    if (pos == rs.rank) {
      std::vector<Rat> diff = alpha_coords(rs, mu - lam);
      for (const Rat& c : diff)
        if (!is_integer(c)) return;
      if (freudenthal_multiplicity(rs, mu, lam) > 0) out.push_back(mu);
      return;
    }
    for (long v = 0;; ++v) {
      Rat used = Rat(v) * omega_heights[static_cast<size_t>(pos)];
      if (used > budget) break;
      mu[pos] = v;
      self(self, pos + 1, budget - used);
    }
    mu[pos] = 0;
  };
  recurse(recurse, 0, cutoff);

  std::sort(out.begin(), out.end(), [&](const Weight& a, const Weight& b) {
    Rat ha = coroot_height(rs, a), hb = coroot_height(rs, b);
    int s = cmp(ha, hb);
    if (s != 0) return s < 0;
    return a < b;
  });
  return out;
}

}  // namespace qdual
