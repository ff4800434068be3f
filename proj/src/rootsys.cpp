#include "qdual/rootsys.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>

namespace qdual {

bool Weight::operator<(const Weight& o) const {
  if (c.size() != o.c.size()) return c.size() < o.c.size();
  for (size_t i = 0; i < c.size(); ++i) {
    int s = cmp(c[i], o.c[i]);
    if (s != 0) return s < 0;
  }
  return false;
}

static void check_same_rank(const Weight& a, const Weight& b, const char* where) {
  if (a.rank() != b.rank())
    throw DimensionMismatch(std::string(where) + ": ranks " + std::to_string(a.rank()) +
                            " vs " + std::to_string(b.rank()));
}

Weight operator+(const Weight& a, const Weight& b) {
  check_same_rank(a, b, "operator+");
  Weight out = a;
  for (int i = 0; i < a.rank(); ++i) out[i] += b[i];
  return out;
}

Weight operator-(const Weight& a, const Weight& b) {
  check_same_rank(a, b, "operator-");
  Weight out = a;
  for (int i = 0; i < a.rank(); ++i) out[i] -= b[i];
  return out;
}

Weight operator-(const Weight& a) {
  Weight out = a;
  for (int i = 0; i < a.rank(); ++i) out[i] = -out[i];
  return out;
}

Weight operator*(const Rat& s, const Weight& a) {
  Weight out = a;
  for (int i = 0; i < a.rank(); ++i) out[i] *= s;
  return out;
}

bool is_integral(const Weight& x) {
  for (int i = 0; i < x.rank(); ++i)
    if (!is_integer(x[i])) return false;
  return true;
}

bool is_zero(const Weight& x) {
  for (int i = 0; i < x.rank(); ++i)
    if (x[i] != 0) return false;
  return true;
}

Weight parse_weight(const std::string& s) {
  Weight out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.c.push_back(parse_rat(tok));
  if (out.c.empty()) throw std::invalid_argument("empty weight: '" + s + "'");
  return out;
}

std::string weight_str(const Weight& x) {
  std::string out;
  for (int i = 0; i < x.rank(); ++i) {
    if (i) out += ',';
    out += rat_str(x[i]);
  }
  return out;
}

Weight RootSystem::simple_root(int i) const {
  if (i < 1 || i > rank) throw IndexOutOfRange("simple_root: " + std::to_string(i));
  Weight out = Weight::zero(rank);
  for (int r = 0; r < rank; ++r) out[r] = cartan[static_cast<size_t>(r)][static_cast<size_t>(i - 1)];
  return out;
}

Rat pairing(const RootSystem& rs, const Weight& x, const Weight& y) {
  if (x.rank() != rs.rank || y.rank() != rs.rank)
    throw DimensionMismatch("pairing: expected rank " + std::to_string(rs.rank));
  Rat acc = 0;
  for (int i = 0; i < rs.rank; ++i) {
    if (x[i] == 0) continue;
    Rat row = 0;
    for (int j = 0; j < rs.rank; ++j) row += rs.form[static_cast<size_t>(i)][static_cast<size_t>(j)] * y[j];
    acc += x[i] * row;
  }
  return acc;
}

Rat coroot_pairing(const RootSystem& rs, const Weight& x, const Root& alpha) {
  return 2 * pairing(rs, x, alpha.weight) / alpha.length_sq;
}

namespace {

// Cartan matrix with the convention cartan[i][j] = (alpha_j, alpha_i^vee),
// plus symmetrizers d_i = (alpha_i, alpha_i)/2 normalized to min 1.
void cartan_data(char series, int rank, std::vector<std::vector<long>>& a, std::vector<long>& d,
                 long long& order) {
  auto chain = [&](long lo, long hi) {
    // symmetric single bonds between consecutive nodes lo..hi (0-based)
    for (long i = lo; i < hi; ++i) {
      a[static_cast<size_t>(i)][static_cast<size_t>(i + 1)] = -1;
      a[static_cast<size_t>(i + 1)][static_cast<size_t>(i)] = -1;
    }
  };
  auto fact = [](int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };
  int n = rank;
  a.assign(static_cast<size_t>(n), std::vector<long>(static_cast<size_t>(n), 0));
  for (int i = 0; i < n; ++i) a[static_cast<size_t>(i)][static_cast<size_t>(i)] = 2;
  d.assign(static_cast<size_t>(n), 1);

  switch (series) {
    case 'A':
      chain(0, n - 1);
      order = fact(n + 1);
      break;
    case 'B':
      // alpha_n short, the rest long
      chain(0, n - 1);
      for (int i = 0; i < n - 1; ++i) d[static_cast<size_t>(i)] = 2;
      a[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 2)] = -2;
      order = (1LL << n) * fact(n);
      break;
    case 'C':
      // alpha_n long, the rest short
      chain(0, n - 1);
      d[static_cast<size_t>(n - 1)] = 2;
      a[static_cast<size_t>(n - 2)][static_cast<size_t>(n - 1)] = -2;
      order = (1LL << n) * fact(n);
      break;
    case 'D':
      chain(0, n - 2);
      a[static_cast<size_t>(n - 3)][static_cast<size_t>(n - 1)] = -1;
      a[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 3)] = -1;
      order = (1LL << (n - 1)) * fact(n);
      break;
    case 'E': {
      // Bourbaki: chain 1-3-4-...-n with node 2 attached to node 4
      chain(2, n - 1);
      a[0][2] = a[2][0] = -1;
      a[1][3] = a[3][1] = -1;
      if (n == 6) order = 51840LL;
      if (n == 7) order = 2903040LL;
      if (n == 8) order = 696729600LL;
      break;
    }
    case 'F':
      // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      chain(0, 3);
      d[0] = d[1] = 2;
      a[2][1] = -2;
      order = 1152LL;
      break;
    case 'G':
      // alpha_1 short, alpha_2 long
      d[1] = 3;
      a[0][1] = -3;
      a[1][0] = -1;
      order = 12LL;
      break;
    default:
      throw InvalidType(std::string("unknown series '") + series + "'");
  }
}

bool valid_type(char series, int rank) {
  switch (series) {
    case 'A': return rank >= 1 && rank <= 10;
    case 'B': return rank >= 2 && rank <= 10;
    case 'C': return rank >= 2 && rank <= 10;
    case 'D': return rank >= 4 && rank <= 10;
    case 'E': return rank >= 6 && rank <= 8;
    case 'F': return rank == 4;
    case 'G': return rank == 2;
    default: return false;
  }
}

std::vector<std::vector<Rat>> invert(const std::vector<std::vector<long>>& a) {
  size_t n = a.size();
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(2 * n, Rat(0)));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
    m[i][n + i] = 1;
  }
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) throw InvalidType("singular Cartan matrix");
    std::swap(m[piv], m[col]);
    Rat inv = 1 / m[col][col];
    for (size_t j = 0; j < 2 * n; ++j) m[col][j] *= inv;
    for (size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rat f = m[r][col];
      for (size_t j = 0; j < 2 * n; ++j) m[r][j] -= f * m[col][j];
    }
  }
  std::vector<std::vector<Rat>> out(n, std::vector<Rat>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) out[i][j] = m[i][n + j];
  return out;
}

}  // namespace

RootSystem build_root_system(char series, int rank) {
  if (!valid_type(series, rank))
    throw InvalidType(std::string(1, series) + std::to_string(rank) +
                      " (supported: A1-A10, B2-B10, C2-C10, D4-D10, E6-E8, F4, G2)");
  RootSystem rs;
  rs.series = series;
  rs.rank = rank;
  rs.label = std::string(1, series) + std::to_string(rank);
  cartan_data(series, rank, rs.cartan, rs.d, rs.weyl_order);
  rs.cartan_inv = invert(rs.cartan);

  rs.form.assign(static_cast<size_t>(rank), std::vector<Rat>(static_cast<size_t>(rank)));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      rs.form[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          Rat(rs.d[static_cast<size_t>(i)]) * rs.cartan_inv[static_cast<size_t>(i)][static_cast<size_t>(j)];

  rs.rho = Weight(std::vector<Rat>(static_cast<size_t>(rank), Rat(1)));

  for (int j = 0; j < rank; ++j) {
    Weight v = Weight::zero(rank);
    for (int i = 0; i < rank; ++i)
      v[i] = Rat(rs.cartan[static_cast<size_t>(i)][static_cast<size_t>(j)]) / rs.d[static_cast<size_t>(j)];
    rs.coroot_basis.push_back(v);
  }

  // Positive roots: orbit of the simple roots under simple reflections,
  // filtered by positivity in the alpha basis. Coordinates stay integral.
  struct RawRoot {
    std::vector<long> alpha;
    std::vector<Rat> omega;
  };
  auto omega_of_alpha = [&](const std::vector<long>& al) {
    std::vector<Rat> om(static_cast<size_t>(rank), Rat(0));
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j)
        om[static_cast<size_t>(i)] += Rat(rs.cartan[static_cast<size_t>(i)][static_cast<size_t>(j)]) * al[static_cast<size_t>(j)];
    return om;
  };
  std::set<std::vector<long>> seen;
  std::vector<RawRoot> queue;
  for (int j = 0; j < rank; ++j) {
    std::vector<long> al(static_cast<size_t>(rank), 0);
    al[static_cast<size_t>(j)] = 1;
    seen.insert(al);
    queue.push_back({al, omega_of_alpha(al)});
  }
  for (size_t head = 0; head < queue.size(); ++head) {
    RawRoot cur = queue[head];
    for (int i = 0; i < rank; ++i) {
      // s_i: subtract (beta, alpha_i^vee) = omega-coordinate i from alpha-coordinate i
      Rat pai = cur.omega[static_cast<size_t>(i)];
      if (!is_integer(pai)) throw InvalidType("non-integral root pairing");
      std::vector<long> al = cur.alpha;
      al[static_cast<size_t>(i)] -= pai.get_num().get_si();
      bool pos = true, neg = true;
      for (long v : al) {
        if (v > 0) neg = false;
        if (v < 0) pos = false;
      }
      if (!pos && neg) continue;  // negative root: mirror of one we already have
      if (!pos) throw InvalidType("reflection produced a mixed-sign vector");
      if (seen.insert(al).second) queue.push_back({al, omega_of_alpha(al)});
    }
  }
  for (const RawRoot& r : queue) {
    Root root;
    root.weight = Weight(r.omega);
    root.alpha = r.alpha;
    root.height = 0;
    for (long v : r.alpha) root.height += v;
    rs.positive_roots.push_back(std::move(root));
  }
  std::sort(rs.positive_roots.begin(), rs.positive_roots.end(), [](const Root& a, const Root& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.alpha > b.alpha;  // descending lex puts alpha_1 before alpha_2 at height 1
  });
  for (Root& r : rs.positive_roots) {
    r.length_sq = pairing(rs, r.weight, r.weight);
    r.q_exponent = r.length_sq / 2;
  }
  return rs;
}

const RootSystem& root_system(const std::string& label) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<RootSystem>> cache;

  if (label.size() < 2) throw InvalidType("bad root-system label '" + label + "'");
  char series = label[0];
  int rank = 0;
  try {
    size_t used = 0;
    rank = std::stoi(label.substr(1), &used);
    if (used + 1 != label.size()) throw std::invalid_argument(label);
  } catch (const std::exception&) {
    throw InvalidType("bad root-system label '" + label + "'");
  }

  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(label);
  if (it == cache.end())
    it = cache.emplace(label, std::make_unique<RootSystem>(build_root_system(series, rank))).first;
  return *it->second;
}

}  // namespace qdual
