#include "frobcrit/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "frobcrit/error.hpp"

namespace frobcrit {

std::string to_string(const Component& c) {
  return std::string(1, c.type) + std::to_string(c.rank);
}

// ---------------------------------------------------------------- Weight

bool Weight::is_integral() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const Rational& q) { return q.denominator() == 1; });
}

IntVec Weight::to_int() const {
  IntVec out;
  out.reserve(coords_.size());
  for (const auto& q : coords_) {
    if (q.denominator() != 1) throw Error("weight " + to_string(*this) + " is not integral");
    out.push_back(q.numerator());
  }
  return out;
}

Weight& Weight::operator+=(const Weight& other) {
  if (other.rank() != rank()) throw Error("weight rank mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& other) {
  if (other.rank() != rank()) throw Error("weight rank mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

Weight& Weight::operator*=(const Rational& s) {
  for (auto& q : coords_) q *= s;
  return *this;
}

Weight Weight::operator-() const {
  Weight out = *this;
  for (auto& q : out.coords_) q = -q;
  return out;
}

std::string to_string(const Weight& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.rank(); ++i) {
    if (i) out += ",";
    out += to_string(w[i]);
  }
  return out + ")";
}

bool is_dominant(const Weight& w) {
  return std::all_of(w.coords().begin(), w.coords().end(),
                     [](const Rational& q) { return q >= 0; });
}

bool is_regular_dominant(const Weight& w) {
  return std::all_of(w.coords().begin(), w.coords().end(),
                     [](const Rational& q) { return q > 0; });
}

// ---------------------------------------------------------------- Cartan data

std::vector<Component> parse_spec(std::string_view spec) {
  std::vector<Component> out;
  std::size_t pos = 0;
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  if (trim(spec).empty()) return out;
  while (pos <= spec.size()) {
    auto comma = spec.find(',', pos);
    auto token = trim(spec.substr(pos, comma == std::string_view::npos ? spec.npos : comma - pos));
    if (token.size() < 2) throw Error("invalid root system component \"" + std::string(token) + "\"");
    char type = static_cast<char>(std::toupper(static_cast<unsigned char>(token[0])));
    int rank = 0;
    for (char ch : token.substr(1)) {
      if (ch < '0' || ch > '9' || rank > 1000)
        throw Error("invalid root system component \"" + std::string(token) + "\"");
      rank = rank * 10 + (ch - '0');
    }
    out.push_back({type, rank});
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

IntMatrix cartan_matrix_of(const Component& c) {
  const int n = c.rank;
  auto bad = [&] { return Error("invalid root system component " + to_string(c)); };
  switch (c.type) {
    case 'A': if (n < 1) throw bad(); break;
    case 'B': case 'C': if (n < 2) throw bad(); break;
    case 'D': if (n < 3) throw bad(); break;
    case 'E': if (n < 6 || n > 8) throw bad(); break;
    case 'F': if (n != 4) throw bad(); break;
    case 'G': if (n != 2) throw bad(); break;
    default: throw bad();
  }
  IntMatrix a(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };  // 0-based
  switch (c.type) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 1][n - 2] = -2;  // alpha_n short
      break;
    case 'C':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 2][n - 1] = -2;  // alpha_n long
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'E':
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'F':
      link(0, 1);
      link(1, 2);
      link(2, 3);
      a[2][1] = -2;  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      break;
    case 'G':
      a[0][1] = -3;  // alpha_1 short
      a[1][0] = -1;
      break;
  }
  return a;
}

std::uint64_t weyl_group_order(const Component& c) {
  auto factorial = [](int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
  };
  switch (c.type) {
    case 'A': return factorial(c.rank + 1);
    case 'B':
    case 'C': return (std::uint64_t{1} << c.rank) * factorial(c.rank);
    case 'D': return (std::uint64_t{1} << (c.rank - 1)) * factorial(c.rank);
    case 'E': return c.rank == 6 ? 51840ULL : c.rank == 7 ? 2903040ULL : 696729600ULL;
    case 'F': return 1152;
    case 'G': return 12;
  }
  throw Error("unknown component type " + to_string(c));
}

namespace {

std::vector<std::int64_t> symmetrize(const IntMatrix& a) {
  const std::size_t n = a.size();
  std::vector<Rational> d(n, Rational(0));
  for (std::size_t start = 0; start < n; ++start) {
    if (d[start] != 0) continue;
    std::vector<std::size_t> comp{start};
    d[start] = 1;
    for (std::size_t k = 0; k < comp.size(); ++k) {
      auto i = comp[k];
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || a[i][j] == 0) continue;
        if (a[j][i] == 0) throw Error("Cartan matrix is not symmetrizable");
        Rational dj = d[i] * Rational(a[i][j], a[j][i]);
        if (d[j] == 0) {
          d[j] = dj;
          comp.push_back(j);
        } else if (d[j] != dj) {
          throw Error("Cartan matrix is not symmetrizable");
        }
      }
    }
    // Normalize the component so its shortest root has d = 1.
    Rational min = d[comp.front()];
    for (auto i : comp) min = std::min(min, d[i]);
    for (auto i : comp) d[i] /= min;
  }
  std::vector<std::int64_t> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (d[i].denominator() != 1) throw Error("Cartan matrix is not of finite type");
    out[i] = d[i].numerator();
  }
  return out;
}

std::vector<RatVec> invert(const IntMatrix& a) {
  const std::size_t n = a.size();
  std::vector<RatVec> m(n, RatVec(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
    m[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) throw Error("Cartan matrix is singular");
    std::swap(m[piv], m[col]);
    Rational inv = 1 / m[col][col];
    for (auto& q : m[col]) q *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (std::size_t c = 0; c < 2 * n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  std::vector<RatVec> inv(n, RatVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
  return inv;
}

std::int64_t height(const IntVec& v) { return std::accumulate(v.begin(), v.end(), std::int64_t{0}); }

}  // namespace

Component classify_irreducible(const IntMatrix& cartan) {
  RootSystem rs = RootSystem::from_cartan(cartan, {{'?', static_cast<int>(cartan.size())}});
  const int n = static_cast<int>(rs.rank());
  const auto N = static_cast<int>(rs.num_positive_roots());
  bool simply_laced = true;
  int short_count = 0;
  int first_short = -1;
  for (int i = 0; i < n; ++i) {
    if (rs.symmetrizer(i) != 1) simply_laced = false;
  }
  if (simply_laced) {
    if (N == n * (n + 1) / 2) return {'A', n};
    if (n >= 4 && N == n * (n - 1)) return {'D', n};
    if (n == 6 && N == 36) return {'E', 6};
    if (n == 7 && N == 63) return {'E', 7};
    if (n == 8 && N == 120) return {'E', 8};
  } else {
    if (n == 2 && N == 6) return {'G', 2};
    if (n == 4 && N == 24) return {'F', 4};
    if (N == n * n) {
      for (int i = 0; i < n; ++i) {
        if (rs.symmetrizer(i) == 1) {
          ++short_count;
          if (first_short < 0) first_short = i;
        }
      }
      if (n == 2) return {first_short == 0 ? 'C' : 'B', 2};
      if (short_count == 1) return {'B', n};
      if (short_count == n - 1) return {'C', n};
    }
  }
  throw Error("Cartan matrix is not of finite type");
}

// ---------------------------------------------------------------- RootSystem

RootSystem RootSystem::from_spec(std::string_view spec) {
  return from_components(parse_spec(spec));
}

RootSystem RootSystem::from_components(const std::vector<Component>& components) {
  std::size_t n = 0;
  std::vector<IntMatrix> blocks;
  for (const auto& c : components) {
    blocks.push_back(cartan_matrix_of(c));
    n += blocks.back().size();
  }
  IntMatrix a(n, IntVec(n, 0));
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) a[off + i][off + j] = b[i][j];
    off += b.size();
  }
  return from_cartan(std::move(a), components);
}

RootSystem RootSystem::from_cartan(IntMatrix cartan, std::vector<Component> labels) {
  const std::size_t n = cartan.size();
  for (const auto& row : cartan) {
    if (row.size() != n) throw Error("Cartan matrix is not square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (cartan[i][i] != 2) throw Error("Cartan matrix diagonal entry is not 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && cartan[i][j] > 0) throw Error("Cartan matrix has a positive off-diagonal entry");
      if ((cartan[i][j] == 0) != (cartan[j][i] == 0)) throw Error("Cartan matrix is not symmetrizable");
    }
  }
  RootSystem rs;
  rs.cartan_ = std::move(cartan);
  rs.components_ = std::move(labels);
  rs.finish();
  if (rs.components_.empty() && n > 0) {
    for (const auto& comp : rs.diagram_components(rs.all_indices())) {
      auto c = classify_irreducible(rs.sub_cartan(comp));
      rs.components_.push_back(c);
    }
  }
  return rs;
}

void RootSystem::finish() {
  const std::size_t n = rank();
  sym_ = symmetrize(cartan_);
  cartan_inv_ = invert(cartan_);

  // Root-string closure: for a positive root beta != alpha_i, with p the
  // largest k such that beta - k alpha_i is a root, beta + alpha_i is a root
  // iff p - <beta, alpha_i^vee> > 0. Processing in height order makes every
  // beta - k alpha_i available when beta is examined.
  std::set<IntVec> seen;
  std::deque<IntVec> queue;
  positive_.clear();
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  const std::size_t limit = 200 * (n + 1) * (n + 1);
  while (!queue.empty()) {
    IntVec beta = std::move(queue.front());
    queue.pop_front();
    positive_.push_back(beta);
    if (positive_.size() > limit) throw Error("Cartan matrix is not of finite type");
    for (std::size_t i = 0; i < n; ++i) {
      if (height(beta) == 1 && beta[i] == 1) continue;
      std::int64_t p = 0;
      for (IntVec down = beta;;) {
        down[i] -= 1;
        if (down[i] < 0 || !seen.count(down)) break;
        ++p;
      }
      std::int64_t pairing = 0;
      for (std::size_t j = 0; j < n; ++j) pairing += cartan_[i][j] * beta[j];
      if (p - pairing > 0) {
        IntVec up = beta;
        up[i] += 1;
        if (seen.insert(up).second) queue.push_back(std::move(up));
      }
    }
  }
  std::sort(positive_.begin(), positive_.end(), [](const IntVec& a, const IntVec& b) {
    auto ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  root_index_.clear();
  weight_index_.clear();
  for (std::size_t k = 0; k < positive_.size(); ++k) {
    root_index_[positive_[k]] = k;
    weight_index_[root_to_weight_coords(positive_[k])] = k;
  }
}

std::string RootSystem::spec() const {
  std::string out;
  for (const auto& c : components_) {
    if (!out.empty()) out += ",";
    out += to_string(c);
  }
  return out;
}

IntVec RootSystem::root_to_weight_coords(const IntVec& root) const {
  const std::size_t n = rank();
  if (root.size() != n) throw Error("root rank mismatch");
  IntVec out(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i] += cartan_[i][j] * root[j];
  return out;
}

Weight RootSystem::root_weight(const IntVec& root) const {
  return Weight(root_to_weight_coords(root));
}

IntVec RootSystem::coroot(const IntVec& root) const {
  bool neg = false;
  if (!find_root(root, &neg)) throw Error("vector is not a root");
  const std::size_t n = rank();
  // (beta, beta) / 2 with (alpha_i, alpha_j) = d_i a_ij.
  std::int64_t twice_norm = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) twice_norm += root[i] * root[j] * sym_[i] * cartan_[i][j];
  const std::int64_t d_beta = twice_norm / 2;
  IntVec out(n);
  for (std::size_t j = 0; j < n; ++j) {
    auto num = root[j] * sym_[j];
    if (num % d_beta != 0) throw Error("non-integral coroot");
    out[j] = num / d_beta;
  }
  return out;
}

std::optional<std::size_t> RootSystem::find_root(const IntVec& root, bool* negative) const {
  if (root.size() != rank()) return std::nullopt;
  if (auto it = root_index_.find(root); it != root_index_.end()) {
    if (negative) *negative = false;
    return it->second;
  }
  IntVec neg(root);
  for (auto& x : neg) x = -x;
  if (auto it = root_index_.find(neg); it != root_index_.end()) {
    if (negative) *negative = true;
    return it->second;
  }
  return std::nullopt;
}

std::optional<std::size_t> RootSystem::find_root_by_weight(const IntVec& weight_coords,
                                                           bool* negative) const {
  if (auto it = weight_index_.find(weight_coords); it != weight_index_.end()) {
    if (negative) *negative = false;
    return it->second;
  }
  IntVec neg(weight_coords);
  for (auto& x : neg) x = -x;
  if (auto it = weight_index_.find(neg); it != weight_index_.end()) {
    if (negative) *negative = true;
    return it->second;
  }
  return std::nullopt;
}

void RootSystem::check_rank(const Weight& w, std::string_view what) const {
  if (w.rank() != rank())
    throw Error(std::string(what) + ": weight of rank " + std::to_string(w.rank()) +
                " used with root system of rank " + std::to_string(rank()));
}

Rational RootSystem::cartan_pairing(const Weight& lambda, const IntVec& beta) const {
  check_rank(lambda, "cartan_pairing");
  auto c = coroot(beta);
  Rational out = 0;
  for (std::size_t j = 0; j < rank(); ++j) out += lambda[j] * c[j];
  return out;
}

RatVec RootSystem::to_simple_coords(const Weight& lambda) const {
  check_rank(lambda, "to_simple_coords");
  const std::size_t n = rank();
  RatVec out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i] += cartan_inv_[i][j] * lambda[j];
  return out;
}

Weight RootSystem::from_simple_coords(const RatVec& coords) const {
  const std::size_t n = rank();
  if (coords.size() != n) throw Error("simple-root coordinate rank mismatch");
  RatVec out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i] += Rational(cartan_[i][j]) * coords[j];
  return Weight(std::move(out));
}

Rational RootSystem::inner_product(const Weight& a, const Weight& b) const {
  check_rank(a, "inner_product");
  check_rank(b, "inner_product");
  // (a, alpha_j) = d_j a_j, and b = sum_j y_j alpha_j.
  auto y = to_simple_coords(b);
  Rational out = 0;
  for (std::size_t j = 0; j < rank(); ++j) out += y[j] * a[j] * sym_[j];
  return out;
}

IndexSet RootSystem::all_indices() const {
  IndexSet out(rank());
  std::iota(out.begin(), out.end(), 0);
  return out;
}

void RootSystem::check_index_set(const IndexSet& J) const {
  std::set<int> seen;
  for (int j : J) {
    if (j < 0 || static_cast<std::size_t>(j) >= rank())
      throw Error("simple root index " + std::to_string(j + 1) + " out of range 1.." +
                  std::to_string(rank()));
    if (!seen.insert(j).second) throw Error("duplicate simple root index " + std::to_string(j + 1));
  }
}

Weight RootSystem::fundamental_weight(std::size_t i) const {
  if (i >= rank()) throw Error("fundamental weight index out of range");
  RatVec c(rank());
  c[i] = 1;
  return Weight(std::move(c));
}

Weight RootSystem::rho() const { return Weight(RatVec(rank(), Rational(1))); }

Weight RootSystem::rho_J(const IndexSet& J) const {
  check_index_set(J);
  RatVec c(rank());
  for (int j : J) c[j] = 1;
  return Weight(std::move(c));
}

Weight RootSystem::positive_root_sum(const IndexSet& J) const {
  check_index_set(J);
  std::vector<bool> in(rank(), false);
  for (int j : J) in[j] = true;
  IntVec total(rank(), 0);
  for (const auto& beta : positive_) {
    bool inside = true;
    for (std::size_t i = 0; i < rank(); ++i)
      if (beta[i] != 0 && !in[i]) inside = false;
    if (!inside) continue;
    for (std::size_t i = 0; i < rank(); ++i) total[i] += beta[i];
  }
  return root_weight(total);
}

IntMatrix RootSystem::sub_cartan(const IndexSet& J) const {
  check_index_set(J);
  IntMatrix out(J.size(), IntVec(J.size()));
  for (std::size_t a = 0; a < J.size(); ++a)
    for (std::size_t b = 0; b < J.size(); ++b) out[a][b] = cartan_[J[a]][J[b]];
  return out;
}

std::vector<IndexSet> RootSystem::diagram_components(const IndexSet& J) const {
  check_index_set(J);
  std::vector<IndexSet> out;
  std::vector<bool> in(rank(), false), done(rank(), false);
  for (int j : J) in[j] = true;
  for (int start : J) {
    if (done[start]) continue;
    IndexSet comp{start};
    done[start] = true;
    for (std::size_t k = 0; k < comp.size(); ++k) {
      for (std::size_t j = 0; j < rank(); ++j) {
        if (in[j] && !done[j] && cartan_[comp[k]][j] != 0) {
          done[j] = true;
          comp.push_back(static_cast<int>(j));
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::uint64_t RootSystem::weyl_order(const IndexSet& J) const {
  std::uint64_t order = 1;
  for (const auto& comp : diagram_components(J)) {
    order *= weyl_group_order(classify_irreducible(sub_cartan(comp)));
  }
  return order;
}

}  // namespace frobcrit
