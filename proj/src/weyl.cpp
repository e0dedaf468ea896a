#include "frobcrit/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <unordered_map>

#include "frobcrit/error.hpp"

namespace frobcrit {

namespace {

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  IntMatrix c(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

IntMatrix reflection_matrix(const RootSystem& rs, int i) {
  // s_i(lambda)_k = lambda_k - lambda_i * <alpha_i, alpha_k^vee>
  const std::size_t n = rs.rank();
  IntMatrix m(n, IntVec(n, 0));
  for (std::size_t k = 0; k < n; ++k) {
    m[k][k] = 1;
    m[k][i] -= rs.cartan(k, i);
  }
  return m;
}

struct VecHash {
  std::size_t operator()(const IntVec& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto x : v) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL;
    return h;
  }
};

}  // namespace

WeylElement WeylElement::identity(const RootSystem& rs) {
  WeylElement w;
  const std::size_t n = rs.rank();
  w.matrix_.assign(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) w.matrix_[i][i] = 1;
  return w;
}

WeylElement WeylElement::simple_reflection(const RootSystem& rs, int i) {
  if (i < 0 || static_cast<std::size_t>(i) >= rs.rank())
    throw Error("simple reflection index " + std::to_string(i + 1) + " out of range");
  WeylElement w;
  w.matrix_ = reflection_matrix(rs, i);
  w.word_ = {i};
  return w;
}

WeylElement WeylElement::from_word(const RootSystem& rs, const Word& word) {
  WeylElement w = identity(rs);
  for (int i : word) w = w * simple_reflection(rs, i);
  return w;
}

Weight WeylElement::act(const Weight& lambda) const {
  if (lambda.rank() != rank()) throw Error("act: weight rank mismatch");
  RatVec out(rank());
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) out[i] += lambda[j] * matrix_[i][j];
  return Weight(std::move(out));
}

IntVec WeylElement::act(const IntVec& lambda) const {
  if (lambda.size() != rank()) throw Error("act: weight rank mismatch");
  IntVec out(rank(), 0);
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) out[i] += matrix_[i][j] * lambda[j];
  return out;
}

WeylElement WeylElement::operator*(const WeylElement& other) const {
  if (other.rank() != rank()) throw Error("Weyl element rank mismatch");
  WeylElement w;
  w.matrix_ = multiply(matrix_, other.matrix_);
  w.word_ = word_;
  w.word_.insert(w.word_.end(), other.word_.begin(), other.word_.end());
  return w;
}

WeylElement WeylElement::inverse(const RootSystem& rs) const {
  Word rev(word_.rbegin(), word_.rend());
  auto inv = from_word(rs, rev);
  if (multiply(inv.matrix_, matrix_) != identity(rs).matrix_)
    throw Error("Weyl element word does not match its matrix");
  return inv;
}

IntVec act_on_root(const RootSystem& rs, const WeylElement& w, const IntVec& beta) {
  auto image = w.act(rs.root_to_weight_coords(beta));
  bool neg = false;
  auto idx = rs.find_root_by_weight(image, &neg);
  if (!idx) throw Error("Weyl element does not preserve the root system");
  IntVec out = rs.positive_roots()[*idx];
  if (neg)
    for (auto& x : out) x = -x;
  return out;
}

std::size_t length(const RootSystem& rs, const WeylElement& w) {
  std::size_t count = 0;
  for (const auto& beta : rs.positive_roots()) {
    bool neg = false;
    auto idx = rs.find_root_by_weight(w.act(rs.root_to_weight_coords(beta)), &neg);
    if (!idx) throw Error("Weyl element does not preserve the root system");
    if (neg) ++count;
  }
  return count;
}

WeylElement reduced(const RootSystem& rs, const WeylElement& w) {
  // Peel right descents: l(w s_i) < l(w) iff w(alpha_i) < 0.
  WeylElement cur = w;
  Word tail;
  for (bool found = true; found;) {
    found = false;
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      IntVec ai(rs.rank(), 0);
      ai[i] = 1;
      auto img = act_on_root(rs, cur, ai);
      if (std::any_of(img.begin(), img.end(), [](auto x) { return x < 0; })) {
        cur = cur * WeylElement::simple_reflection(rs, static_cast<int>(i));
        tail.push_back(static_cast<int>(i));
        found = true;
        break;
      }
    }
  }
  Word word(tail.rbegin(), tail.rend());
  return WeylElement::from_word(rs, word);
}

WeylElement longest_element(const RootSystem& rs, const IndexSet& J) {
  rs.check_index_set(J);
  // Drive rho to the J-antidominant chamber; since rho is regular the
  // resulting element of W_J is its longest element.
  WeylElement w = WeylElement::identity(rs);
  IntVec mu(rs.rank(), 1);
  for (bool moved = true; moved;) {
    moved = false;
    for (int j : J) {
      if (mu[j] > 0) {
        auto s = WeylElement::simple_reflection(rs, j);
        mu = s.act(mu);
        w = s * w;
        moved = true;
        break;
      }
    }
  }
  return w;
}

std::uint64_t default_enum_cap() {
  if (const char* env = std::getenv("FROBCRIT_ENUM_CAP")) {
    char* end = nullptr;
    auto v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 1'000'000;
}

namespace {

std::vector<WeylElement> breadth_first(const RootSystem& rs, const IndexSet& J,
                                       std::size_t limit) {
  IndexSet gens = J;
  std::sort(gens.begin(), gens.end());
  std::vector<WeylElement> gen_elems;
  for (int j : gens) gen_elems.push_back(WeylElement::simple_reflection(rs, j));

  // w is determined by w(rho) because rho is regular.
  const IntVec rho(rs.rank(), 1);
  std::unordered_map<IntVec, std::size_t, VecHash> seen;
  std::vector<WeylElement> out;
  out.push_back(WeylElement::identity(rs));
  seen.emplace(rho, 0);
  for (std::size_t k = 0; k < out.size() && out.size() < limit; ++k) {
    for (const auto& s : gen_elems) {
      WeylElement next = out[k] * s;
      if (seen.emplace(next.act(rho), out.size()).second) out.push_back(std::move(next));
      if (out.size() >= limit) break;
    }
  }
  return out;
}

}  // namespace

std::vector<WeylElement> enumerate_prefix(const RootSystem& rs, const IndexSet& J,
                                          std::size_t limit) {
  rs.check_index_set(J);
  if (limit == 0) return {};
  return breadth_first(rs, J, limit);
}

std::vector<WeylElement> enumerate(const RootSystem& rs, const IndexSet& J, std::uint64_t cap) {
  rs.check_index_set(J);
  const auto order = rs.weyl_order(J);
  if (order > cap)
    throw CapExceeded("enumeration refused: |W_J| = " + std::to_string(order) +
                          " exceeds the cap " + std::to_string(cap),
                      order);
  auto out = breadth_first(rs, J, static_cast<std::size_t>(order) + 1);
  if (out.size() != order)
    throw Error("enumeration produced " + std::to_string(out.size()) + " elements, expected " +
                std::to_string(order));
  return out;
}

StDecomposition verify_st_decomp(const RootSystem& rs, const IndexSet& J) {
  StDecomposition r;
  r.lhs = rs.positive_root_sum(J);
  auto rho_j = rs.rho_J(J);
  r.rhs = rho_j - longest_element(rs, J).act(rho_j);
  r.equal = r.lhs == r.rhs;
  return r;
}

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::pair<Weight, Weight> steinberg_weights(const RootSystem& rs, const IndexSet& J,
                                            std::int64_t p) {
  if (p < 2) throw Error("characteristic p must be at least 2, got " + std::to_string(p));
  if (!is_prime(p)) throw Error("characteristic p must be prime, got " + std::to_string(p));
  auto rho_j = rs.rho_J(J);
  auto w0 = longest_element(rs, J);
  return {Rational(p - 1) * rho_j, Rational(1 - p) * w0.act(rho_j)};
}

}  // namespace frobcrit
