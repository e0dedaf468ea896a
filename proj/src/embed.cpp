#include "frobcrit/embed.hpp"

#include <algorithm>
#include <set>

#include "frobcrit/error.hpp"

namespace frobcrit {

namespace {

RatMatrix zero_matrix(std::size_t rows, std::size_t cols) {
  return RatMatrix(rows, RatVec(cols, Rational(0)));
}

std::vector<std::vector<IntVec>> lifts_by_restriction(const Embedding& emb) {
  std::vector<std::vector<IntVec>> out;
  for (const auto& delta : emb.h().positive_roots()) {
    auto target = emb.h().root_weight(delta);
    std::vector<IntVec> lifts;
    for (const auto& gamma : emb.g().positive_roots()) {
      if (restrict_root(emb, gamma) == target) lifts.push_back(gamma);
    }
    out.push_back(std::move(lifts));
  }
  return out;
}

std::string index_set_label(const IndexSet& J) {
  std::string s = "{";
  for (std::size_t i = 0; i < J.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(J[i] + 1);
  }
  return s + "}";
}

std::string root_label(const IntVec& root) {
  std::string s = "(";
  for (std::size_t i = 0; i < root.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(root[i]);
  }
  return s + ")";
}

}  // namespace

Embedding::Embedding(RootSystem g, RootSystem h, RatMatrix restriction, std::string builder,
                     BuilderParams params, std::optional<std::int64_t> twist_exponent)
    : g_(std::move(g)),
      h_(std::move(h)),
      restriction_(std::move(restriction)),
      builder_(std::move(builder)),
      params_(std::move(params)),
      twist_(twist_exponent) {
  if (restriction_.size() != h_.rank())
    throw Error("restriction matrix has " + std::to_string(restriction_.size()) +
                " rows, expected rank(H) = " + std::to_string(h_.rank()));
  for (const auto& row : restriction_) {
    if (row.size() != g_.rank())
      throw Error("restriction matrix row has " + std::to_string(row.size()) +
                  " columns, expected rank(G) = " + std::to_string(g_.rank()));
  }
  lifts_ = lifts_by_restriction(*this);
}

std::string Embedding::label() const {
  if (builder_ == "levi") return "levi(" + g_.spec() + "," + index_set_label(*params_.J) + ")";
  if (builder_ == "diagonal") return "diagonal(" + h_.spec() + "," + std::to_string(*params_.k) + ")";
  if (builder_ == "folding_AC") return "folding_AC(" + std::to_string(*params_.m) + ")";
  if (builder_ == "folding_DB") return "folding_DB(" + std::to_string(*params_.n) + ")";
  if (builder_ == "so_in_sl") return "so_in_sl(" + std::to_string(*params_.n) + ")";
  if (builder_ == "frobenius_twisted_diagonal")
    return "frobenius_twisted_diagonal(" + h_.spec() + "," + std::to_string(*params_.p) + ")";
  if (builder_ == "custom") return "custom(" + g_.spec() + " > " + h_.spec() + ")";
  return builder_ + "()";
}

Weight restrict(const Embedding& emb, const Weight& lambda) {
  emb.g().check_rank(lambda, "restrict");
  const auto& r = emb.restriction();
  RatVec out(r.size());
  for (std::size_t j = 0; j < r.size(); ++j)
    for (std::size_t i = 0; i < lambda.rank(); ++i) out[j] += r[j][i] * lambda[i];
  return Weight(std::move(out));
}

Weight restrict_root(const Embedding& emb, const IntVec& root) {
  return restrict(emb, emb.g().root_weight(root));
}

Weight rho_h(const Embedding& emb) {
  return Rational(1, 2) * emb.h().positive_root_sum(emb.h().all_indices());
}

std::vector<std::string> validate(const Embedding& emb) {
  std::vector<std::string> out;
  const auto& r = emb.restriction();
  for (std::size_t j = 0; j < r.size(); ++j) {
    for (std::size_t i = 0; i < r[j].size(); ++i) {
      if (r[j][i] < 0) {
        out.push_back("simple coroot " + std::to_string(j + 1) +
                      " of H has negative coefficient " + to_string(r[j][i]) +
                      " on simple coroot " + std::to_string(i + 1) + " of G");
      }
    }
  }
  std::set<Weight> positive_images;
  for (const auto& gamma : emb.g().positive_roots()) positive_images.insert(restrict_root(emb, gamma));
  for (const auto& delta : emb.h().positive_roots()) {
    if (!positive_images.count(emb.h().root_weight(delta))) {
      out.push_back("positive root " + root_label(delta) +
                    " of H is not the restriction of any positive root of G");
    }
  }
  return out;
}

std::vector<Weight> nonzero_restrictions(const Embedding& emb) {
  std::set<Weight> seen;
  for (const auto& gamma : emb.g().positive_roots()) {
    auto w = restrict_root(emb, gamma);
    if (w == Weight::zero(w.rank())) continue;
    seen.insert(w);
    seen.insert(-w);
  }
  return {seen.begin(), seen.end()};
}

// ---------------------------------------------------------------- builders

Embedding custom_embedding(const RootSystem& g, const RootSystem& h, RatMatrix matrix) {
  BuilderParams params;
  params.g = g.spec();
  params.h = h.spec();
  return Embedding(g, h, std::move(matrix), "custom", params);
}

Embedding levi(const RootSystem& g, const IndexSet& J) {
  g.check_index_set(J);
  IndexSet sorted = J;
  std::sort(sorted.begin(), sorted.end());
  auto h = RootSystem::from_cartan(g.sub_cartan(sorted));
  auto r = zero_matrix(sorted.size(), g.rank());
  for (std::size_t a = 0; a < sorted.size(); ++a) r[a][sorted[a]] = 1;
  BuilderParams params;
  params.g = g.spec();
  params.J = sorted;
  Embedding emb(g, std::move(h), std::move(r), "levi", params);
  // Roots of the Levi factor are the roots of G supported on J.
  std::vector<std::vector<IntVec>> lifts;
  for (const auto& delta : emb.h().positive_roots()) {
    IntVec gamma(g.rank(), 0);
    for (std::size_t a = 0; a < sorted.size(); ++a) gamma[sorted[a]] = delta[a];
    lifts.push_back({gamma});
  }
  emb.set_root_lifts(std::move(lifts));
  return emb;
}

namespace {

Embedding diagonal_like(const RootSystem& h, int k, std::int64_t weight_of_later_copies,
                        std::string builder, BuilderParams params,
                        std::optional<std::int64_t> twist) {
  std::vector<Component> comps;
  for (int c = 0; c < k; ++c) comps.insert(comps.end(), h.components().begin(), h.components().end());
  auto g = RootSystem::from_components(comps);
  const std::size_t n = h.rank();
  auto r = zero_matrix(n, n * k);
  for (std::size_t j = 0; j < n; ++j)
    for (int c = 0; c < k; ++c) r[j][c * n + j] = c == 0 ? 1 : weight_of_later_copies;
  Embedding emb(g, h, std::move(r), std::move(builder), std::move(params), twist);
  std::vector<std::vector<IntVec>> lifts;
  for (const auto& delta : h.positive_roots()) {
    std::vector<IntVec> copies;
    for (int c = 0; c < k; ++c) {
      IntVec gamma(n * k, 0);
      std::copy(delta.begin(), delta.end(), gamma.begin() + c * n);
      copies.push_back(std::move(gamma));
    }
    lifts.push_back(std::move(copies));
  }
  emb.set_root_lifts(std::move(lifts));
  return emb;
}

}  // namespace

Embedding diagonal(const RootSystem& h, int k) {
  if (k < 1) throw Error("diagonal: number of copies must be at least 1");
  if (h.components().empty()) throw Error("diagonal: H must have positive rank");
  // Only whole copies of the Bourbaki-labelled components are supported, so
  // rebuild H from its labels to guarantee the product matches.
  auto hh = RootSystem::from_components(h.components());
  if (!(hh == h)) throw Error("diagonal: H must be given in Bourbaki form");
  BuilderParams params;
  params.h = h.spec();
  params.k = k;
  return diagonal_like(h, k, 1, "diagonal", params, std::nullopt);
}

Embedding identity_embedding(const RootSystem& g) { return diagonal(g, 1); }

Embedding folding_AC(int m) {
  if (m < 2) throw Error("folding_AC: m must be at least 2, got " + std::to_string(m));
  auto g = RootSystem::from_components({{'A', 2 * m - 1}});
  auto h = RootSystem::from_components({{'C', m}});
  auto r = zero_matrix(m, 2 * m - 1);
  // Orbits {i, 2m-i} of the diagram involution give the short simple
  // coroots; the fixed middle node gives the long one.
  for (int k = 1; k < m; ++k) {
    r[k - 1][k - 1] = 1;
    r[k - 1][2 * m - k - 1] = 1;
  }
  r[m - 1][m - 1] = 1;
  BuilderParams params;
  params.m = m;
  return Embedding(g, h, std::move(r), "folding_AC", params);
}

Embedding folding_DB(int n) {
  if (n < 4) throw Error("folding_DB: n must be at least 4, got " + std::to_string(n));
  auto g = RootSystem::from_components({{'D', n}});
  auto h = RootSystem::from_components({{'B', n - 1}});
  auto r = zero_matrix(n - 1, n);
  for (int k = 0; k < n - 2; ++k) r[k][k] = 1;
  r[n - 2][n - 2] = 1;
  r[n - 2][n - 1] = 1;
  BuilderParams params;
  params.n = n;
  return Embedding(g, h, std::move(r), "folding_DB", params);
}

Embedding folding_E6F4() {
  auto g = RootSystem::from_components({{'E', 6}});
  auto h = RootSystem::from_components({{'F', 4}});
  auto r = zero_matrix(4, 6);
  // Fixed nodes 2, 4 give the long simple roots; orbits {3,5}, {1,6} the short.
  r[0][1] = 1;
  r[1][3] = 1;
  r[2][2] = r[2][4] = 1;
  r[3][0] = r[3][5] = 1;
  return Embedding(g, h, std::move(r), "folding_E6F4", {});
}

Embedding folding_B3G2() {
  auto g = RootSystem::from_components({{'B', 3}});
  auto h = RootSystem::from_components({{'G', 2}});
  // Composite of B3 < D4 and the triality folding D4 > G2.
  RatMatrix r = {{1, 0, 1}, {0, 1, 0}};
  return Embedding(g, h, std::move(r), "folding_B3G2", {});
}

Embedding so_in_sl(int n) {
  if (n < 3) throw Error("so_in_sl: n must be at least 3, got " + std::to_string(n));
  // SO_n for the antidiagonal form, with the torus
  // diag(s_1, .., s_m, [1], s_m^-1, .., s_1^-1). With f_k = e_k - e_{n+1-k},
  // the simple coroots are f_k - f_{k+1} = alpha_k^v + alpha_{n-k}^v and
  // 2 f_m (n odd) or f_{m-1} + f_m (n even).
  const int m = n / 2;
  std::vector<Component> hcomps;
  if (n == 3) hcomps = {{'A', 1}};
  else if (n == 4) hcomps = {{'A', 1}, {'A', 1}};
  else if (n % 2 == 1) hcomps = {{'B', m}};
  else hcomps = {{'D', m}};
  auto g = RootSystem::from_components({{'A', n - 1}});
  auto h = RootSystem::from_components(hcomps);
  auto r = zero_matrix(m, n - 1);
  for (int k = 1; k < m; ++k) {
    r[k - 1][k - 1] += 1;
    r[k - 1][n - k - 1] += 1;
  }
  if (n % 2 == 1) {
    r[m - 1][m - 1] = 2;
    r[m - 1][m] = 2;
  } else {
    r[m - 1][m - 2] = 1;
    r[m - 1][m - 1] = 2;
    r[m - 1][m] = 1;
  }
  BuilderParams params;
  params.n = n;
  return Embedding(g, h, std::move(r), "so_in_sl", params);
}

Embedding frobenius_twisted_diagonal(const RootSystem& h, std::int64_t p) {
  if (p < 2) throw Error("frobenius_twisted_diagonal: p must be at least 2");
  if (h.components().empty()) throw Error("frobenius_twisted_diagonal: H must have positive rank");
  BuilderParams params;
  params.h = h.spec();
  params.p = p;
  return diagonal_like(h, 2, p, "frobenius_twisted_diagonal", params, p);
}

bool detect_twist(const Embedding& emb, std::int64_t p) {
  if (emb.twist_exponent()) return true;
  const auto& r = emb.restriction();
  std::size_t off = 0;
  for (const auto& c : emb.g().components()) {
    const auto width = static_cast<std::size_t>(c.rank);
    bool nonzero = false;
    bool divisible = true;
    for (const auto& row : r) {
      for (std::size_t i = off; i < off + width && i < row.size(); ++i) {
        if (row[i] == 0) continue;
        nonzero = true;
        Rational q = row[i] / Rational(p);
        if (q.denominator() != 1) divisible = false;
      }
    }
    if (nonzero && divisible) return true;
    off += width;
  }
  return false;
}

}  // namespace frobcrit
