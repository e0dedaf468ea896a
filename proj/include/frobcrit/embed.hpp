#pragma once

// Subgroup embeddings H in G, modelled by their character-lattice restriction.
//
// Row j of the restriction matrix expresses the j-th simple coroot of H in
// the simple coroots of G, so for a G-weight lambda in fundamental
// coordinates, (restrict lambda)_j = <lambda|T_H, beta_j^vee>. Characters of
// a central torus of H are not tracked: every criterion here only pairs
// weights against coroots of H.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frobcrit/rootsys.hpp"

namespace frobcrit {

using RatMatrix = std::vector<RatVec>;

struct BuilderParams {
  std::optional<std::string> g;
  std::optional<std::string> h;
  std::optional<IndexSet> J;  // 0-based
  std::optional<std::int64_t> k, m, n, p;
};

class Embedding {
 public:
  Embedding(RootSystem g, RootSystem h, RatMatrix restriction, std::string builder,
            BuilderParams params, std::optional<std::int64_t> twist_exponent = std::nullopt);

  const RootSystem& g() const { return g_; }
  const RootSystem& h() const { return h_; }
  const RatMatrix& restriction() const { return restriction_; }
  const std::string& builder() const { return builder_; }
  const BuilderParams& params() const { return params_; }
  std::optional<std::int64_t> twist_exponent() const { return twist_; }
  /// Human-readable provenance, e.g. "levi(C2,{1})".
  std::string label() const;

  /// For each positive root of H (same order as h().positive_roots()), the
  /// roots of G it is the restriction of inside Lie(H).
  const std::vector<std::vector<IntVec>>& root_lifts() const { return lifts_; }
  void set_root_lifts(std::vector<std::vector<IntVec>> lifts) { lifts_ = std::move(lifts); }

 private:
  RootSystem g_;
  RootSystem h_;
  RatMatrix restriction_;
  std::string builder_;
  BuilderParams params_;
  std::optional<std::int64_t> twist_;
  std::vector<std::vector<IntVec>> lifts_;
};

Weight restrict(const Embedding& emb, const Weight& lambda);
/// Restriction of a G-root given in simple-root coordinates.
Weight restrict_root(const Embedding& emb, const IntVec& root);

Weight rho_h(const Embedding& emb);

/// Empty iff the embedding is certified: every simple coroot of H is a
/// nonnegative combination of simple coroots of G, and every positive root of
/// H is the restriction of a positive root of G.
std::vector<std::string> validate(const Embedding& emb);

/// Nonzero restrictions of all roots of G, deduplicated, sorted.
std::vector<Weight> nonzero_restrictions(const Embedding& emb);

Embedding custom_embedding(const RootSystem& g, const RootSystem& h, RatMatrix matrix);
Embedding levi(const RootSystem& g, const IndexSet& J);
/// H diagonally in H^k; k = 1 is the identity embedding.
Embedding diagonal(const RootSystem& h, int k);
Embedding identity_embedding(const RootSystem& g);
Embedding folding_AC(int m);   // A_{2m-1} > C_m
Embedding folding_DB(int n);   // D_n > B_{n-1}
Embedding folding_E6F4();
Embedding folding_B3G2();
Embedding so_in_sl(int n);     // SL_n > SO_n
/// {(g, F(g))} in H x H, with the second factor twisted by Frobenius.
Embedding frobenius_twisted_diagonal(const RootSystem& h, std::int64_t p);

bool detect_twist(const Embedding& emb, std::int64_t p);

}  // namespace frobcrit
