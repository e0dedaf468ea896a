#pragma once

// Exact root-system kernel.
//
// Conventions used throughout the library:
//  - simple roots are indexed 0..rank-1 in Bourbaki order (1-based indices
//    only appear at the JSON/CLI boundary);
//  - cartan(i, j) = <alpha_j, alpha_i^vee>;
//  - roots are integer vectors in the simple-root basis;
//  - weights are rational vectors in the fundamental-weight basis, so
//    coords[i] = <lambda, alpha_i^vee>.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "frobcrit/rational.hpp"

namespace frobcrit {

using IntMatrix = std::vector<IntVec>;
using IndexSet = std::vector<int>;

struct Component {
  char type = 'A';
  int rank = 0;
  bool operator==(const Component&) const = default;
};

std::string to_string(const Component& c);

class Weight {
 public:
  Weight() = default;
  explicit Weight(RatVec coords) : coords_(std::move(coords)) {}
  explicit Weight(const IntVec& coords) : coords_(to_rational(coords)) {}
  static Weight zero(std::size_t rank) { return Weight(RatVec(rank)); }

  std::size_t rank() const { return coords_.size(); }
  const RatVec& coords() const { return coords_; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }

  bool is_integral() const;
  IntVec to_int() const;  // throws unless integral

  Weight& operator+=(const Weight& other);
  Weight& operator-=(const Weight& other);
  Weight& operator*=(const Rational& s);
  Weight operator-() const;

  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(const Rational& s, Weight a) { return a *= s; }
  bool operator==(const Weight&) const = default;
  auto operator<=>(const Weight& other) const { return coords_ <=> other.coords_; }

 private:
  RatVec coords_;
};

std::string to_string(const Weight& w);

bool is_dominant(const Weight& w);
bool is_regular_dominant(const Weight& w);

class RootSystem {
 public:
  RootSystem() = default;

  /// "C2", "A3,A3,A3", or "" for the rank-0 system.
  static RootSystem from_spec(std::string_view spec);
  static RootSystem from_components(const std::vector<Component>& components);
  /// Arbitrary finite-type Cartan matrix (e.g. a parabolic sub-diagram).
  /// Component labels are inferred when not supplied.
  static RootSystem from_cartan(IntMatrix cartan,
                                std::vector<Component> labels = {});

  std::size_t rank() const { return cartan_.size(); }
  const std::vector<Component>& components() const { return components_; }
  std::string spec() const;

  const IntMatrix& cartan_matrix() const { return cartan_; }
  std::int64_t cartan(std::size_t i, std::size_t j) const { return cartan_[i][j]; }

  /// Positive roots in the simple-root basis, sorted by height then lexicographically.
  const std::vector<IntVec>& positive_roots() const { return positive_; }
  std::size_t num_positive_roots() const { return positive_.size(); }

  /// Half the squared length of alpha_i, normalized so short roots give 1.
  std::int64_t symmetrizer(std::size_t i) const { return sym_[i]; }

  IntVec root_to_weight_coords(const IntVec& root) const;
  Weight root_weight(const IntVec& root) const;
  /// Coefficients of beta^vee in the simple-coroot basis.
  IntVec coroot(const IntVec& root) const;
  /// Index into positive_roots() of +root or -root; sign in `negative`.
  std::optional<std::size_t> find_root(const IntVec& root, bool* negative = nullptr) const;
  /// Same lookup, keyed by fundamental-weight coordinates.
  std::optional<std::size_t> find_root_by_weight(const IntVec& weight_coords,
                                                 bool* negative = nullptr) const;
  bool is_root(const IntVec& root) const { return find_root(root).has_value(); }

  /// <lambda, beta^vee>. Throws on rank mismatch or when beta is not a root.
  Rational cartan_pairing(const Weight& lambda, const IntVec& beta) const;

  /// Simple-root coordinates of a weight (rational in general).
  RatVec to_simple_coords(const Weight& lambda) const;
  Weight from_simple_coords(const RatVec& coords) const;
  /// W-invariant form with (alpha_i, alpha_i) = 2 * symmetrizer(i).
  Rational inner_product(const Weight& a, const Weight& b) const;

  Weight fundamental_weight(std::size_t i) const;
  Weight rho() const;
  Weight rho_J(const IndexSet& J) const;
  /// Sum of positive roots (simple-root support inside J), fundamental coords.
  Weight positive_root_sum(const IndexSet& J) const;

  IndexSet all_indices() const;
  void check_index_set(const IndexSet& J) const;
  void check_rank(const Weight& w, std::string_view what) const;
  /// Sub-diagram on J, in the order J is given.
  IntMatrix sub_cartan(const IndexSet& J) const;
  /// Connected components of the Dynkin diagram restricted to J.
  std::vector<IndexSet> diagram_components(const IndexSet& J) const;

  /// |W_J| from closed forms per component type.
  std::uint64_t weyl_order(const IndexSet& J) const;
  std::uint64_t weyl_order() const { return weyl_order(all_indices()); }

  bool operator==(const RootSystem& other) const { return cartan_ == other.cartan_; }

 private:
  void finish();

  IntMatrix cartan_;
  std::vector<Component> components_;
  std::vector<IntVec> positive_;
  std::vector<std::int64_t> sym_;
  std::vector<RatVec> cartan_inv_;
  std::map<IntVec, std::size_t> root_index_;
  std::map<IntVec, std::size_t> weight_index_;
};

IntMatrix cartan_matrix_of(const Component& c);
/// Identify the type of a connected finite-type Cartan matrix.
Component classify_irreducible(const IntMatrix& cartan);
std::uint64_t weyl_group_order(const Component& c);

/// Parse "X<rank>" tokens separated by commas.
std::vector<Component> parse_spec(std::string_view spec);

}  // namespace frobcrit
