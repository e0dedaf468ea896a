#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "frobcrit/rootsys.hpp"

namespace frobcrit {

using Word = std::vector<int>;  // 0-based simple reflection indices, leftmost acts last

/// A Weyl group element, canonically represented by its action on
/// fundamental-weight coordinates. The stored word is one expression for the
/// element (reduced when produced by enumerate/longest_element/reduced()).
class WeylElement {
 public:
  static WeylElement identity(const RootSystem& rs);
  static WeylElement simple_reflection(const RootSystem& rs, int i);
  static WeylElement from_word(const RootSystem& rs, const Word& word);

  std::size_t rank() const { return matrix_.size(); }
  const IntMatrix& matrix() const { return matrix_; }
  const Word& word() const { return word_; }

  Weight act(const Weight& lambda) const;
  IntVec act(const IntVec& lambda) const;

  /// (this * other)(lambda) = this(other(lambda)).
  WeylElement operator*(const WeylElement& other) const;
  WeylElement inverse(const RootSystem& rs) const;

  bool operator==(const WeylElement& other) const { return matrix_ == other.matrix_; }

 private:
  IntMatrix matrix_;
  Word word_;
};

/// w(beta) for a root beta in simple-root coordinates.
IntVec act_on_root(const RootSystem& rs, const WeylElement& w, const IntVec& beta);

/// Number of positive roots sent to negative roots.
std::size_t length(const RootSystem& rs, const WeylElement& w);

/// Same element with a reduced word attached.
WeylElement reduced(const RootSystem& rs, const WeylElement& w);

WeylElement longest_element(const RootSystem& rs, const IndexSet& J);

/// Default cap on |W_J| for enumerate(): 10^6, or FROBCRIT_ENUM_CAP when set.
std::uint64_t default_enum_cap();

/// Every element of W_J, each with a reduced word, in breadth-first order
/// (nondecreasing length). Throws CapExceeded when |W_J| > cap.
std::vector<WeylElement> enumerate(const RootSystem& rs, const IndexSet& J,
                                   std::uint64_t cap = default_enum_cap());

/// The first `limit` elements of the enumeration above (no cap applies).
std::vector<WeylElement> enumerate_prefix(const RootSystem& rs, const IndexSet& J,
                                          std::size_t limit);

struct StDecomposition {
  Weight lhs;  // sum of R_J^+
  Weight rhs;  // rho_J - w_0^J rho_J
  bool equal = false;
};

StDecomposition verify_st_decomp(const RootSystem& rs, const IndexSet& J);

bool is_prime(std::int64_t p);

/// ((p-1) rho_J, (1-p) w_0^J rho_J).
std::pair<Weight, Weight> steinberg_weights(const RootSystem& rs, const IndexSet& J,
                                            std::int64_t p);

}  // namespace frobcrit
