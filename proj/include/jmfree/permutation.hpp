#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace jmfree {

// A permutation of {1..d} in one-line notation. Immutable after construction;
// all operations return new values. Degree is explicit: permutations of
// different degrees never mix silently, embeddings are explicit.
class Permutation {
 public:
  /// Identity on {1..degree}.
  explicit Permutation(int degree);

  /// From one-line images (images[i-1] = sigma(i)); validates bijectivity.
  static Permutation from_one_line(std::vector<int> images);

  /// The transposition (a b) in S_degree. Requires a != b.
  static Permutation transposition(int degree, int a, int b);

  /// From disjoint-or-not cycles, applied right to left.
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  /// Parses cycle notation: "(1 2)(3 4)", "(1,2)(3,4)" or "e"/"()" for identity.
  static Permutation parse_cycles(int degree, std::string_view text);

  int degree() const { return static_cast<int>(images_.size()); }

  /// Image of x (1-based).
  int operator()(int x) const { return images_[x - 1]; }

  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;

  /// Same mapping inside a larger symmetric group; points above the old
  /// degree are fixed.
  Permutation embedded(int new_degree) const;

  bool is_identity() const;

  /// Cycle lengths including fixpoints, sorted descending. A partition of degree.
  std::vector<int> cycle_type() const;

  /// Minimal number of transpositions: degree - (number of cycles).
  int reduced_length() const;

  /// Points moved by the permutation, ascending.
  std::vector<int> support() const;

  /// Nontrivial cycles, each starting at its minimum, ordered by minimum.
  std::vector<std::vector<int>> cycles() const;

  /// "(1 2)(3 4)"; "()" for the identity.
  std::string cycle_string() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  struct unchecked_tag {};
  Permutation(std::vector<int> images, unchecked_tag) : images_(std::move(images)) {}

  friend Permutation compose(const Permutation&, const Permutation&);

  std::vector<int> images_;
};

/// Composition (s*t)(x) = s(t(x)). Throws std::invalid_argument on degree mismatch.
Permutation compose(const Permutation& s, const Permutation& t);

}  // namespace jmfree
