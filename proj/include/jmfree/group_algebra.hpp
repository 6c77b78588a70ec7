#pragma once

#include <map>

#include "jmfree/permutation.hpp"
#include "jmfree/rational.hpp"

namespace jmfree {

// A sparse exact-rational linear combination of permutations of one fixed
// degree. Zero coefficients are pruned eagerly; words in the Jucys-Murphy
// element touch only a polynomially growing support while |S_n| is factorial,
// so the term map stays small.
class GroupAlgebraElement {
 public:
  /// The zero element of Q[S_degree].
  explicit GroupAlgebraElement(int degree);

  static GroupAlgebraElement zero(int degree) { return GroupAlgebraElement(degree); }

  /// The multiplicative unit 1*e.
  static GroupAlgebraElement unit(int degree);

  /// A single basis term coeff*p.
  static GroupAlgebraElement term(Permutation p, Rational coeff = Rational(1));

  int degree() const { return degree_; }
  const std::map<Permutation, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Coefficient of p (zero if absent).
  Rational coefficient(const Permutation& p) const;

  /// Adds coeff*p in place, pruning a vanishing result.
  void add_term(const Permutation& p, const Rational& coeff);

  GroupAlgebraElement& operator+=(const GroupAlgebraElement& other);
  GroupAlgebraElement& operator-=(const GroupAlgebraElement& other);
  GroupAlgebraElement& operator*=(const Rational& scalar);

  friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) {
    a += b;
    return a;
  }
  friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) {
    a -= b;
    return a;
  }
  friend GroupAlgebraElement operator*(GroupAlgebraElement a, const Rational& s) {
    a *= s;
    return a;
  }
  friend GroupAlgebraElement operator*(const Rational& s, GroupAlgebraElement a) {
    a *= s;
    return a;
  }

  bool operator==(const GroupAlgebraElement&) const = default;

 private:
  int degree_;
  std::map<Permutation, Rational> terms_;
};

/// Bilinear extension of compose; with opposite=true each basis product uses
/// compose(t, s) instead of compose(s, t), the anti-homomorphism that realizes
/// composition of right-regular actions. Throws on degree mismatch.
GroupAlgebraElement algebra_multiply(const GroupAlgebraElement& a, const GroupAlgebraElement& b,
                                     bool opposite = false);

}  // namespace jmfree
