#include "jmfree/group_algebra.hpp"

#include <stdexcept>

namespace jmfree {

GroupAlgebraElement::GroupAlgebraElement(int degree) : degree_(degree) {
  if (degree < 1) throw std::invalid_argument("GroupAlgebraElement: degree must be positive");
}

GroupAlgebraElement GroupAlgebraElement::unit(int degree) {
  GroupAlgebraElement e(degree);
  e.terms_.emplace(Permutation(degree), Rational(1));
  return e;
}

GroupAlgebraElement GroupAlgebraElement::term(Permutation p, Rational coeff) {
  GroupAlgebraElement e(p.degree());
  if (coeff != 0) e.terms_.emplace(std::move(p), std::move(coeff));
  return e;
}

Rational GroupAlgebraElement::coefficient(const Permutation& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Rational(0) : it->second;
}

void GroupAlgebraElement::add_term(const Permutation& p, const Rational& coeff) {
  if (p.degree() != degree_)
    throw std::invalid_argument("add_term: permutation degree mismatch");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(p, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& other) {
  if (other.degree_ != degree_)
    throw std::invalid_argument("GroupAlgebraElement::operator+=: degree mismatch");
  for (const auto& [p, c] : other.terms_) add_term(p, c);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(const GroupAlgebraElement& other) {
  if (other.degree_ != degree_)
    throw std::invalid_argument("GroupAlgebraElement::operator-=: degree mismatch");
  for (const auto& [p, c] : other.terms_) add_term(p, -c);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, c] : terms_) c *= scalar;
  return *this;
}

GroupAlgebraElement algebra_multiply(const GroupAlgebraElement& a, const GroupAlgebraElement& b,
                                     bool opposite) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("algebra_multiply: degree mismatch");
  GroupAlgebraElement out(a.degree());
  for (const auto& [s, cs] : a.terms()) {
    for (const auto& [t, ct] : b.terms()) {
      out.add_term(opposite ? compose(t, s) : compose(s, t), cs * ct);
    }
  }
  return out;
}

}  // namespace jmfree
