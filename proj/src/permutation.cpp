#include "jmfree/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace jmfree {

Permutation::Permutation(int degree) {
  if (degree < 1) throw std::invalid_argument("Permutation: degree must be positive");
  images_.resize(degree);
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation Permutation::from_one_line(std::vector<int> images) {
  const int d = static_cast<int>(images.size());
  if (d < 1) throw std::invalid_argument("Permutation: empty one-line form");
  std::vector<char> seen(d, 0);
  for (int v : images) {
    if (v < 1 || v > d || seen[v - 1])
      throw std::invalid_argument("Permutation: one-line form is not a bijection of {1..d}");
    seen[v - 1] = 1;
  }
  Permutation p(d);
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::transposition(int degree, int a, int b) {
  if (a < 1 || b < 1 || a > degree || b > degree)
    throw std::invalid_argument("transposition: point out of range");
  if (a == b) throw std::invalid_argument("transposition: points must differ");
  Permutation p(degree);
  std::swap(p.images_[a - 1], p.images_[b - 1]);
  return p;
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  Permutation result(degree);
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    const auto& c = *it;
    if (c.empty()) continue;
    Permutation g(degree);
    for (size_t i = 0; i < c.size(); ++i) {
      int from = c[i];
      int to = c[(i + 1) % c.size()];
      if (from < 1 || from > degree)
        throw std::invalid_argument("from_cycles: point out of range");
      g.images_[from - 1] = to;
    }
    // validate the cycle is a bijection fragment
    std::vector<int> sorted = c;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("from_cycles: repeated point in a cycle");
    result = compose(g, result);
  }
  return result;
}

Permutation Permutation::parse_cycles(int degree, std::string_view text) {
  std::vector<std::vector<int>> cycles;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) return Permutation(degree);
  while (i < text.size()) {
    skip_ws();
    if (i >= text.size()) break;
    if (text[i] != '(')
      throw std::invalid_argument("parse_cycles: expected '(' in cycle notation");
    ++i;
    std::vector<int> cycle;
    while (true) {
      skip_ws();
      if (i >= text.size()) throw std::invalid_argument("parse_cycles: unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("parse_cycles: expected a point");
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        ++i;
      }
      cycle.push_back(v);
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_ws();
  }
  return from_cycles(degree, cycles);
}

Permutation Permutation::inverse() const {
  Permutation p(degree());
  for (int x = 1; x <= degree(); ++x) p.images_[images_[x - 1] - 1] = x;
  return p;
}

Permutation Permutation::embedded(int new_degree) const {
  if (new_degree < degree())
    throw std::invalid_argument("embedded: new degree smaller than current");
  Permutation p(new_degree);
  std::copy(images_.begin(), images_.end(), p.images_.begin());
  return p;
}

bool Permutation::is_identity() const {
  for (int x = 1; x <= degree(); ++x)
    if (images_[x - 1] != x) return false;
  return true;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<char> seen(degree(), 0);
  std::vector<int> type;
  for (int x = 1; x <= degree(); ++x) {
    if (seen[x - 1]) continue;
    int len = 0;
    int y = x;
    while (!seen[y - 1]) {
      seen[y - 1] = 1;
      y = images_[y - 1];
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.begin(), type.end(), std::greater<int>());
  return type;
}

int Permutation::reduced_length() const {
  return degree() - static_cast<int>(cycle_type().size());
}

std::vector<int> Permutation::support() const {
  std::vector<int> s;
  for (int x = 1; x <= degree(); ++x)
    if (images_[x - 1] != x) s.push_back(x);
  return s;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<char> seen(degree(), 0);
  std::vector<std::vector<int>> out;
  for (int x = 1; x <= degree(); ++x) {
    if (seen[x - 1] || images_[x - 1] == x) continue;
    std::vector<int> c;
    int y = x;
    while (!seen[y - 1]) {
      seen[y - 1] = 1;
      c.push_back(y);
      y = images_[y - 1];
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string Permutation::cycle_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (size_t i = 0; i < c.size(); ++i) {
      if (i) os << ' ';
      os << c[i];
    }
    os << ')';
  }
  return os.str();
}

Permutation compose(const Permutation& s, const Permutation& t) {
  if (s.degree() != t.degree())
    throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> img(s.degree());
  for (int x = 1; x <= s.degree(); ++x) img[x - 1] = s(t(x));
  return Permutation(std::move(img), Permutation::unchecked_tag{});
}

}  // namespace jmfree
