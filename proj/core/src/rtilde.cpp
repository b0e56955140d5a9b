#include "bruhat_flip/rtilde.hpp"

#include <algorithm>

#include "bruhat_flip/errors.hpp"

namespace bflip {

QPoly QPoly::constant(std::int64_t c) {
  QPoly p;
  if (c != 0) p.coeffs.push_back(c);
  return p;
}

QPoly QPoly::monomial(int degree, std::int64_t c) {
  QPoly p;
  if (c != 0) {
    p.coeffs.assign(degree + 1, 0);
    p.coeffs[degree] = c;
  }
  return p;
}

void QPoly::trim() {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

QPoly QPoly::truncated(int k) const {
  QPoly p = *this;
  if (static_cast<int>(p.coeffs.size()) > k) p.coeffs.resize(std::max(k, 0));
  p.trim();
  return p;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.coeffs.size() > coeffs.size()) coeffs.resize(o.coeffs.size(), 0);
  for (std::size_t i = 0; i < o.coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.coeffs.size() > coeffs.size()) coeffs.resize(o.coeffs.size(), 0);
  for (std::size_t i = 0; i < o.coeffs.size(); ++i) coeffs[i] -= o.coeffs[i];
  trim();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  QPoly p;
  if (a.is_zero() || b.is_zero()) return p;
  p.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) p.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  }
  p.trim();
  return p;
}

QPoly QPoly::shifted(int k) const {
  QPoly p = *this;
  if (!p.is_zero()) p.coeffs.insert(p.coeffs.begin(), k, 0);
  return p;
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    std::int64_t c = coeffs[i];
    if (c == 0) continue;
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    std::int64_t a = c < 0 ? -c : c;
    if (i == 0) {
      out += std::to_string(a);
      continue;
    }
    if (a != 1) out += std::to_string(a);
    out += "q";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

QPoly rtilde_dyer(const CoxeterGroup& g, Elem u, Elem v, const ReflectionOrdering& ord) {
  std::vector<Elem> elems = g.interval(u, v);
  if (elems.empty()) return {};
  const int nt = g.num_reflections();
  const std::size_t n = elems.size();
  // memo[i * (nt + 1) + r]: paths from elems[i] to v using labels of rank >= r.
  std::vector<QPoly> memo(n * (nt + 1));
  std::vector<char> known(n * (nt + 1), 0);
  auto index = [&](Elem x) -> int {
    auto it = std::lower_bound(elems.begin(), elems.end(), x);
    return it != elems.end() && *it == x ? static_cast<int>(it - elems.begin()) : -1;
  };
  auto solve = [&](auto&& self, int i, int r) -> const QPoly& {
    std::size_t slot = static_cast<std::size_t>(i) * (nt + 1) + r;
    if (known[slot]) return memo[slot];
    QPoly acc;
    if (elems[i] == v) acc = QPoly::constant(1);
    for (const auto& e : g.up_edges(elems[i])) {
      int rr = ord.rank[e.refl];
      if (rr < r) continue;
      int j = index(e.target);
      if (j < 0) continue;
      acc += self(self, j, rr + 1).shifted(1);
    }
    known[slot] = 1;
    memo[slot] = std::move(acc);
    return memo[slot];
  };
  return solve(solve, index(u), 0);
}

const QPoly& RTildeRecurrence::operator()(Elem u, Elem v) {
  std::uint64_t key = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
                      static_cast<std::uint32_t>(v);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  const CoxeterGroup& g = *g_;
  QPoly r;
  if (u == v) {
    r = QPoly::constant(1);
  } else if (g.leq(u, v)) {
    int s = g.normal_form(v)[0];
    Elem su = g.left_mult(s, u);
    Elem sv = g.left_mult(s, v);
    if (g.length(su) < g.length(u)) {
      r = (*this)(su, sv);
    } else {
      QPoly a = (*this)(su, sv);
      QPoly b = (*this)(u, sv).shifted(1);
      r = a + b;
    }
  }
  return memo_.emplace(key, std::move(r)).first->second;
}

QPoly rtilde_recurrence(const CoxeterGroup& g, Elem u, Elem v) {
  RTildeRecurrence rec(g);
  return rec(u, v);
}

}  // namespace bflip
