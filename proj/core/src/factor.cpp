#include "bruhat_flip/factor.hpp"

#include <algorithm>
#include <map>

#include "bruhat_flip/errors.hpp"

namespace bflip {

using upoly::ZPoly;

std::pair<mpz_class, std::vector<std::pair<ZPoly, int>>> factor_univariate(const ZPoly& f0) {
  ZPoly f = f0;
  upoly::trim(f);
  if (f.empty()) throw Error("factorization of the zero polynomial");
  mpz_class unit = upoly::content(f);
  if (f.back() < 0) unit = -unit;
  f = upoly::primitive(f);
  std::vector<std::pair<ZPoly, int>> out;
  int xs = 0;
  while (f.size() > 1 && f[0] == 0) {
    f.erase(f.begin());
    ++xs;
  }
  if (xs) out.emplace_back(ZPoly{0, 1}, xs);
  for (auto& [part, mult] : upoly::squarefree(f)) {
    for (auto& g : upoly::factor_squarefree(part)) out.emplace_back(std::move(g), mult);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return std::lexicographical_compare(a.first.rbegin(), a.first.rend(), b.first.rbegin(), b.first.rend());
  });
  return {unit, out};
}

namespace {

// Normalizes the sign so that the canonical leading coefficient is positive.
BiPoly normalized(BiPoly p) {
  if (!p.is_zero() && p.leading().second < 0) p = -p;
  return p;
}

BiPoly unkronecker(const ZPoly& u, int k) {
  BiPoly p;
  for (std::size_t e = 0; e < u.size(); ++e) {
    if (u[e] != 0) p.add_term(static_cast<int>(e % k), static_cast<int>(e / k), u[e]);
  }
  return p;
}

// Coefficients of q as a polynomial in one variable, each a polynomial in the
// other; `in_x` selects x as the main variable.
std::vector<ZPoly> coefficient_polys(const BiPoly& q, bool in_x) {
  std::vector<ZPoly> c(static_cast<std::size_t>(in_x ? q.deg_x() : q.deg_y()) + 1);
  const int other = in_x ? q.deg_y() : q.deg_x();
  for (auto& v : c) v.assign(static_cast<std::size_t>(other) + 1, 0);
  for (const auto& [e, a] : q.terms()) {
    if (in_x) c[e.first][e.second] = a;
    else c[e.second][e.first] = a;
  }
  for (auto& v : c) upoly::trim(v);
  return c;
}

// True when q is shown irreducible by specializing one variable: if q has no
// factor in the other variable alone and some specialization keeps the degree
// and is irreducible over Z, so is q. False means undecided.
bool certified_irreducible(const BiPoly& q) {
  for (bool in_x : {true, false}) {
    auto coeffs = coefficient_polys(q, in_x);
    if (coeffs.size() < 2) continue;
    ZPoly g;
    for (const auto& c : coeffs) {
      if (c.empty()) continue;
      g = g.empty() ? upoly::primitive(c) : upoly::gcd(g, c);
    }
    if (upoly::degree(g) > 0) continue;
    for (int t : {2, -2, 3, -3, 5, -5, 7}) {
      ZPoly spec(coeffs.size());
      for (std::size_t i = 0; i < coeffs.size(); ++i) {
        mpz_class v = 0;
        for (auto it = coeffs[i].rbegin(); it != coeffs[i].rend(); ++it) v = v * t + *it;
        spec[i] = v;
      }
      if (spec.back() == 0) continue;
      if (upoly::content(spec) != 1) continue;
      if (spec[0] == 0) continue;
      if (upoly::degree(upoly::gcd(spec, upoly::derivative(spec))) > 0) continue;
      if (upoly::factor_squarefree(spec).size() == 1) return true;
    }
  }
  return false;
}

}  // namespace

Factorization factor_bivariate(const BiPoly& p, int max_total_degree) {
  if (p.is_zero()) throw Error("factorization of the zero polynomial");
  if (p.total_degree() > max_total_degree) {
    throw CapExceeded("polynomial of total degree " + std::to_string(p.total_degree()) +
                      " exceeds the factorization cap");
  }
  Factorization out;
  out.unit = p.content();
  if (p.leading().second < 0) out.unit = -out.unit;
  BiPoly q = p.primitive_part();

  std::map<std::string, std::pair<BiPoly, int>> found;
  auto record = [&found](const BiPoly& f, int mult) {
    auto key = f.to_string();
    auto [it, fresh] = found.emplace(key, std::make_pair(f, mult));
    if (!fresh) it->second.second += mult;
  };

  int ax = q.deg_x(), ay = q.deg_y();
  for (const auto& [e, c] : q.terms()) {
    ax = std::min(ax, e.first);
    ay = std::min(ay, e.second);
  }
  if (ax || ay) {
    BiPoly shifted;
    for (const auto& [e, c] : q.terms()) shifted.add_term(e.first - ax, e.second - ay, c);
    q = shifted;
    if (ax) record(BiPoly::x(), ax);
    if (ay) record(BiPoly::y(), ay);
  }

  if (!q.is_constant() && certified_irreducible(q)) {
    record(normalized(q), 1);
  } else if (!q.is_constant()) {
    const int k = q.deg_x() + 1;
    ZPoly image(static_cast<std::size_t>(q.deg_y()) * k + q.deg_x() + 1);
    for (const auto& [e, c] : q.terms()) image[static_cast<std::size_t>(e.second) * k + e.first] = c;
    upoly::trim(image);
    auto [unit, ufactors] = factor_univariate(image);
    std::vector<ZPoly> pieces;
    for (const auto& [g, m] : ufactors) {
      for (int i = 0; i < m; ++i) pieces.push_back(g);
    }
    // Recombine univariate pieces into bivariate factors, smallest subsets first.
    for (std::size_t s = 1; 2 * s <= pieces.size();) {
      bool hit = false;
      const int n = static_cast<int>(pieces.size());
      std::vector<int> idx(s);
      for (std::size_t i = 0; i < s; ++i) idx[i] = static_cast<int>(i);
      while (true) {
        ZPoly prod{1};
        for (int i : idx) prod = upoly::mul(prod, pieces[i]);
        BiPoly cand = normalized(unkronecker(prod, k));
        if (!cand.is_constant()) {
          if (auto quot = exact_divide(q, cand)) {
            record(cand, 1);
            q = *quot;
            for (int j = static_cast<int>(s) - 1; j >= 0; --j) pieces.erase(pieces.begin() + idx[j]);
            hit = true;
            break;
          }
        }
        int j = static_cast<int>(s) - 1;
        while (j >= 0 && idx[j] == n - static_cast<int>(s) + j) --j;
        if (j < 0) break;
        ++idx[j];
        for (std::size_t t = j + 1; t < s; ++t) idx[t] = idx[t - 1] + 1;
      }
      if (!hit) ++s;
    }
    if (!q.is_constant()) record(normalized(q), 1);
  }
  for (auto& [key, fm] : found) out.factors.push_back(std::move(fm));
  // Factors are sign-normalized, so only the sign of the unit is open.
  BiPoly check = out.expand();
  if (!(check == p)) {
    if (check == -p) out.unit = -out.unit;
    else throw Error("internal: factorization does not reproduce its input");
  }
  return out;
}

BiPoly Factorization::expand() const {
  BiPoly r = BiPoly::constant(unit);
  for (const auto& [f, m] : factors) r = r * f.pow(m);
  return r;
}

bool is_irreducible(const BiPoly& p, int max_total_degree) {
  if (p.is_zero() || p.is_constant()) return false;
  Factorization f = factor_bivariate(p, max_total_degree);
  return f.factors.size() == 1 && f.factors[0].second == 1 && abs(f.unit) == 1;
}

}  // namespace bflip
