#include "bruhat_flip/upoly.hpp"

#include <algorithm>
#include <random>

#include "bruhat_flip/errors.hpp"

namespace bflip::upoly {

int degree(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

void trim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

ZPoly add(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

ZPoly sub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

ZPoly derivative(const ZPoly& f) {
  ZPoly r;
  for (std::size_t i = 1; i < f.size(); ++i) r.push_back(f[i] * static_cast<unsigned long>(i));
  trim(r);
  return r;
}

mpz_class content(const ZPoly& f) {
  mpz_class g = 0;
  for (const auto& c : f) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly primitive(const ZPoly& f) {
  if (f.empty()) return f;
  mpz_class g = content(f);
  if (f.back() < 0) g = -g;
  ZPoly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) mpz_divexact(r[i].get_mpz_t(), f[i].get_mpz_t(), g.get_mpz_t());
  return r;
}

bool exact_div(const ZPoly& a, const ZPoly& b, ZPoly& quotient) {
  if (b.empty()) throw Error("polynomial division by zero");
  ZPoly r = a;
  trim(r);
  quotient.clear();
  if (degree(r) < degree(b)) {
    return r.empty();
  }
  quotient.assign(r.size() - b.size() + 1, 0);
  const mpz_class& lb = b.back();
  for (int k = degree(r) - degree(b); k >= 0; --k) {
    mpz_class& top = r[k + b.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return false;
    mpz_class c;
    mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    quotient[k] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[k + j] -= c * b[j];
  }
  for (const auto& c : r) {
    if (c != 0) return false;
  }
  trim(quotient);
  return true;
}

ZPoly gcd(const ZPoly& a0, const ZPoly& b0) {
  ZPoly a = primitive(a0), b = primitive(b0);
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (degree(a) < degree(b)) std::swap(a, b);
  while (!b.empty()) {
    if (degree(b) == 0) return ZPoly{1};
    // Pseudo-remainder of a by b, then its primitive part.
    ZPoly r = a;
    while (degree(r) >= degree(b)) {
      int shift = degree(r) - degree(b);
      mpz_class lr = r.back();
      for (auto& c : r) c *= b.back();
      for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= lr * b[j];
      trim(r);
      if (!r.empty()) r = primitive(r);
    }
    a = std::move(b);
    b = primitive(r);
  }
  return primitive(a);
}

std::vector<std::pair<ZPoly, int>> squarefree(const ZPoly& f) {
  std::vector<std::pair<ZPoly, int>> out;
  if (degree(f) < 1) return out;
  ZPoly fp = derivative(f);
  ZPoly a = gcd(f, fp);
  ZPoly b, c;
  if (!exact_div(f, a, b) || !exact_div(fp, a, c)) throw Error("internal: square-free division");
  ZPoly d = sub(c, derivative(b));
  for (int i = 1; degree(b) > 0; ++i) {
    ZPoly g = d.empty() ? primitive(b) : gcd(b, d);
    if (degree(g) > 0) out.emplace_back(g, i);
    ZPoly nb, nc;
    if (!exact_div(b, g, nb) || !exact_div(d, g, nc)) throw Error("internal: square-free division");
    b = std::move(nb);
    d = sub(nc, derivative(b));
  }
  return out;
}

ZPoly symmetric_mod(const ZPoly& f, const mpz_class& m) {
  ZPoly r(f.size());
  mpz_class half = m / 2;
  for (std::size_t i = 0; i < f.size(); ++i) {
    mpz_fdiv_r(r[i].get_mpz_t(), f[i].get_mpz_t(), m.get_mpz_t());
    if (r[i] > half) r[i] -= m;
  }
  trim(r);
  return r;
}

std::string to_string(const ZPoly& f) {
  if (f.empty()) return "0";
  std::string s;
  for (int i = degree(f); i >= 0; --i) {
    if (f[i] == 0) continue;
    if (!s.empty()) s += f[i] < 0 ? " - " : " + ";
    else if (f[i] < 0) s += "-";
    mpz_class a = abs(f[i]);
    if (i == 0 || a != 1) s += a.get_str();
    if (i > 0) s += i == 1 ? "t" : "t^" + std::to_string(i);
  }
  return s;
}

namespace modp {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  if (p < (1ULL << 32)) return (a % p) * (b % p) % p;
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw Error("modular inverse of zero");
  return powmod(a, p - 2, p);
}

int degree(const PPoly& f) { return static_cast<int>(f.size()) - 1; }

void trim(PPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

PPoly reduce(const ZPoly& f, std::uint64_t p) {
  PPoly r(f.size());
  mpz_class t;
  for (std::size_t i = 0; i < f.size(); ++i) {
    mpz_fdiv_r_ui(t.get_mpz_t(), f[i].get_mpz_t(), p);
    r[i] = t.get_ui();
  }
  trim(r);
  return r;
}

PPoly sub(const PPoly& a, const PPoly& b, std::uint64_t p) {
  PPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i]) % p;
  trim(r);
  return r;
}

PPoly mul(const PPoly& a, const PPoly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  PPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  }
  trim(r);
  return r;
}

namespace {

void divmod(const PPoly& a, const PPoly& b, std::uint64_t p, PPoly* q, PPoly* r) {
  if (b.empty()) throw Error("polynomial division by zero mod p");
  PPoly rem = a;
  trim(rem);
  PPoly quo;
  if (degree(rem) >= degree(b)) quo.assign(rem.size() - b.size() + 1, 0);
  std::uint64_t li = inv(b.back(), p);
  for (int k = degree(rem) - degree(b); k >= 0; --k) {
    std::uint64_t c = mulmod(rem[k + b.size() - 1], li, p);
    if (!c) continue;
    quo[k] = c;
    for (std::size_t j = 0; j < b.size(); ++j) {
      rem[k + j] = (rem[k + j] + p - mulmod(c, b[j], p)) % p;
    }
  }
  trim(rem);
  trim(quo);
  if (q) *q = std::move(quo);
  if (r) *r = std::move(rem);
}

}  // namespace

PPoly rem(const PPoly& a, const PPoly& b, std::uint64_t p) {
  PPoly r;
  divmod(a, b, p, nullptr, &r);
  return r;
}

PPoly quo(const PPoly& a, const PPoly& b, std::uint64_t p) {
  PPoly q;
  divmod(a, b, p, &q, nullptr);
  return q;
}

PPoly monic(const PPoly& f, std::uint64_t p) {
  if (f.empty()) return f;
  std::uint64_t li = inv(f.back(), p);
  PPoly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = mulmod(f[i], li, p);
  return r;
}

PPoly gcd(const PPoly& a0, const PPoly& b0, std::uint64_t p) {
  PPoly a = a0, b = b0;
  trim(a);
  trim(b);
  while (!b.empty()) {
    PPoly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

PPoly derivative(const PPoly& f, std::uint64_t p) {
  PPoly r;
  for (std::size_t i = 1; i < f.size(); ++i) r.push_back(mulmod(f[i], i % p, p));
  trim(r);
  return r;
}

PPoly powmod_poly(const PPoly& base, std::uint64_t e, const PPoly& mod, std::uint64_t p) {
  PPoly result{1};
  PPoly b = rem(base, mod, p);
  while (e) {
    if (e & 1) result = rem(mul(result, b, p), mod, p);
    e >>= 1;
    if (e) b = rem(mul(b, b, p), mod, p);
  }
  return result;
}

namespace {

// Rows of the Berlekamp matrix: row i holds x^(i p) mod f.
std::vector<std::vector<std::uint64_t>> berlekamp_q(const PPoly& f, std::uint64_t p) {
  const int n = degree(f);
  PPoly xp = powmod_poly(PPoly{0, 1}, p, f, p);
  std::vector<std::vector<std::uint64_t>> q(n, std::vector<std::uint64_t>(n, 0));
  PPoly cur{1};
  for (int i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < cur.size(); ++j) q[i][j] = cur[j];
    cur = rem(mul(cur, xp, p), f, p);
  }
  return q;
}

// Basis of {v : v (Q - I) = 0}, each vector read as a polynomial.
std::vector<PPoly> berlekamp_kernel(const PPoly& f, std::uint64_t p) {
  const int n = degree(f);
  auto q = berlekamp_q(f, p);
  // A = (Q - I)^T, solve A v = 0.
  std::vector<std::vector<std::uint64_t>> a(n, std::vector<std::uint64_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[j][i] = (q[i][j] + (i == j ? p - 1 : 0)) % p;
  }
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int piv = row;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) continue;
    std::swap(a[row], a[piv]);
    std::uint64_t iv = inv(a[row][col], p);
    for (int j = 0; j < n; ++j) a[row][j] = mulmod(a[row][j], iv, p);
    for (int r = 0; r < n; ++r) {
      if (r == row || a[r][col] == 0) continue;
      std::uint64_t c = a[r][col];
      for (int j = 0; j < n; ++j) a[r][j] = (a[r][j] + p - mulmod(c, a[row][j], p)) % p;
    }
    pivot_col.push_back(col);
    ++row;
  }
  std::vector<char> is_pivot(n, 0);
  for (int c : pivot_col) is_pivot[c] = 1;
  std::vector<PPoly> basis;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    PPoly v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = (p - a[r][free]) % p;
    trim(v);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

int berlekamp_count(const PPoly& f, std::uint64_t p) {
  if (degree(f) <= 1) return degree(f) == 1 ? 1 : 0;
  return static_cast<int>(berlekamp_kernel(monic(f, p), p).size());
}

std::vector<PPoly> berlekamp_factor(const PPoly& f0, std::uint64_t p, std::uint64_t seed) {
  PPoly f = monic(f0, p);
  if (degree(f) <= 1) return {f};
  auto basis = berlekamp_kernel(f, p);
  const std::size_t r = basis.size();
  std::vector<PPoly> parts{f};
  std::mt19937_64 rng(seed);
  while (parts.size() < r) {
    PPoly a;
    for (const auto& b : basis) {
      std::uint64_t c = rng() % p;
      PPoly term(b.size());
      for (std::size_t i = 0; i < b.size(); ++i) term[i] = mulmod(b[i], c, p);
      a = sub(a, term, p);
    }
    std::vector<PPoly> next;
    for (auto& u : parts) {
      PPoly g;
      if (p == 2) {
        g = gcd(u, a, p);
      } else {
        PPoly pw = powmod_poly(a, (p - 1) / 2, u, p);
        g = gcd(u, sub(pw, PPoly{1}, p), p);
      }
      if (degree(g) > 0 && degree(g) < degree(u)) {
        next.push_back(g);
        next.push_back(monic(quo(u, g, p), p));
      } else {
        next.push_back(std::move(u));
      }
    }
    parts = std::move(next);
  }
  std::sort(parts.begin(), parts.end());
  return parts;
}

}  // namespace modp

namespace {

// ---- arithmetic over Z / m with m = p^k ----

ZPoly lift_poly(const PPoly& f) {
  ZPoly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = static_cast<unsigned long>(f[i]);
  return r;
}

ZPoly mod_nonneg(const ZPoly& f, const mpz_class& m) {
  ZPoly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) mpz_fdiv_r(r[i].get_mpz_t(), f[i].get_mpz_t(), m.get_mpz_t());
  trim(r);
  return r;
}

ZPoly mul_mod(const ZPoly& a, const ZPoly& b, const mpz_class& m) { return mod_nonneg(mul(a, b), m); }

// Division by a monic h modulo m.
void divmod_monic(const ZPoly& a, const ZPoly& h, const mpz_class& m, ZPoly& q, ZPoly& r) {
  r = mod_nonneg(a, m);
  q.clear();
  if (degree(r) < degree(h)) return;
  q.assign(r.size() - h.size() + 1, 0);
  for (int k = degree(r) - degree(h); k >= 0; --k) {
    mpz_class c = r[k + h.size() - 1];
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c == 0) continue;
    q[k] = c;
    for (std::size_t j = 0; j < h.size(); ++j) {
      r[k + j] -= c * h[j];
      mpz_fdiv_r(r[k + j].get_mpz_t(), r[k + j].get_mpz_t(), m.get_mpz_t());
    }
  }
  trim(q);
  trim(r);
}

// s, t with s g + t h = 1 mod p, deg s < deg h, deg t < deg g.
void ext_gcd(const PPoly& g, const PPoly& h, std::uint64_t p, PPoly& s, PPoly& t) {
  PPoly r0 = g, r1 = h, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    PPoly q = modp::quo(r0, r1, p);
    PPoly r2 = modp::sub(r0, modp::mul(q, r1, p), p);
    PPoly s2 = modp::sub(s0, modp::mul(q, s1, p), p);
    PPoly t2 = modp::sub(t0, modp::mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (modp::degree(r0) != 0) throw Error("internal: Hensel factors not coprime");
  std::uint64_t iv = modp::inv(r0[0], p);
  s.assign(s0.size(), 0);
  t.assign(t0.size(), 0);
  for (std::size_t i = 0; i < s0.size(); ++i) s[i] = modp::mulmod(s0[i], iv, p);
  for (std::size_t i = 0; i < t0.size(); ++i) t[i] = modp::mulmod(t0[i], iv, p);
}

// Lifts f = g h (mod p), h monic, to f = g h (mod m_final), m_final = p^(2^j).
void hensel_pair(const ZPoly& f, ZPoly& g, ZPoly& h, const PPoly& sp, const PPoly& tp, std::uint64_t p,
                 const mpz_class& m_final) {
  ZPoly s = lift_poly(sp), t = lift_poly(tp);
  mpz_class m = static_cast<unsigned long>(p);
  while (m < m_final) {
    mpz_class m2 = m * m;
    ZPoly e = mod_nonneg(sub(f, mul(g, h)), m2);
    ZPoly q, r;
    divmod_monic(mul(s, e), h, m2, q, r);
    ZPoly g2 = mod_nonneg(add(g, add(mul(t, e), mul(q, g))), m2);
    ZPoly h2 = mod_nonneg(add(h, r), m2);
    ZPoly b = mod_nonneg(sub(add(mul(s, g2), mul(t, h2)), ZPoly{1}), m2);
    ZPoly c, d;
    divmod_monic(mul(s, b), h2, m2, c, d);
    s = mod_nonneg(sub(s, d), m2);
    t = mod_nonneg(sub(t, add(mul(t, b), mul(c, g2))), m2);
    g = std::move(g2);
    h = std::move(h2);
    m = m2;
  }
}

// Lifts f = lc * prod(factors) (mod p) to monic factors modulo m_final.
void hensel_tree(const ZPoly& f, const std::vector<PPoly>& factors, std::uint64_t p,
                 const mpz_class& m_final, std::vector<ZPoly>& out) {
  if (factors.size() == 1) {
    // f = lc * g with g monic: g = f / lc mod m.
    mpz_class lc_inv;
    mpz_class lc = f.back();
    mpz_invert(lc_inv.get_mpz_t(), lc.get_mpz_t(), m_final.get_mpz_t());
    ZPoly g(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) g[i] = f[i] * lc_inv;
    out.push_back(mod_nonneg(g, m_final));
    return;
  }
  std::size_t half = factors.size() / 2;
  std::vector<PPoly> left(factors.begin(), factors.begin() + half);
  std::vector<PPoly> right(factors.begin() + half, factors.end());
  PPoly gp{1}, hp{1};
  for (const auto& x : left) gp = modp::mul(gp, x, p);
  for (const auto& x : right) hp = modp::mul(hp, x, p);
  {
    mpz_class t;
    mpz_fdiv_r_ui(t.get_mpz_t(), f.back().get_mpz_t(), p);
    std::uint64_t lc = t.get_ui();
    for (auto& c : gp) c = modp::mulmod(c, lc, p);
  }
  PPoly s, t;
  ext_gcd(gp, hp, p, s, t);
  ZPoly g = lift_poly(gp), h = lift_poly(hp);
  hensel_pair(f, g, h, s, t, p, m_final);
  hensel_tree(g, left, p, m_final, out);
  hensel_tree(h, right, p, m_final, out);
}

std::vector<std::uint64_t> candidate_primes() {
  static const std::vector<std::uint64_t> primes = [] {
    std::vector<std::uint64_t> v;
    mpz_class c = (1UL << 31) - 1;
    while (v.size() < 12) {
      if (mpz_probab_prime_p(c.get_mpz_t(), 30)) v.push_back(c.get_ui());
      c -= 2;
    }
    return v;
  }();
  return primes;
}

}  // namespace

std::vector<ZPoly> factor_squarefree(const ZPoly& f0) {
  ZPoly f = primitive(f0);
  if (degree(f) <= 1) return {f};
  // Factor modulo several primes. Degrees of true factors must be subset sums
  // of every modular degree pattern; keep the prime with the fewest factors.
  const int n = degree(f);
  std::vector<char> allowed(n + 1, 1);
  std::uint64_t p = 0;
  std::vector<PPoly> modular;
  int good = 0;
  for (std::uint64_t cand : candidate_primes()) {
    if (mpz_divisible_ui_p(f.back().get_mpz_t(), cand)) continue;
    PPoly fp = modp::reduce(f, cand);
    if (modp::degree(modp::gcd(fp, modp::derivative(fp, cand), cand)) > 0) continue;
    std::vector<PPoly> parts = modp::berlekamp_factor(fp, cand);
    if (parts.size() == 1) return {f};
    std::vector<char> sums(n + 1, 0);
    sums[0] = 1;
    for (const auto& g : parts) {
      const int d = modp::degree(g);
      for (int t = n; t >= d; --t) sums[t] |= sums[t - d];
    }
    int inner = 0;
    for (int t = 0; t <= n; ++t) {
      allowed[t] &= sums[t];
      if (t > 0 && t < n && allowed[t]) ++inner;
    }
    if (inner == 0) return {f};
    if (p == 0 || parts.size() < modular.size()) {
      p = cand;
      modular = std::move(parts);
    }
    if (++good >= 5) break;
  }
  if (p == 0) throw Error("internal: no suitable prime for factorization");

  // Coefficient bound for factors of f, times |lc|, doubled for the sign.
  mpz_class norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  mpz_class norm;
  mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
  norm += 1;
  mpz_class bound = norm * abs(f.back()) * 4;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(degree(f)));
  mpz_class m = static_cast<unsigned long>(p);
  while (m <= bound) m *= m;

  std::vector<ZPoly> lifted;
  hensel_tree(f, modular, p, m, lifted);

  std::vector<ZPoly> result;
  ZPoly rest = f;
  for (std::size_t s = 1; 2 * s <= lifted.size();) {
    bool found = false;
    std::vector<int> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = static_cast<int>(i);
    const int nl = static_cast<int>(lifted.size());
    while (true) {
      int deg_sum = 0;
      for (int i : idx) deg_sum += degree(lifted[i]);
      if (!allowed[deg_sum]) goto next_combination;
      {
      mpz_class lc = rest.back();
      // Cheap constant-term test before building the candidate.
      mpz_class c0 = lc;
      for (int i : idx) {
        c0 = c0 * lifted[i][0];
        mpz_fdiv_r(c0.get_mpz_t(), c0.get_mpz_t(), m.get_mpz_t());
      }
      if (c0 > m / 2) c0 -= m;
      mpz_class target = lc * rest[0];
      bool plausible = c0 != 0 && mpz_divisible_p(target.get_mpz_t(), c0.get_mpz_t());
      if (plausible) {
        ZPoly cand{lc};
        for (int i : idx) cand = mul_mod(cand, lifted[i], m);
        cand = primitive(symmetric_mod(cand, m));
        ZPoly q;
        if (degree(cand) > 0 && exact_div(rest, cand, q)) {
          result.push_back(cand);
          rest = primitive(q);
          for (int k = static_cast<int>(s) - 1; k >= 0; --k) lifted.erase(lifted.begin() + idx[k]);
          found = true;
          break;
        }
      }
      }
    next_combination:
      // Next combination.
      int k = static_cast<int>(s) - 1;
      while (k >= 0 && idx[k] == nl - static_cast<int>(s) + k) --k;
      if (k < 0) break;
      ++idx[k];
      for (std::size_t j = k + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (degree(rest) > 0) result.push_back(rest);
  std::sort(result.begin(), result.end(), [](const ZPoly& a, const ZPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return result;
}

}  // namespace bflip::upoly
