#include "bruhat_flip/bipoly.hpp"

#include <cctype>

#include "bruhat_flip/errors.hpp"

namespace bflip {

BiPoly BiPoly::constant(const mpz_class& c) { return monomial(0, 0, c); }

BiPoly BiPoly::monomial(int i, int j, const mpz_class& c) {
  BiPoly p;
  p.add_term(i, j, c);
  return p;
}

bool BiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exp{0, 0});
}

mpz_class BiPoly::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void BiPoly::add_term(int i, int j, const mpz_class& c) {
  if (c == 0) return;
  if (i < 0 || j < 0) throw Error("BiPoly: negative exponent");
  auto [it, fresh] = terms_.emplace(Exp{i, j}, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int BiPoly::deg_x() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first);
  return d;
}

int BiPoly::deg_y() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.second);
  return d;
}

int BiPoly::total_degree() const {
  return terms_.empty() ? 0 : terms_.begin()->first.first + terms_.begin()->first.second;
}

std::pair<BiPoly::Exp, mpz_class> BiPoly::leading() const {
  if (terms_.empty()) throw Error("BiPoly: leading term of zero");
  return *terms_.begin();
}

mpz_class BiPoly::content() const {
  mpz_class g = 0;
  for (const auto& [e, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

BiPoly BiPoly::primitive_part() const {
  BiPoly p;
  if (terms_.empty()) return p;
  mpz_class g = content();
  if (leading().second < 0) g = -g;
  for (const auto& [e, c] : terms_) p.terms_.emplace(e, c / g);
  return p;
}

BiPoly BiPoly::operator-() const {
  BiPoly p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
  return *this;
}

BiPoly& BiPoly::operator*=(const mpz_class& k) {
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= k;
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly p;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) p.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
  }
  return p;
}

BiPoly BiPoly::pow(int k) const {
  BiPoly r = constant(1);
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

std::optional<BiPoly> exact_divide(const BiPoly& p, const BiPoly& d) {
  if (d.is_zero()) throw Error("BiPoly: division by zero");
  BiPoly rem = p;
  BiPoly q;
  const auto [de, dc] = d.leading();
  while (!rem.is_zero()) {
    auto [re, rc] = rem.leading();
    if (re.first < de.first || re.second < de.second) return std::nullopt;
    if (!mpz_divisible_p(rc.get_mpz_t(), dc.get_mpz_t())) return std::nullopt;
    mpz_class c = rc / dc;
    int i = re.first - de.first, j = re.second - de.second;
    q.add_term(i, j, c);
    for (const auto& [e, k] : d.terms_) rem.add_term(e.first + i, e.second + j, -k * c);
  }
  return q;
}

std::string BiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    mpz_class a = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    auto var = [&mono](char v, int k) {
      if (k == 0) return;
      if (!mono.empty()) mono += "*";
      mono += v;
      if (k > 1) mono += "^" + std::to_string(k);
    };
    var('x', e.first);
    var('y', e.second);
    if (mono.empty()) out += a.get_str();
    else if (a == 1) out += mono;
    else out += a.get_str() + "*" + mono;
  }
  return out;
}

BiPoly BiPoly::parse(std::string_view text) {
  BiPoly p;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& why) {
    throw ParseError("polynomial '" + std::string(text) + "': " + why);
  };
  auto read_digits = [&]() -> std::string {
    std::size_t s = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    return std::string(text.substr(s, i - s));
  };
  skip();
  if (i == text.size()) fail("empty");
  bool first = true;
  while (true) {
    skip();
    if (i == text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    mpz_class c = 1;
    bool have = false;
    std::string digits = read_digits();
    if (!digits.empty()) {
      c = mpz_class(digits);
      have = true;
    }
    int ex = 0, ey = 0;
    while (true) {
      skip();
      if (have) {
        if (i < text.size() && text[i] == '*') {
          ++i;
          skip();
        } else {
          break;
        }
      }
      if (i >= text.size() || (text[i] != 'x' && text[i] != 'y')) {
        if (have) fail("expected a variable after '*'");
        fail("expected a term");
      }
      char v = text[i++];
      int k = 1;
      skip();
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip();
        std::string e = read_digits();
        if (e.empty() || e.size() > 6) fail("bad exponent");
        k = std::stoi(e);
      }
      (v == 'x' ? ex : ey) += k;
      have = true;
    }
    p.add_term(ex, ey, sign * c);
  }
  return p;
}

}  // namespace bflip
