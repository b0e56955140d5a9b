#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace bflip {

/// Sparse polynomial in x, y with integer coefficients. No zero coefficients
/// are stored.
class BiPoly {
 public:
  using Exp = std::pair<int, int>;  // (x exponent, y exponent)
  /// Canonical term order: total degree, then x exponent, both descending.
  struct TermOrder {
    bool operator()(const Exp& a, const Exp& b) const {
      int da = a.first + a.second, db = b.first + b.second;
      return da != db ? da > db : a.first > b.first;
    }
  };
  using TermMap = std::map<Exp, mpz_class, TermOrder>;

  BiPoly() = default;
  static BiPoly constant(const mpz_class& c);
  static BiPoly monomial(int i, int j, const mpz_class& c = 1);
  static BiPoly x() { return monomial(1, 0); }
  static BiPoly y() { return monomial(0, 1); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  mpz_class coeff(int i, int j) const;
  void add_term(int i, int j, const mpz_class& c);

  int deg_x() const;
  int deg_y() const;
  int total_degree() const;
  std::size_t num_terms() const { return terms_.size(); }

  /// Leading term in the canonical order: highest total degree, then highest
  /// x exponent.
  std::pair<Exp, mpz_class> leading() const;
  /// Gcd of the coefficients (non-negative).
  mpz_class content() const;
  BiPoly primitive_part() const;

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const mpz_class& c);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }
  BiPoly pow(int k) const;

  /// Quotient when d divides p in Z[x,y], otherwise nullopt.
  friend std::optional<BiPoly> exact_divide(const BiPoly& p, const BiPoly& d);

  /// Terms sorted by (total degree, x exponent) descending, e.g.
  /// "x^4 + 4*x^2*y + 4*y^2". "0" for zero.
  std::string to_string() const;
  /// Accepts the output grammar of to_string (spaces optional). Throws ParseError.
  static BiPoly parse(std::string_view text);

 private:
  TermMap terms_;
};

inline bool has_y4_monomial(const BiPoly& p) { return p.coeff(0, 4) != 0; }
/// The pure x^4 term comes only from (bottom, top) of a time-support poset
/// with two atoms and two coatoms, so it marks dihedral flipclasses (h >= 2).
inline bool has_x4_monomial(const BiPoly& p) { return p.coeff(4, 0) != 0; }

}  // namespace bflip
