#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "bruhat_flip/group.hpp"
#include "bruhat_flip/reflection_order.hpp"

namespace bflip {

/// Polynomial in q with integer coefficients, lowest degree first, no
/// trailing zeros.
struct QPoly {
  std::vector<std::int64_t> coeffs;

  static QPoly constant(std::int64_t c);
  static QPoly monomial(int degree, std::int64_t c = 1);

  bool is_zero() const { return coeffs.empty(); }
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  std::int64_t coeff(int i) const {
    return i >= 0 && i < static_cast<int>(coeffs.size()) ? coeffs[i] : 0;
  }
  void trim();
  /// Drops the terms of degree >= k.
  QPoly truncated(int k) const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  /// Multiplication by q^k.
  QPoly shifted(int k) const;
  friend bool operator==(const QPoly&, const QPoly&) = default;

  /// "q^5 + 2q^3 + q"; "0" for the zero polynomial.
  std::string to_string() const;
};

/// Coefficient of q^h = number of increasing h-paths from u to v.
QPoly rtilde_dyer(const CoxeterGroup& g, Elem u, Elem v, const ReflectionOrdering& ord);

/// Descent recurrence, memoized. Not thread-safe; one per worker.
class RTildeRecurrence {
 public:
  explicit RTildeRecurrence(const CoxeterGroup& g) : g_(&g) {}
  const QPoly& operator()(Elem u, Elem v);

 private:
  const CoxeterGroup* g_;
  std::unordered_map<std::uint64_t, QPoly> memo_;
};

QPoly rtilde_recurrence(const CoxeterGroup& g, Elem u, Elem v);

}  // namespace bflip
