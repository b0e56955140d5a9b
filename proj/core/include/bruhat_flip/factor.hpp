#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "bruhat_flip/bipoly.hpp"
#include "bruhat_flip/upoly.hpp"

namespace bflip {

struct Factorization {
  /// Signed content; p = unit * product of factors^multiplicity.
  mpz_class unit = 1;
  /// Primitive irreducible factors with positive leading coefficient in the
  /// canonical term order, sorted by canonical string.
  std::vector<std::pair<BiPoly, int>> factors;

  BiPoly expand() const;
};

/// Factorization over Z[x,y]. Throws CapExceeded when the total degree is
/// above `max_total_degree`, Error for the zero polynomial.
Factorization factor_bivariate(const BiPoly& p, int max_total_degree = 64);

/// A single factor of multiplicity one and unit content.
bool is_irreducible(const BiPoly& p, int max_total_degree = 64);

/// Factorization over Z[x]: content and irreducible factors with multiplicities.
std::pair<mpz_class, std::vector<std::pair<upoly::ZPoly, int>>> factor_univariate(const upoly::ZPoly& f);

}  // namespace bflip
