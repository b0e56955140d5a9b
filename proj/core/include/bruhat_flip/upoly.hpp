#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace bflip::upoly {

/// Dense univariate polynomial over Z, lowest degree first, no trailing zeros.
using ZPoly = std::vector<mpz_class>;
/// Dense univariate polynomial over Z/p for a word-sized prime p.
using PPoly = std::vector<std::uint64_t>;

int degree(const ZPoly& f);
void trim(ZPoly& f);
ZPoly add(const ZPoly& a, const ZPoly& b);
ZPoly sub(const ZPoly& a, const ZPoly& b);
ZPoly mul(const ZPoly& a, const ZPoly& b);
ZPoly derivative(const ZPoly& f);
mpz_class content(const ZPoly& f);
/// f divided by its content, sign chosen so the leading coefficient is positive.
ZPoly primitive(const ZPoly& f);
/// Quotient when b divides a exactly over Z, otherwise an empty optional
/// signalled by returning false.
bool exact_div(const ZPoly& a, const ZPoly& b, ZPoly& quotient);
/// Gcd of primitive parts (primitive, positive leading coefficient).
ZPoly gcd(const ZPoly& a, const ZPoly& b);
/// Yun square-free decomposition of a primitive polynomial: pairs (g_i, i).
std::vector<std::pair<ZPoly, int>> squarefree(const ZPoly& f);
/// Coefficients reduced into (-m/2, m/2].
ZPoly symmetric_mod(const ZPoly& f, const mpz_class& m);
std::string to_string(const ZPoly& f);

namespace modp {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inv(std::uint64_t a, std::uint64_t p);
int degree(const PPoly& f);
void trim(PPoly& f);
PPoly reduce(const ZPoly& f, std::uint64_t p);
PPoly sub(const PPoly& a, const PPoly& b, std::uint64_t p);
PPoly mul(const PPoly& a, const PPoly& b, std::uint64_t p);
PPoly rem(const PPoly& a, const PPoly& b, std::uint64_t p);
PPoly quo(const PPoly& a, const PPoly& b, std::uint64_t p);
PPoly monic(const PPoly& f, std::uint64_t p);
PPoly gcd(const PPoly& a, const PPoly& b, std::uint64_t p);
PPoly derivative(const PPoly& f, std::uint64_t p);
PPoly powmod_poly(const PPoly& base, std::uint64_t e, const PPoly& mod, std::uint64_t p);

/// Number of irreducible factors of a square-free f (Berlekamp rank count).
int berlekamp_count(const PPoly& f, std::uint64_t p);
/// Monic irreducible factors of a square-free f, sorted. `seed` drives the
/// random splitting.
std::vector<PPoly> berlekamp_factor(const PPoly& f, std::uint64_t p, std::uint64_t seed = 1);

}  // namespace modp

/// Irreducible factorization of a square-free primitive f with positive
/// leading coefficient and deg >= 1, by modular factorization, Hensel
/// lifting and subset recombination. Factors are primitive with positive
/// leading coefficient.
std::vector<ZPoly> factor_squarefree(const ZPoly& f);

}  // namespace bflip::upoly
