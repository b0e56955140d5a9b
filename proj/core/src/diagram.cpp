#include "bruhat_flip/diagram.hpp"

#include <cctype>
#include <string>

#include "bruhat_flip/errors.hpp"

namespace bflip {
namespace {

constexpr unsigned long long kSaturate = 1ULL << 62;

unsigned long long sat_mul(unsigned long long a, unsigned long long b) {
  if (a != 0 && b > kSaturate / a) return kSaturate;
  return a * b;
}

unsigned long long factorial(int n) {
  unsigned long long r = 1;
  for (int i = 2; i <= n; ++i) r = sat_mul(r, static_cast<unsigned long long>(i));
  return r;
}

void validate(const DiagramFactor& f) {
  auto bad = [&](const std::string& why) { throw UnsupportedDiagram(f.name() + ": " + why); };
  switch (f.family) {
    case Family::A:
      if (f.param < 1) bad("rank must be >= 1");
      break;
    case Family::B:
      if (f.param < 2) bad("rank must be >= 2");
      break;
    case Family::D:
      if (f.param < 4) bad("rank must be >= 4");
      break;
    case Family::E:
      if (f.param < 6 || f.param > 8) bad("only E6, E7, E8 are finite");
      break;
    case Family::F:
      if (f.param != 4) bad("only F4 is finite");
      break;
    case Family::G:
      if (f.param != 2) bad("only G2 is finite");
      break;
    case Family::H:
      if (f.param != 3 && f.param != 4) bad("only H3, H4 are finite");
      break;
    case Family::I:
      if (f.param < 2) bad("dihedral parameter must be >= 2");
      break;
  }
}

// Fills the block of the Coxeter matrix owned by one factor.
void fill_block(const DiagramFactor& f, int off, std::vector<std::vector<int>>& m) {
  int n = f.rank();
  auto set = [&](int i, int j, int v) {
    m[off + i][off + j] = v;
    m[off + j][off + i] = v;
  };
  auto chain = [&](int len) {
    for (int i = 0; i + 1 < len; ++i) set(i, i + 1, 3);
  };
  switch (f.family) {
    case Family::A:
      chain(n);
      break;
    case Family::B:
      chain(n);
      set(n - 2, n - 1, 4);
      break;
    case Family::D:
      chain(n - 1);
      set(n - 3, n - 1, 3);
      break;
    case Family::E:
      // Bourbaki: 1-3-4-5-6-..., 2 attached to 4 (0-based below).
      set(0, 2, 3);
      set(2, 3, 3);
      set(1, 3, 3);
      for (int i = 3; i + 1 < n; ++i) set(i, i + 1, 3);
      break;
    case Family::F:
      chain(4);
      set(1, 2, 4);
      break;
    case Family::G:
      set(0, 1, 6);
      break;
    case Family::H:
      chain(n);
      set(0, 1, 5);
      break;
    case Family::I:
      set(0, 1, f.param);
      break;
  }
}

}  // namespace

int DiagramFactor::rank() const { return family == Family::I ? 2 : param; }

std::string DiagramFactor::name() const {
  switch (family) {
    case Family::A: return "A" + std::to_string(param);
    case Family::B: return "B" + std::to_string(param);
    case Family::D: return "D" + std::to_string(param);
    case Family::E: return "E" + std::to_string(param);
    case Family::F: return "F" + std::to_string(param);
    case Family::G: return "G" + std::to_string(param);
    case Family::H: return "H" + std::to_string(param);
    case Family::I: return "I2(" + std::to_string(param) + ")";
  }
  return "?";
}

Diagram::Diagram(std::vector<DiagramFactor> factors, int max_rank) : factors_(std::move(factors)) {
  if (factors_.empty()) throw UnsupportedDiagram("empty diagram");
  int total = 0;
  for (const auto& f : factors_) {
    validate(f);
    total += f.rank();
  }
  if (total > max_rank) {
    throw CapExceeded("diagram rank " + std::to_string(total) + " exceeds cap " +
                      std::to_string(max_rank));
  }
  coxeter_matrix_.assign(total, std::vector<int>(total, 2));
  for (int i = 0; i < total; ++i) coxeter_matrix_[i][i] = 1;
  int off = 0;
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    offsets_.push_back(off);
    fill_block(factors_[k], off, coxeter_matrix_);
    for (int i = 0; i < factors_[k].rank(); ++i) factor_index_.push_back(static_cast<int>(k));
    off += factors_[k].rank();
  }
}

Diagram Diagram::parse(std::string_view text, int max_rank) {
  std::vector<DiagramFactor> factors;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw ParseError("diagram '" + std::string(text) + "': " + why);
  };
  auto read_int = [&]() -> int {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) fail("expected a number at position " + std::to_string(start));
    if (i - start > 6) fail("number too large");
    return std::stoi(std::string(text.substr(start, i - start)));
  };
  while (true) {
    if (i >= text.size()) fail("expected a factor");
    char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[i++])));
    DiagramFactor f{Family::A, 0};
    switch (c) {
      case 'A': f.family = Family::A; break;
      case 'B': f.family = Family::B; break;
      case 'C': f.family = Family::B; break;  // same Coxeter group as B
      case 'D': f.family = Family::D; break;
      case 'E': f.family = Family::E; break;
      case 'F': f.family = Family::F; break;
      case 'G': f.family = Family::G; break;
      case 'H': f.family = Family::H; break;
      case 'I': f.family = Family::I; break;
      default: fail(std::string("unknown family '") + c + "'");
    }
    if (f.family == Family::I) {
      if (i >= text.size() || text[i] != '2') fail("dihedral factors are written I2(m)");
      ++i;
      if (i >= text.size() || text[i] != '(') fail("dihedral factors are written I2(m)");
      ++i;
      auto rest = text.substr(i);
      if (rest.starts_with("inf") || rest.starts_with("oo")) {
        throw UnsupportedDiagram("I2(infinity) is an infinite Coxeter group");
      }
      f.param = read_int();
      if (i >= text.size() || text[i] != ')') fail("missing ')'");
      ++i;
    } else {
      f.param = read_int();
    }
    factors.push_back(f);
    if (i == text.size()) break;
    if (text[i] != 'x' && text[i] != 'X' && text[i] != '*') fail("expected 'x' between factors");
    ++i;
  }
  return Diagram(std::move(factors), max_rank);
}

unsigned long long Diagram::predicted_order() const {
  unsigned long long order = 1;
  for (const auto& f : factors_) {
    unsigned long long o = 1;
    int n = f.param;
    switch (f.family) {
      case Family::A: o = factorial(n + 1); break;
      case Family::B: o = sat_mul(1ULL << std::min(n, 62), factorial(n)); break;
      case Family::D: o = sat_mul(1ULL << std::min(n - 1, 62), factorial(n)); break;
      case Family::E: o = n == 6 ? 51840ULL : n == 7 ? 2903040ULL : 696729600ULL; break;
      case Family::F: o = 1152; break;
      case Family::G: o = 12; break;
      case Family::H: o = n == 3 ? 120 : 14400; break;
      case Family::I: o = 2ULL * static_cast<unsigned long long>(n); break;
    }
    order = sat_mul(order, o);
  }
  return order;
}

std::string Diagram::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    if (k) out += "x";
    out += factors_[k].name();
  }
  return out;
}

}  // namespace bflip
