#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace bflip {

enum class Family { A, B, D, E, F, G, H, I };

/// One irreducible component of a Coxeter diagram. For I2(m), `param` is m;
/// otherwise it is the rank.
struct DiagramFactor {
  Family family;
  int param;

  int rank() const;
  std::string name() const;
  friend bool operator==(const DiagramFactor&, const DiagramFactor&) = default;
};

/// Finite Coxeter diagram, possibly reducible. Generators are numbered
/// consecutively across factors in the order they are listed.
class Diagram {
 public:
  Diagram() = default;
  explicit Diagram(std::vector<DiagramFactor> factors, int max_rank = 7);

  /// Grammar: factor ('x' factor)*, factor = A<n> | B<n> | D<n> | E6..8 | F4 |
  /// G2 | H3 | H4 | I2(<m>).
  static Diagram parse(std::string_view text, int max_rank = 7);

  const std::vector<DiagramFactor>& factors() const { return factors_; }
  int rank() const { return static_cast<int>(coxeter_matrix_.size()); }
  bool irreducible() const { return factors_.size() == 1; }

  /// m(s,t); 1 on the diagonal.
  int m(int s, int t) const { return coxeter_matrix_[s][t]; }
  const std::vector<std::vector<int>>& coxeter_matrix() const { return coxeter_matrix_; }

  /// Index of the factor that owns generator `s`, and that factor's first generator.
  int factor_of(int s) const { return factor_index_[s]; }
  int factor_offset(int f) const { return offsets_[f]; }

  /// Group order computed from the classification, saturating at 2^62.
  unsigned long long predicted_order() const;

  /// Canonical text, e.g. "A2xA1".
  std::string to_string() const;

  friend bool operator==(const Diagram& a, const Diagram& b) { return a.factors_ == b.factors_; }

 private:
  std::vector<DiagramFactor> factors_;
  std::vector<std::vector<int>> coxeter_matrix_;
  std::vector<int> factor_index_;
  std::vector<int> offsets_;
};

}  // namespace bflip
