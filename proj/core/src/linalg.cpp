#include "bruhat_flip/linalg.hpp"

#include <utility>

namespace bflip {

int exact_rank(std::vector<std::vector<Scalar>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t r = 0;
  Scalar prev(1);
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    const Scalar p = rows[r][c];
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        rows[i][j] = (p * rows[i][j] - rows[i][c] * rows[r][j]) / prev;
      }
      rows[i][c] = Scalar(0);
    }
    prev = p;
    ++r;
  }
  return static_cast<int>(r);
}

}  // namespace bflip
