#include "bruhat_flip/dihedral.hpp"

namespace bflip {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

std::uint64_t dihedral_flipclass_count(int d, int h) {
  if (d < 1 || h < 1 || h > d || (d - h) % 2 != 0) return 0;
  return binomial((d + h) / 2 - 1, h - 1);
}

std::vector<std::vector<int>> odd_compositions(int d, int h) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left) -> void {
    int parts = h - static_cast<int>(cur.size());
    if (parts == 0) {
      if (left == 0) out.push_back(cur);
      return;
    }
    for (int p = 1; p <= left - (parts - 1); p += 2) {
      cur.push_back(p);
      self(self, left - p);
      cur.pop_back();
    }
  };
  if (d >= 1 && h >= 1) rec(rec, d);
  return out;
}

QPoly dihedral_rtilde(int d) {
  QPoly p;
  if (d == 0) return QPoly::constant(1);
  for (int h = 1; h <= d; ++h) {
    std::uint64_t c = dihedral_flipclass_count(d, h);
    if (c) p += QPoly::monomial(h, static_cast<std::int64_t>(c));
  }
  return p;
}

}  // namespace bflip
