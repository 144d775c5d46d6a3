#include "hyp5/golden.hpp"

#include "hyp5/errors.hpp"

namespace hyp5 {

GoldenMatrix golden_identity(std::size_t n) {
  GoldenMatrix m(n, std::vector<GoldenInt>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = {1, 0};
  return m;
}

GoldenMatrix gmul(const GoldenMatrix& x, const GoldenMatrix& y) {
  std::size_t n = x.size(), k = y.size(), c = y[0].size();
  GoldenMatrix out(n, std::vector<GoldenInt>(c));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      GoldenInt acc{0, 0};
      for (std::size_t t = 0; t < k; ++t) acc = acc + x[i][t] * y[t][j];
      out[i][j] = acc;
    }
  return out;
}

GoldenMatrix gtranspose(const GoldenMatrix& x) {
  std::size_t r = x.size(), c = x[0].size();
  GoldenMatrix out(c, std::vector<GoldenInt>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) out[j][i] = x[i][j];
  return out;
}

int matrix_order(const GoldenMatrix& x, int cap) {
  GoldenMatrix id = golden_identity(x.size());
  GoldenMatrix p = x;
  for (int k = 1; k <= cap; ++k) {
    if (p == id) return k;
    p = gmul(p, x);
  }
  throw EnumerationOverflowError("matrix order exceeds cap");
}

}  // namespace hyp5
