#pragma once
#include <cstdint>
#include <vector>

namespace hyp5 {

// Element a + b*phi of Z[phi], phi^2 = phi + 1.
struct GoldenInt {
  long long a = 0, b = 0;

  friend GoldenInt operator+(GoldenInt x, GoldenInt y) { return {x.a + y.a, x.b + y.b}; }
  friend GoldenInt operator-(GoldenInt x, GoldenInt y) { return {x.a - y.a, x.b - y.b}; }
  friend GoldenInt operator-(GoldenInt x) { return {-x.a, -x.b}; }
  friend GoldenInt operator*(GoldenInt x, GoldenInt y) {
    // (a+b phi)(c+d phi) = ac + bd + (ad + bc + bd) phi
    return {x.a * y.a + x.b * y.b, x.a * y.b + x.b * y.a + x.b * y.b};
  }
  bool operator==(const GoldenInt&) const = default;
  double value() const { return double(a) + double(b) * 1.6180339887498948482; }
  static GoldenInt phi() { return {0, 1}; }
};

using GoldenMatrix = std::vector<std::vector<GoldenInt>>;

GoldenMatrix golden_identity(std::size_t n);
GoldenMatrix gmul(const GoldenMatrix& x, const GoldenMatrix& y);
GoldenMatrix gtranspose(const GoldenMatrix& x);
// Order of x as a matrix; throws EnumerationOverflowError past cap.
int matrix_order(const GoldenMatrix& x, int cap = 128);

}  // namespace hyp5
