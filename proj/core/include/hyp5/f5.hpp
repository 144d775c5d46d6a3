#pragma once
#include <array>
#include <cstdint>
#include <vector>

#include "hyp5/golden.hpp"

namespace hyp5 {

// Dense 5x5 matrix over F5; packs into a base-5 key (5^25 < 2^64).
struct F5Matrix {
  std::array<std::uint8_t, 25> e{};

  static F5Matrix identity();
  static F5Matrix from_rows(const std::array<std::array<int, 5>, 5>& rows);

  std::uint8_t at(int r, int c) const { return e[r * 5 + c]; }
  void put(int r, int c, int v) { e[r * 5 + c] = std::uint8_t(((v % 5) + 5) % 5); }

  F5Matrix mul(const F5Matrix& o) const;
  F5Matrix transposed() const;
  bool is_identity() const;
  bool operator==(const F5Matrix&) const = default;

  std::uint64_t key() const;
  static F5Matrix from_key(std::uint64_t k);
};

// Inverse via Gauss-Jordan; throws InvalidArgumentError when singular.
F5Matrix f5_inverse(const F5Matrix& m);
F5Matrix f5_scalar_mul(int s, const F5Matrix& m);

using F5Vec = std::array<std::uint8_t, 5>;
std::uint16_t f5vec_key(const F5Vec& v);
F5Vec f5vec_from_key(std::uint16_t k);
F5Vec f5_apply(const F5Matrix& m, const F5Vec& v);   // m * v
int f5_form(const F5Matrix& K, const F5Vec& v, const F5Vec& w);  // v^T K w

// Entrywise reduction a + b*phi -> (a + 3b) mod 5, the quotient by (phi - 3).
F5Matrix reduce_mod_phi_minus_3(const GoldenMatrix& m);

// BFS closure of the generated matrix group with an open-addressing key set.
// Supports membership and vector orbit/stabilizer queries.
class F5Closure {
 public:
  F5Closure(std::vector<F5Matrix> gens, std::size_t max_size);

  std::size_t order() const { return elems_.size(); }
  bool contains(const F5Matrix& m) const;
  const std::vector<F5Matrix>& generators() const { return gens_; }
  const std::vector<std::uint64_t>& element_keys() const { return elems_; }

  std::vector<F5Vec> orbit(const F5Vec& v) const;
  std::size_t stabilizer_order(const F5Vec& v) const;

 private:
  bool insert(std::uint64_t k);
  std::size_t slot(std::uint64_t k) const;

  std::vector<F5Matrix> gens_;
  std::vector<std::uint64_t> elems_;  // BFS discovery order
  std::vector<std::uint64_t> table_;
  std::uint64_t mask_ = 0;
};

// Congruent change of basis T with T^T S T = diag(1,1,1,1,3) for symmetric S
// of non-square discriminant class; throws ConstructionMismatchError else.
F5Matrix congruent_to_K(const F5Matrix& S);

}  // namespace hyp5
