#pragma once
#include <cassert>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyp5/errors.hpp"

namespace hyp5 {

// Bit-packed vector over GF(2). Padding bits above size() are kept zero,
// so whole-word XOR and equality are valid.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}
  static BitVec ones(std::size_t n);
  static BitVec from_string(const std::string& s);

  std::size_t size() const { return n_; }
  bool get(std::size_t i) const {
    assert(i < n_);
    return (w_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i, bool v) {
    assert(i < n_);
    std::uint64_t m = std::uint64_t(1) << (i & 63);
    if (v) w_[i >> 6] |= m; else w_[i >> 6] &= ~m;
  }
  void flip(std::size_t i) {
    assert(i < n_);
    w_[i >> 6] ^= std::uint64_t(1) << (i & 63);
  }
  void xor_with(const BitVec& o) {
    assert(n_ == o.n_);
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
  }
  std::size_t weight() const;
  bool is_zero() const;
  // Inner product over GF(2).
  bool dot(const BitVec& o) const;

  const std::vector<std::uint64_t>& words() const { return w_; }
  std::vector<std::uint64_t>& words() { return w_; }
  bool operator==(const BitVec&) const = default;
  std::string to_string() const;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

// Bit-packed row-major matrix over GF(2).
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), data_(rows * wpr_, 0) {}
  static BitMatrix identity(std::size_t n);
  static BitMatrix from_strings(const std::vector<std::string>& rows);
  static BitMatrix from_rows(const std::vector<BitVec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words_per_row() const { return wpr_; }

  bool get(std::size_t r, std::size_t c) const {
    assert(r < rows_ && c < cols_);
    return (data_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1u;
  }
  void set(std::size_t r, std::size_t c, bool v) {
    assert(r < rows_ && c < cols_);
    std::uint64_t m = std::uint64_t(1) << (c & 63);
    if (v) data_[r * wpr_ + (c >> 6)] |= m; else data_[r * wpr_ + (c >> 6)] &= ~m;
  }
  const std::uint64_t* row_ptr(std::size_t r) const { return data_.data() + r * wpr_; }
  std::uint64_t* row_ptr(std::size_t r) { return data_.data() + r * wpr_; }
  void xor_row(std::size_t dst, std::size_t src);  // row dst ^= row src
  void swap_rows(std::size_t a, std::size_t b);
  BitVec row_vec(std::size_t r) const;
  BitVec col_vec(std::size_t c) const;
  void set_row(std::size_t r, const BitVec& v);

  BitMatrix transposed() const;
  BitMatrix mul(const BitMatrix& rhs) const;  // GF(2) product; throws ShapeError
  // Row vector times matrix: (1 x rows) * (rows x cols).
  BitVec mul_left(const BitVec& v) const;
  // Matrix times column vector: (rows x cols) * (cols x 1).
  BitVec mul_right(const BitVec& v) const;
  bool is_zero() const;
  // Invariant: all padding bits above cols() are zero.
  bool padding_clear() const;

  bool operator==(const BitMatrix&) const = default;
  std::string row_string(std::size_t r) const;

 private:
  std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
  std::vector<std::uint64_t> data_;
};

struct RrefResult {
  BitMatrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

// Unique reduced row-echelon form.
RrefResult rref(const BitMatrix& m);

// Rows span the right kernel {v : M v^T = 0}; row count = cols - rank.
BitMatrix kernel_basis(const BitMatrix& m);

// Streams all 2^rank row-space elements in Gray-code order over the RREF
// basis; the first element is always the zero vector.
class RowSpace {
 public:
  static constexpr std::size_t kRankGuard = 30;
  explicit RowSpace(const BitMatrix& m);  // throws EnumerationTooLargeError
  std::size_t rank() const { return basis_.size(); }
  std::uint64_t size() const { return std::uint64_t(1) << basis_.size(); }
  // Yields the next vector; returns false when exhausted.
  bool next(BitVec& out);
  void reset();
  const std::vector<BitVec>& basis() const { return basis_; }

 private:
  std::vector<BitVec> basis_;
  BitVec cur_;
  std::uint64_t idx_ = 0;
  bool done_ = false;
};

// Minimum Hamming weight over nonzero row-space elements.
// Throws UndefinedDistanceError when the row space is {0}.
std::size_t min_distance(const BitMatrix& m);

// True iff every set of at most k columns is linearly independent.
bool no_k_columns_dependent(const BitMatrix& m, std::size_t k);

// True iff rref(a) == rref(b), i.e. a = T b for invertible T.
bool left_equivalent(const BitMatrix& a, const BitMatrix& b);  // throws ShapeError

// Solves w * M = target; returns a deterministic witness (free vars zero).
std::optional<BitVec> solve_row(const BitMatrix& m, const BitVec& target);

}  // namespace hyp5
