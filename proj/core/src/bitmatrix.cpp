#include "hyp5/bitmatrix.hpp"

#include <algorithm>
#include <bit>

namespace hyp5 {

BitVec BitVec::ones(std::size_t n) {
  BitVec v(n);
  for (std::size_t k = 0; k < v.w_.size(); ++k) v.w_[k] = ~std::uint64_t(0);
  if (n & 63) v.w_.back() &= (std::uint64_t(1) << (n & 63)) - 1;
  return v;
}

BitVec BitVec::from_string(const std::string& s) {
  BitVec v(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '0' && s[i] != '1') throw IoError("bad bit character in vector literal");
    if (s[i] == '1') v.set(i, true);
  }
  return v;
}

std::size_t BitVec::weight() const {
  std::size_t c = 0;
  for (std::uint64_t x : w_) c += std::popcount(x);
  return c;
}

bool BitVec::is_zero() const {
  for (std::uint64_t x : w_) if (x) return false;
  return true;
}

bool BitVec::dot(const BitVec& o) const {
  assert(n_ == o.n_);
  std::uint64_t acc = 0;
  for (std::size_t k = 0; k < w_.size(); ++k) acc ^= w_[k] & o.w_[k];
  return std::popcount(acc) & 1u;
}

std::string BitVec::to_string() const {
  std::string s(n_, '0');
  for (std::size_t i = 0; i < n_; ++i) if (get(i)) s[i] = '1';
  return s;
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& rows) {
  if (rows.empty()) return BitMatrix(0, 0);
  BitMatrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw ShapeError("ragged row in matrix literal");
    for (std::size_t c = 0; c < m.cols_; ++c) {
      if (rows[r][c] != '0' && rows[r][c] != '1') throw IoError("bad bit character in matrix literal");
      if (rows[r][c] == '1') m.set(r, c, true);
    }
  }
  return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<BitVec>& rows) {
  if (rows.empty()) return BitMatrix(0, 0);
  BitMatrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
  return m;
}

void BitMatrix::xor_row(std::size_t dst, std::size_t src) {
  assert(dst < rows_ && src < rows_);
  std::uint64_t* d = row_ptr(dst);
  const std::uint64_t* s = row_ptr(src);
  for (std::size_t k = 0; k < wpr_; ++k) d[k] ^= s[k];
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::uint64_t* pa = row_ptr(a);
  std::uint64_t* pb = row_ptr(b);
  for (std::size_t k = 0; k < wpr_; ++k) std::swap(pa[k], pb[k]);
}

BitVec BitMatrix::row_vec(std::size_t r) const {
  BitVec v(cols_);
  std::copy(row_ptr(r), row_ptr(r) + wpr_, v.words().begin());
  return v;
}

BitVec BitMatrix::col_vec(std::size_t c) const {
  BitVec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) if (get(r, c)) v.set(r, true);
  return v;
}

void BitMatrix::set_row(std::size_t r, const BitVec& v) {
  if (v.size() != cols_) throw ShapeError("row length mismatch");
  std::copy(v.words().begin(), v.words().end(), row_ptr(r));
}

BitMatrix BitMatrix::transposed() const {
  BitMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (get(r, c)) t.set(c, r, true);
  return t;
}

BitMatrix BitMatrix::mul(const BitMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw ShapeError("dimension mismatch in GF(2) product");
  BitMatrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t* dst = out.row_ptr(r);
    for (std::size_t k = 0; k < cols_; ++k) {
      if (!get(r, k)) continue;
      const std::uint64_t* src = rhs.row_ptr(k);
      for (std::size_t w = 0; w < rhs.wpr_; ++w) dst[w] ^= src[w];
    }
  }
  return out;
}

BitVec BitMatrix::mul_left(const BitVec& v) const {
  if (v.size() != rows_) throw ShapeError("dimension mismatch in vector-matrix product");
  BitVec out(cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (!v.get(r)) continue;
    const std::uint64_t* src = row_ptr(r);
    for (std::size_t w = 0; w < wpr_; ++w) out.words()[w] ^= src[w];
  }
  return out;
}

BitVec BitMatrix::mul_right(const BitVec& v) const {
  if (v.size() != cols_) throw ShapeError("dimension mismatch in matrix-vector product");
  BitVec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    const std::uint64_t* src = row_ptr(r);
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < wpr_; ++w) acc ^= src[w] & v.words()[w];
    if (std::popcount(acc) & 1) out.set(r, true);
  }
  return out;
}

bool BitMatrix::is_zero() const {
  for (std::uint64_t x : data_) if (x) return false;
  return true;
}

bool BitMatrix::padding_clear() const {
  if (!(cols_ & 63)) return true;
  std::uint64_t mask = ~((std::uint64_t(1) << (cols_ & 63)) - 1);
  for (std::size_t r = 0; r < rows_; ++r)
    if (row_ptr(r)[wpr_ - 1] & mask) return false;
  return true;
}

std::string BitMatrix::row_string(std::size_t r) const { return row_vec(r).to_string(); }

RrefResult rref(const BitMatrix& m) {
  RrefResult res{m, 0, {}};
  BitMatrix& a = res.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && !a.get(piv, col)) ++piv;
    if (piv == a.rows()) continue;
    a.swap_rows(row, piv);
    for (std::size_t r = 0; r < a.rows(); ++r)
      if (r != row && a.get(r, col)) a.xor_row(r, row);
    res.pivots.push_back(col);
    ++row;
  }
  res.rank = row;
  return res;
}

BitMatrix kernel_basis(const BitMatrix& m) {
  RrefResult rr = rref(m);
  std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : rr.pivots) is_pivot[c] = true;
  std::vector<BitVec> basis;
  for (std::size_t c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    BitVec v(n);
    v.set(c, true);
    for (std::size_t i = 0; i < rr.rank; ++i)
      if (rr.reduced.get(i, c)) v.set(rr.pivots[i], true);
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return BitMatrix(0, n);
  return BitMatrix::from_rows(basis);
}

RowSpace::RowSpace(const BitMatrix& m) {
  RrefResult rr = rref(m);
  if (rr.rank > kRankGuard) throw EnumerationTooLargeError("row space rank exceeds enumeration guard");
  for (std::size_t i = 0; i < rr.rank; ++i) basis_.push_back(rr.reduced.row_vec(i));
  cur_ = BitVec(m.cols());
}

void RowSpace::reset() {
  cur_ = BitVec(cur_.size());
  idx_ = 0;
  done_ = false;
}

bool RowSpace::next(BitVec& out) {
  if (done_) return false;
  out = cur_;
  ++idx_;
  if (idx_ == size()) {
    done_ = true;
  } else {
    cur_.xor_with(basis_[std::countr_zero(idx_)]);
  }
  return true;
}

std::size_t min_distance(const BitMatrix& m) {
  RowSpace rs(m);
  if (rs.rank() == 0) throw UndefinedDistanceError("row space is trivial");
  std::size_t best = m.cols() + 1;
  BitVec v;
  while (rs.next(v)) {
    if (v.is_zero()) continue;
    best = std::min(best, v.weight());
  }
  return best;
}

bool no_k_columns_dependent(const BitMatrix& m, std::size_t k) {
  if (k > m.cols()) throw InvalidArgumentError("k exceeds column count");
  BitMatrix ker = kernel_basis(m);
  if (ker.rows() == 0) return true;
  return min_distance(ker) > k;
}

bool left_equivalent(const BitMatrix& a, const BitMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("left equivalence requires equal shapes");
  return rref(a).reduced == rref(b).reduced;
}

std::optional<BitVec> solve_row(const BitMatrix& m, const BitVec& target) {
  if (target.size() != m.cols()) throw ShapeError("target length must equal column count");
  // w * M = t  <=>  M^T w^T = t^T; eliminate on [M^T | t].
  std::size_t n = m.cols(), r = m.rows();
  BitMatrix aug(n, r + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < r; ++j)
      if (m.get(j, i)) aug.set(i, j, true);
    if (target.get(i)) aug.set(i, r, true);
  }
  RrefResult rr = rref(aug);
  BitVec w(r);
  for (std::size_t i = 0; i < rr.rank; ++i) {
    if (rr.pivots[i] == r) return std::nullopt;  // pivot in augmented column
    if (rr.reduced.get(i, r)) w.set(rr.pivots[i], true);
  }
  return w;
}

}  // namespace hyp5
