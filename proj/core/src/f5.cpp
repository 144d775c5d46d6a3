#include "hyp5/f5.hpp"

#include <bit>
#include <deque>

#include "hyp5/errors.hpp"

namespace hyp5 {

F5Matrix F5Matrix::identity() {
  F5Matrix m;
  for (int i = 0; i < 5; ++i) m.e[i * 5 + i] = 1;
  return m;
}

F5Matrix F5Matrix::from_rows(const std::array<std::array<int, 5>, 5>& rows) {
  F5Matrix m;
  for (int r = 0; r < 5; ++r)
    for (int c = 0; c < 5; ++c) m.put(r, c, rows[r][c]);
  return m;
}

F5Matrix F5Matrix::mul(const F5Matrix& o) const {
  F5Matrix out;
  for (int r = 0; r < 5; ++r)
    for (int c = 0; c < 5; ++c) {
      int acc = 0;
      for (int k = 0; k < 5; ++k) acc += at(r, k) * o.at(k, c);
      out.e[r * 5 + c] = std::uint8_t(acc % 5);
    }
  return out;
}

F5Matrix F5Matrix::transposed() const {
  F5Matrix out;
  for (int r = 0; r < 5; ++r)
    for (int c = 0; c < 5; ++c) out.e[c * 5 + r] = at(r, c);
  return out;
}

bool F5Matrix::is_identity() const { return *this == identity(); }

std::uint64_t F5Matrix::key() const {
  std::uint64_t k = 0;
  for (int i = 24; i >= 0; --i) k = k * 5 + e[i];
  return k;
}

F5Matrix F5Matrix::from_key(std::uint64_t k) {
  F5Matrix m;
  for (int i = 0; i < 25; ++i) {
    m.e[i] = std::uint8_t(k % 5);
    k /= 5;
  }
  return m;
}

F5Matrix f5_inverse(const F5Matrix& m) {
  // Gauss-Jordan on [m | I].
  int a[5][10] = {};
  for (int r = 0; r < 5; ++r) {
    for (int c = 0; c < 5; ++c) a[r][c] = m.at(r, c);
    a[r][5 + r] = 1;
  }
  constexpr int inv5[5] = {0, 1, 3, 2, 4};
  for (int col = 0; col < 5; ++col) {
    int piv = col;
    while (piv < 5 && a[piv][col] % 5 == 0) ++piv;
    if (piv == 5) throw InvalidArgumentError("singular matrix over F5");
    for (int c = 0; c < 10; ++c) std::swap(a[col][c], a[piv][c]);
    int f = inv5[a[col][col] % 5];
    for (int c = 0; c < 10; ++c) a[col][c] = a[col][c] * f % 5;
    for (int r = 0; r < 5; ++r) {
      if (r == col || a[r][col] % 5 == 0) continue;
      int g = a[r][col] % 5;
      for (int c = 0; c < 10; ++c) a[r][c] = ((a[r][c] - g * a[col][c]) % 5 + 5) % 5;
    }
  }
  F5Matrix out;
  for (int r = 0; r < 5; ++r)
    for (int c = 0; c < 5; ++c) out.put(r, c, a[r][5 + c]);
  return out;
}

std::uint16_t f5vec_key(const F5Vec& v) {
  std::uint16_t k = 0;
  for (int i = 4; i >= 0; --i) k = std::uint16_t(k * 5 + v[i]);
  return k;
}

F5Vec f5vec_from_key(std::uint16_t k) {
  F5Vec v;
  for (int i = 0; i < 5; ++i) {
    v[i] = std::uint8_t(k % 5);
    k /= 5;
  }
  return v;
}

F5Vec f5_apply(const F5Matrix& m, const F5Vec& v) {
  F5Vec out;
  for (int r = 0; r < 5; ++r) {
    int acc = 0;
    for (int c = 0; c < 5; ++c) acc += m.at(r, c) * v[c];
    out[r] = std::uint8_t(acc % 5);
  }
  return out;
}

int f5_form(const F5Matrix& K, const F5Vec& v, const F5Vec& w) {
  int acc = 0;
  for (int r = 0; r < 5; ++r)
    for (int c = 0; c < 5; ++c) acc += v[r] * K.at(r, c) * w[c];
  return acc % 5;
}

F5Matrix f5_scalar_mul(int s, const F5Matrix& m) {
  F5Matrix out;
  for (int r = 0; r < 5; ++r)
    for (int c = 0; c < 5; ++c) out.put(r, c, s * m.at(r, c));
  return out;
}

F5Matrix reduce_mod_phi_minus_3(const GoldenMatrix& m) {
  if (m.size() != 5) throw ShapeError("reduction expects a 5x5 matrix");
  for (const auto& row : m)
    if (row.size() != 5) throw ShapeError("reduction expects a 5x5 matrix");
  F5Matrix out;
  for (int r = 0; r < 5; ++r)
    for (int c = 0; c < 5; ++c) {
      long long v = (m[r][c].a + 3 * m[r][c].b) % 5;
      out.put(r, c, int(v));
    }
  return out;
}

namespace {
std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}
constexpr std::uint64_t kEmpty = ~std::uint64_t(0);
}  // namespace

F5Closure::F5Closure(std::vector<F5Matrix> gens, std::size_t max_size) : gens_(std::move(gens)) {
  std::size_t cap = 16;
  while (cap < 2 * max_size + 2) cap <<= 1;
  table_.assign(cap, kEmpty);
  mask_ = cap - 1;

  insert(F5Matrix::identity().key());
  elems_.push_back(F5Matrix::identity().key());
  std::size_t head = 0;
  while (head < elems_.size()) {
    F5Matrix cur = F5Matrix::from_key(elems_[head++]);
    for (const F5Matrix& g : gens_) {
      std::uint64_t k = cur.mul(g).key();
      if (insert(k)) {
        elems_.push_back(k);
        if (elems_.size() > max_size)
          throw EnumerationOverflowError("group closure exceeds max_size");
      }
    }
  }
}

std::size_t F5Closure::slot(std::uint64_t k) const {
  std::size_t s = splitmix64(k) & mask_;
  while (table_[s] != kEmpty && table_[s] != k) s = (s + 1) & mask_;
  return s;
}

bool F5Closure::insert(std::uint64_t k) {
  std::size_t s = slot(k);
  if (table_[s] == k) return false;
  table_[s] = k;
  return true;
}

bool F5Closure::contains(const F5Matrix& m) const { return table_[slot(m.key())] != kEmpty; }

std::vector<F5Vec> F5Closure::orbit(const F5Vec& v) const {
  std::vector<bool> seen(3125, false);
  std::vector<F5Vec> out{v};
  seen[f5vec_key(v)] = true;
  for (std::size_t head = 0; head < out.size(); ++head) {
    F5Vec cur = out[head];
    for (const F5Matrix& g : gens_) {
      F5Vec img = f5_apply(g, cur);
      std::uint16_t k = f5vec_key(img);
      if (!seen[k]) {
        seen[k] = true;
        out.push_back(img);
      }
    }
  }
  return out;
}

std::size_t F5Closure::stabilizer_order(const F5Vec& v) const {
  std::size_t orb = orbit(v).size();
  if (order() % orb != 0) throw ConstructionMismatchError("orbit size does not divide group order");
  return order() / orb;
}

F5Matrix congruent_to_K(const F5Matrix& S) {
  constexpr int inv5[5] = {0, 1, 3, 2, 4};
  int a[5][5];
  for (int r = 0; r < 5; ++r)
    for (int c = 0; c < 5; ++c) a[r][c] = S.at(r, c);
  F5Matrix T = F5Matrix::identity();

  auto col_addmul = [&](int dst, int src, int f) {
    // basis change b_dst += f * b_src: col/row updates on a, column on T
    for (int r = 0; r < 5; ++r) a[r][dst] = (a[r][dst] + f * a[r][src]) % 5;
    for (int c = 0; c < 5; ++c) a[dst][c] = (a[dst][c] + f * a[src][c]) % 5;
    for (int r = 0; r < 5; ++r) T.put(r, dst, T.at(r, dst) + f * T.at(r, src));
  };
  auto col_swap = [&](int i, int j) {
    for (int r = 0; r < 5; ++r) std::swap(a[r][i], a[r][j]);
    for (int c = 0; c < 5; ++c) std::swap(a[i][c], a[j][c]);
    for (int r = 0; r < 5; ++r) {
      int t = T.at(r, i);
      T.put(r, i, T.at(r, j));
      T.put(r, j, t);
    }
  };
  auto col_scale = [&](int i, int s) {
    for (int r = 0; r < 5; ++r) a[r][i] = a[r][i] * s % 5;
    for (int c = 0; c < 5; ++c) a[i][c] = a[i][c] * s % 5;
    for (int r = 0; r < 5; ++r) T.put(r, i, T.at(r, i) * s);
  };

  for (int i = 0; i < 5; ++i) {
    if (a[i][i] % 5 == 0) {
      int j = i + 1;
      while (j < 5 && a[j][j] % 5 == 0) ++j;
      if (j < 5) {
        col_swap(i, j);
      } else {
        j = i + 1;
        while (j < 5 && a[i][j] % 5 == 0) ++j;
        if (j == 5) throw ConstructionMismatchError("degenerate symmetric form");
        col_addmul(i, j, 1);  // diagonal becomes 2 * a_ij != 0
      }
    }
    int d = ((a[i][i] % 5) + 5) % 5;
    for (int j = i + 1; j < 5; ++j) {
      int f = ((a[i][j] % 5) + 5) % 5;
      if (f) col_addmul(j, i, 5 - f * inv5[d] % 5);
    }
  }

  // Scale squares to 1 and non-squares to 3 (2*4 = 8 = 3 mod 5).
  int threes = 0;
  for (int i = 0; i < 5; ++i) {
    int d = ((a[i][i] % 5) + 5) % 5;
    if (d == 0) throw ConstructionMismatchError("degenerate symmetric form");
    if (d == 4) col_scale(i, 2);
    if (d == 2) col_scale(i, 2);
    d = ((a[i][i] % 5) + 5) % 5;
    if (d == 3) ++threes;
  }
  if (threes % 2 == 0)
    throw ConstructionMismatchError("discriminant class is a square; not congruent to K");
  // Fold pairs of 3s into 1s: on diag(3,3), (b_p + b_q, b_p - b_q) has Gram diag(1,1).
  while (threes > 1) {
    int p = -1, q = -1;
    for (int i = 0; i < 5 && q < 0; ++i)
      if (a[i][i] % 5 == 3) (p < 0 ? p : q) = i;
    for (int r = 0; r < 5; ++r) {
      int tp = T.at(r, p), tq = T.at(r, q);
      T.put(r, p, tp + tq);
      T.put(r, q, tp - tq);
    }
    a[p][p] = a[q][q] = 1;
    a[p][q] = a[q][p] = 0;
    threes -= 2;
  }
  for (int i = 0; i < 5; ++i)
    if (a[i][i] % 5 == 3 && i != 4) col_swap(i, 4);

  // Exact verification of T^T S T = diag(1,1,1,1,3).
  F5Matrix got = T.transposed().mul(S).mul(T);
  F5Matrix K;
  for (int i = 0; i < 4; ++i) K.put(i, i, 1);
  K.put(4, 4, 3);
  if (!(got == K)) throw ConstructionMismatchError("congruence normalization failed");
  return T;
}

}  // namespace hyp5
