#include "hyp5/codes17.hpp"

#include <array>
#include <bit>

#include "hyp5/errors.hpp"

namespace hyp5 {

namespace {

const std::vector<std::string> kA = {
    "11101011100000000", "01110101110000000", "00111010111000000",
    "00011101011100000", "00001110101110000", "00000111010111000",
    "00000011101011100", "00000001110101110", "00000000111010111"};

const std::vector<std::string> kB = {
    "11010010110000000", "01101001011000000", "00110100101100000",
    "00011010010110000", "00001101001011000", "00000110100101100",
    "00000011010010110", "00000001101001011"};

const std::vector<std::string> kR = {
    "101001011", "100000000", "010000000", "001000000", "000100000",
    "000010000", "000001000", "000000100", "000000010"};

const std::string kW = "100111001";

constexpr std::uint64_t kChecksumA = 0xdf4b8b3e9436c3a6ULL;
constexpr std::uint64_t kChecksumB = 0x2c772b1da9130a35ULL;
constexpr std::uint64_t kChecksumR = 0x136e71015916fdfaULL;
constexpr std::uint64_t kChecksumW = 0x5eee3d4ddc23052eULL;

std::uint64_t fnv1a(std::uint64_t h, const std::string& s) {
  for (char ch : s) {
    h ^= std::uint8_t(ch);
    h *= 0x100000001b3ULL;
  }
  return h;
}

QrCodeTables build_tables() {
  QrCodeTables t{BitMatrix::from_strings(kA), BitMatrix::from_strings(kB),
                 BitMatrix::from_strings(kR), BitVec::from_string(kW)};
  if (fnv1a_rows(t.A) != kChecksumA || fnv1a_rows(t.B) != kChecksumB ||
      fnv1a_rows(t.R) != kChecksumR ||
      fnv1a(0xcbf29ce484222325ULL, kW + "\n") != kChecksumW)
    throw ConstructionMismatchError("qr table checksum mismatch");
  if (!t.A.mul(t.B.transposed()).is_zero() || !t.B.mul(t.A.transposed()).is_zero())
    throw ConstructionMismatchError("A B^T duality violated");
  for (std::size_t i = 0; i < 17; ++i)
    if (t.R.mul_right(t.A.col_vec(i)) != t.A.col_vec((i + 1) % 17))
      throw ConstructionMismatchError("R does not shift the columns of A");
  if (t.A.mul_left(t.w) != BitVec::ones(17))
    throw ConstructionMismatchError("w A != u_17");
  return t;
}

}  // namespace

std::uint64_t fnv1a_rows(const BitMatrix& m) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::size_t r = 0; r < m.rows(); ++r) h = fnv1a(h, m.row_string(r) + "\n");
  return h;
}

const QrCodeTables& qr_tables() {
  static const QrCodeTables t = build_tables();
  return t;
}

TypeSign classify_type(int k) {
  int r = k % 17;
  if (r < 0) r += 17;
  if (r == 0) throw InvalidArgumentError("k must be a unit mod 17");
  // Squares mod 17.
  constexpr std::array<int, 8> sq = {1, 2, 4, 8, 9, 13, 15, 16};
  for (int s : sq)
    if (r == s) return TypeSign::Plus;
  return TypeSign::Minus;
}

BitMatrix build_shifted_family(int k) {
  int r = k % 17;
  if (r < 0) r += 17;
  if (r == 0) throw InvalidArgumentError("k must be a unit mod 17");
  int kinv = 1;
  while ((kinv * r) % 17 != 1) ++kinv;
  const BitMatrix& A = qr_tables().A;
  BitMatrix out(9, 17);
  for (int j = 0; j < 17; ++j) {
    BitVec col = A.col_vec((std::size_t(kinv) * j) % 17);
    for (std::size_t i = 0; i < 9; ++i)
      if (col.get(i)) out.set(i, j, true);
  }
  return out;
}

Code13Result find_code_13_4_6() {
  // DFS over X rows as 9-bit values in ascending (row-major lexicographic)
  // order. Constraints touching only chosen rows are final, so pruning keeps
  // the first complete hit lexicographically minimal.
  std::array<int, 4> x{};
  auto viable = [&](int depth) {
    for (unsigned u = 1; u < (1u << (depth + 1)); ++u) {
      if (!(u >> depth & 1)) continue;  // combos without the new row were checked
      int acc = 0;
      for (int i = 0; i <= depth; ++i)
        if (u >> i & 1) acc ^= x[i];
      if (std::popcount(u) + std::popcount(unsigned(acc)) < 6) return false;
    }
    return true;
  };
  auto dfs = [&](auto&& self, int depth) -> bool {
    if (depth == 4) return true;
    for (int v = 0; v < 512; ++v) {
      x[depth] = v;
      if (viable(depth) && self(self, depth + 1)) return true;
    }
    return false;
  };
  if (!dfs(dfs, 0)) throw ConstructionMismatchError("no [13,4,6] systematic code found");

  BitMatrix gen(4, 13);
  for (std::size_t i = 0; i < 4; ++i) {
    gen.set(i, i, true);
    for (int b = 0; b < 9; ++b)
      if (x[i] >> b & 1) gen.set(i, 4 + (8 - b), true);  // MSB-first layout
  }
  if (min_distance(gen) < 6) throw ConstructionMismatchError("generator distance below 6");
  BitMatrix dual = kernel_basis(gen);
  if (dual.rows() != 9 || !no_k_columns_dependent(dual, 5))
    throw ConstructionMismatchError("dual code misses the 5-column independence");
  return {std::move(gen), std::move(dual)};
}

}  // namespace hyp5
