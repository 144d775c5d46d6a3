#include <doctest.h>

#include <bit>

#include "hyp5/codes17.hpp"

using namespace hyp5;

TEST_CASE("table invariants hold bit-for-bit") {
  const QrCodeTables& t = qr_tables();
  CHECK(t.A.rows() == 9);
  CHECK(t.A.cols() == 17);
  CHECK(t.B.rows() == 8);
  CHECK(t.R.rows() == 9);
  CHECK(t.R.cols() == 9);
  CHECK(t.w.size() == 9);
  CHECK(fnv1a_rows(t.A) == 0xdf4b8b3e9436c3a6ULL);
  CHECK(fnv1a_rows(t.B) == 0x2c772b1da9130a35ULL);
  CHECK(t.A.mul(t.B.transposed()).is_zero());
  CHECK(t.B.mul(t.A.transposed()).is_zero());
  for (std::size_t i = 0; i < 17; ++i)
    CHECK(t.R.mul_right(t.A.col_vec(i)) == t.A.col_vec((i + 1) % 17));
  CHECK(t.A.mul_left(t.w) == BitVec::ones(17));
}

TEST_CASE("type classification") {
  CHECK(classify_type(1) == TypeSign::Plus);
  CHECK(classify_type(13) == TypeSign::Plus);   // 13 = -4 mod 17
  CHECK(classify_type(3) == TypeSign::Minus);
  CHECK_THROWS_AS(classify_type(17), InvalidArgumentError);
  CHECK_THROWS_AS(classify_type(0), InvalidArgumentError);
  for (int k = 1; k <= 16; ++k) CHECK(classify_type(k) == classify_type(17 - k));
}

TEST_CASE("shifted family and its two left-equivalence classes") {
  CHECK(build_shifted_family(1) == qr_tables().A);
  CHECK(left_equivalent(build_shifted_family(2), build_shifted_family(8)));
  CHECK_FALSE(left_equivalent(build_shifted_family(2), build_shifted_family(3)));
  CHECK_THROWS_AS(build_shifted_family(34), InvalidArgumentError);

  // Classes coincide with the type partition across all units.
  for (int k = 1; k <= 16; ++k)
    for (int h = 1; h <= 16; ++h) {
      bool same_type = classify_type(k) == classify_type(h);
      CHECK(left_equivalent(build_shifted_family(k), build_shifted_family(h)) == same_type);
    }
}

TEST_CASE("length-13 code search is deterministic and certified") {
  Code13Result c = find_code_13_4_6();
  CHECK(c.generator.rows() == 4);
  CHECK(c.generator.cols() == 13);
  CHECK(rref(c.generator).rank == 4);
  CHECK(min_distance(c.generator) == 6);
  // Frozen first lexicographic hit over systematic [I4 | X].
  CHECK(c.generator.row_string(0) == "1000000011111");
  CHECK(c.generator.row_string(1) == "0100001100111");
  CHECK(c.generator.row_string(2) == "0010010101011");
  CHECK(c.generator.row_string(3) == "0001011010101");

  CHECK(c.dual.rows() == 9);
  CHECK(c.dual.cols() == 13);
  CHECK(c.generator.mul(c.dual.transposed()).is_zero());

  // Exhaustive 5-subset independence over the dual's 13 columns.
  std::vector<BitVec> cols;
  for (std::size_t j = 0; j < 13; ++j) cols.push_back(c.dual.col_vec(j));
  for (unsigned mask = 1; mask < (1u << 13); ++mask) {
    if (std::popcount(mask) > 5) continue;
    BitVec acc(9);
    for (int j = 0; j < 13; ++j)
      if (mask >> j & 1) acc.xor_with(cols[j]);
    CHECK_FALSE(acc.is_zero());
  }
}
