#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "hyp5/codes17.hpp"
#include "hyp5/coloring.hpp"
#include "hyp5/errors.hpp"
#include "hyp5/f5graph.hpp"
#include "hyp5/goodsets.hpp"
#include "hyp5/long_graph.hpp"

using namespace hyp5;

namespace {

const LongGraphBundle& long_bundle() {
  static LongGraphBundle b = build_long_graph();
  return b;
}

const std::vector<std::vector<int>>& sampled_sets() {
  static std::vector<std::vector<int>> s =
      sample_good_sets(long_bundle().graph, long_bundle().psi, 3, 0x70121CULL);
  return s;
}

Coloring validated_qr(const std::vector<int>& good, int k) {
  Coloring c = qr_coloring(long_bundle().graph, long_bundle().psi, good, k);
  ValidationReport r = validate_coloring(long_bundle().graph, c);
  REQUIRE(r.valid);
  return c;
}

// Independent 13-column coloring of the quadric graph: class i of the proper
// 13-coloring gets column i of the [13,4,6] dual. Any 5 dual columns are
// independent, so distinct classes on every clique suffice.
Coloring dual_code_coloring(const F5GraphBundle& fb, const SpectralReport& sp) {
  Code13Result code = find_code_13_4_6();
  Coloring c;
  c.m = 9;
  c.lambda = BitMatrix(9, std::size_t(fb.graph.n));
  for (int v = 0; v < fb.graph.n; ++v) {
    BitVec col = code.dual.col_vec(std::size_t(sp.coloring[std::size_t(v)]));
    for (std::size_t r = 0; r < 9; ++r)
      if (col.get(r)) c.lambda.set(r, std::size_t(v), true);
  }
  return c;
}

}  // namespace

TEST_CASE("validate_coloring finds the first violation with a witness") {
  FacetGraph g(2);
  g.add_edge(0, 1);

  Coloring same;
  same.m = 2;
  same.lambda = BitMatrix::from_strings({"11", "00"});
  ValidationReport r = validate_coloring(g, same);
  CHECK(!r.valid);
  CHECK(r.violating_clique == std::vector<int>{0, 1});  // equal colors on an edge
  CHECK(same.validated_bound == -1);

  Coloring zero;
  zero.m = 2;
  zero.lambda = BitMatrix::from_strings({"10", "00"});
  r = validate_coloring(g, zero);
  CHECK(!r.valid);
  CHECK(r.violating_clique == std::vector<int>{1});  // zero color is a singleton violation

  Coloring ok;
  ok.m = 2;
  ok.lambda = BitMatrix::from_strings({"10", "01"});
  r = validate_coloring(g, ok);
  CHECK(r.valid);
  CHECK(ok.validated_bound == 5);
  // monotone caching: a lower bound never downgrades the stamp
  validate_coloring(g, ok, 2);
  CHECK(ok.validated_bound == 5);

  Coloring wrong_shape;
  wrong_shape.m = 2;
  wrong_shape.lambda = BitMatrix(2, 3);
  CHECK_THROWS_AS(validate_coloring(g, wrong_shape), ShapeError);
  Coloring too_wide;
  too_wide.m = 65;
  too_wide.lambda = BitMatrix(65, 2);
  CHECK_THROWS_AS(validate_coloring(g, too_wide), InvalidArgumentError);
}

TEST_CASE("basis coloring: partition into 17 basis classes of 16") {
  const auto& b = long_bundle();
  const auto& I = sampled_sets()[0];
  Coloring c = basis_coloring(b.graph, b.psi, I);
  CHECK(c.m == 17);
  CHECK(c.facets() == 272);

  ValidationReport r = validate_coloring(b.graph, c);
  CHECK(r.valid);
  SUBCASE("monotone in the clique bound") {
    for (int bound = 1; bound <= 5; ++bound) CHECK(validate_coloring(b.graph, c, bound).valid);
  }

  int used[17] = {};
  for (int v = 0; v < 272; ++v) {
    BitVec col = c.color(v);
    CHECK(col.weight() == 1);  // basis vectors only
    for (int j = 0; j < 17; ++j)
      if (col.get(std::size_t(j))) ++used[j];
  }
  for (int j = 0; j < 17; ++j) CHECK(used[j] == 16);  // 272 = 17 * 16

  CHECK(rref(c.lambda).rank == 17);  // row space has 2^17 words

  // each single-row word induces one psi-translate of I: 16 isolated vertices
  for (std::uint64_t comps : row_component_counts(b.graph, c)) CHECK(comps == 16);

  // bad inputs: ruin the set by duplicating an orbit
  std::vector<int> bad = I;
  bad[0] = b.psi.apply(bad[1], 1);
  CHECK_THROWS_AS(basis_coloring(b.graph, b.psi, bad), InvalidArgumentError);
}

TEST_CASE("qr coloring: shifted-family columns, 16 facets each") {
  const auto& b = long_bundle();
  const auto& I = sampled_sets()[0];
  Coloring c = validated_qr(I, 1);
  CHECK(c.m == 9);
  CHECK(c.shift == 1);

  BitMatrix fam = build_shifted_family(1);
  for (std::size_t t = 0; t < 17; ++t) {
    BitVec want = fam.col_vec(t);
    int count = 0;
    for (int v = 0; v < 272; ++v)
      if (c.color(v) == want) ++count;
    CHECK(count == 16);
  }

  // the two equivalence classes of characteristic matrices: square shifts
  // match each other, square vs non-square do not
  Coloring c2 = validated_qr(I, 2);
  Coloring c3 = validated_qr(I, 3);
  Coloring c8 = validated_qr(I, 8);
  CHECK(left_equivalent(c2.lambda, c8.lambda));
  CHECK(!left_equivalent(c.lambda, c3.lambda));
  CHECK(classify_type(2) == classify_type(8));
  CHECK(classify_type(1) != classify_type(3));

  CHECK_THROWS_AS(qr_coloring(b.graph, b.psi, I, 17), InvalidArgumentError);
  CHECK_THROWS_AS(qr_coloring(b.graph, b.psi, I, 0), InvalidArgumentError);
  std::vector<int> bad = I;
  bad[0] = b.psi.apply(bad[1], 1);
  CHECK_THROWS_AS(qr_coloring(b.graph, b.psi, bad, 1), InvalidArgumentError);

  // order-2 synthetic action is rejected
  FacetGraph h(2);
  FreeCyclicAction swap2{{1, 0}, 2};
  CHECK_THROWS_AS(qr_coloring(h, swap2, {0}, 1), InvalidArgumentError);
}

TEST_CASE("orientability witnesses") {
  const auto& b = long_bundle();
  const auto& I = sampled_sets()[0];

  Coloring bc = basis_coloring(b.graph, b.psi, I);
  auto wb = orientability_witness(bc);
  REQUIRE(wb.has_value());
  CHECK(*wb == BitVec::ones(17));  // every basis vector has one 1
  CHECK(bc.lambda.mul_left(*wb) == BitVec::ones(272));

  for (int k : {1, 3}) {
    Coloring qc = qr_coloring(b.graph, b.psi, I, k);
    auto w = orientability_witness(qc);
    REQUIRE(w.has_value());
    CHECK(qc.lambda.mul_left(*w) == BitVec::ones(272));
    // the tables witness w A = u_17 works for every QR coloring
    const BitVec& tw = qr_tables().w;
    CHECK(qc.lambda.mul_left(tw) == BitVec::ones(272));
  }

  // infeasible system: colors (1,0), (0,1), (1,1) force w1 = w2 = 1 and
  // w1 + w2 = 1 at once
  Coloring none;
  none.m = 2;
  none.lambda = BitMatrix::from_strings({"101", "011"});
  CHECK(!orientability_witness(none).has_value());
}

TEST_CASE("first betti number via the row-space component sum") {
  // single edge with the identity coloring: supports {1}, {2}, {1,2} are all
  // connected
  FacetGraph e2(2);
  e2.add_edge(0, 1);
  Coloring id2;
  id2.m = 2;
  id2.lambda = BitMatrix::identity(2);
  REQUIRE(validate_coloring(e2, id2).valid);
  CHECK(first_betti(e2, id2) == 0);

  // path 0-1-2-3 colored (1,0),(0,1),(1,0),(0,1): words (1,0) and (0,1)
  // induce two isolated vertices each, (1,1) induces the whole path
  FacetGraph p4(4);
  p4.add_edge(0, 1);
  p4.add_edge(1, 2);
  p4.add_edge(2, 3);
  Coloring alt;
  alt.m = 2;
  alt.lambda = BitMatrix::from_strings({"1010", "0101"});
  REQUIRE(validate_coloring(p4, alt).valid);
  CHECK(first_betti(p4, alt) == 2);

  // invariance under invertible recoloring: T = [[1,1],[0,1]] changes the
  // matrix but not the row space
  Coloring recolored;
  recolored.m = 2;
  recolored.lambda = BitMatrix::from_strings({"11", "01"}).mul(alt.lambda);
  CHECK(left_equivalent(recolored.lambda, alt.lambda));
  REQUIRE(validate_coloring(p4, recolored).valid);
  CHECK(first_betti(p4, recolored) == 2);

  // refuses to run before a full validation pass
  Coloring fresh;
  fresh.m = 2;
  fresh.lambda = BitMatrix::identity(2);
  CHECK_THROWS_AS(first_betti(e2, fresh), InvalidArgumentError);
  validate_coloring(e2, fresh, 3);
  CHECK_THROWS_AS(first_betti(e2, fresh), InvalidArgumentError);
}

TEST_CASE("sampled QR colorings have vanishing first betti number") {
  const auto& b = long_bundle();
  for (const auto& I : sampled_sets()) {
    for (int k : {1, 3}) {  // one representative per type
      Coloring c = validated_qr(I, k);
      CHECK(first_betti(b.graph, c) == 0);
      CHECK(min_support_weight(c) == 80);  // 5 * 16: code distance times orbit size
    }
  }
  // equivalence-class invariance on one sample
  Coloring c2 = validated_qr(sampled_sets()[0], 2);
  Coloring c8 = validated_qr(sampled_sets()[0], 8);
  CHECK(first_betti(b.graph, c2) == first_betti(b.graph, c8));
}

TEST_CASE("quotient compatibility with the cyclic recoloring") {
  const auto& b = long_bundle();
  const auto& I = sampled_sets()[0];
  const BitMatrix& R = qr_tables().R;

  for (int k : {1, 2, 3}) {
    Coloring c = qr_coloring(b.graph, b.psi, I, k);
    CHECK(quotient_compatibility(c, b.psi, R));  // R A_j = A_{j+1} makes every shift work
  }

  Coloring c1 = qr_coloring(b.graph, b.psi, I, 1);
  BitMatrix bad = R;
  bad.set(0, 0, !bad.get(0, 0));
  CHECK(!quotient_compatibility(c1, b.psi, bad));

  Coloring bc = basis_coloring(b.graph, b.psi, I);
  CHECK(!quotient_compatibility(bc, b.psi, R));  // 17-dimensional colors vs 9x9 R
}

TEST_CASE("manifold ledgers reproduce the exact counts") {
  const auto& b = long_bundle();
  const auto& I = sampled_sets()[0];
  const BitMatrix& R = qr_tables().R;

  Coloring bc = basis_coloring(b.graph, b.psi, I);
  ManifoldLedger big = ledger(b.graph, bc, 272, 14400);
  CHECK(big.copies == 131072);
  CHECK(big.blocks == 131072ULL * 272);
  CHECK(big.prisms == 513382809600ULL);
  CHECK(big.orientable);
  CHECK(big.volume.error_bound < 1.0);

  Coloring qc = qr_coloring(b.graph, b.psi, I, 1);
  ManifoldLedger mid = ledger(b.graph, qc, 272, 14400);
  CHECK(mid.copies == 512);
  CHECK(mid.prisms == 2005401600ULL);

  ManifoldLedger quo = ledger(b.graph, qc, 272, 14400, 17, &b.psi, &R);
  CHECK(quo.copies == 512);
  CHECK(quo.blocks == 8192);  // copies of the quotient piece
  CHECK(quo.prisms == 117964800ULL);
  CHECK(quo.orientable);
  CHECK(std::abs(quo.volume.value - 234124.317462427649) < 1e-3);

  // failure modes
  CHECK_THROWS_AS(ledger(b.graph, qc, 272, 14400, 17), ConstructionMismatchError);
  CHECK_THROWS_AS(ledger(b.graph, qc, 272, 14400, 17, &b.psi, nullptr),
                  ConstructionMismatchError);
  BitMatrix bad = R;
  bad.set(0, 0, !bad.get(0, 0));
  CHECK_THROWS_AS(ledger(b.graph, qc, 272, 14400, 17, &b.psi, &bad),
                  ConstructionMismatchError);
  CHECK_THROWS_AS(ledger(b.graph, bc, 272, 14400, 17, &b.psi, &R), ConstructionMismatchError);
  CHECK_THROWS_AS(ledger(b.graph, qc, 272, 14400, 5, &b.psi, &R), ConstructionMismatchError);
  CHECK_THROWS_AS(ledger(b.graph, qc, 271, 14400), InvalidArgumentError);
  CHECK_THROWS_AS(ledger(b.graph, qc, 272, 0), InvalidArgumentError);
  CHECK_THROWS_AS(ledger(b.graph, qc, 272, 14400, 0), InvalidArgumentError);
}

TEST_CASE("quadric-graph family: dual-code coloring and its ledger") {
  static F5GraphBundle fb = build_f5_graph();
  static LAnalysis la = l_subgroup_analysis(fb);
  static SpectralReport sp = spectral_certificate(fb, la);

  Coloring c = dual_code_coloring(fb, sp);
  ValidationReport r = validate_coloring(fb.graph, c);
  CHECK(r.valid);
  CHECK(c.validated_bound == 5);

  ManifoldLedger led = ledger(fb.graph, c, 650, 14400);
  CHECK(led.copies == 512);
  CHECK(led.blocks == 512ULL * 650);
  CHECK(led.prisms == 4792320000ULL);
  CHECK(led.orientable);
  CHECK(std::abs(led.volume.value - 9511300.396911) < 1e-2);

  // recoloring by the invertible R preserves validity and the witness
  Coloring rec;
  rec.m = 9;
  rec.lambda = qr_tables().R.mul(c.lambda);
  CHECK(validate_coloring(fb.graph, rec).valid);
  CHECK(orientability_witness(rec).has_value() == orientability_witness(c).has_value());
}
