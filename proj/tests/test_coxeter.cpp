#include <doctest.h>

#include <random>
#include <sstream>

#include "hyp5/diagram.hpp"
#include "hyp5/errors.hpp"
#include "hyp5/f5.hpp"
#include "hyp5/f5_fixtures.hpp"
#include "hyp5/golden.hpp"

using namespace hyp5;

namespace {
int f5_order(const F5Matrix& m, int cap = 64) {
  F5Matrix p = m;
  for (int k = 1; k <= cap; ++k) {
    if (p.is_identity()) return k;
    p = p.mul(m);
  }
  return -1;
}

const CoxeterDiagram kG = CoxeterDiagram::path({5, 3, 3, 3});
const CoxeterDiagram kGamma = CoxeterDiagram::path({5, 3, 3, 3, 4, 0});
const CoxeterDiagram kSigma = CoxeterDiagram::path({5, 3, 3});
}  // namespace

TEST_CASE("golden integers form a ring with phi^2 = phi + 1") {
  GoldenInt phi = GoldenInt::phi();
  CHECK(phi * phi == GoldenInt{1, 1});
  std::mt19937_64 rng(0x5eed1001);
  for (int t = 0; t < 200; ++t) {
    auto r = [&] { return GoldenInt{(long long)(rng() % 21) - 10, (long long)(rng() % 21) - 10}; };
    GoldenInt x = r(), y = r(), z = r();
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x * y == y * x);
  }
}

TEST_CASE("bilinear form entries and exact-mode label guard") {
  GoldenMatrix B = bilinear_form_2B(kG);
  CHECK(B[0][0] == GoldenInt{2, 0});
  CHECK(B[0][1] == GoldenInt{0, -1});  // -phi on the 5-edge
  CHECK(B[1][2] == GoldenInt{-1, 0});
  CHECK(B[0][2] == GoldenInt{0, 0});
  CHECK(bilinear_form_2B(CoxeterDiagram::path({}))[0][0] == GoldenInt{2, 0});
  CHECK_THROWS_AS(bilinear_form_2B(kGamma), UnsupportedLabelError);
  CHECK_THROWS_AS(bilinear_form_2B(CoxeterDiagram::path({4})), UnsupportedLabelError);
}

TEST_CASE("signatures of the three diagrams") {
  CHECK(signature(kGamma) == Signature{6, 1, 0});
  CHECK(signature(kG) == Signature{4, 1, 0});
  CHECK(signature(kSigma) == Signature{4, 0, 0});
  CHECK(signature(CoxeterDiagram::path({})) == Signature{1, 0, 0});
  // Affine pair: exact zero eigenvalue.
  CHECK(signature(CoxeterDiagram::path({0})) == Signature{1, 0, 1});
  // A small positive eigenvalue inside the unresolved band trips the guard.
  CHECK_THROWS_AS(signature(kSigma, 1e-3), IndeterminateSignatureError);
}

TEST_CASE("diagram edge-list round trip") {
  std::stringstream ss;
  kGamma.write_edge_list(ss);
  CoxeterDiagram back = CoxeterDiagram::parse_edge_list(ss);
  CHECK(back.n == kGamma.n);
  CHECK(back.m == kGamma.m);
  std::stringstream bad("1 1 3\n");
  CHECK_THROWS_AS(CoxeterDiagram::parse_edge_list(bad), IoError);
}

TEST_CASE("reflection generators: involutions, edge orders, form preservation") {
  GoldenMatrix B = bilinear_form_2B(kG);
  auto gens = reflection_generators(kG);
  REQUIRE(gens.size() == 5);
  for (const auto& g : gens) {
    CHECK(matrix_order(g) == 2);
    CHECK(gmul(gmul(gtranspose(g), B), g) == B);
  }
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      CHECK(matrix_order(gmul(gens[i], gens[j])) == kG.m[i][j]);
}

TEST_CASE("reduction mod (phi - 3) is a ring homomorphism into F5") {
  GoldenMatrix m = golden_identity(5);
  m[0][0] = GoldenInt::phi();                    // phi -> 3
  m[1][1] = GoldenInt::phi() * GoldenInt::phi(); // phi^2 -> 4 = 3 + 1
  m[2][3] = GoldenInt{-1, 0};                    // -1 -> 4
  F5Matrix r = reduce_mod_phi_minus_3(m);
  CHECK(r.at(0, 0) == 3);
  CHECK(r.at(1, 1) == 4);
  CHECK(r.at(2, 3) == 4);

  // Reduction commutes with products on random golden matrices.
  std::mt19937_64 rng(0x5eed1002);
  for (int t = 0; t < 50; ++t) {
    GoldenMatrix a(5, std::vector<GoldenInt>(5)), b = a;
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) {
        a[i][j] = {(long long)(rng() % 9) - 4, (long long)(rng() % 9) - 4};
        b[i][j] = {(long long)(rng() % 9) - 4, (long long)(rng() % 9) - 4};
      }
    CHECK(reduce_mod_phi_minus_3(gmul(a, b)) ==
          reduce_mod_phi_minus_3(a).mul(reduce_mod_phi_minus_3(b)));
  }
}

TEST_CASE("F5 matrix basics") {
  const F5Fixtures& f = f5_fixtures();
  CHECK(F5Matrix::from_key(f.L1.key()) == f.L1);
  CHECK(f5_inverse(f.L1).mul(f.L1).is_identity());
  CHECK(f5_inverse(F5Matrix::identity()).is_identity());
  F5Matrix sing;  // zero matrix
  CHECK_THROWS_AS(f5_inverse(sing), InvalidArgumentError);

  F5Vec v0{0, 0, 0, 0, 1};
  CHECK(f5vec_from_key(f5vec_key(v0)) == v0);
  CHECK(f5_form(f.K, v0, v0) == 3);
}

TEST_CASE("printed generators satisfy the Coxeter orders of [5,3,3,3]") {
  const F5Fixtures& f = f5_fixtures();
  const F5Matrix* g[5] = {&f.alpha, &f.beta, &f.gamma, &f.delta, &f.eps};
  for (int i = 0; i < 5; ++i) CHECK(f5_order(*g[i]) == 2);
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      CHECK(f5_order(g[i]->mul(*g[j])) == kG.m[i][j]);
}

TEST_CASE("closures: Sigma image has order 14400, L has order 125") {
  const F5Fixtures& f = f5_fixtures();
  F5Closure sigma({f.alpha, f.beta, f.gamma, f.delta}, 20000);
  CHECK(sigma.order() == 14400);
  F5Vec v0{0, 0, 0, 0, 1};
  CHECK(sigma.orbit(v0).size() == 1);  // Sigma stabilizes v0

  F5Closure L({f.L1, f.L2}, 200);
  CHECK(L.order() == 125);
  CHECK(L.orbit(v0).size() == 25);
  CHECK(L.stabilizer_order(v0) == 5);

  CHECK_THROWS_AS(F5Closure({f.L1, f.L2}, 100), EnumerationOverflowError);
}

TEST_CASE("diagram reduction matches the printed group's form up to congruence") {
  auto gens = reflection_generators(kG);
  // The generators preserve every scalar multiple of 2B; the multiple in the
  // discriminant class of K is 3 * reduce(2B) (= the reduction of B itself).
  F5Matrix S = f5_scalar_mul(3, reduce_mod_phi_minus_3(bilinear_form_2B(kG)));
  F5Matrix T = congruent_to_K(S);
  const F5Matrix K = f5_fixtures().K;
  CHECK(T.transposed().mul(S).mul(T) == K);
  F5Matrix Tinv = f5_inverse(T);
  std::vector<F5Matrix> conj;
  for (const auto& g : gens) {
    F5Matrix gbar = reduce_mod_phi_minus_3(g);
    CHECK(gbar.transposed().mul(S).mul(gbar) == S);
    F5Matrix h = Tinv.mul(gbar).mul(T);
    CHECK(h.transposed().mul(K).mul(h) == K);
    CHECK(f5_order(h) == 2);
    conj.push_back(h);
  }
  // The conjugated Sigma generators close to a group of the same order as the
  // printed one (conjugate subgroups of the orthogonal group of K).
  F5Closure sigma_conj({conj[0], conj[1], conj[2], conj[3]}, 20000);
  CHECK(sigma_conj.order() == 14400);
  // Reduced pairwise orders survive (the kernel of the reduction is torsion-free).
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) {
      F5Matrix a = reduce_mod_phi_minus_3(gens[i]);
      F5Matrix b = reduce_mod_phi_minus_3(gens[j]);
      CHECK(f5_order(a.mul(b)) == kG.m[i][j]);
    }
}

TEST_CASE("congruence normalization rejects square discriminant classes") {
  F5Matrix S;  // diag(1,1,1,1,1): discriminant 1, a square
  for (int i = 0; i < 5; ++i) S.put(i, i, 1);
  CHECK_THROWS_AS(congruent_to_K(S), ConstructionMismatchError);
}
