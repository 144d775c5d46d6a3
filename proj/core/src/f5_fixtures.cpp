#include "hyp5/f5_fixtures.hpp"

#include <string>

#include "hyp5/errors.hpp"

namespace hyp5 {

namespace {

F5Matrix mk(const std::array<std::array<int, 5>, 5>& rows) { return F5Matrix::from_rows(rows); }

std::uint64_t fnv1a(std::uint64_t h, const std::string& s) {
  for (char ch : s) {
    h ^= std::uint8_t(ch);
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string digits(const F5Matrix& m) {
  std::string s;
  for (int i = 0; i < 25; ++i) s += char('0' + m.e[i]);
  return s;
}

F5Fixtures build() {
  F5Fixtures f{
      mk({{{4, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}}}),
      mk({{{4, 3, 1, 0, 0}, {3, 4, 1, 0, 0}, {1, 1, 3, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}}}),
      mk({{{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 4, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}}}),
      mk({{{1, 0, 0, 0, 0}, {0, 4, 1, 3, 0}, {0, 1, 3, 1, 0}, {0, 3, 1, 4, 0}, {0, 0, 0, 0, 1}}}),
      mk({{{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 3, 1}, {0, 0, 0, 2, 2}}}),
      mk({{{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 3}}}),
      mk({{{0, 3, 2, 0, 2}, {4, 0, 1, 4, 2}, {1, 1, 0, 1, 3}, {4, 2, 3, 2, 2}, {4, 3, 2, 0, 3}}}),
      mk({{{1, 2, 0, 2, 1}, {3, 2, 2, 1, 3}, {0, 3, 1, 3, 4}, {3, 1, 2, 2, 3}, {3, 1, 2, 1, 4}}})};

  std::uint64_t h = 0xcbf29ce484222325ULL;
  h = fnv1a(h, "alpha:" + digits(f.alpha) + "\n");
  h = fnv1a(h, "beta:" + digits(f.beta) + "\n");
  h = fnv1a(h, "gamma:" + digits(f.gamma) + "\n");
  h = fnv1a(h, "delta:" + digits(f.delta) + "\n");
  h = fnv1a(h, "eps:" + digits(f.eps) + "\n");
  h = fnv1a(h, "K:" + digits(f.K) + "\n");
  h = fnv1a(h, "L1:" + digits(f.L1) + "\n");
  h = fnv1a(h, "L2:" + digits(f.L2) + "\n");
  if (h != 0x5df67d3fa6400ca5ULL) throw ConstructionMismatchError("f5 fixture checksum mismatch");

  // Transcription sanity: generators preserve K; alpha..eps are involutions.
  for (const F5Matrix* g : {&f.alpha, &f.beta, &f.gamma, &f.delta, &f.eps, &f.L1, &f.L2})
    if (!(g->transposed().mul(f.K).mul(*g) == f.K))
      throw ConstructionMismatchError("fixture does not preserve K");
  for (const F5Matrix* g : {&f.alpha, &f.beta, &f.gamma, &f.delta, &f.eps})
    if (!g->mul(*g).is_identity())
      throw ConstructionMismatchError("fixture generator is not an involution");
  return f;
}

}  // namespace

const F5Fixtures& f5_fixtures() {
  static const F5Fixtures f = build();
  return f;
}

}  // namespace hyp5
