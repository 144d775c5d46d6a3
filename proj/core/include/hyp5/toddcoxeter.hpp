#pragma once
#include <cstddef>
#include <string>
#include <vector>

#include "hyp5/diagram.hpp"

namespace hyp5 {

// Presentation with involutory generators a, b, c, ... (Coxeter style);
// relators and subgroup words are letter strings over the generators.
struct Presentation {
  int ngens = 0;
  std::vector<std::vector<int>> relators;

  static Presentation coxeter(const CoxeterDiagram& d);
};

std::vector<int> parse_word(const std::string& s, int ngens);

// Closed coset table: act[g][c] is the right action of generator g on coset c,
// 0-based with coset 0 the subgroup; BFS-standardized so the numbering is
// canonical regardless of internal definition order.
struct CosetTable {
  int cosets = 0;
  std::vector<std::vector<int>> act;
};

// Right action of a word (letters applied left to right) on a coset.
int trace_word(const CosetTable& t, int coset, const std::vector<int>& w);

// HLT enumeration with coincidence handling; the result is re-scanned until
// every relator closes at every coset, so a returned table is certified.
CosetTable todd_coxeter(const Presentation& p,
                        const std::vector<std::vector<int>>& subgroup,
                        std::size_t max_cosets = 1000000);

}  // namespace hyp5
