#pragma once
#include <iosfwd>
#include <string>
#include <vector>

#include "hyp5/golden.hpp"

namespace hyp5 {

// Coxeter diagram: symmetric label matrix, m_ii = 1, off-diagonal labels in
// {2,3,4,5}; 0 encodes the infinite label.
struct CoxeterDiagram {
  int n = 0;
  std::vector<std::vector<int>> m;

  // Linear diagram: labels along consecutive nodes, all other pairs 2.
  static CoxeterDiagram path(const std::vector<int>& labels);
  // Edge-list text format, one edge per line: "i j m" with 1-based nodes
  // and m = 0 for the infinite label; omitted pairs default to 2.
  static CoxeterDiagram parse_edge_list(std::istream& is);
  void write_edge_list(std::ostream& os) const;
};

struct Signature {
  int pos = 0, neg = 0, zero = 0;
  bool operator==(const Signature&) const = default;
};

// Eigenvalue sign counts of the real form B_ij = -cos(pi/m_ij); tolerance
// 1e-9, values in the unresolved band (tol, 100*tol) raise.
Signature signature(const CoxeterDiagram& d, double tol = 1e-9);

// Form scaled by 2 so entries live in Z[phi]: 2 on the diagonal, 0 / -1 /
// -phi for labels 2 / 3 / 5. Labels 4 and infinity are rejected here.
GoldenMatrix bilinear_form_2B(const CoxeterDiagram& d);

// Reflections g_i = [x -> x - 2B(x, e_i) e_i] in the 2B-scaled basis.
std::vector<GoldenMatrix> reflection_generators(const CoxeterDiagram& d);

}  // namespace hyp5
