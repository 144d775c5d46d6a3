#include "hyp5/diagram.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "hyp5/errors.hpp"

namespace hyp5 {

CoxeterDiagram CoxeterDiagram::path(const std::vector<int>& labels) {
  CoxeterDiagram d;
  d.n = int(labels.size()) + 1;
  d.m.assign(d.n, std::vector<int>(d.n, 2));
  for (int i = 0; i < d.n; ++i) d.m[i][i] = 1;
  for (std::size_t k = 0; k < labels.size(); ++k) d.m[k][k + 1] = d.m[k + 1][k] = labels[k];
  return d;
}

CoxeterDiagram CoxeterDiagram::parse_edge_list(std::istream& is) {
  struct Edge { int i, j, m; };
  std::vector<Edge> edges;
  int maxnode = 0;
  std::string line;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    Edge e;
    if (!(ls >> e.i >> e.j >> e.m)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw IoError("diagram line must be \"i j m\"");
    }
    if (e.i < 1 || e.j < 1 || e.i == e.j) throw IoError("diagram nodes are distinct and 1-based");
    if (e.m != 0 && e.m < 2) throw IoError("diagram label must be >= 2, or 0 for infinity");
    maxnode = std::max(maxnode, std::max(e.i, e.j));
    edges.push_back(e);
  }
  CoxeterDiagram d;
  d.n = maxnode;
  d.m.assign(d.n, std::vector<int>(d.n, 2));
  for (int i = 0; i < d.n; ++i) d.m[i][i] = 1;
  for (const Edge& e : edges) d.m[e.i - 1][e.j - 1] = d.m[e.j - 1][e.i - 1] = e.m;
  return d;
}

void CoxeterDiagram::write_edge_list(std::ostream& os) const {
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (m[i][j] != 2) os << (i + 1) << ' ' << (j + 1) << ' ' << m[i][j] << '\n';
}

Signature signature(const CoxeterDiagram& d, double tol) {
  Eigen::MatrixXd B(d.n, d.n);
  for (int i = 0; i < d.n; ++i)
    for (int j = 0; j < d.n; ++j) {
      if (i == j) {
        B(i, j) = 1.0;
      } else if (d.m[i][j] == 0) {
        B(i, j) = -1.0;  // cos(pi/inf) = 1
      } else {
        B(i, j) = -std::cos(M_PI / d.m[i][j]);
      }
    }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(B, Eigen::EigenvaluesOnly);
  Signature s;
  for (int i = 0; i < d.n; ++i) {
    double ev = es.eigenvalues()(i);
    if (std::abs(ev) <= tol) {
      ++s.zero;
    } else if (std::abs(ev) < 100 * tol) {
      throw IndeterminateSignatureError("eigenvalue in unresolved band near zero");
    } else if (ev > 0) {
      ++s.pos;
    } else {
      ++s.neg;
    }
  }
  return s;
}

GoldenMatrix bilinear_form_2B(const CoxeterDiagram& d) {
  GoldenMatrix B(d.n, std::vector<GoldenInt>(d.n));
  for (int i = 0; i < d.n; ++i)
    for (int j = 0; j < d.n; ++j) {
      if (i == j) { B[i][j] = {2, 0}; continue; }
      switch (d.m[i][j]) {
        case 2: B[i][j] = {0, 0}; break;
        case 3: B[i][j] = {-1, 0}; break;
        case 5: B[i][j] = {0, -1}; break;  // -2cos(pi/5) = -phi
        default:
          throw UnsupportedLabelError("exact form supports labels 2, 3, 5 only");
      }
    }
  return B;
}

std::vector<GoldenMatrix> reflection_generators(const CoxeterDiagram& d) {
  GoldenMatrix B = bilinear_form_2B(d);
  std::vector<GoldenMatrix> gens;
  for (int i = 0; i < d.n; ++i) {
    GoldenMatrix g = golden_identity(d.n);
    for (int j = 0; j < d.n; ++j) g[i][j] = g[i][j] - B[i][j];
    gens.push_back(std::move(g));
  }
  return gens;
}

}  // namespace hyp5
