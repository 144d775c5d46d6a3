#include "hyp5/facet_graph.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "hyp5/errors.hpp"

namespace hyp5 {

FacetGraph::FacetGraph(int nverts) : n(nverts), adj(nverts, BitVec(std::size_t(nverts))) {}

void FacetGraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n || v >= n) throw InvalidArgumentError("edge endpoint out of range");
  if (u == v) throw ConstructionMismatchError("loop edge rejected");
  adj[u].set(std::size_t(v), true);
  adj[v].set(std::size_t(u), true);
}

std::uint64_t FacetGraph::edge_count() const {
  std::uint64_t deg = 0;
  for (const BitVec& row : adj) deg += row.weight();
  return deg / 2;
}

void FacetGraph::check_simple() const {
  for (int u = 0; u < n; ++u) {
    if (adj[u].get(std::size_t(u))) throw ConstructionMismatchError("graph has a loop");
    for (int v = u + 1; v < n; ++v)
      if (adj[u].get(std::size_t(v)) != adj[v].get(std::size_t(u)))
        throw ConstructionMismatchError("adjacency not symmetric");
  }
}

int FreeCyclicAction::apply(int v, int times) const {
  times %= order;
  if (times < 0) times += order;
  for (int i = 0; i < times; ++i) v = perm[v];
  return v;
}

std::vector<std::vector<int>> FreeCyclicAction::orbits() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    std::vector<int> orb;
    int v = int(s);
    do {
      seen[v] = true;
      orb.push_back(v);
      v = perm[v];
    } while (v != int(s));
    out.push_back(std::move(orb));
  }
  return out;
}

void certify_free_action(const FreeCyclicAction& psi, int nverts) {
  if (int(psi.perm.size()) != nverts)
    throw ConstructionMismatchError("action degree does not match vertex count");
  if (psi.order <= 0) throw ConstructionMismatchError("action order must be positive");
  for (int v = 0; v < nverts; ++v) {
    int w = v;
    for (int j = 1; j < psi.order; ++j) {
      w = psi.perm[w];
      if (w == v) throw ConstructionMismatchError("action has a short cycle; not free");
    }
    if (psi.perm[w] != v) throw ConstructionMismatchError("action order is not the cycle length");
  }
}

void write_graph_file(std::ostream& os, const FacetGraph& g) {
  os << "p edge " << g.n << ' ' << 2 * g.edge_count() << '\n';
  for (int u = 0; u < g.n; ++u)
    for (int v = 0; v < g.n; ++v)
      if (g.has_edge(u, v)) os << "e " << (u + 1) << ' ' << (v + 1) << '\n';
}

FacetGraph read_graph_file(std::istream& is) {
  std::string line;
  int n = -1;
  std::uint64_t arcs = 0, seen = 0;
  FacetGraph g;
  std::vector<std::vector<bool>> dir;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "p") {
      std::string kind;
      if (!(ls >> kind >> n >> arcs) || kind != "edge" || n < 0)
        throw IoError("malformed graph header; expected \"p edge N M\"");
      g = FacetGraph(n);
      dir.assign(n, std::vector<bool>(n, false));
    } else if (tag == "e") {
      int u = 0, v = 0;
      if (n < 0) throw IoError("edge line before header");
      if (!(ls >> u >> v) || u < 1 || v < 1 || u > n || v > n)
        throw IoError("malformed edge line");
      if (u == v) throw IoError("loop edge in graph file");
      dir[u - 1][v - 1] = true;
      ++seen;
    } else {
      throw IoError("unknown graph file line tag");
    }
  }
  if (n < 0) throw IoError("graph file missing header");
  if (seen != arcs) throw IoError("arc count does not match header");
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (dir[u][v] != dir[v][u]) throw IoError("arc list not symmetric");
      if (dir[u][v] && u < v) g.add_edge(u, v);
    }
  return g;
}

void write_graph_file(const std::string& path, const FacetGraph& g) {
  std::ofstream os(path);
  if (!os) throw IoError("cannot open graph file for writing: " + path);
  write_graph_file(os, g);
}

FacetGraph read_graph_file_from(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw IoError("cannot open graph file: " + path);
  return read_graph_file(is);
}

}  // namespace hyp5
