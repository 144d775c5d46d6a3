#include "hyp5/certify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>

#include "hyp5/codes17.hpp"
#include "hyp5/coloring.hpp"
#include "hyp5/errors.hpp"
#include "hyp5/f5.hpp"
#include "hyp5/f5_fixtures.hpp"
#include "hyp5/f5graph.hpp"
#include "hyp5/goodsets.hpp"
#include "hyp5/long_graph.hpp"
#include "hyp5/permgroup.hpp"
#include "hyp5/toddcoxeter.hpp"
#include "hyp5/zetavol.hpp"

namespace hyp5 {

namespace {

constexpr std::uint64_t kSampleSeed = 0x5eed4ce7ULL;
constexpr std::size_t kSampledSets = 1000;  // criterion 4 sampled tier
constexpr std::size_t kBettiSets = 100;     // criterion 6 sample count

struct CertFail : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void req(bool cond, const std::string& msg) {
  if (!cond) throw CertFail(msg);
}

std::string num(std::uint64_t v) { return std::to_string(v); }

// Shared artifacts, built once on first use.
struct Context {
  const CertifyOptions& opt;
  std::optional<CosetTable> t85, t170;
  std::optional<LongGraphBundle> lg;
  std::vector<std::vector<int>> samples;
  std::optional<F5GraphBundle> fg;
  std::optional<CliqueCensus> cc;
  std::optional<LAnalysis> la;
  std::optional<SpectralReport> sp;

  const CosetTable& table85() {
    if (!t85) build_tables();
    return *t85;
  }
  const CosetTable& table170() {
    if (!t170) build_tables();
    return *t170;
  }
  void build_tables() {
    Presentation p = Presentation::coxeter(CoxeterDiagram::path({5, 3, 3, 3}));
    std::vector<std::vector<int>> s85, s170;
    for (const char* w : {"a", "c", "e", "decd", "bacbab"}) s85.push_back(parse_word(w, 5));
    for (const char* w : {"ac", "ae", "decd", "bacbab"}) s170.push_back(parse_word(w, 5));
    t85 = todd_coxeter(p, s85);
    t170 = todd_coxeter(p, s170);
  }
  const LongGraphBundle& long_graph() {
    if (!lg) lg = build_long_graph();
    return *lg;
  }
  const std::vector<std::vector<int>>& good_samples() {
    if (samples.empty())
      samples = sample_good_sets(long_graph().graph, long_graph().psi, kSampledSets, kSampleSeed);
    return samples;
  }
  const F5GraphBundle& f5_graph() {
    if (!fg) fg = build_f5_graph();
    return *fg;
  }
  const CliqueCensus& cliques() {
    if (!cc) cc = five_clique_census(f5_graph());
    return *cc;
  }
  const LAnalysis& l_analysis() {
    if (!la) la = l_subgroup_analysis(f5_graph());
    return *la;
  }
  const SpectralReport& spectral() {
    if (!sp) sp = spectral_certificate(f5_graph(), l_analysis());
    return *sp;
  }
};

template <typename Body>
CriterionResult run(int id, const char* name, Body&& body) {
  CriterionResult r;
  r.id = id;
  r.name = name;
  auto t0 = std::chrono::steady_clock::now();
  try {
    r.detail = body();
    r.pass = true;
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::string criterion_indices(Context& c) {
  req(c.table85().cosets == 85, "index of S expected 85, got " + num(c.table85().cosets));
  req(c.table170().cosets == 170,
      "index of S meet G+ expected 170, got " + num(c.table170().cosets));
  return "indices 85 and 170";
}

std::string criterion_orders(Context& c) {
  PermutationGroup g85(85, c.table85().act);
  PermutationGroup g170(170, c.table170().act);
  req(g85.order() == 979200, "order on 85 points expected 979200, got " + num(g85.order()));
  req(g85.order() == (1ull << 8) * 9 * 25 * 17, "979200 factorization check failed");
  req(g170.order() == 1958400, "order on 170 points expected 1958400, got " + num(g170.order()));
  return "orders 979200 and 1958400";
}

std::string criterion_long_graph(Context& c) {
  const LongGraphBundle& b = c.long_graph();  // build itself certifies
  req(b.graph.n == 272, "vertex count expected 272, got " + num(std::uint64_t(b.graph.n)));
  b.graph.check_simple();  // loop-free, symmetric
  req(b.stab_order == 7200, "stabilizer order expected 7200, got " + num(b.stab_order));
  std::vector<std::size_t> sig = b.sigma_orbit_sizes;
  std::sort(sig.begin(), sig.end());
  req(sig == std::vector<std::size_t>({10, 10, 150}), "sigma-bar orbit sizes are not {150,10,10}");
  req(b.psi.order == 17, "psi order expected 17");
  auto orbits = b.psi.orbits();
  req(orbits.size() == 16, "psi orbit count expected 16, got " + num(orbits.size()));
  for (const auto& o : orbits) req(o.size() == 17, "psi orbit of size != 17");
  return "272 vertices, simple, stab 7200, sigma orbits {150,10,10}, 16 psi-orbits of 17";
}

std::string criterion_census(Context& c) {
  const auto& samples = c.good_samples();
  req(samples.size() == kSampledSets, "sampled fewer than 1000 good sets");
  for (const auto& s : samples)
    req(is_good_set(c.long_graph().graph, c.long_graph().psi, s), "sampled set is not good");
  std::string detail = num(samples.size()) + " sampled sets verified good";
  if (c.opt.log) c.opt.log("census: sampled tier done");
  if (c.opt.long_census) {
    std::function<void(std::size_t, std::size_t)> progress;
    if (c.opt.log)
      progress = [&c](std::size_t done, std::size_t total) {
        c.opt.log("census: root branch " + num(done) + "/" + num(total));
      };
    std::uint64_t n =
        count_good_sets(c.long_graph().graph, c.long_graph().psi, c.opt.threads, progress);
    req(n == 13548660, "good-set census expected 13548660, got " + num(n));
    detail += "; exact census 13548660";
  }
  return detail;
}

std::string criterion_codes(Context&) {
  const QrCodeTables& t = qr_tables();
  req(min_distance(t.B) == 6, "d(C(B)) expected 6");
  req(min_distance(t.A) == 5, "d(C(A)) expected 5");
  req(t.A.mul(t.B.transposed()).is_zero(), "A B^T != 0");
  req(no_k_columns_dependent(t.A, 5), "5 dependent columns in A");
  for (std::size_t i = 0; i < 17; ++i)
    req(t.R.mul_right(t.A.col_vec(i)) == t.A.col_vec((i + 1) % 17), "R A_i != A_{i+1}");
  req(t.A.mul_left(t.w) == BitVec::ones(17), "w A != u_17");

  // the sixteen shifted families fall into exactly the two type classes
  std::vector<int> reps;
  int squares = 0;
  for (int k = 1; k <= 16; ++k) {
    BitMatrix fam = build_shifted_family(k);
    bool matched = false;
    for (int r : reps)
      if (left_equivalent(fam, build_shifted_family(r))) {
        matched = true;
        req(classify_type(k) == classify_type(r), "left-equivalence class crosses types");
      }
    if (!matched) reps.push_back(k);
    squares += classify_type(k) == TypeSign::Plus ? 1 : 0;
  }
  req(reps.size() == 2, "expected two left-equivalence classes, got " + num(reps.size()));
  req(classify_type(reps[0]) != classify_type(reps[1]), "class representatives share a type");
  req(squares == 8, "expected 8 square shifts");
  return "d=6/5, duality, no-5-dependence, shift, witness, two classes = two types";
}

std::string criterion_betti(Context& c) {
  const LongGraphBundle& b = c.long_graph();
  std::size_t min_floor = SIZE_MAX;
  std::size_t used = 0;
  for (const auto& I : c.good_samples()) {
    if (used == kBettiSets) break;
    ++used;
    for (int k : {1, 3}) {  // one shift per type
      Coloring col = qr_coloring(b.graph, b.psi, I, k);
      ValidationReport rep = validate_coloring(b.graph, col);
      req(rep.valid, "QR coloring failed validation");
      std::uint64_t b1 = first_betti(b.graph, col);
      req(b1 == 0, "b1 expected 0, got " + num(b1));
      std::size_t floor = min_support_weight(col);
      req(floor >= 80, "support floor below 80: " + num(floor));
      min_floor = std::min(min_floor, floor);
    }
  }
  req(used == kBettiSets, "fewer than 100 sampled sets available");
  return "b1 = 0 for " + num(used) + " sets x both types; support floor " + num(min_floor);
}

std::string criterion_ledgers(Context& c) {
  const LongGraphBundle& b = c.long_graph();
  const auto& I = c.good_samples().front();

  Coloring basis = basis_coloring(b.graph, b.psi, I);
  ManifoldLedger big = ledger(b.graph, basis, 272, 14400);
  req(big.prisms == 513382809600ULL, "2^17 ledger prisms expected 513382809600");

  Coloring qr = qr_coloring(b.graph, b.psi, I, 1);
  ManifoldLedger mid = ledger(b.graph, qr, 272, 14400);
  req(mid.prisms == 2005401600ULL, "2^9 ledger prisms expected 2005401600");

  ManifoldLedger quo = ledger(b.graph, qr, 272, 14400, 17, &b.psi, &qr_tables().R);
  req(quo.prisms == 117964800ULL, "quotient ledger prisms expected 117964800");
  req(quo.blocks == 8192, "quotient ledger expected 8192 copies of Q");

  // the 650-facet family: proper-coloring classes wearing the 13-column dual
  const F5GraphBundle& fg = c.f5_graph();
  const SpectralReport& sp = c.spectral();
  Code13Result code = find_code_13_4_6();
  Coloring dual;
  dual.m = 9;
  dual.lambda = BitMatrix(9, std::size_t(fg.graph.n));
  for (int v = 0; v < fg.graph.n; ++v) {
    BitVec colv = code.dual.col_vec(std::size_t(sp.coloring[std::size_t(v)]));
    for (std::size_t r = 0; r < 9; ++r)
      if (colv.get(r)) dual.lambda.set(r, std::size_t(v), true);
  }
  req(validate_coloring(fg.graph, dual).valid, "dual-code coloring failed validation");
  ManifoldLedger fam = ledger(fg.graph, dual, 650, 14400);
  req(fam.prisms == 4792320000ULL, "family ledger prisms expected 4792320000");
  return "513382809600 / 2005401600 / 117964800 prisms, 8192 blocks, 4792320000 prisms";
}

std::string criterion_f5_graph(Context& c) {
  const F5GraphBundle& b = c.f5_graph();
  req(b.graph.n == 650, "vertex count expected 650");
  for (int v = 0; v < b.graph.n; ++v)
    req(b.graph.degree(v) == 120, "graph is not 120-regular");
  req(b.graph.edge_count() == 39000, "edge count expected 39000 (78000 arcs)");
  req(b.ordered_pairs == 78000, "ordered adjacent pairs expected 78000");

  const F5Fixtures& fx = f5_fixtures();
  F5Closure q({fx.alpha, fx.beta, fx.gamma, fx.delta, fx.eps}, 10'000'000);
  req(q.order() == 9360000, "|Q| expected 9360000, got " + num(q.order()));
  std::size_t stab = q.stabilizer_order(b.verts[std::size_t(b.v0)]);
  req(stab == 14400, "stabilizer order expected 14400, got " + num(stab));
  req(q.order() == stab * 650, "orbit-stabilizer accounting failed");
  return "650 vertices, 120-regular, 39000 edges (78000 arcs), |Q| = 9360000, stab 14400";
}

std::string criterion_cliques(Context& c) {
  const CliqueCensus& cc = c.cliques();
  req(cc.total == 156000, "5-clique count expected 156000, got " + num(cc.total));
  req(cc.orbit_sizes.size() == 2 && cc.orbit_sizes[0] == 78000 && cc.orbit_sizes[1] == 78000,
      "expected two orbits of 78000");
  req(cc.seed.size() == 5, "seed clique size != 5");
  const FacetGraph& g = c.f5_graph().graph;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j)
      req(g.has_edge(cc.seed[i], cc.seed[j]), "seed clique not pairwise adjacent");
  req(std::binary_search(cc.real_cliques.begin(), cc.real_cliques.end(), cc.seed),
      "seed clique missing from the real orbit");
  return "156000 cliques in two orbits of 78000; seed verified";
}

std::string criterion_euler(Context& c) {
  EulerReport e = euler_characteristic_X(c.f5_graph().graph.n, c.cliques().real_cliques);
  req(e.chi == 650, "chi expected 650, got " + std::to_string(e.chi));
  std::ostringstream os;
  os << "f = (" << e.faces[0];
  for (std::size_t i = 1; i < e.faces.size(); ++i) os << ", " << e.faces[i];
  os << "), chi = " << e.chi;
  return os.str();
}

std::string criterion_l_analysis(Context& c) {
  const LAnalysis& la = c.l_analysis();
  req(la.l_order == 125, "|L| expected 125, got " + num(la.l_order));
  req(la.orbits.size() == 26, "orbit count expected 26, got " + num(la.orbits.size()));
  for (const auto& o : la.orbits) req(o.size() == 25, "L-orbit of size != 25");
  req(la.all_independent, "some L-orbit is not independent");
  req(la.pairing_count == 64, "pairing count expected 64, got " + num(la.pairing_count));
  req(la.pairings.size() == 64, "enumerated pairings != 64");
  return "|L| = 125, 26 independent orbits of 25, 64 pairings";
}

std::string criterion_spectral(Context& c) {
  const SpectralReport& sp = c.spectral();
  req(sp.degree == 120, "degree expected 120");
  const RankCertificate& rc = sp.rank10;
  req(rc.n == 650, "certificate dimension expected 650");
  req(rc.verified_kernel_dim >= 1, "no verified kernel vector: rank < 650 not certified");
  req(rc.gfp_rank + rc.verified_kernel_dim <= 650, "certificate bounds inconsistent");
  req(sp.colors == 13, "chromatic count expected 13 (Hoffman bound 1 + 120/10)");
  const FacetGraph& g = c.f5_graph().graph;
  for (int v = 0; v < g.n; ++v)
    for (int u = v + 1; u < g.n; ++u)
      if (g.has_edge(u, v))
        req(sp.coloring[std::size_t(u)] != sp.coloring[std::size_t(v)], "coloring not proper");
  return "rank(Adj + 10I) <= " + num(650 - rc.verified_kernel_dim) + " (mod-p rank " +
         num(rc.gfp_rank) + "), proper 13-coloring";
}

std::string criterion_volume(Context&) {
  ZetaValue v = vol_P();
  req(std::abs(v.value - 0.001984696430311649) < 1e-9, "vol(P) outside 1e-9 of reference value");
  ZetaValue p1 = vol_of_prisms(117964800);
  req(std::abs(p1.value - 234124.317462427649) < 1e-3, "quotient volume outside 1e-3");
  ZetaValue p2 = vol_of_prisms(4792320000ULL);
  req(std::abs(p2.value - 9511300.396911) < 1e-2, "family volume outside 1e-2");
  std::ostringstream os;
  os.precision(15);
  os << "vol(P) = " << v.value << ", volumes " << p1.value << " and " << p2.value;
  return os.str();
}

std::string criterion_properties(Context& c) {
  std::mt19937_64 rng(0x14CE5EEDULL);

  // rref idempotence and rank-nullity on random matrices
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t rows = 1 + rng() % 12, cols = 1 + rng() % 20;
    BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t cidx = 0; cidx < cols; ++cidx) m.set(r, cidx, rng() & 1);
    RrefResult rr = rref(m);
    req(rref(rr.reduced).reduced == rr.reduced, "rref not idempotent");
    req(rr.rank + kernel_basis(m).rows() == cols, "rank-nullity violated");
  }

  // orbit-stabilizer accounting in the L closure
  const F5Fixtures& fx = f5_fixtures();
  F5Closure l({fx.L1, fx.L2}, 500);
  const auto& verts = c.f5_graph().verts;
  for (int trial = 0; trial < 5; ++trial) {
    const F5Vec& v = verts[rng() % verts.size()];
    req(l.orbit(v).size() * l.stabilizer_order(v) == l.order(), "orbit-stabilizer violated");
  }

  // validation monotonicity on random colored graphs
  for (int trial = 0; trial < 20; ++trial) {
    int n = 3 + int(rng() % 7);
    FacetGraph g(n);
    for (int v = 0; v < n; ++v)
      for (int u = v + 1; u < n; ++u)
        if (rng() % 5 < 2) g.add_edge(u, v);
    Coloring col;
    col.m = 3;
    col.lambda = BitMatrix(3, std::size_t(n));
    for (int v = 0; v < n; ++v)
      for (std::size_t r = 0; r < 3; ++r) col.lambda.set(r, std::size_t(v), rng() & 1);
    bool prev = true;
    for (int bound = 1; bound <= 5; ++bound) {
      bool valid = validate_coloring(g, col, bound).valid;
      req(!(valid && !prev), "validity not monotone in the clique bound");
      prev = valid;
    }
  }

  // b1 invariance under invertible recoloring
  int checked = 0;
  while (checked < 10) {
    int n = 3 + int(rng() % 5);
    FacetGraph g(n);
    for (int v = 0; v < n; ++v)
      for (int u = v + 1; u < n; ++u)
        if (rng() % 5 < 2) g.add_edge(u, v);
    Coloring col;
    col.m = 3;
    col.lambda = BitMatrix(3, std::size_t(n));
    for (int v = 0; v < n; ++v)
      for (std::size_t r = 0; r < 3; ++r) col.lambda.set(r, std::size_t(v), rng() & 1);
    if (!validate_coloring(g, col).valid) continue;
    BitMatrix t(3, 3);
    do {
      for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t cidx = 0; cidx < 3; ++cidx) t.set(r, cidx, rng() & 1);
    } while (rref(t).rank != 3);
    Coloring rec;
    rec.m = 3;
    rec.lambda = t.mul(col.lambda);
    req(validate_coloring(g, rec).valid, "invertible recoloring broke validity");
    req(first_betti(g, col) == first_betti(g, rec), "b1 not invariant under left equivalence");
    req(orientability_witness(col).has_value() == orientability_witness(rec).has_value(),
        "witness existence not invariant under left equivalence");
    ++checked;
  }
  return "rref, rank-nullity, orbit-stabilizer, monotonicity, b1 invariance";
}

}  // namespace

std::vector<CriterionResult> run_certification(const CertifyOptions& opt) {
  Context ctx{opt, {}, {}, {}, {}, {}, {}, {}, {}};
  std::vector<CriterionResult> out;
  auto log_result = [&](const CriterionResult& r) {
    if (opt.log)
      opt.log((r.pass ? "[PASS] " : "[FAIL] ") + std::to_string(r.id) + " " + r.name);
    out.push_back(r);
  };

  log_result(run(1, "coset indices", [&] { return criterion_indices(ctx); }));
  log_result(run(2, "permutation image orders", [&] { return criterion_orders(ctx); }));
  log_result(run(3, "long graph", [&] { return criterion_long_graph(ctx); }));
  log_result(run(4, "good-set census", [&] { return criterion_census(ctx); }));
  log_result(run(5, "code suite", [&] { return criterion_codes(ctx); }));
  log_result(run(6, "first betti numbers", [&] { return criterion_betti(ctx); }));
  log_result(run(8, "quadric graph", [&] { return criterion_f5_graph(ctx); }));
  log_result(run(9, "clique census", [&] { return criterion_cliques(ctx); }));
  log_result(run(10, "euler characteristic", [&] { return criterion_euler(ctx); }));
  log_result(run(11, "L analysis", [&] { return criterion_l_analysis(ctx); }));
  log_result(run(12, "spectral certificate", [&] { return criterion_spectral(ctx); }));
  log_result(run(13, "volumes", [&] { return criterion_volume(ctx); }));
  // ledgers reuse the spectral coloring and the cached volume; run late so
  // its own budget covers only the integer accounting
  log_result(run(7, "manifold ledgers", [&] { return criterion_ledgers(ctx); }));
  log_result(run(14, "property suites", [&] { return criterion_properties(ctx); }));

  std::sort(out.begin(), out.end(),
            [](const CriterionResult& a, const CriterionResult& b) { return a.id < b.id; });
  return out;
}

bool all_passed(const std::vector<CriterionResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace hyp5
