// Command-line front end: builds the graph artifacts, runs colorings and
// certifications, and emits JSON reports. Artifact files are deterministic
// for fixed inputs and seeds; timing appears only on the report stream.
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyp5/certify.hpp"
#include "hyp5/codes17.hpp"
#include "hyp5/coloring.hpp"
#include "hyp5/errors.hpp"
#include "hyp5/f5graph.hpp"
#include "hyp5/goodsets.hpp"
#include "hyp5/long_graph.hpp"
#include "hyp5/textio.hpp"
#include "hyp5/zetavol.hpp"

namespace {

using json = nlohmann::ordered_json;
using hyp5::BitMatrix;
using hyp5::BitVec;
using hyp5::Coloring;
using hyp5::FacetGraph;
using hyp5::FreeCyclicAction;

constexpr std::uint64_t kDefaultSeed = 0x5eed4ce7ULL;

double elapsed_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void write_text_file(const std::string& path, const std::string& body) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw hyp5::IoError("cannot open for writing: " + path);
  os << body;
  if (!os.flush()) throw hyp5::IoError("write failed: " + path);
}

void write_json_file(const std::string& path, const json& j) {
  write_text_file(path, j.dump(2) + "\n");
}

void emit(const json& report) { std::cout << report.dump(2) << std::endl; }

json labels_to_json(const std::vector<std::vector<int>>& labels) {
  json out = json::object();
  for (std::size_t v = 0; v < labels.size(); ++v) out[std::to_string(v)] = labels[v];
  return out;
}

std::string matrix_to_string(const BitMatrix& m) {
  std::ostringstream os;
  hyp5::write_matrix(os, m);
  return os.str();
}

// Coloring metadata: everything validate/b1/ledger need beyond the matrix.
json coloring_meta(const Coloring& c, const std::string& mode,
                   const FreeCyclicAction* psi) {
  json meta;
  meta["m"] = c.m;
  meta["shift"] = c.shift;
  meta["mode"] = mode;
  json map = json::object();
  for (int v = 0; v < c.facets(); ++v) map[std::to_string(v)] = v;
  meta["facet_to_column"] = map;
  if (psi != nullptr) {
    meta["psi"] = psi->perm;
    meta["psi_order"] = psi->order;
  }
  return meta;
}

Coloring load_coloring(const std::string& matrix_path, const std::string& meta_path) {
  Coloring c;
  c.lambda = hyp5::read_matrix_file(matrix_path);
  c.m = int(c.lambda.rows());
  if (!meta_path.empty()) {
    std::ifstream is(meta_path);
    if (!is) throw hyp5::IoError("cannot open: " + meta_path);
    json meta = json::parse(is);
    if (meta.contains("shift")) c.shift = meta["shift"].get<int>();
    if (meta.contains("m") && meta["m"].get<int>() != c.m)
      throw hyp5::IoError("meta m disagrees with the matrix row count");
  }
  return c;
}

std::vector<int> parse_set_list(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(std::stoi(tok));
  }
  return out;
}

struct BuildLongOpts {
  std::string out = "long_graph.edges";
  std::string labels;
  std::string meta;
  int which = 0;
};

int cmd_build_long_graph(const BuildLongOpts& o) {
  auto t0 = std::chrono::steady_clock::now();
  hyp5::LongGraphBundle b = hyp5::build_long_graph(o.which);
  hyp5::write_graph_file(o.out, b.graph);
  if (!o.labels.empty()) write_json_file(o.labels, labels_to_json(b.graph.labels));
  if (!o.meta.empty()) {
    json meta;
    meta["psi"] = b.psi.perm;
    meta["psi_order"] = b.psi.order;
    meta["group_order"] = b.group_order;
    meta["stab_order"] = b.stab_order;
    meta["sigma_orbit_sizes"] = b.sigma_orbit_sizes;
    meta["omega"] = b.omega;
    write_json_file(o.meta, meta);
  }
  json rep;
  rep["command"] = "build-long-graph";
  rep["which_omega"] = o.which;
  rep["output"] = o.out;
  rep["vertices"] = b.graph.n;
  rep["edges"] = b.graph.edge_count();
  rep["group_order"] = b.group_order;
  rep["stab_order"] = b.stab_order;
  rep["sigma_orbit_sizes"] = b.sigma_orbit_sizes;
  rep["psi_order"] = b.psi.order;
  rep["certified"] = true;  // build_long_graph throws on any mismatch
  rep["elapsed_seconds"] = elapsed_since(t0);
  emit(rep);
  return 0;
}

struct BuildF5Opts {
  std::string out = "f5_graph.edges";
  std::string labels;
};

int cmd_build_f5_graph(const BuildF5Opts& o) {
  auto t0 = std::chrono::steady_clock::now();
  hyp5::F5GraphBundle b = hyp5::build_f5_graph();
  hyp5::write_graph_file(o.out, b.graph);
  if (!o.labels.empty()) write_json_file(o.labels, labels_to_json(b.graph.labels));
  json rep;
  rep["command"] = "build-f5-graph";
  rep["output"] = o.out;
  rep["vertices"] = b.graph.n;
  rep["edges"] = b.graph.edge_count();
  rep["arcs"] = 2 * b.graph.edge_count();
  rep["ordered_pairs"] = b.ordered_pairs;
  rep["base_vertex"] = b.v0;
  rep["certified"] = true;  // build_f5_graph throws on any mismatch
  rep["elapsed_seconds"] = elapsed_since(t0);
  emit(rep);
  return 0;
}

struct CensusOpts {
  std::string tier = "sampled";
  int threads = 0;
  std::uint64_t samples = 1000;
  std::uint64_t seed = kDefaultSeed;
  int which = 0;
};

int cmd_census(const CensusOpts& o) {
  auto t0 = std::chrono::steady_clock::now();
  hyp5::LongGraphBundle b = hyp5::build_long_graph(o.which);
  json rep;
  rep["command"] = "census";
  rep["tier"] = o.tier;
  if (o.tier == "long") {
    std::uint64_t count = hyp5::count_good_sets(
        b.graph, b.psi, o.threads, [](std::size_t done, std::size_t total) {
          std::cerr << "census progress: root branch " << done << "/" << total << "\n";
        });
    rep["good_sets"] = count;
    rep["expected"] = 13548660;
    rep["match"] = count == 13548660;
  } else {
    auto sets = hyp5::sample_good_sets(b.graph, b.psi, o.samples, o.seed);
    std::size_t verified = 0;
    for (const auto& s : sets) verified += hyp5::is_good_set(b.graph, b.psi, s) ? 1 : 0;
    rep["seed"] = o.seed;
    rep["sampled"] = sets.size();
    rep["verified_good"] = verified;
    rep["match"] = verified == sets.size() && sets.size() >= o.samples;
  }
  rep["elapsed_seconds"] = elapsed_since(t0);
  emit(rep);
  return rep["match"].get<bool>() ? 0 : 1;
}

struct GoodSetsOpts {
  std::uint64_t sample = 10;
  std::uint64_t seed = kDefaultSeed;
  std::string out;
  int which = 0;
};

int cmd_good_sets(const GoodSetsOpts& o) {
  auto t0 = std::chrono::steady_clock::now();
  hyp5::LongGraphBundle b = hyp5::build_long_graph(o.which);
  auto sets = hyp5::sample_good_sets(b.graph, b.psi, o.sample, o.seed);
  for (const auto& s : sets)
    if (!hyp5::is_good_set(b.graph, b.psi, s))
      throw hyp5::ConstructionMismatchError("sampled set failed the good-set re-check");
  json arr = json::array();
  for (const auto& s : sets) arr.push_back(s);
  if (!o.out.empty()) {
    json doc;
    doc["seed"] = o.seed;
    doc["sets"] = arr;
    write_json_file(o.out, doc);
  }
  json rep;
  rep["command"] = "good-sets";
  rep["seed"] = o.seed;
  rep["sampled"] = sets.size();
  rep["verified_good"] = sets.size();
  if (o.out.empty())
    rep["sets"] = arr;
  else
    rep["output"] = o.out;
  rep["elapsed_seconds"] = elapsed_since(t0);
  emit(rep);
  return 0;
}

struct ColorOpts {
  std::string mode = "qr";
  int k = 1;
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t sample_index = 0;
  std::string set_csv;
  std::string out = "coloring.mat";
  std::string map = "coloring.json";
  int which = 0;
};

int cmd_color(const ColorOpts& o) {
  auto t0 = std::chrono::steady_clock::now();
  json rep;
  rep["command"] = "color";
  rep["mode"] = o.mode;

  Coloring c;
  const FreeCyclicAction* psi = nullptr;
  std::optional<hyp5::LongGraphBundle> lg;
  std::optional<hyp5::F5GraphBundle> fg;
  if (o.mode == "basis" || o.mode == "qr") {
    lg = hyp5::build_long_graph(o.which);
    psi = &lg->psi;
    std::vector<int> I;
    if (!o.set_csv.empty()) {
      I = parse_set_list(o.set_csv);
    } else {
      auto sets = hyp5::sample_good_sets(lg->graph, lg->psi, o.sample_index + 1, o.seed);
      I = sets.at(o.sample_index);
      rep["seed"] = o.seed;
      rep["sample_index"] = o.sample_index;
    }
    rep["good_set"] = I;
    if (o.mode == "basis") {
      c = hyp5::basis_coloring(lg->graph, lg->psi, I);
    } else {
      c = hyp5::qr_coloring(lg->graph, lg->psi, I, o.k);
      rep["k"] = o.k;
    }
    hyp5::ValidationReport v = hyp5::validate_coloring(lg->graph, c);
    rep["valid"] = v.valid;
  } else if (o.mode == "dual13") {
    fg = hyp5::build_f5_graph();
    hyp5::LAnalysis la = hyp5::l_subgroup_analysis(*fg);
    hyp5::SpectralReport sp = hyp5::spectral_certificate(*fg, la);
    hyp5::Code13Result code = hyp5::find_code_13_4_6();
    c.m = 9;
    c.lambda = BitMatrix(9, std::size_t(fg->graph.n));
    for (int v = 0; v < fg->graph.n; ++v) {
      BitVec col = code.dual.col_vec(std::size_t(sp.coloring[std::size_t(v)]));
      for (std::size_t r = 0; r < 9; ++r)
        if (col.get(r)) c.lambda.set(r, std::size_t(v), true);
    }
    hyp5::ValidationReport v = hyp5::validate_coloring(fg->graph, c);
    rep["valid"] = v.valid;
  } else {
    throw hyp5::InvalidArgumentError("color: mode must be basis, qr, or dual13");
  }

  write_text_file(o.out, matrix_to_string(c.lambda));
  write_json_file(o.map, coloring_meta(c, o.mode, psi));
  rep["m"] = c.m;
  rep["facets"] = c.facets();
  rep["matrix"] = o.out;
  rep["map"] = o.map;
  rep["elapsed_seconds"] = elapsed_since(t0);
  emit(rep);
  return rep["valid"].get<bool>() ? 0 : 1;
}

struct ValidateOpts {
  std::string graph;
  std::string coloring;
  std::string meta;
  int bound = 5;
};

int cmd_validate(const ValidateOpts& o) {
  auto t0 = std::chrono::steady_clock::now();
  FacetGraph g = hyp5::read_graph_file_from(o.graph);
  Coloring c = load_coloring(o.coloring, o.meta);
  hyp5::ValidationReport v = hyp5::validate_coloring(g, c, o.bound);
  json rep;
  rep["command"] = "validate";
  rep["graph"] = o.graph;
  rep["coloring"] = o.coloring;
  rep["facets"] = g.n;
  rep["edges"] = g.edge_count();
  rep["m"] = c.m;
  rep["bound"] = v.bound;
  rep["valid"] = v.valid;
  if (!v.valid) rep["violating_clique"] = v.violating_clique;
  rep["elapsed_seconds"] = elapsed_since(t0);
  emit(rep);
  return v.valid ? 0 : 1;
}

struct B1Opts {
  std::string graph;
  std::string coloring;
  std::string meta;
};

int cmd_b1(const B1Opts& o) {
  auto t0 = std::chrono::steady_clock::now();
  FacetGraph g = hyp5::read_graph_file_from(o.graph);
  Coloring c = load_coloring(o.coloring, o.meta);
  hyp5::ValidationReport v = hyp5::validate_coloring(g, c);
  json rep;
  rep["command"] = "b1";
  rep["graph"] = o.graph;
  rep["coloring"] = o.coloring;
  rep["facets"] = g.n;
  rep["m"] = c.m;
  rep["valid"] = v.valid;
  if (!v.valid) {
    rep["violating_clique"] = v.violating_clique;
    emit(rep);
    return 1;
  }
  std::size_t rank = hyp5::rref(c.lambda).rank;
  rep["rank"] = rank;
  rep["nonzero_words"] = (std::uint64_t(1) << rank) - 1;
  rep["b1"] = hyp5::first_betti(g, c);
  rep["min_support"] = hyp5::min_support_weight(c);
  rep["row_component_counts"] = hyp5::row_component_counts(g, c);
  rep["elapsed_seconds"] = elapsed_since(t0);
  emit(rep);
  return 0;
}

struct LedgerOpts {
  std::string graph;
  std::string coloring;
  std::string meta;
  std::uint64_t facets = 0;
  std::uint64_t prisms_per_block = 14400;
  std::uint64_t quotient = 1;
};

int cmd_ledger(const LedgerOpts& o) {
  auto t0 = std::chrono::steady_clock::now();
  FacetGraph g = hyp5::read_graph_file_from(o.graph);
  Coloring c = load_coloring(o.coloring, o.meta);
  hyp5::ValidationReport v = hyp5::validate_coloring(g, c);
  if (!v.valid) {
    json rep;
    rep["command"] = "ledger";
    rep["valid"] = false;
    rep["violating_clique"] = v.violating_clique;
    emit(rep);
    return 1;
  }
  std::uint64_t facets = o.facets == 0 ? std::uint64_t(g.n) : o.facets;

  std::optional<FreeCyclicAction> psi;
  if (o.quotient > 1) {
    if (o.meta.empty())
      throw hyp5::InvalidArgumentError("ledger: --quotient needs --meta with the psi action");
    std::ifstream is(o.meta);
    json meta = json::parse(is);
    if (!meta.contains("psi"))
      throw hyp5::InvalidArgumentError("ledger: meta file has no psi action");
    psi = FreeCyclicAction{meta["psi"].get<std::vector<int>>(), meta["psi_order"].get<int>()};
    hyp5::certify_free_action(*psi, g.n);
  }
  hyp5::ManifoldLedger led =
      psi ? hyp5::ledger(g, c, facets, o.prisms_per_block, o.quotient, &*psi, &hyp5::qr_tables().R)
          : hyp5::ledger(g, c, facets, o.prisms_per_block);

  json rep;
  rep["command"] = "ledger";
  rep["graph"] = o.graph;
  rep["coloring"] = o.coloring;
  rep["valid"] = true;
  rep["m"] = led.m;
  rep["copies"] = led.copies;
  rep["quotient"] = led.quotient;
  rep["facets_per_piece"] = facets;
  rep["prisms_per_facet_block"] = o.prisms_per_block;
  rep["blocks"] = led.blocks;
  rep["prisms"] = led.prisms;
  rep["volume"] = {{"value", led.volume.value},
                   {"error_bound", led.volume.error_bound},
                   {"digits", led.volume.digits}};
  rep["orientable"] = led.orientable;
  if (led.witness) rep["witness"] = led.witness->to_string();
  rep["elapsed_seconds"] = elapsed_since(t0);
  emit(rep);
  return 0;
}

struct VolumeOpts {
  std::uint64_t prisms = 0;
  double tolerance = 0.0;
  std::uint64_t cutoff = 4000000;
};

int cmd_volume(const VolumeOpts& o) {
  auto t0 = std::chrono::steady_clock::now();
  hyp5::ZetaValue v =
      o.prisms == 0 ? hyp5::vol_P(o.cutoff) : hyp5::vol_of_prisms(o.prisms, o.cutoff);
  json rep;
  rep["command"] = "volume";
  if (o.prisms != 0) rep["prisms"] = o.prisms;
  rep["value"] = v.value;
  rep["error_bound"] = v.error_bound;
  rep["cutoff"] = o.cutoff;
  rep["digits"] = v.digits;
  bool within = o.tolerance <= 0.0 || v.error_bound <= o.tolerance;
  if (o.tolerance > 0.0) {
    rep["tolerance"] = o.tolerance;
    rep["within_tolerance"] = within;
  }
  rep["elapsed_seconds"] = elapsed_since(t0);
  emit(rep);
  return within ? 0 : 3;
}

int cmd_tables_dump(const std::string& dir) {
  const hyp5::QrCodeTables& t = hyp5::qr_tables();
  std::string prefix = dir.empty() ? std::string() : dir + "/";
  BitMatrix wrow(1, t.w.size());
  wrow.set_row(0, t.w);
  write_text_file(prefix + "A.mat", matrix_to_string(t.A));
  write_text_file(prefix + "B.mat", matrix_to_string(t.B));
  write_text_file(prefix + "R.mat", matrix_to_string(t.R));
  write_text_file(prefix + "w.mat", matrix_to_string(wrow));
  json rep;
  rep["command"] = "tables dump";
  rep["files"] = {prefix + "A.mat", prefix + "B.mat", prefix + "R.mat", prefix + "w.mat"};
  emit(rep);
  return 0;
}

struct CertifyAllOpts {
  std::string tier = "long";
  int threads = 0;
};

int cmd_certify_all(const CertifyAllOpts& o) {
  hyp5::CertifyOptions opt;
  opt.long_census = o.tier == "long";
  opt.threads = o.threads;
  opt.log = [](const std::string& line) { std::cerr << line << "\n"; };
  auto results = hyp5::run_certification(opt);
  json rep;
  rep["command"] = "certify-all";
  rep["tier"] = o.tier;
  json arr = json::array();
  double total = 0.0;
  for (const auto& r : results) {
    arr.push_back({{"id", r.id},
                   {"name", r.name},
                   {"pass", r.pass},
                   {"detail", r.detail},
                   {"seconds", r.seconds}});
    total += r.seconds;
  }
  rep["criteria"] = arr;
  rep["all_passed"] = hyp5::all_passed(results);
  rep["elapsed_seconds"] = total;
  emit(rep);
  return hyp5::all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hyperbolic 5-manifold pipeline"};
  app.require_subcommand(1);

  BuildLongOpts blo;
  auto* blg = app.add_subcommand("build-long-graph", "build the 272-vertex long-piece graph");
  blg->add_option("-o,--output", blo.out, "graph file path");
  blg->add_option("--labels", blo.labels, "label table JSON path");
  blg->add_option("--meta", blo.meta, "bundle metadata JSON path (psi, orders)");
  blg->add_option("--which", blo.which, "which 10-point sigma orbit seeds omega (0 or 1)")
      ->check(CLI::Range(0, 1));

  BuildF5Opts bfo;
  auto* bfg = app.add_subcommand("build-f5-graph", "build the 650-vertex quadric graph");
  bfg->add_option("-o,--output", bfo.out, "graph file path");
  bfg->add_option("--labels", bfo.labels, "label table JSON path");

  CensusOpts co;
  auto* cen = app.add_subcommand("census", "good-set census on the long graph");
  cen->add_option("--tier", co.tier, "sampled (default) or long")
      ->check(CLI::IsMember({"sampled", "long"}));
  cen->add_option("--threads", co.threads, "worker count (0 = hardware)");
  cen->add_option("--samples", co.samples, "sampled-tier set count");
  cen->add_option("--seed", co.seed, "sampling seed");
  cen->add_option("--which", co.which, "omega choice")->check(CLI::Range(0, 1));

  GoodSetsOpts gso;
  auto* gs = app.add_subcommand("good-sets", "sample good sets deterministically");
  gs->add_option("--sample", gso.sample, "number of sets");
  gs->add_option("--seed", gso.seed, "sampling seed");
  gs->add_option("-o,--output", gso.out, "JSON output path (default: stdout report)");
  gs->add_option("--which", gso.which, "omega choice")->check(CLI::Range(0, 1));

  ColorOpts clo;
  auto* col = app.add_subcommand("color", "build a coloring and write matrix + map files");
  col->add_option("--mode", clo.mode, "basis, qr, or dual13")
      ->check(CLI::IsMember({"basis", "qr", "dual13"}));
  col->add_option("--k", clo.k, "QR shift parameter (unit mod 17)");
  col->add_option("--seed", clo.seed, "good-set sampling seed");
  col->add_option("--sample-index", clo.sample_index, "index into the sampled stream");
  col->add_option("--set", clo.set_csv, "explicit good set, comma-separated vertex ids");
  col->add_option("-o,--output", clo.out, "matrix file path");
  col->add_option("--map", clo.map, "metadata JSON path");
  col->add_option("--which", clo.which, "omega choice")->check(CLI::Range(0, 1));

  ValidateOpts vo;
  auto* val = app.add_subcommand("validate", "validate a coloring against a graph");
  val->add_option("--graph", vo.graph, "graph file")->required();
  val->add_option("--coloring", vo.coloring, "matrix file")->required();
  val->add_option("--meta", vo.meta, "coloring metadata JSON");
  val->add_option("--bound", vo.bound, "clique bound (default 5)");

  B1Opts b1o;
  auto* b1 = app.add_subcommand("b1", "first Betti number of a colored graph");
  b1->add_option("--graph", b1o.graph, "graph file")->required();
  b1->add_option("--coloring", b1o.coloring, "matrix file")->required();
  b1->add_option("--meta", b1o.meta, "coloring metadata JSON");

  LedgerOpts lo;
  auto* led = app.add_subcommand("ledger", "manifold ledger for a colored graph");
  led->add_option("--graph", lo.graph, "graph file")->required();
  led->add_option("--coloring", lo.coloring, "matrix file")->required();
  led->add_option("--meta", lo.meta, "coloring metadata JSON (needed for --quotient)");
  led->add_option("--facets", lo.facets, "facets per piece (default: graph order)");
  led->add_option("--prisms-per-block", lo.prisms_per_block, "prisms per facet block");
  led->add_option("--quotient", lo.quotient, "cyclic quotient order (default 1)");

  VolumeOpts volo;
  auto* vol = app.add_subcommand("volume", "vol(P) or a prism-count volume");
  vol->add_option("--prisms", volo.prisms, "prism count (0 = vol(P) itself)");
  vol->add_option("--tolerance", volo.tolerance, "fail if error_bound exceeds this");
  vol->add_option("--cutoff", volo.cutoff, "Euler-product prime cutoff");

  auto* tab = app.add_subcommand("tables", "QR code table utilities");
  std::string dump_dir;
  auto* dump = tab->add_subcommand("dump", "write A, B, R, w in text matrix format");
  dump->add_option("-o,--output-dir", dump_dir, "output directory (default: cwd)");
  tab->require_subcommand(1);

  CertifyAllOpts cao;
  auto* cert = app.add_subcommand("certify-all", "run the full certification suite");
  cert->add_option("--tier", cao.tier, "long (default) or sampled census")
      ->check(CLI::IsMember({"sampled", "long"}));
  cert->add_option("--threads", cao.threads, "worker count (0 = hardware)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (blg->parsed()) return cmd_build_long_graph(blo);
    if (bfg->parsed()) return cmd_build_f5_graph(bfo);
    if (cen->parsed()) return cmd_census(co);
    if (gs->parsed()) return cmd_good_sets(gso);
    if (col->parsed()) return cmd_color(clo);
    if (val->parsed()) return cmd_validate(vo);
    if (b1->parsed()) return cmd_b1(b1o);
    if (led->parsed()) return cmd_ledger(lo);
    if (vol->parsed()) return cmd_volume(volo);
    if (tab->parsed() && dump->parsed()) return cmd_tables_dump(dump_dir);
    if (cert->parsed()) return cmd_certify_all(cao);
  } catch (const hyp5::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
