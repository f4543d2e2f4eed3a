// lgl: generate layouts, compute spectra, bands, gap scans, bounds and flat-band states.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>
#ifdef _OPENMP
#include <omp.h>
#endif

#include "lgl/bloch.hpp"
#include "lgl/bounds.hpp"
#include "lgl/errors.hpp"
#include "lgl/flatband.hpp"
#include "lgl/format.hpp"
#include "lgl/generators.hpp"
#include "lgl/hamiltonian.hpp"
#include "lgl/lattice.hpp"
#include "lgl/spectral.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace lgl;

namespace {

constexpr const char* kVersion = "1.0.0";

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string sha256_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 15]);
  }
  return out;
}

// Output directory plus the manifest that records what was written.
struct Run {
  fs::path dir;
  json manifest;

  Run(const std::string& command, const std::string& out_dir) : dir(out_dir) {
    fs::create_directories(dir);
    manifest["command"] = command;
    manifest["versions"] = {{"lgl", kVersion},
                            {"eigen", std::to_string(EIGEN_WORLD_VERSION) + "." + std::to_string(EIGEN_MAJOR_VERSION) +
                                          "." + std::to_string(EIGEN_MINOR_VERSION)},
                            {"compiler", __VERSION__}};
    manifest["config"] = json::object();
    manifest["inputs"] = json::object();
    manifest["outputs"] = json::array();
  }

  void input(const std::string& path) { manifest["inputs"][path] = sha256_file(path); }

  void write(const std::string& name, const std::function<void(std::ostream&)>& body) {
    std::ofstream out(dir / name, std::ios::binary);
    if (!out) throw InputError("cannot write " + (dir / name).string());
    out.imbue(std::locale::classic());
    body(out);
    manifest["outputs"].push_back(name);
  }

  void write_json(const std::string& name, const json& j) {
    write(name, [&](std::ostream& os) { os << j.dump(2) << '\n'; });
  }

  void finish() {
    std::ofstream out(dir / "manifest.json", std::ios::binary);
    out << manifest.dump(2) << '\n';
  }
};

json number_or_null(const std::optional<double>& x) { return x ? json(*x) : json(nullptr); }

double parse_fraction(const std::string& s) {
  auto slash = s.find('/');
  std::size_t used = 0;
  try {
    if (slash == std::string::npos) {
      double v = std::stod(s, &used);
      if (used != s.size()) throw UsageError("bad number '" + s + "'");
      return v;
    }
    return std::stod(s.substr(0, slash)) / std::stod(s.substr(slash + 1));
  } catch (const std::logic_error&) {
    throw UsageError("bad number '" + s + "'");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

// ---------------------------------------------------------------- gen

struct GenArgs {
  std::string family;
  std::size_t k = 7, r = 2, n = 6;
  std::string lattice = "graphene";
  std::vector<std::size_t> size{4, 4};
  std::string boundary = "torus";
  std::string input;
  std::string out_dir = "out";
};

void run_gen(const GenArgs& a) {
  Run run("gen", a.out_dir);
  run.manifest["config"] = {{"family", a.family}};
  Graph g;
  std::optional<std::vector<std::vector<Vertex>>> faces;
  if (a.family == "tessellation") {
    if (a.k < 3) throw UsageError("--k must be at least 3");
    auto t = tessellation_ball(a.k, a.r);
    g = t.graph;
    faces = t.faces;
    run.manifest["config"]["k"] = a.k;
    run.manifest["config"]["r"] = a.r;
    run.manifest["closed"] = t.closed;
  } else if (a.family == "euclidean") {
    if (a.size.size() != 2 || a.size[0] < 1 || a.size[1] < 1) throw UsageError("--size needs two positive integers");
    const auto boundary = a.boundary == "torus" ? Boundary::torus : Boundary::open;
    if (a.boundary != "torus" && a.boundary != "open") throw UsageError("--boundary must be open or torus");
    LatticeFamily fam;
    try {
      fam = parse_family(a.lattice);
    } catch (const InputError& e) {
      throw UsageError(e.what());
    }
    if (boundary == Boundary::torus && (a.size[0] < 3 || a.size[1] < 3))
      throw UsageError("a torus needs at least 3 cells per direction");
    auto patch = euclidean_lattice(fam, a.size[0], a.size[1], boundary);
    g = patch.graph;
    if (patch.lattice) {
      try {
        faces = torus_faces(*patch.lattice, a.size[0], a.size[1]);
      } catch (const NumericError&) {
        // Lattices drawn with crossing bonds have no face list.
      }
    }
    run.manifest["config"]["lattice"] = a.lattice;
    run.manifest["config"]["size"] = a.size;
    run.manifest["config"]["boundary"] = a.boundary;
  } else if (a.family == "tree") {
    g = tree_ball(a.r);
    run.manifest["config"]["r"] = a.r;
  } else if (a.family == "c60") {
    g = c60_graph();
  } else if (a.family == "complete") {
    g = complete_graph(a.n);
    run.manifest["config"]["n"] = a.n;
  } else if (a.family == "cycle") {
    if (a.n < 3) throw UsageError("--n must be at least 3 for a cycle");
    g = cycle_graph(a.n);
    run.manifest["config"]["n"] = a.n;
  } else if (a.family == "petersen") {
    g = petersen_graph();
  } else if (a.family == "line" || a.family == "subdivision" || a.family == "hoffman") {
    if (a.input.empty()) throw UsageError("--input is required for " + a.family);
    run.input(a.input);
    Graph base = read_graph_file(a.input).graph;
    if (a.family == "line") g = line_graph(base).graph;
    if (a.family == "subdivision") g = subdivision_graph(base).graph;
    if (a.family == "hoffman") g = hoffman_layout(base);
    run.manifest["config"]["input"] = a.input;
  } else {
    throw UsageError("unknown family '" + a.family + "'");
  }
  run.write("graph.txt", [&](std::ostream& os) {
    write_graph(os, g.canonical());
    if (faces) {
      os << "faces " << faces->size() << '\n';
      for (const auto& f : *faces) {
        for (std::size_t i = 0; i < f.size(); ++i) os << (i ? " " : "") << f[i];
        os << '\n';
      }
    }
  });
  run.manifest["vertices"] = g.num_vertices();
  run.manifest["edges"] = g.num_edges();
  run.finish();
  std::cout << "wrote " << (run.dir / "graph.txt").string() << " (" << g.num_vertices() << " vertices, "
            << g.num_edges() << " edges)\n";
}

// ---------------------------------------------------------------- spectrum

struct SpectrumArgs {
  std::string graph;
  std::string flavor = "layout";
  std::string mode = "dense";
  double tol = 1e-8;
  double bin_width = 0.04;
  std::uint64_t seed = 0x5EED;
  std::size_t max_dim_dense = 12000;
  std::size_t max_dim_extremal = 2000000;
  std::string out_dir = "out";
};

void run_spectrum(const SpectrumArgs& a) {
  if (a.flavor != "layout" && a.flavor != "s" && a.flavor != "a") throw UsageError("--flavor must be layout, s or a");
  if (a.mode != "dense" && a.mode != "extremal") throw UsageError("--mode must be dense or extremal");
  if (!(a.tol > 0) || !(a.bin_width > 0)) throw UsageError("--tol and --bin-width must be positive");
  Run run("spectrum", a.out_dir);
  run.manifest["config"] = {{"graph", a.graph},         {"flavor", a.flavor},       {"mode", a.mode},
                            {"tol", a.tol},             {"bin_width", a.bin_width}, {"seed", a.seed},
                            {"max_dim_dense", a.max_dim_dense}, {"max_dim_extremal", a.max_dim_extremal}};
  run.input(a.graph);
  auto parsed = read_graph_file(a.graph);
  const Graph& g = parsed.graph;
  if (g.num_vertices() == 0) throw InputError("graph has no vertices");

  SparseSymMatrix h;
  if (a.flavor == "layout") {
    h = adjacency(g);
  } else if (a.flavor == "s") {
    h = effective_hamiltonian(g, Flavor::s);
  } else {
    HamiltonianOptions opts;
    if (parsed.flips) opts.orientation = OrientedGraph(g, *parsed.flips);
    h = effective_hamiltonian(g, Flavor::a, opts);
  }
  if (h.dim() == 0) throw InputError("operator has dimension 0");

  const std::size_t n = g.num_vertices(), m = g.num_edges();
  const std::size_t comps = connected_components(g).size();
  std::size_t bip_comps = 0;
  for (const auto& c : connected_components(g))
    if (is_bipartite(induced_subgraph(g, c).graph).bipartite) ++bip_comps;

  json summary;
  summary["dim"] = h.dim();
  summary["vertices"] = n;
  summary["edges"] = m;
  if (a.flavor != "layout") {
    // m - n + (bipartite components) for s, m - n + (components) for a.
    summary["flat_band_multiplicity_formula"] =
        static_cast<long long>(m) - static_cast<long long>(n) +
        static_cast<long long>(a.flavor == "s" ? bip_comps : comps);
  }

  if (a.mode == "dense") {
    DenseOptions opts;
    opts.max_dim = a.max_dim_dense;
    opts.degeneracy_tol = a.tol;
    auto sr = dense_spectrum(h, opts);
    run.write("spectrum.csv", [&](std::ostream& os) { write_spectrum_csv(os, sr); });
    run.write("dos.csv", [&](std::ostream& os) { write_dos_csv(os, dos(sr, a.bin_width)); });
    summary["lambda_min"] = sr.min();
    summary["lambda_max"] = sr.max();
    summary["flat_band_multiplicity"] = flat_band_multiplicity(sr, -2.0);
    std::optional<double> gap;
    if (sr.max() > -2.0 + sr.degeneracy_tol) gap = gap_above(sr, -2.0);
    summary["gap_above_minus2"] = number_or_null(gap);
  } else {
    if (h.dim() > a.max_dim_extremal)
      throw BudgetError("dimension " + std::to_string(h.dim()) + " exceeds --max-dim-extremal");
    LanczosOptions opts;
    opts.tol = a.tol;
    opts.seed = a.seed;
    auto res = extremal_eigenvalues(h, Which::both, opts);
    summary["lambda_min"] = res.min->value;
    summary["lambda_max"] = res.max->value;
    summary["residual_min"] = res.min->residual;
    summary["residual_max"] = res.max->residual;
    summary["flat_band_multiplicity"] = nullptr;  // needs dense mode
    std::optional<double> gap;
    if (a.flavor == "s" && bip_comps == 0 && n >= 2) {
      // Nonzero spectrum of M M^t equals that of M^t M = D + A.
      auto dp = extremal_eigenvalues(signed_laplacian(g, LaplacianSign::plus), Which::min, opts);
      gap = dp.min->value;
    }
    summary["gap_above_minus2"] = number_or_null(gap);
  }
  run.write_json("summary.json", summary);
  run.finish();
  std::cout << summary.dump(2) << '\n';
}

// ---------------------------------------------------------------- bands

struct BandsArgs {
  std::string family;
  std::string flavor = "layout";
  std::string path;
  std::vector<std::size_t> samples;
  std::size_t grid = 48;
  double flat_tol = 1e-9;
  std::string out_dir = "out";
};

void run_bands(const BandsArgs& a) {
  if (a.flavor != "layout" && a.flavor != "s" && a.flavor != "a") throw UsageError("--flavor must be layout, s or a");
  if (a.grid < 1) throw UsageError("--grid must be positive");
  LatticeFamily fam;
  try {
    fam = parse_family(a.family);
  } catch (const InputError& e) {
    throw UsageError(e.what());
  }
  PeriodicLattice pl = make_lattice(fam);
  if (a.flavor != "layout") pl = medial_lattice(pl, a.flavor == "s" ? Flavor::s : Flavor::a);

  KPath path;
  if (a.path.empty()) {
    path = default_path(pl);
  } else {
    std::vector<KPoint> corners;
    for (const auto& pt : split(a.path, ',')) {
      auto xy = split(pt, ':');
      if (xy.size() != 2) throw UsageError("path points look like k1:k2, got '" + pt + "'");
      corners.push_back({parse_fraction(xy[0]), parse_fraction(xy[1])});
    }
    std::vector<std::size_t> counts = a.samples;
    if (counts.empty()) counts.assign(corners.size() > 0 ? corners.size() - 1 : 0, 60);
    if (corners.size() < 2 || counts.size() + 1 != corners.size())
      throw UsageError("--samples needs one count per path segment");
    path = make_path(corners, counts);
  }

  Run run("bands", a.out_dir);
  run.manifest["config"] = {{"family", a.family}, {"flavor", a.flavor}, {"path", a.path},
                            {"samples", a.samples}, {"grid", a.grid}, {"flat_tol", a.flat_tol}};
  BlochHamiltonian bh(pl);
  auto bs = band_structure(bh, path.points);
  bs.labels = path.labels;
  run.write("bands.csv", [&](std::ostream& os) { write_bands_csv(os, bs); });

  auto grid_bs = band_structure(bh, uniform_grid(a.grid));
  auto census = flat_band_census(grid_bs, a.flat_tol);
  json jc;
  jc["family"] = a.family;
  jc["flavor"] = a.flavor;
  jc["sites"] = pl.num_sites();
  jc["grid"] = a.grid;
  jc["flat_bands"] = json::array();
  std::size_t at_minus2 = 0;
  for (const auto& fb : census) {
    jc["flat_bands"].push_back({{"band", fb.band}, {"energy", fb.energy}, {"spread", fb.spread}});
    if (std::abs(fb.energy + 2.0) < 1e-9) ++at_minus2;
  }
  jc["flat_bands_at_minus2"] = at_minus2;
  if (at_minus2 > 0 && at_minus2 < grid_bs.num_bands()) {
    double lowest = std::numeric_limits<double>::infinity();
    for (const auto& e : grid_bs.energies) lowest = std::min(lowest, e[at_minus2]);
    jc["gap_above_minus2"] = lowest + 2.0;
    jc["gapped"] = lowest + 2.0 > 1e-6;
  }
  run.write_json("census.json", jc);
  run.finish();
  std::cout << jc.dump(2) << '\n';
}

// ---------------------------------------------------------------- gapscan

struct GapscanArgs {
  std::string k = "7";
  std::size_t r_min = 2, r_max = 6;
  std::string which = "min";
  double tol = 1e-8;
  std::uint64_t seed = 0x5EED;
  std::size_t max_vertices = 2000000;
  std::string out_dir = "out";
};

void run_gapscan(const GapscanArgs& a) {
  if (a.r_min > a.r_max) throw UsageError("--r-min must not exceed --r-max");
  if (a.which != "min" && a.which != "max") throw UsageError("--which must be min or max");
  const bool tree = a.k == "inf" || a.k == "tree";
  std::size_t k = 0;
  if (!tree) {
    try {
      k = std::stoul(a.k);
    } catch (const std::logic_error&) {
      throw UsageError("--k must be an integer >= 3 or 'inf'");
    }
    if (k < 3) throw UsageError("--k must be an integer >= 3 or 'inf'");
  }

  // Build all graphs first so the budget check happens before any eigensolve.
  std::vector<Graph> graphs;
  for (std::size_t r = a.r_min; r <= a.r_max; ++r) {
    if (tree && 3.0 * std::ldexp(1.0, static_cast<int>(r)) - 2.0 > static_cast<double>(a.max_vertices))
      throw BudgetError("tree ball r=" + std::to_string(r) + " exceeds --max-vertices");
    graphs.push_back(tree ? tree_ball(r) : tessellation_ball(k, r).graph);
    if (graphs.back().num_vertices() > a.max_vertices)
      throw BudgetError("ball r=" + std::to_string(r) + " has " + std::to_string(graphs.back().num_vertices()) +
                        " vertices, above --max-vertices");
  }

  Run run("gapscan", a.out_dir);
  run.manifest["config"] = {{"k", a.k},         {"r_min", a.r_min}, {"r_max", a.r_max},
                            {"which", a.which}, {"tol", a.tol},     {"seed", a.seed},
                            {"max_vertices", a.max_vertices}};
  LanczosOptions opts;
  opts.tol = a.tol;
  opts.seed = a.seed;
  std::vector<double> rs, values;
  std::ostringstream csv;
  csv << "r,vertices,eigenvalue,residual,gap\n";
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const std::size_t r = a.r_min + i;
    const Graph& g = graphs[i];
    double value;
    double residual = 0.0;
    if (g.num_vertices() < 2) {
      value = 0.0;
    } else {
      auto res = extremal_eigenvalues(adjacency(g), a.which == "min" ? Which::min : Which::max, opts);
      const auto& est = a.which == "min" ? *res.min : *res.max;
      value = est.value;
      residual = est.residual;
    }
    csv << r << ',' << g.num_vertices() << ',' << format_number(value) << ',' << format_number(residual) << ','
        << format_number(3.0 - std::abs(value)) << '\n';
    if (r > 0) {
      rs.push_back(static_cast<double>(r));
      values.push_back(value);
    }
  }
  run.write("gapscan.csv", [&](std::ostream& os) { os << csv.str(); });
  if (rs.size() >= 5) {
    auto fit = fit_gap_curve(rs, values, a.which == "min" ? 1 : -1);
    run.write("fit.json", [&](std::ostream& os) { write_fit_json(os, fit); });
    std::cout << "asymptote " << format_number(fit.A) << ", asymptotic gap " << format_number(fit.asymptotic_gap())
              << '\n';
  } else {
    run.manifest["fit"] = "skipped: fewer than 5 radii";
    std::cout << "fit skipped: fewer than 5 radii\n";
  }
  run.finish();
}

// ---------------------------------------------------------------- bounds

struct BoundsArgs {
  int k_min = 7, k_max = 30;
  std::string out_dir = "out";
};

void run_bounds(const BoundsArgs& a) {
  if (a.k_min < 7 || a.k_max < a.k_min) throw UsageError("need 7 <= --k-min <= --k-max");
  Run run("bounds", a.out_dir);
  run.manifest["config"] = {{"k_min", a.k_min}, {"k_max", a.k_max}};
  run.write("bounds.csv", [&](std::ostream& os) { write_bounds_csv(os, a.k_min, a.k_max); });
  auto cat = maximal_gap_intervals();
  json j;
  for (const auto* gi : {&cat.mclaughlin, &cat.ramanujan, &cat.hoffman_planar}) {
    json comps = json::array();
    for (const auto& [lo, hi] : gi->components) comps.push_back({lo, hi});
    j["gap_intervals"][gi->name] = comps;
  }
  j["mclaughlin_endpoints"] = {{"b", cat.b}, {"b_prime", cat.b_prime}, {"c", cat.c}, {"c_prime", cat.c_prime}};
  for (int r = 2; r <= 5; ++r) j["appendix_d_bound"][std::to_string(r)] = appendix_d_bound(r);
  run.write_json("intervals.json", j);
  run.finish();
  std::cout << "wrote " << (run.dir / "bounds.csv").string() << '\n';
}

// ---------------------------------------------------------------- flatstate

struct FlatstateArgs {
  std::string graph;
  std::string flavor = "s";
  std::string parity;
  std::size_t max_len = 14;
  std::string cycle;
  std::string out_dir = "out";
};

void run_flatstate(const FlatstateArgs& a) {
  if (a.flavor != "s" && a.flavor != "a") throw UsageError("--flavor must be s or a");
  Parity parity = a.flavor == "s" ? Parity::even : Parity::any;
  if (!a.parity.empty()) {
    if (a.parity == "even") parity = Parity::even;
    else if (a.parity == "odd") parity = Parity::odd;
    else if (a.parity == "any") parity = Parity::any;
    else throw UsageError("--parity must be even, odd or any");
  }
  Run run("flatstate", a.out_dir);
  run.manifest["config"] = {{"graph", a.graph}, {"flavor", a.flavor}, {"parity", a.parity},
                            {"max_len", a.max_len}, {"cycle", a.cycle}};
  run.input(a.graph);
  auto parsed = read_graph_file(a.graph);
  const Graph& g = parsed.graph;

  std::vector<Vertex> cycle;
  if (!a.cycle.empty()) {
    for (const auto& tok : split(a.cycle, ',')) {
      try {
        cycle.push_back(static_cast<Vertex>(std::stoul(tok)));
      } catch (const std::logic_error&) {
        throw UsageError("--cycle takes comma-separated vertex ids");
      }
    }
  } else {
    auto found = find_cycle(g, parity, a.max_len);
    if (!found) throw InputError("no cycle of the requested parity within --max-len");
    cycle = *found;
  }

  OrientedGraph og = parsed.flips ? OrientedGraph(g, *parsed.flips) : OrientedGraph::with_default_orientation(g);
  EdgeState st = a.flavor == "s" ? compact_state_s(g, cycle) : compact_state_a(og, cycle);
  HamiltonianOptions hopts;
  if (a.flavor == "a") hopts.orientation = og;
  auto h = effective_hamiltonian(g, st.flavor, hopts);
  const auto exact = exact_residual(h, st.integer_vector(), -2);
  const double residual = verify_eigenstate(h, st.normalized(), -2.0);
  run.write("state.txt", [&](std::ostream& os) { write_state(os, st); });
  json summary = {{"cycle_length", cycle.size()}, {"exact_residual_squared", exact}, {"residual", residual}};
  run.write_json("summary.json", summary);
  run.finish();
  std::cout << summary.dump(2) << '\n';
  if (exact != 0) throw NumericError("state is not an exact eigenvector");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"line-graph lattice spectra"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "cap on worker threads (0 = runtime default)")->check(CLI::NonNegativeNumber);

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "generate a graph");
  g->add_option("kind", gen.family,
                "tessellation | euclidean | tree | c60 | complete | cycle | petersen | line | subdivision | hoffman")
      ->required();
  g->add_option("--k", gen.k, "polygon size for tessellation");
  g->add_option("--r", gen.r, "radius for tessellation or tree");
  g->add_option("--n", gen.n, "vertex count for complete or cycle");
  g->add_option("--family", gen.lattice, "lattice family for euclidean");
  g->add_option("--size", gen.size, "cells N1 N2")->expected(2);
  g->add_option("--boundary", gen.boundary, "open | torus");
  g->add_option("--input", gen.input, "graph file for line | subdivision | hoffman");
  g->add_option("--out-dir", gen.out_dir);

  SpectrumArgs spec;
  auto* s = app.add_subcommand("spectrum", "eigenvalues of A, H_s or H_a");
  s->add_option("graph", spec.graph)->required();
  s->add_option("--flavor", spec.flavor, "layout | s | a");
  s->add_option("--mode", spec.mode, "dense | extremal");
  s->add_option("--tol", spec.tol);
  s->add_option("--bin-width", spec.bin_width);
  s->add_option("--seed", spec.seed);
  s->add_option("--max-dim-dense", spec.max_dim_dense);
  s->add_option("--max-dim-extremal", spec.max_dim_extremal);
  s->add_option("--out-dir", spec.out_dir);

  BandsArgs bands;
  auto* b = app.add_subcommand("bands", "Bloch band structure and flat-band census");
  b->add_option("family", bands.family)->required();
  b->add_option("--flavor", bands.flavor, "layout | s | a (s, a use the line lattice)");
  b->add_option("--path", bands.path, "k-points k1:k2 separated by commas, fractions allowed");
  b->add_option("--samples", bands.samples, "samples per segment")->delimiter(',');
  b->add_option("--grid", bands.grid, "N for the N x N census grid");
  b->add_option("--flat-tol", bands.flat_tol);
  b->add_option("--out-dir", bands.out_dir);

  GapscanArgs scan;
  auto* gs = app.add_subcommand("gapscan", "extremal eigenvalues of S_r(T_k) over r and a fit");
  gs->add_option("--k", scan.k, "polygon size, or inf for the 3-regular tree");
  gs->add_option("--r-min", scan.r_min);
  gs->add_option("--r-max", scan.r_max);
  gs->add_option("--which", scan.which, "min | max");
  gs->add_option("--tol", scan.tol);
  gs->add_option("--seed", scan.seed);
  gs->add_option("--max-vertices", scan.max_vertices);
  gs->add_option("--out-dir", scan.out_dir);

  BoundsArgs bnd;
  auto* bo = app.add_subcommand("bounds", "closed-form bounds table");
  bo->add_option("--k-min", bnd.k_min);
  bo->add_option("--k-max", bnd.k_max);
  bo->add_option("--out-dir", bnd.out_dir);

  FlatstateArgs fs_args;
  auto* f = app.add_subcommand("flatstate", "compact-support eigenstate at -2");
  f->add_option("graph", fs_args.graph)->required();
  f->add_option("--flavor", fs_args.flavor, "s | a");
  f->add_option("--parity", fs_args.parity, "even | odd | any");
  f->add_option("--max-len", fs_args.max_len);
  f->add_option("--cycle", fs_args.cycle, "explicit cycle v0,v1,...");
  f->add_option("--out-dir", fs_args.out_dir);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#endif

  try {
    if (*g) run_gen(gen);
    if (*s) run_spectrum(spec);
    if (*b) run_bands(bands);
    if (*gs) run_gapscan(scan);
    if (*bo) run_bounds(bnd);
    if (*f) run_flatstate(fs_args);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 3;
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return 5;
  } catch (const NumericError& e) {
    std::cerr << "numeric error: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  }
  return 0;
}
