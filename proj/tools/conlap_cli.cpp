// conlap: command-line front end for the connection Laplacian engine.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "conlap/constructions.hpp"
#include "conlap/functionals.hpp"
#include "conlap/io.hpp"
#include "conlap/linalg.hpp"
#include "conlap/report.hpp"
#include "conlap/search.hpp"
#include "conlap/topology.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace conlap;
using ojson = nlohmann::ordered_json;

namespace {

enum Exit { ok = 0, usage = 1, falsified = 2, too_big = 3 };

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct TooBig : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputSpec {
  std::string gen;
  std::size_t n = 0, m = 0;
  std::string p = "1/2";
  std::uint64_t seed = 0;
  std::string facets;
  std::string input;

  void attach(CLI::App* cmd) {
    cmd->add_option("--gen", gen, "generator name (kn cn path edgeless star wheel knm house "
                                  "octahedron cross16 doublepyramid fig8 moebius prime er)");
    cmd->add_option("--n", n, "generator size");
    cmd->add_option("--m", m, "second generator size (knm)");
    cmd->add_option("--p", p, "edge probability, e.g. 1/2 or 0.3 (er)");
    cmd->add_option("--seed", seed, "PRNG seed (er)");
    cmd->add_option("--facets", facets, "complex as a JSON list of facets");
    cmd->add_option("--input", input, "file: complex JSON, graph JSON or edge list");
  }

  gen::Params params() const { return {n, m, parse_rational(p), seed}; }
};

struct Loaded {
  std::string name;
  SimplicialComplex complex;
  std::optional<Graph> graph;
};

Loaded load(const InputSpec& s) {
  const int sources = !s.gen.empty() + !s.facets.empty() + !s.input.empty();
  if (sources != 1) throw Usage("give exactly one of --gen, --facets, --input");
  if (!s.gen.empty()) {
    Graph g = gen::named(s.gen, s.params());
    return {s.gen, whitney_complex(g), std::move(g)};
  }
  if (!s.facets.empty()) {
    std::string text = "{\"facets\": " + s.facets + "}";
    return {"facets", parse_complex_json(text), std::nullopt};
  }
  Input in = load_input_file(s.input);
  if (auto* g = std::get_if<Graph>(&in)) return {s.input, whitney_complex(*g), *g};
  return {s.input, std::get<SimplicialComplex>(std::move(in)), std::nullopt};
}

std::string fixed6(double x) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << (x == 0.0 ? 0.0 : x);
  return os.str();
}

std::string join(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return "(" + s + ")";
}

void guard_matrix(std::size_t n, std::size_t cap) {
  if (n > cap)
    throw TooBig("matrix of order " + std::to_string(n) + " exceeds the cap of " + std::to_string(cap));
}

void print_report_text(const Report& r, std::ostream& os) {
  os << "name        " << r.name << '\n'
     << "f-vector    " << r.fvector.to_string() << '\n'
     << "G1 f-vector " << r.fvector_refined.to_string() << '\n'
     << "chi         " << r.chi << '\n'
     << "fermi       " << r.fermi << '\n'
     << "tr L        " << r.trace_L << '\n'
     << "tr g        " << r.trace_g << '\n'
     << "eta         " << r.eta.trace << '\n'
     << "eta0        " << r.eta0 << '\n'
     << "energy      " << r.energy << '\n'
     << "betti       " << join(r.betti) << '\n'
     << "inertia     " << r.inertia.negative << ' ' << r.inertia.zero << ' ' << r.inertia.positive
     << '\n';
  for (const auto& c : r.checks) {
    os << (c.passed ? "pass " : "FAIL ") << c.name;
    if (!c.passed && !c.witness.empty()) os << "  " << c.witness;
    os << '\n';
  }
}

std::vector<std::pair<std::string, Graph>> default_corpus() {
  return {
      {"k1", gen::complete(1)},          {"k4", gen::complete(4)},
      {"c5", gen::cycle(5)},             {"path4", gen::path(4)},
      {"star4", gen::star(4)},           {"wheel6", gen::wheel(6)},
      {"k23", gen::complete_bipartite(2, 3)},
      {"house", gen::house()},           {"octahedron", gen::octahedron()},
      {"cross16", gen::cross16()},       {"doublepyramid", gen::double_pyramid()},
      {"fig8", gen::figure_eight(4)},    {"moebius7", gen::moebius(7)},
      {"prime30", gen::prime_graph(30)},
  };
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact connection Laplacian calculus for simplicial complexes"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");
  app.fallthrough();

  int threads = 0;
  if (const char* env = std::getenv("ETA_THREADS")) threads = std::atoi(env);
  std::string format = "text";
  std::string output;
  app.add_option("--threads", threads, "OpenMP threads (default: ETA_THREADS or all cores)");
  app.add_option("-o,--output", output, "write results to this file instead of stdout");
  const auto formats = CLI::IsMember({"text", "json", "csv"});

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "print a generated graph");
  InputSpec gen_in;
  bool gen_whitney = false;
  gen_in.attach(gen_cmd);
  gen_cmd->add_option("--format", format)->check(formats);
  gen_cmd->add_flag("--whitney", gen_whitney, "emit the Whitney complex instead of the graph");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "run the identity suite on one complex");
  InputSpec an_in;
  bool an_no_homology = false;
  an_in.attach(analyze);
  analyze->add_option("--format", format)->check(formats);
  analyze->add_flag("--no-homology", an_no_homology, "skip Hodge Laplacian and Betti numbers");

  // refine
  auto* refine = app.add_subcommand("refine", "iterate the Barycentric refinement");
  InputSpec ref_in;
  int iterations = 1;
  std::size_t refine_cap = 20000;
  bool dump = false;
  ref_in.attach(refine);
  refine->add_option("--iterations", iterations)->check(CLI::PositiveNumber);
  refine->add_option("--cap", refine_cap, "abort when a refinement would exceed this many faces");
  refine->add_flag("--dump", dump, "also print the final refined complex");
  refine->add_option("--format", format)->check(formats);

  // matrix
  auto* matrix = app.add_subcommand("matrix", "dump L, g, A, J, H or boundary:k");
  InputSpec mat_in;
  std::string which = "L";
  std::size_t matrix_cap = 5000;
  mat_in.attach(matrix);
  matrix->add_option("--which", which);
  matrix->add_option("--cap", matrix_cap, "largest matrix order allowed");
  matrix->add_option("--format", format)->check(formats);

  // spectrum
  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues of L and exact inertia");
  InputSpec sp_in;
  double tol = 1e-10;
  spectrum->add_option("--tol", tol)->check(CLI::PositiveNumber);
  spectrum->add_option("--cap", matrix_cap);
  sp_in.attach(spectrum);
  spectrum->add_option("--format", format)->check(formats);

  // verify
  auto* verify = app.add_subcommand("verify", "identity suite over a corpus");
  std::size_t er_count = 20, er_n = 8;
  std::string er_p = "1/2";
  std::uint64_t er_seed = 1;
  bool no_named = false;
  verify->add_option("--er", er_count, "number of seeded random Whitney complexes");
  verify->add_option("--n", er_n, "vertices per random graph");
  verify->add_option("--p", er_p, "edge probability");
  verify->add_option("--seed", er_seed, "first seed; instance i uses seed + i");
  verify->add_flag("--no-named", no_named, "skip the named generators");
  verify->add_option("--format", format)->check(formats);

  // search
  auto* search = app.add_subcommand("search", "stochastic and exhaustive searches");
  std::string objective = "max-green-trace";
  std::size_t faces = 26, chains = 8, max_vertices = 4, max_faces = 10, random = 0, random_n = 8;
  double budget = 1e4;
  std::uint64_t search_seed = 1;
  bool timing = false;
  search->add_option("--objective", objective)
      ->check(CLI::IsMember({"min-eta", "max-green-trace", "neg-eig", "variety"}));
  search->add_option("--faces", faces)->check(CLI::PositiveNumber);
  search->add_option("--budget", budget, "candidate evaluations (accepts 1e4)")->check(CLI::NonNegativeNumber);
  search->add_option("--seed", search_seed);
  search->add_option("--chains", chains)->check(CLI::PositiveNumber);
  search->add_option("--max-vertices", max_vertices, "scan corpus: graph classes up to this size");
  search->add_option("--max-faces", max_faces, "neg-eig corpus: face limit");
  search->add_option("--random", random, "neg-eig corpus: seeded random complexes");
  search->add_option("--random-n", random_n, "neg-eig corpus: vertices per random graph");
  search->add_flag("--timing", timing, "include wall time in the output");

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "connected graph classes and eta0 extremes");
  std::size_t k = 4;
  bool extremal = false, audit = false;
  enumerate->add_option("--k", k, "number of vertices");
  enumerate->add_flag("--extremal", extremal, "min and max eta0 over C(k)");
  enumerate->add_flag("--audit", audit, "compare the published eta0 table with exhaustive values");
  enumerate->add_option("--format", format)->check(formats);

  // expect
  auto* expect = app.add_subcommand("expect", "expected Euler characteristic of G(n,p)");
  std::size_t ex_n = 8, trials = 0;
  std::string ex_p = "1/2";
  std::uint64_t ex_seed = 1;
  expect->add_option("--n", ex_n);
  expect->add_option("--p", ex_p);
  expect->add_option("--trials", trials, "Monte-Carlo samples (0: closed form only)");
  expect->add_option("--seed", ex_seed);
  expect->add_option("--format", format)->check(formats);

  // mertens
  auto* mert = app.add_subcommand("mertens", "chi of the prime graph against 1 - M(n)");
  std::uint32_t mert_max = 60;
  mert->add_option("--max", mert_max, "check n = 2..max")->check(CLI::Range(2u, 100000u));
  mert->add_option("--format", format)->check(formats);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? Exit::ok : Exit::usage;
  }

#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#endif

  std::ofstream file;
  if (!output.empty()) {
    file.open(output);
    if (!file) {
      std::cerr << "cannot open " << output << '\n';
      return Exit::usage;
    }
  }
  std::ostream& out = output.empty() ? std::cout : file;
  try {
    if (gen_cmd->parsed()) {
      Loaded in = load(gen_in);
      if (gen_whitney || !in.graph)
        out << complex_to_json(in.complex) << '\n';
      else if (format == "json")
        out << graph_to_json(*in.graph) << '\n';
      else
        out << graph_to_edge_list(*in.graph);
      return Exit::ok;
    }

    if (analyze->parsed()) {
      Loaded in = load(an_in);
      guard_matrix(in.complex.size(), matrix_cap);
      SuiteOptions opts;
      opts.homology = !an_no_homology;
      opts.exec = Exec::parallel;
      Report r = identity_suite(in.complex, in.name, opts);
      if (format == "json")
        out << report_json(r) << '\n';
      else if (format == "csv")
        out << report_csv_header() << '\n' << report_csv_row(r) << '\n';
      else
        print_report_text(r, out);
      return r.all_passed() ? Exit::ok : Exit::falsified;
    }

    if (refine->parsed()) {
      Loaded in = load(ref_in);
      SimplicialComplex cur = in.complex;
      ojson steps = ojson::array();
      for (int i = 1; i <= iterations; ++i) {
        const BigInt projected = apply_barycentric_operator(f_vector(cur)).total();
        if (projected > refine_cap)
          throw TooBig("refinement " + std::to_string(i) + " would have " + projected.get_str() +
                       " faces, above the cap of " + std::to_string(refine_cap));
        cur = whitney_complex(barycentric_refinement(cur).graph);
        FVector f = f_vector(cur);
        if (format == "json") {
          ojson counts = ojson::array();
          for (const auto& c : f.counts) counts.push_back(to_int64(c));
          steps.push_back({{"iteration", i}, {"fvector", counts}});
        } else if (format == "csv") {
          if (i == 1) out << "iteration,fvector\n";
          out << i << ",\"" << f.to_string() << "\"\n";
        } else {
          out << "G" << i << " f-vector " << f.to_string() << '\n';
        }
      }
      if (format == "json") {
        ojson j{{"schema", 1}, {"iterations", steps}};
        if (dump) j["complex"] = ojson::parse(complex_to_json(cur));
        out << j.dump(2) << '\n';
      } else if (dump) {
        out << complex_to_json(cur) << '\n';
      }
      return Exit::ok;
    }

    if (matrix->parsed()) {
      Loaded in = load(mat_in);
      guard_matrix(in.complex.size(), matrix_cap);
      IntMatrix m;
      if (which == "L")
        m = connection_laplacian(in.complex);
      else if (which == "g")
        m = green_function(in.complex);
      else if (which == "A")
        m = connection_adjacency(in.complex);
      else if (which == "J")
        m = checkerboard(in.complex);
      else if (which == "H")
        m = hodge_laplacian(in.complex);
      else if (which == "D")
        m = exterior_boundary(in.complex);
      else if (which.rfind("boundary:", 0) == 0) {
        int dim = 0;
        try {
          dim = std::stoi(which.substr(9));
        } catch (const std::exception&) {
          throw Usage("bad selector '" + which + "'");
        }
        if (dim < 1 || dim > in.complex.dimension())
          throw Usage("boundary dimension must lie in [1, " + std::to_string(in.complex.dimension()) + "]");
        m = boundary_operator(in.complex, dim);
      } else {
        throw Usage("unknown matrix '" + which + "' (use L, g, A, J, H, D or boundary:k)");
      }
      out << (format == "json" ? to_json(m) + "\n" : to_text(m));
      return Exit::ok;
    }

    if (spectrum->parsed()) {
      Loaded in = load(sp_in);
      guard_matrix(in.complex.size(), matrix_cap);
      IntMatrix lap = connection_laplacian(in.complex);
      std::vector<double> ev = float_spectrum(lap, tol);
      Inertia in_ = inertia(lap);
      if (format == "json") {
        ojson vals = ojson::array();
        for (double x : ev) vals.push_back(std::stod(fixed6(x)));
        ojson j{{"schema", 1},
                {"eigenvalues", vals},
                {"inertia", {{"negative", in_.negative}, {"zero", in_.zero}, {"positive", in_.positive}}}};
        out << j.dump(2) << '\n';
      } else if (format == "csv") {
        out << "index,eigenvalue\n";
        for (std::size_t i = 0; i < ev.size(); ++i) out << i << ',' << fixed6(ev[i]) << '\n';
      } else {
        for (double x : ev) out << fixed6(x) << '\n';
        out << "inertia " << in_.negative << ' ' << in_.zero << ' ' << in_.positive << '\n';
      }
      return Exit::ok;
    }

    if (verify->parsed()) {
      std::vector<std::pair<std::string, SimplicialComplex>> corpus;
      if (!no_named)
        for (auto& [name, g] : default_corpus()) corpus.emplace_back(name, whitney_complex(g));
      const Rational p = parse_rational(er_p);
      for (std::size_t i = 0; i < er_count; ++i)
        corpus.emplace_back("er" + std::to_string(er_seed + i),
                            whitney_complex(gen::erdos_renyi(er_n, p, er_seed + i)));
      std::vector<Report> reports;
      for (const auto& [name, kx] : corpus) reports.push_back(identity_suite(kx, name));
      bool all = true;
      for (const auto& r : reports) all = all && r.all_passed();
      if (format == "json") {
        ojson arr = ojson::array();
        for (const auto& r : reports) arr.push_back(ojson::parse(report_json(r)));
        out << ojson{{"schema", 1}, {"passed", all}, {"reports", arr}}.dump(2) << '\n';
      } else if (format == "csv") {
        out << report_csv_header() << '\n';
        for (const auto& r : reports) out << report_csv_row(r) << '\n';
      } else {
        for (const auto& r : reports) {
          std::size_t passed = 0;
          for (const auto& c : r.checks) passed += c.passed;
          out << std::left << std::setw(16) << r.name << passed << '/' << r.checks.size();
          for (const auto& c : r.checks)
            if (!c.passed) out << "  FAIL " << c.name;
          out << '\n';
        }
        out << (all ? "all identities hold" : "identity failure") << " on " << reports.size()
            << " complexes\n";
      }
      return all ? Exit::ok : Exit::falsified;
    }

    if (search->parsed()) {
      SearchResult r;
      if (objective == "max-green-trace" || objective == "min-eta") {
        LocalSearchOptions o{faces, static_cast<std::size_t>(budget), search_seed, chains, threads};
        r = search_local(objective == "min-eta" ? Objective::min_eta : Objective::max_green_trace, o);
      } else if (objective == "neg-eig") {
        r = negative_eigenvalue_scan(
            negative_eigenvalue_corpus(max_vertices, max_faces, random, random_n, search_seed), threads);
        r.seed = search_seed;
      } else {
        r = variety_eta_scan(variety_corpus(max_vertices), threads);
        r.seed = search_seed;
      }
      out << search_result_json(r, 2, timing) << '\n';
      return Exit::ok;
    }

    if (enumerate->parsed()) {
      if (audit) {
        auto rows = audit_eta0_table();
        if (format == "json") {
          ojson arr = ojson::array();
          for (const auto& row : rows)
            arr.push_back({{"k", row.k},
                           {"printed", {row.printed_min, row.printed_max}},
                           {"computed", {row.computed_min, row.computed_max}},
                           {"matches", row.matches()}});
          out << ojson{{"schema", 1}, {"rows", arr}}.dump(2) << '\n';
        } else {
          out << audit_text(rows);
        }
        return Exit::ok;
      }
      if (extremal) {
        ExtremalResult r = extremal_eta0(k);
        if (format == "json") {
          out << ojson{{"schema", 1},
                       {"k", r.k},
                       {"graphs", r.graphs},
                       {"min", r.min},
                       {"max", r.max},
                       {"min_witness", ojson::parse(graph_to_json(r.min_witness))},
                       {"max_witness", ojson::parse(graph_to_json(r.max_witness))}}
                     .dump(2)
              << '\n';
        } else {
          out << "C(" << r.k << "): " << r.graphs << " graphs, " << r.min << " <= eta0 <= " << r.max
              << '\n'
              << "min witness:\n"
              << graph_to_edge_list(r.min_witness) << "max witness:\n"
              << graph_to_edge_list(r.max_witness);
        }
        return Exit::ok;
      }
      std::vector<Graph> graphs = enumerate_connected_graphs(k);
      if (format == "json") {
        ojson arr = ojson::array();
        for (const auto& g : graphs) arr.push_back(ojson::parse(graph_to_json(g)));
        out << ojson{{"schema", 1}, {"k", k}, {"count", graphs.size()}, {"graphs", arr}}.dump(2) << '\n';
      } else {
        for (const auto& g : graphs) {
          for (const auto& [u, v] : g.edges()) out << u << '-' << v << ' ';
          out << "eta0=" << eta0(g) << '\n';
        }
        out << graphs.size() << " connected graphs on " << k << " vertices\n";
      }
      return Exit::ok;
    }

    if (expect->parsed()) {
      const Rational p = parse_rational(ex_p);
      const Rational e = expectation_chi(ex_n, p);
      std::optional<MonteCarloEstimate> mc;
      if (trials > 0) mc = monte_carlo_chi(ex_n, p, trials, ex_seed, Exec::parallel);
      if (format == "json") {
        ojson j{{"schema", 1}, {"n", ex_n}, {"p", to_string(p)}, {"exact", to_string(e)},
                {"exact_float", std::stod(fixed6(e.get_d()))}};
        if (mc)
          j["monte_carlo"] = {{"trials", mc->trials},
                              {"seed", ex_seed},
                              {"mean", std::stod(fixed6(mc->mean))},
                              {"standard_error", std::stod(fixed6(mc->standard_error))}};
        out << j.dump(2) << '\n';
      } else {
        out << "E[chi] = " << to_string(e) << " = " << fixed6(e.get_d()) << '\n';
        if (mc)
          out << "Monte-Carlo mean " << fixed6(mc->mean) << " +- " << fixed6(mc->standard_error)
              << " over " << mc->trials << " samples\n";
      }
      return Exit::ok;
    }

    if (mert->parsed()) {
      const std::vector<int> mu = moebius_sieve(mert_max);
      bool all = true;
      ojson rows = ojson::array();
      if (format == "csv") out << "n,mu,M,chi,holds\n";
      std::int64_t m_sum = 1;  // mu(1)
      for (std::uint32_t n = 2; n <= mert_max; ++n) {
        m_sum += mu[n];
        const std::int64_t chi =
            euler_characteristic(clique_f_vector(gen::prime_graph(n)));
        const bool holds = chi == 1 - m_sum;
        all = all && holds;
        if (format == "json")
          rows.push_back({{"n", n}, {"mu", mu[n]}, {"M", m_sum}, {"chi", chi}, {"holds", holds}});
        else if (format == "csv")
          out << n << ',' << mu[n] << ',' << m_sum << ',' << chi << ',' << (holds ? 1 : 0) << '\n';
        else
          out << std::setw(6) << n << std::setw(4) << mu[n] << std::setw(6) << m_sum << std::setw(6)
              << chi << (holds ? "" : "  MISMATCH") << '\n';
      }
      if (format == "json") out << ojson{{"schema", 1}, {"holds", all}, {"rows", rows}}.dump(2) << '\n';
      return all ? Exit::ok : Exit::falsified;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return Exit::usage;
  } catch (const TooBig& e) {
    std::cerr << "size cap: " << e.what() << '\n';
    return Exit::too_big;
  } catch (const Usage& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return Exit::usage;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return Exit::usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return Exit::usage;
  }
  return Exit::ok;
}
