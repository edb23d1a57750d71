#include "conlap/report.hpp"

#include <json.hpp>

namespace conlap {

bool Report::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

const Check* Report::find(const std::string& check_name) const {
  for (const auto& c : checks)
    if (c.name == check_name) return &c;
  return nullptr;
}

Graph one_skeleton(const SimplicialComplex& k) {
  std::vector<Edge> edges;
  auto [b, e] = k.dimension_range(1);
  for (std::size_t i = b; i < e; ++i) edges.emplace_back(k.face(i).vertices()[0], k.face(i).vertices()[1]);
  return Graph(k.vertices(), edges);
}

namespace {

class Recorder {
 public:
  explicit Recorder(std::vector<Check>& out) : out_(out) {}
  void operator()(std::string name, bool ok, std::string witness = {}) {
    out_.push_back(Check{std::move(name), ok, ok ? std::string() : std::move(witness)});
  }

 private:
  std::vector<Check>& out_;
};

std::string eq_witness(const BigInt& lhs, const BigInt& rhs) { return lhs.get_str() + " != " + rhs.get_str(); }

}  // namespace

Report identity_suite(const SimplicialComplex& k, const std::string& name, const SuiteOptions& opt) {
  Report r;
  r.name = name;
  Recorder check(r.checks);
  const std::size_t n = k.size();
  const auto parity = k.parities();

  r.fvector = f_vector(k);
  r.chi = euler_characteristic(k);
  r.fermi = fermi_characteristic(k);
  const BigInt chi = r.chi;
  {
    GenPoly f = generating_function(k, false);
    check("chi_generating", f(Rational(0)) - f(Rational(-1)) == Rational(chi));
  }

  const IntMatrix l = connection_laplacian(k);
  const BigInt det = determinant(l, opt.exec);
  check("det_equals_fermi", det == r.fermi && (det == 1 || det == -1),
        "det L = " + det.get_str() + ", fermi = " + std::to_string(r.fermi));

  IntMatrix g;
  try {
    g = unimodular_inverse(l, opt.exec);
  } catch (const UnimodularityError& e) {
    check("green_inverse", false, e.what());
    return r;
  }
  {
    IntMatrix prod = l * g;
    std::string w;
    for (std::size_t i = 0; i < n && w.empty(); ++i)
      for (std::size_t j = 0; j < n && w.empty(); ++j)
        if (prod(i, j) != (i == j ? 1 : 0))
          w = "(L g)(" + std::to_string(i) + "," + std::to_string(j) + ") = " + prod(i, j).get_str();
    check("green_inverse", w.empty(), w);
  }

  const LabeledGraph g1 = barycentric_refinement(k);
  const LabeledGraph gp = connection_graph(k);
  r.sphere_chi_refined = sphere_euler_characteristics(g1.graph);
  {
    std::string w;
    for (std::size_t x = 0; x < n && w.empty(); ++x)
      if (g(x, x) != 1 - r.sphere_chi_refined[x])
        w = "face " + k.face(x).to_string() + ": g = " + g(x, x).get_str() +
            ", 1 - chi(S) = " + std::to_string(1 - r.sphere_chi_refined[x]);
    check("green_diagonal", w.empty(), w);
  }

  const BigInt esum = entry_sum(g);
  r.energy = to_int64(esum);
  check("energy_theorem", esum == chi, eq_witness(esum, chi));
  const BigInt str_l = super_trace(l, parity), str_g = super_trace(g, parity);
  check("super_trace_L", str_l == chi, eq_witness(str_l, chi));
  check("super_trace_g", str_g == chi, eq_witness(str_g, chi));
  {
    auto v = face_potential(g);
    std::string w;
    BigInt total = 0;
    for (std::size_t x = 0; x < n; ++x) {
      total += v[x];
      if (w.empty() && v[x] != parity[x] * g(x, x))
        w = "face " + k.face(x).to_string() + ": V = " + v[x].get_str();
    }
    if (w.empty() && total != chi) w = "sum V = " + total.get_str();
    check("potential_curvature", w.empty(), w);
  }

  const BigInt tr_l = trace(l), tr_g = trace(g);
  r.trace_L = to_int64(tr_l);
  r.trace_g = to_int64(tr_g);

  r.fvector_refined = clique_f_vector(g1.graph, opt.exec);
  const GenPoly f1 = generating_function(r.fvector_refined, true);
  r.eta.trace = to_int64(tr_l - tr_g);
  r.eta.gauss_bonnet = 0;
  for (auto c : r.sphere_chi_refined) r.eta.gauss_bonnet += c;
  r.eta.generating = to_int64(derivative_gap(f1).get_num());
  {
    BigInt s = 0;
    for (std::size_t d = 1; d < r.fvector_refined.size(); ++d) {
      BigInt w = static_cast<long>(d + 1);
      s += (d % 2 == 1) ? w * r.fvector_refined[d] : BigInt(-w * r.fvector_refined[d]);
    }
    r.eta.curvature_g2 = to_int64(s);
  }
  {
    // -sum_i <A_i, g A_i>; A = L - 1
    BigInt s = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t a = 0; a < n; ++a) {
        if (a == i || l(a, i) == 0) continue;
        for (std::size_t b = 0; b < n; ++b)
          if (b != i && l(b, i) != 0) s += g(a, b);
      }
    r.eta.column = to_int64(-s);
  }
  check("eta_bundle", r.eta.all_equal(),
        "trace " + std::to_string(r.eta.trace) + ", gauss_bonnet " + std::to_string(r.eta.gauss_bonnet) +
            ", generating " + std::to_string(r.eta.generating) + ", curvature_g2 " +
            std::to_string(r.eta.curvature_g2) + ", column " + std::to_string(r.eta.column));
  {
    Rational fp = f1.derivative()(Rational(-1));
    check("green_trace_generating", fp == Rational(tr_g), "f1'(-1) = " + to_string(fp));
  }
  check("refinement_euler", euler_characteristic(r.fvector_refined) == r.chi);
  {
    FVector predicted = apply_barycentric_operator(r.fvector);
    check("barycentric_operator", predicted == r.fvector_refined,
          predicted.to_string() + " != " + r.fvector_refined.to_string());
  }
  {
    // eta <= (1 + d) * #{positive-dimensional faces of G1}
    BigInt positive = r.fvector_refined.total() - (r.fvector_refined.size() ? r.fvector_refined[0] : BigInt(0));
    BigInt bound = positive * static_cast<long>(k.dimension() + 1);
    check("eta_upper_bound", BigInt(r.eta.trace) <= bound, std::to_string(r.eta.trace) + " > " + bound.get_str());
  }
  {
    BigInt total = entry_sum(l);
    BigInt expect = BigInt(static_cast<unsigned long>(gp.graph.vertex_count())) +
                    2 * BigInt(static_cast<unsigned long>(gp.graph.edge_count()));
    check("handshake", total == expect, eq_witness(total, expect));
  }
  {
    std::string w;
    for (const auto& [u, v] : g1.graph.edges())
      if (w.empty() && !gp.graph.adjacent(*gp.graph.index_of(u), *gp.graph.index_of(v)))
        w = "edge " + k.face(u).to_string() + "-" + k.face(v).to_string();
    check("refinement_subgraph", w.empty(), w);
  }
  {
    BigInt wt = wu_characteristic_trace(k), ws = wu_characteristic_sum(k);
    check("wu_trace_sum", wt == ws, eq_witness(wt, ws));
  }
  {
    Rational z = bowen_lanford_zeta(k, Rational(-1));
    check("zeta_minus_one", z == Rational(det), "zeta(-1) = " + to_string(z));
  }

  if (opt.homology) {
    IntMatrix h = hodge_laplacian(k);
    BigInt sh = super_trace(h, parity);
    check("hodge_super_trace", sh == 0, "str H = " + sh.get_str());
    r.betti = betti_numbers(k);
    std::int64_t ep = 0;
    for (std::size_t i = 0; i < r.betti.size(); ++i) ep += (i % 2 == 0) ? r.betti[i] : -r.betti[i];
    check("euler_poincare", ep == r.chi, std::to_string(ep) + " != " + std::to_string(r.chi));
  }
  if (opt.spectrum) {
    r.inertia = inertia(l);
    check("inertia_nonsingular", r.inertia.zero == 0, std::to_string(r.inertia.zero) + " zero eigenvalues");
  }
  r.eta0 = eta0(one_skeleton(k));
  return r;
}

namespace {

nlohmann::json fvec_json(const FVector& f) {
  auto a = nlohmann::json::array();
  for (const auto& c : f.counts) {
    if (c.fits_slong_p()) a.push_back(c.get_si());
    else a.push_back(c.get_str());
  }
  return a;
}

}  // namespace

std::string report_json(const Report& r, int indent) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["name"] = r.name;
  j["fvector"] = fvec_json(r.fvector);
  j["fvector_refined"] = fvec_json(r.fvector_refined);
  j["chi"] = r.chi;
  j["fermi"] = r.fermi;
  j["eta"] = r.eta.trace;
  j["eta0"] = r.eta0;
  j["eta1"] = r.eta.gauss_bonnet;
  j["eta_generating"] = r.eta.generating;
  j["eta_column"] = r.eta.column;
  j["eta_curvature_g2"] = r.eta.curvature_g2;
  j["trace_L"] = r.trace_L;
  j["trace_g"] = r.trace_g;
  j["energy"] = r.energy;
  j["betti"] = r.betti;
  j["inertia"] = {{"negative", r.inertia.negative}, {"zero", r.inertia.zero}, {"positive", r.inertia.positive}};
  j["sphere_chi_refined"] = r.sphere_chi_refined;
  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json cj;
    cj["name"] = c.name;
    cj["passed"] = c.passed;
    if (!c.passed) cj["witness"] = c.witness;
    checks.push_back(cj);
  }
  j["checks"] = checks;
  return j.dump(indent);
}

std::string report_csv_header() {
  return "name,fvector,fvector_refined,chi,fermi,eta,eta0,eta1,eta_generating,eta_column,trace_L,trace_g,"
         "energy,betti,inertia,checks";
}

std::string report_csv_row(const Report& r) {
  auto join = [](const std::vector<std::int64_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
  };
  auto fv = [](const FVector& f) {
    std::string s;
    for (std::size_t i = 0; i < f.size(); ++i) s += (i ? " " : "") + f[i].get_str();
    return s;
  };
  std::size_t passed = 0;
  for (const auto& c : r.checks) passed += c.passed;
  return r.name + "," + fv(r.fvector) + "," + fv(r.fvector_refined) + "," + std::to_string(r.chi) + "," +
         std::to_string(r.fermi) + "," + std::to_string(r.eta.trace) + "," + std::to_string(r.eta0) + "," +
         std::to_string(r.eta.gauss_bonnet) + "," + std::to_string(r.eta.generating) + "," +
         std::to_string(r.eta.column) + "," + std::to_string(r.trace_L) + "," + std::to_string(r.trace_g) + "," +
         std::to_string(r.energy) + "," + join(r.betti) + "," + std::to_string(r.inertia.negative) + " " +
         std::to_string(r.inertia.zero) + " " + std::to_string(r.inertia.positive) + "," +
         std::to_string(passed) + "/" + std::to_string(r.checks.size());
}

}  // namespace conlap
