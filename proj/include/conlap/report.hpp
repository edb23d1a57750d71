#pragma once

#include <string>
#include <vector>

#include "conlap/functionals.hpp"

namespace conlap {

struct Check {
  std::string name;
  bool passed = true;
  std::string witness;  ///< first offending face or entry when failed
};

/// Every invariant of one complex plus the verdict of each identity.
struct Report {
  std::string name;
  FVector fvector;
  FVector fvector_refined;
  std::int64_t chi = 0;
  int fermi = 1;
  EtaBundle eta;
  std::int64_t eta0 = 0;  ///< on the 1-skeleton graph
  std::int64_t trace_L = 0;
  std::int64_t trace_g = 0;
  std::int64_t energy = 0;
  std::vector<std::int64_t> betti;
  Inertia inertia;
  std::vector<std::int64_t> sphere_chi_refined;  ///< chi(S(x)) over G1, canonical face order
  std::vector<Check> checks;

  bool all_passed() const;
  const Check* find(const std::string& check_name) const;
};

struct SuiteOptions {
  bool homology = true;  ///< Hodge Laplacian and Betti numbers
  bool spectrum = true;  ///< exact inertia
  Exec exec = Exec::serial;
};

/// Runs every identity on K. Failures are recorded, never thrown.
Report identity_suite(const SimplicialComplex& k, const std::string& name = "",
                      const SuiteOptions& options = {});

/// Graph on the vertices and edges of K.
Graph one_skeleton(const SimplicialComplex& k);

/// Stable-key JSON object for one report (schema 1).
std::string report_json(const Report& r, int indent = 2);
std::string report_csv_header();
std::string report_csv_row(const Report& r);

}  // namespace conlap
