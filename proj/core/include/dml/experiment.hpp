#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "dml/closure.hpp"
#include "dml/density.hpp"
#include "dml/ideal.hpp"
#include "dml/orbit.hpp"

namespace dml {

struct AnalysisParams {
  /// Largest modulus tried by progression detection; 0 means ceil(sqrt(N)).
  std::size_t a_max = 0;
  std::size_t m_min = 5;
  std::size_t tail_start = 0;
  unsigned degree_cap = 4;
  std::size_t initial_samples = 4;
  std::size_t sample_budget = 64;
  std::size_t depth_limit = 3;
};

/// Problem data as written in an experiment file: a map phi on affine
/// space, a starting point alpha, a closed set V and a horizon N.
struct ExperimentSpec {
  FieldDescriptor field;
  std::vector<std::string> vars;
  std::vector<std::string> phi;
  std::vector<std::string> alpha;
  std::vector<std::string> variety;
  std::size_t horizon = 0;
  AnalysisParams analysis;
};

/// The parsed algebraic objects behind a spec.
struct ExperimentModel {
  MonomialOrder order;
  Morphism phi;
  RationalPoint alpha;
  std::vector<MultiPoly> variety;
  ReducedGroebnerBasis variety_basis;
};

/// Validates the spec and parses every expression.
ExperimentModel build_model(const ExperimentSpec& spec);

/// Reads the JSON experiment format:
///
///   {"field": "GF(2)(t)", "vars": ["x", "y"], "phi": ["t*x", "(1-t)*y"],
///    "alpha": ["1", "1"], "V": ["x+y-1"], "N": 1100,
///    "analysis": {"a_max": 33, "m_min": 5, ...}}
///
/// Omitted analysis keys take the AnalysisParams defaults; a_max is resolved
/// to ceil(sqrt(N)).
ExperimentSpec parse_experiment(std::string_view json_text);
ExperimentSpec load_experiment(const std::filesystem::path& path);

struct ProgressionReport {
  Progression progression;
  ClosureChain chain;
  /// W_b tested for invariance under phi^a.
  PeriodicityCertificate certificate;
  /// W_b lies inside V, so an invariant W_b forces the whole class into S.
  bool closure_in_variety = false;
  CaseSplitReport case_split;
};

struct ReportDocument {
  ExperimentSpec spec;
  ReturnSet return_set;
  DensityProfile profile;
  std::vector<ProgressionReport> progressions;
  Decomposition decomposition;
  std::vector<std::string> flags;
};

/// return set -> density profile -> progression detection -> closure chain,
/// certificate and case split per progression -> decomposition. Failures
/// are rethrown with the stage name prefixed.
ReportDocument run_experiment(const ExperimentSpec& spec);

struct DensityReport {
  ExperimentSpec spec;
  ReturnSet return_set;
  DensityProfile profile;
};

DensityReport run_density(const ExperimentSpec& spec);

struct CertifyReport {
  ExperimentSpec spec;
  Progression progression;
  /// Every member of the progression below N is in the return set.
  bool contained_at_horizon = false;
  ClosureIdeal closure;
  PeriodicityCertificate certificate;
  bool closure_in_variety = false;
};

CertifyReport run_certify(const ExperimentSpec& spec, std::size_t a, std::size_t b);

/// Pretty-printed JSON with a fixed key order and no volatile fields.
std::string to_json(const ReportDocument& report);
std::string to_json(const DensityReport& report);
std::string to_json(const CertifyReport& report);

/// Two CSV tables separated by a blank line: "n,in_V" and "L,max_ratio".
std::string to_csv(const ReportDocument& report);
std::string to_csv(const DensityReport& report);

}  // namespace dml
