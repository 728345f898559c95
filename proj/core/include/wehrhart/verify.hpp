#pragma once

#include <memory>
#include <string>
#include <vector>

#include "wehrhart/ehrhart.hpp"

namespace wehrhart {

enum class Suite { Reciprocity, Duality, Purity, Hodge };

std::string_view to_string(Suite s);
/// "all" expands to every suite; throws ParseError on unknown names.
std::vector<Suite> parse_suites(std::string_view text);

struct NamedWeight {
  std::string name;
  WeightFunction weight;
};

struct NamedPhi {
  std::string name;
  HomogPoly phi;
};

struct SuiteConfig {
  std::vector<Suite> suites;
  int lmax = 3;
  std::vector<NamedWeight> weights;
  std::vector<NamedPhi> phis;
  std::vector<Variant> variants{Variant::E, Variant::Etilde};
  /// 0 = take WEHRHART_THREADS from the environment, else hardware concurrency.
  unsigned threads = 0;
};

struct EhrhartReport {
  std::string polytope_hash;
  std::vector<CheckResult> checks;

  std::size_t failures() const;
  bool passed() const { return failures() == 0; }
};

/// Runs every (suite, weight, phi, variant, l) case. Cases execute
/// concurrently; the report lists them in a fixed corpus order regardless.
/// Reciprocity and duality cases also record a "polynomiality" check per
/// (weight, phi, variant).
EhrhartReport run_suites(const std::shared_ptr<const FaceLattice>& lattice,
                         const SuiteConfig& config);

unsigned thread_count_from_env();

}  // namespace wehrhart
