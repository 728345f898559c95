#include "wehrhart/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>

#include "wehrhart/error.hpp"

namespace wehrhart {
namespace {

using Case = std::function<std::vector<CheckResult>()>;

std::vector<CheckResult> run_cases(const std::vector<Case>& cases, unsigned threads) {
  std::vector<std::vector<CheckResult>> results(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) results[i] = cases[i]();
  };
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(cases.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  std::vector<CheckResult> flat;
  for (auto& r : results) std::move(r.begin(), r.end(), std::back_inserter(flat));
  return flat;
}

void tag(std::vector<CheckResult>& checks, const std::string& key, const std::string& value) {
  for (auto& c : checks) c.params.insert(c.params.begin(), {key, value});
}

CheckResult polynomiality_failure(const std::string& what, Variant v) {
  return {"polynomiality", {{"variant", std::string(to_string(v))}}, false, what, ""};
}

}  // namespace

std::string_view to_string(Suite s) {
  switch (s) {
    case Suite::Reciprocity: return "reciprocity";
    case Suite::Duality: return "duality";
    case Suite::Purity: return "purity";
    case Suite::Hodge: return "hodge";
  }
  return "?";
}

std::vector<Suite> parse_suites(std::string_view text) {
  if (text == "all") return {Suite::Reciprocity, Suite::Duality, Suite::Purity, Suite::Hodge};
  for (Suite s : {Suite::Reciprocity, Suite::Duality, Suite::Purity, Suite::Hodge}) {
    if (text == to_string(s)) return {s};
  }
  throw ParseError("unknown suite '" + std::string(text) + "'");
}

std::size_t EhrhartReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; }));
}

unsigned thread_count_from_env() {
  if (const char* env = std::getenv("WEHRHART_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

EhrhartReport run_suites(const std::shared_ptr<const FaceLattice>& lattice,
                         const SuiteConfig& config) {
  if (config.lmax < 1) throw ValidationError("lmax must be at least 1");
  const auto has = [&](Suite s) {
    return std::find(config.suites.begin(), config.suites.end(), s) != config.suites.end();
  };
  std::vector<Case> cases;
  const int lmax = config.lmax;

  if (has(Suite::Reciprocity) || has(Suite::Duality)) {
    for (const auto& w : config.weights) {
      for (const auto& p : config.phis) {
        for (Variant v : config.variants) {
          cases.push_back([&, v, recip = has(Suite::Reciprocity), dual = has(Suite::Duality)] {
            std::vector<CheckResult> out;
            try {
              const ZPoly poly = ehrhart_polynomial(w.weight, p.phi, v);
              out.push_back({"polynomiality", {{"variant", std::string(to_string(v))}}, true,
                             poly.to_string(), ""});
              for (int l = 1; l <= lmax; ++l) {
                if (recip) out.push_back(verify_reciprocity(poly, w.weight, p.phi, l, v));
                if (dual) out.push_back(verify_duality_reciprocity(poly, w.weight, p.phi, l, v));
              }
            } catch (const PolynomialityError& e) {
              out.push_back(polynomiality_failure(e.what(), v));
            }
            tag(out, "phi", p.name);
            tag(out, "weight", w.name);
            return out;
          });
        }
      }
    }
  }

  if (has(Suite::Hodge)) {
    for (const auto& w : config.weights) {
      cases.push_back([&] {
        std::vector<CheckResult> out;
        for (int l = 1; l <= lmax; ++l) out.push_back(verify_hodge_duality(w.weight, l));
        tag(out, "weight", w.name);
        return out;
      });
    }
  }

  std::shared_ptr<const PolarGTable> table;
  if (has(Suite::Purity)) {
    table = std::make_shared<const PolarGTable>(lattice);
    for (int q = 1; q < lattice->size(); ++q) {
      for (const auto& p : config.phis) {
        for (Variant v : config.variants) {
          cases.push_back([&, q, v] {
            std::vector<CheckResult> out;
            try {
              for (int l = 1; l <= lmax; ++l) out.push_back(verify_purity(*table, q, p.phi, l, v));
            } catch (const PolynomialityError& e) {
              out.push_back(polynomiality_failure(e.what(), v));
            }
            tag(out, "phi", p.name);
            return out;
          });
        }
      }
    }
  }

  const unsigned threads = config.threads > 0 ? config.threads : thread_count_from_env();
  return {lattice->polytope().hash(), run_cases(cases, threads)};
}

}  // namespace wehrhart
