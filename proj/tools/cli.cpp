#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "wehrhart/error.hpp"
#include "wehrhart/io.hpp"
#include "wehrhart/verify.hpp"

namespace wehrhart::cli {
namespace {

using io::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string polytope;
  std::string out;
  std::string weights;
  std::string gface;
  std::string face;
  std::string variant = "E";
  std::string suite = "all";
  std::vector<std::string> phis;
  std::int64_t dilation = 0;
  int lmax = 3;
  bool random_weights = false;
  std::optional<std::uint64_t> seed;
  int count = 5;
};

void add_polytope(CLI::App* sub, Options& o) {
  sub->add_option("--polytope", o.polytope, "polytope JSON file")->required();
  sub->add_option("--out", o.out, "write the result here instead of stdout");
}

void add_weight_selection(CLI::App* sub, Options& o) {
  auto* w = sub->add_option("--weights", o.weights, "weight function JSON file");
  sub->add_option("--gface", o.gface, "use the g-weights of this face (id or P)")->excludes(w);
}

std::shared_ptr<const FaceLattice> load_lattice(const Options& o) {
  return build_face_lattice(io::polytope_from_json(io::read_json_file(o.polytope)));
}

int parse_face(const std::string& text, const FaceLattice& lattice) {
  if (text == "P") return lattice.top();
  std::size_t used = 0;
  int id = 0;
  try {
    id = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw ParseError("face selector '" + text + "' is neither an id nor P");
  }
  if (used != text.size()) throw ParseError("face selector '" + text + "' is neither an id nor P");
  if (id <= lattice.empty_face() || id > lattice.top()) {
    throw ValidationError("face id " + text + " is not a nonempty face");
  }
  return id;
}

std::optional<NamedWeight> explicit_weight(const Options& o,
                                           const std::shared_ptr<const FaceLattice>& lattice) {
  if (!o.weights.empty()) {
    return NamedWeight{std::filesystem::path(o.weights).stem().string(),
                       io::weights_from_json(io::read_json_file(o.weights), lattice)};
  }
  if (!o.gface.empty()) {
    const int q = parse_face(o.gface, *lattice);
    return NamedWeight{"g" + o.gface, g_weight_function(lattice, q)};
  }
  return std::nullopt;
}

NamedWeight single_weight(const Options& o, const std::shared_ptr<const FaceLattice>& lattice) {
  if (auto w = explicit_weight(o, lattice)) return *std::move(w);
  return {"ones", all_ones_weight(lattice)};
}

HomogPoly load_phi(const std::string& path) {
  return io::phi_from_json(io::read_json_file(path));
}

void check_phi_dim(const HomogPoly& phi, const FaceLattice& lattice) {
  if (phi.dim() != lattice.dim()) {
    throw ValidationError("phi has " + std::to_string(phi.dim()) + " variables, polytope has dimension " +
                          std::to_string(lattice.dim()));
  }
}

void emit(const json& doc, const Options& o, std::ostream& out) {
  if (o.out.empty()) {
    out << io::dump(doc);
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw ValidationError("cannot write '" + o.out + "'");
  file << io::dump(doc);
}

void report_error(std::ostream& err, std::string_view code, std::string_view message) {
  err << "error: code=" << code << " message=" << json(std::string(message)).dump() << "\n";
}

int cmd_faces(const Options& o, std::ostream& out) {
  emit(io::to_json(*load_lattice(o)), o, out);
  return 0;
}

int cmd_gweights(const Options& o, std::ostream& out) {
  auto lattice = load_lattice(o);
  const int q_prime = parse_face(o.face, *lattice);
  PolarGTable table(lattice);
  json polar = json::object();
  for (int q : lattice->down_set(q_prime)) {
    if (q != lattice->empty_face()) polar[std::to_string(q)] = io::to_json(table.polar_g(q, q_prime));
  }
  json doc = io::to_json(table.g_weights(q_prime));
  doc["face"] = q_prime;
  doc["polar_g"] = std::move(polar);
  emit(doc, o, out);
  return 0;
}

int cmd_hpoly(const Options& o, std::ostream& out) {
  auto lattice = load_lattice(o);
  const PolyT h = h_polynomial(lattice);
  emit({{"polytope_hash", lattice->polytope().hash()},
        {"dim", lattice->dim()},
        {"h", io::to_json(h)},
        {"palindromic", is_palindromic(h, lattice->dim())}},
       o, out);
  return 0;
}

int cmd_dualize(const Options& o, std::ostream& out) {
  auto lattice = load_lattice(o);
  const WeightFunction f = io::weights_from_json(io::read_json_file(o.weights), lattice);
  emit(io::to_json(dualize(f)), o, out);
  return 0;
}

int cmd_charsum(const Options& o, std::ostream& out) {
  auto lattice = load_lattice(o);
  const NamedWeight w = single_weight(o, lattice);
  json doc = io::to_json(hodge_character_sum(w.weight, o.dilation));
  doc["dilation"] = o.dilation;
  doc["weights"] = w.name;
  emit(doc, o, out);
  return 0;
}

int cmd_ehrhart(const Options& o, std::ostream& out) {
  auto lattice = load_lattice(o);
  const Variant variant = parse_variant(o.variant);
  const HomogPoly phi = load_phi(o.phis.front());
  check_phi_dim(phi, *lattice);
  const NamedWeight w = single_weight(o, lattice);
  const ZPoly poly = ehrhart_polynomial(w.weight, phi, variant);
  const LaurentPoly at_zero = poly(Rat(0));
  const LaurentPoly formula = constant_term(w.weight, phi, variant);
  emit({{"polytope_hash", lattice->polytope().hash()},
        {"variant", std::string(to_string(variant))},
        {"weights", w.name},
        {"phi", io::to_json(phi)},
        {"degree_bound", ehrhart_degree_bound(*lattice, phi)},
        {"polynomial", io::to_json(poly)},
        {"constant_term",
         {{"polynomial", io::to_json(at_zero)},
          {"formula", io::to_json(formula)},
          {"status", at_zero == formula ? "pass" : "fail"}}}},
       o, out);
  return at_zero == formula ? 0 : 1;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.random_weights && !o.seed) throw UsageError("--random-weights requires --seed");
  auto lattice = load_lattice(o);
  SuiteConfig config;
  config.suites = parse_suites(o.suite);
  config.lmax = o.lmax;
  if (auto w = explicit_weight(o, lattice)) config.weights.push_back(*std::move(w));
  if (o.random_weights) {
    for (int i = 0; i < o.count; ++i) {
      config.weights.push_back({"random" + std::to_string(i),
                                random_weight(lattice, *o.seed + static_cast<std::uint64_t>(i))});
    }
  }
  if (config.weights.empty()) {
    config.weights.push_back({"ones", all_ones_weight(lattice)});
    config.weights.push_back({"gP", g_weight_function(lattice, lattice->top())});
  }
  for (const auto& path : o.phis) {
    NamedPhi p{std::filesystem::path(path).stem().string(), load_phi(path)};
    check_phi_dim(p.phi, *lattice);
    config.phis.push_back(std::move(p));
  }
  if (config.phis.empty()) config.phis.push_back({"one", HomogPoly::constant(lattice->dim(), 1)});

  const EhrhartReport report = run_suites(lattice, config);
  json doc = io::to_json(report);
  json suites = json::array();
  for (Suite s : config.suites) suites.push_back(std::string(to_string(s)));
  doc["suites"] = std::move(suites);
  doc["lmax"] = config.lmax;
  emit(doc, o, out);
  if (!report.passed()) {
    report_error(err, "check_failed",
                 std::to_string(report.failures()) + " of " + std::to_string(report.checks.size()) +
                     " checks failed");
    return 1;
  }
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weighted Ehrhart polynomials, duality and Stanley g/h polynomials", "wehrhart"};
  app.require_subcommand(1);
  Options o;

  auto* faces = app.add_subcommand("faces", "facet presentation and face lattice");
  add_polytope(faces, o);

  auto* gweights = app.add_subcommand("gweights", "g-weight function of a face");
  add_polytope(gweights, o);
  gweights->add_option("--face", o.face, "face id or P")->required();

  auto* hpoly = app.add_subcommand("hpoly", "toric h-polynomial of the polar polytope");
  add_polytope(hpoly, o);

  auto* dual = app.add_subcommand("dualize", "apply the duality involution to a weight function");
  add_polytope(dual, o);
  dual->add_option("--weights", o.weights, "weight function JSON file")->required();

  auto* charsum = app.add_subcommand("charsum", "equivariant Hodge character sum at a dilation");
  add_polytope(charsum, o);
  add_weight_selection(charsum, o);
  charsum->add_option("--l", o.dilation, "dilation (any integer)")->required();

  auto* ehrhart = app.add_subcommand("ehrhart", "interpolated weighted Ehrhart polynomial");
  add_polytope(ehrhart, o);
  add_weight_selection(ehrhart, o);
  ehrhart->add_option("--phi", o.phis, "homogeneous integrand JSON file")->required()->expected(1);
  ehrhart->add_option("--variant", o.variant, "E or Etilde");

  auto* verify = app.add_subcommand("verify", "run identity suites");
  add_polytope(verify, o);
  add_weight_selection(verify, o);
  verify->add_option("--phi", o.phis, "homogeneous integrand JSON file (repeatable)");
  verify->add_option("--suite", o.suite, "all|reciprocity|duality|purity|hodge");
  verify->add_option("--lmax", o.lmax, "largest dilation")->check(CLI::PositiveNumber);
  verify->add_flag("--random-weights", o.random_weights, "add seeded random weight functions");
  verify->add_option("--seed", o.seed, "seed for --random-weights");
  verify->add_option("--count", o.count, "number of random weight functions")
      ->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    report_error(err, "usage", e.what());
    return 2;
  }

  try {
    if (faces->parsed()) return cmd_faces(o, out);
    if (gweights->parsed()) return cmd_gweights(o, out);
    if (hpoly->parsed()) return cmd_hpoly(o, out);
    if (dual->parsed()) return cmd_dualize(o, out);
    if (charsum->parsed()) return cmd_charsum(o, out);
    if (ehrhart->parsed()) return cmd_ehrhart(o, out);
    return cmd_verify(o, out, err);
  } catch (const UsageError& e) {
    report_error(err, "usage", e.what());
    return 2;
  } catch (const ParseError& e) {
    report_error(err, "parse", e.what());
    return 2;
  } catch (const ValidationError& e) {
    report_error(err, "validation", e.what());
    return 3;
  } catch (const PolynomialityError& e) {
    report_error(err, "polynomiality", e.what());
    return 1;
  } catch (const std::exception& e) {
    report_error(err, "internal", e.what());
    return 4;
  }
}

}  // namespace wehrhart::cli
