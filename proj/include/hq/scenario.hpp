#pragma once
// Scenario files: JSON descriptions of a group, a graded module, a
// first-order calculus, an extension flavor and optional codifferential /
// duality-partner data, plus the deterministic JSON reports the command-line
// tool emits. Rationals serialize as "p/q" strings, matrices as nested
// arrays, degree-indexed tables keyed by stringified integers.
#include <optional>
#include <string>

#include <json.hpp>

#include "hq/codiff.hpp"

namespace hq {

using Json = nlohmann::json;

// JSON <-> exact rational linear algebra.
Json vec_json(const Vec& v);
Json mat_json(const Mat& m);
Vec json_vec(const Json& j);
Mat json_mat(const Json& j);

// Thrown on malformed scenario files (exit code 1); construction failures
// keep throwing std::invalid_argument (exit code 2).
struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Scenario {
  std::string name;
  FiniteGroup group;
  GroupGradedModule module;
  Json calculus;                       // constructor + data, still raw
  Flavor flavor = Flavor::nichols;
  int degree_cap = 0;                  // 0: unset (flag / env / default 4)
  std::optional<Vec> theta_star;       // codifferential spec
  std::optional<Mat> i1;               // explicit alternative
  std::optional<Json> duality_partner; // module/calculus/extension/codiff spec
};

// Parses and schema-checks a scenario document; throws SchemaError.
Scenario parse_scenario(const Json& j);

struct BuiltScenario {
  HopfPtr algebra;
  CrossedModule module;
  std::optional<FirstOrderCalculus> calculus;  // absent for pure-shuffle kG side
  GradedSuperHopf omega;
  int cap = 0;
};

// Builds the scenario's tower at the given cap (pass 0 to use the
// scenario's own cap, defaulting to 4). Throws std::invalid_argument on
// construction precondition failures.
BuiltScenario build_scenario(const Scenario& s, int cap = 0);

// Every suite applicable to what was built (graded super-Hopf laws, strong
// bicovariance when d exists, codifferential laws when i exists, the
// augmentation suite when both do).
Report verify_built(const BuiltScenario& b);

// Builds the duality partner (over the dual group algebra) and the braided
// pairing between the two towers, then runs the mutual-duality suite.
Report verify_pairing(const Scenario& s, int cap = 0);

// Deterministic report document: name, ordered checks, degree dimensions.
// Timing is deliberately not serialized so reports are byte-identical.
Json report_json(const std::string& name, const Report& rep, const std::vector<int>& dims);

// Structure constants of the built tower (dims, labels, product, coproduct,
// d, i as present).
Json export_json(const std::string& name, const BuiltScenario& b);

// The paper-derived fixtures: "z2-minimal", "z2-universal", "z2-subshuffle".
Json fixture_scenario(const std::string& name);

// One CLI invocation, in-process: command is build|verify|dims|pair|export.
// Returns the exit code (0 ok, 1 schema, 2 construction, 3 verification)
// and fills out with the report/export document (always valid JSON).
int run_command(const std::string& command, const Json& scenario, int degree_cap,
                std::string& out);

}  // namespace hq
