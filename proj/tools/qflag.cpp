// qflag: command-line front end for Schubert calculus and the quantum
// cohomology of complete flag varieties.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qflag/flag_ring.hpp"
#include "qflag/json_io.hpp"
#include "qflag/relations.hpp"
#include "qflag/schubert.hpp"
#include "qflag/verify.hpp"

namespace {

using namespace qflag;

constexpr int kExitUsage = 1;
constexpr int kExitConsistency = 2;

struct Output {
  std::string command;
  Json inputs = Json::object();
  Json result;
  std::string text;
  int n = 0;
  int exit_code = 0;
};

void emit(const Output& out, const std::string& format) {
  if (format == "json") {
    Json doc;
    doc["command"] = out.command;
    doc["inputs"] = out.inputs;
    doc["result"] = out.result;
    doc["meta"] = {{"version", QFLAG_VERSION}, {"n", out.n}, {"schema", kJsonSchemaVersion}};
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << out.text;
    if (!out.text.empty() && out.text.back() != '\n') std::cout << '\n';
  }
}

Json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

std::vector<Permutation> parse_permutation_list(const std::string& text) {
  std::vector<Permutation> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(';', start), text.size());
    out.push_back(Permutation::parse(std::string_view(text).substr(start, end - start)));
    start = end + 1;
  }
  return out;
}

Output cmd_schubert(const std::string& perm, int n) {
  const Permutation w = Permutation::parse(perm);
  if (w.support() > n) throw std::invalid_argument("permutation '" + perm + "' does not lie in S_" + std::to_string(n));
  const Polynomial sigma = schubert_polynomial(w, n);
  Output out{"schubert", {{"perm", w.to_string()}, {"n", n}}, to_json(sigma), to_text(sigma), n};
  return out;
}

Output cmd_relations(int n, const std::string& method) {
  Output out;
  out.command = "relations";
  out.inputs = {{"n", n}, {"method", method}};
  out.n = n;
  const bool all = method == "all";
  const auto relations = quantum_relations(n, all ? RelationMethod::kRecursion : parse_relation_method(method));
  Json list = Json::array();
  for (int k = 1; k <= n; ++k) {
    const Polynomial& r = relations[static_cast<std::size_t>(k - 1)];
    list.push_back(to_json(r));
    out.text += "R" + std::to_string(k) + " = " + to_text(r) + "\n";
  }
  out.result = {{"relations", list}};
  if (all) {
    const bool agree = relations == quantum_relations(n, RelationMethod::kDeterminant) &&
                       relations == quantum_relations(n, RelationMethod::kFulton);
    out.result["agreement"] = agree;
    out.text += std::string("agreement: ") + (agree ? "true" : "false") + "\n";
    if (!agree) out.exit_code = kExitConsistency;
  }
  return out;
}

Output cmd_qproduct(const std::string& u_text, const std::string& v_text, int n) {
  const FlagRing& ring = flag_ring(n);
  const Permutation u = ring.in_ring(Permutation::parse(u_text));
  const Permutation v = ring.in_ring(Permutation::parse(v_text));
  const SchubertExpansion product = ring.quantum_product(u, v);
  return Output{"qproduct", {{"u", u.to_string()}, {"v", v.to_string()}, {"n", n}}, to_json(product),
                to_text(product), n};
}

Output cmd_gw(const std::string& perms, const std::string& deg, int n) {
  const FlagRing& ring = flag_ring(n);
  std::vector<Permutation> ws;
  Json echo = Json::array();
  for (const auto& w : parse_permutation_list(perms)) {
    ws.push_back(ring.in_ring(w));
    echo.push_back(ws.back().to_string());
  }
  if (ws.size() < 2) throw std::invalid_argument("--perms needs at least two permutations separated by ';'");
  const Multidegree d = deg.empty() ? Multidegree::zero(n) : Multidegree::parse(deg);
  const Integer value = ring.gromov_witten(ws, d);
  return Output{"gw", {{"perms", echo}, {"deg", d.values()}, {"n", n}}, integer_json(value), value.get_str(), n};
}

Output cmd_nf(const std::string& poly, int n) {
  const FlagRing& ring = flag_ring(n);
  const Polynomial p = parse_polynomial(poly, n);
  const Polynomial nf = ring.normal_form(p);
  return Output{"nf", {{"poly", to_text(p)}, {"n", n}}, to_json(nf), to_text(nf), n};
}

Output cmd_verify(int n, const std::string& level_name) {
  const VerifyLevel level = parse_verify_level(level_name);
  Output out;
  out.command = "verify";
  out.inputs = {{"n", n}, {"level", level_name}};
  out.n = n;
  Json results = Json::array();
  bool all_pass = true;
  for (const auto& r : run_properties(n, level)) {
    all_pass = all_pass && r.passed;
    results.push_back({{"property", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    char seconds[32];
    std::snprintf(seconds, sizeof seconds, "%.3f", r.seconds);
    out.text += std::string(r.passed ? "PASS " : "FAIL ") + r.name + " (" + seconds + " s)";
    if (!r.passed) out.text += ": " + r.detail;
    out.text += "\n";
  }
  out.result = {{"all_passed", all_pass}, {"properties", results}};
  if (!all_pass) out.exit_code = kExitConsistency;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schubert calculus and quantum cohomology of complete flag varieties"};
  app.set_version_flag("--version", QFLAG_VERSION);
  app.require_subcommand(1);

  std::string format = "text";
  int n = 0;
  std::string perm, perms, deg, method = "recursion", u, v, poly, level = "smoke";
  const auto formats = CLI::IsMember({"text", "json"});

  auto add_common = [&](CLI::App* sub, int min_n, int max_n) {
    sub->add_option("--n", n, "rank of the flag variety F(n)")->required()->check(CLI::Range(min_n, max_n));
    sub->add_option("--format", format, "text or json")->check(formats);
  };

  auto* schubert = app.add_subcommand("schubert", "Schubert polynomial of a permutation");
  schubert->add_option("--perm", perm, "one-line notation, e.g. '2 1 3'")->required();
  add_common(schubert, 1, 8);

  auto* relations = app.add_subcommand("relations", "generators R_1(n)..R_n(n) of the quantum ideal");
  relations->add_option("--method", method, "recursion, determinant, fulton or all")
      ->check(CLI::IsMember({"recursion", "determinant", "fulton", "all"}));
  add_common(relations, 2, 6);

  auto* qproduct = app.add_subcommand("qproduct", "quantum product of two Schubert classes");
  qproduct->add_option("--u", u, "first permutation")->required();
  qproduct->add_option("--v", v, "second permutation")->required();
  add_common(qproduct, 2, 5);

  auto* gw = app.add_subcommand("gw", "Gromov-Witten invariant");
  gw->add_option("--perms", perms, "permutations separated by ';'")->required();
  gw->add_option("--deg", deg, "multidegree d_1..d_{n-1}, default all zero");
  add_common(gw, 2, 5);

  auto* nf = app.add_subcommand("nf", "normal form modulo the quantum ideal");
  nf->add_option("--poly", poly, "polynomial in x1..xn, q1..q_{n-1}")->required();
  add_common(nf, 2, 5);

  auto* verify = app.add_subcommand("verify", "run the property checks on F(n)");
  verify->add_option("--level", level, "smoke or full")->check(CLI::IsMember({"smoke", "full"}));
  add_common(verify, 2, 5);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    Output out;
    if (schubert->parsed()) out = cmd_schubert(perm, n);
    else if (relations->parsed()) out = cmd_relations(n, method);
    else if (qproduct->parsed()) out = cmd_qproduct(u, v, n);
    else if (gw->parsed()) out = cmd_gw(perms, deg, n);
    else if (nf->parsed()) out = cmd_nf(poly, n);
    else out = cmd_verify(n, level);
    emit(out, format);
    return out.exit_code;
  } catch (const ConsistencyError& e) {
    std::cerr << "consistency failure: " << e.what() << '\n';
    return kExitConsistency;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
