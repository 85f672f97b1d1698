// gradedrep: build GT representations, gradings from automorphisms,
// compatibility checks and graded contractions from the command line.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage or input error.
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gradedrep/contraction.hpp"
#include "gradedrep/gt.hpp"
#include "gradedrep/io.hpp"
#include "gradedrep/lie_algebra.hpp"
#include "gradedrep/linalg.hpp"
#include "gradedrep/simulation.hpp"

using namespace gradedrep;
using io::json;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  double tol = kDefaultTolerance;
  std::string format = "text";
  std::uint64_t seed = 0;
  std::string out;
};

Globals globals;

// JSON goes to --out when given; with --format json and no --out it goes to
// stdout in place of the text summary.
void emit(const json& payload, const std::string& text) {
  if (!globals.out.empty()) {
    std::ofstream f(globals.out);
    if (!f) throw UsageError("cannot write " + globals.out);
    f << io::dump(payload);
  }
  if (globals.format == "json") {
    if (globals.out.empty()) std::cout << io::dump(payload);
  } else {
    std::cout << text;
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

std::vector<int> int_list(const std::string& s) {
  std::vector<int> out;
  for (const auto& item : split(s, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw UsageError("not an integer list: " + s);
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("empty integer list");
  return out;
}

contract::RationalTable parse_table(const AbelianGroup& group, const std::string& s) {
  std::vector<Rational> values;
  for (const auto& item : split(s, ',')) values.push_back(parse_rational(item));
  return contract::RationalTable(group, std::move(values));
}

contract::RationalTable table_arg(const AbelianGroup& group, const std::string& inline_values,
                                  const std::string& file, const char* what) {
  if (!file.empty()) return io::table_from_json(io::read_file(file));
  if (inline_values.empty()) throw UsageError(std::string("missing ") + what + " table");
  return parse_table(group, inline_values);
}

std::string part_dims(const lie::Grading& g) {
  std::string out;
  for (const auto& [label, basis] : g.parts) out += "  part " + label.label() + ": dim " + std::to_string(basis.cols()) + "\n";
  return out;
}

std::string fmt(double x) {
  std::ostringstream ss;
  ss << x;
  return ss.str();
}

Matrix random_integer_matrix(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> entry(-2, 2);
  while (true) {
    Matrix p(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) p(r, c) = static_cast<double>(entry(rng));
    if (std::abs(p.determinant()) >= 1.0) return p;
  }
}

struct AutoSpec {
  sim::Automorphism g;
  bool outer = false;
  int n = 0;
  int s = 0;
  std::string label;
};

// "inner:n,s" or "outer:n".
AutoSpec parse_auto(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw UsageError("automorphism must be inner:n,s or outer:n");
  const auto kind = spec.substr(0, colon);
  const auto args = int_list(spec.substr(colon + 1));
  AutoSpec out;
  out.label = spec;
  if (kind == "inner" && args.size() == 2) {
    out.n = args[0];
    out.s = args[1];
    out.g = sim::auto_inner(out.n, out.s);
  } else if (kind == "outer" && args.size() == 1) {
    out.n = args[0];
    out.outer = true;
    out.g = sim::auto_outer(out.n);
  } else {
    throw UsageError("automorphism must be inner:n,s or outer:n");
  }
  return out;
}

lie::LieAlgebra algebra_for(const std::string& path, int ambient_dim) {
  if (!path.empty()) return io::algebra_from_json(io::read_file(path));
  const int n = static_cast<int>(std::lround(std::sqrt(ambient_dim + 1.0)));
  if (n < 2 || n * n - 1 != ambient_dim)
    throw UsageError("ambient dimension " + std::to_string(ambient_dim) + " is not that of sl(n); pass --algebra");
  return lie::sl_algebra(n);
}

std::string weight_of(const gt::HighestWeight& hw) { return "r" + hw.str(); }

// rep build / check

int rep_build(int n, const std::string& weight, bool radicands) {
  const auto w = int_list(weight);
  if (n != static_cast<int>(w.size()))
    throw UsageError("weight has " + std::to_string(w.size()) + " entries, expected n = " + std::to_string(n));
  const auto rep = gt::build_representation(gt::HighestWeight(w));
  const double comm = rep.gens.commutator_residual();
  const double trans = rep.gens.transpose_residual();
  const bool ok = comm <= globals.tol && trans <= globals.tol;

  json payload = io::rep_to_json(rep);
  if (radicands) payload["radicands"] = io::radicand_dump(rep);
  std::string text = weight_of(rep.hw) + ": dim " + std::to_string(rep.dim()) + "\n";
  text += "  commutator residual " + fmt(comm) + "\n  transpose residual " + fmt(trans) + "\n";
  for (int a = 0; a < rep.dim(); ++a) text += "  [" + std::to_string(a) + "] " + rep.basis[a].str() + "\n";
  text += ok ? "ok\n" : "FAILED\n";
  emit(payload, text);
  return ok ? kOk : kFailed;
}

int rep_check(const std::string& path) {
  const auto rep = io::rep_from_json(io::read_file(path));
  const double comm = rep.gens.commutator_residual();
  const double hom = lie::homomorphism_residual(lie::sl_algebra(rep.hw.n()), rep.gens.on_sl());
  const bool ok = comm <= globals.tol && hom <= globals.tol;
  json payload;
  payload["highest_weight"] = rep.hw.entries();
  payload["dim"] = rep.dim();
  payload["commutator_residual"] = io::format_real(comm);
  payload["sl_residual"] = io::format_real(hom);
  payload["ok"] = ok;
  emit(payload, weight_of(rep.hw) + ": dim " + std::to_string(rep.dim()) + "\n  commutator residual " + fmt(comm) +
                    "\n  sl residual " + fmt(hom) + "\n" + (ok ? "ok\n" : "FAILED\n"));
  return ok ? kOk : kFailed;
}

// grading from-auto / verify / classify

std::string classification_line(const lie::LieAlgebra& a, const lie::Grading& g, std::optional<std::string>& tag) {
  std::vector<Matrix> parts;
  for (const auto& [label, basis] : g.parts)
    if (basis.cols()) parts.push_back(basis);
  if (parts.size() != 2) return "";
  tag = lie::to_string(lie::classify_two_part(a, parts[0], parts[1], globals.tol));
  return "  classification " + *tag + "\n";
}

int grading_from_auto(const std::string& inner, int outer, bool conjugate) {
  if (inner.empty() == (outer == 0)) throw UsageError("give exactly one of --inner n,s or --outer n");
  AutoSpec spec = inner.empty() ? parse_auto("outer:" + std::to_string(outer)) : parse_auto("inner:" + inner);
  if (conjugate) {
    std::mt19937_64 rng(globals.seed);
    const Matrix p = random_integer_matrix(spec.n, rng);
    spec.g.a = spec.outer ? Matrix(p * spec.g.a * p.transpose()) : Matrix(p * spec.g.a * p.fullPivLu().inverse());
  }
  const auto alg = lie::sl_algebra(spec.n);
  const auto g = sim::grading_from_automorphism(alg, spec.g, globals.tol);
  const auto report = lie::verify_grading(alg, g, globals.tol);
  std::optional<std::string> tag;
  std::string text = spec.label + " on sl(" + std::to_string(spec.n) + ")\n" + part_dims(g) +
                     classification_line(alg, g, tag) + (report.ok ? "ok\n" : "FAILED\n");
  emit(io::grading_to_json(g), text);
  return report.ok ? kOk : kFailed;
}

int grading_verify(const std::string& path, const std::string& algebra_path) {
  const auto g = io::grading_from_json(io::read_file(path));
  const auto alg = algebra_for(algebra_path, g.ambient_dim());
  const auto report = lie::verify_grading(alg, g, globals.tol);
  json payload;
  payload["ok"] = report.ok;
  payload["max_residual"] = io::format_real(report.max_residual);
  payload["violations"] = report.violations;
  std::string text = part_dims(g) + "  max residual " + fmt(report.max_residual) + "\n";
  for (const auto& v : report.violations) text += "  violation: " + v + "\n";
  emit(payload, text + (report.ok ? "ok\n" : "FAILED\n"));
  return report.ok ? kOk : kFailed;
}

int grading_classify(const std::string& path, const std::string& algebra_path) {
  const auto g = io::grading_from_json(io::read_file(path));
  const auto alg = algebra_for(algebra_path, g.ambient_dim());
  std::optional<std::string> tag;
  const auto line = classification_line(alg, g, tag);
  if (!tag) throw UsageError("classify needs exactly two nonempty parts");
  json payload;
  payload["classification"] = *tag;
  emit(payload, part_dims(g) + line);
  return *tag == "NotAGrading" ? kFailed : kOk;
}

// compat check

int compat_check(const std::string& rep_path, int n, const std::string& weight, const std::string& grading_path,
                 const std::string& auto_spec, bool doubled) {
  const AutoSpec spec = parse_auto(auto_spec);
  std::optional<gt::Representation> rep;
  if (!rep_path.empty()) {
    rep = io::rep_from_json(io::read_file(rep_path));
  } else {
    const auto w = int_list(weight);
    if (n != static_cast<int>(w.size())) throw UsageError("weight length differs from -n");
    rep = gt::build_representation(gt::HighestWeight(w));
  }
  if (rep->hw.n() != spec.n) throw UsageError("automorphism and representation disagree on n");
  const auto alg = lie::sl_algebra(spec.n);
  const auto grading = grading_path.empty() ? sim::grading_from_automorphism(alg, spec.g, globals.tol)
                                            : io::grading_from_json(io::read_file(grading_path));

  json payload;
  payload["highest_weight"] = rep->hw.entries();
  payload["automorphism"] = spec.label;
  std::string text = weight_of(rep->hw) + " with " + spec.label + "\n";

  std::optional<Realization> carrier;
  std::optional<sim::SimulationMatrix> r;
  if (doubled) {
    if (!spec.outer) throw UsageError("--doubled applies to outer automorphisms");
    auto d = sim::doubled_rep(rep->hw);
    carrier = std::move(d.rep);
    r = std::move(d.swap);
    payload["doubled"] = true;
    text += "  doubled representation, dim " + std::to_string(carrier->dim()) + "\n";
  } else if (spec.outer) {
    if (!sim::is_self_contragredient(rep->hw)) {
      const auto c = sim::contragredient_weight(rep->hw);
      payload["compatible"] = false;
      payload["reason"] = "not self-contragredient";
      payload["contragredient_weight"] = c.entries();
      emit(payload, text + "  no simulation matrix: " + weight_of(rep->hw) + " is not self-contragredient (contragredient " +
                        weight_of(c) + ")\n  the doubled representation is compatible; rerun with --doubled\nFAILED\n");
      return kFailed;
    }
    carrier = rep->gens;
    r = sim::j_matrix(rep->hw);
  } else {
    carrier = rep->gens;
    r = sim::simulation_inner(rep->hw, spec.s);
  }

  const auto sim_report = sim::verify_simulation(*carrier, spec.g, *r, globals.tol);
  const auto vspace = sim::decompose_rep_space(*r, globals.tol);
  const auto compat = sim::check_compatibility(carrier->on_sl(), grading, vspace, globals.tol);
  const bool ok = sim_report.ok && compat.ok;

  payload["simulation"] = io::simulation_to_json(*r);
  payload["simulation_residual"] = io::format_real(sim_report.max_residual);
  payload["vspace"] = io::grading_to_json(vspace);
  payload["compatible"] = compat.ok;
  payload["compatibility_residual"] = io::format_real(compat.max_residual);
  text += "  simulation matrix " + sim::to_string(r->kind) + ", order " + std::to_string(r->order) + ", residual " +
          fmt(sim_report.max_residual) + "\n";
  text += "  representation space\n" + part_dims(vspace);
  text += std::string("  ") + (compat.ok ? "compatible" : "incompatible") + ", residual " + fmt(compat.max_residual) + "\n";
  emit(payload, text + (ok ? "ok\n" : "FAILED\n"));
  return ok ? kOk : kFailed;
}

// contract solve-eps / solve-psi / apply

std::string table_text(const contract::RationalTable& t) {
  std::string out;
  for (int a = 0; a < t.size(); ++a) {
    out += "    ";
    for (int b = 0; b < t.size(); ++b) out += (b ? " " : "") + to_string(t.at(a, b));
    out += "\n";
  }
  return out;
}

json table_list(const std::vector<contract::RationalTable>& ts) {
  json out = json::array();
  for (const auto& t : ts) out.push_back(io::table_to_json(t));
  return out;
}

int solve_eps(const std::string& group) {
  const AbelianGroup g(int_list(group));
  const auto sols = contract::enumerate_binary_epsilon(g);
  std::string text = std::to_string(sols.size()) + " binary epsilon solutions\n";
  for (std::size_t i = 0; i < sols.size(); ++i) text += "  #" + std::to_string(i) + "\n" + table_text(sols[i]);
  json payload;
  payload["group"] = g.orders();
  payload["count"] = sols.size();
  payload["solutions"] = table_list(sols);
  emit(payload, text);
  return kOk;
}

int solve_psi(const std::string& group, const std::string& eps_values, const std::string& eps_file) {
  const AbelianGroup g(int_list(group));
  const auto eps = table_arg(g, eps_values, eps_file, "epsilon");
  if (auto r = contract::verify_epsilon(eps); !r.ok) {
    emit(json{{"ok", false}, {"violations", r.violations}}, "epsilon is not a solution: " + r.violations.front() + "\nFAILED\n");
    return kFailed;
  }
  const auto sols = contract::enumerate_binary_psi(eps);
  std::string text = std::to_string(sols.size()) + " binary psi solutions\n";
  for (std::size_t i = 0; i < sols.size(); ++i) text += "  #" + std::to_string(i) + "\n" + table_text(sols[i]);
  json payload;
  payload["group"] = g.orders();
  payload["epsilon"] = io::table_to_json(eps);
  payload["count"] = sols.size();
  payload["solutions"] = table_list(sols);
  emit(payload, text);
  return kOk;
}

struct ApplyArgs {
  std::string grading, algebra, eps, eps_file;
  std::string rep, vspace, auto_spec, psi, psi_file;
};

int contract_apply(const ApplyArgs& args) {
  if (args.grading.empty()) throw UsageError("--grading is required");
  const auto grading = io::grading_from_json(io::read_file(args.grading));
  const auto alg = algebra_for(args.algebra, grading.ambient_dim());
  const auto eps = table_arg(grading.group, args.eps, args.eps_file, "epsilon");
  const auto calg = contract::contract_algebra(alg, grading, eps, globals.tol);
  const auto jacobi = lie::check_jacobi(calg.result, globals.tol);

  double change = 0.0;
  for (int i = 0; i < alg.dim(); ++i)
    for (int j = i + 1; j < alg.dim(); ++j)
      change = std::max(change, max_abs(calg.result.bracket(alg.basis_vector(i), alg.basis_vector(j)) -
                                        alg.bracket(alg.basis_vector(i), alg.basis_vector(j))));
  const bool identity = change <= globals.tol;
  bool ok = jacobi.ok;

  json payload;
  payload["algebra"] = io::contracted_algebra_to_json(calg);
  payload["jacobi_residual"] = io::format_real(jacobi.max_residual);
  payload["identity"] = identity;
  std::string text = "contracted algebra: " + std::to_string(calg.result.constants().size()) + " nonzero constants\n";
  text += "  jacobi residual " + fmt(jacobi.max_residual) + "\n";
  text += std::string("  ") + (identity ? "identity transformation" : "brackets changed") + "\n";

  if (!args.rep.empty()) {
    const auto rep = io::rep_from_json(io::read_file(args.rep));
    lie::Grading vspace;
    if (!args.vspace.empty()) {
      vspace = io::grading_from_json(io::read_file(args.vspace));
    } else if (!args.auto_spec.empty()) {
      const auto spec = parse_auto(args.auto_spec);
      vspace = sim::decompose_rep_space(spec.outer ? sim::j_matrix(rep.hw) : sim::simulation_inner(rep.hw, spec.s),
                                        globals.tol);
    } else {
      throw UsageError("--rep needs --vspace or --auto");
    }
    const auto psi = table_arg(grading.group, args.psi, args.psi_file, "psi");
    const auto crep = contract::contract_rep(rep.gens.on_sl(), grading, vspace, psi, eps, globals.tol);
    const auto hom = contract::verify_rep_homomorphism(crep, calg, globals.tol);
    ok = ok && hom.ok;
    json r = io::matrix_rep_to_json(crep.result, alg.basis_names());
    r["psi"] = io::table_to_json(psi);
    payload["representation"] = std::move(r);
    payload["homomorphism_residual"] = io::format_real(hom.max_residual);
    text += "contracted representation: dim " + std::to_string(crep.result.dim()) + "\n  homomorphism residual " +
            fmt(hom.max_residual) + "\n";
  }
  emit(payload, text + (ok ? "ok\n" : "FAILED\n"));
  return ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gel'fand-Tseitlin representations, gradings and graded contractions of sl(n)"};
  app.require_subcommand(1);
  app.add_option("--tol", globals.tol, "Numerical tolerance")->check(CLI::PositiveNumber);
  app.add_option("--format", globals.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", globals.seed, "Seed for randomized steps");
  app.add_option("--out", globals.out, "Write JSON to this file");

  std::function<int()> action;

  auto* rep = app.add_subcommand("rep", "Gel'fand-Tseitlin representations")->require_subcommand(1);
  rep->fallthrough();
  auto* rep_build_cmd = rep->add_subcommand("build", "Build r(weight) and check the gl(n) relations");
  rep_build_cmd->fallthrough();
  int n = 0;
  std::string weight;
  bool radicands = false;
  rep_build_cmd->add_option("-n", n, "Rank n of sl(n)")->required();
  rep_build_cmd->add_option("-w,--weight", weight, "Highest weight, e.g. 2,1,0")->required();
  rep_build_cmd->add_flag("--radicands", radicands, "Include exact adjacent-generator coefficients");
  rep_build_cmd->callback([&] { action = [&] { return rep_build(n, weight, radicands); }; });

  auto* rep_check_cmd = rep->add_subcommand("check", "Check a representation JSON file");
  rep_check_cmd->fallthrough();
  std::string rep_file;
  rep_check_cmd->add_option("file", rep_file)->required();
  rep_check_cmd->callback([&] { action = [&] { return rep_check(rep_file); }; });

  auto* grading = app.add_subcommand("grading", "Gradings of sl(n)")->require_subcommand(1);
  grading->fallthrough();
  auto* from_auto = grading->add_subcommand("from-auto", "Grading from an order-2 automorphism");
  from_auto->fallthrough();
  std::string inner;
  int outer = 0;
  bool conjugate = false;
  from_auto->add_option("--inner", inner, "n,s for Ad of diag(1,...,-1 (s times))");
  from_auto->add_option("--outer", outer, "n for X -> -X^T");
  from_auto->add_flag("--conjugate", conjugate, "Conjugate by a random integer matrix drawn from --seed");
  from_auto->callback([&] { action = [&] { return grading_from_auto(inner, outer, conjugate); }; });

  std::string grading_file, algebra_file;
  auto* verify = grading->add_subcommand("verify", "Check direct sum and closure");
  verify->fallthrough();
  verify->add_option("file", grading_file)->required();
  verify->add_option("--algebra", algebra_file, "Algebra JSON (default sl(n) from the dimension)");
  verify->callback([&] { action = [&] { return grading_verify(grading_file, algebra_file); }; });

  auto* classify = grading->add_subcommand("classify", "Classify a two-part decomposition");
  classify->fallthrough();
  classify->add_option("file", grading_file)->required();
  classify->add_option("--algebra", algebra_file, "Algebra JSON (default sl(n) from the dimension)");
  classify->callback([&] { action = [&] { return grading_classify(grading_file, algebra_file); }; });

  auto* compat = app.add_subcommand("compat", "Representation/grading compatibility")->require_subcommand(1);
  compat->fallthrough();
  auto* compat_check_cmd = compat->add_subcommand("check", "Build the simulation matrix and check compatibility");
  compat_check_cmd->fallthrough();
  std::string compat_rep, auto_spec, compat_grading;
  int compat_n = 0;
  std::string compat_weight;
  bool doubled = false;
  auto* rep_opt = compat_check_cmd->add_option("--rep", compat_rep, "Representation JSON");
  auto* n_opt = compat_check_cmd->add_option("-n", compat_n, "Rank n");
  auto* w_opt = compat_check_cmd->add_option("-w,--weight", compat_weight, "Highest weight");
  rep_opt->excludes(n_opt)->excludes(w_opt);
  n_opt->needs(w_opt);
  w_opt->needs(n_opt);
  compat_check_cmd->add_option("--grading", compat_grading, "Grading JSON (default: from the automorphism)");
  compat_check_cmd->add_option("--auto", auto_spec, "inner:n,s or outer:n")->required();
  compat_check_cmd->add_flag("--doubled", doubled, "Use r + (-r^T) with the block swap");
  compat_check_cmd->callback([&] {
    if (compat_rep.empty() && compat_weight.empty()) throw CLI::ValidationError("give --rep or -n/-w");
    action = [&] { return compat_check(compat_rep, compat_n, compat_weight, compat_grading, auto_spec, doubled); };
  });

  auto* contract_cmd = app.add_subcommand("contract", "Graded contractions")->require_subcommand(1);
  contract_cmd->fallthrough();
  std::string group = "2", eps_values, eps_file;
  auto* solve_eps_cmd = contract_cmd->add_subcommand("solve-eps", "All binary epsilon solutions");
  solve_eps_cmd->fallthrough();
  solve_eps_cmd->add_option("--group", group, "Cyclic orders, e.g. 2 or 2,2");
  solve_eps_cmd->callback([&] { action = [&] { return solve_eps(group); }; });

  auto* solve_psi_cmd = contract_cmd->add_subcommand("solve-psi", "All binary psi solutions for an epsilon");
  solve_psi_cmd->fallthrough();
  solve_psi_cmd->add_option("--group", group, "Cyclic orders, e.g. 2 or 2,2");
  solve_psi_cmd->add_option("--eps", eps_values, "Row-major epsilon values");
  solve_psi_cmd->add_option("--eps-file", eps_file, "Epsilon table JSON");
  solve_psi_cmd->callback([&] { action = [&] { return solve_psi(group, eps_values, eps_file); }; });

  ApplyArgs apply_args;
  auto* apply = contract_cmd->add_subcommand("apply", "Contract an algebra and optionally a representation");
  apply->fallthrough();
  apply->add_option("--grading", apply_args.grading, "Grading JSON")->required();
  apply->add_option("--algebra", apply_args.algebra, "Algebra JSON (default sl(n) from the dimension)");
  apply->add_option("--eps", apply_args.eps, "Row-major epsilon values");
  apply->add_option("--eps-file", apply_args.eps_file, "Epsilon table JSON");
  apply->add_option("--rep", apply_args.rep, "Representation JSON to contract");
  apply->add_option("--vspace", apply_args.vspace, "Representation-space grading JSON");
  apply->add_option("--auto", apply_args.auto_spec, "Derive the space grading from inner:n,s or outer:n");
  apply->add_option("--psi", apply_args.psi, "Row-major psi values");
  apply->add_option("--psi-file", apply_args.psi_file, "Psi table JSON");
  apply->callback([&] { action = [&] { return contract_apply(apply_args); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  try {
    return action();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kUsage;
}
