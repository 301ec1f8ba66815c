#include "grass_cli/cli.hpp"

#include <CLI11.hpp>

#include <functional>
#include <sstream>

#include "grass/cohomology.hpp"
#include "grass/diffop.hpp"
#include "grass/expression.hpp"
#include "grass/gorenstein.hpp"
#include "grass/reconstruct.hpp"
#include "grass/serialize.hpp"
#include "grass/sl2.hpp"

namespace grass::cli {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Options {
  int k = 0;
  int n = 0;
  int max_n = 12;
  std::string format = "text";
  std::string op;
  std::string realization = "schubert";
  std::string suite = "all";
  std::optional<int> max_order;
  std::uint64_t seed = 1;
  std::vector<std::string> inputs;
};

std::string dump(const json& j) { return j.dump(2) + "\n"; }

RingContext context_of(const Options& o) {
  if (o.n > o.max_n) {
    throw UsageError("n = " + std::to_string(o.n) + " exceeds the cap " + std::to_string(o.max_n) +
                     " (raise it with --max-n)");
  }
  if (o.k < 1 || o.k > o.n - 1) {
    throw UsageError("need 1 <= k <= n-1, got k = " + std::to_string(o.k) + ", n = " + std::to_string(o.n));
  }
  return RingContext(o.k, o.n);
}

Result ok_output(const Options& o, const json& j, const std::string& text) {
  return {0, o.format == "json" ? dump(j) : text + "\n", ""};
}

Result cmd_info(const Options& o) {
  RingContext ctx = context_of(o);
  const SchubertBasis& basis = schubert_basis(ctx);
  json names = json::array();
  for (const auto& lambda : basis.elements()) names.push_back(to_json(lambda));
  json vars = json::array();
  for (const auto& v : variables(ctx)) vars.push_back(v.name());
  json rels = json::array();
  for (const auto& r : relations(ctx)) rels.push_back(to_text(r));
  json j = {{"name", ctx.name()}, {"k", ctx.k()},       {"n", ctx.n()},          {"dim", basis.size()},
            {"top_degree", 2 * ctx.top_half_degree()}, {"variables", vars},     {"relations", rels},
            {"betti", betti(ctx)},                     {"basis", names}};
  std::ostringstream text;
  text << ctx.name() << ": dim " << basis.size() << ", top degree " << 2 * ctx.top_half_degree() << "\n";
  text << "betti:";
  for (auto b : betti(ctx)) text << " " << b;
  text << "\nrelations:";
  for (std::size_t m = 0; m < rels.size(); ++m) text << "\n  R" << m + 1 << " = " << rels[m].get<std::string>();
  return ok_output(o, j, text.str());
}

Result class_output(const Options& o, const SchubertVector& v) {
  return ok_output(o, {{"result", to_json(v)}, {"text", to_text(v)}}, to_text(v));
}

Result cmd_multiply(const Options& o) {
  RingContext ctx = context_of(o);
  SchubertVector product = SchubertVector::basis(ctx, Partition());
  for (const auto& input : o.inputs) product = schubert_multiply(product, parse_class(ctx, input));
  return class_output(o, product);
}

Result cmd_normal_form(const Options& o) {
  RingContext ctx = context_of(o);
  if (o.inputs.size() != 1) throw UsageError("normal-form takes exactly one expression");
  return class_output(o, parse_class(ctx, o.inputs.front()));
}

OperatorMatrix operator_matrix(const RingContext& ctx, const std::string& op, const std::string& realization) {
  using Builder = OperatorMatrix (*)(const RingContext&);
  static const std::map<std::string, std::map<std::string, Builder>> table = {
      {"schubert", {{"E", build_E_schubert}, {"F", build_F_schubert}, {"H", build_H_schubert}}},
      {"exterior", {{"E", build_E_exterior}, {"F", build_F_exterior}, {"H", build_H_exterior}}},
      {"differential", {{"E", build_E_differential}, {"F", build_F_differential}, {"H", build_H_differential}}},
  };
  auto by_realization = table.find(realization);
  if (by_realization == table.end()) throw UsageError("unknown realization '" + realization + "'");
  auto builder = by_realization->second.find(op);
  if (builder == by_realization->second.end()) throw UsageError("--op must be E, F or H");
  return builder->second(ctx);
}

Result cmd_apply_op(const Options& o) {
  RingContext ctx = context_of(o);
  if (o.inputs.size() != 1) throw UsageError("apply-op takes exactly one class");
  OperatorMatrix m = operator_matrix(ctx, o.op, o.realization);
  return class_output(o, m.apply(parse_class(ctx, o.inputs.front())));
}

Result cmd_betti(const Options& o) {
  RingContext ctx = context_of(o);
  json j = betti_json(ctx);
  std::ostringstream text;
  for (std::size_t i = 0; i < j["betti"].size(); ++i) text << (i ? " " : "") << j["betti"][i].get<std::int64_t>();
  text << " (total " << j["total"].get<std::int64_t>() << ")";
  return ok_output(o, j, text.str());
}

Result cmd_cogenerator(const Options& o) {
  RingContext ctx = context_of(o);
  DualPolynomial P = cogenerator(ctx);
  json j = {{"k", ctx.k()}, {"n", ctx.n()}, {"normalization", "integral of the full box class = 1"},
            {"cogenerator", to_json(P)}, {"text", to_text(P)}};
  return ok_output(o, j, to_text(P));
}

Result cmd_reconstruct(const Options& o) {
  RingContext ctx = context_of(o);
  OperatorMatrix m = operator_matrix(ctx, o.op, o.realization);
  try {
    Reconstruction r = reconstruct(BlackBoxOperator::from_matrix(m), o.max_order);
    json j = to_json(r);
    j["input"] = o.op;
    std::ostringstream text;
    text << "order " << r.detected_order << " (coefficients shown through the q-only lift)\n" << to_text(r.op);
    return ok_output(o, j, text.str());
  } catch (const NotDifferentialOperator& e) {
    json j = {{"k", ctx.k()}, {"n", ctx.n()}, {"input", o.op}, {"pass", false}, {"error", e.what()}};
    return {kExitCheckFailed, o.format == "json" ? dump(j) : "", std::string(e.what()) + "\n"};
  }
}

std::vector<Report> run_suite(const std::string& suite, const RingContext& ctx, std::uint64_t seed) {
  std::vector<Report> out;
  if (suite == "sl2") {
    for (auto r : {Realization::Schubert, Realization::Exterior, Realization::Differential}) {
      Report rep = sl2_relations_check(ctx, r);
      rep.check += std::string("[") + realization_name(r) + "]";
      out.push_back(std::move(rep));
    }
  } else if (suite == "ideal") {
    const std::pair<const char*, DiffOperator> ops[] = {
        {"D_e", build_D_e(ctx)}, {"D_f", build_D_f(ctx)}, {"D_h", build_D_h(ctx)}};
    for (const auto& [name, op] : ops) {
      Report rep = ideal_preservation_check(op, seed);
      rep.check += std::string("[") + name + "]";
      out.push_back(std::move(rep));
    }
    out.push_back(ideal_certificates_check(ctx));
  } else if (suite == "lefschetz") {
    out.push_back(hard_lefschetz_check(ctx));
  } else if (suite == "dynkin") {
    out.push_back(dynkin_grading_check(ctx));
  } else if (suite == "agreement") {
    out.push_back(triple_agreement(ctx));
  } else if (suite == "gorenstein") {
    out.push_back(annihilator_check(ctx, seed));
  } else if (suite == "reconstruct") {
    out.push_back(reconstruction_check(ctx, seed));
  } else {
    throw UsageError("unknown suite '" + suite + "'");
  }
  return out;
}

Result cmd_verify(const Options& o) {
  RingContext ctx = context_of(o);
  static const std::vector<std::string> all = {"sl2", "ideal", "lefschetz", "dynkin", "agreement", "gorenstein",
                                               "reconstruct"};
  std::vector<std::string> suites = o.suite == "all" ? all : std::vector<std::string>{o.suite};
  json reports = json::array();
  std::ostringstream text;
  bool pass = true;
  for (const auto& suite : suites) {
    for (const Report& rep : run_suite(suite, ctx, o.seed)) {
      pass = pass && rep.pass;
      reports.push_back(rep.to_json());
      text << (rep.pass ? "PASS " : "FAIL ") << rep.check << " " << ctx.name() << "\n";
    }
  }
  json j = {{"k", ctx.k()}, {"n", ctx.n()}, {"suite", o.suite}, {"seed", o.seed}, {"pass", pass}, {"reports", reports}};
  std::string body = o.format == "json" ? dump(j) : text.str();
  return {pass ? 0 : kExitCheckFailed, body, ""};
}

}  // namespace

Result run(const std::vector<std::string>& args) {
  CLI::App app{"Exact cohomology of Grassmannians and its sl2 action", "grass"};
  app.require_subcommand(1, 1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--k", o.k, "subspace dimension")->required();
    sub->add_option("--n", o.n, "ambient dimension")->required();
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--max-n", o.max_n, "largest accepted n")->check(CLI::PositiveNumber);
  };
  auto op_option = [&](CLI::App* sub) {
    sub->add_option("--op", o.op, "operator")->required()->check(CLI::IsMember({"E", "F", "H"}));
    sub->add_option("--realization", o.realization, "how the operator is built")
        ->check(CLI::IsMember({"schubert", "exterior", "differential"}));
  };

  std::map<CLI::App*, std::function<Result(const Options&)>> handlers;
  auto add = [&](const std::string& name, const std::string& help, std::function<Result(const Options&)> fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    common(sub);
    handlers[sub] = std::move(fn);
    return sub;
  };

  add("info", "ring summary", cmd_info);
  add("multiply", "product of class expressions", cmd_multiply)
      ->add_option("classes", o.inputs, "expressions such as s[2,1], p1^2*q2, 3/2")
      ->required();
  add("normal-form", "Schubert normal form of an expression", cmd_normal_form)
      ->add_option("expression", o.inputs, "polynomial or class expression")
      ->required();
  CLI::App* apply = add("apply-op", "apply E, F or H to a class", cmd_apply_op);
  op_option(apply);
  apply->add_option("class", o.inputs, "class expression")->required();
  CLI::App* verify = add("verify", "run verification suites", cmd_verify);
  verify->add_option("--suite", o.suite, "suite selector")
      ->check(CLI::IsMember({"sl2", "ideal", "lefschetz", "dynkin", "agreement", "gorenstein", "reconstruct", "all"}));
  verify->add_option("--seed", o.seed, "seed for randomized checks");
  add("betti", "Betti numbers", cmd_betti);
  add("cogenerator", "dual cogenerator polynomial", cmd_cogenerator);
  CLI::App* recon = add("reconstruct", "recover a differential expression for E, F or H", cmd_reconstruct);
  op_option(recon);
  recon->add_option("--max-order", o.max_order, "largest order searched")->check(CLI::NonNegativeNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return {0, app.help(), ""};
  } catch (const CLI::CallForAllHelp&) {
    return {0, app.help("", CLI::AppFormatMode::All), ""};
  } catch (const CLI::ParseError& e) {
    return {kExitUsage, "", std::string(e.what()) + "\n" + "run with --help for usage\n"};
  }

  for (const auto& [sub, handler] : handlers) {
    if (!sub->parsed()) continue;
    try {
      return handler(o);
    } catch (const std::invalid_argument& e) {
      return {kExitUsage, "", std::string("error: ") + e.what() + "\n"};
    } catch (const std::exception& e) {
      json j = {{"pass", false}, {"error", e.what()}};
      return {kExitCheckFailed, dump(j), std::string("error: ") + e.what() + "\n"};
    }
  }
  return {kExitUsage, "", "no command given\n"};
}

}  // namespace grass::cli
