#include "ainf_cli/cli.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "ainf/io.hpp"
#include "ainf/parallel.hpp"

namespace ainf::cli {

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

struct CheckArgs {
  std::vector<std::string> files;
  std::optional<int> bound;
  std::string report = "text";
};

int emit_report(const CheckReport& r, const std::string& format, std::ostream& out) {
  out << (format == "json" ? io::report_json(r) : io::report_text(r));
  return r.passed ? kPass : kFail;
}

CheckOptions options_for(const CheckArgs& a, int max_arity) {
  CheckOptions o;
  o.bound = a.bound.value_or(max_arity + 2);
  if (o.bound < 0) throw InputError("--bound must be non-negative");
  o.workers = default_workers();
  return o;
}

void expect_files(const CheckArgs& a, std::size_t n, const std::string& usage) {
  if (a.files.size() != n) throw InputError("expected " + usage);
}

int check(const std::string& kind, const CheckArgs& a, std::ostream& out) {
  if (kind == "algebra") {
    expect_files(a, 1, "ALGEBRA");
    auto alg = io::parse_algebra(io::read_file(a.files[0]));
    return emit_report(check_relations(*alg, options_for(a, alg->max_arity())), a.report, out);
  }
  if (kind == "bimodule") {
    expect_files(a, 2, "ALGEBRA BIMODULE");
    auto alg = io::parse_algebra(io::read_file(a.files[0]));
    auto bm = io::parse_bimodule(io::read_file(a.files[1]), alg);
    const int max = std::max(alg->max_arity(), bm->max_arity());
    return emit_report(check_bimodule(*bm, options_for(a, max)), a.report, out);
  }
  if (kind == "morphism") {
    expect_files(a, 4, "ALGEBRA SOURCE TARGET MORPHISM");
    auto alg = io::parse_algebra(io::read_file(a.files[0]));
    auto src = io::parse_bimodule(io::read_file(a.files[1]), alg);
    auto tgt = io::parse_bimodule(io::read_file(a.files[2]), alg);
    auto f = io::parse_morphism(io::read_file(a.files[3]), src, tgt);
    const int max = std::max({alg->max_arity(), src->max_arity(), tgt->max_arity(), f->max_arity()});
    return emit_report(check_morphism(*f, options_for(a, max)), a.report, out);
  }
  if (kind == "iprod") {
    expect_files(a, 2, "ALGEBRA INNER_PRODUCT");
    auto alg = io::parse_algebra(io::read_file(a.files[0]));
    auto ip = io::parse_inner_product(io::read_file(a.files[1]), alg);
    const int max = std::max(alg->max_arity(), ip->max_arity());
    return emit_report(check_inner_product(*ip, options_for(a, max)), a.report, out);
  }
  throw InputError("unknown structure kind '" + kind + "'");
}

struct DiagramArgs {
  int leaves = 0;
  std::optional<int> degree;
  std::string format = "dot";
  std::string file;
  bool json = false;
};

void print_diagram(const diagrams::Diagram& d, bool json, std::ostream& out) {
  if (json) out << io::emit_diagram(d);
  else out << diagrams::degree(d) << '\t' << diagrams::to_text(d) << '\n';
}

int diagrams_cmd(const std::string& sub, const DiagramArgs& a, std::ostream& out) {
  auto need_leaves = [&] {
    if (a.leaves < 2) throw InputError("--leaves must be at least 2");
  };
  if (sub == "enum") {
    need_leaves();
    if (a.degree) {
      for (const auto& d : diagrams::enumerate(a.leaves, *a.degree)) print_diagram(d, a.json, out);
    } else {
      for (const auto& [n, basis] : diagrams::enumerate_all(a.leaves))
        for (const auto& d : basis) print_diagram(d, a.json, out);
    }
    return kPass;
  }
  if (sub == "d") {
    if (a.file.empty()) throw InputError("d needs a diagram file");
    const auto d = diagrams::canonicalize(io::parse_diagram(io::read_file(a.file)));
    const auto boundary = diagrams::differential(diagrams::Chain(d));
    if (boundary.is_zero() && !a.json) out << "0\n";
    for (const auto& t : boundary.diagrams()) print_diagram(t, a.json, out);
    return kPass;
  }
  if (sub == "d2check") {
    need_leaves();
    const auto r = diagrams::check_d_squared(a.leaves);
    for (const auto& f : r.failures) out << f << '\n';
    out << (r.passed ? "PASS" : "FAIL") << ": d^2 = 0 and degree drop on " << r.diagrams << " diagrams, "
        << r.insertions << " insertions, " << a.leaves << " leaves\n";
    return r.passed ? kPass : kFail;
  }
  if (sub == "homology") {
    need_leaves();
    for (const auto& [n, b] : diagrams::homology_ranks(a.leaves)) out << n << ": " << b << '\n';
    return kPass;
  }
  if (sub == "render") {
    if (a.file.empty()) throw InputError("render needs a diagram file");
    const auto fmt = diagrams::parse_render_format(a.format);
    out << diagrams::render(diagrams::canonicalize(io::parse_diagram(io::read_file(a.file))), fmt);
    return kPass;
  }
  throw InputError("unknown diagrams subcommand '" + sub + "'");
}

struct HochArgs {
  std::vector<std::string> files;
  std::string bimodule;
  bool experimental = false;
  std::optional<int> bound;
};

int hoch_cmd(const std::string& sub, const HochArgs& a, std::ostream& out) {
  const SignMode mode = a.experimental ? SignMode::ExperimentalSigned : SignMode::Mod2;
  if (a.files.empty()) throw InputError("expected ALGEBRA COCHAIN...");
  auto alg = io::parse_algebra(io::read_file(a.files[0]));
  auto load = [&](std::shared_ptr<const AInfBimodule> m, std::size_t i) {
    return io::parse_cochain(io::read_file(a.files[i]), std::move(m));
  };
  if (sub == "delta") {
    if (a.files.size() != 2) throw InputError("expected ALGEBRA COCHAIN");
    std::shared_ptr<const AInfBimodule> m = a.bimodule.empty()
                                                ? std::make_shared<const AInfBimodule>(self_bimodule(alg))
                                                : io::parse_bimodule(io::read_file(a.bimodule), alg);
    out << io::emit_cochain(delta(load(m, 1), a.bound));
    return kPass;
  }
  if (!a.bimodule.empty()) throw InputError("--bimodule applies to delta only");
  if (sub == "cup" || sub == "bracket") {
    if (a.files.size() != 3) throw InputError("expected ALGEBRA COCHAIN COCHAIN");
    auto m = std::make_shared<const AInfBimodule>(self_bimodule(alg));
    const auto f = load(m, 1), g = load(m, 2);
    out << io::emit_cochain(sub == "cup" ? cup(f, g, mode, a.bound) : bracket(f, g, mode, a.bound));
    return kPass;
  }
  if (sub == "b") {
    if (a.files.size() != 2) throw InputError("expected ALGEBRA COCHAIN");
    if (!alg->basis().unit()) throw InputError("Connes' operator needs a designated unit");
    auto m = std::make_shared<const AInfBimodule>(dual_self_bimodule(alg));
    out << io::emit_cochain(connes_b(load(m, 1), mode));
    return kPass;
  }
  throw InputError("unknown hoch subcommand '" + sub + "'");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for A-infinity structures and inner-product diagrams", "ainf"};
  app.require_subcommand(1);
  std::function<int()> action;

  CheckArgs check_args;
  std::string check_kind;
  auto* check_cmd = app.add_subcommand("check", "Check the relations of a structure");
  check_cmd->add_option("kind", check_kind, "algebra | bimodule | morphism | iprod")
      ->required()
      ->check(CLI::IsMember({"algebra", "bimodule", "morphism", "iprod"}));
  check_cmd->add_option("files", check_args.files, "Structure files, algebra first")->required();
  check_cmd->add_option("--bound", check_args.bound, "Word-length bound (default max_arity + 2)");
  check_cmd->add_option("--report", check_args.report, "json | text")->check(CLI::IsMember({"json", "text"}));
  check_cmd->callback([&] { action = [&] { return check(check_kind, check_args, out); }; });

  std::vector<std::string> dual_files;
  std::string dual_sign = "printed";
  auto* dual_cmd = app.add_subcommand("dual", "Emit the dual bimodule");
  dual_cmd->add_option("files", dual_files, "ALGEBRA BIMODULE")->required()->expected(2);
  dual_cmd->add_option("--sign", dual_sign, "printed | shifted")->check(CLI::IsMember({"printed", "shifted"}));
  dual_cmd->callback([&] {
    action = [&] {
      auto alg = io::parse_algebra(io::read_file(dual_files[0]));
      auto bm = io::parse_bimodule(io::read_file(dual_files[1]), alg);
      out << io::emit_bimodule(dual(*bm, dual_sign == "shifted" ? DualSign::Shifted : DualSign::Printed));
      return kPass;
    };
  });

  DiagramArgs diag_args;
  std::string diag_sub;
  auto* diag_cmd = app.add_subcommand("diagrams", "Inner-product diagram complex");
  diag_cmd->add_option("subcommand", diag_sub, "enum | d | d2check | homology | render")
      ->required()
      ->check(CLI::IsMember({"enum", "d", "d2check", "homology", "render"}));
  diag_cmd->add_option("file", diag_args.file, "Diagram file (d, render)");
  diag_cmd->add_option("--leaves", diag_args.leaves, "Number of leaves N");
  diag_cmd->add_option("--degree", diag_args.degree, "Degree filter for enum");
  diag_cmd->add_option("--format", diag_args.format, "dot | tikz")->check(CLI::IsMember({"dot", "tikz"}));
  diag_cmd->add_flag("--json", diag_args.json, "Print diagrams as JSON lines");
  diag_cmd->callback([&] { action = [&] { return diagrams_cmd(diag_sub, diag_args, out); }; });

  HochArgs hoch_args;
  std::string hoch_sub;
  auto* hoch_cmd_app = app.add_subcommand("hoch", "Hochschild cochain operations");
  hoch_cmd_app->add_option("subcommand", hoch_sub, "delta | cup | bracket | b")
      ->required()
      ->check(CLI::IsMember({"delta", "cup", "bracket", "b"}));
  hoch_cmd_app->add_option("files", hoch_args.files, "ALGEBRA COCHAIN [COCHAIN]")->required();
  hoch_cmd_app->add_option("--bimodule", hoch_args.bimodule, "Coefficient bimodule for delta (default: A)");
  hoch_cmd_app->add_option("--bound", hoch_args.bound, "Largest output arity");
  hoch_cmd_app->add_flag("--experimental-signs", hoch_args.experimental,
                         "Use engine-derived signs instead of Z/2 (experimental)");
  hoch_cmd_app->callback([&] { action = [&] { return hoch_cmd(hoch_sub, hoch_args, out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kInputError;
  }
  try {
    return action ? action() : kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace ainf::cli
