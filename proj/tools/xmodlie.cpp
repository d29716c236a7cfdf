#include <CLI11.hpp>
#include <iostream>

#include "xmodlie/commands.hpp"

namespace {

struct GlobalArgs {
  std::vector<std::string> inputs;
  std::string format = "human";
  bool strict = false;
};

int emit(const xmodlie::Report& report, const GlobalArgs& args) {
  std::cout << report.render(args.format == "machine");
  return report.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "xmodlie - braided crossed modules of Lie algebras over exact rationals"};
  app.require_subcommand(1);

  GlobalArgs args;
  app.add_option("--input,-i", args.inputs, "definition files to load")
      ->expected(-1);
  app.add_option("--format,-f", args.format, "output format")
      ->check(CLI::IsMember({"human", "machine"}))
      ->capture_default_str();
  app.add_flag("--strict", args.strict,
               "fail when a derived invariant is violated, not only axioms");

  std::vector<std::string> names;
  std::string tensor_left, tensor_right;
  std::string act_mn, act_nm;
  std::string demo_id;

  CLI::App* verify = app.add_subcommand("verify", "re-run object verifiers");
  verify->fallthrough();
  verify->add_option("names", names, "objects to verify (default: all)");

  CLI::App* analyze =
      app.add_subcommand("analyze", "centers, commutators, perfectness");
  analyze->fallthrough();
  analyze->add_option("name", names, "object to analyze")->required();

  CLI::App* tensor =
      app.add_subcommand("tensor", "build a non-abelian tensor product");
  tensor->fallthrough();
  tensor->add_option("m", tensor_left, "left algebra")->required();
  tensor->add_option("n", tensor_right, "right algebra")->required();
  tensor->add_option("--left-on-right", act_mn,
                     "action of m on n (name, adjoint, zero)");
  tensor->add_option("--right-on-left", act_nm,
                     "action of n on m (name, adjoint, zero)");

  CLI::App* uce =
      app.add_subcommand("uce", "universal central extension or certificate");
  uce->fallthrough();
  uce->add_option("name", names, "braided crossed module")->required();

  CLI::App* classify = app.add_subcommand("classify", "classify a morphism");
  classify->fallthrough();
  classify->add_option("name", names, "morphism to classify")->required();

  CLI::App* demo = app.add_subcommand("demo", "reproduce a worked example");
  demo->fallthrough();
  demo->add_option("id", demo_id, "k2k3 | uce-perfect | sl2-corollary")
      ->required();

  CLI11_PARSE(app, argc, argv);

  const xmodlie::CommandOptions opt{args.strict};
  try {
    if (demo->parsed()) return emit(xmodlie::cmd_demo(demo_id, opt), args);

    const xmodlie::Workspace ws = xmodlie::load(args.inputs);
    if (verify->parsed())
      return emit(xmodlie::cmd_verify(ws, names, opt), args);
    if (analyze->parsed())
      return emit(xmodlie::cmd_analyze(ws, names.at(0), opt), args);
    if (tensor->parsed())
      return emit(
          xmodlie::cmd_tensor(ws, tensor_left, tensor_right, act_mn, act_nm, opt),
          args);
    if (uce->parsed()) return emit(xmodlie::cmd_uce(ws, names.at(0), opt), args);
    if (classify->parsed())
      return emit(xmodlie::cmd_classify(ws, names.at(0), opt), args);
  } catch (const xmodlie::XmodError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return static_cast<int>(xmodlie::ErrorKind::internal);
  }
  return 0;
}
