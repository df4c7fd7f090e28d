#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "plumb/graph_io.hpp"
#include "plumb/moves.hpp"
#include "plumb/presentation.hpp"
#include "plumb/report.hpp"

namespace {

constexpr int kInputError = 1;
constexpr int kMoveError = 2;

plumb::PlumbingGraph load(const std::string& path) {
  const auto text = plumb::read_file(path);
  return plumb::parse_graph(text);
}

int present(const std::string& path) {
  std::cout << plumb::export_text(plumb::build_presentation(load(path))) << "\n";
  return 0;
}

int abelianize(const std::string& path) {
  const auto p = plumb::build_presentation(load(path));
  const auto ab = plumb::abelianization(p);
  std::string group;
  for (const auto& f : ab.invariant_factors) group += (group.empty() ? "" : " + ") + (f == 0 ? "Z" : "Z/" + f.str());
  std::cout << "H1 = " << (group.empty() ? "0" : group) << "\n";
  for (std::size_t i = 0; i < p.generators().size(); ++i) {
    const auto o = ab.order_of(i);
    std::cout << plumb::name(p.generators()[i]) << ": " << (o == 0 ? "inf" : o.str()) << "\n";
  }
  return 0;
}

int analyze(const std::string& path, const plumb::AnalyzeOptions& opt, bool pretty) {
  const auto report = plumb::analyze_report(load(path), opt);
  if (pretty) std::cout << plumb::render_pretty(report);
  else std::cout << report.dump(2) << "\n";
  return 0;
}

int moves(const std::string& path, const std::vector<std::string>& move_args) {
  const auto g = load(path);
  auto arg = [&](std::size_t i) {
    try {
      return std::stoi(move_args.at(i));
    } catch (const std::exception&) {
      throw CLI::ValidationError("move", "expected a vertex id at position " + std::to_string(i + 1));
    }
  };
  const std::string& kind = move_args.at(0);
  plumb::MoveResult r;
  if (kind == "blowup-edge" && move_args.size() == 3) r = plumb::blow_up_edge(g, {arg(1), arg(2)});
  else if (kind == "blowup-point" && move_args.size() == 2) r = plumb::blow_up_point(g, arg(1));
  else if (kind == "blowdown" && move_args.size() == 2) r = plumb::blow_down(g, arg(1));
  else throw CLI::ValidationError("move", "expected blowup-edge U V, blowup-point V or blowdown V");
  std::cout << plumb::emit_graph(r.graph);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"plumbing graphs and their local fundamental groups"};
  app.require_subcommand(1);

  std::string file;
  auto* present_cmd = app.add_subcommand("present", "print the group presentation");
  present_cmd->add_option("file", file, "graph file")->required();

  auto* abel_cmd = app.add_subcommand("abelianize", "print the abelianization");
  abel_cmd->add_option("file", file, "graph file")->required();

  plumb::AnalyzeOptions opt;
  std::string oracle = "off";
  bool pretty = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "decide the orders of the curve generators");
  analyze_cmd->add_option("file", file, "graph file")->required();
  analyze_cmd->add_option("--theorem", opt.theorem, "a, b, c or auto")
      ->check(CLI::IsMember({"a", "b", "c", "auto"}))
      ->capture_default_str();
  analyze_cmd->add_option("--oracle", oracle, "off or check")->check(CLI::IsMember({"off", "check"}))->capture_default_str();
  analyze_cmd->add_option("--max-cosets", opt.max_cosets, "coset limit for the oracle")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  analyze_cmd->add_flag("--pretty", pretty, "human-readable output");

  std::vector<std::string> move_args;
  auto* moves_cmd = app.add_subcommand("moves", "apply a blow-up or blow-down and print the new graph");
  moves_cmd->add_option("file", file, "graph file")->required();
  moves_cmd->add_option("move", move_args, "blowup-edge U V | blowup-point V | blowdown V")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kMoveError;
  }
  opt.oracle = oracle == "check";

  try {
    if (*present_cmd) return present(file);
    if (*abel_cmd) return abelianize(file);
    if (*analyze_cmd) return analyze(file, opt, pretty);
    if (*moves_cmd) return moves(file, move_args);
  } catch (const plumb::Error& e) {
    const bool input = e.code() == plumb::ErrorCode::ParseError || e.code() == plumb::ErrorCode::ValidationError;
    std::cerr << file << ": " << plumb::to_string(e.code()) << ": " << e.what() << "\n";
    return input ? kInputError : kMoveError;
  } catch (const CLI::ValidationError& e) {
    std::cerr << file << ": " << e.what() << "\n";
    return kMoveError;
  } catch (const std::runtime_error& e) {
    std::cerr << e.what() << "\n";
    return kInputError;
  }
  return 0;
}
