#include "pathhom/error.hpp"
#include "pathhom/io.hpp"

#include "CLI11.hpp"

#include <iostream>

using namespace pathhom;

namespace {

int exit_code(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::ParseError: return 2;
    case ErrorKind::BudgetExceeded:
    case ErrorKind::StateSpaceTooLarge: return 3;
    default: return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Path homology and homotopy of digraphs"};
  app.require_subcommand(1);

  std::string file, file2;
  bool json = false;

  auto* hom = app.add_subcommand("hom", "Betti numbers and torsion");
  int max_dim = 3;
  std::string ring = "q";
  bool generators = false;
  std::size_t budget = kDefaultPathBudget;
  hom->add_option("file", file, ".dg input")->required();
  hom->add_option("--max-dim", max_dim, "highest dimension reported")->check(CLI::NonNegativeNumber);
  hom->add_option("--ring", ring, "q or z")->check(CLI::IsMember({"q", "z"}));
  hom->add_flag("--generators", generators, "print representative cycles");
  hom->add_option("--budget", budget, "allowed paths enumerated per dimension");
  hom->add_flag("--json", json);

  auto* reduce = app.add_subcommand("reduce", "Remove vertices by one-step retractions");
  reduce->add_option("file", file, ".dg input")->required();
  reduce->add_flag("--json", json);

  auto* product = app.add_subcommand("product", "Cartesian product of two inputs");
  product->add_option("first", file, ".dg input")->required();
  product->add_option("second", file2, ".dg input")->required();

  auto* cyl = app.add_subcommand("cylinder", "Cylinder over the input");
  cyl->add_option("file", file, ".dg input")->required();

  auto* pi1 = app.add_subcommand("pi1", "Loop reduction, equivalence and Hurewicz class");
  std::vector<std::string> loop_texts;
  std::optional<int> max_len;
  std::size_t max_steps = EquivalenceOptions{}.max_steps;
  pi1->add_option("file", file, ".dg input")->required();
  pi1->add_option("--loop", loop_texts, "loop as vertex names")->required()->expected(1, 2)->allow_extra_args(false);
  pi1->add_option("--max-len", max_len, "longest intermediate word in the search");
  pi1->add_option("--max-steps", max_steps, "words expanded before giving up");
  pi1->add_flag("--json", json);

  auto* sperner = app.add_subcommand("sperner", "Tricolor triangle of a Sperner coloring");
  int generate_k = 0;
  std::optional<std::uint64_t> seed;
  auto* file_opt = sperner->add_option("file", file, "triangulation json");
  auto* gen_opt = sperner->add_option("--generate", generate_k, "use a random k-subdivision")->check(CLI::PositiveNumber);
  auto* seed_opt = sperner->add_option("--seed", seed, "generator seed");
  gen_opt->needs(seed_opt);
  seed_opt->needs(gen_opt);
  gen_opt->excludes(file_opt);
  sperner->add_flag("--json", json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*hom) {
      Document d = read_document(file);
      auto r = homology(d.digraph, max_dim, ring == "z" ? Ring::Z : Ring::Q, generators, budget);
      std::cout << (json ? homology_json(r, d.digraph) : homology_text(r, d.digraph));
    } else if (*reduce) {
      auto t = find_reduction(read_document(file).digraph);
      std::cout << (json ? reduction_json(t) : reduction_text(t));
    } else if (*product) {
      Document a = read_document(file), b = read_document(file2);
      if (a.mode == DocumentMode::Graph && b.mode == DocumentMode::Graph)
        std::cout << dump_graph(graph_product(*a.graph, *b.graph));
      else
        std::cout << dump_digraph(cartesian_product(a.digraph, b.digraph));
    } else if (*cyl) {
      std::cout << dump_digraph(cylinder(read_document(file).digraph));
    } else if (*pi1) {
      Document d = read_document(file);
      std::vector<LoopWord> loops;
      for (const auto& t : loop_texts) loops.push_back(parse_loop(d.digraph, t));
      EquivalenceOptions opt;
      opt.max_len = max_len;
      opt.max_steps = max_steps;
      auto r = pi1_report(loops, opt);
      std::cout << (json ? pi1_json(r) : pi1_text(r));
    } else if (*sperner) {
      if (!*gen_opt && file.empty()) {
        std::cerr << "sperner: give a triangulation file or --generate K --seed S\n";
        return 2;
      }
      Triangulation t = *gen_opt ? generate_sperner(generate_k, *seed) : triangulation_from_json(read_file(file));
      auto r = sperner_run(t);
      std::cout << (json ? sperner_json(r) : sperner_text(r));
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e);
  }
  return 0;
}
