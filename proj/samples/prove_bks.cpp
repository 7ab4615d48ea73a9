// Builds both catalogs, shows their diagrams coincide, and prints the
// seven-green non-coloring proof step by step.

#include "ksproof/kscolor.hpp"

#include <iostream>

int main() {
  using namespace ksproof;

  const auto peres = peres_rays();
  const auto penrose = penrose_mpairs();
  const OrthoGraph g = build_graph(peres);
  std::cout << "Peres and Penrose diagrams identical: " << std::boolalpha << (g == build_graph(penrose)) << '\n';

  const ConstraintSet cs = ConstraintSet::from_graph(g);
  const ProofTrace trace = replay_table2(cs);
  for (const TraceStep& step : trace.steps) {
    if (const auto* c = std::get_if<ChoiceStep>(&step)) {
      std::cout << "choose green:";
      for (int v : c->greens) std::cout << ' ' << v;
      std::cout << "   (" << c->justification << ")\n";
    } else if (const auto* f = std::get_if<ForcedStep>(&step)) {
      std::cout << "  " << f->ray << " forced " << to_string(f->color) << " by";
      for (int v : members(cs, f->reason)) std::cout << ' ' << v;
      std::cout << '\n';
    } else {
      std::cout << "contradiction: all red";
      for (int v : members(cs, std::get<ContradictionStep>(step).contradiction.where)) std::cout << ' ' << v;
      std::cout << '\n';
    }
  }
  std::cout << "green rays used: " << trace.green_rays().size() << '\n';
  std::cout << "exhaustive search finds a coloring: " << search_coloring(cs).has_value() << '\n';
}
