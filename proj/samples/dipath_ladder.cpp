// Prints lambda of directed paths of growing length, then classifies the
// triangular wheel's lambda-4 orientations.

#include <iostream>

#include "l21/explorer.hpp"

int main() {
  using namespace l21;
  for (int len : {1, 2, 3, 4, 10}) {
    std::vector<Arc> arcs;
    for (int i = 0; i < len; ++i) arcs.emplace_back(i, i + 1);
    auto result = solve_lambda(OrientedGraph::from_arcs(len + 1, arcs));
    std::cout << "dipath of length " << len << ": lambda " << result.lambda << ", labels";
    for (int c : result.witness.colors) std::cout << ' ' << c;
    std::cout << '\n';
  }
  auto wheel = check_triangular_wheel_classes();
  std::cout << "triWheel orientations with lambda 4: " << wheel.lambda4_orientations << " in "
            << wheel.classes_automorphisms.size() << " classes up to automorphism\n";
  for (const auto& c : wheel.classes_automorphisms)
    std::cout << "  " << c.canonical.str() << "  longest dipath " << c.longest << '\n';
}
