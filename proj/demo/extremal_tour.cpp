// A short walk through the library: build the extremal graphs for n = 10,
// compare their star counts with the bound, and confirm a small case by
// exhaustive search.

#include <iostream>

#include "tstar/tstar.hpp"

using namespace tstar;

int main() {
  constexpr int n = 10, ell = 0, d = 4;

  std::cout << "G^0_10(i) star counts\n";
  for (int i = 1; i <= g_top_index(n, ell); ++i) {
    const graph g = build_g(family_params{n, ell, i});
    std::cout << "  i=" << i << "  " << graph6_encode(g) << "  hamiltonian=" << std::boolalpha << is_hamiltonian(g);
    for (int t = 2; t <= 6; ++t) std::cout << "  s_" << t << "=" << count_stars(g, t);
    std::cout << '\n';
  }

  for (int t = 2; t <= 7; ++t) {
    const auto b = bound_main(n, ell, d, t);
    std::cout << "bound n=10 d=4 t=" << t << ": " << b.value << " at " << to_string(b.argmax) << '\n';
  }

  const auto fam = verify_example_34();
  std::cout << "two-member family at i=4: " << (fam.ok ? "counts agree for t >= 6" : "check failed") << '\n';

  const auto r = extremal_search(search_task{7, 2, property_spec::hamiltonian(), 3});
  std::cout << "exhaustive n=7 d=2 t=3: max " << (r.max_count ? r.max_count->str() : "none") << ", bound " << r.bound
            << ", " << to_string(r.outcome) << ", maximizers:";
  for (const auto& g6 : r.extremal_graphs) std::cout << ' ' << g6;
  std::cout << '\n';

  const graph p = petersen_graph();
  std::cout << "Petersen: kappa=" << vertex_connectivity(p) << " hamiltonian=" << is_hamiltonian(p)
            << " traceable=" << is_traceable(p) << '\n';
}
