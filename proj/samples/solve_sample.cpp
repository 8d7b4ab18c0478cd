// Solves a small instance with every solver and prints the objectives.
//
//   solve_sample [instance-file]

#include <fstream>
#include <iostream>

#include "bcmcf/bcmcf.hpp"

namespace {

constexpr const char* kDefaultInstance = R"(p bcmcf 4 5 3
n 1 s
n 4 t
a 1 2 2 -3 1
a 1 3 2 -1 0
a 2 4 2 -2 1
a 3 4 2 0 0
a 2 3 1 1 0
)";

}  // namespace

int main(int argc, char** argv) {
  bcmcf::Instance inst;
  if (argc > 1) {
    std::ifstream in(argv[1]);
    if (!in) {
      std::cerr << "cannot open " << argv[1] << '\n';
      return 2;
    }
    inst = bcmcf::ParseInstance(in);
  } else {
    inst = bcmcf::ParseInstance(kDefaultInstance);
  }

  const bcmcf::Solution exact = bcmcf::SolveExact(inst);
  std::cout << "exact      objective " << bcmcf::ToString(exact.objective) << "  fee "
            << bcmcf::ToString(exact.flow.fee) << "  lambda " << bcmcf::ToString(*exact.lambda)
            << "  probes " << exact.iterations << '\n';

  for (double eps : {0.5, 0.1}) {
    const bcmcf::Solution gk = bcmcf::SolveGk(inst, eps);
    std::cout << "gk eps=" << eps << " objective " << bcmcf::ToDecimal(gk.objective, 6) << "  fee "
              << bcmcf::ToDecimal(gk.flow.fee, 6) << "  iterations " << gk.iterations << '\n';
  }

  std::cout << "frontier (cost fee):\n";
  for (const auto& p : bcmcf::EnumerateFrontier(inst)) {
    std::cout << "  " << bcmcf::ToString(p.cost) << ' ' << bcmcf::ToString(p.fee) << '\n';
  }
  return 0;
}
