// Writes the synthetic data sets used by the tests and examples.
//
//   make_synthetic gps  <n> <seed> <out.plt>
//   make_synthetic hand <n> <seed> <out.csv>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "faststray/io.hpp"
#include "faststray/synthetic.hpp"

int main(int argc, char** argv) {
  if (argc != 5) {
    std::cerr << "usage: make_synthetic {gps|hand} <n> <seed> <output>\n";
    return 1;
  }
  const std::string kind = argv[1];
  const auto n = static_cast<std::size_t>(std::strtoull(argv[2], nullptr, 10));
  const auto seed = std::strtoull(argv[3], nullptr, 10);
  std::ofstream out(argv[4]);
  if (!out) {
    std::cerr << "cannot open " << argv[4] << '\n';
    return 2;
  }
  if (kind == "gps") {
    faststray::write_plt(out, faststray::synthetic::gps_track(seed, n));
  } else if (kind == "hand") {
    faststray::write_csv(out, faststray::synthetic::smooth_trajectory(seed, n));
  } else {
    std::cerr << "unknown kind " << kind << '\n';
    return 1;
  }
  return 0;
}
