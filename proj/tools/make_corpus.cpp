// Regenerates the shipped corpus bundles. The files are canonical, so the
// test-suite can compare them byte for byte against the builders.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "gmcat/stock.hpp"

int main(int argc, char** argv) {
  const std::filesystem::path dir = argc > 1 ? argv[1] : "corpus";
  std::filesystem::create_directories(dir);
  for (const auto& bundle : gmcat::stock::corpus()) {
    const auto path = dir / (bundle.name + ".json");
    std::ofstream out(path);
    if (!out) {
      std::cerr << "cannot write " << path << "\n";
      return 1;
    }
    out << gmcat::canonical_dump(gmcat::bundle_to_json(bundle));
    std::cout << path.string() << "\n";
  }
  return 0;
}
