// Writes the example files under data/ from the test fixtures.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "support/data_files.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_data <dir>\n";
    return 2;
  }
  std::filesystem::path dir = argv[1];
  std::filesystem::create_directories(dir);
  for (const auto& f : wigmore::testing::data_files()) {
    std::ofstream out(dir / f.name, std::ios::binary | std::ios::trunc);
    out << f.contents;
    if (!out) {
      std::cerr << "cannot write " << (dir / f.name) << "\n";
      return 1;
    }
    std::cout << (dir / f.name).string() << "\n";
  }
  return 0;
}
