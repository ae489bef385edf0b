// Writes every built-in fixture to <dir>/<name>.json.
#include <filesystem>
#include <fstream>
#include <iostream>

#include "plueckerlab/io/fixtures.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: export_fixtures <dir>\n";
    return 2;
  }
  std::filesystem::create_directories(argv[1]);
  for (const auto& name : plab::io::builtin_names()) {
    std::ofstream f(std::filesystem::path(argv[1]) / (name + ".json"));
    f << plab::io::builtin_fixture(name)->dump(2) << "\n";
  }
  return 0;
}
