// Writes the builder-generated catalogue entries as ring bundle files.
// Usage: gen_zoo_data <output-dir>
#include <fstream>
#include <iostream>

#include "kcs/zoo.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: gen_zoo_data <output-dir>\n";
    return 2;
  }
  const std::filesystem::path dir = argv[1];
  std::filesystem::create_directories(dir);
  for (const auto& name : kcs::catalogue()) {
    std::string text;
    try {
      text = kcs::serialize_ring_bundle(kcs::build_catalogue_entry(name));
    } catch (const std::invalid_argument&) {
      continue;  // hand-written entry
    }
    kcs::parse_ring_bundle(text);
    std::ofstream(dir / (name + ".json"), std::ios::binary) << text;
    std::cout << name << "\n";
  }
  return 0;
}
