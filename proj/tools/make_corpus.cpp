// Writes the reference actions as scenario files: make_corpus <dir>

#include <filesystem>
#include <fstream>
#include <iostream>

#include <ghostpi/builders.hpp>
#include <ghostpi/io.hpp>

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_corpus <dir>\n";
    return 2;
  }
  const std::filesystem::path dir = argv[1];
  std::filesystem::create_directories(dir);
  for (const auto& spec : ghostpi::build::reference_actions()) {
    ghostpi::io::Json j;
    j["kind"] = "action";
    j["name"] = spec.name;
    j["description"] = spec.description;
    j["complex"] = ghostpi::io::complex_to_json(spec.complex);
    ghostpi::io::Json gens = ghostpi::io::Json::array();
    for (const auto& g : spec.generators)
      gens.push_back(ghostpi::io::vertex_map_to_json(g));
    j["generators"] = std::move(gens);
    j["basepoint"] = spec.basepoint ? ghostpi::io::Json(*spec.basepoint) : ghostpi::io::Json(nullptr);
    std::ofstream out(dir / (spec.name + ".json"));
    out << j.dump() << "\n";
  }
  return 0;
}
