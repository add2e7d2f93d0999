// Regenerates data/proofs/*.json and the manifest from the built-in corpus.
#include <filesystem>
#include <fstream>
#include <iostream>

#include <json.hpp>

#include "coopkit/corpus.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: coopkit-make-corpus <output-dir>\n";
    return 2;
  }
  std::filesystem::path dir(argv[1]);
  std::filesystem::create_directories(dir / "proofs");
  nlohmann::json manifest = nlohmann::json::array();
  for (const auto& entry : coopkit::proof_corpus()) {
    std::ofstream out(dir / "proofs" / (entry.name + ".json"));
    out << coopkit::proof_to_json(entry.proof).dump(2) << "\n";
    nlohmann::json m;
    m["name"] = entry.name;
    m["logic"] = coopkit::to_string(entry.designated);
    nlohmann::json fails = nlohmann::json::array();
    for (auto l : entry.expected_failures) fails.push_back(coopkit::to_string(l));
    m["expected_failures"] = std::move(fails);
    manifest.push_back(std::move(m));
  }
  std::ofstream out(dir / "proofs" / "manifest.json");
  out << manifest.dump(2) << "\n";
  std::cout << "wrote " << coopkit::proof_corpus().size() << " proofs\n";
  return 0;
}
