// Regenerates the bundled corpus files and their golden machine reports.
// Usage: make_corpus <output-dir>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "lefschetz/corpus_io.hpp"
#include "lefschetz/report.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_corpus <output-dir>\n";
    return 2;
  }
  namespace fs = std::filesystem;
  const fs::path out_dir = argv[1];
  fs::create_directories(out_dir / "golden");

  for (const auto& entry : lefschetz::bundled_corpus()) {
    const fs::path model_path = out_dir / (entry.id + ".model");
    lefschetz::save_model(entry.model, model_path);

    const lefschetz::Report report = lefschetz::build_report(entry.model, {});
    const fs::path golden_path = out_dir / "golden" / (entry.id + ".report.json");
    std::ofstream out(golden_path, std::ios::binary);
    out << lefschetz::render_machine(report);
    std::cout << entry.id << " -> " << model_path.string() << "\n";
  }
  return 0;
}
