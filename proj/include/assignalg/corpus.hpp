#pragma once

#include <string>
#include <vector>

namespace assignalg {

// Bundled regression models: classical small examples plus the
// three-sphere-product computation used throughout the test suite.
// Each entry is a complete model document in the input format.
struct CorpusEntry {
  std::string name;
  std::string description;
  std::string document;  // serialized ModelDocument
};

const std::vector<CorpusEntry>& corpus();
const CorpusEntry& corpus_entry(const std::string& name);

}  // namespace assignalg
