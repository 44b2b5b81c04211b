#pragma once

#include "salemhk/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace salemhk {

struct CorpusEntry {
    std::string name;
    IntPoly poly;
    std::string lambda; // decimal approximation, for display only
    std::string source;
};

// Bundled Salem polynomials of degrees 4 to 24.
const std::vector<CorpusEntry>& salem_corpus();
std::optional<CorpusEntry> find_corpus_entry(const std::string& name);

} // namespace salemhk
