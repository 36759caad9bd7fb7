#pragma once

#include <string>
#include <vector>

#include "tclass/code.hpp"

namespace tclass {

/// A built-in reference code with its expected classification.
struct CorpusEntry {
    std::string name;
    std::string stab_text;
    int expected_case;
    std::string note;
};

const std::vector<CorpusEntry>& corpus();

/// Parsed code for a corpus entry; throws std::invalid_argument for unknown
/// names.
StabilizerCode corpus_code(std::string_view name);

}  // namespace tclass
