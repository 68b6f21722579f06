#pragma once

#include <string>
#include <vector>

#include "ideal/dfa.hpp"

namespace ideal {

enum class DecompMode { Inter, Union, Leaf };

const char* decomp_mode_name(DecompMode mode);

/// One decomposition component with a provenance tag describing which rule
/// produced it: "family:rho=3", "reduced:k=1", "principal:w=ab" or "leaf".
struct DecompComponent {
    Dfa dfa;
    std::string tag;
};

/// A decomposition of `source` into strictly smaller automata whose languages
/// combine under `mode` to recover L(source). `verified` records whether the
/// combination was re-checked against the source by language equivalence.
struct Decomposition {
    DecompMode mode = DecompMode::Leaf;
    Dfa source;
    std::vector<DecompComponent> components;
    bool verified = false;
};

}  // namespace ideal
