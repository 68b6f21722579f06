#include "ideal/decomposition.hpp"

namespace ideal {

const char* decomp_mode_name(DecompMode mode) {
    switch (mode) {
        case DecompMode::Inter: return "inter";
        case DecompMode::Union: return "union";
        case DecompMode::Leaf: return "leaf";
    }
    return "unknown";
}

}  // namespace ideal
