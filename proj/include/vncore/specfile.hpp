#pragma once

#include <string>

#include "vncore/category.hpp"
#include "vncore/fibre.hpp"

namespace vncore {

/// One self-contained input: a presented braided monoidal category together
/// with a fibre functor carrying monoidal, comonoidal, and duality data.
struct SpecData {
    std::string name;
    std::string description;
    CatPresentation cat;
    MonoidalData mon;
    FibreFunctor functor;
};

/// Parse and shape-check a spec file. Throws SpecError with a diagnostic on
/// malformed JSON, unknown identifiers, or mismatched matrix shapes.
SpecData load_spec(const std::string& path);
SpecData spec_from_json_text(const std::string& text);

/// Serialize deterministically (fixed key order, canonical rationals).
std::string spec_to_json_text(const SpecData& spec);
void save_spec(const SpecData& spec, const std::string& path);

}  // namespace vncore
