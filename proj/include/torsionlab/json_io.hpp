#pragma once

#include <nlohmann/json.hpp>

#include "torsionlab/chain.hpp"
#include "torsionlab/presentation.hpp"

namespace torsionlab {

// {"dims": [...], "boundaries": [rows...], "homology_bases": [[vec...]...]}
// Boundary i is dims[i] x dims[i+1]; accepted either as nested rows or as a
// flat row-major array.
nlohmann::json complex_to_json(const BasedChainComplex& c);
BasedChainComplex complex_from_json(const nlohmann::json& j);

// {"generators": [names], "relators": [words], "meridian": w, "longitude": w,
//  "peripheral": [{"conjugator": w, "sign": +-1, "relator": k}]} — the JSON
// mirror of the DSL, words in the same infix syntax.
nlohmann::json presentation_to_json(const GroupPresentation& p);
GroupPresentation presentation_from_json(const nlohmann::json& j);

}  // namespace torsionlab
