#pragma once

// JSON forms of codes, groups, factorizations and analysis records.

#include <json.hpp>

#include "codeaut/cyclic.hpp"
#include "codeaut/perm.hpp"
#include "codeaut/survey.hpp"

namespace codeaut {

using Json = nlohmann::ordered_json;

/// {"n": N, "k": k, "basis": ["0110...", ...]}
Json code_to_json(const LinearCode& c);
/// Accepts the form above; "k" is optional and checked when present.
/// Throws InvalidArgument / LengthMismatch on malformed input.
LinearCode code_from_json(const Json& j);

/// {"degree": N, "order": "decimal", "generators": [[images], ...]}
Json group_to_json(const PermGroup& g);
PermGroup group_from_json(const Json& j);

Json factorization_to_json(const Factorization& f);
Json cyclic_code_to_json(const EnumeratedCyclicCode& e, const Factorization& f);

/// Record fields in a fixed order; timing isolated under "timing".
Json record_to_json(const CodeRecord& r);

}  // namespace codeaut
