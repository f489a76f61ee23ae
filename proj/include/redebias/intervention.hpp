#pragma once

#include <string>

#include "redebias/corpus.hpp"

namespace redebias {

// The three causal-graph manipulations a scorer can be queried under:
// the untouched input, entities with the context wiped, and a fully
// blanked input that exposes only what the model brings by itself.
enum class InterventionKind { Original, EntityOnly, Blank };

const char* to_string(InterventionKind kind);

inline constexpr const char* kBlankToken = "_";
// Entity type used when an intervention erases type information.
inline constexpr const char* kNullType = "<null>";

// Token-level realization of an intervention, for scorers that consume text.
//   Original:   unchanged copy.
//   EntityOnly: every token outside the two entity spans becomes blank_token;
//               spans and types are preserved.
//   Blank:      every token becomes blank_token and both entity types are
//               replaced by kNullType; spans are preserved.
Instance apply_intervention(const Instance& inst, InterventionKind kind,
                            const std::string& blank_token = kBlankToken);

}  // namespace redebias
