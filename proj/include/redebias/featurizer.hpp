#pragma once

#include <map>
#include <string>

#include "redebias/corpus.hpp"
#include "redebias/intervention.hpp"

namespace redebias {

// Namespaced feature multiset (feature string -> multiplicity).
// Namespaces: ctx: context unigrams outside both entity spans,
// subj:/obj: mention surface strings, st:/ot: entity types, tp: type pair.
using FeatureBag = std::map<std::string, int>;

// Original keeps all namespaces; EntityOnly drops every ctx: feature;
// Blank yields the empty bag. The blank token never becomes a ctx: feature,
// so masking cannot introduce a learnable signal.
FeatureBag featurize(const Instance& inst, InterventionKind kind);

}  // namespace redebias
