#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "redebias/corpus.hpp"
#include "redebias/featurizer.hpp"
#include "redebias/logit.hpp"

namespace redebias {

enum class TrainMode { standard, entity_mask, resample };

const char* to_string(TrainMode mode);
TrainMode train_mode_from_string(const std::string& name);

// Linear softmax relation classifier. Immutable once trained;
// predict_logits may be called concurrently from many threads.
struct ScorerModel {
  LabelSpace labels;
  std::vector<std::string> feature_names;  // column index -> feature string
  std::unordered_map<std::string, std::size_t> feature_vocab;
  std::vector<double> weights;  // |vocab| x |labels|, row-major
  std::vector<double> bias;     // |labels|
  TrainMode mode = TrainMode::standard;
  std::string config_fingerprint;

  std::size_t num_labels() const { return labels.size(); }
  std::size_t vocab_size() const { return feature_names.size(); }
};

// Replaces entity-span tokens by the entity-type string. Models trained with
// mode=entity_mask apply this at training and at inference time.
Instance mask_entities(const Instance& inst);

// bias + sum of the weight rows of every bag feature found in the
// vocabulary, with multiplicity. Unknown features contribute nothing.
// Pure function of (model, instance, kind).
LogitVector predict_logits(const ScorerModel& model, const Instance& inst,
                           InterventionKind kind);

// Versioned binary container; the round-trip is bit-exact. Loading rejects
// wrong magic, unsupported versions, and truncated files.
void save_model(const ScorerModel& model, const std::string& path);
ScorerModel load_model(const std::string& path);

}  // namespace redebias
