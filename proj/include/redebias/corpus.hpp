#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace redebias {

// Half-open token index range [begin, end).
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  bool operator==(const Span&) const = default;
};

// Ordered relation label set; one label is the designated no_relation class.
struct LabelSpace {
  std::vector<std::string> names;
  std::size_t no_relation_index = 0;

  std::size_t size() const { return names.size(); }
  const std::string& no_relation_name() const { return names[no_relation_index]; }
  bool contains(const std::string& name) const;
  // Index of `name`; throws std::invalid_argument when unknown.
  std::size_t index_of(const std::string& name) const;

  bool operator==(const LabelSpace&) const = default;
};

// Throws std::invalid_argument when names are empty or duplicated, or when
// the no_relation index is out of range.
void validate_labels(const LabelSpace& labels);

// One pre-tokenized sentence with a subject/object entity pair and a gold
// relation index into a LabelSpace.
struct Instance {
  std::string id;
  std::vector<std::string> tokens;
  Span subj_span;
  Span obj_span;
  std::string subj_type;
  std::string obj_type;
  std::size_t gold_relation = 0;

  bool operator==(const Instance&) const = default;
};

// Surface string of a span: its tokens joined by single spaces.
std::string mention_text(const Instance& inst, const Span& span);

// Checks spans (in range, non-empty, non-overlapping) and the gold index.
// Throws std::invalid_argument naming the offending field.
void validate_instance(const Instance& inst, const LabelSpace& labels);

// --- on-disk formats ---
//
// Label file: one relation name per line, the first line is the no_relation
// name. save_labels writes the canonical order (no_relation first);
// load_labels therefore always yields no_relation_index == 0.
LabelSpace load_labels(const std::string& path);
void save_labels(const LabelSpace& labels, const std::string& path);

// Corpus file: one JSON object per line with fields
// {id, tokens, subj_span, obj_span, subj_type, obj_type, relation}.
// Relation names resolve against `labels`. Parse errors name the line and
// field. save_corpus(load_corpus(path)) reproduces a normalized file.
std::vector<Instance> load_corpus(const std::string& path, const LabelSpace& labels);
void save_corpus(const std::vector<Instance>& instances, const LabelSpace& labels,
                 const std::string& path);

// The exact bytes save_corpus writes.
std::string corpus_to_jsonl(const std::vector<Instance>& instances, const LabelSpace& labels);

}  // namespace redebias
