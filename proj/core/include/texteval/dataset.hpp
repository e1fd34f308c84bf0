#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace texteval {

// One evaluation instance: a reference text, a candidate text, and a
// real-valued similarity label in the dataset's native scale.
struct ScoredPair {
  std::string id;
  std::string text_a;
  std::string text_b;
  double gold = 0.0;
};

// How gold labels map onto [0,1].
struct LabelScale {
  enum class Kind { FixedRange, Empirical };
  Kind kind = Kind::FixedRange;
  double min = 0.0;  // used by FixedRange only
  double max = 1.0;

  static LabelScale fixed(double min, double max);
  static LabelScale empirical();
};

struct Dataset {
  std::string name;
  std::vector<ScoredPair> pairs;
  std::optional<LabelScale> label_scale;

  std::size_t size() const { return pairs.size(); }
};

struct SplitDataset {
  Dataset train;
  Dataset valid;
  Dataset test;
  std::uint64_t seed = 0;
};

enum class RecordFormat { Auto, JsonLines, Tsv };

// Reads a dataset file. JSON-lines records carry exactly the fields
// id/text_a/text_b/gold; the TSV form has a header row naming the same
// columns. Duplicate ids, missing fields, and malformed records are
// rejected with the offending line number.
Dataset load_dataset(const std::filesystem::path& path,
                     RecordFormat format = RecordFormat::Auto);

void save_dataset(const Dataset& dataset, const std::filesystem::path& path);

// Validates one pair (non-blank texts, finite gold). Throws DataError.
void validate_pair(const ScoredPair& pair);

// gold' = (gold - min)/(max - min), clamped to [0,1]. Empirical scales take
// min/max from `reference` (normally the training split) so that valid/test
// labels outside the observed range clamp instead of leaking statistics.
Dataset normalize_labels(const Dataset& dataset, const LabelScale& scale,
                         const Dataset* reference = nullptr);

SplitDataset split_dataset(const Dataset& dataset, std::uint64_t seed);

using Prediction = std::pair<std::string, double>;

// One JSON record {"id":..., "score":...} per line; order preserved.
void save_predictions(const std::vector<Prediction>& predictions,
                      const std::filesystem::path& path);

std::vector<Prediction> load_predictions(const std::filesystem::path& path);

}  // namespace texteval
