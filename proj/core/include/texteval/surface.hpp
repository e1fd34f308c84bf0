#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace texteval {

struct BleuConfig {
  enum class Tokenizer { Words, Chars };
  int max_order = 4;           // 1..8
  Tokenizer tokenizer = Tokenizer::Words;
};

// Lowercases, then splits on whitespace (Words) or into individual
// non-whitespace code points (Chars).
std::vector<std::string> bleu_tokenize(std::string_view text, BleuConfig::Tokenizer mode);

// Sentence-level BLEU in [0,1]: geometric mean of modified n-gram precisions
// times the brevity penalty min(1, exp(1 - |ref|/|cand|)). Zero unigram
// precision yields 0; higher orders with zero matches get add-one smoothing;
// orders with no candidate n-grams are skipped from the mean.
double sentence_bleu(std::string_view candidate, std::string_view reference,
                     const BleuConfig& config = {});

// Levenshtein distance over Unicode code points, unit costs.
std::size_t edit_distance(std::string_view a, std::string_view b);

// 1 - edit_distance/max(|a|,|b|); larger means more similar.
double edit_similarity(std::string_view a, std::string_view b);

}  // namespace texteval
