#include "texteval/surface.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <unordered_map>

#include "texteval/error.hpp"
#include "texteval/utf8.hpp"

namespace texteval {

namespace {

std::string to_lower(std::string_view text) {
  std::string out(text);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool is_space_cp(char32_t cp) {
  return cp == U' ' || cp == U'\t' || cp == U'\n' || cp == U'\r' || cp == U'\f' ||
         cp == U'\v';
}

std::string encode_cp(char32_t cp) {
  std::string out;
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
  return out;
}

// Counts clipped n-gram matches. N-grams are joined token index sequences;
// hashing token strings once keeps this allocation-light for short sentences.
struct NgramCounts {
  std::unordered_map<std::string, std::size_t> counts;
};

NgramCounts ngrams(const std::vector<std::string>& tokens, int order) {
  NgramCounts out;
  if (tokens.size() < static_cast<std::size_t>(order)) return out;
  for (std::size_t i = 0; i + order <= tokens.size(); ++i) {
    std::string key;
    for (int k = 0; k < order; ++k) {
      key += tokens[i + k];
      key.push_back('\x1f');
    }
    ++out.counts[key];
  }
  return out;
}

}  // namespace

std::vector<std::string> bleu_tokenize(std::string_view text, BleuConfig::Tokenizer mode) {
  const std::string lowered = to_lower(text);
  std::vector<std::string> tokens;
  if (mode == BleuConfig::Tokenizer::Words) {
    std::size_t i = 0;
    while (i < lowered.size()) {
      while (i < lowered.size() && std::isspace(static_cast<unsigned char>(lowered[i]))) ++i;
      std::size_t start = i;
      while (i < lowered.size() && !std::isspace(static_cast<unsigned char>(lowered[i]))) ++i;
      if (i > start) tokens.push_back(lowered.substr(start, i - start));
    }
  } else {
    for (char32_t cp : decode_utf8(lowered)) {
      if (!is_space_cp(cp)) tokens.push_back(encode_cp(cp));
    }
  }
  return tokens;
}

double sentence_bleu(std::string_view candidate, std::string_view reference,
                     const BleuConfig& config) {
  if (config.max_order < 1 || config.max_order > 8)
    throw DataError("BLEU max_order must be in [1,8], got " +
                    std::to_string(config.max_order));
  const auto cand = bleu_tokenize(candidate, config.tokenizer);
  const auto ref = bleu_tokenize(reference, config.tokenizer);
  if (cand.empty()) throw DataError("BLEU: candidate tokenizes to no tokens");
  if (ref.empty()) throw DataError("BLEU: reference tokenizes to no tokens");

  double log_sum = 0.0;
  int orders_used = 0;
  for (int order = 1; order <= config.max_order; ++order) {
    if (cand.size() < static_cast<std::size_t>(order)) continue;  // no n-grams: skip
    const auto cand_ngrams = ngrams(cand, order);
    const auto ref_ngrams = ngrams(ref, order);
    std::size_t matches = 0;
    std::size_t total = 0;
    for (const auto& [key, count] : cand_ngrams.counts) {
      total += count;
      const auto it = ref_ngrams.counts.find(key);
      if (it != ref_ngrams.counts.end()) matches += std::min(count, it->second);
    }
    double precision;
    if (order == 1) {
      if (matches == 0) return 0.0;
      precision = static_cast<double>(matches) / static_cast<double>(total);
    } else if (matches == 0) {
      precision = static_cast<double>(matches + 1) / static_cast<double>(total + 1);
    } else {
      precision = static_cast<double>(matches) / static_cast<double>(total);
    }
    log_sum += std::log(precision);
    ++orders_used;
  }

  const double geo_mean = std::exp(log_sum / static_cast<double>(orders_used));
  const double ratio = static_cast<double>(ref.size()) / static_cast<double>(cand.size());
  const double brevity = std::min(1.0, std::exp(1.0 - ratio));
  return geo_mean * brevity;
}

std::size_t edit_distance(std::string_view a, std::string_view b) {
  const auto ua = decode_utf8(a);
  const auto ub = decode_utf8(b);
  const std::size_t n = ua.size();
  const std::size_t m = ub.size();
  if (n == 0) return m;
  if (m == 0) return n;

  // Two-row dynamic program.
  std::vector<std::size_t> prev(m + 1);
  std::vector<std::size_t> curr(m + 1);
  for (std::size_t j = 0; j <= m; ++j) prev[j] = j;
  for (std::size_t i = 1; i <= n; ++i) {
    curr[0] = i;
    for (std::size_t j = 1; j <= m; ++j) {
      const std::size_t sub = prev[j - 1] + (ua[i - 1] == ub[j - 1] ? 0 : 1);
      curr[j] = std::min({prev[j] + 1, curr[j - 1] + 1, sub});
    }
    std::swap(prev, curr);
  }
  return prev[m];
}

double edit_similarity(std::string_view a, std::string_view b) {
  const std::size_t la = decode_utf8(a).size();
  const std::size_t lb = decode_utf8(b).size();
  const std::size_t longest = std::max(la, lb);
  if (longest == 0) throw DataError("edit_similarity: both texts are empty");
  return 1.0 - static_cast<double>(edit_distance(a, b)) / static_cast<double>(longest);
}

}  // namespace texteval
