#include "texteval/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "texteval/error.hpp"
#include "texteval/rng.hpp"
#include "texteval/utf8.hpp"

namespace texteval {

using nlohmann::json;

LabelScale LabelScale::fixed(double min, double max) {
  return LabelScale{Kind::FixedRange, min, max};
}

LabelScale LabelScale::empirical() {
  return LabelScale{Kind::Empirical, 0.0, 0.0};
}

void validate_pair(const ScoredPair& pair) {
  if (is_blank(pair.text_a))
    throw DataError("pair '" + pair.id + "': text_a is empty");
  if (is_blank(pair.text_b))
    throw DataError("pair '" + pair.id + "': text_b is empty");
  if (!std::isfinite(pair.gold))
    throw DataError("pair '" + pair.id + "': gold is not finite");
}

namespace {

[[noreturn]] void fail_line(const std::filesystem::path& path, std::size_t line,
                            const std::string& what) {
  throw DataError(path.string() + ":" + std::to_string(line) + ": " + what);
}

ScoredPair parse_json_record(const std::filesystem::path& path, std::size_t line_no,
                             const std::string& line) {
  json rec;
  try {
    rec = json::parse(line);
  } catch (const json::parse_error& e) {
    fail_line(path, line_no, std::string("malformed record: ") + e.what());
  }
  if (!rec.is_object()) fail_line(path, line_no, "record is not an object");
  for (const auto& field : {"id", "text_a", "text_b", "gold"}) {
    if (!rec.contains(field))
      fail_line(path, line_no, std::string("missing field '") + field + "'");
  }
  for (const auto& [key, _] : rec.items()) {
    if (key != "id" && key != "text_a" && key != "text_b" && key != "gold")
      fail_line(path, line_no, "unexpected field '" + key + "'");
  }
  ScoredPair pair;
  if (!rec["id"].is_string()) fail_line(path, line_no, "field 'id' must be a string");
  if (!rec["text_a"].is_string())
    fail_line(path, line_no, "field 'text_a' must be a string");
  if (!rec["text_b"].is_string())
    fail_line(path, line_no, "field 'text_b' must be a string");
  if (!rec["gold"].is_number())
    fail_line(path, line_no, "field 'gold' must be a number");
  pair.id = rec["id"].get<std::string>();
  pair.text_a = rec["text_a"].get<std::string>();
  pair.text_b = rec["text_b"].get<std::string>();
  pair.gold = rec["gold"].get<double>();
  return pair;
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    if (tab == std::string::npos) {
      cells.push_back(line.substr(start));
      break;
    }
    cells.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return cells;
}

Dataset load_tsv(const std::filesystem::path& path, std::ifstream& in) {
  Dataset ds;
  ds.name = path.stem().string();
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) throw DataError(path.string() + ": empty file");
  ++line_no;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const auto header = split_tabs(line);
  std::unordered_map<std::string, std::size_t> col;
  for (std::size_t i = 0; i < header.size(); ++i) {
    std::string name = std::string(trim(header[i]));
    if (col.count(name)) fail_line(path, line_no, "duplicate column '" + name + "'");
    col[name] = i;
  }
  for (const auto& field : {"id", "text_a", "text_b", "gold"}) {
    if (!col.count(field))
      fail_line(path, line_no, std::string("header missing column '") + field + "'");
  }
  if (col.size() != 4) fail_line(path, line_no, "header must name exactly id/text_a/text_b/gold");

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto cells = split_tabs(line);
    if (cells.size() != header.size())
      fail_line(path, line_no, "malformed record: expected " +
                                   std::to_string(header.size()) + " columns, got " +
                                   std::to_string(cells.size()));
    ScoredPair pair;
    pair.id = cells[col["id"]];
    pair.text_a = cells[col["text_a"]];
    pair.text_b = cells[col["text_b"]];
    const std::string& gold_str = cells[col["gold"]];
    try {
      std::size_t used = 0;
      pair.gold = std::stod(gold_str, &used);
      if (used != gold_str.size()) throw std::invalid_argument("trailing chars");
    } catch (const std::exception&) {
      fail_line(path, line_no, "field 'gold' is not a number: '" + gold_str + "'");
    }
    ds.pairs.push_back(std::move(pair));
  }
  return ds;
}

}  // namespace

Dataset load_dataset(const std::filesystem::path& path, RecordFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open dataset file: " + path.string());

  if (format == RecordFormat::Auto) {
    // JSON-lines records start with '{'; anything else is read as TSV.
    int ch = in.peek();
    format = (ch == '{') ? RecordFormat::JsonLines : RecordFormat::Tsv;
  }

  Dataset ds;
  if (format == RecordFormat::Tsv) {
    ds = load_tsv(path, in);
  } else {
    ds.name = path.stem().string();
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (is_blank(line)) continue;
      ds.pairs.push_back(parse_json_record(path, line_no, line));
    }
    if (line_no == 0) throw DataError(path.string() + ": empty file");
  }
  if (ds.pairs.empty()) throw DataError(path.string() + ": no records");

  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i < ds.pairs.size(); ++i) {
    validate_pair(ds.pairs[i]);
    if (!seen.insert(ds.pairs[i].id).second)
      throw DataError(path.string() + ": duplicate id '" + ds.pairs[i].id + "'");
  }
  return ds;
}

void save_dataset(const Dataset& dataset, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write dataset file: " + path.string());
  for (const auto& pair : dataset.pairs) {
    json rec;
    rec["id"] = pair.id;
    rec["text_a"] = pair.text_a;
    rec["text_b"] = pair.text_b;
    rec["gold"] = pair.gold;
    out << rec.dump() << '\n';
  }
  if (!out) throw DataError("write failed: " + path.string());
}

Dataset normalize_labels(const Dataset& dataset, const LabelScale& scale,
                         const Dataset* reference) {
  double lo = scale.min;
  double hi = scale.max;
  if (scale.kind == LabelScale::Kind::Empirical) {
    const Dataset& ref = reference ? *reference : dataset;
    if (ref.pairs.empty()) throw DataError("empirical scale: reference split is empty");
    lo = std::numeric_limits<double>::infinity();
    hi = -std::numeric_limits<double>::infinity();
    for (const auto& pair : ref.pairs) {
      lo = std::min(lo, pair.gold);
      hi = std::max(hi, pair.gold);
    }
  }
  if (!(lo < hi))
    throw DataError("degenerate label scale: min " + std::to_string(lo) +
                    " >= max " + std::to_string(hi));

  Dataset out = dataset;
  out.label_scale = LabelScale::fixed(0.0, 1.0);
  for (auto& pair : out.pairs) {
    const double v = (pair.gold - lo) / (hi - lo);
    pair.gold = std::clamp(v, 0.0, 1.0);
  }
  return out;
}

SplitDataset split_dataset(const Dataset& dataset, std::uint64_t seed) {
  const std::size_t n = dataset.size();
  if (n < 3)
    throw DataError("split requires at least 3 pairs, got " + std::to_string(n));

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  Rng rng(seed);
  rng.shuffle(order);

  const std::size_t n_valid = n / 10;
  const std::size_t n_test = n / 10;

  std::vector<int> bucket(n, 0);  // 0 train, 1 valid, 2 test
  for (std::size_t i = 0; i < n_valid; ++i) bucket[order[i]] = 1;
  for (std::size_t i = n_valid; i < n_valid + n_test; ++i) bucket[order[i]] = 2;

  SplitDataset split;
  split.seed = seed;
  split.train.name = dataset.name + "/train";
  split.valid.name = dataset.name + "/valid";
  split.test.name = dataset.name + "/test";
  split.train.label_scale = dataset.label_scale;
  split.valid.label_scale = dataset.label_scale;
  split.test.label_scale = dataset.label_scale;
  // Each split keeps the source ordering.
  for (std::size_t i = 0; i < n; ++i) {
    switch (bucket[i]) {
      case 1: split.valid.pairs.push_back(dataset.pairs[i]); break;
      case 2: split.test.pairs.push_back(dataset.pairs[i]); break;
      default: split.train.pairs.push_back(dataset.pairs[i]); break;
    }
  }
  return split;
}

void save_predictions(const std::vector<Prediction>& predictions,
                      const std::filesystem::path& path) {
  std::unordered_set<std::string> seen;
  for (const auto& [id, _] : predictions) {
    if (!seen.insert(id).second) throw DataError("duplicate prediction id '" + id + "'");
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write predictions file: " + path.string());
  for (const auto& [id, score] : predictions) {
    json rec;
    rec["id"] = id;
    rec["score"] = score;
    out << rec.dump() << '\n';
  }
  if (!out) throw DataError("write failed: " + path.string());
}

std::vector<Prediction> load_predictions(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open predictions file: " + path.string());
  std::vector<Prediction> out;
  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (is_blank(line)) continue;
    json rec;
    try {
      rec = json::parse(line);
    } catch (const json::parse_error& e) {
      fail_line(path, line_no, std::string("malformed record: ") + e.what());
    }
    if (!rec.is_object() || !rec.contains("id") || !rec.contains("score") ||
        !rec["id"].is_string() || !rec["score"].is_number())
      fail_line(path, line_no, "record must carry string 'id' and numeric 'score'");
    auto id = rec["id"].get<std::string>();
    if (!seen.insert(id).second) fail_line(path, line_no, "duplicate id '" + id + "'");
    out.emplace_back(std::move(id), rec["score"].get<double>());
  }
  if (out.empty()) throw DataError(path.string() + ": no prediction records");
  return out;
}

}  // namespace texteval
