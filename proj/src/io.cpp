#include "starter_forge/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace starter_forge {

namespace {

[[noreturn]] void parse_fail(std::string_view text, std::size_t byte, const std::string& what) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
}

[[noreturn]] void schema_fail(const std::string& what) { throw Error(ErrorKind::Parse, what); }

std::int64_t as_integer(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) schema_fail(where + " must be an integer");
  return j.get<std::int64_t>();
}

std::string pair_json(Residue a, Residue b) {
  return "[" + std::to_string(a) + ", " + std::to_string(b) + "]";
}

void render_pairs(std::ostringstream& os, const TwoPartition& p) {
  os << "  \"pairs\": [";
  const auto& pairs = p.pairs();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    os << (i == 0 ? "\n    " : ",\n    ") << pair_json(pairs[i].lo, pairs[i].hi);
  }
  os << "\n  ]";
}

std::string witness_text(const Violation& v) {
  std::string out;
  for (const auto& p : v.witnesses) {
    if (!out.empty()) out += ' ';
    out += '{' + std::to_string(p.lo) + ',' + std::to_string(p.hi) + '}';
  }
  return out;
}

}  // namespace

PartitionDocument parse_partition_document(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    parse_fail(text, e.byte == 0 ? 0 : e.byte - 1, "malformed JSON");
  }
  if (!doc.is_object()) schema_fail("document must be a JSON object");
  if (!doc.contains("order")) schema_fail("missing field 'order'");
  if (!doc.contains("pairs")) schema_fail("missing field 'pairs'");
  const std::int64_t order = as_integer(doc["order"], "'order'");
  const Json& pairs = doc["pairs"];
  if (!pairs.is_array()) schema_fail("'pairs' must be an array");

  std::vector<std::pair<std::int64_t, std::int64_t>> raw;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const Json& p = pairs[i];
    const std::string where = "pairs[" + std::to_string(i) + "]";
    if (!p.is_array() || p.size() != 2) schema_fail(where + " must be a 2-element array");
    raw.emplace_back(as_integer(p[0], where + "[0]"), as_integer(p[1], where + "[1]"));
  }

  PartitionDocument out{make_two_partition(order, raw)};
  if (doc.contains("metadata")) {
    if (!doc["metadata"].is_object()) schema_fail("'metadata' must be an object");
    out.metadata = doc["metadata"];
  }
  return out;
}

PartitionDocument load_partition_document(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_partition_document(ss.str());
  } catch (const Error& e) {
    throw Error(e.kind(), path.string() + ": " + e.what());
  }
}

std::string render_partition_document(const TwoPartition& p, const Json& metadata) {
  std::ostringstream os;
  os << "{\n  \"order\": " << p.order() << ",\n";
  render_pairs(os, p);
  if (!metadata.empty()) os << ",\n  \"metadata\": " << metadata.dump();
  os << "\n}\n";
  return os.str();
}

std::string render_partition_compact(const TwoPartition& p, const Json& metadata) {
  std::ostringstream os;
  os << "{\"order\": " << p.order() << ", \"pairs\": [";
  for (std::size_t i = 0; i < p.pairs().size(); ++i) {
    os << (i == 0 ? "" : ", ") << pair_json(p.pairs()[i].lo, p.pairs()[i].hi);
  }
  os << ']';
  if (!metadata.empty()) os << ", \"metadata\": " << metadata.dump();
  os << "}\n";
  return os.str();
}

std::string render_product_document(const ProductResult& r, const Json& metadata) {
  std::ostringstream os;
  os << "{\n  \"order\": " << r.partition.order() << ",\n";
  render_pairs(os, r.partition);
  if (!metadata.empty()) os << ",\n  \"metadata\": " << metadata.dump();
  os << ",\n  \"provenance\": [";
  for (std::size_t i = 0; i < r.provenance.size(); ++i) {
    const auto& p = r.provenance[i];
    Json rec = Json::object();
    rec["type"] = std::string(to_string(p.type));
    rec["rt"] = {p.rt.first, p.rt.second};
    rec["xy"] = {p.xy.first, p.xy.second};
    rec["pair"] = {p.pair.lo, p.pair.hi};
    os << (i == 0 ? "\n    " : ",\n    ") << rec.dump();
  }
  os << "\n  ]\n}\n";
  return os.str();
}

std::vector<std::pair<std::int64_t, std::int64_t>> parse_inline_pairs(std::string_view text) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n')) ++i;
  };
  auto read_int = [&]() -> std::int64_t {
    std::int64_t v = 0;
    const char* begin = text.data() + i;
    const auto [ptr, ec] = std::from_chars(begin, text.data() + text.size(), v);
    if (ec != std::errc{} || ptr == begin) parse_fail(text, i, "expected an integer");
    i += static_cast<std::size_t>(ptr - begin);
    return v;
  };
  skip_space();
  while (i < text.size()) {
    const std::int64_t a = read_int();
    if (i >= text.size() || text[i] != ',') parse_fail(text, i, "expected ',' inside a pair");
    ++i;
    const std::int64_t b = read_int();
    out.emplace_back(a, b);
    if (i < text.size() && text[i] != ' ' && text[i] != '\t' && text[i] != '\n') {
      parse_fail(text, i, "expected whitespace between pairs");
    }
    skip_space();
  }
  return out;
}

Json report_to_json(const PropertyReport& r) {
  Json j = Json::object();
  j["order"] = r.order;
  for (Predicate p : kAllPredicates) j[std::string(to_string(p))] = r.get(p);
  j["difference_multiset"] = r.difference_multiset;
  j["sum_multiset"] = r.sum_multiset;
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    Json w = Json::array();
    for (const auto& p : v.witnesses) w.push_back({p.lo, p.hi});
    violations.push_back({{"predicate", std::string(to_string(v.predicate))},
                          {"witnesses", w},
                          {"text", witness_text(v)}});
  }
  j["violations"] = violations;
  return j;
}

std::string render_report(const PropertyReport& r) { return report_to_json(r).dump(2) + "\n"; }

std::vector<SkolemSequence> parse_skolem_sequences(std::string_view text) {
  std::vector<SkolemSequence> out;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    const std::string_view line = text.substr(line_start, line_end - line_start);

    std::vector<int> values;
    std::size_t i = 0;
    while (i < line.size()) {
      if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
        ++i;
        continue;
      }
      int v = 0;
      const auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), v);
      if (ec != std::errc{} || ptr == line.data() + i) parse_fail(text, line_start + i, "expected an integer");
      i = static_cast<std::size_t>(ptr - line.data());
      values.push_back(v);
    }
    if (!values.empty()) out.emplace_back(std::move(values));
    line_start = line_end + 1;
  }
  return out;
}

std::string render_skolem_sequence(const SkolemSequence& s) {
  std::string out;
  for (int v : s.entries()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

}  // namespace starter_forge
