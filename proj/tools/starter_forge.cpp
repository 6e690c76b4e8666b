// starter-forge: construct, check, multiply and search for starters in Z_n.
//
//   starter-forge check data/fixtures/s17.json --require starter,strong,skolem
//   starter-forge check --order 5 --pairs "1,2 3,4"
//   starter-forge product data/fixtures/s17.json data/fixtures/r11.json --nucleus cardioidal
//   starter-forge search --order 11 --require starter,skolem --mode count
//   starter-forge convert seq-to-starter --seq "1 1 5 2 4 2 3 5 4 3"
//   starter-forge gen cardioidal --order 11 --offset 0
//   starter-forge gen composite --factor s17.json --factor r11.json@cardioidal
//
// Exit codes: 0 success, 1 predicate failed or no result, 2 parse/usage
// error, 3 search infeasible.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "starter_forge/covers.hpp"
#include "starter_forge/generators.hpp"
#include "starter_forge/io.hpp"
#include "starter_forge/products.hpp"
#include "starter_forge/search.hpp"
#include "starter_forge/zn.hpp"

namespace sf = starter_forge;

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kParse = 2;
constexpr int kInfeasible = 3;

// Thrown for input problems that must map to exit 2 regardless of kind.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) {
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

std::vector<sf::Predicate> parse_predicates(const std::string& list) {
  std::vector<sf::Predicate> out;
  for (const auto& name : split(list, ',')) out.push_back(sf::parse_predicate(name));
  return out;
}

sf::PartitionDocument load_input(const std::string& path) {
  try {
    return sf::load_partition_document(path);
  } catch (const sf::Error& e) {
    throw InputError(e.what());
  }
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

sf::OrientationPolicy parse_policy(const std::string& s) {
  if (s == "lo-first") return sf::OrientationPolicy::LoFirst;
  if (s == "hi-first") return sf::OrientationPolicy::HiFirst;
  throw InputError("orientation must be lo-first or hi-first, got '" + s + "'");
}

struct NucleusFlag {
  sf::NucleusChoice choice = sf::NucleusChoice::FromCover;
  std::optional<std::string> path;
};

NucleusFlag parse_nucleus_flag(const std::string& s) {
  if (s == "from-cover") return {sf::NucleusChoice::FromCover, std::nullopt};
  if (s == "cardioidal") return {sf::NucleusChoice::Cardioidal, std::nullopt};
  if (s.rfind("file:", 0) == 0 && s.size() > 5) return {sf::NucleusChoice::FromStarter, s.substr(5)};
  throw InputError("nucleus must be from-cover, cardioidal or file:<path>, got '" + s + "'");
}

std::string nucleus_name(const NucleusFlag& f) {
  switch (f.choice) {
    case sf::NucleusChoice::FromCover: return "from-cover";
    case sf::NucleusChoice::Cardioidal: return "cardioidal";
    case sf::NucleusChoice::FromStarter: return "file:" + *f.path;
  }
  return "?";
}

// ---------------------------------------------------------------------------

struct CheckArgs {
  std::string file;
  std::int64_t order = 0;
  std::string pairs;
  std::string require;
};

int run_check(const CheckArgs& a) {
  std::optional<sf::TwoPartition> p;
  if (!a.file.empty()) {
    p = load_input(a.file).partition;
  } else {
    if (a.pairs.empty() || a.order == 0) throw InputError("check needs a file or --order with --pairs");
    try {
      p = sf::make_two_partition(a.order, sf::parse_inline_pairs(a.pairs));
    } catch (const sf::Error& e) {
      throw InputError(e.what());
    }
  }
  const auto required = parse_predicates(a.require);
  const auto r = sf::report(*p);
  std::cout << sf::render_report(r);
  for (auto pred : required) {
    if (!r.get(pred)) return kFail;
  }
  return kOk;
}

struct ProductArgs {
  std::string left;
  std::string right;
  std::string nucleus = "from-cover";
  std::string orientation;
  bool starred = false;
  std::string output;
};

int run_product(const ProductArgs& a) {
  const auto s = load_input(a.left).partition;
  const auto t = load_input(a.right).partition;
  const auto nucleus = parse_nucleus_flag(a.nucleus);

  // Cardioidality of the product of two cardioidal starters depends on the
  // orientation when the left factor has order 3 and the right one is larger.
  if (a.orientation.empty() && s.order() == 3 && t.order() > 3 && sf::is_cardioidal(s) &&
      sf::is_starter(s) && sf::is_cardioidal(t) && sf::is_starter(t)) {
    throw InputError("the product of these factors is orientation-sensitive; pass --orientation");
  }
  const auto policy = parse_policy(a.orientation.empty() ? "lo-first" : a.orientation);

  sf::Json meta = sf::Json::object();
  meta["left_order"] = s.order();
  meta["right_order"] = t.order();
  meta["orientation"] = a.orientation.empty() ? "lo-first" : a.orientation;

  std::optional<sf::ProductResult> result;
  if (a.starred) {
    meta["variant"] = "starred";
    result = sf::product_starred(s, t, sf::build_ordered_cover(s).list(), sf::orient(t, policy));
  } else if (nucleus.choice == sf::NucleusChoice::FromCover) {
    meta["variant"] = "standard";
    result = sf::product(s, t, policy);
  } else {
    meta["variant"] = "nucleus";
    meta["nucleus"] = nucleus_name(nucleus);
    std::optional<sf::TwoPartition> source;
    if (nucleus.path) source = load_input(*nucleus.path).partition;
    const auto x = sf::make_nucleus(t, nucleus.choice, source);
    result = sf::product_with_nucleus(s, t, sf::orient(s, policy), x);
  }
  write_output(a.output, sf::render_product_document(*result, meta));
  return kOk;
}

struct SearchArgs {
  std::int64_t order = 0;
  std::string require;
  std::string mode = "all";
  std::size_t limit = 0;
  std::string shard;
  std::string strategy = "auto";
  std::size_t threads = 1;
  bool reduce_conjugates = false;
};

int run_search(const SearchArgs& a) {
  sf::SearchSpec spec;
  spec.order = a.order;
  spec.required = parse_predicates(a.require);
  if (a.mode == "first") {
    spec.mode = sf::SearchMode::First;
  } else if (a.mode == "all") {
    spec.mode = sf::SearchMode::All;
  } else if (a.mode == "count") {
    spec.mode = sf::SearchMode::Count;
  } else {
    throw InputError("mode must be first, all or count");
  }
  if (a.limit > 0) spec.limit = a.limit;
  if (!a.shard.empty()) {
    const auto parts = split(a.shard, '/');
    if (parts.size() != 2) throw InputError("shard must look like INDEX/TOTAL");
    try {
      spec.shard = sf::Shard{std::stoul(parts[0]), std::stoul(parts[1])};
    } catch (const std::exception&) {
      throw InputError("shard must look like INDEX/TOTAL");
    }
  }
  if (a.strategy == "auto") {
    spec.strategy = sf::SearchStrategy::Auto;
  } else if (a.strategy == "exhaustive") {
    spec.strategy = sf::SearchStrategy::Exhaustive;
  } else if (a.strategy == "backtrack") {
    spec.strategy = sf::SearchStrategy::SkolemBacktrack;
  } else {
    throw InputError("strategy must be auto, exhaustive or backtrack");
  }
  spec.reduce_conjugates = a.reduce_conjugates;
  spec.exhaustive_bound = sf::exhaustive_bound_from_env();

  const auto result = (a.threads > 1 && !spec.shard) ? sf::search_parallel(spec, a.threads) : sf::search(spec);
  if (spec.mode == sf::SearchMode::Count) {
    std::cout << result.count << "\n";
    return kOk;
  }
  for (const auto& p : result.partitions) std::cout << sf::render_partition_compact(p);
  return result.partitions.empty() ? kFail : kOk;
}

struct ConvertArgs {
  std::string direction;
  std::string file;
  std::string seq;
};

int run_convert(const ConvertArgs& a) {
  if (a.direction == "seq-to-starter") {
    std::string text = a.seq;
    if (text.empty()) {
      if (a.file.empty()) throw InputError("seq-to-starter needs a file or --seq");
      text = read_text(a.file);
    }
    std::vector<sf::SkolemSequence> seqs;
    try {
      seqs = sf::parse_skolem_sequences(text);
    } catch (const sf::Error& e) {
      if (e.kind() == sf::ErrorKind::Parse) throw InputError(e.what());
      throw;
    }
    if (seqs.empty()) throw InputError("no sequence given");
    for (const auto& s : seqs) {
      sf::Json meta = sf::Json::object();
      meta["skolem_sequence"] = sf::render_skolem_sequence(s);
      std::cout << sf::render_partition_document(sf::skolem_seq_to_starter(s), meta);
    }
    return kOk;
  }
  if (a.direction == "starter-to-seq") {
    if (a.file.empty()) throw InputError("starter-to-seq needs a partition file");
    const auto p = load_input(a.file).partition;
    std::cout << sf::render_skolem_sequence(sf::starter_to_skolem_seq(p)) << "\n";
    return kOk;
  }
  throw InputError("direction must be seq-to-starter or starter-to-seq");
}

struct GenArgs {
  std::string kind;
  std::int64_t order = 0;
  std::string offset;
  std::vector<std::string> factors;
  std::string output;
};

int run_gen(const GenArgs& a) {
  if (a.kind == "canonical") {
    if (a.order == 0) throw InputError("gen canonical needs --order");
    write_output(a.output, sf::render_partition_document(sf::gen_canonical(a.order)));
    return kOk;
  }
  if (a.kind == "cardioidal") {
    if (a.order == 0) throw InputError("gen cardioidal needs --order");
    std::vector<bool> offsets;
    const auto cycles = sf::doubling_cycles(a.order).cycles.size();
    const auto bits = split(a.offset, ',');
    for (const auto& b : bits) {
      if (b != "0" && b != "1") throw InputError("offsets must be 0 or 1");
    }
    if (bits.size() == 1) {
      offsets.assign(cycles, bits[0] == "1");
    } else {
      for (const auto& b : bits) offsets.push_back(b == "1");
    }
    const auto p = sf::gen_cardioidal(a.order, offsets);
    if (!p) {
      std::cerr << "NoCardioidalPartition: the doubling map on Z_" << a.order << "^* has a cycle of odd length\n";
      return kFail;
    }
    write_output(a.output, sf::render_partition_document(*p));
    return kOk;
  }
  if (a.kind == "composite") {
    if (a.factors.size() < 2) throw InputError("gen composite needs at least two --factor");
    std::vector<sf::CompositeFactor> factors;
    for (const auto& spec : a.factors) {
      const auto at = spec.find('@');
      const std::string path = spec.substr(0, at);
      const auto flag = parse_nucleus_flag(at == std::string::npos ? "from-cover" : spec.substr(at + 1));
      sf::CompositeFactor f{load_input(path).partition, flag.choice, std::nullopt};
      if (flag.path) f.nucleus_source = load_input(*flag.path).partition;
      factors.push_back(std::move(f));
    }
    const auto result = sf::build_composite(factors);
    sf::Json meta = sf::Json::object();
    sf::Json steps = sf::Json::array();
    for (const auto& step : result.steps) {
      sf::Json s = sf::Json::object();
      s["order"] = step.report.order;
      for (auto pred : sf::kAllPredicates) s[std::string(sf::to_string(pred))] = step.report.get(pred);
      steps.push_back(s);
    }
    meta["steps"] = steps;
    write_output(a.output, sf::render_product_document(result.product, meta));
    return kOk;
  }
  throw InputError("kind must be canonical, cardioidal or composite");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construct, check, multiply and search for starters in Z_n"};
  app.require_subcommand(1);

  CheckArgs check;
  auto* c = app.add_subcommand("check", "Print the property report of a 2-partition");
  c->add_option("file", check.file, "Partition document");
  c->add_option("--order", check.order, "Order for --pairs");
  c->add_option("--pairs", check.pairs, "Inline pairs, e.g. \"1,2 3,4\"");
  c->add_option("--require", check.require, "Comma-separated predicates that must hold");

  ProductArgs prod;
  auto* p = app.add_subcommand("product", "Multiply two 2-partitions");
  p->add_option("left", prod.left, "Left factor S")->required();
  p->add_option("right", prod.right, "Right factor T")->required();
  p->add_option("--nucleus", prod.nucleus, "from-cover | cardioidal | file:<path>");
  p->add_option("--orientation", prod.orientation, "lo-first | hi-first");
  p->add_flag("--starred", prod.starred, "Use the starred variant (cover on S)");
  p->add_option("-o,--output", prod.output, "Output path (default stdout)");

  SearchArgs srch;
  auto* s = app.add_subcommand("search", "Search for 2-partitions with given properties");
  s->add_option("--order", srch.order, "Order n")->required();
  s->add_option("--require", srch.require, "Comma-separated predicates");
  s->add_option("--mode", srch.mode, "first | all | count");
  s->add_option("--limit", srch.limit, "Stop after this many results");
  s->add_option("--shard", srch.shard, "INDEX/TOTAL");
  s->add_option("--strategy", srch.strategy, "auto | exhaustive | backtrack");
  s->add_option("--threads", srch.threads, "Worker threads");
  s->add_flag("--reduce-conjugates", srch.reduce_conjugates, "Keep one of each conjugate pair");

  ConvertArgs conv;
  auto* v = app.add_subcommand("convert", "Convert between Skolem sequences and Skolem starters");
  v->add_option("direction", conv.direction, "seq-to-starter | starter-to-seq")->required();
  v->add_option("file", conv.file, "Input file");
  v->add_option("--seq", conv.seq, "Inline sequence");

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Generate canonical, cardioidal or composite partitions");
  g->add_option("kind", gen.kind, "canonical | cardioidal | composite")->required();
  g->add_option("--order", gen.order, "Order n");
  g->add_option("--offset", gen.offset, "Matching offset per doubling cycle: 0, 1 or a list like 0,1")
      ->default_str("0");
  g->add_option("--factor", gen.factors, "PATH[@from-cover|@cardioidal|@file:<path>]");
  g->add_option("-o,--output", gen.output, "Output path (default stdout)");
  gen.offset = "0";

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (c->parsed()) return run_check(check);
    if (p->parsed()) return run_product(prod);
    if (s->parsed()) return run_search(srch);
    if (v->parsed()) return run_convert(conv);
    if (g->parsed()) return run_gen(gen);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const sf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case sf::ErrorKind::Parse:
      case sf::ErrorKind::InvalidOrder: return kParse;
      case sf::ErrorKind::SearchInfeasible: return kInfeasible;
      default: return kFail;
    }
  }
  return kParse;
}
