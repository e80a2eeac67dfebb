#include "commands.hpp"

#include <chrono>
#include <charconv>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "antipower/detectors.hpp"
#include "antipower/generators.hpp"
#include "antipower/index_sets.hpp"
#include "antipower/ramsey.hpp"
#include "antipower/serialize.hpp"
#include "antipower/witness.hpp"

namespace antipower::cli {
namespace {

using Clock = std::chrono::steady_clock;

class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

std::size_t parse_size(std::string_view text) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw UsageError("invalid number '" + std::string(text) + "'");
  return v;
}

// "3-20,30,50,100" or "3..20,30"
std::vector<std::size_t> parse_orders(std::string_view text) {
  std::vector<std::size_t> out;
  while (!text.empty()) {
    auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    std::size_t dots = item.find("..");
    std::size_t dash = item.find('-');
    if (dots != std::string_view::npos || dash != std::string_view::npos) {
      bool use_dots = dots != std::string_view::npos;
      std::size_t cut = use_dots ? dots : dash;
      std::size_t lo = parse_size(item.substr(0, cut));
      std::size_t hi = parse_size(item.substr(cut + (use_dots ? 2 : 1)));
      if (lo > hi) throw UsageError("empty order range '" + std::string(item) + "'");
      for (std::size_t k = lo; k <= hi; ++k) out.push_back(k);
    } else {
      out.push_back(parse_size(item));
    }
  }
  if (out.empty()) throw UsageError("no orders given");
  return out;
}

// A word argument: literal:<ascii> or a generator name.
struct WordArg {
  std::optional<Word> literal;
  std::optional<InfiniteWord> infinite;
};

WordArg parse_word_arg(const std::string& spec) {
  constexpr std::string_view kLiteral = "literal:";
  if (spec.rfind(kLiteral, 0) == 0) return {Word::parse(spec.substr(kLiteral.size())), {}};
  return {{}, InfiniteWord::parse(spec)};
}

class Envelope {
public:
  explicit Envelope(std::string command) : command_(std::move(command)), start_(Clock::now()) {}

  json& params() { return params_; }

  std::string render(const json& result) const {
    auto ms = std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
    json out{{"command", command_}, {"params", params_}, {"result", result}, {"elapsed_ms", ms}};
    return out.dump(2) + "\n";
  }

private:
  std::string command_;
  json params_ = json::object();
  Clock::time_point start_;
};

struct Options {
  // shared
  std::string word;
  std::string format;
  std::size_t cap = kDefaultMaterializationCap;
  // generate
  std::size_t length = 0;
  // ap-table
  std::string orders;
  std::size_t table_limit = 100000;
  // check
  std::size_t k = 0;
  std::size_t limit = 0;
  std::string mode = "anti-power";
  // search-n
  std::size_t l = 0;
  unsigned alphabet = 2;
  std::size_t length_cap = 64;
  unsigned threads = 1;
  std::size_t parallel_depth = 8;
  // witness
  std::size_t budget = kDefaultWitnessBudget;
  // density
  std::string kind = "ap";
  std::size_t horizon = 0;
};

int cmd_generate(const Options& o, std::ostream& out) {
  Envelope env("generate");
  InfiniteWord x = InfiniteWord::parse(o.word);
  Word w = prefix(x, o.length, o.cap);
  if (o.format == "json") {
    env.params() = {{"word", x.name()}, {"length", o.length}};
    out << env.render({{"word", word_to_json(w)}, {"alphabet_size", w.alphabet_size()}});
  } else {
    out << w.to_string() << '\n';
  }
  return kOk;
}

int cmd_ap_table(const Options& o, std::ostream& out) {
  Envelope env("ap-table");
  InfiniteWord x = InfiniteWord::parse(o.word);
  auto orders = parse_orders(o.orders);
  for (std::size_t k : orders)
    if (k < 2) throw UsageError("ap-table orders must be >= 2");
  json rows = json::array();
  std::ostringstream csv;
  csv << "k,ap_min,length\n";
  for (std::size_t k : orders) {
    auto m = ap_min(x, k, o.table_limit, o.cap);
    csv << k << ',';
    if (m) csv << *m << ',' << k * *m;
    else csv << ',';
    csv << '\n';
    rows.push_back({{"k", k},
                    {"ap_min", m ? json(*m) : json(nullptr)},
                    {"length", m ? json(k * *m) : json(nullptr)}});
  }
  if (o.format == "json") {
    env.params() = {{"word", x.name()}, {"orders", orders}, {"limit", o.table_limit}};
    out << env.render(rows);
  } else {
    out << csv.str();
  }
  return kOk;
}

int cmd_check(const Options& o, std::ostream& out) {
  Envelope env("check");
  if (o.k < 1) throw UsageError("order k must be >= 1");
  WordArg arg = parse_word_arg(o.word);
  env.params() = {{"word", o.word}, {"k", o.k}, {"mode", o.mode}};
  json result;
  bool positive = false;
  std::string text;

  if (o.mode == "anti-power" || o.mode == "power") {
    Word w;
    if (arg.literal) {
      w = *arg.literal;
    } else {
      if (o.limit == 0) throw UsageError("checking a generator prefix needs --limit <length>");
      w = prefix(*arg.infinite, o.limit, o.cap);
      env.params()["limit"] = o.limit;
    }
    positive = o.mode == "power" ? is_k_power(w, o.k) : is_k_anti_power(w, o.k);
    text = positive ? "holds" : "fails";
    result = {{"verdict", text}, {"length", w.size()}};
  } else if (o.mode == "scan") {
    if (o.k < 2) throw UsageError("scan needs k >= 2");
    std::optional<Occurrence> hit;
    if (arg.literal) {
      if (auto f = first_anti_power_factor(arg.literal->view(), o.k))
        hit = Occurrence{f->offset + 1, f->block_length};
    } else {
      if (o.limit < o.k) throw UsageError("scan needs --limit >= k");
      hit = find_anti_power_factor(*arg.infinite, o.k, o.limit, o.cap);
      env.params()["limit"] = o.limit;
    }
    positive = hit.has_value();
    if (hit) {
      text = "found position=" + std::to_string(hit->position) +
             " block_length=" + std::to_string(hit->block_length);
      result = {{"verdict", "found"}, {"position", hit->position}, {"block_length", hit->block_length}};
    } else {
      text = "not-found";
      result = {{"verdict", "not-found"}};
    }
  } else {
    throw UsageError("unknown mode '" + o.mode + "'");
  }

  if (o.format == "json") out << env.render(result);
  else out << text << '\n';
  return positive ? kOk : kNegative;
}

int cmd_search_n(const Options& o, std::ostream& out) {
  Envelope env("search-n");
  SearchParams p;
  p.l = o.l;
  p.k = o.k;
  p.alphabet_size = o.alphabet;
  p.length_cap = o.length_cap;
  p.threads = o.threads;
  p.parallel_depth = o.parallel_depth;
  try {
    p.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  SearchOutcome result = compute_n(p);
  env.params() = {{"l", p.l}, {"k", p.k}, {"alphabet_size", p.alphabet_size},
                  {"length_cap", p.length_cap}};
  out << env.render(result);
  return result.status == SearchStatus::Exact ? kOk : kNegative;
}

int cmd_witness(const Options& o, std::ostream& out) {
  Envelope env("witness");
  InfiniteWord x = InfiniteWord::parse(o.word);
  if (o.k < 2 || o.l < 1) throw UsageError("witness needs k >= 2 and l >= 1");
  env.params() = {{"word", x.name()}, {"k", o.k}, {"l", o.l}, {"budget", o.budget}};
  WitnessOutcome outcome = extract_power_witness(x, o.k, o.l, o.budget, o.cap);
  json result;
  if (auto* e = std::get_if<WitnessEvidence>(&outcome)) {
    result = {{"branch", "power"}, {"evidence", *e}};
  } else {
    result = {{"branch", "anti-power"}, {"report", std::get<AntiPowerReport>(outcome)}};
  }
  out << env.render(result);
  return kOk;
}

int cmd_density(const Options& o, std::ostream& out) {
  Envelope env("density");
  InfiniteWord x = InfiniteWord::parse(o.word);
  if (o.k < 1) throw UsageError("order k must be >= 1");
  if (o.horizon < 2) throw UsageError("density needs --horizon >= 2");
  IndexSet set;
  if (o.kind == "ap") set = ap_set(x, o.k, o.horizon, o.cap);
  else if (o.kind == "p") set = p_set(x, o.k, o.horizon, o.cap);
  else throw UsageError("unknown kind '" + o.kind + "' (expected ap or p)");
  DensityEstimate d = density_estimate(set);
  if (o.format == "json") {
    env.params() = {{"word", x.name()}, {"k", o.k}, {"kind", o.kind}, {"horizon", o.horizon}};
    out << env.render({{"set", set}, {"density", d}});
  } else {
    out << density_csv(d);
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Powers, anti-powers and unavoidable regularities in words", "antipower"};
  app.require_subcommand(1);
  Options o;

  auto add_cap = [&](CLI::App* cmd) {
    cmd->add_option("--cap", o.cap, "Maximum number of symbols to materialize");
  };

  auto* generate = app.add_subcommand("generate", "Print a prefix of an infinite word");
  generate->add_option("word", o.word, "Generator name")->required();
  generate->add_option("length", o.length, "Prefix length")->required();
  generate->add_option("--format", o.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  add_cap(generate);

  auto* table = app.add_subcommand("ap-table", "Shortest k-anti-power prefixes for several k");
  table->add_option("word", o.word, "Generator name")->required();
  table->add_option("orders", o.orders, "Orders, e.g. 3-20,30,50,100")->required();
  table->add_option("--limit", o.table_limit, "Largest block length tried")->capture_default_str();
  table->add_option("--format", o.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  add_cap(table);

  auto* check = app.add_subcommand("check", "Test a word for k-powers or k-anti-powers");
  check->add_option("word", o.word, "literal:<ascii> or a generator name")->required();
  check->add_option("k", o.k, "Order")->required();
  check->add_option("--mode", o.mode, "anti-power, power or scan")
      ->default_val("anti-power")->check(CLI::IsMember({"anti-power", "power", "scan"}));
  check->add_option("--limit", o.limit, "Prefix length for generators");
  check->add_option("--format", o.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  add_cap(check);

  auto* search = app.add_subcommand("search-n", "Compute N(l,k) by exhaustive search");
  search->add_option("l", o.l, "Power order")->required();
  search->add_option("k", o.k, "Anti-power order")->required();
  search->add_option("--alphabet", o.alphabet, "Alphabet size")->default_val(2);
  search->add_option("--cap", o.length_cap, "Longest word explored")->default_val(64);
  search->add_option("--parallel", o.threads, "Worker threads")->default_val(1);
  search->add_option("--parallel-depth", o.parallel_depth, "Depth of the parallel frontier")
      ->default_val(8);

  auto* witness = app.add_subcommand("witness", "Certify a power factor or report anti-powers");
  witness->add_option("word", o.word, "Generator name")->required();
  witness->add_option("k", o.k, "Anti-power order")->required();
  witness->add_option("l", o.l, "Power exponent")->required();
  witness->add_option("--budget", o.budget, "Largest window start scanned")
      ->default_val(kDefaultWitnessBudget);
  add_cap(witness);

  auto* density = app.add_subcommand("density", "Finite density trace of AP(x,k) or P(x,k)");
  density->add_option("word", o.word, "Generator name")->required();
  density->add_option("--k", o.k, "Order")->required();
  density->add_option("--kind", o.kind, "ap or p")->default_val("ap");
  density->add_option("--horizon", o.horizon, "Largest m considered")->required();
  density->add_option("--format", o.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  add_cap(density);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*generate) return cmd_generate(o, out);
    if (*table) return cmd_ap_table(o, out);
    if (*check) return cmd_check(o, out);
    if (*search) return cmd_search_n(o, out);
    if (*witness) return cmd_witness(o, out);
    if (*density) return cmd_density(o, out);
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << " (raise it with --cap)\n";
    return kCapExceeded;
  } catch (const BudgetExhaustedError& e) {
    err << "error: " << e.what() << '\n';
    return kBudgetExhausted;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace antipower::cli
