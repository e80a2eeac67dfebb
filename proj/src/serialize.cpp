#include "antipower/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace antipower {

json word_to_json(const Word& w) {
  if (w.alphabet_size() <= kMaxAsciiAlphabet) return w.to_string();
  return json(w.symbols());
}

Word word_from_json(const json& j, unsigned alphabet_size) {
  if (j.is_string()) return Word::parse(j.get<std::string>(), alphabet_size);
  return Word(j.get<std::vector<Symbol>>(), alphabet_size);
}

void to_json(json& j, const WitnessEvidence& e) {
  j = json{{"u", word_to_json(e.u)}, {"alphabet_size", e.u.alphabet_size()},
           {"l", e.l},  {"k", e.k},  {"M", e.max_root}, {"m", e.window_start},
           {"r", e.r},  {"s", e.s},  {"i", e.i},        {"j", e.j},
           {"position", e.position}};
}

void from_json(const json& j, WitnessEvidence& e) {
  e.u = word_from_json(j.at("u"), j.value("alphabet_size", 2u));
  j.at("l").get_to(e.l);
  j.at("k").get_to(e.k);
  j.at("M").get_to(e.max_root);
  j.at("m").get_to(e.window_start);
  j.at("r").get_to(e.r);
  j.at("s").get_to(e.s);
  j.at("i").get_to(e.i);
  j.at("j").get_to(e.j);
  j.at("position").get_to(e.position);
}

void to_json(json& j, const AntiPowerReport& r) {
  j = json{{"k", r.k},
           {"l", r.l},
           {"first_window", r.first_window},
           {"last_window", r.last_window},
           {"anti_power_count", r.members.size()},
           {"members", r.members}};
}

void from_json(const json& j, AntiPowerReport& r) {
  j.at("k").get_to(r.k);
  j.at("l").get_to(r.l);
  j.at("first_window").get_to(r.first_window);
  j.at("last_window").get_to(r.last_window);
  j.at("members").get_to(r.members);
}

const char* to_string(IndexSetKind kind) {
  return kind == IndexSetKind::AntiPowerSet ? "anti-power" : "power";
}

const char* to_string(SearchStatus status) {
  return status == SearchStatus::Exact ? "exact" : "lower-bound";
}

void to_json(json& j, const IndexSet& s) {
  j = json{{"kind", to_string(s.kind)}, {"word", s.word},       {"k", s.k},
           {"horizon", s.horizon},      {"members", s.members}};
}

void from_json(const json& j, IndexSet& s) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "anti-power")
    s.kind = IndexSetKind::AntiPowerSet;
  else if (kind == "power")
    s.kind = IndexSetKind::PowerSet;
  else
    throw std::invalid_argument("unknown index set kind '" + kind + "'");
  s.word = j.value("word", std::string{});
  j.at("k").get_to(s.k);
  j.at("horizon").get_to(s.horizon);
  j.at("members").get_to(s.members);
}

void to_json(json& j, const SearchOutcome& o) {
  j = json{{"l", o.params.l},
           {"k", o.params.k},
           {"alphabet_size", o.params.alphabet_size},
           {"length_cap", o.params.length_cap},
           {"status", to_string(o.status)},
           {"N_or_bound", o.bound},
           {"witness", word_to_json(o.max_avoiding_word)},
           {"nodes_explored", o.nodes_explored}};
}

void from_json(const json& j, SearchOutcome& o) {
  j.at("l").get_to(o.params.l);
  j.at("k").get_to(o.params.k);
  j.at("alphabet_size").get_to(o.params.alphabet_size);
  o.params.length_cap = j.value("length_cap", o.params.length_cap);
  const auto status = j.at("status").get<std::string>();
  if (status == "exact")
    o.status = SearchStatus::Exact;
  else if (status == "lower-bound")
    o.status = SearchStatus::LowerBoundOnly;
  else
    throw std::invalid_argument("unknown search status '" + status + "'");
  j.at("N_or_bound").get_to(o.bound);
  o.max_avoiding_word = word_from_json(j.at("witness"), o.params.alphabet_size);
  j.at("nodes_explored").get_to(o.nodes_explored);
}

void to_json(json& j, const DensityEstimate& d) {
  json ratios = json::array();
  for (const auto& r : d.ratios) ratios.push_back({r.numerator(), r.denominator()});
  j = json{{"estimate", "finite"},
           {"ratios", std::move(ratios)},
           {"tail_start", d.tail_start},
           {"min_tail", {d.min_tail.numerator(), d.min_tail.denominator()}}};
}

std::string index_set_csv(const IndexSet& s) {
  std::ostringstream out;
  out << "m\n";
  for (std::size_t m : s.members) out << m << '\n';
  return out.str();
}

std::string density_csv(const DensityEstimate& d) {
  std::ostringstream out;
  out << "# finite estimate of the lower density; min_tail is taken over n >= "
      << d.tail_start << "\n";
  out << "n,numerator,denominator\n";
  for (std::size_t n = 0; n < d.ratios.size(); ++n)
    out << n + 1 << ',' << d.ratios[n].numerator() << ',' << d.ratios[n].denominator() << '\n';
  out << "min_tail," << d.min_tail.numerator() << ',' << d.min_tail.denominator() << '\n';
  return out.str();
}

}  // namespace antipower
