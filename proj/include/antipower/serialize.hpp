#ifndef ANTIPOWER_SERIALIZE_HPP
#define ANTIPOWER_SERIALIZE_HPP

#include <string>

#include <json.hpp>

#include "antipower/index_sets.hpp"
#include "antipower/ramsey.hpp"
#include "antipower/witness.hpp"
#include "antipower/word.hpp"

namespace antipower {

using json = nlohmann::json;

// Words: an ASCII string when the alphabet has at most 36 letters, else an
// array of integers. Alphabet size travels separately where needed.
json word_to_json(const Word& w);
Word word_from_json(const json& j, unsigned alphabet_size);

void to_json(json& j, const WitnessEvidence& e);
void from_json(const json& j, WitnessEvidence& e);

void to_json(json& j, const AntiPowerReport& r);
void from_json(const json& j, AntiPowerReport& r);

void to_json(json& j, const IndexSet& s);
void from_json(const json& j, IndexSet& s);

void to_json(json& j, const SearchOutcome& o);
void from_json(const json& j, SearchOutcome& o);

void to_json(json& j, const DensityEstimate& d);

const char* to_string(IndexSetKind kind);
const char* to_string(SearchStatus status);

/// One member m per row, header "m".
std::string index_set_csv(const IndexSet& s);

/// Rows "n,numerator,denominator" for n = 1..horizon, then a
/// "min_tail,numerator,denominator" summary row. Labeled a finite estimate.
std::string density_csv(const DensityEstimate& d);

}  // namespace antipower

#endif  // ANTIPOWER_SERIALIZE_HPP
