#include <doctest.h>

#include <stdexcept>

#include <random>

#include "antipower/borders.hpp"
#include "antipower/detectors.hpp"
#include "antipower/rolling_hash.hpp"
#include "oracles.hpp"

using namespace antipower;

TEST_CASE("is_k_power") {
  CHECK(is_k_power(Word::parse("abab"), 2));
  CHECK_FALSE(is_k_power(Word::parse("0110110"), 3));
  CHECK(is_k_power(Word::parse("001001001"), 3));
  CHECK(is_k_power(Word(), 5));
  CHECK(is_k_power(Word::parse("0110"), 1));
  CHECK_THROWS_AS(is_k_power(Word::parse("01"), 0), std::invalid_argument);
}

TEST_CASE("is_k_anti_power") {
  CHECK(is_k_anti_power(Word::parse("aabaaabbbaba"), 4));
  CHECK(is_k_anti_power(Word::parse("011010011001011"), 3));
  CHECK_FALSE(is_k_anti_power(Word::parse("010101"), 3));
  CHECK_FALSE(is_k_anti_power(Word(), 1));
  CHECK_FALSE(is_k_anti_power(Word(), 3));
  CHECK(is_k_anti_power(Word::parse("0"), 1));
  CHECK_FALSE(is_k_anti_power(Word::parse("0110"), 3));
  CHECK(is_k_anti_power(Word::parse("01"), 2));
}

TEST_CASE("detectors agree with naive block comparison on short binary words") {
  for (std::size_t n = 0; n <= 12; ++n)
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      std::string s = oracle::binary(bits, n);
      Word w = Word::parse(s, 2);
      for (std::size_t k = 1; k <= std::max<std::size_t>(n, 1); ++k) {
        if (n % k) continue;
        REQUIRE(is_k_power(w, k) == oracle::is_power(s, k));
        REQUIRE(is_k_anti_power(w, k) == oracle::is_anti_power(s, k));
      }
    }
}

TEST_CASE("factor scans agree with the oracle") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 400; ++trial) {
    std::size_t n = rng() % 20;
    unsigned alphabet = 2 + rng() % 2;
    std::string s;
    for (std::size_t i = 0; i < n; ++i) s += static_cast<char>('0' + rng() % alphabet);
    Word w = Word::parse(s, alphabet);
    for (std::size_t k = 2; k <= 4; ++k) {
      REQUIRE(contains_power_factor(w, k) == oracle::has_power_factor(s, k));
      REQUIRE(contains_anti_power_factor(w, k) == oracle::has_anti_power_factor(s, k));
    }
  }
}

TEST_CASE("suffix detectors only look at suffixes") {
  Word w = Word::parse("0010");
  CHECK_FALSE(has_power_suffix(w.view(), 2));  // 00 is not a suffix
  CHECK(has_power_suffix(Word::parse("1010").view(), 2));
  CHECK(has_anti_power_suffix(Word::parse("0001").view(), 2));
  CHECK_FALSE(has_anti_power_suffix(Word::parse("0111").view(), 3));
}

TEST_CASE("fingerprint collisions are always confirmed") {
  // Tiny moduli make nearly every pair of blocks collide.
  HashParams weak{2, 3, 1, 1};
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t k = 2 + rng() % 30;
    std::size_t len = 1 + rng() % 4;
    std::vector<Symbol> text(k * len);
    for (auto& c : text) c = static_cast<Symbol>(rng() % 3);
    std::string s;
    for (auto c : text) s += static_cast<char>('0' + c);
    FactorHasher weak_hasher(text, weak);
    FactorHasher strong_hasher(text);
    bool expected = oracle::is_anti_power(s, k);
    REQUIRE(weak_hasher.blocks_distinct(0, len, k) == expected);
    REQUIRE(strong_hasher.blocks_distinct(0, len, k) == expected);
    REQUIRE(weak_hasher.blocks_equal(0, len, k) == oracle::is_power(s, k));
  }
}

TEST_CASE("longest border array") {
  using V = std::vector<std::size_t>;
  CHECK(longest_border_array(Word::parse("aaaa")) == V{0, 1, 2, 3});
  CHECK(longest_border_array(Word::parse("abab")) == V{0, 0, 1, 2});
  CHECK(longest_border_array(Word::parse("aabaa")) == V{0, 1, 0, 1, 2});
  CHECK_THROWS_AS(longest_border_array(Word()), std::invalid_argument);
  CHECK(border_lengths(Word::parse("aabaa")) == V{2, 1, 0});

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t n = 1 + rng() % 64;
    unsigned alphabet = 2 + rng() % 2;
    std::string s;
    for (std::size_t i = 0; i < n; ++i) s += static_cast<char>('0' + rng() % alphabet);
    REQUIRE(longest_border_array(Word::parse(s, alphabet)) == oracle::border_array(s));
  }
}

TEST_CASE("root_power_from_border") {
  auto root = root_power_from_border(Word::parse("aabaa"), 2, 1);
  REQUIRE(std::holds_alternative<Word>(root));
  CHECK(std::get<Word>(root) == Word::parse("aab"));

  auto cube = root_power_from_border(Word::parse("ababab"), 4, 3);
  REQUIRE(std::holds_alternative<Word>(cube));
  CHECK(std::get<Word>(cube) == Word::parse("ab"));
  CHECK(repeat(std::get<Word>(cube), 3) == Word::parse("ababab"));

  auto refused = root_power_from_border(Word::parse("aabaa"), 2, 2);
  REQUIRE(std::holds_alternative<LengthDeficit>(refused));
  CHECK(std::get<LengthDeficit>(refused).deficit() == 1);

  CHECK_THROWS_AS(root_power_from_border(Word::parse("aabab"), 2, 1), InvalidBorderError);
  CHECK_THROWS_AS(root_power_from_border(Word::parse("aa"), 2, 1), InvalidBorderError);
}

TEST_CASE("root_power_from_border guarantee on all binary words up to length 12") {
  for (std::size_t n = 1; n <= 12; ++n)
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      std::string s = oracle::binary(bits, n);
      Word w = Word::parse(s, 2);
      for (std::size_t b : border_lengths(w)) {
        std::size_t root_len = n - b;
        for (std::size_t l = 1; l * root_len <= n; ++l) {
          auto res = root_power_from_border(w, b, l);
          REQUIRE(std::holds_alternative<Word>(res));
          std::string u = s.substr(0, root_len);
          std::string power;
          for (std::size_t t = 0; t < l; ++t) power += u;
          REQUIRE(s.compare(0, power.size(), power) == 0);
        }
        REQUIRE(std::holds_alternative<LengthDeficit>(
            root_power_from_border(w, b, n / root_len + 1)));
      }
    }
}
