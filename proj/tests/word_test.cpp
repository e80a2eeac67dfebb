#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "antipower/generators.hpp"
#include "antipower/word.hpp"
#include "oracles.hpp"

using namespace antipower;

TEST_CASE("word parsing and rendering") {
  Word w = Word::parse("aabaaabbbaba");
  CHECK(w.alphabet_size() == 2);
  CHECK(w.to_string() == "001000111010");
  CHECK(Word::parse("abc").alphabet_size() == 3);
  CHECK(Word::parse("0110").to_string() == "0110");
  CHECK(Word::parse("").empty());
  CHECK(Word::parse("0", 12).alphabet_size() == 12);
  CHECK(Word({10, 11, 0}, 12).to_string() == "ab0");
  CHECK_THROWS_AS(Word::parse("01x2!"), std::invalid_argument);
  CHECK_THROWS_AS(Word({0, 2}, 2), std::invalid_argument);
  CHECK_THROWS_AS(Word({}, 0), std::invalid_argument);
  CHECK_THROWS_AS(Word({0}, 40).to_string(), std::domain_error);
}

TEST_CASE("thue-morse prefixes") {
  CHECK(thue_morse_prefix(0).empty());
  CHECK(thue_morse_prefix(16).to_string() == "0110100110010110");
  CHECK(thue_morse_prefix(46).to_string() == "0110100110010110100101100110100110010110011010");
  CHECK(thue_morse_prefix(4096).to_string() == oracle::thue_morse_by_popcount(4096));
}

TEST_CASE("thue-morse recurrence t(2i) = t(i), t(2i+1) = 1 - t(i)") {
  for (std::uint64_t i = 0; i < 10000; ++i) {
    // positions are 1-based
    REQUIRE(thue_morse_symbol(2 * i + 1) == thue_morse_symbol(i + 1));
    REQUIRE(thue_morse_symbol(2 * i + 2) == 1 - thue_morse_symbol(i + 1));
  }
}

TEST_CASE("fibonacci prefixes agree with morphism iteration") {
  CHECK(fibonacci_prefix(1).to_string() == "0");
  CHECK(fibonacci_prefix(7).to_string() == "0100101");
  CHECK(fibonacci_prefix(13).to_string() == "0100101001001");
  CHECK(fibonacci_prefix(20000).to_string() == oracle::fibonacci_by_morphism(20000));
}

TEST_CASE("sparse avoider") {
  GeneratorConfig cfg;
  CHECK(sparse_avoider_symbol(1, cfg) == 1);
  CHECK(sparse_avoider_symbol(5, cfg) == 1);
  CHECK(sparse_avoider_symbol(7, cfg) == 0);
  CHECK(sparse_avoider_symbol(25, cfg) == 1);
  CHECK(sparse_avoider_symbol(50, cfg) == 0);

  SUBCASE("ones count is floor(log5 n) + 1") {
    Word w = prefix(InfiniteWord::sparse_avoider(), 100000);
    std::size_t ones = 0;
    std::size_t expected_exp = 0;
    std::uint64_t next_power = 5;
    for (std::size_t n = 1; n <= w.size(); ++n) {
      ones += w[n - 1];
      if (n == next_power) {
        ++expected_exp;
        next_power *= 5;
      }
      REQUIRE(ones == expected_exp + 1);
    }
  }

  SUBCASE("membership matches enumeration of the closed form") {
    GeneratorConfig custom(3, 7);
    std::vector<std::uint64_t> alphas;
    for (unsigned i = 1; custom.alpha(i) != 0 && custom.alpha(i) < 200000; ++i)
      alphas.push_back(custom.alpha(i));
    for (std::uint64_t n = 1; n < 200000; ++n) {
      bool listed = std::find(alphas.begin(), alphas.end(), n) != alphas.end();
      REQUIRE(custom.contains(n) == listed);
    }
    for (std::size_t i = 1; i < alphas.size(); ++i) CHECK(alphas[i] >= 5 * alphas[i - 1]);
  }

  CHECK_THROWS_AS(GeneratorConfig(1, 4), std::invalid_argument);
  CHECK_THROWS_AS(GeneratorConfig(0, 5), std::invalid_argument);
}

TEST_CASE("recurrent avoider") {
  CHECK(recurrent_avoider_symbol(1) == 0);
  auto x = InfiniteWord::recurrent_avoider();
  CHECK(prefix(x, 5).to_string() == "01110");
  CHECK(prefix(x, 25).to_string() == "0111011111111111111101110");
  CHECK(prefix(x, 15625).to_string() == oracle::recurrent_avoider_by_expansion(6));

  SUBCASE("prefix(5^n) = prefix(5^(n-1)) 1^(3*5^(n-1)) prefix(5^(n-1))") {
    std::size_t len = 1;
    for (int n = 1; n <= 7; ++n) {
      Word shorter = prefix(x, len);
      Word ones = repeat(Word({1}, 2), 3 * len);
      REQUIRE(prefix(x, 5 * len) == concat(concat(shorter, ones), shorter));
      len *= 5;
    }
  }
  // far positions stay O(log n)
  CHECK(recurrent_avoider_symbol(std::uint64_t{1} << 62) <= 1);
}

TEST_CASE("generic prefix materialization") {
  CHECK(prefix(InfiniteWord::thue_morse(), 2).to_string() == "01");
  CHECK(prefix(InfiniteWord::periodic(Word::parse("01")), 5).to_string() == "01010");
  auto lasso = InfiniteWord::ultimately_periodic(Word::parse("0"), Word::parse("1"));
  CHECK(prefix(lasso, 6).to_string() == "011111");
  CHECK_THROWS_AS(prefix(InfiniteWord::thue_morse(), 11, 10), ResourceLimitError);
  CHECK_THROWS_AS(InfiniteWord::periodic(Word()), std::invalid_argument);
  CHECK_THROWS_AS(InfiniteWord::thue_morse().symbol_at(0), std::out_of_range);
}

TEST_CASE("generators are deterministic and prefix-consistent") {
  std::vector<InfiniteWord> words = {
      InfiniteWord::thue_morse(), InfiniteWord::fibonacci(),
      InfiniteWord::periodic(Word::parse("0110")), InfiniteWord::sparse_avoider(),
      InfiniteWord::recurrent_avoider(),
      InfiniteWord::ultimately_periodic(Word::parse("010"), Word::parse("11"))};
  for (const auto& x : words) {
    Word a = prefix(x, 100000);
    Word b = prefix(InfiniteWord::parse(x.name()), 100000);
    REQUIRE(a == b);
    Word shorter = prefix(x, 777);
    REQUIRE(std::equal(shorter.begin(), shorter.end(), a.begin()));
  }
}

TEST_CASE("generator names") {
  CHECK(InfiniteWord::parse("thue-morse").name() == "thue-morse");
  CHECK(InfiniteWord::parse("periodic:012").alphabet_size() == 3);
  CHECK(InfiniteWord::parse("sparse-avoider:2:6").name() == "sparse-avoider:2:6");
  CHECK(InfiniteWord::parse("ultimately-periodic:0:1").name() == "ultimately-periodic:0:1");
  CHECK_THROWS_AS(InfiniteWord::parse("thue"), std::invalid_argument);
  CHECK_THROWS_AS(InfiniteWord::parse("periodic"), std::invalid_argument);
  CHECK_THROWS_AS(InfiniteWord::parse("sparse-avoider:1:2"), std::invalid_argument);
  CHECK_THROWS_AS(InfiniteWord::parse("sparse-avoider:x"), std::invalid_argument);
}
