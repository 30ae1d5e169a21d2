#include <doctest.h>

#include "braidforge/errors.hpp"
#include "braidforge/words.hpp"
#include "testutil.hpp"

using namespace braidforge;

namespace {
const Alphabet kAb{GenSym{"a"}, GenSym{"b"}};
const Alphabet kBraid{GenSym{"s1"}, GenSym{"s2"}, GenSym{"a1"}, GenSym{"b1"}};
}  // namespace

TEST_CASE("parse_word: free cancellation, commutator sugar, exponents") {
  CHECK(parse_word("s1*s1^-1*a1", kBraid) == parse_word("a1", kBraid));
  CHECK(format_word(parse_word("[a1,b1]", kBraid)) == "a1^-1*b1^-1*a1*b1");
  CHECK(format_word(parse_word("(s1*s2)^3", kBraid)) == "s1*s2*s1*s2*s1*s2");
  CHECK(parse_word("e", kBraid).is_identity());
  CHECK(parse_word("", kBraid).is_identity());
  CHECK(parse_word("a1 b1", kBraid) == parse_word("a1*b1", kBraid));
}

TEST_CASE("parse_word errors") {
  CHECK_THROWS_AS(parse_word("q7", kBraid), UnknownGenerator);
  CHECK_THROWS_AS(parse_word("(a1", kBraid), SyntaxError);
  CHECK_THROWS_AS(parse_word("a1^x", kBraid), SyntaxError);
  CHECK_THROWS_AS(parse_word("[a1 b1]", kBraid), SyntaxError);
  CHECK_THROWS_AS(parse_word("a1^99999999999999999999", kBraid), ExponentOverflow);
}

TEST_CASE("reduce") {
  auto syl = [](const char* g, std::int64_t e) { return Syllable{GenSym{g}, e}; };
  CHECK(reduce({syl("a", 1), syl("a", -1), syl("b", 1)}) == parse_word("b", kAb));
  CHECK(reduce({syl("a", 2), syl("a", -2)}).is_identity());
  CHECK(reduce({syl("a", 1), syl("b", 1), syl("b", -1), syl("a", 1)}) ==
        parse_word("a^2", kAb));
}

TEST_CASE("group operations") {
  Word ab2 = parse_word("a*b^2", kAb);
  CHECK(format_word(invert(ab2)) == "b^-2*a^-1");
  CHECK(format_word(conjugate(parse_word("a", kAb), parse_word("b", kAb))) ==
        "b^-1*a*b");
  CHECK(commutator(parse_word("a", kAb), parse_word("a", kAb)).is_identity());
  CHECK(concat(ab2, invert(ab2)).is_identity());
}

TEST_CASE("format_word round trips") {
  CHECK(format_word(Word{}) == "e");
  CHECK(format_word(parse_word("s1 s1", kBraid)) == "s1^2");
  CHECK(format_word(parse_word("a1^-1*b1", kBraid)) == "a1^-1*b1");
}

TEST_CASE("property: reduction canonicity and round-trip") {
  auto rng = testutil::make_rng();
  for (int trial = 0; trial < 500; ++trial) {
    Word w = testutil::random_word(rng, kBraid, 30);
    // freely reduced: no adjacent equal symbols, no zero exponents
    for (std::size_t k = 0; k < w.syllables.size(); ++k) {
      CHECK(w.syllables[k].exp != 0);
      if (k > 0) CHECK(w.syllables[k].gen != w.syllables[k - 1].gen);
    }
    // idempotence
    CHECK(reduce(w.syllables) == w);
    // parse . format = identity
    CHECK(parse_word(format_word(w), kBraid) == w);
  }
}

TEST_CASE("property: group laws under reduction") {
  auto rng = testutil::make_rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    Word u = testutil::random_word(rng, kBraid, 12);
    Word v = testutil::random_word(rng, kBraid, 12);
    Word w = testutil::random_word(rng, kBraid, 12);
    CHECK(concat(concat(u, v), w) == concat(u, concat(v, w)));
    CHECK(invert(invert(u)) == u);
    CHECK(concat(u, invert(u)).is_identity());
    CHECK(concat(u, v).length() <= u.length() + v.length());
  }
}

TEST_CASE("exponent overflow is an error, not a wrap") {
  Word big = word_from_gen(GenSym{"a"}, INT64_MAX);
  CHECK_THROWS_AS(concat(big, word_from_gen(GenSym{"a"}, 1)), ExponentOverflow);
  CHECK_THROWS_AS(pow(big, 2), ExponentOverflow);
}
