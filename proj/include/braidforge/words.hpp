#ifndef BRAIDFORGE_WORDS_HPP
#define BRAIDFORGE_WORDS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "braidforge/errors.hpp"

namespace braidforge {

// A generator symbol. Two symbols are equal iff their names are equal;
// everything else (kind, subscripts) is derived from the name on demand.
struct GenSym {
  std::string name;

  GenSym() = default;
  GenSym(std::string n) : name(std::move(n)) {}  // NOLINT: implicit by design
  GenSym(const char* n) : name(n) {}             // NOLINT

  friend bool operator==(const GenSym& a, const GenSym& b) { return a.name == b.name; }
  friend bool operator!=(const GenSym& a, const GenSym& b) { return a.name != b.name; }
  friend bool operator<(const GenSym& a, const GenSym& b) { return a.name < b.name; }
};

// Checks the `[A-Za-z][A-Za-z0-9_]*` shape.
bool valid_gen_name(const std::string& name);

// An ordered generator alphabet.
using Alphabet = std::vector<GenSym>;

bool alphabet_contains(const Alphabet& alphabet, const std::string& name);

// One freely-reduced run of a single generator. exp is never 0 inside a Word.
struct Syllable {
  GenSym gen;
  std::int64_t exp = 1;

  friend bool operator==(const Syllable& a, const Syllable& b) {
    return a.gen == b.gen && a.exp == b.exp;
  }
};

// A freely reduced word, stored syllable-compressed. The empty word is the
// identity. Words are immutable values once built; all operations below
// return fresh words.
struct Word {
  std::vector<Syllable> syllables;

  bool is_identity() const { return syllables.empty(); }
  // Total exponent length sum |e_i|.
  std::uint64_t length() const;

  friend bool operator==(const Word& a, const Word& b) {
    return a.syllables == b.syllables;
  }
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
  friend bool operator<(const Word& a, const Word& b);
};

// Free reduction of a raw syllable list. Idempotent.
Word reduce(const std::vector<Syllable>& raw);

Word word_from_gen(const GenSym& g, std::int64_t exp = 1);

Word invert(const Word& w);
Word concat(const Word& u, const Word& v);
// by^-1 * w * by
Word conjugate(const Word& w, const Word& by);
// u^-1 v^-1 u v
Word commutator(const Word& u, const Word& v);
Word pow(const Word& w, std::int64_t k);

// Parses the shared word grammar:
//   word   := e | term ((ws|'*') term)*
//   term   := factor ('^' int)?
//   factor := NAME | '(' word ')' | '[' word ',' word ']'
// `[u,v]` expands to u^-1 v^-1 u v at parse time; `e` (or an empty string)
// denotes the identity unless the alphabet declares a generator named e.
// Every symbol must lie in `alphabet`.
Word parse_word(const std::string& text, const Alphabet& alphabet);

// Round-trips through parse_word: syllables joined by '*', `^k` for k != 1,
// identity printed as "e".
std::string format_word(const Word& w);

// Flat letter form: one entry per letter, sign in {+1,-1}. Throws
// ExponentOverflow if the flat length would be absurd (> 2^24 letters).
struct Letter {
  GenSym gen;
  int sign = 1;
};
std::vector<Letter> flatten(const Word& w);
Word word_from_letters(const std::vector<Letter>& letters);

}  // namespace braidforge

#endif
