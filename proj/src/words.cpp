#include "braidforge/words.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace braidforge {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ExponentOverflow();
  return r;
}

void push_reduced(std::vector<Syllable>& stack, const GenSym& g, std::int64_t e) {
  if (e == 0) return;
  if (!stack.empty() && stack.back().gen == g) {
    std::int64_t merged = checked_add(stack.back().exp, e);
    if (merged == 0)
      stack.pop_back();
    else
      stack.back().exp = merged;
  } else {
    stack.push_back(Syllable{g, e});
  }
}

void append_word(std::vector<Syllable>& stack, const Word& w, std::int64_t exp) {
  if (exp >= 0) {
    for (std::int64_t k = 0; k < exp; ++k)
      for (const auto& s : w.syllables) push_reduced(stack, s.gen, s.exp);
  } else {
    for (std::int64_t k = 0; k < -exp; ++k)
      for (auto it = w.syllables.rbegin(); it != w.syllables.rend(); ++it)
        push_reduced(stack, it->gen, -it->exp);
  }
}

}  // namespace

bool valid_gen_name(const std::string& name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  return std::all_of(name.begin() + 1, name.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_';
  });
}

bool alphabet_contains(const Alphabet& alphabet, const std::string& name) {
  return std::any_of(alphabet.begin(), alphabet.end(),
                     [&](const GenSym& g) { return g.name == name; });
}

std::uint64_t Word::length() const {
  std::uint64_t total = 0;
  for (const auto& s : syllables)
    total += static_cast<std::uint64_t>(s.exp < 0 ? -s.exp : s.exp);
  return total;
}

bool operator<(const Word& a, const Word& b) {
  return std::lexicographical_compare(
      a.syllables.begin(), a.syllables.end(), b.syllables.begin(), b.syllables.end(),
      [](const Syllable& x, const Syllable& y) {
        if (x.gen != y.gen) return x.gen < y.gen;
        return x.exp < y.exp;
      });
}

Word reduce(const std::vector<Syllable>& raw) {
  Word out;
  for (const auto& s : raw) push_reduced(out.syllables, s.gen, s.exp);
  return out;
}

Word word_from_gen(const GenSym& g, std::int64_t exp) {
  Word w;
  if (exp != 0) w.syllables.push_back(Syllable{g, exp});
  return w;
}

Word invert(const Word& w) {
  Word out;
  out.syllables.reserve(w.syllables.size());
  for (auto it = w.syllables.rbegin(); it != w.syllables.rend(); ++it)
    out.syllables.push_back(Syllable{it->gen, -it->exp});
  return out;
}

Word concat(const Word& u, const Word& v) {
  Word out;
  out.syllables = u.syllables;
  for (const auto& s : v.syllables) push_reduced(out.syllables, s.gen, s.exp);
  return out;
}

Word conjugate(const Word& w, const Word& by) {
  return concat(concat(invert(by), w), by);
}

Word commutator(const Word& u, const Word& v) {
  return concat(concat(invert(u), invert(v)), concat(u, v));
}

Word pow(const Word& w, std::int64_t k) {
  if (k == 0 || w.is_identity()) return Word{};
  if (w.syllables.size() == 1) {
    std::int64_t e;
    if (__builtin_mul_overflow(w.syllables[0].exp, k, &e)) throw ExponentOverflow();
    return word_from_gen(w.syllables[0].gen, e);
  }
  std::uint64_t mag = k > 0 ? static_cast<std::uint64_t>(k) : -static_cast<std::uint64_t>(k);
  if (mag > (std::uint64_t{1} << 22) || w.length() > (std::uint64_t{1} << 24) / mag)
    throw ExponentOverflow();
  Word out;
  append_word(out.syllables, w, k);
  return out;
}

namespace {

// Recursive-descent parser for the word grammar.
class WordParser {
 public:
  WordParser(const std::string& text, const Alphabet& alphabet)
      : text_(text), alphabet_(alphabet) {}

  Word parse() {
    skip_ws();
    if (at_end()) return Word{};
    Word w = parse_sequence();
    skip_ws();
    if (!at_end()) fail("unexpected trailing input");
    return w;
  }

 private:
  Word parse_sequence() {
    std::vector<Syllable> acc;
    bool first = true;
    for (;;) {
      skip_ws();
      if (at_end() || peek() == ')' || peek() == ',' || peek() == ']') break;
      if (peek() == '*') {
        if (first) fail("expected a term before '*'");
        ++pos_;
        skip_ws();
      }
      Word term = parse_term();
      append_word(acc, term, 1);
      first = false;
    }
    if (first) fail("expected a term");
    Word out;
    out.syllables = std::move(acc);
    return reduce(out.syllables);
  }

  Word parse_term() {
    Word base = parse_factor();
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      std::int64_t e = parse_int();
      return pow(base, e);
    }
    return base;
  }

  Word parse_factor() {
    skip_ws();
    if (at_end()) fail("expected a factor");
    char c = peek();
    if (c == '(') {
      ++pos_;
      Word inner = parse_sequence();
      expect(')');
      return inner;
    }
    if (c == '[') {
      ++pos_;
      Word u = parse_sequence();
      expect(',');
      Word v = parse_sequence();
      expect(']');
      return commutator(u, v);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string name = parse_name();
      if (name == "e" && !alphabet_contains(alphabet_, "e")) return Word{};
      if (!alphabet_contains(alphabet_, name)) throw UnknownGenerator(name);
      return word_from_gen(GenSym{name});
    }
    fail("expected a generator, '(' or '['");
  }

  std::string parse_name() {
    std::size_t start = pos_;
    ++pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
      ++pos_;
    return text_.substr(start, pos_ - start);
  }

  std::int64_t parse_int() {
    std::size_t start = pos_;
    if (!at_end() && (peek() == '-' || peek() == '+')) ++pos_;
    std::size_t digits = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == digits) fail("expected an integer exponent");
    try {
      return std::stoll(text_.substr(start, pos_ - start));
    } catch (const std::out_of_range&) {
      throw ExponentOverflow();
    }
  }

  void expect(char c) {
    skip_ws();
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) {
    std::ostringstream os;
    os << what << " at position " << pos_;
    throw SyntaxError(os.str(), pos_);
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  const std::string& text_;
  const Alphabet& alphabet_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(const std::string& text, const Alphabet& alphabet) {
  return WordParser(text, alphabet).parse();
}

std::string format_word(const Word& w) {
  if (w.is_identity()) return "e";
  std::ostringstream os;
  bool first = true;
  for (const auto& s : w.syllables) {
    if (!first) os << '*';
    os << s.gen.name;
    if (s.exp != 1) os << '^' << s.exp;
    first = false;
  }
  return os.str();
}

std::vector<Letter> flatten(const Word& w) {
  constexpr std::uint64_t kMaxLetters = std::uint64_t{1} << 24;
  if (w.length() > kMaxLetters) throw ExponentOverflow();
  std::vector<Letter> out;
  out.reserve(static_cast<std::size_t>(w.length()));
  for (const auto& s : w.syllables) {
    int sign = s.exp > 0 ? 1 : -1;
    std::int64_t count = s.exp > 0 ? s.exp : -s.exp;
    for (std::int64_t k = 0; k < count; ++k) out.push_back(Letter{s.gen, sign});
  }
  return out;
}

Word word_from_letters(const std::vector<Letter>& letters) {
  Word out;
  for (const auto& l : letters) push_reduced(out.syllables, l.gen, l.sign);
  return out;
}

}  // namespace braidforge
