#include "braidforge/presentations.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "braidforge/errors.hpp"

namespace braidforge {

namespace {

GenSym sigma(int i) { return GenSym{"s" + std::to_string(i)}; }
GenSym agen(int r) { return GenSym{"a" + std::to_string(r)}; }
GenSym bgen(int r) { return GenSym{"b" + std::to_string(r)}; }
GenSym zeta(int t) { return GenSym{"z" + std::to_string(t)}; }

Word gen(const GenSym& g, std::int64_t e = 1) { return word_from_gen(g, e); }

void add_relator(Presentation& p, const Word& w) {
  if (!w.is_identity()) p.relators.push_back(w);
}

}  // namespace

Presentation braid_presentation(const SurfaceParams& params) {
  const int g = params.g, p = params.p, n = params.n;
  if (g < 0 || p < 0 || n < 1)
    throw IndexOutOfRange("braid_presentation: need g,p >= 0 and n >= 1");

  Presentation pres;
  {
    std::ostringstream os;
    os << "B_" << n << "(Sigma_{" << g << "," << p << "})";
    pres.name = os.str();
  }
  for (int i = 1; i <= n - 1; ++i) pres.generators.push_back(sigma(i));
  for (int r = 1; r <= g; ++r) pres.generators.push_back(agen(r));
  for (int r = 1; r <= g; ++r) pres.generators.push_back(bgen(r));
  for (int t = 1; t <= p; ++t) pres.generators.push_back(zeta(t));

  // (BR1) si sj = sj si for |i-j| > 1
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j)
      add_relator(pres, commutator(gen(sigma(i)), gen(sigma(j))));

  // (BR2) si sj si = sj si sj for |i-j| = 1
  for (int i = 1; i <= n - 2; ++i) {
    Word lhs = concat(concat(gen(sigma(i)), gen(sigma(i + 1))), gen(sigma(i)));
    Word rhs = concat(concat(gen(sigma(i + 1)), gen(sigma(i))), gen(sigma(i + 1)));
    add_relator(pres, concat(lhs, invert(rhs)));
  }

  // (CR1) [a_r, s_i], [b_s, s_i], [z_t, s_i] for i > 1
  for (int i = 2; i <= n - 1; ++i) {
    for (int r = 1; r <= g; ++r) add_relator(pres, commutator(gen(agen(r)), gen(sigma(i))));
    for (int r = 1; r <= g; ++r) add_relator(pres, commutator(gen(bgen(r)), gen(sigma(i))));
    for (int t = 1; t <= p; ++t) add_relator(pres, commutator(gen(zeta(t)), gen(sigma(i))));
  }

  if (n >= 2) {
    const Word s1 = gen(sigma(1));
    // (CR2) [x, s1 x s1] for x among a_r, b_r, z_t
    for (int r = 1; r <= g; ++r)
      add_relator(pres, commutator(gen(agen(r)), concat(concat(s1, gen(agen(r))), s1)));
    for (int r = 1; r <= g; ++r)
      add_relator(pres, commutator(gen(bgen(r)), concat(concat(s1, gen(bgen(r))), s1)));
    for (int t = 1; t <= p; ++t)
      add_relator(pres, commutator(gen(zeta(t)), concat(concat(s1, gen(zeta(t))), s1)));

    // (CR3) [x, s1^-1 y s1] families
    auto conj_s1 = [&](const Word& y) { return conjugate(y, s1); };
    for (int r = 1; r <= g; ++r)
      for (int s = r + 1; s <= g; ++s) {
        add_relator(pres, commutator(gen(agen(r)), conj_s1(gen(agen(s)))));
        add_relator(pres, commutator(gen(agen(r)), conj_s1(gen(bgen(s)))));
        add_relator(pres, commutator(gen(bgen(r)), conj_s1(gen(agen(s)))));
        add_relator(pres, commutator(gen(bgen(r)), conj_s1(gen(bgen(s)))));
      }
    for (int r = 1; r <= g; ++r)
      for (int u = 1; u <= p; ++u) {
        add_relator(pres, commutator(gen(agen(r)), conj_s1(gen(zeta(u)))));
        add_relator(pres, commutator(gen(bgen(r)), conj_s1(gen(zeta(u)))));
      }
    for (int t = 1; t <= p; ++t)
      for (int u = t + 1; u <= p; ++u)
        add_relator(pres, commutator(gen(zeta(t)), conj_s1(gen(zeta(u)))));

    // (SCR) s1 b_r s1 a_r s1 = a_r s1 b_r
    for (int r = 1; r <= g; ++r) {
      Word lhs = concat(concat(concat(concat(s1, gen(bgen(r))), s1), gen(agen(r))), s1);
      Word rhs = concat(concat(gen(agen(r)), s1), gen(bgen(r)));
      add_relator(pres, concat(lhs, invert(rhs)));
    }
  }

  // (TR) (s1..s_{n-1} s_{n-1}..s1) prod_r [b_r^-1, a_r] prod_t z_t
  {
    Word tr;
    for (int i = 1; i <= n - 1; ++i) tr = concat(tr, gen(sigma(i)));
    for (int i = n - 1; i >= 1; --i) tr = concat(tr, gen(sigma(i)));
    for (int r = 1; r <= g; ++r)
      tr = concat(tr, commutator(invert(gen(bgen(r))), gen(agen(r))));
    for (int t = 1; t <= p; ++t) tr = concat(tr, gen(zeta(t)));
    add_relator(pres, tr);
  }

  return pres;
}

Presentation b2a_presentation() {
  Presentation pres;
  pres.name = "B_2(A)";
  pres.generators = {GenSym{"d"}, GenSym{"z"}};
  pres.relators = {commutator(gen(GenSym{"z"}), pow(gen(GenSym{"d"}), 2))};
  return pres;
}

B2AChangeOfGenerators b2a_change_of_generators() {
  // d = z1*s1, z = z1
  return {concat(gen(zeta(1)), gen(sigma(1))), gen(zeta(1))};
}

Presentation b2a_sz_presentation() {
  Presentation pres;
  pres.name = "B_2(A)[sz]";
  pres.generators = {sigma(1), zeta(1)};
  Word zs = concat(gen(zeta(1)), gen(sigma(1)));
  Word sz = concat(gen(sigma(1)), gen(zeta(1)));
  // z1 s1 z1 s1 = s1 z1 s1 z1
  pres.relators = {concat(concat(zs, zs), invert(concat(sz, sz)))};
  return pres;
}

Presentation quotient_by_generator(const Presentation& p, const GenSym& kill) {
  if (!alphabet_contains(p.generators, kill.name)) throw GeneratorNotFound(kill.name);
  Presentation out;
  out.name = p.name + "/" + kill.name;
  for (const auto& g : p.generators)
    if (g != kill) out.generators.push_back(g);
  for (const auto& rel : p.relators) {
    std::vector<Syllable> kept;
    for (const auto& s : rel.syllables)
      if (s.gen != kill) kept.push_back(s);
    Word reduced = reduce(kept);
    if (!reduced.is_identity()) out.relators.push_back(reduced);
  }
  return out;
}

namespace {

// Canonical representative of a relator up to free/cyclic reduction and
// rotation: cyclically reduce the letter sequence, then pick the
// lexicographically least rotation.
std::vector<std::pair<std::string, int>> cyclic_normal_form(const Word& w) {
  std::vector<std::pair<std::string, int>> letters;
  for (const auto& l : flatten(w)) letters.emplace_back(l.gen.name, l.sign);
  // cyclic reduction
  while (letters.size() >= 2 && letters.front().first == letters.back().first &&
         letters.front().second == -letters.back().second) {
    letters.erase(letters.begin());
    letters.pop_back();
  }
  if (letters.empty()) return letters;
  std::vector<std::pair<std::string, int>> best = letters;
  for (std::size_t k = 1; k < letters.size(); ++k) {
    std::rotate(letters.begin(), letters.begin() + 1, letters.end());
    if (letters < best) best = letters;
  }
  return best;
}

}  // namespace

bool presentations_equivalent(const Presentation& a, const Presentation& b) {
  if (a.generators != b.generators) return false;
  std::multiset<std::vector<std::pair<std::string, int>>> ra, rb;
  for (const auto& r : a.relators) ra.insert(cyclic_normal_form(r));
  for (const auto& r : b.relators) rb.insert(cyclic_normal_form(r));
  return ra == rb;
}

std::vector<mpz_class> Abelianization::class_of(const Word& w) const {
  std::vector<mpz_class> v(generators.size(), 0);
  for (const auto& s : w.syllables) {
    auto it = std::find(generators.begin(), generators.end(), s.gen);
    if (it == generators.end()) throw UnknownGenerator(s.gen.name);
    v[static_cast<std::size_t>(it - generators.begin())] += s.exp;
  }
  return v;
}

bool Abelianization::classes_equal(const std::vector<mpz_class>& x,
                                   const std::vector<mpz_class>& y) const {
  std::vector<mpz_class> diff(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) diff[i] = x[i] - y[i];
  return in_row_lattice(snf, diff);
}

Abelianization abelianize(const Presentation& p) {
  Abelianization ab;
  ab.generators = p.generators;
  ab.relation_matrix = IntMatrix(p.relators.size(), p.generators.size());
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    std::vector<mpz_class> row = ab.class_of(p.relators[i]);
    for (std::size_t j = 0; j < row.size(); ++j) ab.relation_matrix.at(i, j) = row[j];
  }
  ab.snf = smith_normal_form(ab.relation_matrix);
  ab.invariants = abelian_invariants(ab.relation_matrix);
  return ab;
}

std::optional<PurityMap> purity_test(const SurfaceParams& params) {
  if (params.n != 2) throw WrongStrandCount("purity_test: needs n = 2");
  Presentation pres = braid_presentation(params);
  Abelianization ab = abelianize(pres);

  std::vector<mpz_class> two{mpz_class(2)};
  if (ab.invariants.torsion != two) return std::nullopt;

  // The projection is the induced permutation on generators: s1 -> 1,
  // everything else -> 0. Certify that it factors through H_1 and is the
  // identity on the torsion subgroup.
  PurityMap pm;
  pm.presentation = pres;
  for (const auto& g : pres.generators)
    pm.torsion_projection[g.name] = (g.name == "s1") ? 1 : 0;

  for (const auto& rel : pres.relators) {
    long acc = 0;
    for (const auto& s : rel.syllables)
      acc += pm.torsion_projection.at(s.gen.name) * static_cast<long>(s.exp % 2);
    if (acc % 2 != 0)
      throw std::logic_error("purity_test: projection does not kill a relator");
  }

  // [s1] must have order exactly 2, so it generates the Z/2 torsion and the
  // projection restricts to the identity there.
  std::vector<mpz_class> e_s1(pres.generators.size(), 0);
  e_s1[0] = 1;
  std::vector<mpz_class> two_e_s1(pres.generators.size(), 0);
  two_e_s1[0] = 2;
  if (!in_row_lattice(ab.snf, two_e_s1) || in_row_lattice(ab.snf, e_s1))
    throw std::logic_error("purity_test: [s1] does not generate the torsion");

  return pm;
}

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

[[noreturn]] void file_error(std::size_t line_no, const std::string& msg) {
  std::ostringstream os;
  os << "line " << line_no << ": " << msg;
  throw SyntaxError(os.str(), line_no);
}

}  // namespace

PresentationFile load_presentation_text(const std::string& text) {
  PresentationFile out;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  bool have_gens = false;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string keyword;
    ls >> keyword;
    if (keyword == "name") {
      std::string rest;
      std::getline(ls, rest);
      out.presentation.name = trim(rest);
    } else if (keyword == "gens") {
      if (have_gens) file_error(line_no, "duplicate gens line");
      std::string sym;
      while (ls >> sym) {
        if (!valid_gen_name(sym)) file_error(line_no, "bad generator name '" + sym + "'");
        if (alphabet_contains(out.presentation.generators, sym))
          file_error(line_no, "duplicate generator '" + sym + "'");
        out.presentation.generators.push_back(GenSym{sym});
      }
      have_gens = true;
    } else if (keyword == "rel") {
      if (!have_gens) file_error(line_no, "rel before gens");
      std::string rest;
      std::getline(ls, rest);
      try {
        Word w = parse_word(trim(rest), out.presentation.generators);
        if (!w.is_identity()) out.presentation.relators.push_back(w);
      } catch (const Error& e) {
        file_error(line_no, e.what());
      }
    } else if (keyword == "img") {
      std::string gen_name, rest;
      ls >> gen_name;
      std::getline(ls, rest);
      out.images.emplace_back(GenSym{gen_name}, trim(rest));
    } else {
      file_error(line_no, "unknown keyword '" + keyword + "'");
    }
  }
  if (!have_gens) file_error(line_no, "missing gens line");
  return out;
}

Presentation load_presentation(const std::string& text) {
  return load_presentation_text(text).presentation;
}

std::string save_presentation(const Presentation& p) {
  std::ostringstream os;
  if (!p.name.empty()) os << "name " << p.name << "\n";
  os << "gens";
  for (const auto& g : p.generators) os << ' ' << g.name;
  os << "\n";
  for (const auto& r : p.relators) os << "rel " << format_word(r) << "\n";
  return os.str();
}

}  // namespace braidforge
