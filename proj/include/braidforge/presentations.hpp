#ifndef BRAIDFORGE_PRESENTATIONS_HPP
#define BRAIDFORGE_PRESENTATIONS_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "braidforge/intlinalg.hpp"
#include "braidforge/words.hpp"

namespace braidforge {

// Surface with genus g and p punctures, carrying n braid strands.
struct SurfaceParams {
  int g = 0;
  int p = 0;
  int n = 1;

  int euler_char() const { return 2 - 2 * g - p; }  // chi
  int kappa() const { return 2 * g + p + n; }

  friend bool operator==(const SurfaceParams& a, const SurfaceParams& b) {
    return a.g == b.g && a.p == b.p && a.n == b.n;
  }
};

struct Presentation {
  std::string name;
  Alphabet generators;
  std::vector<Word> relators;  // each asserted = identity, freely reduced, nonempty
};

// Generators s1..s(n-1), a1..ag, b1..bg, z1..zp and the relator families of
// the surface braid group presentation: (BR1) (BR2) (CR1) (CR2) (CR3) (SCR)
// and (TR) with its full zeta tail.
Presentation braid_presentation(const SurfaceParams& params);

// The two-generator form of the braid group of the twice-punctured sphere on
// two strands over {d, z} with single relator [z, d^2].
Presentation b2a_presentation();

// Substitution words expressing d and z over the {s1, z1} alphabet
// (d = z1*s1, z = z1).
struct B2AChangeOfGenerators {
  Word d_in_sz;
  Word z_in_sz;
};
B2AChangeOfGenerators b2a_change_of_generators();

// The {s1, z1} presentation of the same group (single relator
// z1 s1 z1 s1 = s1 z1 s1 z1).
Presentation b2a_sz_presentation();

// Adds `kill` as a relator and eliminates it: every occurrence is deleted
// from every relator, trivialized relators are dropped, the generator is
// removed.
Presentation quotient_by_generator(const Presentation& p, const GenSym& kill);

// Relator multiset comparison after free and cyclic reduction, up to cyclic
// rotation; generator lists must agree exactly.
bool presentations_equivalent(const Presentation& a, const Presentation& b);

struct Abelianization {
  IntMatrix relation_matrix;  // rows = relators, cols = generators
  SmithForm snf;
  AbelianInvariants invariants;
  Alphabet generators;

  // Exponent-sum vector of a word over the presentation's generators.
  std::vector<mpz_class> class_of(const Word& w) const;
  // Equality of homology classes (difference lies in the relation lattice).
  bool classes_equal(const std::vector<mpz_class>& x,
                     const std::vector<mpz_class>& y) const;
};

Abelianization abelianize(const Presentation& p);

// Generator -> Z/2 projection certifying that the induced permutation
// factors through the torsion of H_1 (n = 2 only). Returns nullopt when the
// torsion is not exactly [2] (the punctured-sphere cases).
struct PurityMap {
  Presentation presentation;
  std::map<std::string, int> torsion_projection;  // values in {0,1}
};
std::optional<PurityMap> purity_test(const SurfaceParams& params);

// Line-oriented file format: '#' comments, 'name <string>',
// 'gens <sym> ...', 'rel <word>'. Also accepts 'img <gen> <word>' lines,
// returned separately for homomorphism image files.
struct PresentationFile {
  Presentation presentation;
  std::vector<std::pair<GenSym, std::string>> images;  // raw image words
};
PresentationFile load_presentation_text(const std::string& text);
Presentation load_presentation(const std::string& text);
std::string save_presentation(const Presentation& p);

}  // namespace braidforge

#endif
