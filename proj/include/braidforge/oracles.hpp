#ifndef BRAIDFORGE_ORACLES_HPP
#define BRAIDFORGE_ORACLES_HPP

#include <memory>
#include <string>
#include <vector>

#include "braidforge/presentations.hpp"
#include "braidforge/words.hpp"

namespace braidforge {

// Tiered word-problem oracles. Exact oracles decide equality; Necessary
// oracles live in proper quotients, so they can refute but never certify.
enum class OracleKind {
  FreeGroup,
  ClassicalBraid,  // Artin action on a free group, exact
  ClosedSurface,   // Dehn's algorithm, g >= 2
  TorusZ2,
  TrivialGroup,
  B2A,             // central normal form for <d,z | [z,d^2]>
  Permutation,     // induced permutation rho
  Homology,        // abelianized image
  GoldbergProduct, // factorwise pi_1 comparison; kernel is the A-closure
};

enum class Tier { Exact, Necessary };

struct OracleContext {
  OracleKind kind;
  Alphabet alphabet;                             // FreeGroup
  int n = 0;                                     // ClassicalBraid, Permutation
  int g = 0;                                     // ClosedSurface
  SurfaceParams params;                          // GoldbergProduct
  std::shared_ptr<const Abelianization> homology;  // Homology

  Tier tier() const;
  std::string label() const;
  bool accepts(const Word& u, const Word& v) const;
};

OracleContext free_context(Alphabet alphabet);
OracleContext artin_context(int n);
OracleContext dehn_context(int g);
OracleContext torus_context();
OracleContext trivial_context();
OracleContext b2a_context();
OracleContext permutation_context(int n);
OracleContext homology_context(const Presentation& p);
OracleContext goldberg_context(const SurfaceParams& params);

enum class Eq { Equal, NotEqual, ConsistentButUnverified };

struct Verdict {
  Eq value = Eq::ConsistentButUnverified;
  std::string oracle;   // which oracle produced it
  std::string witness;  // distinguishing data for NotEqual
};

// --- individual oracles -------------------------------------------------

// Exact: reduce(u v^-1) empty.
Verdict free_eq(const Alphabet& alphabet, const Word& u, const Word& v);

// Exact: the Artin action s_i: x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i is
// faithful. Accepts z1, eliminated first via (TR):
// z1 := (s1..s_{n-1} s_{n-1}..s1)^-1.
Verdict artin_eq(int n, const Word& u, const Word& v);
// Images of the free basis x1..xn under the braid word (left-to-right).
std::vector<Word> artin_images(int n, const Word& w);

// Exact for g >= 2: Dehn's algorithm on the one-relator surface group with
// relator prod_r [b_r^-1, a_r].
Verdict dehn_eq(int g, const Word& u, const Word& v);

// Exact: canonical form d^{2k} w with w reduced in <z> * <d | d^2>.
Verdict b2a_eq(const Word& u, const Word& v);
struct B2ANormalForm {
  long long central_power = 0;  // k in d^{2k} w
  Word reduced;                 // free-product normal form, d-exponents 1
  friend bool operator==(const B2ANormalForm& a, const B2ANormalForm& b) {
    return a.central_power == b.central_power && a.reduced == b.reduced;
  }
};
B2ANormalForm b2a_normal_form(const Word& w);

// Exact: Z^2 on {a1, b1}.
Verdict torus_eq(const Word& u, const Word& v);

// Necessary: induced permutation rho(s_i) = (i, i+1), others -> identity.
Verdict permutation_eq(int n, const Word& u, const Word& v);
// One-line image (0-based) of rho on a word.
std::vector<int> rho(int n, const Word& w);
std::string perm_cycles(const std::vector<int>& perm);

// Necessary: abelianized classes modulo the relation lattice. Exact for
// statements about homology classes themselves.
Verdict homology_eq(const Abelianization& ab, const Word& u, const Word& v);

// Necessary: project X-words to the n-tuple of pi_1 words and compare
// factorwise with the exact pi_1 oracle. Equal downgrades to
// ConsistentButUnverified (the kernel is the A_{i,j} closure).
Verdict goldberg_eq(const SurfaceParams& params, const Word& u, const Word& v);

// Exact oracle for pi_1 of the surface itself (free if p >= 1 after
// eliminating z_p, Z^2 for the closed torus, Dehn for closed g >= 2).
Verdict pi1_eq(int g, int p, const Word& u, const Word& v);

Verdict evaluate(const OracleContext& ctx, const Word& u, const Word& v);

struct CheckReport {
  Verdict verdict;                       // combined
  std::vector<std::string> lines;        // one deterministic line per context
};

// NotEqual if any oracle refutes; Equal if an exact oracle certifies;
// otherwise ConsistentButUnverified. Contexts that do not accept the words'
// alphabet are skipped with a notice. Throws NoApplicableOracle when nothing
// ran.
CheckReport check_equal(const std::vector<OracleContext>& ctxs, const Word& u,
                        const Word& v);

}  // namespace braidforge

#endif
