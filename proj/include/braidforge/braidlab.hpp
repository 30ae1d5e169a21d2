#ifndef BRAIDFORGE_BRAIDLAB_HPP
#define BRAIDFORGE_BRAIDLAB_HPP

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "braidforge/oracles.hpp"
#include "braidforge/presentations.hpp"
#include "braidforge/words.hpp"

namespace braidforge {

// --- named elements over the ambient (Theorem-2.1-style) alphabet --------

enum class ElemKind {
  Sigma,      // s<i>
  AGen,       // a<r>
  BGen,       // b<r>
  ZetaGen,    // z<t>
  DeltaI,     // delta_i = s1..s_{i-1}
  Aij,        // band generator
  Air,        // a_{i,r} = delta_i^-1 a_r delta_i
  Bir,
  Zit,
  DeltaSq,    // (s1..s_{n-1})^n
  DeltaZeta,  // (z1 s1..s_{n-1})^n
  DeltaA,     // (a1 s1..s_{n-1})^n
  DeltaB,     // (b1 s1..s_{n-1})^n
};

struct ElemSymbol {
  ElemKind kind;
  int i = 0;  // strand index (or main index)
  int j = 0;  // second strand / r / t
};

struct NamedElement {
  ElemSymbol symbol;
  SurfaceParams params;
  Word word;  // closed-form word over the ambient alphabet, freely reduced
};

// Closed-form constructors; A(i,j) with i > j normalizes to A(j,i).
NamedElement element(const SurfaceParams& params, const ElemSymbol& symbol);
// Parses CLI spellings: s1, a2, b1, z3, delta2, A1_3, a2_1, b1_1, z2_3,
// Dsq, Dzeta, Da, Db.
ElemSymbol parse_elem_symbol(const std::string& text, const SurfaceParams& params);

// --- abstract X alphabet ---------------------------------------------------

// Abstract symbols of X_i = {A_{i,j} (j != i), a_{i,r}, b_{i,r}, z_{i,t}},
// named A<i>_<j>, a<i>_<r>, b<i>_<r>, z<i>_<t>.
enum class XKind { A, LowerA, LowerB, Zeta };
struct XSym {
  XKind kind;
  int i = 0;  // for A: smaller strand; else strand
  int j = 0;  // for A: larger strand; else r / t
};
std::string x_name(const XSym& s);
std::optional<XSym> parse_x_name(const std::string& name);

struct XAlphabet {
  SurfaceParams params;
  int i = 1;
  Alphabet symbols;

  // Ambient word for one abstract symbol.
  Word expansion(const GenSym& sym) const;
  // Substitute expansions through a whole X-word.
  Word expand(const Word& w) const;
};
XAlphabet x_alphabet(const SurfaceParams& params, int i);
// Union over all strands.
Alphabet x_alphabet_all(const SurfaceParams& params);
Word expand_x_word(const SurfaceParams& params, const Word& w);

// (PTR) in the abstract X_i alphabet:
// (A_{i,i+1}..A_{i,n} A_{1,i}..A_{i-1,i}) prod_r [b_{i,r}^-1, a_{i,r}] prod_t z_{i,t}
Word ptr_word(const SurfaceParams& params, int i);

// (PSCR): lhs = A_{i,i+1}, rhs1 = [b_{i,r}, a_{i+1,r}^-1],
// rhs2 = [b_{i+1,r}, A_{i,i+1}^-1 a_{i,r}^-1 A_{i,i+1}]
struct PscrWords {
  Word lhs, rhs1, rhs2;
};
PscrWords pscr_words(const SurfaceParams& params, int i, int r);

// Deletes every symbol of strand i and reindexes strands above it downward.
Word forget_strand(const SurfaceParams& params, int i, const Word& w);

// The Goldberg projection of an X-word: factor i collects a_r/b_r/z_t from
// the strand-i symbols, every A_{i,j} maps to the identity.
std::vector<Word> goldberg_project(const SurfaceParams& params, const Word& w);

// --- strongly-free certificate ---------------------------------------------

// Certifies that the classes of Y generate Z^{|Y|} in H_1(U_i), which is
// Z^{|X_i|} modulo the single (HPTR) row.
struct StronglyFree {
  bool certified = false;
  std::size_t rank = 0;
};
StronglyFree strongly_free_certificate(const SurfaceParams& params, int i,
                                       const std::vector<GenSym>& y);

// --- homomorphisms ----------------------------------------------------------

struct Homomorphism {
  Presentation source;
  std::vector<OracleContext> target;  // oracle battery for the codomain
  std::map<std::string, Word> images;

  Word apply(const Word& w) const;
};

enum class HomStatus { Verified, Consistent, Refuted };

struct HomReport {
  HomStatus status = HomStatus::Consistent;
  // one entry per relator: formatted relator, verdict line
  std::vector<std::pair<std::string, Verdict>> relators;
  std::string refuted_relator;  // set when status == Refuted
};

HomReport verify_homomorphism(const Homomorphism& h);

// --- transvections (torus) ---------------------------------------------------

struct TransvectionParams {
  int n = 2;
  std::int64_t x1 = 0, y1 = 0, x2 = 0, y2 = 0;
};

struct Transvection {
  int n = 2;
  Homomorphism hom;
  std::int64_t matrix[2][2];  // M_phi = [[n x1 + 1, n x2], [n y1, n y2 + 1]]
  std::int64_t det = 0;
};
struct RejectedTransvection {
  std::int64_t det;
};
using TransvectionResult = std::variant<Transvection, RejectedTransvection>;

// Images s_i -> s_i, a1 -> a1 Da^{x1} Db^{y1}, b1 -> b1 Da^{x2} Db^{y2} on
// braid_presentation(1, 0, n); rejected unless det(M_phi) = +-1.
TransvectionResult make_transvection(const TransvectionParams& tp);

// Exact H_1-level check that the accepted map acts on <[Da],[Db]> by M_phi.
bool transvection_matrix_law(const Transvection& tv);

// --- B_2(A) automorphisms ---------------------------------------------------

// Generator-image map on <d, z | [z, d^2]>, composed left to right:
// (fg)(x) = g(f(x)).
struct B2AAut {
  std::string name;
  Word img_d, img_z;
};

B2AAut b2a_identity_aut();
B2AAut b2a_compose(const B2AAut& f, const B2AAut& g);
bool b2a_auts_equal(const B2AAut& f, const B2AAut& g);

// {zeta_star, delta_star, pi, s_star, tau_star}, each verified against
// b2a_eq (the relator maps to the identity).
std::map<std::string, B2AAut> b2a_automorphisms();

struct AutRelatorCheck {
  std::string relator;  // e.g. "t* p t* p = d*"
  bool holds = false;
};
struct AutB2AReport {
  std::vector<AutRelatorCheck> relators;
  bool all_verified = false;
  // (pi s*)^k != id for k = 1..10 (the infinite dihedral evidence)
  bool dihedral_powers_nontrivial = false;
};
AutB2AReport verify_aut_b2a_presentation();

// Lemma-5.3-style witness: the swap s1 <-> z1 preserves the relator of the
// {s1, z1} presentation but moves the induced permutation of z1.
struct SwapCheckReport {
  bool relator_preserved = false;
  bool swap_is_involution = false;
  std::vector<int> rho_of_image_z1;  // rho(phi(z1)), must be the transposition
  bool kernel_not_preserved = false;
};
SwapCheckReport swap_automorphism_check();

}  // namespace braidforge

#endif
