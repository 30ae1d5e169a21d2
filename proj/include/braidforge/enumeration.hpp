#ifndef BRAIDFORGE_ENUMERATION_HPP
#define BRAIDFORGE_ENUMERATION_HPP

#include <cstddef>
#include <vector>

#include "braidforge/presentations.hpp"
#include "braidforge/words.hpp"

namespace braidforge {

inline constexpr std::size_t kDefaultMaxCosets = 1'000'000;

// The Todd-Coxeter state. Cosets are 1-based; the action table is indexed by
// coset and signed generator. Aborted(limit) is a first-class result, not an
// error.
class CosetTable {
 public:
  enum class Status { Complete, Aborted };

  Status status() const { return status_; }
  std::size_t index() const { return table_.size() - 1; }  // valid when Complete
  std::size_t abort_limit() const { return abort_limit_; }

  const Presentation& presentation() const { return presentation_; }
  const std::vector<Word>& subgroup_generators() const { return subgroup_; }

  // Action of a signed generator; gen must belong to the presentation.
  std::size_t act(std::size_t coset, const GenSym& gen, int sign) const;
  // Action of a whole word starting at `coset`.
  std::size_t act_word(std::size_t coset, const Word& w) const;

  // Schreier representative of a coset (BFS-shortest, deterministic).
  const Word& transversal(std::size_t coset) const { return transversal_[coset]; }

  // True iff scanning every relator from every coset closes.
  bool relators_close() const;

 private:
  friend CosetTable todd_coxeter(const Presentation&, const std::vector<Word>&,
                                 std::size_t);
  friend CosetTable pure_subgroup_table(const SurfaceParams&, std::size_t);

  Status status_ = Status::Aborted;
  std::size_t abort_limit_ = 0;
  Presentation presentation_;
  std::vector<Word> subgroup_;
  // table_[c][2k] = c . g_k, table_[c][2k+1] = c . g_k^-1; row 0 unused.
  std::vector<std::vector<std::size_t>> table_;
  std::vector<Word> transversal_;  // [0] unused, [1] = identity

  int letter_of(const GenSym& gen, int sign) const;
};

// HLT-style enumeration of the cosets of <subgroup> (with relators) in P.
// Deterministic: relators are scanned in presentation order, new cosets fill
// the lowest undefined slot first.
CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup,
                        std::size_t max_cosets = kDefaultMaxCosets);

// The coset table of the pure braid group P_n inside B_n, built directly
// from the induced permutation (s_i -> (i,i+1), everything else -> identity)
// rather than by search. Index n!.
CosetTable pure_subgroup_table(const SurfaceParams& params,
                               std::size_t max_cosets = kDefaultMaxCosets);

// Subgroup presentation data produced by Reidemeister-Schreier rewriting.
struct RewrittenPresentation {
  // alias y<k> together with its defining word over the ambient generators
  std::vector<std::pair<GenSym, Word>> schreier_generators;
  std::vector<Word> relators;  // over the aliases
  // (coset, ambient generator) key of each alias, parallel to
  // schreier_generators; used by rewrite_word.
  std::vector<std::pair<std::size_t, GenSym>> alias_keys;

  Presentation as_presentation(const std::string& name) const;
  // Replaces each alias in `w` by its defining word and reduces.
  Word substitute_definitions(const Word& w) const;
};

// Requires a Complete table. Schreier generators t.g.rep(t.g)^-1 for every
// transversal element and generator, minus the freely-trivial ones; relators
// are the coset-rewritten conjugates of the ambient relators.
RewrittenPresentation reidemeister_schreier(const CosetTable& table);

// Rewrites a word of the subgroup (coset action must fix coset 1) over the
// aliases. Throws NotInSubgroup otherwise.
Word rewrite_word(const RewrittenPresentation& rp, const CosetTable& table,
                  const Word& w);

}  // namespace braidforge

#endif
