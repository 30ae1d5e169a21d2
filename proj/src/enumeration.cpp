#include "braidforge/enumeration.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "braidforge/errors.hpp"

namespace braidforge {

namespace {

constexpr std::size_t kUndef = 0;

inline int inv_letter(int x) { return x ^ 1; }

// Working state of one enumeration. Cosets are 1-based ints into `table`;
// merged cosets are resolved through the union-find array `rep`.
struct Enumerator {
  int nletters;
  std::size_t max_cosets;
  std::vector<std::vector<std::size_t>> table;  // [0] unused
  std::vector<std::size_t> rep;
  std::deque<std::pair<std::size_t, std::size_t>> queue;

  explicit Enumerator(int ngens, std::size_t max)
      : nletters(2 * ngens), max_cosets(max) {
    table.emplace_back();  // slot 0
    rep.push_back(0);
    new_coset();  // coset 1
  }

  std::size_t find(std::size_t c) {
    while (rep[c] != c) {
      rep[c] = rep[rep[c]];
      c = rep[c];
    }
    return c;
  }

  bool alive(std::size_t c) { return find(c) == c; }

  std::size_t tau(std::size_t c, int x) {
    std::size_t t = table[c][x];
    return t == kUndef ? kUndef : find(t);
  }

  void set_edge(std::size_t a, int x, std::size_t b) {
    table[a][x] = b;
    table[b][inv_letter(x)] = a;
  }

  // Returns 0 when the coset limit is hit.
  std::size_t new_coset() {
    if (table.size() > max_cosets) return 0;
    table.emplace_back(nletters, kUndef);
    rep.push_back(table.size() - 1);
    return table.size() - 1;
  }

  void merge_roots(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    rep[b] = a;
    queue.emplace_back(b, a);
  }

  // Standard coincidence processing: transfer the dead coset's row into its
  // representative, queueing any secondary coincidences discovered.
  void process_coincidences() {
    while (!queue.empty()) {
      std::size_t dead = queue.front().first;
      queue.pop_front();
      for (int x = 0; x < nletters; ++x) {
        std::size_t target = table[dead][x];
        if (target == kUndef) continue;
        table[dead][x] = kUndef;
        if (table[target][inv_letter(x)] == dead) table[target][inv_letter(x)] = kUndef;
        std::size_t mu = find(dead);
        std::size_t nu = find(target);
        if (table[mu][x] != kUndef) {
          merge_roots(table[mu][x], nu);
        } else if (table[nu][inv_letter(x)] != kUndef) {
          merge_roots(table[nu][inv_letter(x)], mu);
        } else {
          set_edge(mu, x, nu);
        }
      }
    }
  }

  // HLT scan of one relator/subgroup word from coset alpha, defining new
  // cosets at the first undefined slot when the scan stalls. Returns false
  // when the coset limit is hit.
  bool scan_and_fill(std::size_t alpha, const std::vector<int>& word) {
    if (word.empty()) return true;
    std::size_t f = alpha, b = alpha;
    std::size_t i = 0, j = word.size();  // forward next, backward consumed up to j
    for (;;) {
      while (i < j && tau(f, word[i]) != kUndef) f = tau(f, word[i++]);
      if (i == j) {
        if (f != b) {
          merge_roots(f, b);
          process_coincidences();
        }
        return true;
      }
      while (j > i && tau(b, inv_letter(word[j - 1])) != kUndef)
        b = tau(b, inv_letter(word[--j]));
      if (j == i) {
        merge_roots(f, b);
        process_coincidences();
        return true;
      }
      if (j == i + 1) {
        set_edge(f, word[i], b);
        return true;
      }
      std::size_t c = new_coset();
      if (c == kUndef) return false;
      set_edge(f, word[i], c);
      f = c;
      ++i;
    }
  }
};

// Flattens a word to signed letter indices against the generator list.
std::vector<int> letters_against(const Alphabet& gens, const Word& w) {
  std::vector<int> out;
  for (const auto& l : flatten(w)) {
    auto it = std::find(gens.begin(), gens.end(), l.gen);
    if (it == gens.end()) throw MalformedWord("word uses '" + l.gen.name +
                                              "' outside the presentation alphabet");
    int k = static_cast<int>(it - gens.begin());
    out.push_back(2 * k + (l.sign > 0 ? 0 : 1));
  }
  return out;
}

}  // namespace

int CosetTable::letter_of(const GenSym& gen, int sign) const {
  auto it = std::find(presentation_.generators.begin(), presentation_.generators.end(), gen);
  if (it == presentation_.generators.end()) throw UnknownGenerator(gen.name);
  int k = static_cast<int>(it - presentation_.generators.begin());
  return 2 * k + (sign > 0 ? 0 : 1);
}

std::size_t CosetTable::act(std::size_t coset, const GenSym& gen, int sign) const {
  if (coset == 0 || coset >= table_.size())
    throw IndexOutOfRange("coset id out of range");
  return table_[coset][letter_of(gen, sign)];
}

std::size_t CosetTable::act_word(std::size_t coset, const Word& w) const {
  std::size_t c = coset;
  for (const auto& l : flatten(w)) c = act(c, l.gen, l.sign);
  return c;
}

bool CosetTable::relators_close() const {
  if (status_ != Status::Complete) return false;
  for (std::size_t c = 1; c <= index(); ++c)
    for (const auto& r : presentation_.relators)
      if (act_word(c, r) != c) return false;
  return true;
}

namespace {

// BFS Schreier transversal in generator order (g then g^-1 per generator).
void build_transversal(const std::vector<std::vector<std::size_t>>& table,
                       const Alphabet& gens, std::vector<Word>& transversal) {
  std::size_t n = table.size() - 1;
  transversal.assign(n + 1, Word{});
  std::vector<bool> seen(n + 1, false);
  std::deque<std::size_t> bfs{1};
  seen[1] = true;
  while (!bfs.empty()) {
    std::size_t c = bfs.front();
    bfs.pop_front();
    for (std::size_t k = 0; k < gens.size(); ++k)
      for (int sign : {+1, -1}) {
        std::size_t d = table[c][2 * k + (sign > 0 ? 0 : 1)];
        if (d == kUndef || seen[d]) continue;
        seen[d] = true;
        transversal[d] = concat(transversal[c], word_from_gen(gens[k], sign));
        bfs.push_back(d);
      }
  }
}

}  // namespace

CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup,
                        std::size_t max_cosets) {
  if (max_cosets < 1) throw IndexOutOfRange("todd_coxeter: max_cosets >= 1");
  const int ngens = static_cast<int>(p.generators.size());

  std::vector<std::vector<int>> relators;
  for (const auto& r : p.relators) relators.push_back(letters_against(p.generators, r));
  std::vector<std::vector<int>> subgroup_words;
  for (const auto& w : subgroup) subgroup_words.push_back(letters_against(p.generators, w));

  CosetTable result;
  result.presentation_ = p;
  result.subgroup_ = subgroup;

  Enumerator e(ngens, max_cosets);
  bool ok = true;
  for (const auto& w : subgroup_words)
    if (!(ok = e.scan_and_fill(1, w))) break;

  for (std::size_t alpha = 1; ok && alpha < e.table.size(); ++alpha) {
    if (!e.alive(alpha)) continue;
    for (const auto& r : relators) {
      if (!(ok = e.scan_and_fill(alpha, r))) break;
      if (!e.alive(alpha)) break;
    }
    if (!ok || !e.alive(alpha)) continue;
    for (int x = 0; x < e.nletters && ok; ++x) {
      if (e.tau(alpha, x) != kUndef) continue;
      std::size_t c = e.new_coset();
      if (c == kUndef) {
        ok = false;
        break;
      }
      e.set_edge(alpha, x, c);
    }
  }

  if (!ok) {
    result.status_ = CosetTable::Status::Aborted;
    result.abort_limit_ = max_cosets;
    return result;
  }

  // Compact live cosets, renumbering in increasing id order.
  std::vector<std::size_t> newid(e.table.size(), 0);
  std::size_t next = 0;
  for (std::size_t c = 1; c < e.table.size(); ++c)
    if (e.alive(c)) newid[c] = ++next;
  result.table_.assign(next + 1, std::vector<std::size_t>(e.nletters, kUndef));
  for (std::size_t c = 1; c < e.table.size(); ++c) {
    if (!e.alive(c)) continue;
    for (int x = 0; x < e.nletters; ++x) {
      std::size_t t = e.tau(c, x);
      if (t == kUndef) throw std::logic_error("todd_coxeter: incomplete closed table");
      result.table_[newid[c]][x] = newid[t];
    }
  }
  result.status_ = CosetTable::Status::Complete;
  build_transversal(result.table_, p.generators, result.transversal_);
  return result;
}

CosetTable pure_subgroup_table(const SurfaceParams& params, std::size_t max_cosets) {
  Presentation pres = braid_presentation(params);
  const int n = params.n;

  // rho in one-line notation, composed left to right.
  using Perm = std::vector<int>;
  Perm id(n);
  std::iota(id.begin(), id.end(), 0);
  auto rho_of_gen = [&](const GenSym& g) {
    Perm perm = id;
    if (g.name[0] == 's') {
      int i = std::stoi(g.name.substr(1));
      std::swap(perm[i - 1], perm[i]);
    }
    return perm;
  };
  auto compose = [&](const Perm& a, const Perm& b) {  // apply a, then b
    Perm out(n);
    for (int i = 0; i < n; ++i) out[i] = b[a[i]];
    return out;
  };

  CosetTable result;
  result.presentation_ = pres;

  std::map<Perm, std::size_t> ids;
  std::vector<Perm> perms{Perm{}};  // slot 0 unused
  std::deque<std::size_t> bfs;
  ids[id] = 1;
  perms.push_back(id);
  bfs.push_back(1);

  std::vector<std::vector<std::size_t>> rows{{}};
  rows.emplace_back(2 * pres.generators.size(), kUndef);
  while (!bfs.empty()) {
    std::size_t c = bfs.front();
    bfs.pop_front();
    for (std::size_t k = 0; k < pres.generators.size(); ++k) {
      Perm action = rho_of_gen(pres.generators[k]);
      for (int sign : {+1, -1}) {
        Perm target = sign > 0 ? compose(perms[c], action) : [&] {
          Perm inv(n);
          for (int i = 0; i < n; ++i) inv[action[i]] = i;
          return compose(perms[c], inv);
        }();
        auto it = ids.find(target);
        std::size_t d;
        if (it == ids.end()) {
          if (perms.size() > max_cosets) {
            result.status_ = CosetTable::Status::Aborted;
            result.abort_limit_ = max_cosets;
            return result;
          }
          d = perms.size();
          ids[target] = d;
          perms.push_back(target);
          rows.emplace_back(2 * pres.generators.size(), kUndef);
          bfs.push_back(d);
        } else {
          d = it->second;
        }
        rows[c][2 * k + (sign > 0 ? 0 : 1)] = d;
      }
    }
  }

  result.table_ = std::move(rows);
  result.status_ = CosetTable::Status::Complete;
  build_transversal(result.table_, pres.generators, result.transversal_);
  return result;
}

Presentation RewrittenPresentation::as_presentation(const std::string& name) const {
  Presentation p;
  p.name = name;
  for (const auto& [alias, def] : schreier_generators) {
    (void)def;
    p.generators.push_back(alias);
  }
  for (const auto& r : relators)
    if (!r.is_identity()) p.relators.push_back(r);
  return p;
}

Word RewrittenPresentation::substitute_definitions(const Word& w) const {
  Word out;
  for (const auto& s : w.syllables) {
    auto it = std::find_if(schreier_generators.begin(), schreier_generators.end(),
                           [&](const auto& pr) { return pr.first == s.gen; });
    if (it == schreier_generators.end()) throw UnknownGenerator(s.gen.name);
    out = concat(out, pow(it->second, s.exp));
  }
  return out;
}

namespace {

// Shared scanning core for Reidemeister rewriting: emits the alias (with
// sign) for every non-tree edge crossed while tracing `w` from `start`.
Word rewrite_from(const CosetTable& table,
                  const std::map<std::pair<std::size_t, std::string>, GenSym>& alias_of,
                  std::size_t start, const Word& w) {
  Word out;
  std::size_t c = start;
  for (const auto& l : flatten(w)) {
    if (l.sign > 0) {
      auto it = alias_of.find({c, l.gen.name});
      if (it != alias_of.end()) out = concat(out, word_from_gen(it->second));
      c = table.act(c, l.gen, +1);
    } else {
      std::size_t prev = table.act(c, l.gen, -1);
      auto it = alias_of.find({prev, l.gen.name});
      if (it != alias_of.end()) out = concat(out, word_from_gen(it->second, -1));
      c = prev;
    }
  }
  return out;
}

}  // namespace

RewrittenPresentation reidemeister_schreier(const CosetTable& table) {
  if (table.status() != CosetTable::Status::Complete) throw IncompleteTable();
  const Presentation& amb = table.presentation();

  RewrittenPresentation rp;
  std::map<std::pair<std::size_t, std::string>, GenSym> alias_of;
  int counter = 0;
  for (std::size_t c = 1; c <= table.index(); ++c) {
    for (const auto& g : amb.generators) {
      std::size_t d = table.act(c, g, +1);
      Word def = concat(concat(table.transversal(c), word_from_gen(g)),
                        invert(table.transversal(d)));
      if (def.is_identity()) continue;  // tree edge
      GenSym alias{"y" + std::to_string(++counter)};
      alias_of[{c, g.name}] = alias;
      rp.schreier_generators.emplace_back(alias, def);
      rp.alias_keys.emplace_back(c, g);
    }
  }

  for (std::size_t c = 1; c <= table.index(); ++c)
    for (const auto& r : amb.relators) {
      Word rewritten = rewrite_from(table, alias_of, c, r);
      if (!rewritten.is_identity()) rp.relators.push_back(rewritten);
    }
  return rp;
}

Word rewrite_word(const RewrittenPresentation& rp, const CosetTable& table,
                  const Word& w) {
  if (table.status() != CosetTable::Status::Complete) throw IncompleteTable();
  if (table.act_word(1, w) != 1)
    throw NotInSubgroup("word moves coset 1 (not in the subgroup)");

  std::map<std::pair<std::size_t, std::string>, GenSym> alias_of;
  for (std::size_t k = 0; k < rp.alias_keys.size(); ++k)
    alias_of[{rp.alias_keys[k].first, rp.alias_keys[k].second.name}] =
        rp.schreier_generators[k].first;
  return rewrite_from(table, alias_of, 1, w);
}

}  // namespace braidforge
