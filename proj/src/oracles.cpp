#include "braidforge/oracles.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "braidforge/braidlab.hpp"
#include "braidforge/errors.hpp"

namespace braidforge {

namespace {

Verdict equal_verdict(const std::string& oracle) { return {Eq::Equal, oracle, ""}; }
Verdict unequal_verdict(const std::string& oracle, const std::string& witness) {
  return {Eq::NotEqual, oracle, witness};
}

int parse_index(const std::string& name, std::size_t from = 1) {
  return std::stoi(name.substr(from));
}

bool all_symbols_in(const Word& w, const Alphabet& alphabet) {
  return std::all_of(w.syllables.begin(), w.syllables.end(), [&](const Syllable& s) {
    return alphabet_contains(alphabet, s.gen.name);
  });
}

void require_symbols(const Word& w, const Alphabet& alphabet) {
  for (const auto& s : w.syllables)
    if (!alphabet_contains(alphabet, s.gen.name)) throw UnknownGenerator(s.gen.name);
}

Alphabet artin_alphabet(int n) {
  Alphabet a;
  for (int i = 1; i <= n - 1; ++i) a.push_back(GenSym{"s" + std::to_string(i)});
  a.push_back(GenSym{"z1"});
  return a;
}

Alphabet surface_alphabet(int g, int p) {
  Alphabet a;
  for (int r = 1; r <= g; ++r) a.push_back(GenSym{"a" + std::to_string(r)});
  for (int r = 1; r <= g; ++r) a.push_back(GenSym{"b" + std::to_string(r)});
  for (int t = 1; t <= p; ++t) a.push_back(GenSym{"z" + std::to_string(t)});
  return a;
}

bool braid_name_ok(const std::string& name, int n) {
  if (name.size() < 2) return false;
  char c = name[0];
  if (c != 's' && c != 'a' && c != 'b' && c != 'z') return false;
  for (std::size_t k = 1; k < name.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(name[k]))) return false;
  if (c == 's') {
    int i = parse_index(name);
    return 1 <= i && i <= n - 1;
  }
  return true;
}

}  // namespace

Tier OracleContext::tier() const {
  switch (kind) {
    case OracleKind::Permutation:
    case OracleKind::Homology:
    case OracleKind::GoldbergProduct:
      return Tier::Necessary;
    default:
      return Tier::Exact;
  }
}

std::string OracleContext::label() const {
  std::ostringstream os;
  switch (kind) {
    case OracleKind::FreeGroup: return "free";
    case OracleKind::ClassicalBraid: os << "artin(n=" << n << ")"; return os.str();
    case OracleKind::ClosedSurface: os << "dehn(g=" << g << ")"; return os.str();
    case OracleKind::TorusZ2: return "torus";
    case OracleKind::TrivialGroup: return "trivial";
    case OracleKind::B2A: return "b2a";
    case OracleKind::Permutation: os << "perm(n=" << n << ")"; return os.str();
    case OracleKind::Homology: return "homology";
    case OracleKind::GoldbergProduct:
      os << "goldberg(g=" << params.g << ",p=" << params.p << ",n=" << params.n << ")";
      return os.str();
  }
  return "?";
}

bool OracleContext::accepts(const Word& u, const Word& v) const {
  auto both = [&](const Alphabet& a) {
    return all_symbols_in(u, a) && all_symbols_in(v, a);
  };
  switch (kind) {
    case OracleKind::FreeGroup: return both(alphabet);
    case OracleKind::ClassicalBraid: return both(artin_alphabet(n));
    case OracleKind::ClosedSurface: return both(surface_alphabet(g, 0));
    case OracleKind::TorusZ2: return both(surface_alphabet(1, 0));
    case OracleKind::TrivialGroup: return true;
    case OracleKind::B2A: return both(Alphabet{GenSym{"d"}, GenSym{"z"}});
    case OracleKind::Permutation: {
      auto ok = [&](const Word& w) {
        return std::all_of(w.syllables.begin(), w.syllables.end(),
                           [&](const Syllable& s) { return braid_name_ok(s.gen.name, n); });
      };
      return ok(u) && ok(v);
    }
    case OracleKind::Homology: return both(homology->generators);
    case OracleKind::GoldbergProduct: return both(x_alphabet_all(params));
  }
  return false;
}

OracleContext free_context(Alphabet alphabet) {
  OracleContext c;
  c.kind = OracleKind::FreeGroup;
  c.alphabet = std::move(alphabet);
  return c;
}
OracleContext artin_context(int n) {
  OracleContext c;
  c.kind = OracleKind::ClassicalBraid;
  c.n = n;
  return c;
}
OracleContext dehn_context(int g) {
  OracleContext c;
  c.kind = OracleKind::ClosedSurface;
  c.g = g;
  return c;
}
OracleContext torus_context() {
  OracleContext c;
  c.kind = OracleKind::TorusZ2;
  return c;
}
OracleContext trivial_context() {
  OracleContext c;
  c.kind = OracleKind::TrivialGroup;
  return c;
}
OracleContext b2a_context() {
  OracleContext c;
  c.kind = OracleKind::B2A;
  return c;
}
OracleContext permutation_context(int n) {
  OracleContext c;
  c.kind = OracleKind::Permutation;
  c.n = n;
  return c;
}
OracleContext homology_context(const Presentation& p) {
  OracleContext c;
  c.kind = OracleKind::Homology;
  c.homology = std::make_shared<Abelianization>(abelianize(p));
  return c;
}
OracleContext goldberg_context(const SurfaceParams& params) {
  OracleContext c;
  c.kind = OracleKind::GoldbergProduct;
  c.params = params;
  return c;
}

// --- free --------------------------------------------------------------------

Verdict free_eq(const Alphabet& alphabet, const Word& u, const Word& v) {
  require_symbols(u, alphabet);
  require_symbols(v, alphabet);
  Word diff = concat(u, invert(v));
  if (diff.is_identity()) return equal_verdict("free");
  return unequal_verdict("free", "u v^-1 reduces to " + format_word(diff));
}

// --- Artin action --------------------------------------------------------------

namespace {

// Substitute the basis images into a word over x1..xn.
Word substitute_basis(const Word& w, const std::vector<Word>& images) {
  Word out;
  for (const auto& s : w.syllables) {
    int idx = parse_index(s.gen.name) - 1;
    out = concat(out, pow(images[idx], s.exp));
  }
  return out;
}

std::vector<Word> basis_words(int n) {
  std::vector<Word> xs;
  for (int j = 1; j <= n; ++j) xs.push_back(word_from_gen(GenSym{"x" + std::to_string(j)}));
  return xs;
}

// Action of a single signed sigma letter on the current images.
void apply_sigma(std::vector<Word>& images, int i, int sign, const std::vector<Word>& xs) {
  int a = i - 1, b = i;  // 0-based strands i, i+1
  std::vector<Word> basic = xs;
  if (sign > 0) {
    basic[a] = concat(concat(xs[a], xs[b]), invert(xs[a]));
    basic[b] = xs[a];
  } else {
    basic[a] = xs[b];
    basic[b] = concat(concat(invert(xs[b]), xs[a]), xs[b]);
  }
  for (auto& img : images) img = substitute_basis(img, basic);
}

Word eliminate_z1(int n, const Word& w) {
  // (TR) for (g,p) = (0,1): (s1..s_{n-1} s_{n-1}..s1) z1 = e
  Word head;
  for (int i = 1; i <= n - 1; ++i) head = concat(head, word_from_gen(GenSym{"s" + std::to_string(i)}));
  for (int i = n - 1; i >= 1; --i) head = concat(head, word_from_gen(GenSym{"s" + std::to_string(i)}));
  Word z1_def = invert(head);
  Word out;
  for (const auto& s : w.syllables) {
    if (s.gen.name == "z1")
      out = concat(out, pow(z1_def, s.exp));
    else
      out = concat(out, word_from_gen(s.gen, s.exp));
  }
  return out;
}

}  // namespace

std::vector<Word> artin_images(int n, const Word& w) {
  require_symbols(w, artin_alphabet(n));
  Word sigma_word = eliminate_z1(n, w);
  std::vector<Word> xs = basis_words(n);
  std::vector<Word> images = xs;
  for (const auto& l : flatten(sigma_word))
    apply_sigma(images, parse_index(l.gen.name), l.sign, xs);
  return images;
}

Verdict artin_eq(int n, const Word& u, const Word& v) {
  std::vector<Word> iu = artin_images(n, u), iv = artin_images(n, v);
  for (int j = 0; j < n; ++j)
    if (iu[j] != iv[j]) {
      std::ostringstream os;
      os << "x" << (j + 1) << " maps to " << format_word(iu[j]) << " vs "
         << format_word(iv[j]);
      return unequal_verdict("artin", os.str());
    }
  return equal_verdict("artin");
}

// --- Dehn's algorithm -----------------------------------------------------------

namespace {

using LetterVec = std::vector<std::pair<int, int>>;  // (signed gen id, sign)

LetterVec to_letters(const Word& w, const Alphabet& alphabet) {
  LetterVec out;
  for (const auto& l : flatten(w)) {
    auto it = std::find(alphabet.begin(), alphabet.end(), l.gen);
    out.emplace_back(static_cast<int>(it - alphabet.begin()), l.sign);
  }
  return out;
}

void free_reduce_letters(LetterVec& w) {
  LetterVec out;
  for (const auto& l : w) {
    if (!out.empty() && out.back().first == l.first && out.back().second == -l.second)
      out.pop_back();
    else
      out.push_back(l);
  }
  w = std::move(out);
}

LetterVec invert_letters(const LetterVec& w) {
  LetterVec out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.emplace_back(it->first, -it->second);
  return out;
}

}  // namespace

Verdict dehn_eq(int g, const Word& u, const Word& v) {
  if (g < 2) throw IndexOutOfRange("dehn_eq: needs genus >= 2");
  Alphabet alphabet = surface_alphabet(g, 0);
  require_symbols(u, alphabet);
  require_symbols(v, alphabet);

  // Relator prod_r [b_r^-1, a_r] = prod_r b_r a_r^-1 b_r^-1 a_r, length 4g.
  LetterVec relator;
  for (int r = 1; r <= g; ++r) {
    int ai = r - 1, bi = g + r - 1;
    relator.emplace_back(bi, +1);
    relator.emplace_back(ai, -1);
    relator.emplace_back(bi, -1);
    relator.emplace_back(ai, +1);
  }
  const std::size_t rlen = relator.size();

  std::vector<LetterVec> rotations;
  for (const LetterVec& base : {relator, invert_letters(relator)})
    for (std::size_t k = 0; k < rlen; ++k) {
      LetterVec rot(base.begin() + k, base.end());
      rot.insert(rot.end(), base.begin(), base.begin() + k);
      rotations.push_back(rot);
    }

  LetterVec w = to_letters(concat(u, invert(v)), alphabet);
  free_reduce_letters(w);

  const std::size_t half = rlen / 2;  // replace matches of length > half
  for (;;) {
    if (w.empty()) return equal_verdict("dehn");
    std::size_t best_len = 0, best_pos = 0, best_rot = 0;
    for (std::size_t pos = 0; pos < w.size(); ++pos)
      for (std::size_t rot = 0; rot < rotations.size(); ++rot) {
        std::size_t len = 0;
        while (pos + len < w.size() && len < rlen && w[pos + len] == rotations[rot][len])
          ++len;
        if (len > best_len) {
          best_len = len;
          best_pos = pos;
          best_rot = rot;
        }
      }
    if (best_len <= half) break;
    // Replace the matched prefix s of the rotation r = s t by t^-1.
    const LetterVec& rot = rotations[best_rot];
    LetterVec tail(rot.begin() + best_len, rot.end());
    LetterVec replacement = invert_letters(tail);
    LetterVec next(w.begin(), w.begin() + best_pos);
    next.insert(next.end(), replacement.begin(), replacement.end());
    next.insert(next.end(), w.begin() + best_pos + best_len, w.end());
    free_reduce_letters(next);
    w = std::move(next);
  }

  std::ostringstream os;
  os << "Dehn-reduced difference has length " << w.size();
  return unequal_verdict("dehn", os.str());
}

// --- B_2(A) normal form -----------------------------------------------------------

B2ANormalForm b2a_normal_form(const Word& w) {
  Alphabet alphabet{GenSym{"d"}, GenSym{"z"}};
  require_symbols(w, alphabet);

  long long d_sum = 0;
  // Reduce in <z> * <d | d^2>: z-runs merge, d is an involution.
  std::vector<Syllable> stack;
  for (const auto& s : w.syllables) {
    if (s.gen.name == "z") {
      if (!stack.empty() && stack.back().gen.name == "z") {
        stack.back().exp += s.exp;
        if (stack.back().exp == 0) stack.pop_back();
      } else {
        stack.push_back(s);
      }
    } else {
      d_sum += s.exp;
      long long parity = ((s.exp % 2) + 2) % 2;
      if (parity == 1) {
        // Stack entries alternate between z-runs and single d letters, so a
        // cancellation here never exposes two mergeable z-runs.
        if (!stack.empty() && stack.back().gen.name == "d")
          stack.pop_back();
        else
          stack.push_back(Syllable{GenSym{"d"}, 1});
      }
    }
  }
  B2ANormalForm nf;
  nf.reduced.syllables = stack;

  long long d_count = 0;
  for (const auto& s : nf.reduced.syllables)
    if (s.gen.name == "d") ++d_count;
  nf.central_power = (d_sum - d_count) / 2;
  return nf;
}

Verdict b2a_eq(const Word& u, const Word& v) {
  B2ANormalForm nu = b2a_normal_form(u), nv = b2a_normal_form(v);
  if (nu == nv) return equal_verdict("b2a");
  std::ostringstream os;
  os << "normal forms d^(2*" << nu.central_power << ")*" << format_word(nu.reduced)
     << " vs d^(2*" << nv.central_power << ")*" << format_word(nv.reduced);
  return unequal_verdict("b2a", os.str());
}

// --- torus Z^2 ---------------------------------------------------------------------

Verdict torus_eq(const Word& u, const Word& v) {
  Alphabet alphabet = surface_alphabet(1, 0);
  require_symbols(u, alphabet);
  require_symbols(v, alphabet);
  auto sums = [](const Word& w) {
    long long a = 0, b = 0;
    for (const auto& s : w.syllables)
      (s.gen.name == "a1" ? a : b) += s.exp;
    return std::pair{a, b};
  };
  auto su = sums(u), sv = sums(v);
  if (su == sv) return equal_verdict("torus");
  std::ostringstream os;
  os << "(" << su.first << "," << su.second << ") vs (" << sv.first << "," << sv.second
     << ")";
  return unequal_verdict("torus", os.str());
}

// --- induced permutation --------------------------------------------------------------

std::vector<int> rho(int n, const Word& w) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (const auto& l : flatten(w)) {
    if (!braid_name_ok(l.gen.name, n)) throw UnknownGenerator(l.gen.name);
    if (l.gen.name[0] != 's') continue;
    int i = parse_index(l.gen.name) - 1;
    // compose left to right with the transposition (i, i+1); transpositions
    // are involutive so the letter sign does not matter
    for (int k = 0; k < n; ++k) {
      if (perm[k] == i)
        perm[k] = i + 1;
      else if (perm[k] == i + 1)
        perm[k] = i;
    }
  }
  return perm;
}

std::string perm_cycles(const std::vector<int>& perm) {
  std::ostringstream os;
  std::vector<bool> seen(perm.size(), false);
  bool any = false;
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start] || perm[start] == static_cast<int>(start)) continue;
    any = true;
    os << '(';
    std::size_t c = start;
    bool first = true;
    while (!seen[c]) {
      seen[c] = true;
      if (!first) os << ',';
      os << (c + 1);
      first = false;
      c = static_cast<std::size_t>(perm[c]);
    }
    os << ')';
  }
  if (!any) return "()";
  return os.str();
}

Verdict permutation_eq(int n, const Word& u, const Word& v) {
  std::vector<int> pu = rho(n, u), pv = rho(n, v);
  if (pu == pv) return {Eq::ConsistentButUnverified, "perm", ""};
  return unequal_verdict("perm", "rho images " + perm_cycles(pu) + " vs " + perm_cycles(pv));
}

// --- homology ---------------------------------------------------------------------------

Verdict homology_eq(const Abelianization& ab, const Word& u, const Word& v) {
  std::vector<mpz_class> cu = ab.class_of(u), cv = ab.class_of(v);
  if (ab.classes_equal(cu, cv)) return {Eq::ConsistentButUnverified, "homology", ""};
  std::ostringstream os;
  os << "classes differ: [";
  for (std::size_t k = 0; k < cu.size(); ++k) os << (k ? "," : "") << cu[k];
  os << "] vs [";
  for (std::size_t k = 0; k < cv.size(); ++k) os << (k ? "," : "") << cv[k];
  os << "]";
  return unequal_verdict("homology", os.str());
}

// --- pi_1 of the surface and the Goldberg projection ----------------------------------------

Verdict pi1_eq(int g, int p, const Word& u, const Word& v) {
  if (p >= 1) {
    // Free after eliminating z_p via the surface relator
    // prod_r [b_r^-1, a_r] z_1..z_p = e.
    Word zp_def;
    for (int r = 1; r <= g; ++r) {
      GenSym a{"a" + std::to_string(r)}, b{"b" + std::to_string(r)};
      zp_def = concat(zp_def, commutator(invert(word_from_gen(b)), word_from_gen(a)));
    }
    for (int t = 1; t <= p - 1; ++t)
      zp_def = concat(zp_def, word_from_gen(GenSym{"z" + std::to_string(t)}));
    zp_def = invert(zp_def);
    auto substitute = [&](const Word& w) {
      Word out;
      std::string zp = "z" + std::to_string(p);
      for (const auto& s : w.syllables)
        out = concat(out, s.gen.name == zp ? pow(zp_def, s.exp)
                                           : word_from_gen(s.gen, s.exp));
      return out;
    };
    Alphabet rest = surface_alphabet(g, p - 1);
    return free_eq(rest, substitute(u), substitute(v));
  }
  if (g == 0) return equal_verdict("trivial");  // pi_1(S^2); unused for Goldberg
  if (g == 1) return torus_eq(u, v);
  return dehn_eq(g, u, v);
}

Verdict goldberg_eq(const SurfaceParams& params, const Word& u, const Word& v) {
  if (params.g == 0 && params.p == 0) throw SphereNotSupported();
  std::vector<Word> fu = goldberg_project(params, u), fv = goldberg_project(params, v);
  for (int i = 0; i < params.n; ++i) {
    Verdict factor = pi1_eq(params.g, params.p, fu[i], fv[i]);
    if (factor.value == Eq::NotEqual) {
      std::ostringstream os;
      os << "factor " << (i + 1) << ": " << factor.witness;
      return unequal_verdict("goldberg", os.str());
    }
  }
  return {Eq::ConsistentButUnverified, "goldberg", ""};
}

// --- combined ----------------------------------------------------------------------------------

Verdict evaluate(const OracleContext& ctx, const Word& u, const Word& v) {
  switch (ctx.kind) {
    case OracleKind::FreeGroup: return free_eq(ctx.alphabet, u, v);
    case OracleKind::ClassicalBraid: return artin_eq(ctx.n, u, v);
    case OracleKind::ClosedSurface: return dehn_eq(ctx.g, u, v);
    case OracleKind::TorusZ2: return torus_eq(u, v);
    case OracleKind::TrivialGroup: return equal_verdict("trivial");
    case OracleKind::B2A: return b2a_eq(u, v);
    case OracleKind::Permutation: return permutation_eq(ctx.n, u, v);
    case OracleKind::Homology: return homology_eq(*ctx.homology, u, v);
    case OracleKind::GoldbergProduct: return goldberg_eq(ctx.params, u, v);
  }
  throw NoApplicableOracle();
}

CheckReport check_equal(const std::vector<OracleContext>& ctxs, const Word& u,
                        const Word& v) {
  CheckReport report;
  bool any_ran = false, exact_equal = false;
  const Verdict* refutation = nullptr;
  std::vector<Verdict> verdicts;
  verdicts.reserve(ctxs.size());

  for (const auto& ctx : ctxs) {
    if (!ctx.accepts(u, v)) {
      report.lines.push_back(ctx.label() + ": skipped (alphabet not accepted)");
      continue;
    }
    any_ran = true;
    verdicts.push_back(evaluate(ctx, u, v));
    const Verdict& verdict = verdicts.back();
    std::string line = ctx.label() + ": ";
    switch (verdict.value) {
      case Eq::Equal: line += "equal"; break;
      case Eq::NotEqual: line += "not-equal (" + verdict.witness + ")"; break;
      case Eq::ConsistentButUnverified: line += "consistent"; break;
    }
    report.lines.push_back(line);
    if (verdict.value == Eq::NotEqual && refutation == nullptr)
      refutation = &verdicts.back();
    if (verdict.value == Eq::Equal && ctx.tier() == Tier::Exact) exact_equal = true;
  }

  if (!any_ran) throw NoApplicableOracle();
  if (refutation != nullptr)
    report.verdict = *refutation;
  else if (exact_equal)
    report.verdict = {Eq::Equal, "exact", ""};
  else
    report.verdict = {Eq::ConsistentButUnverified, "necessary", ""};
  return report;
}

}  // namespace braidforge
