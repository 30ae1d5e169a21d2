#include "braidforge/cli.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "braidforge/braidlab.hpp"
#include "braidforge/enumeration.hpp"
#include "braidforge/errors.hpp"
#include "braidforge/oracles.hpp"
#include "braidforge/presentations.hpp"
#include "braidforge/words.hpp"

namespace braidforge::cli {

namespace {

struct Report {
  std::ostringstream body;
  std::string status = "ok";
  std::ostringstream summary;
  int exit_code = 0;

  template <typename T>
  Report& line(const T& t) {
    body << t << "\n";
    return *this;
  }

  CommandResult finish() {
    CommandResult r;
    r.status = status;
    r.exit_code = exit_code;
    std::string extra = summary.str();
    r.payload = body.str() + "status=" + status + extra + "\n";
    return r;
  }
};

// Alphabet of every name mentioned in a piece of word text, for commands
// that work in a free context.
Alphabet alphabet_from_text(const std::string& text) {
  Alphabet out;
  std::set<std::string> seen;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isalpha(static_cast<unsigned char>(text[i]))) {
      std::size_t start = i;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
        ++i;
      std::string name = text.substr(start, i - start);
      if (name != "e" && seen.insert(name).second) out.push_back(GenSym{name});
    } else {
      ++i;
    }
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("FileError", "cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw Error("FileError", "cannot write '" + path + "'");
  out << content;
}

std::string torsion_string(const AbelianInvariants& inv) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < inv.torsion.size(); ++i)
    os << (i ? "," : "") << inv.torsion[i];
  os << "]";
  return os.str();
}

std::size_t max_cosets_default() {
  if (const char* env = std::getenv("BRAIDFORGE_MAX_COSETS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v >= 1) return static_cast<std::size_t>(v);
  }
  return kDefaultMaxCosets;
}

std::string eq_name(Eq value) {
  switch (value) {
    case Eq::Equal: return "equal";
    case Eq::NotEqual: return "not-equal";
    case Eq::ConsistentButUnverified: return "consistent";
  }
  return "?";
}

std::vector<OracleContext> battery_for(const std::string& oracle, bool has_g,
                                       bool has_p, bool has_n,
                                       const SurfaceParams& params) {
  std::vector<OracleContext> ctxs;
  auto need = [&](bool ok, const std::string& what) {
    if (!ok) throw Error("UsageError", "--oracle " + oracle + " needs " + what);
  };
  if (oracle == "artin") {
    need(has_n, "--n");
    ctxs.push_back(artin_context(params.n));
  } else if (oracle == "dehn") {
    need(has_g, "--g");
    ctxs.push_back(dehn_context(params.g));
  } else if (oracle == "b2a") {
    ctxs.push_back(b2a_context());
  } else if (oracle == "torus") {
    ctxs.push_back(torus_context());
  } else if (oracle == "perm") {
    need(has_n, "--n");
    ctxs.push_back(permutation_context(params.n));
  } else if (oracle == "homology") {
    need(has_g && has_p && has_n, "--g --p --n");
    ctxs.push_back(homology_context(braid_presentation(params)));
  } else if (oracle == "goldberg") {
    need(has_g && has_p && has_n, "--g --p --n");
    ctxs.push_back(goldberg_context(params));
  } else if (oracle == "all") {
    need(has_g && has_p && has_n, "--g --p --n");
    if (params.g == 0 && params.p == 1) ctxs.push_back(artin_context(params.n));
    if (params.g == 0 && params.p == 2 && params.n == 2) ctxs.push_back(b2a_context());
    if (params.g == 1 && params.p == 0 && params.n == 1) ctxs.push_back(torus_context());
    if (params.g >= 2 && params.p == 0 && params.n == 1)
      ctxs.push_back(dehn_context(params.g));
    ctxs.push_back(permutation_context(params.n));
    ctxs.push_back(homology_context(braid_presentation(params)));
    if (params.g + params.p > 0) ctxs.push_back(goldberg_context(params));
  } else {
    throw Error("UsageError", "unknown oracle '" + oracle + "'");
  }
  return ctxs;
}

// Word parse alphabet wide enough for every context in a battery.
Alphabet battery_alphabet(const std::vector<OracleContext>& ctxs,
                          const std::string& u_text, const std::string& v_text) {
  Alphabet a;
  auto add = [&](const Alphabet& more) {
    for (const auto& g : more)
      if (!alphabet_contains(a, g.name)) a.push_back(g);
  };
  for (const auto& ctx : ctxs) {
    switch (ctx.kind) {
      case OracleKind::FreeGroup: add(ctx.alphabet); break;
      case OracleKind::Homology: add(ctx.homology->generators); break;
      case OracleKind::GoldbergProduct: add(x_alphabet_all(ctx.params)); break;
      case OracleKind::B2A: add({GenSym{"d"}, GenSym{"z"}}); break;
      default:
        add(alphabet_from_text(u_text));
        add(alphabet_from_text(v_text));
        break;
    }
  }
  return a;
}

}  // namespace

CommandResult run(const std::vector<std::string>& args) {
  CLI::App app{"braidforge: a workbench for surface braid group presentations"};
  app.require_subcommand(1);

  // Shared option storage; has_* records which of --g/--p/--n were supplied.
  SurfaceParams params;
  bool has_g = false, has_p = false, has_n = false;
  auto add_gpn = [&](CLI::App* cmd, bool need_g, bool need_p, bool need_n) {
    auto* og = cmd->add_option_function<int>(
        "--g", [&](int v) { params.g = v; has_g = true; }, "genus");
    og->check(CLI::NonNegativeNumber);
    auto* op = cmd->add_option_function<int>(
        "--p", [&](int v) { params.p = v; has_p = true; }, "punctures");
    op->check(CLI::NonNegativeNumber);
    auto* on = cmd->add_option_function<int>(
        "--n", [&](int v) { params.n = v; has_n = true; }, "strands");
    on->check(CLI::PositiveNumber);
    if (need_g) og->required();
    if (need_p) op->required();
    if (need_n) on->required();
  };

  Report rep;

  // --- present -------------------------------------------------------------
  auto* present = app.add_subcommand("present", "emit a presentation");
  std::string present_kind, out_file;
  present->add_option("kind", present_kind, "bn | pn-rs")
      ->required()
      ->check(CLI::IsMember({"bn", "pn-rs"}));
  add_gpn(present, false, false, true);
  present->add_option("--out", out_file, "write to file instead of stdout");
  present->callback([&] {
    Presentation pres;
    if (present_kind == "bn") {
      pres = braid_presentation(params);
    } else {
      CosetTable table = pure_subgroup_table(params, max_cosets_default());
      RewrittenPresentation rp = reidemeister_schreier(table);
      std::ostringstream name;
      name << "P_" << params.n << "(Sigma_{" << params.g << "," << params.p << "})[rs]";
      pres = rp.as_presentation(name.str());
      for (const auto& [alias, def] : rp.schreier_generators)
        rep.line("# " + alias.name + " = " + format_word(def));
    }
    std::string text = save_presentation(pres);
    if (!out_file.empty()) {
      write_file(out_file, text);
      rep.line("wrote " + out_file);
    } else {
      rep.body << text;
    }
    rep.summary << " gens=" << pres.generators.size()
                << " relators=" << pres.relators.size();
  });

  // --- abelianize ----------------------------------------------------------
  auto* abel = app.add_subcommand("abelianize", "abelian invariants of a presentation");
  std::string abel_file;
  std::vector<int> bn_args;
  abel->add_option("file", abel_file, "presentation file");
  abel->add_option("--bn", bn_args, "g p n (use the builtin braid presentation)")
      ->expected(3);
  abel->callback([&] {
    Presentation pres;
    if (!bn_args.empty()) {
      pres = braid_presentation({bn_args[0], bn_args[1], bn_args[2]});
    } else if (!abel_file.empty()) {
      pres = load_presentation(read_file(abel_file));
    } else {
      throw Error("UsageError", "abelianize needs FILE or --bn G P N");
    }
    Abelianization ab = abelianize(pres);
    rep.line("presentation: " + pres.name);
    rep.summary << " free_rank=" << ab.invariants.free_rank
                << " torsion=" << torsion_string(ab.invariants);
  });

  // --- purity ----------------------------------------------------------------
  auto* purity = app.add_subcommand("purity", "torsion projection for n = 2");
  add_gpn(purity, true, true, false);
  purity->callback([&] {
    params.n = 2;
    auto pm = purity_test(params);
    if (!pm) {
      rep.line("torsion-free H_1: the punctured-sphere case");
      rep.summary << " result=not-applicable";
      return;
    }
    for (const auto& g : pm->presentation.generators)
      rep.line(g.name + " -> " + std::to_string(pm->torsion_projection.at(g.name)));
    rep.summary << " result=projection";
  });

  // --- enumerate -----------------------------------------------------------------
  auto* enumerate = app.add_subcommand("enumerate", "Todd-Coxeter coset enumeration");
  std::string enum_file;
  std::vector<int> enum_bn;
  std::vector<std::string> subgroup_texts;
  std::size_t max_cosets = max_cosets_default();
  enumerate->add_option("file", enum_file, "presentation file");
  enumerate->add_option("--bn", enum_bn, "g p n")->expected(3);
  enumerate->add_option("--max-cosets", max_cosets, "coset limit");
  enumerate->add_option("--subgroup", subgroup_texts, "subgroup generator words");
  enumerate->callback([&] {
    Presentation pres;
    if (!enum_bn.empty())
      pres = braid_presentation({enum_bn[0], enum_bn[1], enum_bn[2]});
    else if (!enum_file.empty())
      pres = load_presentation(read_file(enum_file));
    else
      throw Error("UsageError", "enumerate needs FILE or --bn G P N");
    std::vector<Word> subgroup;
    for (const auto& t : subgroup_texts)
      subgroup.push_back(parse_word(t, pres.generators));
    CosetTable table = todd_coxeter(pres, subgroup, max_cosets);
    if (table.status() == CosetTable::Status::Aborted) {
      rep.status = "aborted";
      rep.exit_code = 1;
      rep.summary << " limit=" << table.abort_limit();
      return;
    }
    rep.summary << " index=" << table.index();
  });

  // --- pure-table -------------------------------------------------------------------
  auto* pure = app.add_subcommand("pure-table", "coset table of P_n inside B_n");
  add_gpn(pure, true, true, true);
  pure->callback([&] {
    CosetTable table = pure_subgroup_table(params, max_cosets_default());
    for (std::size_t c = 1; c <= table.index(); ++c)
      rep.line("coset " + std::to_string(c) + ": " + format_word(table.transversal(c)));
    rep.summary << " index=" << table.index();
  });

  // --- rs-rewrite ----------------------------------------------------------------------
  auto* rsrw = app.add_subcommand("rs-rewrite", "rewrite a pure word over Schreier aliases");
  std::string rs_word;
  add_gpn(rsrw, true, true, true);
  rsrw->add_option("word", rs_word, "word over the ambient generators")->required();
  rsrw->callback([&] {
    CosetTable table = pure_subgroup_table(params, max_cosets_default());
    RewrittenPresentation rp = reidemeister_schreier(table);
    Word w = parse_word(rs_word, table.presentation().generators);
    Word rewritten = rewrite_word(rp, table, w);
    for (const auto& s : rewritten.syllables) {
      auto it = std::find_if(rp.schreier_generators.begin(), rp.schreier_generators.end(),
                             [&](const auto& pr) { return pr.first == s.gen; });
      rep.line("# " + s.gen.name + " = " + format_word(it->second));
    }
    rep.line(format_word(rewritten));
    rep.summary << " length=" << rewritten.length();
  });

  // --- reduce -----------------------------------------------------------------------------
  auto* red = app.add_subcommand("reduce", "freely reduce a word");
  std::string reduce_text;
  red->add_option("word", reduce_text, "word")->required();
  red->callback([&] {
    Word w = parse_word(reduce_text, alphabet_from_text(reduce_text));
    rep.line(format_word(w));
    rep.summary << " length=" << w.length();
  });

  // --- rho ---------------------------------------------------------------------------------
  auto* rho_cmd = app.add_subcommand("rho", "induced permutation of a braid word");
  std::string rho_text;
  int rho_n = 0;
  rho_cmd->add_option("--n", rho_n, "strands")->required()->check(CLI::PositiveNumber);
  rho_cmd->add_option("word", rho_text, "word")->required();
  rho_cmd->callback([&] {
    Word w = parse_word(rho_text, alphabet_from_text(rho_text));
    rep.summary << " perm=" << perm_cycles(rho(rho_n, w));
  });

  // --- check-eq ------------------------------------------------------------------------------
  auto* check = app.add_subcommand("check-eq", "compare two words under oracles");
  std::string oracle_name, u_text, v_text;
  check->add_option("--oracle", oracle_name,
                    "free|artin|dehn|b2a|torus|goldberg|homology|perm|all")
      ->required();
  add_gpn(check, false, false, false);
  check->add_option("u", u_text, "left word")->required();
  check->add_option("v", v_text, "right word")->required();
  check->callback([&] {
    std::vector<OracleContext> ctxs;
    if (oracle_name == "free") {
      Alphabet a = alphabet_from_text(u_text);
      for (const auto& g : alphabet_from_text(v_text))
        if (!alphabet_contains(a, g.name)) a.push_back(g);
      ctxs.push_back(free_context(a));
    } else {
      ctxs = battery_for(oracle_name, has_g, has_p, has_n, params);
    }
    Alphabet parse_alpha = battery_alphabet(ctxs, u_text, v_text);
    Word u = parse_word(u_text, parse_alpha);
    Word v = parse_word(v_text, parse_alpha);
    CheckReport report = check_equal(ctxs, u, v);
    for (const auto& line : report.lines) rep.line(line);
    if (report.verdict.value == Eq::NotEqual) {
      rep.status = "refuted";
      rep.exit_code = 1;
    }
    rep.summary << " verdict=" << eq_name(report.verdict.value);
    if (!report.verdict.witness.empty()) rep.summary << " oracle=" << report.verdict.oracle;
  });

  // --- element / ptr / pscr ---------------------------------------------------------------------
  auto* elem = app.add_subcommand("element", "closed-form named element");
  std::string elem_symbol;
  add_gpn(elem, true, true, true);
  elem->add_option("symbol", elem_symbol, "s1 a1 b1 z1 delta2 A1_3 a2_1 Dsq Dzeta Da Db")
      ->required();
  elem->callback([&] {
    NamedElement ne = element(params, parse_elem_symbol(elem_symbol, params));
    rep.line(format_word(ne.word));
    rep.summary << " length=" << ne.word.length();
  });

  auto* ptr_cmd = app.add_subcommand("ptr", "the (PTR) word over X_i");
  int strand_i = 1, handle_r = 1;
  add_gpn(ptr_cmd, true, true, true);
  ptr_cmd->add_option("--i", strand_i, "strand")->required();
  ptr_cmd->callback([&] {
    Word w = ptr_word(params, strand_i);
    rep.line(format_word(w));
    rep.line("expansion: " + format_word(expand_x_word(params, w)));
    rep.summary << " length=" << w.length();
  });

  auto* pscr_cmd = app.add_subcommand("pscr", "the (PSCR) words over X_i u X_{i+1}");
  add_gpn(pscr_cmd, true, true, true);
  pscr_cmd->add_option("--i", strand_i, "strand")->required();
  pscr_cmd->add_option("--r", handle_r, "handle index")->required();
  pscr_cmd->callback([&] {
    PscrWords w = pscr_words(params, strand_i, handle_r);
    rep.line("lhs:  " + format_word(w.lhs));
    rep.line("rhs1: " + format_word(w.rhs1));
    rep.line("rhs2: " + format_word(w.rhs2));
    rep.summary << " ok=1";
  });

  // --- project / forget --------------------------------------------------------------------------
  auto* project = app.add_subcommand("project", "Goldberg projection of an X word");
  std::string x_word_text;
  add_gpn(project, true, true, true);
  project->add_option("word", x_word_text, "word over the X alphabet")->required();
  project->callback([&] {
    Word w = parse_word(x_word_text, x_alphabet_all(params));
    std::vector<Word> factors = goldberg_project(params, w);
    for (int i = 0; i < params.n; ++i)
      rep.line("factor " + std::to_string(i + 1) + ": " + format_word(factors[i]));
    rep.summary << " factors=" << params.n;
  });

  auto* forget = app.add_subcommand("forget", "delete strand i from an X word");
  add_gpn(forget, true, true, true);
  forget->add_option("--i", strand_i, "strand")->required();
  forget->add_option("word", x_word_text, "word over the X alphabet")->required();
  forget->callback([&] {
    Word w = parse_word(x_word_text, x_alphabet_all(params));
    Word out = forget_strand(params, strand_i, w);
    rep.line(format_word(out));
    rep.summary << " length=" << out.length();
  });

  // --- strongly-free -------------------------------------------------------------------------------
  auto* strfree = app.add_subcommand("strongly-free", "homology certificate for Y in X_i");
  std::vector<std::string> y_syms;
  add_gpn(strfree, true, true, true);
  strfree->add_option("--i", strand_i, "strand")->required();
  strfree->add_option("symbols", y_syms, "subset of X_i")->required();
  strfree->callback([&] {
    std::vector<GenSym> y;
    for (const auto& s : y_syms) y.push_back(GenSym{s});
    StronglyFree sf = strongly_free_certificate(params, strand_i, y);
    if (sf.certified) {
      rep.summary << " certified=yes rank=" << sf.rank;
    } else {
      rep.status = "refuted";
      rep.exit_code = 1;
      rep.summary << " certified=no";
    }
  });

  // --- transvection -----------------------------------------------------------------------------------
  auto* tv_cmd = app.add_subcommand("transvection", "torus transvection from (x1,y1,x2,y2)");
  TransvectionParams tp;
  bool tv_verify = false;
  tv_cmd->add_option("--n", tp.n, "strands")->required()->check(CLI::PositiveNumber);
  tv_cmd->add_option("--x1", tp.x1)->required();
  tv_cmd->add_option("--y1", tp.y1)->required();
  tv_cmd->add_option("--x2", tp.x2)->required();
  tv_cmd->add_option("--y2", tp.y2)->required();
  tv_cmd->add_flag("--verify", tv_verify, "verify relators and the homology matrix law");
  tv_cmd->callback([&] {
    TransvectionResult result = make_transvection(tp);
    if (std::holds_alternative<RejectedTransvection>(result)) {
      rep.status = "refuted";
      rep.exit_code = 1;
      rep.summary << " det=" << std::get<RejectedTransvection>(result).det;
      return;
    }
    const Transvection& tv = std::get<Transvection>(result);
    rep.line("M = [[" + std::to_string(tv.matrix[0][0]) + "," +
             std::to_string(tv.matrix[0][1]) + "],[" + std::to_string(tv.matrix[1][0]) +
             "," + std::to_string(tv.matrix[1][1]) + "]]");
    for (const auto& g : tv.hom.source.generators)
      rep.line(g.name + " -> " + format_word(tv.hom.images.at(g.name)));
    rep.summary << " det=" << tv.det;
    if (tv_verify) {
      HomReport hr = verify_homomorphism(tv.hom);
      bool matrix_ok = transvection_matrix_law(tv);
      for (const auto& [relator, verdict] : hr.relators)
        rep.line("relator " + relator + ": " + eq_name(verdict.value));
      std::string overall = hr.status == HomStatus::Refuted      ? "refuted"
                            : hr.status == HomStatus::Verified   ? "verified"
                                                                 : "consistent";
      if (hr.status == HomStatus::Refuted || !matrix_ok) {
        rep.status = "refuted";
        rep.exit_code = 1;
      }
      rep.summary << " relators=" << overall << " matrix=" << (matrix_ok ? "ok" : "bad");
    }
  });

  // --- verify-hom ------------------------------------------------------------------------------------------
  auto* vh = app.add_subcommand("verify-hom", "verify a generator-image map");
  std::string source_file, images_file;
  vh->add_option("--source", source_file, "source presentation file")->required();
  vh->add_option("--images", images_file, "file with gens + img lines")->required();
  vh->add_option("--oracle", oracle_name, "target oracle kind")->required();
  add_gpn(vh, false, false, false);
  vh->callback([&] {
    Homomorphism h;
    h.source = load_presentation(read_file(source_file));
    PresentationFile imgs = load_presentation_text(read_file(images_file));
    h.target = battery_for(oracle_name, has_g, has_p, has_n, params);
    for (const auto& [gen_sym, text] : imgs.images)
      h.images[gen_sym.name] = parse_word(text, imgs.presentation.generators);
    for (const auto& g : h.source.generators)
      if (h.images.find(g.name) == h.images.end())
        throw Error("UsageError", "missing image for generator '" + g.name + "'");
    HomReport hr = verify_homomorphism(h);
    for (const auto& [relator, verdict] : hr.relators) {
      std::string line = "relator " + relator + ": " + eq_name(verdict.value);
      if (verdict.value == Eq::NotEqual) line += " (" + verdict.witness + ")";
      rep.line(line);
    }
    std::string overall = hr.status == HomStatus::Refuted      ? "refuted"
                          : hr.status == HomStatus::Verified   ? "verified"
                                                               : "consistent";
    if (hr.status == HomStatus::Refuted) {
      rep.status = "refuted";
      rep.exit_code = 1;
      rep.summary << " overall=" << overall << " relator=" << hr.refuted_relator;
    } else {
      rep.summary << " overall=" << overall;
    }
  });

  // --- aut-b2a / swap-check -----------------------------------------------------------------------------------
  auto* aut = app.add_subcommand("aut-b2a", "named automorphisms of B_2(A)");
  bool verify_pres = false;
  aut->add_flag("--verify-presentation", verify_pres, "check the defining relators");
  aut->callback([&] {
    for (const auto& [name, a] : b2a_automorphisms())
      rep.line(name + ": d -> " + format_word(a.img_d) + ", z -> " + format_word(a.img_z));
    if (!verify_pres) {
      rep.summary << " automorphisms=5";
      return;
    }
    AutB2AReport ar = verify_aut_b2a_presentation();
    std::size_t holds = 0;
    for (const auto& r : ar.relators) {
      rep.line("relator " + r.relator + ": " + (r.holds ? "ok" : "FAIL"));
      if (r.holds) ++holds;
    }
    rep.line(std::string("(pi s*)^k nontrivial for k=1..10: ") +
             (ar.dihedral_powers_nontrivial ? "ok" : "FAIL"));
    if (!ar.all_verified || !ar.dihedral_powers_nontrivial) {
      rep.status = "refuted";
      rep.exit_code = 1;
    }
    rep.summary << " relators=" << ar.relators.size() << " verified=" << holds;
  });

  auto* swap_cmd = app.add_subcommand("swap-check", "the sigma1 <-> zeta1 swap of B_2(A)");
  swap_cmd->callback([&] {
    SwapCheckReport sr = swap_automorphism_check();
    rep.line(std::string("relator preserved: ") + (sr.relator_preserved ? "yes" : "NO"));
    rep.line(std::string("swap is an involution: ") + (sr.swap_is_involution ? "yes" : "NO"));
    rep.line("rho(phi(z1)) = " + perm_cycles(sr.rho_of_image_z1));
    rep.line(std::string("kernel of rho preserved: ") +
             (sr.kernel_not_preserved ? "no (P_2 is moved)" : "YES"));
    if (!sr.relator_preserved || !sr.kernel_not_preserved) {
      rep.status = "refuted";
      rep.exit_code = 1;
    }
    rep.summary << " relator=" << (sr.relator_preserved ? "verified" : "refuted")
                << " moves_kernel=" << (sr.kernel_not_preserved ? "yes" : "no");
  });

  std::vector<std::string> argv_copy = args;
  std::reverse(argv_copy.begin(), argv_copy.end());
  try {
    app.parse(argv_copy);
  } catch (const CLI::ParseError& e) {
    Report err;
    err.status = e.get_exit_code() == 0 ? "ok" : "error";
    err.exit_code = e.get_exit_code() == 0 ? 0 : 2;
    std::ostringstream help;
    if (e.get_exit_code() != 0) help << e.what() << "\n" << app.help();
    else help << app.help();
    err.body << help.str();
    err.summary << " error=usage";
    if (err.status == "ok") err.summary.str("");
    return err.finish();
  } catch (const Error& e) {
    Report err;
    err.status = "error";
    err.exit_code = 2;
    err.line(e.what());
    err.summary << " error=" << e.kind();
    return err.finish();
  } catch (const std::exception& e) {
    Report err;
    err.status = "error";
    err.exit_code = 2;
    err.line(e.what());
    err.summary << " error=Internal";
    return err.finish();
  }
  return rep.finish();
}

}  // namespace braidforge::cli
