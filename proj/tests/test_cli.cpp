#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "braidforge/cli.hpp"

using braidforge::cli::CommandResult;
using braidforge::cli::run;

namespace {

bool has_line(const std::string& payload, const std::string& needle) {
  return payload.find(needle) != std::string::npos;
}

std::string summary_line(const std::string& payload) {
  auto pos = payload.rfind("status=");
  auto end = payload.find('\n', pos);
  return payload.substr(pos, end - pos);
}

}  // namespace

TEST_CASE("cli: enumerate the finite sphere braid groups") {
  CommandResult r = run({"enumerate", "--bn", "0", "0", "3", "--max-cosets", "1000"});
  CHECK(r.exit_code == 0);
  CHECK(summary_line(r.payload) == "status=ok index=12");

  CommandResult r2 = run({"enumerate", "--bn", "0", "0", "2", "--max-cosets", "100"});
  CHECK(summary_line(r2.payload) == "status=ok index=2");
}

TEST_CASE("cli: enumerate with subgroup generators") {
  std::string path = "cli_z6.bfg";
  std::ofstream(path) << "gens a\nrel a^6\n";
  CommandResult r = run({"enumerate", path, "--subgroup", "a^2", "--max-cosets", "100"});
  CHECK(summary_line(r.payload) == "status=ok index=2");
  std::remove(path.c_str());
}

TEST_CASE("cli: enumerate aborts gracefully") {
  std::string path = "cli_free_group.bfg";
  std::ofstream(path) << "gens a\n";
  CommandResult r = run({"enumerate", path, "--max-cosets", "40"});
  CHECK(r.exit_code == 1);
  CHECK(summary_line(r.payload) == "status=aborted limit=40");
  std::remove(path.c_str());
}

TEST_CASE("cli: reduce") {
  CommandResult r = run({"reduce", "s1*s1^-1"});
  CHECK(r.exit_code == 0);
  CHECK(has_line(r.payload, "e\n"));
}

TEST_CASE("cli: transvection accept/reject") {
  CommandResult rejected =
      run({"transvection", "--n", "2", "--x1", "1", "--y1", "0", "--x2", "0", "--y2", "0"});
  CHECK(rejected.exit_code == 1);
  CHECK(summary_line(rejected.payload) == "status=refuted det=3");

  CommandResult accepted = run({"transvection", "--n", "2", "--x1", "0", "--y1", "0",
                                "--x2", "1", "--y2", "0", "--verify"});
  CHECK(accepted.exit_code == 0);
  CHECK(has_line(accepted.payload, "M = [[1,2],[0,1]]"));
  CHECK(has_line(accepted.payload, "matrix=ok"));
  CHECK(has_line(accepted.payload, "relators=consistent"));
}

TEST_CASE("cli: present/save and abelianize round trip") {
  std::string path = "cli_b2t.bfg";
  CommandResult saved = run({"present", "bn", "--g", "1", "--p", "0", "--n", "2",
                             "--out", path});
  CHECK(saved.exit_code == 0);
  CommandResult ab = run({"abelianize", path});
  CHECK(summary_line(ab.payload) == "status=ok free_rank=2 torsion=[2]");
  std::remove(path.c_str());

  CommandResult ab2 = run({"abelianize", "--bn", "0", "4", "3"});
  CHECK(summary_line(ab2.payload) == "status=ok free_rank=4 torsion=[]");
}

TEST_CASE("cli: purity") {
  CommandResult torus = run({"purity", "--g", "1", "--p", "0"});
  CHECK(has_line(torus.payload, "s1 -> 1"));
  CHECK(has_line(torus.payload, "a1 -> 0"));
  CHECK(summary_line(torus.payload) == "status=ok result=projection");

  CommandResult annulus = run({"purity", "--g", "0", "--p", "2"});
  CHECK(summary_line(annulus.payload) == "status=ok result=not-applicable");
}

TEST_CASE("cli: rho") {
  // left-to-right: 1 -> 2 under s1, then 2 -> 3 under s2
  CommandResult r = run({"rho", "--n", "3", "s1*s2"});
  CHECK(summary_line(r.payload) == "status=ok perm=(1,3,2)");
}

TEST_CASE("cli: check-eq") {
  CommandResult equal =
      run({"check-eq", "--oracle", "artin", "--n", "3", "s1*s2*s1", "s2*s1*s2"});
  CHECK(equal.exit_code == 0);
  CHECK(has_line(equal.payload, "verdict=equal"));

  CommandResult refuted =
      run({"check-eq", "--oracle", "perm", "--n", "3", "s1", "s2"});
  CHECK(refuted.exit_code == 1);
  CHECK(has_line(refuted.payload, "verdict=not-equal"));

  CommandResult battery = run({"check-eq", "--oracle", "all", "--g", "0", "--p", "1",
                               "--n", "3", "s1*s2*s1", "s2*s1*s2"});
  CHECK(battery.exit_code == 0);
  CHECK(has_line(battery.payload, "verdict=equal"));

  CommandResult consistent = run({"check-eq", "--oracle", "homology", "--g", "1",
                                  "--p", "0", "--n", "2", "s1^2", "e"});
  CHECK(has_line(consistent.payload, "verdict=consistent"));
}

TEST_CASE("cli: element, ptr, pscr, project, forget") {
  CHECK(has_line(run({"element", "--g", "0", "--p", "0", "--n", "3", "A1_3"}).payload,
                 "s1^-1*s2^2*s1\n"));
  CHECK(has_line(run({"ptr", "--g", "0", "--p", "1", "--n", "2", "--i", "1"}).payload,
                 "A1_2*z1_1\n"));
  CHECK(has_line(run({"pscr", "--g", "1", "--p", "0", "--n", "2", "--i", "1", "--r", "1"}).payload,
                 "lhs:  A1_2"));
  CHECK(has_line(run({"project", "--g", "1", "--p", "0", "--n", "2", "a2_1"}).payload,
                 "factor 2: a1"));
  CHECK(has_line(run({"forget", "--g", "1", "--p", "0", "--n", "3", "--i", "1", "A2_3"}).payload,
                 "A1_2\n"));
}

TEST_CASE("cli: strongly-free") {
  CommandResult ok = run({"strongly-free", "--g", "0", "--p", "4", "--n", "2", "--i",
                          "1", "A1_2", "z1_1", "z1_2"});
  CHECK(ok.exit_code == 0);
  CHECK(summary_line(ok.payload) == "status=ok certified=yes rank=3");

  CommandResult bad = run({"strongly-free", "--g", "0", "--p", "4", "--n", "2", "--i",
                           "1", "A1_2", "z1_1", "z1_2", "z1_3", "z1_4"});
  CHECK(bad.exit_code == 1);
  CHECK(summary_line(bad.payload) == "status=refuted certified=no");
}

TEST_CASE("cli: pure-table and rs-rewrite") {
  CommandResult table = run({"pure-table", "--g", "0", "--p", "1", "--n", "2"});
  CHECK(summary_line(table.payload) == "status=ok index=2");
  CHECK(has_line(table.payload, "coset 2: s1"));

  CommandResult rw = run({"rs-rewrite", "--g", "0", "--p", "2", "--n", "2", "z1"});
  CHECK(rw.exit_code == 0);
  CHECK(has_line(rw.payload, "= z1\n"));
}

TEST_CASE("cli: present pn-rs emits alias definitions") {
  CommandResult r = run({"present", "pn-rs", "--g", "1", "--p", "0", "--n", "2"});
  CHECK(r.exit_code == 0);
  CHECK(has_line(r.payload, "# y"));
  CHECK(has_line(r.payload, "gens y1"));
}

TEST_CASE("cli: aut-b2a and swap-check") {
  CommandResult aut = run({"aut-b2a", "--verify-presentation"});
  CHECK(aut.exit_code == 0);
  CHECK(has_line(aut.payload, "relator (tau* pi)^2 = delta*: ok"));
  CHECK(summary_line(aut.payload) == "status=ok relators=12 verified=12");

  CommandResult swap = run({"swap-check"});
  CHECK(swap.exit_code == 0);
  CHECK(has_line(swap.payload, "rho(phi(z1)) = (1,2)"));
  CHECK(summary_line(swap.payload) == "status=ok relator=verified moves_kernel=yes");
}

TEST_CASE("cli: verify-hom from files") {
  std::string src = "cli_src.bfg", imgs = "cli_imgs.bfg";
  std::ofstream(src) << "gens s1 s2 z1\n"
                     << "rel s1*s2*s1*s2^-1*s1^-1*s2^-1\n"
                     << "rel [z1, s2]\n";
  std::ofstream(imgs) << "gens s1 s2 z1\n"
                      << "img s1 s1\n"
                      << "img s2 s2\n"
                      << "img z1 z1\n";
  CommandResult r = run({"verify-hom", "--source", src, "--images", imgs, "--oracle",
                         "artin", "--n", "3"});
  CHECK(r.exit_code == 0);
  CHECK(has_line(r.payload, "overall=verified"));
  std::remove(src.c_str());
  std::remove(imgs.c_str());
}

TEST_CASE("cli: usage errors exit with 2") {
  CHECK(run({"abelianize"}).exit_code == 2);
  CHECK(run({"nonsense"}).exit_code == 2);
  CHECK(run({"check-eq", "--oracle", "artin", "s1", "s1"}).exit_code == 2);
  CommandResult domain = run({"element", "--g", "0", "--p", "0", "--n", "3", "A1_9"});
  CHECK(domain.exit_code == 2);
  CHECK(has_line(domain.payload, "error=IndexOutOfRange"));
}

TEST_CASE("cli: BRAIDFORGE_MAX_COSETS overrides the enumeration default") {
  std::string path = "cli_env_free.bfg";
  std::ofstream(path) << "gens a\n";
  setenv("BRAIDFORGE_MAX_COSETS", "25", 1);
  CommandResult r = run({"enumerate", path});
  unsetenv("BRAIDFORGE_MAX_COSETS");
  CHECK(summary_line(r.payload) == "status=aborted limit=25");
  std::remove(path.c_str());
}

TEST_CASE("cli: identical inputs give byte-identical output") {
  std::vector<std::string> args{"check-eq", "--oracle", "all", "--g", "1", "--p", "0",
                                "--n", "2", "s1^2", "e"};
  CHECK(run(args).payload == run(args).payload);
}
