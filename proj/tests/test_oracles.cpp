#include <doctest.h>

#include "braidforge/braidlab.hpp"
#include "braidforge/errors.hpp"
#include "braidforge/oracles.hpp"
#include "testutil.hpp"

using namespace braidforge;

namespace {

Word wd(const std::string& text, const Alphabet& a) { return parse_word(text, a); }

const Alphabet kFree{GenSym{"x1"}, GenSym{"x2"}};
const Alphabet kArtin3{GenSym{"s1"}, GenSym{"s2"}, GenSym{"z1"}};
const Alphabet kGenus2{GenSym{"a1"}, GenSym{"a2"}, GenSym{"b1"}, GenSym{"b2"}};
const Alphabet kDZ{GenSym{"d"}, GenSym{"z"}};

}  // namespace

TEST_CASE("free_eq") {
  CHECK(free_eq(kFree, wd("x1*x2*x2^-1", kFree), wd("x1", kFree)).value == Eq::Equal);
  CHECK(free_eq(kFree, wd("x1*x2", kFree), wd("x2*x1", kFree)).value == Eq::NotEqual);
  CHECK(free_eq(kFree, Word{}, Word{}).value == Eq::Equal);
  CHECK_THROWS_AS(free_eq(kFree, wd("q1", {GenSym{"q1"}}), Word{}), UnknownGenerator);
}

TEST_CASE("artin_eq") {
  SUBCASE("defining braid relation") {
    CHECK(artin_eq(3, wd("s1*s2*s1", kArtin3), wd("s2*s1*s2", kArtin3)).value ==
          Eq::Equal);
  }
  SUBCASE("lantern: A12 A31 A23 = (s1 s2)^3") {
    Word lhs = wd("s1^2 * (s1^-1*s2^2*s1) * s2^2", kArtin3);
    Word rhs = wd("(s1*s2)^3", kArtin3);
    CHECK(artin_eq(3, lhs, rhs).value == Eq::Equal);
  }
  SUBCASE("distinct generators differ") {
    Verdict v = artin_eq(3, wd("s1", kArtin3), wd("s2", kArtin3));
    CHECK(v.value == Eq::NotEqual);
    CHECK(!v.witness.empty());
  }
  SUBCASE("all relators of B_n(Sigma_{0,1}) hold, n <= 4") {
    for (int n : {2, 3, 4}) {
      Presentation p = braid_presentation({0, 1, n});
      for (const auto& r : p.relators)
        CHECK(artin_eq(n, r, Word{}).value == Eq::Equal);
    }
  }
  SUBCASE("z1 is the inverse full twist") {
    Word tr = wd("s1*s2*s2*s1", kArtin3);
    CHECK(artin_eq(3, wd("z1", kArtin3), invert(tr)).value == Eq::Equal);
  }
}

TEST_CASE("dehn_eq (genus 2)") {
  Word relator = wd("[b1^-1,a1]*[b2^-1,a2]", kGenus2);
  SUBCASE("the relator is trivial") {
    CHECK(dehn_eq(2, relator, Word{}).value == Eq::Equal);
  }
  SUBCASE("a1 b1 != b1 a1") {
    CHECK(dehn_eq(2, wd("a1*b1", kGenus2), wd("b1*a1", kGenus2)).value ==
          Eq::NotEqual);
  }
  SUBCASE("reflexivity") {
    CHECK(dehn_eq(2, wd("a1", kGenus2), wd("a1", kGenus2)).value == Eq::Equal);
  }
  SUBCASE("random words against relator-padded copies") {
    auto rng = testutil::make_rng(5);
    for (int trial = 0; trial < 60; ++trial) {
      Word w = testutil::random_word(rng, kGenus2, 20);
      CHECK(dehn_eq(2, w, w).value == Eq::Equal);
      Word padded = concat(w, conjugate(relator, testutil::random_word(rng, kGenus2, 6)));
      CHECK(dehn_eq(2, w, padded).value == Eq::Equal);
    }
  }
  SUBCASE("genus below 2 is rejected") {
    CHECK_THROWS_AS(dehn_eq(1, Word{}, Word{}), IndexOutOfRange);
  }
}

TEST_CASE("b2a_eq") {
  SUBCASE("d^2 is central") {
    CHECK(b2a_eq(wd("z*d^2*z^-1", kDZ), wd("d^2", kDZ)).value == Eq::Equal);
  }
  SUBCASE("d z d^-1 != z") {
    Verdict v = b2a_eq(wd("d*z*d^-1", kDZ), wd("z", kDZ));
    CHECK(v.value == Eq::NotEqual);
    B2ANormalForm nf = b2a_normal_form(wd("d*z*d^-1", kDZ));
    CHECK(nf.central_power == -1);
    CHECK(format_word(nf.reduced) == "d*z*d");
  }
  SUBCASE("central powers slide") {
    CHECK(b2a_eq(wd("d^4*z*d^-2", kDZ), wd("d^2*z", kDZ)).value == Eq::Equal);
  }
  SUBCASE("the defining relator holds") {
    CHECK(b2a_eq(commutator(wd("z", kDZ), wd("d^2", kDZ)), Word{}).value == Eq::Equal);
  }
  SUBCASE("the sz-form relator holds after the change of generators") {
    // z1 s1 z1 s1 (s1 z1 s1 z1)^-1 with z1 -> z, s1 -> z^-1 d
    Word s1 = wd("z^-1*d", kDZ), z1 = wd("z", kDZ);
    Word lhs = concat(concat(concat(z1, s1), z1), s1);
    Word rhs = concat(concat(concat(s1, z1), s1), z1);
    CHECK(b2a_eq(lhs, rhs).value == Eq::Equal);
  }
}

TEST_CASE("torus_eq") {
  Alphabet t{GenSym{"a1"}, GenSym{"b1"}};
  CHECK(torus_eq(wd("a1*b1", t), wd("b1*a1", t)).value == Eq::Equal);
  CHECK(torus_eq(wd("a1", t), wd("b1", t)).value == Eq::NotEqual);
}

TEST_CASE("rho and the permutation oracle") {
  Presentation p = braid_presentation({1, 1, 3});
  SUBCASE("generator images") {
    CHECK(perm_cycles(rho(3, wd("s1", p.generators))) == "(1,2)");
    CHECK(perm_cycles(rho(3, wd("s2", p.generators))) == "(2,3)");
    CHECK(perm_cycles(rho(3, wd("a1*b1*z1", p.generators))) == "()");
  }
  SUBCASE("homomorphism property") {
    auto rng = testutil::make_rng(11);
    auto compose = [](std::vector<int> f, const std::vector<int>& g) {
      for (auto& v : f) v = g[v];
      return f;
    };
    for (int trial = 0; trial < 200; ++trial) {
      Word u = testutil::random_word(rng, p.generators, 10);
      Word v = testutil::random_word(rng, p.generators, 10);
      CHECK(rho(3, concat(u, v)) == compose(rho(3, u), rho(3, v)));
    }
  }
  SUBCASE("verdicts carry witnesses") {
    Verdict v = permutation_eq(3, wd("s1", p.generators), wd("s2", p.generators));
    CHECK(v.value == Eq::NotEqual);
    CHECK(v.witness.find("(1,2)") != std::string::npos);
    CHECK(permutation_eq(3, wd("s1*s1", p.generators), Word{}).value ==
          Eq::ConsistentButUnverified);
  }
}

TEST_CASE("homology oracle") {
  Presentation p = braid_presentation({1, 0, 2});
  Abelianization ab = abelianize(p);
  SUBCASE("refutes unequal classes") {
    Verdict v = homology_eq(ab, wd("a1", p.generators), wd("b1", p.generators));
    CHECK(v.value == Eq::NotEqual);
  }
  SUBCASE("never certifies") {
    CHECK(homology_eq(ab, wd("s1*s1", p.generators), Word{}).value ==
          Eq::ConsistentButUnverified);
  }
}

TEST_CASE("goldberg_eq") {
  SurfaceParams torus2{1, 0, 2};
  Alphabet x = x_alphabet_all(torus2);
  SUBCASE("A_{1,2} projects into the kernel") {
    CHECK(goldberg_eq(torus2, wd("A1_2", x), Word{}).value ==
          Eq::ConsistentButUnverified);
  }
  SUBCASE("a_{1,1} vs b_{1,1} is refuted in factor 1") {
    Verdict v = goldberg_eq(torus2, wd("a1_1", x), wd("b1_1", x));
    CHECK(v.value == Eq::NotEqual);
    CHECK(v.witness.find("factor 1") != std::string::npos);
  }
  SUBCASE("the (PSCR) identity is consistent") {
    CHECK(goldberg_eq(torus2, wd("[b1_1, a2_1^-1]", x), wd("A1_2", x)).value ==
          Eq::ConsistentButUnverified);
  }
  SUBCASE("spheres are not supported") {
    CHECK_THROWS_AS(goldberg_eq({0, 0, 2}, Word{}, Word{}), SphereNotSupported);
  }
}

TEST_CASE("check_equal combination rules") {
  Presentation p = braid_presentation({0, 1, 3});
  std::vector<OracleContext> battery{artin_context(3), permutation_context(3),
                                     homology_context(p)};
  SUBCASE("exact certificate wins") {
    CheckReport r = check_equal(battery, wd("s1*s2*s1", p.generators),
                                wd("s2*s1*s2", p.generators));
    CHECK(r.verdict.value == Eq::Equal);
  }
  SUBCASE("any refutation wins") {
    CheckReport r =
        check_equal(battery, wd("s1", p.generators), wd("s2", p.generators));
    CHECK(r.verdict.value == Eq::NotEqual);
  }
  SUBCASE("only necessary oracles leaves consistent") {
    std::vector<OracleContext> necessary{permutation_context(3), homology_context(p)};
    // [s1, z1] is the identity (z1 is the central full twist) but the
    // necessary tier cannot certify that
    Word w = commutator(wd("s1", p.generators), wd("z1", p.generators));
    CheckReport r = check_equal(necessary, w, Word{});
    CHECK(r.verdict.value == Eq::ConsistentButUnverified);
  }
  SUBCASE("no applicable oracle throws") {
    std::vector<OracleContext> only_b2a{b2a_context()};
    CHECK_THROWS_AS(check_equal(only_b2a, wd("s1", p.generators), Word{}),
                    NoApplicableOracle);
  }
  SUBCASE("non-accepting contexts are skipped with a notice") {
    std::vector<OracleContext> mixed{b2a_context(), permutation_context(3)};
    CheckReport r = check_equal(mixed, wd("s1", p.generators), wd("s1", p.generators));
    REQUIRE(r.lines.size() == 2);
    CHECK(r.lines[0].find("skipped") != std::string::npos);
  }
}

TEST_CASE("property: exact Equal implies necessary consistency") {
  auto rng = testutil::make_rng(2024);
  Presentation p = braid_presentation({0, 1, 3});
  std::vector<OracleContext> necessary{permutation_context(3), homology_context(p)};
  for (int trial = 0; trial < 150; ++trial) {
    Word u = testutil::random_word(rng, p.generators, 10);
    // pad with a random conjugate of a random relator: same group element
    const Word& rel =
        p.relators[trial % p.relators.size()];
    Word v = concat(u, conjugate(rel, testutil::random_word(rng, p.generators, 5)));
    REQUIRE(artin_eq(3, u, v).value == Eq::Equal);
    for (const auto& ctx : necessary) {
      Verdict verdict = evaluate(ctx, u, v);
      CHECK(verdict.value == Eq::ConsistentButUnverified);
    }
  }
}
