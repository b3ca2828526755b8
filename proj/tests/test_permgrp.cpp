#include "doctest.h"

#include "tensoria/coset_enum.hpp"
#include "tensoria/permgrp.hpp"

using namespace tensoria;

namespace {
  Perm cyc(std::size_t n, std::vector<std::vector<point_type>> c1) {
    for (auto& c : c1) {
      for (auto& p : c) {
        --p;  // tests write cycles 1-based
      }
    }
    return Perm::from_cycles(n, c1);
  }

  PermGroup symmetric(std::size_t n) {
    std::vector<point_type> all(n);
    for (std::size_t i = 0; i < n; ++i) {
      all[i] = static_cast<point_type>(i + 1);
    }
    return PermGroup(n, {cyc(n, {{1, 2}}), cyc(n, {all})});
  }

  PermGroup dihedral(std::size_t n) {
    std::vector<point_type> rot(n);
    std::vector<std::vector<point_type>> refl;
    for (std::size_t i = 0; i < n; ++i) {
      rot[i] = static_cast<point_type>(i + 1);
    }
    // Reflection i -> n+1-i.
    for (std::size_t i = 1; i <= n / 2; ++i) {
      refl.push_back({static_cast<point_type>(i), static_cast<point_type>(n + 1 - i)});
    }
    return PermGroup(n, {cyc(n, {rot}), cyc(n, refl)});
  }
}  // namespace

TEST_CASE("permutation arithmetic") {
  auto a = cyc(4, {{1, 2, 3}});
  auto b = cyc(4, {{1, 2}});
  CHECK((a * b)[0] == 0);  // 1 -> 2 -> 1
  CHECK((a * b).to_string() == "(2 3)");
  CHECK(a.inverse() * a == Perm(4));
  CHECK(a.pow(3).is_identity());
  CHECK(a.order() == 3);
  CHECK(a.conjugate(b) == b.inverse() * a * b);
  CHECK(Perm(3).to_string() == "()");
  CHECK_THROWS_AS(Perm(std::vector<point_type>{0, 0}), InputError);
}

TEST_CASE("orders of classical groups") {
  CHECK(symmetric(5).order() == 120);
  CHECK(symmetric(8).order() == 40320);
  CHECK(dihedral(4).order() == 8);
  CHECK(dihedral(7).order() == 14);
  PermGroup m11(11, {cyc(11, {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}}),
                     cyc(11, {{3, 7, 11, 8}, {4, 10, 5, 6}})});
  CHECK(m11.order() == 7920);
  PermGroup m12(12, {cyc(12, {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}}),
                     cyc(12, {{3, 7, 11, 8}, {4, 10, 5, 6}}),
                     cyc(12, {{1, 12}, {2, 11}, {3, 6}, {4, 8}, {5, 9}, {7, 10}})});
  CHECK(m12.order() == 95040);
  // Rubik's cube group.
  std::vector<Perm> cube = {
      cyc(48, {{1, 3, 8, 6}, {2, 5, 7, 4}, {9, 33, 25, 17}, {10, 34, 26, 18}, {11, 35, 27, 19}}),
      cyc(48, {{9, 11, 16, 14}, {10, 13, 15, 12}, {1, 17, 41, 40}, {4, 20, 44, 37}, {6, 22, 46, 35}}),
      cyc(48, {{17, 19, 24, 22}, {18, 21, 23, 20}, {6, 25, 43, 16}, {7, 28, 42, 13}, {8, 30, 41, 11}}),
      cyc(48, {{25, 27, 32, 30}, {26, 29, 31, 28}, {3, 38, 43, 19}, {5, 36, 45, 21}, {8, 33, 48, 24}}),
      cyc(48, {{33, 35, 40, 38}, {34, 37, 39, 36}, {3, 9, 46, 32}, {2, 12, 47, 29}, {1, 14, 48, 27}}),
      cyc(48, {{41, 43, 48, 46}, {42, 45, 47, 44}, {14, 22, 30, 38}, {15, 23, 31, 39}, {16, 24, 32, 40}})};
  PermGroup rubik(48, cube);
  CHECK(rubik.order() == BigInt("43252003274489856000"));
  PermGroup rubik2(48, cube);
  rubik2.set_order(BigInt("43252003274489856000"));
  CHECK(rubik2.chain().order() == BigInt("43252003274489856000"));
  CHECK(rubik2.contains(cube[0] * cube[3]));
  CHECK_FALSE(rubik2.contains(cyc(48, {{1, 3}})));
}

TEST_CASE("randomized chains are certified against the declared order") {
  auto s = symmetric(9);
  CHECK(StabChain::build_with_order(9, s.generators(), 362880).order() == 362880);
  CHECK_THROWS_AS(StabChain::build_with_order(9, s.generators(), 725760),
                  ChainStalled);
  CHECK_THROWS_AS(StabChain::build_with_order(9, s.generators(), 1000),
                  InternalError);
}

TEST_CASE("membership and incremental chains") {
  auto c = StabChain::build(6, {cyc(6, {{1, 2, 3}})});
  CHECK(c.order() == 3);
  CHECK(c.add_generator(cyc(6, {{1, 2}})));
  CHECK(c.order() == 6);
  CHECK_FALSE(c.add_generator(cyc(6, {{2, 3}})));
  CHECK(c.add_generator(cyc(6, {{4, 5, 6}})));
  CHECK(c.order() == 18);
  CHECK(c.contains(cyc(6, {{1, 3}, {4, 6, 5}})));
  CHECK_FALSE(c.contains(cyc(6, {{1, 4}})));
}

TEST_CASE("series and centres") {
  auto s4 = symmetric(4);
  auto lcs = lower_central_series(s4);
  REQUIRE(lcs.size() == 2);
  CHECK(lcs[1].order() == 12);
  auto d8 = dihedral(8);
  auto l8 = lower_central_series(d8);
  REQUIRE(l8.size() == 4);
  CHECK(l8[1].order() == 4);
  CHECK(l8[2].order() == 2);
  CHECK(l8[3].order() == 1);
  auto u8 = upper_central_series(d8);
  REQUIRE(u8.size() == 4);
  CHECK(u8[1].order() == 2);
  CHECK(u8[2].order() == 4);
  CHECK(u8[3].order() == 16);
  CHECK(center(dihedral(4)).order() == 2);
  CHECK(center(symmetric(3)).order() == 1);
  CHECK(derived_subgroup(symmetric(5)).order() == 60);
  CHECK(normal_closure(symmetric(4), {cyc(4, {{1, 2}, {3, 4}})}).order() == 4);
}

TEST_CASE("quotients and abelian invariants") {
  auto d4 = dihedral(4);
  auto q  = quotient(d4, center(d4));
  CHECK(q.group.order() == 4);
  CHECK(q.group.is_abelian());
  CHECK(q.hom.kernel().order() == 2);
  CHECK(abelian_invariants(d4).to_string() == "Z2 x Z2");
  CHECK(abelian_invariants(symmetric(4)).to_string() == "Z2");
  CHECK(abelian_invariants(symmetric(5)).to_string() == "Z2");
  PermGroup z2z4(6, {cyc(6, {{1, 2}}), cyc(6, {{3, 4, 5, 6}})});
  CHECK(abelian_invariants(z2z4).to_string() == "Z2 x Z4");
  PermGroup z6(5, {cyc(5, {{1, 2}}), cyc(5, {{3, 4, 5}})});
  CHECK(abelian_invariants(z6).to_string() == "Z6");
  CHECK_THROWS_AS(quotient(symmetric(3), PermGroup(3, {cyc(3, {{1, 2}})})),
                  InputError);
}

TEST_CASE("homomorphisms via graph groups") {
  auto s4 = symmetric(4);
  // Sign map: transposition -> (1 2), 4-cycle -> (1 2).
  PermGroup c2(2, {cyc(2, {{1, 2}})});
  GroupHom  h(s4, c2, {cyc(2, {{1, 2}}), cyc(2, {{1, 2}})}, "test");
  CHECK(h.kernel().order() == 12);
  CHECK(h(cyc(4, {{1, 2, 3}})).is_identity());
  CHECK(h(cyc(4, {{1, 2}, {3, 4}})).is_identity());
  CHECK(h(cyc(4, {{1, 4}})) == cyc(2, {{1, 2}}));
  auto r = h.restricted_to(PermGroup(4, {cyc(4, {{1, 2}, {3, 4}}), cyc(4, {{1, 3}})}));
  CHECK(r.image().order() == 2);
  CHECK_THROWS_AS(h(cyc(5, {{1, 5}})), InputError);

  auto p  = parse_presentation("<a,b | a^2, b^4, (a*b)^3>");
  CHECK(enumerate(p, {}).num_cosets() == 24);
  CHECK_NOTHROW(define_hom(p, s4, c2, {cyc(2, {{1, 2}}), cyc(2, {{1, 2}})}));
  try {
    define_hom(p, s4, c2, {cyc(2, {{1, 2}}), Perm(2)});
    FAIL("expected failure");
  } catch (NotAHomomorphism const& e) {
    CHECK(e.relator() == 2);
  }
}

TEST_CASE("element tables") {
  auto         s4 = symmetric(4);
  ElementTable t(s4);
  CHECK(t.size() == 24);
  for (ElementTable::index_type i = 0; i < 24; ++i) {
    CHECK(t.index_of(t.perm(i)) == i);
    CHECK(t.multiply(i, t.inverse(i)) == 0);
    for (ElementTable::index_type j = 0; j < 24; j += 5) {
      CHECK(t.perm(t.multiply(i, j)) == t.perm(i) * t.perm(j));
    }
  }
  CHECK(t.index_of(cyc(5, {{1, 5}})) == -1);
  CHECK_THROWS_AS(ElementTable(symmetric(9), 1000), LimitExceeded);
}
