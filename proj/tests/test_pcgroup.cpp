#include "doctest.h"

#include "tensoria/abelian.hpp"
#include "tensoria/errors.hpp"
#include "tensoria/pc_tensor.hpp"
#include "tensoria/tensor.hpp"
#include "tensoria/permgrp.hpp"
#include "tensoria/pquotient.hpp"
#include "tensoria/presented_group.hpp"

using namespace tensoria;

namespace {
  struct Case {
    char const*   text;
    std::uint32_t p;
  };

  // The p-quotient of a p-group is the group itself, and the definitions
  // give an isomorphism onto the enumerated permutation group.
  void check_p_group(Case const& c) {
    CAPTURE(c.text);
    auto pres = parse_presentation(c.text);
    auto g    = PresentedGroup::from_presentation(pres);
    auto q    = p_quotient(pres, c.p);
    CHECK(q.complete);
    CHECK(q.group->order() == g.order());
    CHECK(q.group->consistency_failure().empty());
    auto const deg = g.group().degree();
    auto imgs = pc_images(q, g.group().generators(), deg);
    CHECK(respects_relations(*q.group, imgs, deg));
    for (std::size_t x = 0; x < pres.num_generators(); ++x) {
      CHECK(evaluate(q.images[x], imgs, deg) == g.group().generators()[x]);
    }
    CHECK(PermGroup(deg, imgs).order() == g.order());
  }
}  // namespace

TEST_CASE("p-quotients of finite p-groups") {
  for (auto c : {Case{"<a | a^4>", 2}, Case{"<a,b | a^2, b^2, [a,b]>", 2},
                 Case{"<a,b | a^4, b^2, (a*b)^2>", 2},
                 Case{"<a,b | a^4, a^2*b^-2, b^-1*a*b*a>", 2},
                 Case{"<a,b,c | a^2, b^2, c^2, [a,b], [a,c], [b,c]>", 2},
                 Case{"<x,y | x^3, y^3, [x,y]^3, [x,y,x], [x,y,y]>", 3},
                 Case{"<a,b | a^8, b^2, (a*b)^2>", 2},
                 Case{"<a | a^9>", 3}, Case{"< | >", 5}}) {
    check_p_group(c);
  }
}

TEST_CASE("p-quotients of other groups") {
  auto order = [](char const* text, std::uint32_t p, std::size_t cls = 0) {
    PQuotientLimits lim;
    lim.max_class = cls;
    return p_quotient(parse_presentation(text), p, lim).group->order();
  };
  CHECK(order("<a,b | a^3, b^2, (a*b)^2>", 2) == 2);
  CHECK(order("<a,b | a^3, b^2, (a*b)^2>", 3) == 1);
  CHECK(order("<a,b | a^2, b^3, (a*b)^3>", 3) == 3);
  CHECK(order("<a,b | a^2, b^3, (a*b)^3>", 2) == 1);
  // Free group of rank 2: exponent-2 class-2 quotient of order 2^5.
  CHECK(order("<a,b | >", 2, 1) == 4);
  CHECK(order("<a,b | >", 2, 2) == 32);
  PQuotientLimits lim;
  lim.max_generators = 20;
  CHECK_THROWS_AS(p_quotient(parse_presentation("<a,b | >"), 2, lim), LimitExceeded);
}

TEST_CASE("pc subgroups") {
  auto q = p_quotient(parse_presentation("<a,b | a^4, b^2, (a*b)^2>"), 2);
  auto const& g = *q.group;
  auto a = q.images[0], b = q.images[1];
  PcSubgroup whole(q.group);
  CHECK(whole.order() == 8);
  PcSubgroup cyc(q.group, {a});
  CHECK(cyc.order() == 4);
  CHECK(cyc.contains(g.power(a, 3)));
  CHECK_FALSE(cyc.contains(b));
  PcSubgroup refl(q.group, {b});
  CHECK(refl.order() == 2);
  refl.normal_closure();
  CHECK(refl.order() == 4);
  PcSubgroup der(q.group, {g.commutator(a, b)});
  der.normal_closure();
  CHECK(der.order() == 2);
  auto h = cyc.as_group();
  CHECK(h.order() == 4);
  CHECK(h.consistency_failure().empty());
  auto co = cyc.coordinates(g.power(a, 3));
  auto x  = h.identity();
  for (std::size_t i = 0; i < co.size(); ++i) {
    x.e[i] = static_cast<std::uint8_t>(co[i]);
  }
  CHECK(h.power(x, 4).e == h.identity().e);
  CHECK_FALSE(h.is_identity(h.power(x, 2)));
}

TEST_CASE("pc tensor powers agree with coset enumeration") {
  struct Row {
    char const* text;
    std::size_t n;
  };
  for (auto c : {Row{"<a,b | a^2, b^2, [a,b]>", 3}, Row{"<a | a^4>", 3},
                 Row{"<a,b | a^4, b^2, (a*b)^2>", 3},
                 Row{"<a,b | a^4, a^2*b^-2, b^-1*a*b*a>", 3},
                 Row{"<x,y | x^3, y^3, [x,y]^3, [x,y,x], [x,y,y]>", 2}}) {
    CAPTURE(c.text);
    auto g  = std::make_shared<PresentedGroup const>(
        PresentedGroup::from_presentation(parse_presentation(c.text)));
    auto tc = tensor_power(g, c.n);
    auto pc = pc_tensor_power(g, c.n);
    for (std::size_t n = 2; n <= c.n; ++n) {
      CAPTURE(n);
      auto const& t  = tc.level(n).tensor.tensor;
      auto const& lv = pc.level(n);
      CHECK(lv.tensor->order() == t.order());
      CHECK(lv.tensor->consistency_failure().empty());
      CHECK(lv.compat.pass);
      CHECK(pc_abelian_invariants(lv.tensor) == abelian_invariants(t));
      CHECK(pc_lambda_image(pc, n).equals(tc.level(n).lambda_n.image()));
      auto k = pc_lambda_kernel(pc, n);
      CHECK(k.order() == tc.level(n).lambda_n.kernel().order());
      CHECK(is_central(k));
    }
  }
}

TEST_CASE("pc tensor powers of abelian groups match the Z-module powers") {
  auto g = std::make_shared<PresentedGroup const>(PresentedGroup::from_presentation(
      parse_presentation("<a,b,c | a^2, b^2, c^2, [a,b], [a,c], [b,c]>")));
  auto pc = pc_tensor_power(g, 3);
  for (std::size_t n = 2; n <= 3; ++n) {
    auto z = z_tensor_power(abelian_invariants(g->group()), n);
    CHECK(pc.level(n).tensor->order() == z.order());
    CHECK(pc_abelian_invariants(pc.level(n).tensor) == z);
  }
}
