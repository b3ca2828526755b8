#include "doctest.h"

#include "tensoria/actions.hpp"
#include "tensoria/errors.hpp"
#include "tensoria/permgrp.hpp"

using namespace tensoria;

namespace {
  std::shared_ptr<PresentedGroup const> group(std::string_view text) {
    return std::make_shared<PresentedGroup const>(
        PresentedGroup::from_presentation(parse_presentation(text)));
  }

  auto const d4 = "<a,b | a^4, b^2, (a*b)^2>";
}  // namespace

TEST_CASE("conjugation pairs are compatible") {
  for (auto text : {"<a,b | a^3, b^2, (a*b)^2>", d4,
                    "<a,b | a^4, a^2*b^-2, b^-1*a*b*a>",
                    "<a,b | a^2, b^3, (a*b)^3>"}) {
    auto p = conjugation_pair(group(text));
    CHECK(p.ambient.has_value());
    auto r = check_compatibility(p);
    CHECK(r.pass);
    auto n = p.g->elements().size();
    CHECK(r.triples_checked == 2 * n * n * n);
  }
}

TEST_CASE("action tables") {
  auto g = group(d4);
  auto p = conjugation_pair(g);
  auto const& t = g->elements();
  for (Index x = 0; x < t.size(); ++x) {
    for (Index y = 0; y < t.size(); ++y) {
      CHECK(p.h_on_g.act(x, y) == t.conjugate(x, y));
    }
  }
  CHECK_FALSE(p.h_on_g.is_trivial());
  auto c = group("<t | t^2>");
  auto q = trivial_pair(g, c);
  CHECK(q.h_on_g.is_trivial());
  CHECK(q.g_on_h.is_trivial());
  CHECK(check_compatibility(q).pass);
}

TEST_CASE("normal subgroup pair") {
  auto g  = group("<a,b | a^3, b^2, (a*b)^2>");
  auto a3 = derived_subgroup(g->group());
  auto p  = subgroup_conjugation_pair(g, a3);
  CHECK(p.h->order() == 3);
  CHECK(check_compatibility(p).pass);
  CHECK(check_compatibility(p.swapped()).pass);
  auto s = p.swapped();
  CHECK(s.g->order() == 3);
  CHECK(s.ambient->g_gens == p.ambient->h_gens);
  auto b = subgroup(g->group(), {g->group().generators()[1]});
  CHECK_THROWS_AS(subgroup_conjugation_pair(g, b), InputError);
}

TEST_CASE("an outer automorphism not commuting with inner ones fails") {
  // t: a -> a^-1, b -> a*b with G acting trivially on <t>.
  auto g = group(d4);
  auto c = group("<t | t^2>");
  auto p = action_pair_from_json(g, c, R"({"h_on_g": {"t": ["a^-1", "a*b"]}})");
  CHECK(p.g_on_h.is_trivial());
  auto r = check_compatibility(p);
  CHECK_FALSE(r.pass);
  CHECK(r.identity == 1);
  CHECK_FALSE(r.witness[1].empty());
  // Inner automorphism by b with trivial action back is compatible.
  auto q = action_pair_from_json(g, c, R"({"h_on_g": {"t": ["a^-1", "b"]}})");
  CHECK(check_compatibility(q).pass);
}

TEST_CASE("invalid actions are rejected") {
  auto g = group(d4);
  auto c = group("<t | t^2>");
  // Not a homomorphism of D4.
  CHECK_THROWS_AS(
      action_pair_from_json(g, c, R"({"h_on_g": {"t": ["a^2", "b"]}})"),
      InputError);
  // An automorphism of order 4 cannot be the action of t with t^2 = 1.
  auto z5 = group("<x | x^5>");
  CHECK_THROWS_AS(
      action_pair_from_json(z5, c, R"({"h_on_g": {"t": ["x^2"]}})"),
      InputError);
  CHECK_NOTHROW(
      action_pair_from_json(z5, c, R"({"h_on_g": {"t": ["x^4"]}})"));
  CHECK_THROWS_AS(action_pair_from_json(g, c, R"({"h_on_g": {"u": []}})"),
                  InputError);
  CHECK_THROWS_AS(action_pair_from_json(g, c, "{"), ParseError);
  CHECK_THROWS_AS(check_compatibility(conjugation_pair(g), 100),
                  LimitExceeded);
}

TEST_CASE("generator triples decide compatibility") {
  // Oracle: the exhaustive sweep over every single-image perturbation of
  // the conjugation pair on D4.
  auto g    = group(d4);
  auto base = conjugation_pair(g);
  auto const& t = g->elements();
  std::size_t valid = 0, failing = 0;
  for (std::size_t s = 0; s < g->num_generators(); ++s) {
    for (std::size_t j = 0; j < g->num_generators(); ++j) {
      for (Index e = 0; e < t.size(); ++e) {
        auto img = base.h_on_g.generator_images();
        if (img[s][j] == e) {
          continue;
        }
        img[s][j] = e;
        ActionPair p = base;
        try {
          p.h_on_g = Action(*g, *g, img);
        } catch (InputError const&) {
          continue;
        }
        ++valid;
        auto full = check_compatibility(p);
        auto gens = check_compatibility_on_generators(p);
        CHECK(full.pass == gens.pass);
        CHECK_FALSE(gens.exhaustive);
        failing += full.pass ? 0 : 1;
      }
    }
  }
  CHECK(valid > 0);
  CHECK(failing > 0);
}

TEST_CASE("action identities and kernels") {
  auto q8 = group("<a,b | a^4, a^2*b^-2, b^-1*a*b*a>");
  auto p  = conjugation_pair(q8);
  auto const& t = q8->elements();
  std::size_t kernel = 0;
  for (Index h = 0; h < t.size(); ++h) {
    bool trivial = true;
    for (Index x = 0; x < t.size(); ++x) {
      trivial = trivial && p.h_on_g.act(x, h) == x;
      CHECK(p.h_on_g.act(x, 0) == x);
      for (Index h2 = 0; h2 < t.size(); ++h2) {
        CHECK(p.h_on_g.act(p.h_on_g.act(x, h), h2)
              == p.h_on_g.act(x, t.multiply(h, h2)));
      }
    }
    if (trivial) {
      ++kernel;
      CHECK(center(q8->group()).contains(t.perm(h)));
    }
  }
  CHECK(kernel == center(q8->group()).order());
  CHECK(kernel == 2);
}
