#include "doctest.h"

#include "tensoria/homology.hpp"
#include "tensoria/tensor.hpp"

using namespace tensoria;

namespace {
  std::shared_ptr<PresentedGroup const> group(std::string_view text) {
    return std::make_shared<PresentedGroup const>(
        PresentedGroup::from_presentation(parse_presentation(text)));
  }

  auto const c2  = "<a | a^2>";
  auto const v4  = "<a,b | a^2, b^2, [a,b]>";
  auto const s3  = "<a,b | a^3, b^2, (a*b)^2>";
  auto const d4  = "<a,b | a^4, b^2, (a*b)^2>";
  auto const q8  = "<a,b | a^4, a^2*b^-2, b^-1*a*b*a>";
  auto const a4  = "<a,b | a^2, b^3, (a*b)^3>";
  auto const s4  = "<a,b | a^2, b^3, (a*b)^4>";
  auto const one = "< | >";

  // |nu(G)| from the relations instantiated over all element triples,
  // enumerated over the trivial subgroup.
  std::size_t nu_order_all_elements(std::shared_ptr<PresentedGroup const> g) {
    auto p = eta_presentation(conjugation_pair(g), true);
    auto t = enumerate(p, {});
    REQUIRE(t.complete());
    return t.num_cosets();
  }

  BigInt order(PermGroup const& g) {
    return StabChain::build(g.degree(), g.generators()).order();
  }
}  // namespace

TEST_CASE("nu of small groups") {
  auto t = build_nu(group(c2));
  CHECK(t.eta_order == 8);
  CHECK(t.tensor.order() == 2);
  CHECK(t.eta_order_exact);
  CHECK(t.presentation.names() == std::vector<std::string>{"a", "a_phi"});

  auto triv = build_nu(group(one));
  CHECK(triv.eta_order == 1);
  CHECK(triv.tensor.order() == 1);
  CHECK(triv.generators.empty());

  auto v = build_nu(group(v4));
  CHECK(v.tensor.order() == 16);
  CHECK(abelian_invariants(v.tensor) == AbelianGroup::parse("Z2 x Z2 x Z2 x Z2"));
  CHECK(v.generators.size() == 4);
  CHECK(v.generators[0].label == "(a ⊗ a)");
}

TEST_CASE("generator-level relations give the all-element group") {
  for (auto text : {c2, v4, s3, d4, q8, a4}) {
    auto g = group(text);
    auto t = build_nu(g);
    CAPTURE(text);
    CHECK(t.eta_order == nu_order_all_elements(g));
    // |nu(G)| = |G|^2 |G (x) G|, with the tensor order from its own chain.
    CHECK(t.eta_order == g->order() * g->order() * order(t.tensor));
  }
}

TEST_CASE("abelian tensor powers agree with the Z-module oracle") {
  for (auto text : {c2, v4, "<a | a^3>", "<a | a^4>", "<a | a^6>",
                    "<a,b | a^2, b^4, [a,b]>"}) {
    auto g  = group(text);
    auto ab = abelian_invariants(g->group());
    auto tw = tensor_power(g, 3);
    CAPTURE(text);
    CHECK(tw.level(2).tensor.tensor.order() == z_tensor_power(ab, 2).order());
    CHECK(tw.level(3).tensor.tensor.order() == z_tensor_power(ab, 3).order());
    CHECK(abelian_invariants(tw.level(3).tensor.tensor) == z_tensor_power(ab, 3));
    CHECK(lambda_n_map(tw, 3).image().is_trivial());
  }
  CHECK(tensor_power(group(v4), 3).level(3).tensor.tensor.order() == 256);
  auto triv = tensor_power(group(one), 4);
  CHECK(triv.level(4).tensor.tensor.order() == 1);
}

TEST_CASE("eta for other pairs") {
  auto c3 = group("<b | b^3>");
  auto t  = build_eta(trivial_pair(group(c2), c3));
  CHECK(t.tensor.order() == 1);
  CHECK(t.eta_order == 6);
  CHECK_FALSE(t.bracket.has_value());

  // S3 against a second presentation of S3, both acting by conjugation
  // through the isomorphism a -> c, b -> d.
  auto g = group(s3);
  auto h = group("<c,d | c^3, d^2, c*d*c*d>");
  auto p = action_pair_from_json(g, h, R"({
      "h_on_g": {"c": ["a", "a^-1*b*a"], "d": ["b^-1*a*b", "b"]},
      "g_on_h": {"a": ["c", "c^-1*d*c"], "b": ["d^-1*c*d", "d"]}})");
  auto e = build_eta(p);
  CHECK(e.tensor.order() == build_nu(g).tensor.order());
  CHECK(lambda_map(e).image().order() == 3);
  CHECK(e.lambda_prime.image().order() == 3);

  // (S3, A3): [S3, A3] = A3.
  auto a3 = derived_subgroup(g->group());
  auto sp = subgroup_conjugation_pair(g, a3);
  auto st = build_eta(sp);
  CHECK(derivative(sp, Side::left).order() == 3);
  CHECK(lambda_map(st).image().order() == 3);
  CHECK(st.bracket->image().order() == 3);
  auto full = enumerate(eta_presentation(sp, true), {});
  REQUIRE(full.complete());
  CHECK(st.eta_order == full.num_cosets());
  CHECK(st.tensor.order() * 18 == full.num_cosets());
}

TEST_CASE("derivatives") {
  auto g = group(d4);
  CHECK(derivative(conjugation_pair(g), Side::left)
            .equals(derived_subgroup(g->group())));
  CHECK(derivative(trivial_pair(g, group(c2)), Side::left).is_trivial());
  CHECK(derivative(trivial_pair(g, group(c2)), Side::right).is_trivial());
}

TEST_CASE("lambda, delta and exterior squares") {
  auto c = build_nu(group(c2));
  CHECK(lambda_map(c).image().is_trivial());
  CHECK(c.lambda.kernel().order() == 2);
  CHECK(delta_subgroup(c).order() == 2);

  auto g = group(s3);
  auto s = build_nu(g);
  CHECK(lambda_map(s).image().order() == 3);
  CHECK(s.lambda.kernel().order() == s.tensor.order() / 3);
  auto h2 = h2_via_cocycles(g->group());
  CHECK(s.lambda.kernel().order() == delta_subgroup(s).order() * h2.order());
  CHECK(exterior_product(s, diagonal_fibre(s)).group.order()
        == 3 * h2.order());

  auto v  = group(v4);
  auto vt = build_nu(v);
  auto vh = h2_via_cocycles(v->group());
  CHECK(vh.order() == 2);
  CHECK(delta_subgroup(vt).order() == 16 / vh.order());
  CHECK(exterior_product(vt, diagonal_fibre(vt)).group.order() == vh.order());

  auto c5 = build_nu(group("<a | a^5>"));
  CHECK(exterior_product(c5, diagonal_fibre(c5)).group.is_trivial());
}

TEST_CASE("tensor with a normal subgroup") {
  auto g  = group(d4);
  auto lc = lower_central_series(g->group());
  auto t  = tensor_with_subgroup(g, lc[1]);
  CHECK(t.bracket->image().equals(lc[2]));
  CHECK(t.bracket->image().is_trivial());
  CHECK(t.bracket->kernel().order() == t.tensor.order());

  auto whole = tensor_with_subgroup(g, g->group());
  CHECK(whole.tensor.order() == build_nu(g).tensor.order());
  auto none = tensor_with_subgroup(g, PermGroup::trivial(g->group().degree()));
  CHECK(none.tensor.order() == 1);
}

TEST_CASE("tensor powers of non-abelian groups") {
  auto g  = group(s3);
  auto tw = tensor_power(g, 3);
  CHECK(lambda_n_map(tw, 2).image().order() == 3);
  CHECK(lambda_n_map(tw, 3).image().order() == 3);
  for (auto const& lv : tw.levels) {
    CHECK(lv.tensor.compat.pass);
  }
  auto d  = tensor_power(group(d4), 3);
  CHECK(lambda_n_map(d, 3).image().is_trivial());
  CHECK(d.level(3).lambda_n.kernel().order() == d.level(3).tensor.tensor.order());
  CHECK(d.level(3).tensor.generators[0].label.find("⊗") != std::string::npos);
}

TEST_CASE("commutator relation in tensor groups") {
  for (auto text : {v4, s3, d4, q8, a4, s4}) {
    auto t = build_nu(group(text));
    auto r = tensor_commutator_check(t);
    CAPTURE(text);
    CHECK(r.pass);
    CHECK(r.tuples_checked == 16 * 16);
  }
  auto t = build_nu(group(s4));
  bool caught = false;
  for (auto const& z : t.eta.generators()) {
    auto r = tensor_commutator_check(t, &z);
    if (!r.pass) {
      caught = true;
      CHECK_FALSE(r.witness.empty());
    }
  }
  CHECK(caught);
}

TEST_CASE("limits") {
  BuildLimits lim;
  lim.max_cosets = 100;
  CHECK_THROWS_AS(build_nu(group(q8), lim), LimitExceeded);
  auto g = group(d4);
  auto h = group("<t | t^2>");
  auto p = action_pair_from_json(g, h, R"({"h_on_g": {"t": ["a^-1", "a*b"]}})");
  CHECK_THROWS_AS(build_eta(p), InputError);
}
