#include "doctest.h"

#include "tensoria/errors.hpp"
#include "tensoria/presentation.hpp"

using namespace tensoria;

TEST_CASE("words reduce freely") {
  auto a = Word::generator(0);
  auto b = Word::generator(1);
  CHECK((a * a.inverse()).empty());
  CHECK((a * b * b.inverse() * a).syllables().size() == 1);
  CHECK((a * b * b.inverse() * a).length() == 2);
  CHECK(commutator(a, b).length() == 4);
  CHECK(a.pow(-3).letters() == std::vector<letter_type>{1, 1, 1});
  auto w = b.inverse() * a * b;
  CHECK(w.cyclically_reduced() == a);
  CHECK(canonical_relator(b * a) == canonical_relator(a * b));
  CHECK(canonical_relator(a.inverse()) == canonical_relator(a));
}

TEST_CASE("presentations parse with every supported form") {
  auto p = parse_presentation("<a,b | a^4, b^2, (a*b)^2>");
  CHECK(p.num_generators() == 2);
  CHECK(p.relators().size() == 3);
  CHECK(p.relators()[2].length() == 4);

  auto q = parse_presentation("< x , y | x y x' y^-1 , [x,y,x] , x^2 = y^3 >");
  auto x = Word::generator(0), y = Word::generator(1);
  CHECK(q.relators()[0] == x * y * x.inverse() * y.inverse());
  CHECK(q.relators()[1] == commutator(commutator(x, y), x));
  CHECK(q.relators()[2] == x.pow(2) * y.pow(-3));

  auto t = parse_presentation("< | >");
  CHECK(t.num_generators() == 0);
  auto one = parse_presentation("<a | 1, a^-2>");
  CHECK(one.relators()[0].empty());
}

TEST_CASE("printing round-trips") {
  for (auto text : {"<a,b | a^4, b^2, (a*b)^2>", "<x,y,z | [x,y,z], x^-3*y'>",
                    "<a | >"}) {
    auto p = parse_presentation(text);
    auto r = parse_presentation(p.to_string());
    CHECK(r.names() == p.names());
    CHECK(r.relators() == p.relators());
  }
}

TEST_CASE("parse errors carry byte offsets") {
  auto offset_of = [](std::string_view s) -> std::size_t {
    try {
      parse_presentation(s);
    } catch (ParseError const& e) {
      return e.offset();
    }
    return 999;
  };
  CHECK(offset_of("<a | b>") == 5);
  CHECK(offset_of("<a | a^0>") == 7);
  CHECK(offset_of("<a,a | >") == 3);
  CHECK(offset_of("<a | a^2") == 8);
  CHECK(offset_of("<a | a^2> x") == 10);
  CHECK(offset_of("a | a") == 0);
  CHECK_THROWS_AS(parse_presentation("<a | [a]>"), ParseError);
}

TEST_CASE("corpus files") {
  std::string text = "# groups\nC2 = <a | a^2>\n\n  V4 = <a,b | a^2,b^2,[a,b]> # klein\n";
  auto c = parse_corpus(text);
  REQUIRE(c.size() == 2);
  CHECK(c[0].name == "C2");
  CHECK(c[1].presentation.relators().size() == 3);
  try {
    parse_corpus("C2 = <a | a^2>\nX = <a | b>\n");
    FAIL("expected error");
  } catch (ParseError const& e) {
    CHECK(e.offset() == 15 + 9);
  }
}

TEST_CASE("deduplicate removes rotations and inverses") {
  auto p = parse_presentation("<a,b | a*b*a^-1*b^-1, b*a^-1*b^-1*a, 1, a^2, a^-2>");
  p.deduplicate();
  CHECK(p.relators().size() == 2);
}
