#include "doctest.h"

#include "tensoria/coset_enum.hpp"

using namespace tensoria;

namespace {
  std::size_t order(std::string_view text, Strategy s,
                    std::vector<std::string> sub = {}) {
    auto              p = parse_presentation(text);
    std::vector<Word> h;
    for (auto const& w : sub) {
      h.push_back(p.parse_word(w));
    }
    auto t = enumerate(p, h, {1'000'000, s});
    REQUIRE(t.complete());
    return t.num_cosets();
  }
}  // namespace

TEST_CASE("classical enumerations") {
  for (auto s : {Strategy::hlt, Strategy::felsch}) {
    CHECK(order("<a,b | a^2, b^3, (a*b)^5>", s) == 60);
    CHECK(order("<a,b | a^2, b^3, (a*b)^4>", s) == 24);
    CHECK(order("<a,b | a^4, b^2, (a*b)^2>", s) == 8);
    CHECK(order("<a,b | a^4, a^2*b^-2, b^-1*a*b*a>", s) == 8);
    CHECK(order("<a,b | a^2, b^3, (a*b)^5>", s, {"a", "b"}) == 1);
    CHECK(order("<a,b | a^2, b^3, (a*b)^5>", s, {"b"}) == 20);
    CHECK(order("<a | a^12>", s) == 12);
    CHECK(order("< | >", s) == 1);
    // PSL(2,7) by the Coxeter presentation, and a trivial group given badly.
    CHECK(order("<a,b | a^2, b^3, (a*b)^7, [a,b]^4>", s) == 168);
    CHECK(order("<a,b | a*b^2*a^-1*b^-3, b*a^2*b^-1*a^-3>", s) == 1);
    // (2,3,7;9) style: Heisenberg group of order 27.
    CHECK(order("<x,y | x^3, y^3, [x,y]^3, [x,y,x], [x,y,y]>", s) == 27);
  }
}

TEST_CASE("tables are standardized and consistent") {
  auto p = parse_presentation("<a,b | a^2, b^3, (a*b)^4>");
  auto t = enumerate(p, {});
  REQUIRE(t.complete());
  std::size_t next = 1;
  std::vector<bool> seen(t.num_cosets());
  seen[0] = true;
  for (std::size_t c = 0; c < t.num_cosets(); ++c) {
    for (letter_type x = 0; x < 4; ++x) {
      auto d = t.entry(c, x);
      CHECK(t.entry(d, inverse_letter(x)) == static_cast<std::int32_t>(c));
      if (!seen[d]) {
        CHECK(static_cast<std::size_t>(d) == next);
        seen[d] = true;
        ++next;
      }
    }
    for (auto const& r : p.relators()) {
      CHECK(t.trace(c, r) == static_cast<std::int32_t>(c));
    }
  }
}

TEST_CASE("limit aborts the enumeration") {
  auto p = parse_presentation("<a,b | a^2, b^3, (a*b)^5>");
  auto t = enumerate(p, {}, {30, Strategy::hlt});
  CHECK_FALSE(t.complete());
  auto f = enumerate(p, {}, {30, Strategy::felsch});
  CHECK_FALSE(f.complete());
  auto z = enumerate(parse_presentation("<a,b | a^2>"), {}, {1000});
  CHECK_FALSE(z.complete());
}
