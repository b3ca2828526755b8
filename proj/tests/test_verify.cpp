#include "doctest.h"

#include <set>

#include "tensoria/abelian.hpp"
#include "tensoria/verify.hpp"

using namespace tensoria;

namespace {
  CorpusEntry const& entry(Corpus const& c, std::string const& name) {
    for (auto const& e : c) {
      if (e.name == name) {
        return e;
      }
    }
    throw std::out_of_range(name);
  }

  std::shared_ptr<PresentedGroup const> group(CorpusEntry const& e) {
    return std::make_shared<PresentedGroup const>(
        PresentedGroup::from_presentation(e.presentation));
  }

  Corpus only(std::set<std::string> const& names) {
    Corpus out;
    for (auto const& e : builtin_corpus()) {
      if (names.count(e.name)) {
        out.push_back(e);
      }
    }
    return out;
  }
}  // namespace

TEST_CASE("builtin corpus enumerates to the expected orders") {
  auto c = builtin_corpus();
  CHECK(c.size() == 26);
  for (auto const& e : c) {
    CAPTURE(e.name);
    CHECK(group(e)->order() == e.expected_order);
  }
}

TEST_CASE("corpus files") {
  auto c = load_corpus("# two groups\nA = <a | a^2>\nB = <a,b | a^2, b^2, [a,b]>\n");
  REQUIRE(c.size() == 2);
  CHECK(c[1].name == "B");
  CHECK(c[1].expected_order == 0);
}

TEST_CASE("Schur-Baer divisibility") {
  auto c  = builtin_corpus();
  auto d4 = schur_baer_divisibility("D4", *group(entry(c, "D4")), 1);
  CHECK(d4.verdict == Verdict::pass);
  CHECK(d4.data["quotient_order"] == 4);
  CHECK(d4.data["tensor_order"] == 16);
  CHECK(d4.data["gamma_order"] == 2);
  auto h = schur_baer_divisibility("Heis27", *group(entry(c, "Heis27")), 1);
  CHECK(h.verdict == Verdict::pass);
  CHECK(h.data["quotient_order"] == 9);
  CHECK(h.data["tensor_order"] == 81);
  CHECK(h.data["gamma_order"] == 3);
  // Abelian H: gamma_{n+1} is trivial.
  auto a = schur_baer_divisibility("C6", *group(entry(c, "C6")), 2);
  CHECK(a.verdict == Verdict::pass);
  CHECK(a.data["gamma_order"] == 1);
  CHECK(a.data["quotient_order"] == 1);
}

TEST_CASE("finiteness check records orders") {
  auto c  = builtin_corpus();
  auto s3 = finiteness_theorem_check("S3", group(entry(c, "S3")), 3);
  CHECK(s3.verdict == Verdict::pass);
  CHECK(s3.data["order"] == 6);
  auto c1 = finiteness_theorem_check("C1", group(entry(c, "C1")), 4);
  CHECK(c1.data["order"] == 1);
  auto v4 = finiteness_theorem_check("V4", group(entry(c, "V4")), 3);
  auto z  = z_tensor_power(AbelianGroup::from_cyclic({2, 2}), 3);
  CHECK(v4.data["order"] == static_cast<std::uint64_t>(z.order()));
  CHECK(v4.data["order"] == 256);
}

TEST_CASE("abelian corpus exercises the abelian power identity") {
  auto          c = only({"C4", "C6", "V4", "C1"});
  VerifyOptions opt;
  opt.max_power = 3;
  auto res      = run_identity_suite(c, opt);
  std::set<std::string> seen;
  for (auto const& r : res) {
    CHECK(r.verdict == Verdict::pass);
    if (r.check == "abelian_power") {
      seen.insert(r.group + std::to_string(r.params["n"].get<int>()));
    }
  }
  CHECK(seen.size() == 8);
}

TEST_CASE("small limits skip instead of failing") {
  auto          c = only({"C2", "S3", "D4", "Q8"});
  VerifyOptions opt;
  opt.limits.max_cosets = 100;
  opt.max_power         = 3;
  auto res              = run_all(c, opt);
  auto t                = tally(res);
  CHECK(t.fail == 0);
  CHECK(t.skipped > 0);
  bool d4_skipped = false;
  for (auto const& r : res) {
    d4_skipped = d4_skipped || (r.group == "D4" && r.verdict == Verdict::skipped);
  }
  CHECK(d4_skipped);
}

TEST_CASE("results do not depend on the number of workers") {
  auto          c = only({"S3", "D4", "Q8", "C3:C4"});
  VerifyOptions opt;
  opt.max_power = 3;
  auto one      = to_json(run_all(c, opt)).dump();
  opt.jobs      = 4;
  auto four     = to_json(run_all(c, opt)).dump();
  CHECK(one == four);
  CHECK(to_csv(run_all(c, opt)).rfind("check,group,params,verdict,detail\n", 0)
        == 0);
}

TEST_CASE("negative controls are rejected") {
  for (auto const& r : run_negative_controls()) {
    CAPTURE(r.check);
    CHECK(r.verdict == Verdict::pass);
    CHECK(r.data.contains("perturbation"));
    CHECK(r.data.contains("witness"));
  }
}
