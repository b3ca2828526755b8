#include "doctest.h"

#include <random>

#include "tensoria/abelian.hpp"
#include "tensoria/errors.hpp"

using namespace tensoria;

namespace {
  AbelianGroup Z(std::vector<long long> v) {
    std::vector<BigInt> b(v.begin(), v.end());
    return AbelianGroup::from_cyclic(b);
  }

  // Closed form for Whitehead's functor on a direct sum of cyclic groups:
  // cyclic summands contribute Z_n (n odd) or Z_2n (n even), pairs Z_gcd.
  AbelianGroup gamma_closed_form(std::vector<long long> cyclic) {
    std::vector<BigInt> out;
    for (std::size_t i = 0; i < cyclic.size(); ++i) {
      out.push_back(cyclic[i] % 2 == 0 ? 2 * cyclic[i] : cyclic[i]);
      for (std::size_t j = i + 1; j < cyclic.size(); ++j) {
        out.push_back(std::gcd(cyclic[i], cyclic[j]));
      }
    }
    return AbelianGroup::from_cyclic(out);
  }
}  // namespace

TEST_CASE("Smith normal form") {
  IntMatrix m{{2, 4}, {6, 8}};
  auto      s = smith_normal_form(m);
  CHECK(s.diagonal == std::vector<BigInt>{2, 4});
  auto d = s.left * m * s.right;
  CHECK(d(0, 0) == 2);
  CHECK(d(1, 1) == 4);
  CHECK(d(0, 1) == 0);
  CHECK(d(1, 0) == 0);

  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    IntMatrix   a(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) {
        a(i, j) = static_cast<long long>(rng() % 13) - 6;
      }
    }
    auto f = smith_normal_form(a);
    auto p = f.left * a * f.right;
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) {
        CHECK(p(i, j) == (i == j ? f.diagonal[i] : BigInt(0)));
      }
    }
    for (std::size_t i = 0; i + 1 < f.diagonal.size(); ++i) {
      CHECK(f.diagonal[i] >= 0);
      if (f.diagonal[i] != 0) {
        CHECK(f.diagonal[i + 1] % f.diagonal[i] == 0);
      } else {
        CHECK(f.diagonal[i + 1] == 0);
      }
    }
    // Sparse cokernel agrees with the dense one.
    std::vector<SparseRow> rows;
    for (std::size_t i = 0; i < r; ++i) {
      SparseRow row;
      for (std::size_t j = 0; j < c; ++j) {
        if (a(i, j) != 0) {
          row.emplace_back(j, static_cast<std::int64_t>(a(i, j)));
        }
      }
      rows.push_back(row);
    }
    CHECK(cokernel(rows, c) == cokernel(a));
  }
}

TEST_CASE("abelian group normal form and text") {
  CHECK(Z({2, 3}).to_string() == "Z6");
  CHECK(Z({4, 6}).to_string() == "Z2 x Z12");
  CHECK(Z({1, 0, 2}).to_string() == "Z2 x Z");
  CHECK(Z({}).to_string() == "1");
  CHECK(AbelianGroup::parse("Z2 x Z2 x Z4") == Z({2, 2, 4}));
  CHECK(AbelianGroup::parse("Z3 x Z2 x Z") == Z({6, 0}));
  CHECK(AbelianGroup::parse("1").is_trivial());
  CHECK_THROWS_AS(AbelianGroup::parse("Z2 y Z3"), ParseError);
  CHECK(Z({2, 4}).cyclic_factors() == std::vector<BigInt>{2, 4});
  CHECK(Z({2, 4}).order() == 8);
  CHECK_THROWS_AS(Z({0}).order(), InputError);
}

TEST_CASE("integral tensor products") {
  CHECK(z_tensor(Z({4}), Z({6})).to_string() == "Z2");
  CHECK(z_tensor_power(Z({2, 2}), 3) == Z({2, 2, 2, 2, 2, 2, 2, 2}));
  CHECK(z_tensor_power(Z({6}), 4) == Z({6}));
  CHECK(z_tensor(Z({0}), Z({5})) == Z({5}));
  CHECK(z_tensor(Z({0, 0}), Z({0})) == Z({0, 0}));
  CHECK(lambda2_exterior(Z({2, 2})) == Z({2}));
  CHECK(lambda2_exterior(Z({3, 9, 0})) == Z({3, 3, 9}));
  CHECK(lambda2_exterior(Z({7})).is_trivial());
}

TEST_CASE("Whitehead's functor from its presentation") {
  CHECK(gamma_whitehead(Z({2})) == Z({4}));
  CHECK(gamma_whitehead(Z({3})) == Z({3}));
  CHECK(gamma_whitehead(Z({})).is_trivial());
  for (auto c : std::vector<std::vector<long long>>{
           {4}, {6}, {2, 2}, {2, 4}, {3, 3}, {2, 2, 2}, {8}, {2, 6}, {4, 4},
           {2, 2, 2, 2}, {2, 2, 4}, {16}, {5}, {7}, {3, 9}}) {
    CHECK(gamma_whitehead(Z(c)) == gamma_closed_form(c));
  }
  CHECK_THROWS_AS(gamma_whitehead(Z({0})), InputError);
  CHECK_THROWS_AS(gamma_whitehead(Z({5, 13})), LimitExceeded);
}
