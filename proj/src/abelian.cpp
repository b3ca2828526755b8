#include "tensoria/abelian.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "tensoria/errors.hpp"

namespace tensoria {

  IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
      : _rows(rows.size()), _cols(rows.size() ? rows.begin()->size() : 0) {
    for (auto const& r : rows) {
      if (r.size() != _cols) {
        throw InputError("ragged matrix");
      }
      for (auto v : r) {
        _data.emplace_back(v);
      }
    }
  }

  IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = 1;
    }
    return m;
  }

  IntMatrix operator*(IntMatrix const& a, IntMatrix const& b) {
    if (a.cols() != b.rows()) {
      throw InputError("matrix dimension mismatch");
    }
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (a(i, k) == 0) {
          continue;
        }
        for (std::size_t j = 0; j < b.cols(); ++j) {
          c(i, j) += a(i, k) * b(k, j);
        }
      }
    }
    return c;
  }

  namespace {
    using Dense = std::vector<std::vector<BigInt>>;

    // Diagonalises `a` in place.  When track is set, row operations are
    // mirrored into L and column operations into R.
    void smith_in_place(Dense& a, std::size_t nrows, std::size_t ncols,
                        Dense* L, Dense* R) {
      auto swap_rows = [&](std::size_t i, std::size_t j) {
        std::swap(a[i], a[j]);
        if (L) {
          std::swap((*L)[i], (*L)[j]);
        }
      };
      auto swap_cols = [&](std::size_t i, std::size_t j) {
        for (auto& row : a) {
          std::swap(row[i], row[j]);
        }
        if (R) {
          for (auto& row : *R) {
            std::swap(row[i], row[j]);
          }
        }
      };
      // row_i += q * row_t
      auto add_row = [&](std::size_t i, std::size_t t, BigInt const& q) {
        for (std::size_t j = 0; j < ncols; ++j) {
          if (a[t][j] != 0) {
            a[i][j] += q * a[t][j];
          }
        }
        if (L) {
          for (std::size_t j = 0; j < nrows; ++j) {
            if ((*L)[t][j] != 0) {
              (*L)[i][j] += q * (*L)[t][j];
            }
          }
        }
      };
      auto add_col = [&](std::size_t j, std::size_t t, BigInt const& q) {
        for (std::size_t i = 0; i < nrows; ++i) {
          if (a[i][t] != 0) {
            a[i][j] += q * a[i][t];
          }
        }
        if (R) {
          for (std::size_t i = 0; i < ncols; ++i) {
            if ((*R)[i][t] != 0) {
              (*R)[i][j] += q * (*R)[i][t];
            }
          }
        }
      };

      std::size_t const n = std::min(nrows, ncols);
      for (std::size_t t = 0; t < n; ++t) {
        while (true) {
          std::size_t pi = nrows, pj = ncols;
          BigInt      best;
          for (std::size_t i = t; i < nrows; ++i) {
            for (std::size_t j = t; j < ncols; ++j) {
              if (a[i][j] != 0) {
                BigInt v = abs(a[i][j]);
                if (pi == nrows || v < best) {
                  best = v;
                  pi   = i;
                  pj   = j;
                }
              }
            }
          }
          if (pi == nrows) {
            return;
          }
          if (pi != t) {
            swap_rows(t, pi);
          }
          if (pj != t) {
            swap_cols(t, pj);
          }
          bool clean = true;
          for (std::size_t i = t + 1; i < nrows; ++i) {
            if (a[i][t] != 0) {
              BigInt q = a[i][t] / a[t][t];
              add_row(i, t, -q);
              if (a[i][t] != 0) {
                clean = false;
              }
            }
          }
          for (std::size_t j = t + 1; j < ncols; ++j) {
            if (a[t][j] != 0) {
              BigInt q = a[t][j] / a[t][t];
              add_col(j, t, -q);
              if (a[t][j] != 0) {
                clean = false;
              }
            }
          }
          if (!clean) {
            continue;
          }
          bool divisible = true;
          for (std::size_t i = t + 1; i < nrows && divisible; ++i) {
            for (std::size_t j = t + 1; j < ncols; ++j) {
              if (a[i][j] % a[t][t] != 0) {
                add_row(t, i, 1);
                divisible = false;
                break;
              }
            }
          }
          if (divisible) {
            break;
          }
        }
        if (a[t][t] < 0) {
          for (auto& v : a[t]) {
            v = -v;
          }
          if (L) {
            for (auto& v : (*L)[t]) {
              v = -v;
            }
          }
        }
      }
    }

    BigInt gcd_big(BigInt const& a, BigInt const& b) {
      return boost::multiprecision::gcd(a, b);
    }
  }  // namespace

  SmithForm smith_normal_form(IntMatrix const& m) {
    std::size_t const r = m.rows(), c = m.cols();
    Dense             a(r, std::vector<BigInt>(c));
    Dense             L(r, std::vector<BigInt>(r));
    Dense             R(c, std::vector<BigInt>(c));
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) {
        a[i][j] = m(i, j);
      }
      L[i][i] = 1;
    }
    for (std::size_t j = 0; j < c; ++j) {
      R[j][j] = 1;
    }
    smith_in_place(a, r, c, &L, &R);
    SmithForm out;
    out.left  = IntMatrix(r, r);
    out.right = IntMatrix(c, c);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) {
        out.left(i, j) = L[i][j];
      }
    }
    for (std::size_t i = 0; i < c; ++i) {
      for (std::size_t j = 0; j < c; ++j) {
        out.right(i, j) = R[i][j];
      }
    }
    for (std::size_t t = 0; t < std::min(r, c); ++t) {
      out.diagonal.push_back(a[t][t]);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // AbelianGroup
  ////////////////////////////////////////////////////////////////////////

  AbelianGroup AbelianGroup::from_cyclic(std::vector<BigInt> const& orders) {
    AbelianGroup        g;
    std::vector<BigInt> v;
    for (auto const& o : orders) {
      BigInt a = abs(o);
      if (a == 0) {
        ++g._free;
      } else if (a != 1) {
        v.push_back(a);
      }
    }
    std::sort(v.begin(), v.end());
    for (std::size_t i = 0; i < v.size(); ++i) {
      for (std::size_t j = i + 1; j < v.size(); ++j) {
        BigInt d = gcd_big(v[i], v[j]);
        v[j]     = v[i] / d * v[j];
        v[i]     = d;
      }
    }
    for (auto& x : v) {
      if (x != 1) {
        g._inv.push_back(std::move(x));
      }
    }
    return g;
  }

  AbelianGroup AbelianGroup::parse(std::string_view text) {
    std::vector<BigInt> orders;
    std::size_t         pos = 0;
    auto                ws  = [&]() {
      while (pos < text.size()
             && std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      }
    };
    ws();
    if (pos < text.size() && text[pos] == '1') {
      ++pos;
      ws();
      if (pos != text.size()) {
        throw ParseError("trailing characters", pos);
      }
      return {};
    }
    while (true) {
      ws();
      if (pos >= text.size() || text[pos] != 'Z') {
        throw ParseError("expected 'Z'", pos);
      }
      ++pos;
      std::string digits;
      while (pos < text.size()
             && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        digits += text[pos++];
      }
      orders.push_back(digits.empty() ? BigInt(0) : BigInt(digits));
      if (!digits.empty() && orders.back() < 2) {
        throw ParseError("cyclic order must be at least 2", pos);
      }
      ws();
      if (pos == text.size()) {
        break;
      }
      if (text[pos] != 'x') {
        throw ParseError("expected 'x'", pos);
      }
      ++pos;
    }
    return from_cyclic(orders);
  }

  BigInt AbelianGroup::order() const {
    if (_free != 0) {
      throw InputError("infinite abelian group has no finite order");
    }
    BigInt o = 1;
    for (auto const& d : _inv) {
      o *= d;
    }
    return o;
  }

  std::vector<BigInt> AbelianGroup::cyclic_factors() const {
    auto out = _inv;
    out.insert(out.end(), _free, BigInt(0));
    return out;
  }

  std::string AbelianGroup::to_string() const {
    if (is_trivial()) {
      return "1";
    }
    std::string out;
    for (auto const& d : _inv) {
      out += (out.empty() ? "Z" : " x Z") + d.str();
    }
    for (std::size_t i = 0; i < _free; ++i) {
      out += out.empty() ? "Z" : " x Z";
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Cokernels
  ////////////////////////////////////////////////////////////////////////

  namespace {
    struct Overflow {};

    std::int64_t checked_mul_add(std::int64_t a, std::int64_t b,
                                 std::int64_t c) {
      std::int64_t p, s;
      if (__builtin_mul_overflow(b, c, &p) || __builtin_add_overflow(a, p, &s)) {
        throw Overflow{};
      }
      return s;
    }

    AbelianGroup dense_cokernel(Dense a, std::size_t nrows, std::size_t ncols) {
      smith_in_place(a, nrows, ncols, nullptr, nullptr);
      std::vector<BigInt> orders;
      std::size_t         rank = 0;
      for (std::size_t t = 0; t < std::min(nrows, ncols); ++t) {
        if (a[t][t] != 0) {
          ++rank;
          orders.push_back(a[t][t]);
        }
      }
      orders.insert(orders.end(), ncols - rank, BigInt(0));
      return AbelianGroup::from_cyclic(orders);
    }

    AbelianGroup sparse_cokernel(std::vector<SparseRow> rows,
                                 std::size_t            ncols) {
      std::vector<std::vector<std::uint32_t>> col_rows(ncols);
      std::vector<bool>                       row_alive(rows.size(), true);
      std::vector<bool>                       col_alive(ncols, true);
      for (std::size_t r = 0; r < rows.size(); ++r) {
        for (auto const& [c, v] : rows[r]) {
          col_rows[c].push_back(static_cast<std::uint32_t>(r));
        }
      }
      auto coef = [&](std::size_t r, std::uint32_t c) -> std::int64_t {
        auto const& row = rows[r];
        auto it = std::lower_bound(row.begin(), row.end(),
                                   std::make_pair(c, std::int64_t(INT64_MIN)));
        return (it != row.end() && it->first == c) ? it->second : 0;
      };
      auto live_count = [&](std::uint32_t c) {
        // Compact the list while counting.
        auto& lst = col_rows[c];
        std::size_t k = 0;
        for (auto r : lst) {
          if (row_alive[r] && coef(r, c) != 0) {
            lst[k++] = r;
          }
        }
        lst.resize(k);
        std::sort(lst.begin(), lst.end());
        lst.erase(std::unique(lst.begin(), lst.end()), lst.end());
        return lst.size();
      };
      std::vector<BigInt> torsion;
      SparseRow           tmp;
      bool                progress = true;
      while (progress) {
        progress = false;
        std::vector<std::uint32_t> order;
        for (std::size_t r = 0; r < rows.size(); ++r) {
          if (row_alive[r]) {
            if (rows[r].empty()) {
              row_alive[r] = false;
            } else {
              order.push_back(static_cast<std::uint32_t>(r));
            }
          }
        }
        std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) {
          return rows[x].size() < rows[y].size();
        });
        for (auto r : order) {
          if (!row_alive[r] || rows[r].empty()) {
            row_alive[r] = row_alive[r] && !rows[r].empty();
            continue;
          }
          std::uint32_t best = UINT32_MAX;
          std::size_t   best_count = 0;
          for (auto const& [c, v] : rows[r]) {
            if (v == 1 || v == -1) {
              auto cnt = live_count(c);
              if (best == UINT32_MAX || cnt < best_count) {
                best       = c;
                best_count = cnt;
              }
            }
          }
          if (best == UINT32_MAX) {
            if (rows[r].size() == 1) {
              auto c = rows[r][0].first;
              if (live_count(c) == 1) {
                torsion.emplace_back(rows[r][0].second);
                row_alive[r] = false;
                col_alive[c] = false;
                progress     = true;
              }
            }
            continue;
          }
          std::int64_t const pv = coef(r, best);
          auto const         pivot_row = rows[r];
          row_alive[r]                 = false;
          col_alive[best]              = false;
          for (auto s : std::vector<std::uint32_t>(col_rows[best])) {
            if (s == r || !row_alive[s]) {
              continue;
            }
            std::int64_t w = coef(s, best);
            if (w == 0) {
              continue;
            }
            // s -= (w * pv) * pivot_row, since pv = pv^-1.
            std::int64_t f = -w * pv;
            tmp.clear();
            auto const& srow = rows[s];
            std::size_t i = 0, j = 0;
            while (i < srow.size() || j < pivot_row.size()) {
              if (j == pivot_row.size()
                  || (i < srow.size() && srow[i].first < pivot_row[j].first)) {
                tmp.push_back(srow[i++]);
              } else if (i == srow.size()
                         || pivot_row[j].first < srow[i].first) {
                auto v = checked_mul_add(0, f, pivot_row[j].second);
                tmp.emplace_back(pivot_row[j].first, v);
                col_rows[pivot_row[j].first].push_back(s);
                ++j;
              } else {
                auto v = checked_mul_add(srow[i].second, f, pivot_row[j].second);
                if (v != 0) {
                  tmp.emplace_back(srow[i].first, v);
                }
                ++i;
                ++j;
              }
            }
            rows[s].swap(tmp);
            if (rows[s].empty()) {
              row_alive[s] = false;
            }
          }
          col_rows[best].clear();
          progress = true;
        }
      }
      // Dense remainder.
      std::vector<std::uint32_t> cols;
      std::vector<std::int64_t>  col_index(ncols, -1);
      for (std::size_t c = 0; c < ncols; ++c) {
        if (col_alive[c]) {
          col_index[c] = static_cast<std::int64_t>(cols.size());
          cols.push_back(static_cast<std::uint32_t>(c));
        }
      }
      Dense d;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (!row_alive[r] || rows[r].empty()) {
          continue;
        }
        std::vector<BigInt> row(cols.size());
        for (auto const& [c, v] : rows[r]) {
          if (col_index[c] < 0) {
            throw InternalError("eliminated column reappeared");
          }
          row[static_cast<std::size_t>(col_index[c])] = v;
        }
        d.push_back(std::move(row));
      }
      auto nr  = d.size();
      auto rem = dense_cokernel(std::move(d), nr, cols.size());
      auto all = rem.cyclic_factors();
      all.insert(all.end(), torsion.begin(), torsion.end());
      return AbelianGroup::from_cyclic(all);
    }
  }  // namespace

  AbelianGroup cokernel(std::vector<SparseRow> rows, std::size_t ncols) {
    std::set<SparseRow> seen;
    std::vector<SparseRow> clean;
    for (auto& r : rows) {
      std::map<std::uint32_t, std::int64_t> acc;
      for (auto const& [c, v] : r) {
        if (c >= ncols) {
          throw InputError("relation column out of range");
        }
        acc[c] += v;
      }
      SparseRow s;
      for (auto const& [c, v] : acc) {
        if (v != 0) {
          s.emplace_back(c, v);
        }
      }
      if (!s.empty() && s[0].second < 0) {
        for (auto& e : s) {
          e.second = -e.second;
        }
      }
      if (!s.empty() && seen.insert(s).second) {
        clean.push_back(std::move(s));
      }
    }
    try {
      return sparse_cokernel(clean, ncols);
    } catch (Overflow const&) {
      Dense d(clean.size(), std::vector<BigInt>(ncols));
      for (std::size_t r = 0; r < clean.size(); ++r) {
        for (auto const& [c, v] : clean[r]) {
          d[r][c] = v;
        }
      }
      return dense_cokernel(std::move(d), clean.size(), ncols);
    }
  }

  AbelianGroup cokernel(IntMatrix const& m) {
    Dense d(m.rows(), std::vector<BigInt>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        d[i][j] = m(i, j);
      }
    }
    return dense_cokernel(std::move(d), m.rows(), m.cols());
  }

  ////////////////////////////////////////////////////////////////////////
  // Functors
  ////////////////////////////////////////////////////////////////////////

  AbelianGroup z_tensor(AbelianGroup const& a, AbelianGroup const& b) {
    std::vector<BigInt> out;
    for (auto const& x : a.cyclic_factors()) {
      for (auto const& y : b.cyclic_factors()) {
        out.push_back(gcd_big(x, y));
      }
    }
    return AbelianGroup::from_cyclic(out);
  }

  AbelianGroup z_tensor_power(AbelianGroup const& a, std::size_t n) {
    if (n == 0) {
      throw InputError("tensor power needs n >= 1");
    }
    AbelianGroup r = a;
    for (std::size_t i = 1; i < n; ++i) {
      r = z_tensor(r, a);
    }
    return r;
  }

  AbelianGroup lambda2_exterior(AbelianGroup const& a) {
    auto                f = a.cyclic_factors();
    std::vector<BigInt> out;
    for (std::size_t i = 0; i < f.size(); ++i) {
      for (std::size_t j = i + 1; j < f.size(); ++j) {
        out.push_back(gcd_big(f[i], f[j]));
      }
    }
    return AbelianGroup::from_cyclic(out);
  }

  AbelianGroup gamma_whitehead(AbelianGroup const& a) {
    if (!a.is_finite()) {
      throw InputError("Whitehead's functor needs a finite group");
    }
    if (a.order() > 64) {
      throw LimitExceeded("gamma presentation",
                          "group of order " + a.order().str()
                              + " exceeds 64 elements");
    }
    std::vector<std::uint32_t> radix;
    for (auto const& d : a.invariants()) {
      radix.push_back(static_cast<std::uint32_t>(d));
    }
    auto const n = static_cast<std::uint32_t>(a.order());
    // Mixed-radix arithmetic on element indices.
    auto digits = [&](std::uint32_t x) {
      std::vector<std::uint32_t> d(radix.size());
      for (std::size_t i = 0; i < radix.size(); ++i) {
        d[i] = x % radix[i];
        x /= radix[i];
      }
      return d;
    };
    auto number = [&](std::vector<std::uint32_t> const& d) {
      std::uint32_t x = 0;
      for (std::size_t i = radix.size(); i-- > 0;) {
        x = x * radix[i] + d[i];
      }
      return x;
    };
    std::vector<std::uint32_t> add(n * n), neg(n);
    for (std::uint32_t x = 0; x < n; ++x) {
      auto dx = digits(x);
      std::vector<std::uint32_t> dn(radix.size());
      for (std::size_t i = 0; i < radix.size(); ++i) {
        dn[i] = (radix[i] - dx[i]) % radix[i];
      }
      neg[x] = number(dn);
      for (std::uint32_t y = 0; y < n; ++y) {
        auto dy = digits(y);
        std::vector<std::uint32_t> ds(radix.size());
        for (std::size_t i = 0; i < radix.size(); ++i) {
          ds[i] = (dx[i] + dy[i]) % radix[i];
        }
        add[x * n + y] = number(ds);
      }
    }
    std::vector<SparseRow> rows;
    for (std::uint32_t x = 0; x < n; ++x) {
      rows.push_back({{neg[x], 1}, {x, -1}});
    }
    // The defining relation is symmetric in x, y, z.
    for (std::uint32_t x = 0; x < n; ++x) {
      for (std::uint32_t y = x; y < n; ++y) {
        auto xy = add[x * n + y];
        for (std::uint32_t z = y; z < n; ++z) {
          rows.push_back({{add[xy * n + z], 1},
                          {xy, -1},
                          {add[y * n + z], -1},
                          {add[x * n + z], -1},
                          {x, 1},
                          {y, 1},
                          {z, 1}});
        }
      }
    }
    return cokernel(std::move(rows), n);
  }

}  // namespace tensoria
