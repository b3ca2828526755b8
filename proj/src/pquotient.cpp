#include "tensoria/pquotient.hpp"

#include <algorithm>
#include <string>

#include "tensoria/errors.hpp"

namespace tensoria {

  namespace {

    // Reduced row echelon form over F_p, built one row at a time.
    class Echelon {
     public:
      Echelon(std::uint32_t p, std::size_t cols) : _p(p), _cols(cols), _pivot(cols, -1) {}

      void add(std::vector<std::uint8_t> row) {
        for (std::size_t c = 0; c < _cols; ++c) {
          if (row[c] && _pivot[c] >= 0) {
            axpy(row, _rows[static_cast<std::size_t>(_pivot[c])], _p - row[c]);
          }
        }
        std::size_t lead = 0;
        while (lead < _cols && !row[lead]) {
          ++lead;
        }
        if (lead == _cols) {
          return;
        }
        std::uint32_t inv = 1;
        while ((inv * row[lead]) % _p != 1) {
          ++inv;
        }
        if (inv != 1) {
          for (auto& v : row) {
            v = static_cast<std::uint8_t>((v * inv) % _p);
          }
        }
        for (auto& r : _rows) {
          if (r[lead]) {
            axpy(r, row, _p - r[lead]);
          }
        }
        _pivot[lead] = static_cast<std::int64_t>(_rows.size());
        _rows.push_back(std::move(row));
      }

      std::size_t rank() const noexcept {
        return _rows.size();
      }
      std::int64_t pivot(std::size_t c) const noexcept {
        return _pivot[c];
      }
      std::vector<std::uint8_t> const& row(std::size_t i) const noexcept {
        return _rows[i];
      }

     private:
      // a += k b
      void axpy(std::vector<std::uint8_t>& a, std::vector<std::uint8_t> const& b,
                std::uint32_t k) const {
        if (_p == 2) {
          for (std::size_t i = 0; i < _cols; ++i) {
            a[i] ^= b[i];
          }
          return;
        }
        for (std::size_t i = 0; i < _cols; ++i) {
          a[i] = static_cast<std::uint8_t>((a[i] + k * b[i]) % _p);
        }
      }

      std::uint32_t                          _p;
      std::size_t                            _cols;
      std::vector<std::int64_t>              _pivot;
      std::vector<std::vector<std::uint8_t>> _rows;
    };

    struct TailSource {
      PcDefinition::Kind kind;
      std::uint32_t      a = 0, b = 0;   // image: fp gen a; power: a; commutator [a_a, a_b]
    };

    class Builder {
     public:
      Builder(Presentation const& pres, std::uint32_t p) : _pres(pres), _p(p) {}

      void class_one();
      // One layer; false when the series has stabilised.
      bool step();
      PQuotient finish();

      std::size_t size() const noexcept {
        return _n;
      }
      std::size_t pclass() const noexcept {
        return _class;
      }

     private:
      std::vector<std::uint8_t> difference(Collector const& c, PcElem const& u,
                                           PcElem const& v, PcElem const& w) const;

      Presentation const&        _pres;
      std::uint32_t              _p;
      std::size_t                _n     = 0;
      std::size_t                _class = 0;
      Collector                  _coll;
      std::vector<std::uint32_t> _weight;
      std::vector<PcDefinition>  _defs;
      std::vector<PcWord>        _fp_img;
      std::vector<std::int64_t>  _fp_def;     // fp gen -> pc gen it defines
      std::vector<std::int64_t>  _pow_def;    // i -> pc gen defined by a_i^p
      std::vector<std::int64_t>  _conj_def;   // i*n+j -> pc gen defined by [a_j, a_i]
    };

    // Exponent vectors of a pc word, collected.
    PcWord concat(PcWord w, PcWord const& tail) {
      w.insert(w.end(), tail.begin(), tail.end());
      return w;
    }

    void Builder::class_one() {
      auto const k = _pres.num_generators();
      Echelon    e(_p, k);
      for (auto const& r : _pres.relators()) {
        std::vector<std::uint8_t> row(k, 0);
        for (auto const& s : r.syllables()) {
          auto v = ((s.exp % static_cast<std::int64_t>(_p)) + _p) % _p;
          row[s.gen] = static_cast<std::uint8_t>((row[s.gen] + v) % _p);
        }
        e.add(std::move(row));
      }
      std::vector<std::int64_t> idx(k, -1);
      for (std::size_t x = 0; x < k; ++x) {
        if (e.pivot(x) < 0) {
          idx[x] = static_cast<std::int64_t>(_n++);
        }
      }
      _coll = Collector(_p, _n);
      _fp_img.assign(k, {});
      _fp_def.assign(k, -1);
      for (std::size_t x = 0; x < k; ++x) {
        if (idx[x] >= 0) {
          _fp_img[x] = {{static_cast<std::uint32_t>(idx[x]), 1}};
          _fp_def[x] = idx[x];
          _defs.push_back({PcDefinition::Kind::generator, static_cast<std::uint32_t>(x), 0, {}});
          _weight.push_back(1);
          continue;
        }
        // x = -sum row[f] f over the free columns f.
        auto const& row = e.row(static_cast<std::size_t>(e.pivot(x)));
        for (std::size_t f = 0; f < k; ++f) {
          if (row[f] && idx[f] >= 0) {
            _fp_img[x].emplace_back(static_cast<std::uint32_t>(idx[f]), (_p - row[f]) % _p);
          }
        }
      }
      _pow_def.assign(_n, -1);
      _conj_def.assign(_n * _n, -1);
      _class = 1;
    }

    std::vector<std::uint8_t> Builder::difference(Collector const& c, PcElem const& u,
                                                  PcElem const& v, PcElem const& w) const {
      auto l = c.product(c.product(u, v), w);
      auto r = c.product(u, c.product(v, w));
      if (l.e != r.e) {
        throw InternalError("pc presentation of the quotient is inconsistent");
      }
      for (std::size_t i = 0; i < l.t.size(); ++i) {
        l.t[i] = static_cast<std::uint8_t>((l.t[i] + _p - r.t[i]) % _p);
      }
      return l.t;
    }

    bool Builder::step() {
      auto const n = _n;
      auto const c = static_cast<std::uint32_t>(_class);
      auto const k = _pres.num_generators();

      std::vector<TailSource>   src;
      std::vector<std::int64_t> fp_tail(k, -1), pow_tail(n, -1), conj_tail(n * n, -1);
      for (std::uint32_t x = 0; x < k; ++x) {
        if (_fp_def[x] < 0) {
          fp_tail[x] = static_cast<std::int64_t>(src.size());
          src.push_back({PcDefinition::Kind::image, x, 0});
        }
      }
      for (std::uint32_t i = 0; i < n; ++i) {
        if (_pow_def[i] < 0) {
          pow_tail[i] = static_cast<std::int64_t>(src.size());
          src.push_back({PcDefinition::Kind::power, i, 0});
        }
      }
      // [a_j, a_i] lies in weight w_i + w_j, which is trivial in the
      // covering group beyond c + 1.
      for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = i + 1; j < n; ++j) {
          if (_conj_def[i * n + j] < 0 && _weight[i] + _weight[j] <= c + 1) {
            conj_tail[i * n + j] = static_cast<std::int64_t>(src.size());
            src.push_back({PcDefinition::Kind::commutator, j, i});
          }
        }
      }
      auto const m = src.size();
      auto unit = [](std::int64_t t) {
        return t < 0 ? TailVec{} : TailVec{{static_cast<std::uint32_t>(t), 1}};
      };

      Collector cover(_p, n, m);
      for (std::uint32_t i = 0; i < n; ++i) {
        cover.set_power(i, _coll.power(i), unit(pow_tail[i]));
        for (std::uint32_t j = i + 1; j < n; ++j) {
          cover.set_conj(i, j, _coll.conj(i, j), unit(conj_tail[i * n + j]));
        }
      }

      Echelon ech(_p, m);
      auto gen = [&](std::uint32_t i, std::uint32_t e) {
        auto x = cover.identity();
        cover.mul_gen(x, i, e);
        return x;
      };
      for (std::uint32_t a = 0; a < n; ++a) {
        for (std::uint32_t b = 0; b < a; ++b) {
          for (std::uint32_t d = 0; d < b; ++d) {
            if (_weight[a] + _weight[b] + _weight[d] <= c + 1) {
              ech.add(difference(cover, gen(a, 1), gen(b, 1), gen(d, 1)));
            }
          }
        }
      }
      for (std::uint32_t j = 0; j < n; ++j) {
        for (std::uint32_t i = 0; i < j; ++i) {
          ech.add(difference(cover, gen(j, _p - 1), gen(j, 1), gen(i, 1)));
          ech.add(difference(cover, gen(j, 1), gen(i, _p - 1), gen(i, 1)));
        }
      }
      for (std::uint32_t i = 0; i < n; ++i) {
        ech.add(difference(cover, gen(i, 1), gen(i, _p - 1), gen(i, 1)));
      }

      // The relators of the presentation, evaluated in the covering group.
      std::vector<PcElem> img, inv;
      for (std::uint32_t x = 0; x < k; ++x) {
        auto e = cover.from_word(_fp_img[x]);
        if (fp_tail[x] >= 0) {
          e.t[static_cast<std::size_t>(fp_tail[x])] = 1;
        }
        inv.push_back(cover.inverse(e));
        img.push_back(std::move(e));
      }
      for (auto const& r : _pres.relators()) {
        auto v = cover.identity();
        for (auto const& s : r.syllables()) {
          auto const& f = s.exp > 0 ? img[s.gen] : inv[s.gen];
          for (std::int64_t t = 0; t < std::abs(s.exp); ++t) {
            cover.mul(v, f);
          }
        }
        if (std::any_of(v.e.begin(), v.e.end(), [](auto x) { return x != 0; })) {
          throw InternalError("relator does not hold in the p-quotient");
        }
        ech.add(std::move(v.t));
      }

      if (ech.rank() == m) {
        return false;
      }

      // Free tails become the new generators of weight c + 1.
      std::vector<std::int64_t> fresh(m, -1);
      std::size_t               r = 0;
      for (std::size_t col = 0; col < m; ++col) {
        if (ech.pivot(col) < 0) {
          fresh[col] = static_cast<std::int64_t>(n + r++);
        }
      }
      auto expr = [&](std::int64_t t) {
        PcWord w;
        if (t < 0) {
          return w;
        }
        auto col = static_cast<std::size_t>(t);
        if (fresh[col] >= 0) {
          w.emplace_back(static_cast<std::uint32_t>(fresh[col]), 1);
          return w;
        }
        auto const& row = ech.row(static_cast<std::size_t>(ech.pivot(col)));
        for (std::size_t f = 0; f < m; ++f) {
          if (row[f] && fresh[f] >= 0) {
            w.emplace_back(static_cast<std::uint32_t>(fresh[f]), (_p - row[f]) % _p);
          }
        }
        return w;
      };

      auto const n2 = n + r;
      Collector  next(_p, n2);
      for (std::uint32_t i = 0; i < n; ++i) {
        next.set_power(i, concat(_coll.power(i), expr(pow_tail[i])));
        for (std::uint32_t j = i + 1; j < n; ++j) {
          next.set_conj(i, j, concat(_coll.conj(i, j), expr(conj_tail[i * n + j])));
        }
      }
      std::vector<std::int64_t> conj_def(n2 * n2, -1);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          conj_def[i * n2 + j] = _conj_def[i * n + j];
        }
      }
      _pow_def.resize(n2, -1);
      for (std::size_t col = 0; col < m; ++col) {
        if (fresh[col] < 0) {
          continue;
        }
        auto const& s = src[col];
        auto const  g = fresh[col];
        switch (s.kind) {
          case PcDefinition::Kind::image:
            _defs.push_back({s.kind, s.a, 0, _fp_img[s.a]});
            _fp_def[s.a] = g;
            break;
          case PcDefinition::Kind::power:
            _defs.push_back({s.kind, s.a, 0, _coll.power(s.a)});
            _pow_def[s.a] = g;
            break;
          default:
            _defs.push_back({s.kind, s.a, s.b, _coll.conj(s.b, s.a)});
            conj_def[s.b * n2 + s.a] = g;
            break;
        }
        _weight.push_back(c + 1);
      }
      for (std::uint32_t x = 0; x < k; ++x) {
        _fp_img[x] = concat(_fp_img[x], expr(fp_tail[x]));
      }
      _conj_def = std::move(conj_def);
      _coll     = std::move(next);
      _n        = n2;
      ++_class;
      return true;
    }

    PQuotient Builder::finish() {
      PQuotient q;
      auto      g = std::make_shared<PcGroup const>(_coll);
      if (auto f = g->consistency_failure(); !f.empty()) {
        throw InternalError("p-quotient presentation inconsistent at " + f);
      }
      for (auto const& w : _fp_img) {
        q.images.push_back(_coll.from_word(w));
      }
      for (auto const& r : _pres.relators()) {
        auto v = _coll.identity();
        for (auto const& s : r.syllables()) {
          auto f = s.exp > 0 ? q.images[s.gen] : _coll.inverse(q.images[s.gen]);
          for (std::int64_t t = 0; t < std::abs(s.exp); ++t) {
            _coll.mul(v, f);
          }
        }
        if (!_coll.is_identity(v)) {
          throw InternalError("relator does not hold in the p-quotient");
        }
      }
      q.group       = std::move(g);
      q.definitions = _defs;
      q.weights     = _weight;
      q.pclass      = _class;
      return q;
    }

  }  // namespace

  PQuotient p_quotient(Presentation const& pres, std::uint32_t p,
                       PQuotientLimits const& limits) {
    Builder b(pres, p);
    b.class_one();
    bool complete = true;
    if (b.size() > 0) {
      while (true) {
        if (limits.max_class && b.pclass() >= limits.max_class) {
          complete = false;
          break;
        }
        if (!b.step()) {
          break;
        }
        if (b.size() > limits.max_generators) {
          throw LimitExceeded("max_pc_generators",
                              std::to_string(b.size()) + " pc generators exceed "
                                  + std::to_string(limits.max_generators));
        }
      }
    }
    auto q     = b.finish();
    q.complete = complete;
    return q;
  }

  Perm evaluate(PcElem const& x, std::vector<Perm> const& images, std::size_t degree) {
    Perm r(degree);
    for (std::size_t i = 0; i < x.e.size(); ++i) {
      if (x.e[i]) {
        r *= images[i].pow(x.e[i]);
      }
    }
    return r;
  }

  namespace {
    Perm evaluate_word(PcWord const& w, std::vector<Perm> const& images,
                       std::size_t degree) {
      Perm r(degree);
      for (auto [g, e] : w) {
        r *= images[g].pow(e);
      }
      return r;
    }
  }  // namespace

  std::vector<Perm> pc_images(PQuotient const& q, std::vector<Perm> const& fp_images,
                              std::size_t degree) {
    auto const        p = q.group->prime();
    std::vector<Perm> out;
    for (auto const& d : q.definitions) {
      auto rest = evaluate_word(d.rest, out, degree).inverse();
      switch (d.kind) {
        case PcDefinition::Kind::generator:
          out.push_back(fp_images[d.a]);
          break;
        case PcDefinition::Kind::image:
          out.push_back(rest * fp_images[d.a]);
          break;
        case PcDefinition::Kind::power:
          out.push_back(rest * out[d.a].pow(p));
          break;
        case PcDefinition::Kind::commutator:
          out.push_back(rest * commutator(out[d.a], out[d.b]));
          break;
      }
    }
    return out;
  }

  bool respects_relations(PcGroup const& g, std::vector<Perm> const& images,
                          std::size_t degree) {
    auto const& c = g.collector();
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (images[i].pow(g.prime()) != evaluate_word(c.power(i), images, degree)) {
        return false;
      }
      for (std::size_t j = i + 1; j < g.size(); ++j) {
        if (commutator(images[j], images[i])
            != evaluate_word(c.conj(i, j), images, degree)) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace tensoria
