#ifndef TENSORIA_PCGROUP_HPP_
#define TENSORIA_PCGROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "tensoria/bigint.hpp"
#include "tensoria/presentation.hpp"

namespace tensoria {

  // Normal word a_{i1}^{e1} a_{i2}^{e2} ... with increasing indices and
  // exponents in 1..p-1.
  using PcWord = std::vector<std::pair<std::uint32_t, std::uint32_t>>;
  // Central elementary abelian tail generators and their coefficients.
  using TailVec = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

  // Collection in a power-conjugate presentation of a finite p-group with
  // generators a_0..a_{n-1} of relative order p:
  //   a_i^p = power(i),   a_j^{a_i} = a_j conj(i, j)   (i < j),
  // optionally extended by m central tail generators of order p that the
  // relations may carry.  Elements are exponent vectors.
  class Collector {
   public:
    struct Elem {
      std::vector<std::uint8_t> e;   // exponents of a_0..a_{n-1}
      std::vector<std::uint8_t> t;   // tail coefficients
    };

    Collector() = default;
    Collector(std::uint32_t p, std::size_t n, std::size_t tails = 0);

    std::uint32_t prime() const noexcept {
      return _p;
    }
    std::size_t size() const noexcept {
      return _n;
    }
    std::size_t num_tails() const noexcept {
      return _m;
    }

    void set_power(std::size_t i, PcWord w, TailVec t = {});
    void set_conj(std::size_t i, std::size_t j, PcWord w, TailVec t = {});
    PcWord const& power(std::size_t i) const {
      return _pow[i];
    }
    TailVec const& power_tail(std::size_t i) const {
      return _pow_tail[i];
    }
    PcWord const& conj(std::size_t i, std::size_t j) const {
      return _conj[i * _n + j];
    }
    TailVec const& conj_tail(std::size_t i, std::size_t j) const {
      return _conj_tail[i * _n + j];
    }

    Elem identity() const;
    Elem generator(std::size_t i) const;
    Elem from_word(PcWord const& w) const;
    static PcWord to_word(Elem const& x);

    // x <- x * a_g^k
    void mul_gen(Elem& x, std::uint32_t g, std::uint32_t k = 1) const;
    // x <- x * y
    void mul(Elem& x, Elem const& y) const;
    Elem product(Elem x, Elem const& y) const {
      mul(x, y);
      return x;
    }
    Elem inverse(Elem const& x) const;
    Elem power(Elem const& x, std::uint64_t k) const;
    Elem commutator(Elem const& x, Elem const& y) const;
    Elem conjugate(Elem const& x, Elem const& y) const;
    bool is_identity(Elem const& x) const;

   private:
    void add_tails(Elem& x, TailVec const& t, std::uint32_t times = 1) const;

    std::uint32_t        _p = 2;
    std::size_t          _n = 0;
    std::size_t          _m = 0;
    std::vector<PcWord>  _pow;
    std::vector<TailVec> _pow_tail;
    std::vector<PcWord>  _conj;
    std::vector<TailVec> _conj_tail;
  };

  using PcElem = Collector::Elem;

  // Finite p-group given by a consistent pc presentation.
  class PcGroup {
   public:
    PcGroup() = default;
    explicit PcGroup(Collector c) : _c(std::move(c)) {}

    Collector const& collector() const noexcept {
      return _c;
    }
    std::uint32_t prime() const noexcept {
      return _c.prime();
    }
    std::size_t size() const noexcept {
      return _c.size();
    }
    BigInt order() const;

    PcElem identity() const {
      return _c.identity();
    }
    PcElem generator(std::size_t i) const {
      return _c.generator(i);
    }
    PcElem mul(PcElem const& x, PcElem const& y) const {
      return _c.product(x, y);
    }
    PcElem inverse(PcElem const& x) const {
      return _c.inverse(x);
    }
    PcElem power(PcElem const& x, std::uint64_t k) const {
      return _c.power(x, k);
    }
    PcElem commutator(PcElem const& x, PcElem const& y) const {
      return _c.commutator(x, y);
    }
    PcElem conjugate(PcElem const& x, PcElem const& y) const {
      return _c.conjugate(x, y);
    }
    bool is_identity(PcElem const& x) const {
      return _c.is_identity(x);
    }

    // Relators a_i^p = w and [a_j, a_i] = w as words over names.
    Presentation presentation(std::vector<std::string> const& names) const;

    // First failing triple of the standard consistency tests, or empty.
    std::string consistency_failure() const;

   private:
    Collector _c;
  };

  // Induced generating sequence of a subgroup: one element per leading
  // position, leading exponent 1, closed under p-th powers and
  // commutators.  Element i of a subgroup is u_0^{c_0} ... u_{r-1}^{c_{r-1}}.
  class PcSubgroup {
   public:
    // The whole group.
    explicit PcSubgroup(std::shared_ptr<PcGroup const> g);
    PcSubgroup(std::shared_ptr<PcGroup const> g, std::vector<PcElem> const& gens);

    PcGroup const& group() const noexcept {
      return *_g;
    }

    std::vector<PcElem> const& generators() const noexcept {
      return _gens;
    }
    std::size_t size() const noexcept {
      return _gens.size();
    }
    BigInt order() const;
    bool   contains(PcElem const& x) const;
    // Exponents over generators(); throws InternalError for non-members.
    std::vector<std::uint32_t> coordinates(PcElem const& x) const;
    // Returns false if x was already a member.
    bool add(PcElem const& x);
    // Closure under conjugation by the group's generators.
    void normal_closure();
    bool equals(PcSubgroup const& other) const;

    // Pc presentation on generators() (coordinates as exponents).
    PcGroup as_group() const;

   private:
    std::uint32_t lead(PcElem const& x) const;
    // Left-divides x by subgroup generators; returns the remainder.
    PcElem sift(PcElem x, std::vector<std::uint32_t>* coords) const;
    void   insert(PcElem x);

    std::shared_ptr<PcGroup const> _g;
    std::vector<PcElem>            _gens;       // sorted by lead
    std::vector<PcElem>            _inv;        // their inverses
    std::vector<std::int64_t>      _at;         // lead -> index in _gens
  };

}  // namespace tensoria

#endif  // TENSORIA_PCGROUP_HPP_
