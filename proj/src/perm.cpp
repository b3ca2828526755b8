#include "tensoria/perm.hpp"

#include <numeric>

#include "tensoria/errors.hpp"

namespace tensoria {

  Perm::Perm(std::size_t degree) : _img(degree) {
    std::iota(_img.begin(), _img.end(), point_type(0));
  }

  Perm::Perm(std::vector<point_type> images) : _img(std::move(images)) {
    std::vector<bool> seen(_img.size(), false);
    for (auto p : _img) {
      if (p >= _img.size() || seen[p]) {
        throw InputError("not a permutation");
      }
      seen[p] = true;
    }
  }

  Perm Perm::from_cycles(std::size_t                                 degree,
                         std::vector<std::vector<point_type>> const& cycles) {
    std::vector<point_type> img(degree);
    std::iota(img.begin(), img.end(), point_type(0));
    std::vector<bool> used(degree, false);
    for (auto const& c : cycles) {
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] >= degree || used[c[i]]) {
          throw InputError("invalid cycle");
        }
        used[c[i]]  = true;
        img[c[i]]   = c[(i + 1) % c.size()];
      }
    }
    return Perm(std::move(img));
  }

  bool Perm::is_identity() const noexcept {
    for (std::size_t i = 0; i < _img.size(); ++i) {
      if (_img[i] != i) {
        return false;
      }
    }
    return true;
  }

  Perm Perm::inverse() const {
    Perm r;
    r._img.resize(_img.size());
    for (std::size_t i = 0; i < _img.size(); ++i) {
      r._img[_img[i]] = static_cast<point_type>(i);
    }
    return r;
  }

  Perm Perm::pow(std::int64_t k) const {
    Perm base = k < 0 ? inverse() : *this;
    if (k < 0) {
      k = -k;
    }
    Perm result(_img.size());
    while (k > 0) {
      if (k & 1) {
        result *= base;
      }
      base *= base;
      k >>= 1;
    }
    return result;
  }

  BigInt Perm::order() const {
    BigInt            o = 1;
    std::vector<bool> seen(_img.size(), false);
    for (std::size_t i = 0; i < _img.size(); ++i) {
      if (seen[i]) {
        continue;
      }
      std::size_t len = 0;
      for (auto j = static_cast<point_type>(i); !seen[j]; j = _img[j]) {
        seen[j] = true;
        ++len;
      }
      o = boost::multiprecision::lcm(o, BigInt(len));
    }
    return o;
  }

  Perm Perm::conjugate(Perm const& b) const {
    // b^-1 a b maps p^b to (p^a)^b.
    Perm r;
    r._img.resize(_img.size());
    for (std::size_t i = 0; i < _img.size(); ++i) {
      r._img[b._img[i]] = b._img[_img[i]];
    }
    return r;
  }

  Perm Perm::widened(std::size_t degree, std::size_t offset) const {
    Perm r(degree);
    for (std::size_t i = 0; i < _img.size(); ++i) {
      r._img[i + offset] = static_cast<point_type>(_img[i] + offset);
    }
    return r;
  }

  Perm Perm::restricted(std::size_t offset, std::size_t degree) const {
    Perm r;
    r._img.resize(degree);
    for (std::size_t i = 0; i < degree; ++i) {
      auto v = _img[i + offset];
      if (v < offset || v >= offset + degree) {
        throw InternalError("restriction to a non-invariant set");
      }
      r._img[i] = static_cast<point_type>(v - offset);
    }
    return r;
  }

  Perm& Perm::operator*=(Perm const& b) {
    if (&b == this) {
      Perm copy = b;
      return *this *= copy;
    }
    for (auto& x : _img) {
      x = b._img[x];
    }
    return *this;
  }

  Perm operator*(Perm const& a, Perm const& b) {
    Perm r = a;
    r *= b;
    return r;
  }

  std::string Perm::to_string() const {
    std::string       out;
    std::vector<bool> seen(_img.size(), false);
    for (std::size_t i = 0; i < _img.size(); ++i) {
      if (seen[i] || _img[i] == i) {
        continue;
      }
      out += '(';
      bool first = true;
      for (auto j = static_cast<point_type>(i); !seen[j]; j = _img[j]) {
        seen[j] = true;
        if (!first) {
          out += ' ';
        }
        out += std::to_string(j + 1);
        first = false;
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  std::size_t Perm::hash() const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto x : _img) {
      h ^= x;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }

  Perm commutator(Perm const& a, Perm const& b) {
    return a.inverse() * b.inverse() * a * b;
  }

  Perm direct_sum(Perm const& a, Perm const& b) {
    std::vector<point_type> img(a.degree() + b.degree());
    for (std::size_t i = 0; i < a.degree(); ++i) {
      img[i] = a[static_cast<point_type>(i)];
    }
    for (std::size_t i = 0; i < b.degree(); ++i) {
      img[a.degree() + i]
          = static_cast<point_type>(b[static_cast<point_type>(i)] + a.degree());
    }
    return Perm::unchecked(std::move(img));
  }

}  // namespace tensoria
