#ifndef AISR_SEMIGROUP_HPP_
#define AISR_SEMIGROUP_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "error.hpp"
#include "semiring.hpp"

namespace aisr {

  // A finite semigroup given by its Cayley table. The constructor rejects
  // tables that are out of range or not associative.
  class FiniteSemigroup {
   public:
    FiniteSemigroup() = default;

    FiniteSemigroup(std::vector<std::string> names, std::vector<Elem> mul)
        : _names(std::move(names)), _mul(std::move(mul)) {
      std::size_t const n = _names.size();
      if (n == 0) {
        throw StructureError("semigroup: empty carrier");
      }
      if (_mul.size() != n * n) {
        throw StructureError("semigroup: table must be " + std::to_string(n)
                             + "x" + std::to_string(n));
      }
      for (Elem v : _mul) {
        if (v >= n) {
          throw StructureError("semigroup: entry outside the carrier");
        }
      }
      std::unordered_set<std::string> seen;
      for (auto const& s : _names) {
        if (!seen.insert(s).second) {
          throw StructureError("semigroup: duplicate element name '" + s
                               + "'");
        }
      }
      for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
          for (Elem z = 0; z < n; ++z) {
            if (this->mul(this->mul(x, y), z) != this->mul(x, this->mul(y, z))) {
              throw StructureError("semigroup: not associative at ("
                                   + _names[x] + "," + _names[y] + ","
                                   + _names[z] + ")");
            }
          }
        }
      }
    }

    std::size_t size() const noexcept {
      return _names.size();
    }

    std::string const& name(Elem x) const {
      return _names.at(x);
    }

    std::vector<std::string> const& names() const noexcept {
      return _names;
    }

    Elem mul(Elem x, Elem y) const noexcept {
      return _mul[x * _names.size() + y];
    }

    std::vector<Elem> const& mul_table() const noexcept {
      return _mul;
    }

   private:
    std::vector<std::string> _names;
    std::vector<Elem>        _mul;
  };

  // A semigroup together with a two-sided multiplicative zero.
  class SemigroupWithZero {
   public:
    SemigroupWithZero(FiniteSemigroup sg, Elem zero)
        : _sg(std::move(sg)), _zero(zero) {
      if (zero >= _sg.size()) {
        throw StructureError("semigroup with zero: zero outside carrier");
      }
      for (Elem x = 0; x < _sg.size(); ++x) {
        if (_sg.mul(zero, x) != zero || _sg.mul(x, zero) != zero) {
          throw StructureError("semigroup with zero: " + _sg.name(zero)
                               + " does not absorb " + _sg.name(x));
        }
      }
    }

    FiniteSemigroup const& semigroup() const noexcept {
      return _sg;
    }

    Elem zero() const noexcept {
      return _zero;
    }

    std::size_t size() const noexcept {
      return _sg.size();
    }

    Elem mul(Elem x, Elem y) const noexcept {
      return _sg.mul(x, y);
    }

   private:
    FiniteSemigroup _sg;
    Elem            _zero;
  };

  inline FiniteSemigroup multiplicative_reduct(FiniteSemiring const& S) {
    return FiniteSemigroup(S.names(), S.mul_table());
  }

  // The multiplicative reduct with the additive top as zero. Requires a top
  // that absorbs multiplicatively.
  inline SemigroupWithZero multiplicative_reduct_with_top(
      FiniteSemiring const& S) {
    if (!S.top()) {
      throw PreconditionError("semiring has no additive top");
    }
    return SemigroupWithZero(multiplicative_reduct(S), *S.top());
  }

}  // namespace aisr

#endif  // AISR_SEMIGROUP_HPP_
