#ifndef AISR_SEMIRING_HPP_
#define AISR_SEMIRING_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "error.hpp"

namespace aisr {

  // Index of an element in a carrier.
  using Elem = std::uint32_t;

  inline constexpr Elem kNoElem = std::numeric_limits<Elem>::max();

  // A finite algebra with two binary operations given by Cayley tables.
  //
  // The constructor only checks the shape of the data (square tables, entries
  // inside the carrier, distinct names); the semiring axioms are checked by
  // verify_semiring_axioms, which reports violations rather than throwing.
  //
  // The additive top (an element t with t + x = t for all x) is computed on
  // construction and kept apart from the designated zero, which is the
  // additive identity of the {+, ., 0} signature.
  class FiniteSemiring {
   public:
    FiniteSemiring() = default;

    FiniteSemiring(std::vector<std::string> names,
                   std::vector<Elem>        add,
                   std::vector<Elem>        mul,
                   std::optional<Elem>      one  = std::nullopt,
                   std::optional<Elem>      zero = std::nullopt)
        : _names(std::move(names)),
          _add(std::move(add)),
          _mul(std::move(mul)),
          _one(one),
          _zero(zero) {
      std::size_t const n = _names.size();
      if (n == 0) {
        throw StructureError("semiring: empty carrier");
      }
      if (_add.size() != n * n || _mul.size() != n * n) {
        throw StructureError("semiring: tables must be " + std::to_string(n)
                             + "x" + std::to_string(n));
      }
      for (std::size_t i = 0; i < n * n; ++i) {
        if (_add[i] >= n) {
          throw StructureError("semiring: add entry (" + std::to_string(i / n)
                               + "," + std::to_string(i % n)
                               + ") outside the carrier");
        }
        if (_mul[i] >= n) {
          throw StructureError("semiring: mul entry (" + std::to_string(i / n)
                               + "," + std::to_string(i % n)
                               + ") outside the carrier");
        }
      }
      if ((_one && *_one >= n) || (_zero && *_zero >= n)) {
        throw StructureError("semiring: designated constant outside carrier");
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (!_index.emplace(_names[i], static_cast<Elem>(i)).second) {
          throw StructureError("semiring: duplicate element name '"
                               + _names[i] + "'");
        }
      }
      compute_annotations();
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

    std::optional<Elem> find(std::string const& name) const {
      auto it = _index.find(name);
      if (it == _index.end()) {
        return std::nullopt;
      }
      return it->second;
    }

    Elem at(std::string const& name) const {
      auto x = find(name);
      if (!x) {
        throw Error("no element named '" + name + "'");
      }
      return *x;
    }

    Elem add(Elem x, Elem y) const noexcept {
      return _add[x * _names.size() + y];
    }

    Elem mul(Elem x, Elem y) const noexcept {
      return _mul[x * _names.size() + y];
    }

    std::vector<Elem> const& add_table() const noexcept {
      return _add;
    }

    std::vector<Elem> const& mul_table() const noexcept {
      return _mul;
    }

    std::optional<Elem> one() const noexcept {
      return _one;
    }

    std::optional<Elem> zero() const noexcept {
      return _zero;
    }

    // Additive top: t + x = t for every x.
    std::optional<Elem> top() const noexcept {
      return _top;
    }

    // At least two elements, every pair of distinct elements sums to the top,
    // and the top absorbs multiplicatively.
    bool is_flat() const noexcept {
      return _flat;
    }

    // x <= y iff x + y = y.
    bool leq(Elem x, Elem y) const noexcept {
      return add(x, y) == y;
    }

    Elem power(Elem x, std::size_t k) const {
      if (k == 0) {
        throw Error("power: exponent must be positive");
      }
      Elem r = x;
      for (std::size_t i = 1; i < k; ++i) {
        r = mul(r, x);
      }
      return r;
    }

    // The designated identity, or otherwise the first element acting as a
    // two-sided multiplicative identity.
    std::optional<Elem> identity() const noexcept {
      if (_one) {
        return _one;
      }
      std::size_t const n = size();
      for (Elem e = 0; e < n; ++e) {
        bool ok = true;
        for (Elem x = 0; x < n && ok; ++x) {
          ok = mul(e, x) == x && mul(x, e) == x;
        }
        if (ok) {
          return e;
        }
      }
      return std::nullopt;
    }

    FiniteSemiring with_constants(std::optional<Elem> one,
                                  std::optional<Elem> zero) const {
      return FiniteSemiring(_names, _add, _mul, one, zero);
    }

    FiniteSemiring renamed(std::vector<std::string> names) const {
      return FiniteSemiring(std::move(names), _add, _mul, _one, _zero);
    }

    friend bool operator==(FiniteSemiring const& a, FiniteSemiring const& b) {
      return a._names == b._names && a._add == b._add && a._mul == b._mul
             && a._one == b._one && a._zero == b._zero;
    }

   private:
    void compute_annotations() {
      std::size_t const n = size();
      _top.reset();
      for (Elem t = 0; t < n && !_top; ++t) {
        bool ok = true;
        for (Elem x = 0; x < n && ok; ++x) {
          ok = add(t, x) == t && add(x, t) == t;
        }
        if (ok) {
          _top = t;
        }
      }
      _flat = false;
      if (_top && n >= 2) {
        _flat = true;
        for (Elem x = 0; x < n && _flat; ++x) {
          _flat = mul(*_top, x) == *_top && mul(x, *_top) == *_top
                  && add(x, x) == x;
          for (Elem y = 0; y < n && _flat; ++y) {
            if (x != y && add(x, y) != *_top) {
              _flat = false;
            }
          }
        }
      }
    }

    std::vector<std::string>              _names;
    std::vector<Elem>                     _add;
    std::vector<Elem>                     _mul;
    std::optional<Elem>                   _one;
    std::optional<Elem>                   _zero;
    std::optional<Elem>                   _top;
    bool                                  _flat = false;
    std::unordered_map<std::string, Elem> _index;
  };

  // Builds a semiring from table-filling functions.
  template <typename AddFn, typename MulFn>
  FiniteSemiring make_semiring(std::vector<std::string> names,
                               AddFn&&                  addfn,
                               MulFn&&                  mulfn,
                               std::optional<Elem>      one  = std::nullopt,
                               std::optional<Elem>      zero = std::nullopt) {
    std::size_t const n = names.size();
    std::vector<Elem> add(n * n), mul(n * n);
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        add[x * n + y] = addfn(x, y);
        mul[x * n + y] = mulfn(x, y);
      }
    }
    return FiniteSemiring(
        std::move(names), std::move(add), std::move(mul), one, zero);
  }

  ////////////////////////////////////////////////////////////////////////
  // Axiom verification
  ////////////////////////////////////////////////////////////////////////

  enum class Axiom {
    add_associative,
    add_commutative,
    add_idempotent,
    mul_associative,
    left_distributive,
    right_distributive,
    one_identity,
    zero_additive_identity,
    zero_absorbing
  };

  inline char const* to_string(Axiom a) {
    switch (a) {
      case Axiom::add_associative:
        return "add-associative";
      case Axiom::add_commutative:
        return "add-commutative";
      case Axiom::add_idempotent:
        return "add-idempotent";
      case Axiom::mul_associative:
        return "mul-associative";
      case Axiom::left_distributive:
        return "left-distributive";
      case Axiom::right_distributive:
        return "right-distributive";
      case Axiom::one_identity:
        return "one-identity";
      case Axiom::zero_additive_identity:
        return "zero-additive-identity";
      case Axiom::zero_absorbing:
        return "zero-absorbing";
    }
    return "?";
  }

  struct AxiomViolation {
    Axiom             axiom;
    std::vector<Elem> witness;
  };

  struct AxiomReport {
    std::vector<AxiomViolation> violations;  // first `limit` found
    std::size_t                 total = 0;   // all violations found

    bool ok() const noexcept {
      return total == 0;
    }

    bool contains(Axiom a) const {
      return std::any_of(violations.begin(),
                         violations.end(),
                         [a](auto const& v) { return v.axiom == a; });
    }
  };

  inline std::string describe(FiniteSemiring const& S,
                              AxiomViolation const& v) {
    std::string out = to_string(v.axiom);
    out += " fails at (";
    for (std::size_t i = 0; i < v.witness.size(); ++i) {
      out += (i ? "," : "") + S.name(v.witness[i]);
    }
    return out + ")";
  }

  // Exhaustive check of the ai-semiring axioms plus the laws of any
  // designated constant. O(n^3).
  inline AxiomReport verify_semiring_axioms(FiniteSemiring const& S,
                                            std::size_t limit = 64) {
    AxiomReport         r;
    std::size_t const   n = S.size();
    auto report = [&](Axiom a, std::vector<Elem> w) {
      if (r.violations.size() < limit) {
        r.violations.push_back({a, std::move(w)});
      }
      ++r.total;
    };
    for (Elem x = 0; x < n; ++x) {
      if (S.add(x, x) != x) {
        report(Axiom::add_idempotent, {x});
      }
      for (Elem y = 0; y < n; ++y) {
        if (S.add(x, y) != S.add(y, x)) {
          report(Axiom::add_commutative, {x, y});
        }
      }
    }
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        Elem const xy_add = S.add(x, y);
        Elem const xy_mul = S.mul(x, y);
        for (Elem z = 0; z < n; ++z) {
          if (S.add(xy_add, z) != S.add(x, S.add(y, z))) {
            report(Axiom::add_associative, {x, y, z});
          }
          if (S.mul(xy_mul, z) != S.mul(x, S.mul(y, z))) {
            report(Axiom::mul_associative, {x, y, z});
          }
          if (S.mul(x, S.add(y, z)) != S.add(xy_mul, S.mul(x, z))) {
            report(Axiom::left_distributive, {x, y, z});
          }
          if (S.mul(xy_add, z) != S.add(S.mul(x, z), S.mul(y, z))) {
            report(Axiom::right_distributive, {x, y, z});
          }
        }
      }
    }
    if (auto one = S.one()) {
      for (Elem x = 0; x < n; ++x) {
        if (S.mul(*one, x) != x || S.mul(x, *one) != x) {
          report(Axiom::one_identity, {*one, x});
        }
      }
    }
    if (auto zero = S.zero()) {
      for (Elem x = 0; x < n; ++x) {
        if (S.add(*zero, x) != x) {
          report(Axiom::zero_additive_identity, {*zero, x});
        }
        if (S.mul(*zero, x) != *zero || S.mul(x, *zero) != *zero) {
          report(Axiom::zero_absorbing, {*zero, x});
        }
      }
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Order structure
  ////////////////////////////////////////////////////////////////////////

  struct OrderProfile {
    std::size_t         size = 0;
    std::vector<bool>   leq;  // row-major, leq[x * size + y] iff x <= y
    std::size_t         height = 0;
    bool                is_flat = false;
    std::optional<Elem> top;

    bool le(Elem x, Elem y) const {
      return leq[x * size + y];
    }
  };

  // Precondition: S satisfies the semilattice axioms for +.
  inline OrderProfile order_profile(FiniteSemiring const& S) {
    OrderProfile      p;
    std::size_t const n = S.size();
    p.size              = n;
    p.leq.assign(n * n, false);
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        p.leq[x * n + y] = S.leq(x, y);
      }
    }
    // Longest chain ending at each element; elements sorted by the number of
    // elements below them is a linear extension of the order.
    std::vector<std::size_t> below(n, 0);
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        below[x] += p.leq[y * n + x] ? 1 : 0;
      }
    }
    std::vector<Elem> order(n);
    for (Elem x = 0; x < n; ++x) {
      order[x] = x;
    }
    std::stable_sort(order.begin(), order.end(), [&](Elem a, Elem b) {
      return below[a] < below[b];
    });
    std::vector<std::size_t> chain(n, 0);
    for (Elem y : order) {
      for (Elem x = 0; x < n; ++x) {
        if (x != y && p.leq[x * n + y]) {
          chain[y] = std::max(chain[y], chain[x] + 1);
        }
      }
      p.height = std::max(p.height, chain[y]);
    }
    p.is_flat = S.is_flat();
    p.top     = S.top();
    return p;
  }

  ////////////////////////////////////////////////////////////////////////
  // Maps between semirings
  ////////////////////////////////////////////////////////////////////////

  struct MapVerdict {
    bool        homomorphism = false;
    bool        injective    = false;
    bool        surjective   = false;
    std::string violation;  // first failure of the homomorphism laws

    bool isomorphism() const noexcept {
      return homomorphism && injective && surjective;
    }
  };

  // Checks f(x+y) = f(x)+f(y), f(xy) = f(x)f(y) and, where both sides
  // designate a constant, that it is preserved. Reports bijectivity.
  inline MapVerdict verify_canonical_map(FiniteSemiring const& S,
                                         FiniteSemiring const& T,
                                         std::span<Elem const> f) {
    MapVerdict        v;
    std::size_t const n = S.size();
    if (f.size() != n) {
      v.violation = "map is not total on the source carrier";
      return v;
    }
    for (Elem x = 0; x < n; ++x) {
      if (f[x] >= T.size()) {
        v.violation = "image of " + S.name(x) + " outside the target";
        return v;
      }
    }
    v.homomorphism = true;
    for (Elem x = 0; x < n && v.homomorphism; ++x) {
      for (Elem y = 0; y < n && v.homomorphism; ++y) {
        if (f[S.add(x, y)] != T.add(f[x], f[y])) {
          v.homomorphism = false;
          v.violation = "f(" + S.name(x) + "+" + S.name(y) + ") = "
                        + T.name(f[S.add(x, y)]) + " but f(" + S.name(x)
                        + ")+f(" + S.name(y)
                        + ") = " + T.name(T.add(f[x], f[y]));
        } else if (f[S.mul(x, y)] != T.mul(f[x], f[y])) {
          v.homomorphism = false;
          v.violation = "f(" + S.name(x) + "*" + S.name(y) + ") = "
                        + T.name(f[S.mul(x, y)]) + " but f(" + S.name(x)
                        + ")*f(" + S.name(y)
                        + ") = " + T.name(T.mul(f[x], f[y]));
        }
      }
    }
    if (v.homomorphism && S.one() && T.one() && f[*S.one()] != *T.one()) {
      v.homomorphism = false;
      v.violation    = "designated one not preserved";
    }
    if (v.homomorphism && S.zero() && T.zero() && f[*S.zero()] != *T.zero()) {
      v.homomorphism = false;
      v.violation    = "designated zero not preserved";
    }
    std::vector<bool> hit(T.size(), false);
    v.injective = true;
    for (Elem x = 0; x < n; ++x) {
      if (hit[f[x]]) {
        v.injective = false;
      }
      hit[f[x]] = true;
    }
    v.surjective = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
    return v;
  }

  struct MapExtension {
    std::vector<Elem> map;  // kNoElem where the generators do not reach
    bool              consistent = true;
    std::string       conflict;

    bool total() const {
      return std::find(map.begin(), map.end(), kNoElem) == map.end();
    }
  };

  // Extends gens[i] -> images[i] along the operations of S. Stops at the
  // first element that receives two different images.
  inline MapExtension extend_to_homomorphism(FiniteSemiring const&  S,
                                             std::span<Elem const>  gens,
                                             FiniteSemiring const&  T,
                                             std::span<Elem const>  images) {
    MapExtension ext;
    ext.map.assign(S.size(), kNoElem);
    if (gens.size() != images.size()) {
      throw Error("extend_to_homomorphism: generator/image count mismatch");
    }
    std::vector<Elem> reached;
    auto assign = [&](Elem x, Elem fx) {
      if (ext.map[x] == kNoElem) {
        ext.map[x] = fx;
        reached.push_back(x);
      } else if (ext.map[x] != fx) {
        ext.consistent = false;
        ext.conflict   = S.name(x) + " maps to both " + T.name(ext.map[x])
                       + " and " + T.name(fx);
      }
    };
    for (std::size_t i = 0; i < gens.size() && ext.consistent; ++i) {
      assign(gens[i], images[i]);
    }
    for (std::size_t i = 0; i < reached.size() && ext.consistent; ++i) {
      for (std::size_t j = 0; j <= i && ext.consistent; ++j) {
        Elem const x = reached[i], y = reached[j];
        Elem const fx = ext.map[x], fy = ext.map[y];
        assign(S.add(x, y), T.add(fx, fy));
        assign(S.mul(x, y), T.mul(fx, fy));
        assign(S.mul(y, x), T.mul(fy, fx));
      }
    }
    return ext;
  }

  // Cyclic: g^n = g for some n >= 2.
  inline bool is_cyclic(FiniteSemiring const& S, Elem g) {
    Elem p = g;
    for (std::size_t i = 0; i <= S.size(); ++i) {
      p = S.mul(p, g);
      if (p == g) {
        return true;
      }
    }
    return false;
  }

}  // namespace aisr

#endif  // AISR_SEMIRING_HPP_
