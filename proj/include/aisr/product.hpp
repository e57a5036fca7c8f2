#ifndef AISR_PRODUCT_HPP_
#define AISR_PRODUCT_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "caps.hpp"
#include "error.hpp"
#include "semiring.hpp"

namespace aisr {

  using Tuple = std::vector<Elem>;

  struct TupleHash {
    std::size_t operator()(Tuple const& t) const noexcept {
      std::size_t h = 0xcbf29ce484222325ULL;
      for (Elem x : t) {
        h ^= x;
        h *= 0x100000001b3ULL;
      }
      return h;
    }
  };

  // "(a)(1)(0)"
  inline std::string tuple_name(std::span<FiniteSemiring const* const> fs,
                                Tuple const&                          t) {
    std::string out;
    for (std::size_t i = 0; i < t.size(); ++i) {
      out += "(" + fs[i]->name(t[i]) + ")";
    }
    return out;
  }

  // Full direct product, carrier in mixed-radix order with the last
  // coordinate varying fastest. Constants lift when every factor has them.
  inline FiniteSemiring direct_product(
      std::vector<FiniteSemiring const*> const& fs,
      Caps const&                               caps = {}) {
    if (fs.empty()) {
      throw PreconditionError("direct product of no factors");
    }
    std::uint64_t total = 1;
    for (auto const* f : fs) {
      total *= f->size();
      if (total > caps.max_carrier) {
        throw SizeError("direct product exceeds carrier cap of "
                        + std::to_string(caps.max_carrier));
      }
    }
    std::size_t const  n = total;
    std::size_t const  P = fs.size();
    std::vector<Tuple> tuples(n, Tuple(P));
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t r = i;
      for (std::size_t c = P; c-- > 0;) {
        tuples[i][c] = r % fs[c]->size();
        r /= fs[c]->size();
      }
    }
    auto index = [&](Tuple const& t) {
      std::size_t r = 0;
      for (std::size_t c = 0; c < P; ++c) {
        r = r * fs[c]->size() + t[c];
      }
      return static_cast<Elem>(r);
    };
    std::vector<std::string> names(n);
    for (std::size_t i = 0; i < n; ++i) {
      names[i] = tuple_name(fs, tuples[i]);
    }
    std::vector<Elem> add(n * n), mul(n * n);
    Tuple             t(P);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t c = 0; c < P; ++c) {
          t[c] = fs[c]->add(tuples[i][c], tuples[j][c]);
        }
        add[i * n + j] = index(t);
        for (std::size_t c = 0; c < P; ++c) {
          t[c] = fs[c]->mul(tuples[i][c], tuples[j][c]);
        }
        mul[i * n + j] = index(t);
      }
    }
    auto lift = [&](auto get) -> std::optional<Elem> {
      Tuple c(P);
      for (std::size_t k = 0; k < P; ++k) {
        auto e = get(*fs[k]);
        if (!e) {
          return std::nullopt;
        }
        c[k] = *e;
      }
      return index(c);
    };
    return FiniteSemiring(
        std::move(names),
        std::move(add),
        std::move(mul),
        lift([](FiniteSemiring const& f) { return f.one(); }),
        lift([](FiniteSemiring const& f) { return f.zero(); }));
  }

  inline FiniteSemiring direct_power(FiniteSemiring const& S,
                                     std::size_t           P,
                                     Caps const&           caps = {}) {
    if (P == 0) {
      throw PreconditionError("direct power needs at least one factor");
    }
    return direct_product(std::vector<FiniteSemiring const*>(P, &S), caps);
  }

  // Subsemiring of a product generated by explicit tuples, built without
  // enumerating the whole product.
  //
  // With collapse_top every tuple having a top coordinate is replaced by a
  // single absorbing class named "0": the result is then the ideal quotient
  // by the zero-coordinate ideal. That set is an ideal and a filter of any
  // subsemiring as soon as each factor's top absorbs both operations, which
  // is checked here.
  struct TupleClosure {
    FiniteSemiring        semiring;
    std::vector<Tuple>    tuples;  // empty tuple for the collapsed class
    std::optional<Elem>   collapsed;
    std::vector<Elem>     generators;  // element of each input tuple
  };

  inline TupleClosure tuple_closure(
      std::vector<FiniteSemiring const*> const& fs,
      std::vector<Tuple> const&                 gens,
      bool                                      collapse_top,
      Caps const&                               caps = {}) {
    std::size_t const P = fs.size();
    if (P == 0) {
      throw PreconditionError("tuple closure over no factors");
    }
    for (auto const& g : gens) {
      if (g.size() != P) {
        throw PreconditionError("generator tuple has wrong length");
      }
      for (std::size_t c = 0; c < P; ++c) {
        if (g[c] >= fs[c]->size()) {
          throw PreconditionError("generator coordinate outside its factor");
        }
      }
    }
    if (collapse_top) {
      for (auto const* f : fs) {
        auto t = f->top();
        if (!t) {
          throw PreconditionError("factor without additive top");
        }
        for (Elem x = 0; x < f->size(); ++x) {
          if (f->mul(*t, x) != *t || f->mul(x, *t) != *t) {
            throw PreconditionError("factor top is not multiplicatively "
                                    "absorbing");
          }
        }
      }
    }

    TupleClosure                                 out;
    std::vector<Tuple>                           elems;
    std::unordered_map<Tuple, Elem, TupleHash>   index;
    std::optional<Elem>                          coll;

    auto is_collapsed = [&](Tuple const& t) {
      if (!collapse_top) {
        return false;
      }
      for (std::size_t c = 0; c < P; ++c) {
        if (t[c] == *fs[c]->top()) {
          return true;
        }
      }
      return false;
    };
    auto intern = [&](Tuple const& t) -> Elem {
      if (is_collapsed(t)) {
        if (!coll) {
          coll = static_cast<Elem>(elems.size());
          elems.emplace_back();
        }
        return *coll;
      }
      auto it = index.find(t);
      if (it != index.end()) {
        return it->second;
      }
      if (elems.size() >= caps.max_carrier) {
        throw SizeError("generated subsemiring exceeds carrier cap of "
                        + std::to_string(caps.max_carrier));
      }
      Elem e = static_cast<Elem>(elems.size());
      elems.push_back(t);
      index.emplace(t, e);
      return e;
    };
    Tuple scratch(P);
    auto  op = [&](Elem x, Elem y, bool mul) -> Elem {
      if (coll && (x == *coll || y == *coll)) {
        return *coll;
      }
      for (std::size_t c = 0; c < P; ++c) {
        scratch[c] = mul ? fs[c]->mul(elems[x][c], elems[y][c])
                         : fs[c]->add(elems[x][c], elems[y][c]);
      }
      return intern(scratch);
    };

    for (auto const& g : gens) {
      out.generators.push_back(intern(g));
    }
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        Elem const x = static_cast<Elem>(i), y = static_cast<Elem>(j);
        op(x, y, false);
        op(x, y, true);
        op(y, x, true);
      }
    }

    std::size_t const        n = elems.size();
    std::vector<std::string> names(n);
    for (std::size_t i = 0; i < n; ++i) {
      names[i] = (coll && i == *coll) ? "0" : tuple_name(fs, elems[i]);
    }
    std::vector<Elem> add(n * n), mul(n * n);
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        add[x * n + y] = op(x, y, false);
        mul[x * n + y] = op(x, y, true);
      }
    }
    out.semiring  = FiniteSemiring(std::move(names), std::move(add),
                                  std::move(mul));
    out.tuples    = std::move(elems);
    out.collapsed = coll;
    return out;
  }

}  // namespace aisr

#endif  // AISR_PRODUCT_HPP_
