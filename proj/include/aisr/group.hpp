#ifndef AISR_GROUP_HPP_
#define AISR_GROUP_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "caps.hpp"
#include "constructions.hpp"
#include "error.hpp"
#include "report.hpp"
#include "semigroup.hpp"
#include "semiring.hpp"

namespace aisr {

  // A finite group table. Only the shape is checked on construction; the
  // group axioms are checked by verify_group.
  class FiniteGroup {
   public:
    FiniteGroup() = default;

    FiniteGroup(std::vector<std::string> names,
                std::vector<Elem>        mul,
                Elem                     identity)
        : _names(std::move(names)), _mul(std::move(mul)), _e(identity) {
      std::size_t const n = _names.size();
      if (n == 0) {
        throw StructureError("group: empty carrier");
      }
      if (_mul.size() != n * n) {
        throw StructureError("group: table must be " + std::to_string(n) + "x"
                             + std::to_string(n));
      }
      for (Elem v : _mul) {
        if (v >= n) {
          throw StructureError("group: entry outside the carrier");
        }
      }
      if (_e >= n) {
        throw StructureError("group: identity outside the carrier");
      }
      std::set<std::string> seen;
      for (auto const& s : _names) {
        if (!seen.insert(s).second) {
          throw StructureError("group: duplicate element name '" + s + "'");
        }
      }
      _inv.assign(n, kNoElem);
      for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
          if (this->mul(x, y) == _e && this->mul(y, x) == _e) {
            _inv[x] = y;
            break;
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

    Elem identity() const noexcept {
      return _e;
    }

    // kNoElem where no two-sided inverse exists.
    Elem inverse(Elem x) const {
      return _inv.at(x);
    }

    Elem at(std::string const& nm) const {
      for (Elem x = 0; x < size(); ++x) {
        if (_names[x] == nm) {
          return x;
        }
      }
      throw Error("no group element named '" + nm + "'");
    }

    FiniteSemigroup as_semigroup() const {
      return FiniteSemigroup(_names, _mul);
    }

   private:
    std::vector<std::string> _names;
    std::vector<Elem>        _mul;
    Elem                     _e = 0;
    std::vector<Elem>        _inv;
  };

  struct GroupViolation {
    std::string       axiom;  // "associative", "identity", "inverse"
    std::vector<Elem> witness;
  };

  inline std::vector<GroupViolation> verify_group(FiniteGroup const& G,
                                                  std::size_t limit = 64) {
    std::vector<GroupViolation> out;
    std::size_t const           n = G.size();
    for (Elem x = 0; x < n && out.size() < limit; ++x) {
      if (G.mul(G.identity(), x) != x || G.mul(x, G.identity()) != x) {
        out.push_back({"identity", {x}});
      }
      if (G.inverse(x) == kNoElem) {
        out.push_back({"inverse", {x}});
      }
    }
    for (Elem x = 0; x < n && out.size() < limit; ++x) {
      for (Elem y = 0; y < n && out.size() < limit; ++y) {
        for (Elem z = 0; z < n && out.size() < limit; ++z) {
          if (G.mul(G.mul(x, y), z) != G.mul(x, G.mul(y, z))) {
            out.push_back({"associative", {x, y, z}});
          }
        }
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Standard groups
  ////////////////////////////////////////////////////////////////////////

  template <typename Fn>
  FiniteGroup make_group(std::vector<std::string> names, Fn&& fn,
                         Elem identity = 0) {
    std::size_t const n = names.size();
    std::vector<Elem> mul(n * n);
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        mul[x * n + y] = fn(x, y);
      }
    }
    return FiniteGroup(std::move(names), std::move(mul), identity);
  }

  // 1, g, g2, ...
  inline FiniteGroup cyclic_group(std::size_t n) {
    if (n == 0) {
      throw PreconditionError("cyclic group of order 0");
    }
    std::vector<std::string> names{"1"};
    for (std::size_t i = 1; i < n; ++i) {
      names.push_back(i == 1 ? "g" : "g" + std::to_string(i));
    }
    return make_group(std::move(names), [n](Elem x, Elem y) {
      return static_cast<Elem>((x + y) % n);
    });
  }

  // s^i r^j stored as 3i + j, with r s = s r^2.
  inline FiniteGroup symmetric_group_3() {
    return make_group({"1", "r", "r2", "s", "sr", "sr2"}, [](Elem x, Elem y) {
      Elem i1 = x / 3, j1 = x % 3, i2 = y / 3, j2 = y % 3;
      // r^j1 s^i2 = s^i2 r^(j1 * (-1)^i2)
      Elem j = i2 ? (j2 + 3 - j1) % 3 : (j1 + j2) % 3;
      return static_cast<Elem>(((i1 + i2) % 2) * 3 + j);
    });
  }

  // Units of the quaternions: 1, i, j, k and their negatives m, mi, mj, mk.
  inline FiniteGroup quaternion_group() {
    // unit products on {1,i,j,k} as (sign, index)
    static constexpr int idx[4][4] = {
        {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static constexpr int sgn[4][4] = {
        {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    return make_group({"1", "i", "j", "k", "m", "mi", "mj", "mk"},
                      [](Elem x, Elem y) {
                        int s = (x / 4 + y / 4 + sgn[x % 4][y % 4]) % 2;
                        return static_cast<Elem>(s * 4 + idx[x % 4][y % 4]);
                      });
  }

  // Unitriangular 3x3 matrices over Z_3: (a,b,c)(a',b',c') =
  // (a+a', b+b', c+c'+ab'). Named "u" followed by the digits abc.
  inline FiniteGroup heisenberg_group() {
    std::vector<std::string> names;
    for (int v = 0; v < 27; ++v) {
      names.push_back("u" + std::to_string(v / 9) + std::to_string(v / 3 % 3)
                      + std::to_string(v % 3));
    }
    return make_group(std::move(names), [](Elem x, Elem y) {
      int a = x / 9, b = x / 3 % 3, c = x % 3;
      int a2 = y / 9, b2 = y / 3 % 3, c2 = y % 3;
      int ra = (a + a2) % 3, rb = (b + b2) % 3, rc = (c + c2 + a * b2) % 3;
      return static_cast<Elem>(ra * 9 + rb * 3 + rc);
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // Subgroups
  ////////////////////////////////////////////////////////////////////////

  // Closure of gens under the product; in a finite group this is the
  // generated subgroup. Returned sorted.
  template <typename MulFn>
  std::vector<Elem> closure_under(std::vector<Elem> gens, std::size_t n,
                                  MulFn&& mul) {
    std::vector<bool> in(n, false);
    std::vector<Elem> list;
    for (Elem g : gens) {
      if (!in[g]) {
        in[g] = true;
        list.push_back(g);
      }
    }
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        for (Elem z : {mul(list[i], list[j]), mul(list[j], list[i])}) {
          if (!in[z]) {
            in[z] = true;
            list.push_back(z);
          }
        }
      }
    }
    std::sort(list.begin(), list.end());
    return list;
  }

  inline std::vector<Elem> generated_subgroup(FiniteGroup const& G,
                                              std::vector<Elem>  gens) {
    gens.push_back(G.identity());
    return closure_under(std::move(gens), G.size(),
                         [&G](Elem x, Elem y) { return G.mul(x, y); });
  }

  inline bool is_abelian(FiniteGroup const& G, std::vector<Elem> const& H) {
    for (Elem x : H) {
      for (Elem y : H) {
        if (G.mul(x, y) != G.mul(y, x)) {
          return false;
        }
      }
    }
    return true;
  }

  // Lower central series H = g1 > g2 > ... with g(i+1) = [H, g(i)]. Returns
  // the nilpotency class, or nullopt if the series stalls above {1}.
  inline std::optional<std::size_t> nilpotency_class(
      FiniteGroup const& G, std::vector<Elem> const& H) {
    std::vector<Elem> cur = H;
    std::size_t       cls = 0;
    while (cur.size() > 1) {
      std::vector<Elem> comms;
      for (Elem h : H) {
        for (Elem g : cur) {
          Elem c = G.mul(G.mul(G.inverse(h), G.inverse(g)), G.mul(h, g));
          comms.push_back(c);
        }
      }
      std::vector<Elem> next = generated_subgroup(G, comms);
      if (next.size() == cur.size()) {
        return std::nullopt;
      }
      cur = std::move(next);
      ++cls;
    }
    return cls;
  }

  struct SubgroupWitness {
    std::vector<Elem>          carrier;  // sorted
    bool                       abelian = false;
    bool                       nilpotent = false;
    std::optional<std::size_t> nilpotency_class;
  };

  inline SubgroupWitness annotate_subgroup(FiniteGroup const& G,
                                           std::vector<Elem>  H) {
    SubgroupWitness w;
    w.carrier          = std::move(H);
    w.abelian          = is_abelian(G, w.carrier);
    w.nilpotency_class = nilpotency_class(G, w.carrier);
    w.nilpotent        = w.nilpotency_class.has_value();
    return w;
  }

  // Closures of all subsets of size <= 2, then closed under joins. Sorted
  // by order, then by carrier.
  inline std::vector<SubgroupWitness> enumerate_subgroups(
      FiniteGroup const& G, Caps const& caps = {}) {
    if (G.size() > caps.max_group_order) {
      throw SizeError("subgroup enumeration: order " + std::to_string(G.size())
                      + " exceeds cap of "
                      + std::to_string(caps.max_group_order));
    }
    std::set<std::vector<Elem>> found;
    for (Elem x = 0; x < G.size(); ++x) {
      for (Elem y = x; y < G.size(); ++y) {
        found.insert(generated_subgroup(G, {x, y}));
      }
    }
    found.insert(generated_subgroup(G, {}));
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<std::vector<Elem>> cur(found.begin(), found.end());
      for (std::size_t i = 0; i < cur.size(); ++i) {
        for (std::size_t j = i + 1; j < cur.size(); ++j) {
          std::vector<Elem> u = cur[i];
          u.insert(u.end(), cur[j].begin(), cur[j].end());
          if (found.insert(generated_subgroup(G, u)).second) {
            grew = true;
          }
        }
      }
    }
    std::vector<std::vector<Elem>> list(found.begin(), found.end());
    std::stable_sort(list.begin(), list.end(), [](auto& a, auto& b) {
      return a.size() < b.size();
    });
    std::vector<SubgroupWitness> out;
    for (auto& H : list) {
      out.push_back(annotate_subgroup(G, std::move(H)));
    }
    return out;
  }

  inline std::size_t group_exponent(FiniteGroup const& G) {
    std::size_t e = 1;
    for (Elem x = 0; x < G.size(); ++x) {
      std::size_t o = 1;
      for (Elem p = x; p != G.identity(); p = G.mul(p, x)) {
        ++o;
      }
      e = std::lcm(e, o);
    }
    return e;
  }

  ////////////////////////////////////////////////////////////////////////
  // Groups inside semirings
  ////////////////////////////////////////////////////////////////////////

  // The group on `carrier` under S's multiplication, or nullopt if it is not
  // a subgroup. Element names are S's.
  inline std::optional<FiniteGroup> group_from_carrier(
      FiniteSemiring const& S, std::vector<Elem> const& carrier) {
    if (carrier.empty()) {
      return std::nullopt;
    }
    std::map<Elem, Elem> pos;
    for (std::size_t i = 0; i < carrier.size(); ++i) {
      if (carrier[i] >= S.size() || !pos.emplace(carrier[i], i).second) {
        return std::nullopt;
      }
    }
    std::size_t const        n = carrier.size();
    std::vector<std::string> names;
    for (Elem x : carrier) {
      names.push_back(S.name(x));
    }
    std::vector<Elem> mul(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        auto it = pos.find(S.mul(carrier[i], carrier[j]));
        if (it == pos.end()) {
          return std::nullopt;
        }
        mul[i * n + j] = it->second;
      }
    }
    std::optional<Elem> e;
    for (Elem c = 0; c < n && !e; ++c) {
      if (S.mul(carrier[c], carrier[c]) == carrier[c]) {
        e = c;
      }
    }
    if (!e) {
      return std::nullopt;
    }
    FiniteGroup G(std::move(names), std::move(mul), *e);
    if (!verify_group(G, 1).empty()) {
      return std::nullopt;
    }
    return G;
  }

  struct MultiplicativeSubgroup {
    Elem              idempotent;
    std::vector<Elem> carrier;  // indices of S, sorted
    bool              maximal = false;
    bool              abelian = false;
    bool              nilpotent = false;
    std::optional<std::size_t> nilpotency_class;
  };

  // {x : xe = ex = x, xy = yx = e for some y with ye = ey = y}
  inline std::vector<Elem> maximal_subgroup(FiniteSemiring const& S, Elem e) {
    std::vector<Elem> H;
    std::vector<Elem> local;
    for (Elem x = 0; x < S.size(); ++x) {
      if (S.mul(x, e) == x && S.mul(e, x) == x) {
        local.push_back(x);
      }
    }
    for (Elem x : local) {
      for (Elem y : local) {
        if (S.mul(x, y) == e && S.mul(y, x) == e) {
          H.push_back(x);
          break;
        }
      }
    }
    return H;
  }

  inline std::vector<Elem> multiplicative_idempotents(FiniteSemiring const& S) {
    std::vector<Elem> out;
    for (Elem x = 0; x < S.size(); ++x) {
      if (S.mul(x, x) == x) {
        out.push_back(x);
      }
    }
    return out;
  }

  // For each idempotent e the maximal subgroup at e and, when
  // with_subgroups, all of its subgroups (which share the idempotent).
  inline std::vector<MultiplicativeSubgroup> multiplicative_subgroups(
      FiniteSemiring const& S, bool with_subgroups = true,
      Caps const& caps = {}) {
    std::vector<MultiplicativeSubgroup> out;
    for (Elem e : multiplicative_idempotents(S)) {
      std::vector<Elem> H = maximal_subgroup(S, e);
      auto              G = group_from_carrier(S, H);
      if (!G) {
        throw Error("maximal subgroup at " + S.name(e)
                    + " failed the group check");
      }
      std::vector<SubgroupWitness> subs;
      if (with_subgroups) {
        subs = enumerate_subgroups(*G, caps);
      } else {
        std::vector<Elem> all(H.size());
        std::iota(all.begin(), all.end(), Elem{0});
        subs.push_back(annotate_subgroup(*G, std::move(all)));
      }
      for (auto const& w : subs) {
        MultiplicativeSubgroup m;
        m.idempotent = e;
        for (Elem i : w.carrier) {
          m.carrier.push_back(H[i]);
        }
        std::sort(m.carrier.begin(), m.carrier.end());
        m.maximal          = w.carrier.size() == H.size();
        m.abelian          = w.abelian;
        m.nilpotent        = w.nilpotent;
        m.nilpotency_class = w.nilpotency_class;
        out.push_back(std::move(m));
      }
    }
    return out;
  }

  // The first nonabelian nilpotent multiplicative subgroup. Maximal
  // subgroups are checked before their subgroups are enumerated.
  inline std::optional<MultiplicativeSubgroup> nonabelian_nilpotent_witness(
      FiniteSemiring const& S, Caps const& caps = {}) {
    if (S.size() > caps.max_carrier) {
      throw SizeError("semiring exceeds carrier cap");
    }
    for (Elem e : multiplicative_idempotents(S)) {
      std::vector<Elem> H = maximal_subgroup(S, e);
      auto              G = group_from_carrier(S, H);
      if (!G || is_abelian(*G, [&] {
            std::vector<Elem> a(H.size());
            std::iota(a.begin(), a.end(), Elem{0});
            return a;
          }())) {
        continue;
      }
      for (auto const& w : enumerate_subgroups(*G, caps)) {
        if (w.nilpotent && !w.abelian) {
          MultiplicativeSubgroup m;
          m.idempotent = e;
          for (Elem i : w.carrier) {
            m.carrier.push_back(H[i]);
          }
          std::sort(m.carrier.begin(), m.carrier.end());
          m.maximal          = w.carrier.size() == H.size();
          m.abelian          = false;
          m.nilpotent        = true;
          m.nilpotency_class = w.nilpotency_class;
          return m;
        }
      }
    }
    return std::nullopt;
  }

  // No two distinct elements of the carrier are <=-comparable.
  inline bool is_antichain(FiniteSemiring const& S,
                           std::vector<Elem> const& carrier) {
    for (Elem x : carrier) {
      for (Elem y : carrier) {
        if (x != y && S.leq(x, y)) {
          return false;
        }
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Flat extensions
  ////////////////////////////////////////////////////////////////////////

  // G with an absorbing top "0" (or a fresh name) and flat addition; the
  // identity is designated. with_zero also adjoins an additive identity.
  inline FiniteSemiring flat_extension(FiniteGroup const& G, bool with_zero) {
    std::size_t const n     = G.size();
    auto              names = G.names();
    std::string       top   = "0";
    while (std::find(names.begin(), names.end(), top) != names.end()) {
      top += "_";
    }
    names.push_back(top);
    Elem const     t = static_cast<Elem>(n);
    FiniteSemiring F = make_semiring(
        std::move(names),
        [t](Elem x, Elem y) { return x == y ? x : t; },
        [&](Elem x, Elem y) {
          return (x == t || y == t) ? t : G.mul(x, y);
        },
        G.identity());
    if (with_zero) {
      return adjoin(F, AdjoinKind::additive_zero).semiring;
    }
    return F;
  }

  // S_G = subsemiring generated by G, G+ = S_G \ G, quotient S_G / G+,
  // compared with the flat extension of G.
  inline WitnessReport extract_flat_group(FiniteSemiring const&    S,
                                          std::vector<Elem> const& G) {
    WitnessReport r;
    r.construction = "extract-flat-group";
    auto grp       = group_from_carrier(S, G);
    r.claim("subgroup", grp.has_value(),
            grp ? "order " + std::to_string(G.size()) : "not a subgroup");
    if (!grp) {
      return r;
    }
    r.claim("nontrivial", G.size() > 1);
    r.claim("antichain", is_antichain(S, G));
    Subsemiring SG = subsemiring_generated(S, G);
    std::vector<bool> inG(S.size(), false);
    for (Elem g : G) {
      inG[g] = true;
    }
    std::vector<Elem> plus;
    for (std::size_t i = 0; i < SG.inclusion.size(); ++i) {
      if (!inG[SG.inclusion[i]]) {
        plus.push_back(static_cast<Elem>(i));
      }
    }
    r.claim("G+ nonempty", !plus.empty(),
            std::to_string(plus.size()) + " proper sums");
    if (plus.empty()) {
      return r;
    }
    std::optional<IdealQuotient> q;
    try {
      q = ideal_quotient(SG.semiring, plus);
      r.claim("G+ ideal and filter", true);
    } catch (PreconditionError const& e) {
      r.claim("G+ ideal and filter", false, e.what());
      return r;
    }
    r.semiring = q->quotient;
    r.target   = flat_extension(*grp, false);
    r.map.assign(r.semiring.size(), kNoElem);
    Elem const cls = q->projection[plus.front()];
    for (Elem x = 0; x < r.semiring.size(); ++x) {
      r.map[x] = x == cls ? *r.target->top()
                          : r.target->at(r.semiring.name(x));
    }
    claim_isomorphism(r);
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Group quotient embedding
  ////////////////////////////////////////////////////////////////////////

  struct GroupEmbedding {
    Elem              idempotent = kNoElem;  // e_A in A
    std::vector<Elem> H;                     // e_A A_G e_A
    std::vector<Elem> embedding;             // G[i] -> element of A
    bool              injective_hom = false;
    std::string       detail;
  };

  // phi : A -> S surjective, G a subgroup of S. Finds an idempotent of
  // A_G = phi^-1(G) with the smallest principal ideal inside A_G, forms
  // H = e A_G e and inverts phi on H.
  inline GroupEmbedding group_quotient_embedding(FiniteSemiring const& A,
                                                 FiniteSemiring const& S,
                                                 std::vector<Elem> const& phi,
                                                 std::vector<Elem> const& G) {
    MapVerdict v = verify_canonical_map(A, S, phi);
    if (!v.homomorphism || !v.surjective) {
      throw PreconditionError("group embedding: phi must be a surjective "
                              "homomorphism");
    }
    if (!group_from_carrier(S, G)) {
      throw PreconditionError("group embedding: G is not a subgroup");
    }
    std::vector<bool> inG(S.size(), false);
    for (Elem g : G) {
      inG[g] = true;
    }
    std::vector<Elem> AG;
    for (Elem x = 0; x < A.size(); ++x) {
      if (inG[phi[x]]) {
        AG.push_back(x);
      }
    }
    GroupEmbedding out;
    std::size_t    best = SIZE_MAX;
    for (Elem e : AG) {
      if (A.mul(e, e) != e) {
        continue;
      }
      std::set<Elem> ideal{e};
      for (Elem u : AG) {
        ideal.insert(A.mul(u, e));
        ideal.insert(A.mul(e, u));
        for (Elem w : AG) {
          ideal.insert(A.mul(A.mul(u, e), w));
        }
      }
      if (ideal.size() < best) {
        best           = ideal.size();
        out.idempotent = e;
      }
    }
    if (out.idempotent == kNoElem) {
      out.detail = "no idempotent in the preimage";
      return out;
    }
    Elem const     e = out.idempotent;
    std::set<Elem> H;
    for (Elem x : AG) {
      H.insert(A.mul(A.mul(e, x), e));
    }
    out.H.assign(H.begin(), H.end());
    std::map<Elem, Elem> back;
    bool                 injective = true;
    for (Elem h : out.H) {
      if (!back.emplace(phi[h], h).second) {
        injective = false;
      }
    }
    out.embedding.assign(G.size(), kNoElem);
    for (std::size_t i = 0; i < G.size(); ++i) {
      auto it = back.find(G[i]);
      if (it != back.end()) {
        out.embedding[i] = it->second;
      }
    }
    bool total =
        std::find(out.embedding.begin(), out.embedding.end(), kNoElem)
        == out.embedding.end();
    bool hom = total;
    std::map<Elem, std::size_t> gpos;
    for (std::size_t i = 0; i < G.size(); ++i) {
      gpos[G[i]] = i;
    }
    for (std::size_t i = 0; i < G.size() && hom; ++i) {
      for (std::size_t j = 0; j < G.size() && hom; ++j) {
        std::size_t k = gpos[S.mul(G[i], G[j])];
        hom = A.mul(out.embedding[i], out.embedding[j]) == out.embedding[k];
      }
    }
    std::set<Elem> img(out.embedding.begin(), out.embedding.end());
    out.injective_hom = injective && total && hom && img.size() == G.size();
    out.detail = !injective ? "phi not injective on H"
                 : !total   ? "phi(H) misses part of G"
                 : !hom     ? "embedding not multiplicative"
                            : "|H| = " + std::to_string(out.H.size());
    return out;
  }

}  // namespace aisr

#endif  // AISR_GROUP_HPP_
