#ifndef AISR_HG_SEMIRING_HPP_
#define AISR_HG_SEMIRING_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "caps.hpp"
#include "constructions.hpp"
#include "error.hpp"
#include "fixtures.hpp"
#include "hypergraph.hpp"
#include "product.hpp"
#include "report.hpp"
#include "semiring.hpp"

namespace aisr {

  ////////////////////////////////////////////////////////////////////////
  // Hypergraph semirings
  ////////////////////////////////////////////////////////////////////////

  struct HSElement {
    enum class Tag { zero, one, small, link, top };
    Tag         tag = Tag::zero;
    Edge        set;       // small: the vertex set
    std::size_t cls = 0;   // link: class index
  };

  struct HypergraphSemiring {
    FiniteSemiring         semiring;
    std::vector<HSElement> elements;
    LinkPartition          links;
    std::vector<Elem>      generators;  // a_v for each vertex v
    std::optional<Elem>    one;
    Elem                   zero = 0;
    Elem                   top  = 0;
  };

  inline std::string vertex_set_name(Edge const& s) {
    std::string out;
    for (Vertex v : s) {
      out += "a" + std::to_string(v);
    }
    return out;
  }

  inline void check_hypergraph_semiring_input(Hypergraph const& H) {
    if (H.uniformity() < 3) {
      throw PreconditionError("hypergraph semiring: uniformity "
                              + std::to_string(H.uniformity())
                              + " is below 3");
    }
    if (auto g = girth(H); g && *g < 4) {
      throw PreconditionError("hypergraph semiring: girth "
                              + std::to_string(*g) + " is below 4");
    }
    if (auto iso = H.isolated_vertices(); !iso.empty()) {
      throw PreconditionError("hypergraph semiring: isolated vertex "
                              + std::to_string(iso.front()));
    }
  }

  // Carrier: [1], subhyperedges of size 1..k-2 by (size, lex), one element
  // per link class ordered by its least member, the edge product "a", and
  // "0". Products merge vertex sets; a repeated vertex or a union outside
  // every edge gives 0. Link classes multiply through every member and the
  // results must agree.
  inline HypergraphSemiring build_hypergraph_semiring(Hypergraph const& H,
                                                      bool monoid,
                                                      Caps const& caps = {}) {
    check_hypergraph_semiring_input(H);
    std::size_t const  k = H.uniformity();
    HypergraphSemiring out;
    out.links = link_partition(H);

    std::set<Edge> smalls;
    for (auto const& e : H.edges()) {
      for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
        std::size_t sz = std::popcount(mask);
        if (sz > k - 2) {
          continue;
        }
        Edge s;
        for (std::size_t i = 0; i < k; ++i) {
          if (mask >> i & 1) {
            s.push_back(e[i]);
          }
        }
        smalls.insert(std::move(s));
      }
    }
    std::vector<Edge> small_list(smalls.begin(), smalls.end());
    std::stable_sort(small_list.begin(), small_list.end(),
                     [](Edge const& a, Edge const& b) {
                       return a.size() < b.size();
                     });
    std::vector<std::size_t> class_order(out.links.classes.size());
    std::vector<Edge>        class_min(out.links.classes.size());
    for (std::size_t c = 0; c < class_order.size(); ++c) {
      class_order[c] = c;
      Edge m         = out.links.sets[out.links.classes[c].front()];
      for (std::size_t i : out.links.classes[c]) {
        m = std::min(m, out.links.sets[i]);
      }
      class_min[c] = m;
    }
    std::sort(class_order.begin(), class_order.end(),
              [&](std::size_t a, std::size_t b) {
                return class_min[a] < class_min[b];
              });

    std::vector<std::string> names;
    auto push = [&](HSElement e, std::string name) {
      out.elements.push_back(std::move(e));
      names.push_back(std::move(name));
    };
    if (monoid) {
      push({HSElement::Tag::one, {}, 0}, "1");
    }
    std::map<Edge, Elem> small_index;
    for (auto const& s : small_list) {
      small_index[s] = static_cast<Elem>(names.size());
      push({HSElement::Tag::small, s, 0}, vertex_set_name(s));
    }
    std::vector<Elem> link_elem(class_order.size());
    for (std::size_t c : class_order) {
      link_elem[c] = static_cast<Elem>(names.size());
      push({HSElement::Tag::link, {}, c},
           "(" + vertex_set_name(class_min[c]) + ")");
    }
    out.top = static_cast<Elem>(names.size());
    push({HSElement::Tag::top, {}, 0}, "a");
    out.zero = static_cast<Elem>(names.size());
    push({HSElement::Tag::zero, {}, 0}, "0");
    if (monoid) {
      out.one = 0;
    }
    std::size_t const n = names.size();
    if (n > caps.max_carrier) {
      throw SizeError("hypergraph semiring exceeds carrier cap");
    }

    auto merge = [&](Edge const& A, Edge const& B) -> Elem {
      Edge U;
      std::set_union(A.begin(), A.end(), B.begin(), B.end(),
                     std::back_inserter(U));
      if (U.size() != A.size() + B.size() || U.size() > k
          || !is_subhyperedge(H, U)) {
        return out.zero;
      }
      if (U.size() == k) {
        return out.top;
      }
      if (U.size() == k - 1) {
        return link_elem[*out.links.class_of_set(U)];
      }
      return small_index.at(U);
    };
    auto reps = [&](Elem x) -> std::vector<Edge> {
      HSElement const& e = out.elements[x];
      if (e.tag == HSElement::Tag::small) {
        return {e.set};
      }
      std::vector<Edge> r;
      for (std::size_t i : out.links.classes[e.cls]) {
        r.push_back(out.links.sets[i]);
      }
      return r;
    };
    std::vector<Elem> add(n * n), mul(n * n);
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        add[x * n + y] = x == y ? x : out.zero;
        auto tx = out.elements[x].tag, ty = out.elements[y].tag;
        Elem p;
        if (tx == HSElement::Tag::one) {
          p = y;
        } else if (ty == HSElement::Tag::one) {
          p = x;
        } else if (tx == HSElement::Tag::zero || ty == HSElement::Tag::zero
                   || tx == HSElement::Tag::top
                   || ty == HSElement::Tag::top) {
          p = out.zero;
        } else {
          p = kNoElem;
          for (auto const& A : reps(x)) {
            for (auto const& B : reps(y)) {
              Elem r = merge(A, B);
              if (p != kNoElem && r != p) {
                throw Error("hypergraph semiring: product of " + names[x]
                            + " and " + names[y] + " depends on the "
                            + "representative");
              }
              p = r;
            }
          }
        }
        mul[x * n + y] = p;
      }
    }
    out.generators.resize(H.num_vertices());
    for (Vertex v = 0; v < H.num_vertices(); ++v) {
      Edge s{v};
      out.generators[v] = k >= 3 ? small_index.at(s) : kNoElem;
    }
    out.semiring = FiniteSemiring(std::move(names), std::move(add),
                                  std::move(mul), out.one);
    return out;
  }

  // Rules governing the generators a_v of a semiring S presenting H: products
  // off subhyperedges vanish, generators commute, all edges give the same
  // nonzero product, and linked (k-1)-sets give equal products.
  inline std::vector<Claim> check_hypergraph_rules(
      FiniteSemiring const&    S,
      std::vector<Elem> const& gens,
      Elem                     zero,
      Hypergraph const&        H) {
    std::vector<Claim> out;
    auto prod = [&](Edge const& s) {
      Elem p = gens[s[0]];
      for (std::size_t i = 1; i < s.size(); ++i) {
        p = S.mul(p, gens[s[i]]);
      }
      return p;
    };
    std::size_t const n = H.num_vertices();
    std::string       bad1, bad2;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) {
        Elem p = S.mul(gens[u], gens[v]);
        if ((u == v || !is_subhyperedge(H, {u, v})) && p != zero
            && bad1.empty()) {
          bad1 = "a" + std::to_string(u) + " a" + std::to_string(v)
                 + " = " + S.name(p);
        }
        if (p != S.mul(gens[v], gens[u]) && bad2.empty()) {
          bad2 = "a" + std::to_string(u) + ", a" + std::to_string(v);
        }
      }
    }
    out.push_back({"rule 1: vanishing off subhyperedges", bad1.empty(), bad1});
    out.push_back({"rule 2: generators commute", bad2.empty(), bad2});
    std::string bad3;
    std::optional<Elem> edge_prod;
    for (auto const& e : H.edges()) {
      Elem p = prod(e);
      if (p == zero) {
        bad3 = "edge " + vertex_set_name(e) + " multiplies to 0";
        break;
      }
      if (edge_prod && p != *edge_prod) {
        bad3 = "edges give " + S.name(*edge_prod) + " and " + S.name(p);
        break;
      }
      edge_prod = p;
    }
    out.push_back({"rule 3: common edge product", bad3.empty(),
                   bad3.empty() && edge_prod ? S.name(*edge_prod) : bad3});
    std::string bad4;
    if (H.uniformity() >= 3) {
      LinkPartition lp = link_partition(H);
      for (auto const& cls : lp.classes) {
        Elem p = prod(lp.sets[cls.front()]);
        for (std::size_t i : cls) {
          if (prod(lp.sets[i]) != p && bad4.empty()) {
            bad4 = vertex_set_name(lp.sets[cls.front()]) + " vs "
                   + vertex_set_name(lp.sets[i]);
          }
        }
      }
    }
    out.push_back({"rule 4: linked sets agree", bad4.empty(), bad4});
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Witness constructions
  ////////////////////////////////////////////////////////////////////////

  namespace detail {

    // Generator tuples closed inside a power of `base`, tuples with a top
    // coordinate collapsed, then mapped onto `target` by the generators.
    inline TupleClosure finish_witness(WitnessReport&                   r,
                               FiniteSemiring const&             base,
                               std::size_t                       coords,
                               std::vector<Tuple> const&         gens,
                               std::vector<Elem> const&          images,
                               FiniteSemiring const&             target,
                               Elem                              target_top,
                               Caps const&                       caps) {
      std::vector<FiniteSemiring const*> fs(coords, &base);
      TupleClosure tc = tuple_closure(fs, gens, true, caps);
      r.semiring      = tc.semiring;
      r.target        = target;
      r.claim("axioms", verify_semiring_axioms(r.semiring, 1).ok(),
              std::to_string(r.semiring.size()) + " elements");
      std::vector<Elem> src = tc.generators, img = images;
      if (tc.collapsed) {
        src.push_back(*tc.collapsed);
        img.push_back(target_top);
      }
      MapExtension ext = extend_to_homomorphism(r.semiring, src, target, img);
      r.claim("generator map", ext.consistent && ext.total(),
              ext.consistent ? (ext.total() ? "" : "generators do not reach "
                                                   "every element")
                             : ext.conflict);
      r.map = ext.map;
      claim_isomorphism(r);
      return tc;
    }

  }  // namespace detail

  enum class WitnessBase { s7, sc };

  // Coordinates are the full satisfactions of H. The generator for u is a
  // where u takes the value 0 and 1 (or b over Sc(ab^(k-1))) elsewhere.
  inline WitnessReport robust_power_witness(Hypergraph const& H,
                                            WitnessBase        base,
                                            bool               monoid = false,
                                            Caps const&        caps   = {}) {
    check_hypergraph_semiring_input(H);
    std::size_t const k = H.uniformity();
    if (monoid && base != WitnessBase::s7) {
      throw PreconditionError("robust witness: monoid variant needs the S7 "
                              "base");
    }
    RobustResult rob = robust2_check(H);
    if (!rob.holds) {
      throw PreconditionError("robust witness: hypergraph is not <=2-robustly "
                              "satisfiable");
    }
    SolveResult sat = solve_exact(H, SolveMode::enumerate, {},
                                  caps.max_satisfactions + 1);
    if (sat.count > caps.max_satisfactions) {
      throw SizeError("robust witness: more than "
                      + std::to_string(caps.max_satisfactions)
                      + " satisfactions");
    }
    HypergraphSemiring target = build_hypergraph_semiring(H, monoid, caps);
    FiniteSemiring     B;
    Elem               a, other;
    if (base == WitnessBase::s7) {
      B     = s7();
      a     = B.at("a");
      other = B.at("1");
    } else {
      B     = word_semiring(WordSpec::parse(
          WordVariant::Sc, {"a" + std::string(k - 1, 'b')}), caps);
      a     = B.at("a");
      other = B.at("b");
    }
    WitnessReport r;
    r.construction = std::string("robust-witness over ")
                     + (base == WitnessBase::s7 ? "S7" : "Sc(ab^" +
                        std::to_string(k - 1) + ")");
    r.claim("robust", true,
            std::to_string(rob.solver_calls) + " solver calls");
    r.claim("satisfactions", sat.count > 0, std::to_string(sat.count));
    std::vector<Tuple> gens;
    std::vector<Elem>  images;
    for (Vertex u = 0; u < H.num_vertices(); ++u) {
      Tuple t;
      for (auto const& phi : sat.solutions) {
        t.push_back(phi[u] == 0 ? a : other);
      }
      gens.push_back(std::move(t));
      images.push_back(target.generators[u]);
    }
    if (monoid) {
      gens.emplace_back(sat.solutions.size(), B.at("1"));
      images.push_back(*target.one);
    }
    TupleClosure tc = detail::finish_witness(
        r, B, sat.solutions.size(), gens, images, target.semiring,
        target.zero, caps);
    std::vector<Elem> vg(tc.generators.begin(),
                         tc.generators.begin() + H.num_vertices());
    for (auto& c : check_hypergraph_rules(r.semiring, vg, *tc.collapsed, H)) {
      r.claims.push_back(std::move(c));
    }
    return r;
  }

  // All maps F -> {0..k-1} that are bijective on every edge.
  inline std::vector<std::vector<Vertex>> edge_bijective_maps(
      Hypergraph const& F,
      std::size_t       cap) {
    std::size_t const                n = F.num_vertices(), k = F.uniformity();
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex>              phi(n, 0);
    auto ok_at = [&](Vertex v) {
      for (std::size_t ei : F.incident(v)) {
        for (Vertex u : F.edge(ei)) {
          if (u < v && phi[u] == phi[v]) {
            return false;
          }
        }
      }
      return true;
    };
    auto rec = [&](auto& self, Vertex v) -> void {
      if (v == n) {
        if (out.size() >= cap) {
          throw SizeError("forest witness: more than " + std::to_string(cap)
                          + " edge-bijective maps");
        }
        out.push_back(phi);
        return;
      }
      for (Vertex c = 0; c < k; ++c) {
        phi[v] = c;
        if (ok_at(v)) {
          self(self, v + 1);
        }
      }
    };
    rec(rec, 0);
    return out;
  }

  // Coordinates are the edge-bijective maps of F onto a single k-edge; the
  // generator for u takes the single-edge generator of its image.
  inline WitnessReport forest_power_witness(Hypergraph const& F,
                                            bool              monoid = false,
                                            Caps const&       caps   = {}) {
    if (!is_hyperforest(F)) {
      throw PreconditionError("forest witness: not a hyperforest");
    }
    check_hypergraph_semiring_input(F);
    std::size_t const  k      = F.uniformity();
    HypergraphSemiring E      = build_hypergraph_semiring(single_edge(k),
                                                          monoid, caps);
    HypergraphSemiring target = build_hypergraph_semiring(F, monoid, caps);
    auto maps = edge_bijective_maps(F, caps.max_satisfactions);
    WitnessReport r;
    r.construction = monoid ? "forest-witness (monoid)" : "forest-witness";
    r.claim("hyperforest", true);
    std::string sep;
    for (Vertex u = 0; u < F.num_vertices() && sep.empty(); ++u) {
      for (Vertex v = u + 1; v < F.num_vertices(); ++v) {
        if (is_subhyperedge(F, {u, v})) {
          continue;
        }
        bool eq = false, ne = false;
        for (auto const& phi : maps) {
          (phi[u] == phi[v] ? eq : ne) = true;
        }
        if (!eq || !ne) {
          sep = std::to_string(u) + "," + std::to_string(v);
          break;
        }
      }
    }
    r.claim("pairs equalized and separated", sep.empty(),
            sep.empty() ? std::to_string(maps.size()) + " coordinates" : sep);
    std::vector<Tuple> gens;
    std::vector<Elem>  images;
    for (Vertex u = 0; u < F.num_vertices(); ++u) {
      Tuple t;
      for (auto const& phi : maps) {
        t.push_back(E.generators[phi[u]]);
      }
      gens.push_back(std::move(t));
      images.push_back(target.generators[u]);
    }
    if (monoid) {
      gens.emplace_back(maps.size(), *E.one);
      images.push_back(*target.one);
    }
    detail::finish_witness(r, E.semiring, maps.size(), gens, images,
                           target.semiring, target.zero, caps);
    return r;
  }

  // Letters a1..an as a Sc (or Mc) word semiring.
  inline FiniteSemiring sc_letters(std::size_t n, bool monoid,
                                   Caps const& caps = {}) {
    std::string w;
    for (std::size_t i = 1; i <= n; ++i) {
      w += "a" + std::to_string(i);
    }
    return word_semiring(
        WordSpec::parse(monoid ? WordVariant::Mc : WordVariant::Sc, {w}),
        caps);
  }

  // Tuples in S7^n equal to 1 except for a in coordinate i.
  inline WitnessReport sinm_construction(std::size_t n, bool monoid = false,
                                         Caps const& caps = {}) {
    if (n < 2) {
      throw PreconditionError("sinm: n must be at least 2");
    }
    if ((std::uint64_t{1} << std::min<std::size_t>(n, 63)) + 1
        > caps.max_carrier) {
      throw SizeError("sinm: n too large for the carrier cap");
    }
    FiniteSemiring B      = s7();
    FiniteSemiring target = sc_letters(n, monoid, caps);
    WitnessReport  r;
    r.construction = "sinm(" + std::to_string(n) + ")";
    std::vector<Tuple> gens;
    std::vector<Elem>  images;
    for (std::size_t i = 0; i < n; ++i) {
      Tuple t(n, B.at("1"));
      t[i] = B.at("a");
      gens.push_back(std::move(t));
      images.push_back(target.at("a" + std::to_string(i + 1)));
    }
    if (monoid) {
      gens.emplace_back(n, B.at("1"));
      images.push_back(*target.one());
    }
    detail::finish_witness(r, B, n, gens, images, target, *target.top(),
                           caps);
    return r;
  }

  // Rearrangements r of w as coordinates over Sc(w); generator i reads the
  // i-th letter of each r. The quotient by the non-divisors of the product
  // of all generators is compared with Sc(a1..an).
  inline WitnessReport sins_construction(std::string const& word,
                                         Caps const&        caps = {}) {
    LetterWord w = parse_letter_word(word);
    std::sort(w.begin(), w.end());
    if (w.size() < 2 || w.front() == w.back()) {
      throw PreconditionError("sins: word must use at least two letters");
    }
    std::size_t const       n = w.size();
    std::vector<LetterWord> R;
    do {
      R.push_back(w);
      if (R.size() > 64) {
        throw SizeError("sins: too many rearrangements");
      }
    } while (std::next_permutation(w.begin(), w.end()));
    FiniteSemiring B = word_semiring(WordSpec::parse(WordVariant::Sc, {word}),
                                     caps);
    FiniteSemiring target = sc_letters(n, false, caps);
    WitnessReport  r;
    r.construction = "sins(" + word + ")";
    r.notes.push_back(std::to_string(R.size()) + " rearrangements");
    std::vector<Tuple> gens(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (auto const& rr : R) {
        gens[i].push_back(B.at(rr[i].str()));
      }
    }
    std::vector<FiniteSemiring const*> fs(R.size(), &B);
    TupleClosure      A = tuple_closure(fs, gens, false, caps);
    FiniteSemiring const& AS = A.semiring;
    Elem W = A.generators[0];
    for (std::size_t i = 1; i < n; ++i) {
      W = AS.mul(W, A.generators[i]);
    }
    std::vector<Elem> J;
    for (Elem x = 0; x < AS.size(); ++x) {
      bool divides = x == W;
      for (Elem y = 0; y < AS.size() && !divides; ++y) {
        divides = AS.mul(x, y) == W || AS.mul(y, x) == W;
      }
      if (!divides) {
        J.push_back(x);
      }
    }
    // products of n generators equal to W use each generator once
    std::vector<std::size_t> idx(n, 0);
    std::string              claim1;
    while (true) {
      Elem p = A.generators[idx[0]];
      for (std::size_t i = 1; i < n; ++i) {
        p = AS.mul(p, A.generators[idx[i]]);
      }
      bool perm = true;
      for (std::size_t i = 0; i < n; ++i) {
        perm = perm && idx[i] == i;
      }
      if (p == W && !perm && claim1.empty()) {
        for (std::size_t i : idx) {
          claim1 += "a" + std::to_string(i + 1);
        }
      }
      std::size_t i = n;
      while (i > 0 && idx[i - 1] == n - 1) {
        --i;
      }
      if (i == 0) {
        break;
      }
      ++idx[i - 1];
      for (std::size_t j = i; j < n; ++j) {
        idx[j] = idx[i - 1];
      }
    }
    r.claim("products equal to w use each generator once", claim1.empty(),
            claim1);
    std::optional<IdealQuotient> q;
    try {
      q = ideal_quotient(AS, J);
      r.claim("non-divisors ideal and filter", true,
              std::to_string(J.size()) + " collapsed");
    } catch (PreconditionError const& e) {
      r.claim("non-divisors ideal and filter", false, e.what());
      r.semiring = AS;
      return r;
    }
    r.semiring = q->quotient;
    r.target   = target;
    std::vector<Elem> src, img;
    for (std::size_t i = 0; i < n; ++i) {
      src.push_back(q->projection[A.generators[i]]);
      img.push_back(target.at("a" + std::to_string(i + 1)));
    }
    src.push_back(q->projection[J.front()]);
    img.push_back(*target.top());
    MapExtension ext = extend_to_homomorphism(r.semiring, src, target, img);
    r.claim("generator map", ext.consistent && ext.total(), ext.conflict);
    r.map = ext.map;
    claim_isomorphism(r);
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Cyclicity and the triple properties
  ////////////////////////////////////////////////////////////////////////

  inline std::vector<bool> cyclicity_profile(FiniteSemiring const& S) {
    std::vector<bool> out(S.size());
    for (Elem x = 0; x < S.size(); ++x) {
      out[x] = is_cyclic(S, x);
    }
    return out;
  }

  inline std::vector<Elem> noncyclic_elements(FiniteSemiring const& S) {
    std::vector<Elem> out;
    auto              c = cyclicity_profile(S);
    for (Elem x = 0; x < S.size(); ++x) {
      if (!c[x]) {
        out.push_back(x);
      }
    }
    return out;
  }

  struct OrderIdealVerdict {
    bool                            holds = true;
    std::optional<std::pair<Elem, Elem>> violation;  // x <= y, y noncyclic, x cyclic
  };

  inline OrderIdealVerdict noncyclic_order_ideal(FiniteSemiring const& S) {
    auto              c = cyclicity_profile(S);
    OrderIdealVerdict v;
    for (Elem y = 0; y < S.size() && v.holds; ++y) {
      if (c[y]) {
        continue;
      }
      for (Elem x = 0; x < S.size(); ++x) {
        if (S.leq(x, y) && c[x]) {
          v.holds     = false;
          v.violation = {x, y};
          break;
        }
      }
    }
    return v;
  }

  enum class TripleMode { one_in_three, two_in_three };

  inline char const* to_string(TripleMode m) {
    return m == TripleMode::one_in_three ? "1-in-3" : "2-in-3";
  }

  struct PointVerdict {
    Elem                               c = 0;
    bool                               vacuous = false;
    bool                               holds = true;
    std::optional<Elem>                d;
    std::optional<std::array<Elem, 3>> violation;
    std::size_t                        triples = 0;  // qualifying triples
  };

  struct PropertyVerdict {
    std::string               name;
    bool                      holds = true;
    std::vector<PointVerdict> points;
  };

  // At each noncyclic c, a d such that every triple whose six permuted
  // products lie at or below c has exactly one (or two) coordinates equal
  // to d. d ranges over the coordinates of the first qualifying triple.
  inline PropertyVerdict one_in_three_property(FiniteSemiring const& S,
                                               TripleMode            mode,
                                               Caps const&           caps = {}) {
    std::size_t const n = S.size();
    if (std::uint64_t(n) * n * n > caps.max_assignments) {
      throw SizeError("triple property: too many triples");
    }
    // join of the six products of each triple
    std::vector<Elem> join(n * n * n);
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        for (Elem z = 0; z < n; ++z) {
          std::array<Elem, 3> t{x, y, z};
          std::array<int, 3>  p{0, 1, 2};
          Elem                s = kNoElem;
          do {
            Elem q = S.mul(S.mul(t[p[0]], t[p[1]]), t[p[2]]);
            s      = s == kNoElem ? q : S.add(s, q);
          } while (std::next_permutation(p.begin(), p.end()));
          join[(x * n + y) * n + z] = s;
        }
      }
    }
    PropertyVerdict v;
    v.name             = to_string(mode);
    std::size_t const want = mode == TripleMode::one_in_three ? 1 : 2;
    for (Elem c : noncyclic_elements(S)) {
      PointVerdict pt;
      pt.c = c;
      std::vector<std::array<Elem, 3>> qual;
      for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
          for (Elem z = 0; z < n; ++z) {
            if (S.leq(join[(x * n + y) * n + z], c)) {
              qual.push_back({x, y, z});
            }
          }
        }
      }
      pt.triples = qual.size();
      if (qual.empty()) {
        pt.vacuous = true;
        v.points.push_back(pt);
        continue;
      }
      std::vector<Elem> cand(qual[0].begin(), qual[0].end());
      std::sort(cand.begin(), cand.end());
      cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
      for (Elem d : cand) {
        std::optional<std::array<Elem, 3>> bad;
        for (auto const& t : qual) {
          if (static_cast<std::size_t>(std::count(t.begin(), t.end(), d))
              != want) {
            bad = t;
            break;
          }
        }
        if (!bad) {
          pt.d         = d;
          pt.violation = std::nullopt;
          break;
        }
        if (!pt.violation) {
          pt.violation = bad;
        }
      }
      pt.holds = pt.d.has_value();
      v.holds  = v.holds && pt.holds;
      v.points.push_back(pt);
    }
    return v;
  }

  enum class H23Kind { hypotheses_fail, not_member, inconclusive };

  inline char const* to_string(H23Kind k) {
    switch (k) {
      case H23Kind::hypotheses_fail:
        return "hypotheses-fail";
      case H23Kind::not_member:
        return "not-member";
      case H23Kind::inconclusive:
        return "inconclusive";
    }
    return "";
  }

  struct H23Verdict {
    H23Kind                   kind = H23Kind::inconclusive;
    std::string               failed_hypothesis;
    std::optional<TripleMode> property;
    IndexPeriod               index_period_value;
    std::uint64_t             solver_nodes = 0;
    Assignment                assignment;  // when H is satisfiable
  };

  // If S has finite period, one of the triple properties and its noncyclic
  // elements form an order ideal, then S_H in V(S) forces H to be 2-in-3
  // satisfiable. An unsatisfiable H therefore certifies S_H outside V(S).
  inline H23Verdict h23_verdict(FiniteSemiring const& S, Hypergraph const& H,
                                Caps const& caps = {}) {
    if (H.uniformity() != 3) {
      throw PreconditionError("h23: hypergraph must be 3-uniform");
    }
    if (auto g = girth(H); g && *g < 5) {
      throw PreconditionError("h23: girth " + std::to_string(*g)
                              + " is below 5");
    }
    H23Verdict v;
    v.index_period_value = index_period(S);
    if (one_in_three_property(S, TripleMode::one_in_three, caps).holds) {
      v.property = TripleMode::one_in_three;
    } else if (one_in_three_property(S, TripleMode::two_in_three, caps)
                   .holds) {
      v.property = TripleMode::two_in_three;
    } else {
      v.kind              = H23Kind::hypotheses_fail;
      v.failed_hypothesis = "1-in-3 or 2-in-3 property";
      return v;
    }
    if (!noncyclic_order_ideal(S).holds) {
      v.kind              = H23Kind::hypotheses_fail;
      v.failed_hypothesis = "noncyclic order ideal";
      return v;
    }
    SolveResult s  = solve_exact(H);
    v.solver_nodes = s.nodes;
    if (s.satisfiable) {
      v.kind       = H23Kind::inconclusive;
      v.assignment = s.assignment;
    } else {
      v.kind = H23Kind::not_member;
    }
    return v;
  }

}  // namespace aisr

#endif  // AISR_HG_SEMIRING_HPP_
