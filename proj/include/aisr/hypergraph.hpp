#ifndef AISR_HYPERGRAPH_HPP_
#define AISR_HYPERGRAPH_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "caps.hpp"
#include "error.hpp"

namespace aisr {

  using Vertex = std::uint32_t;
  using Edge   = std::vector<Vertex>;  // sorted, k distinct vertices

  // A k-uniform hypergraph on vertices 0..n-1. Edges are kept sorted and in
  // insertion order; duplicates and malformed edges are rejected.
  class Hypergraph {
   public:
    Hypergraph() = default;

    Hypergraph(std::size_t n, std::size_t k) : _n(n), _k(k), _inc(n) {
      if (k < 2) {
        throw StructureError("hypergraph: uniformity must be at least 2");
      }
    }

    Hypergraph(std::size_t n, std::size_t k, std::vector<Edge> const& edges)
        : Hypergraph(n, k) {
      for (auto const& e : edges) {
        add_edge(e);
      }
    }

    std::size_t add_edge(Edge e) {
      if (e.size() != _k) {
        throw StructureError("hypergraph: edge of size "
                             + std::to_string(e.size()) + ", expected "
                             + std::to_string(_k));
      }
      std::sort(e.begin(), e.end());
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] >= _n) {
          throw StructureError("hypergraph: vertex " + std::to_string(e[i])
                               + " out of range");
        }
        if (i > 0 && e[i] == e[i - 1]) {
          throw StructureError("hypergraph: repeated vertex "
                               + std::to_string(e[i]) + " in an edge");
        }
      }
      if (!_index.emplace(e, _edges.size()).second) {
        throw StructureError("hypergraph: duplicate edge");
      }
      for (Vertex v : e) {
        _inc[v].push_back(_edges.size());
      }
      _edges.push_back(std::move(e));
      return _edges.size() - 1;
    }

    std::size_t num_vertices() const noexcept {
      return _n;
    }

    std::size_t uniformity() const noexcept {
      return _k;
    }

    std::size_t num_edges() const noexcept {
      return _edges.size();
    }

    std::vector<Edge> const& edges() const noexcept {
      return _edges;
    }

    Edge const& edge(std::size_t i) const {
      return _edges.at(i);
    }

    // Indices of the edges containing v.
    std::vector<std::size_t> const& incident(Vertex v) const {
      return _inc.at(v);
    }

    std::optional<std::size_t> find_edge(Edge e) const {
      std::sort(e.begin(), e.end());
      auto it = _index.find(e);
      if (it == _index.end()) {
        return std::nullopt;
      }
      return it->second;
    }

    std::vector<Vertex> isolated_vertices() const {
      std::vector<Vertex> out;
      for (Vertex v = 0; v < _n; ++v) {
        if (_inc[v].empty()) {
          out.push_back(v);
        }
      }
      return out;
    }

    friend bool operator==(Hypergraph const& a, Hypergraph const& b) {
      return a._n == b._n && a._k == b._k && a._edges == b._edges;
    }

   private:
    std::size_t                           _n = 0;
    std::size_t                           _k = 2;
    std::vector<Edge>                     _edges;
    std::vector<std::vector<std::size_t>> _inc;
    std::map<Edge, std::size_t>           _index;
  };

  inline Hypergraph single_edge(std::size_t k) {
    Edge e(k);
    std::iota(e.begin(), e.end(), Vertex{0});
    return Hypergraph(k, k, {e});
  }

  ////////////////////////////////////////////////////////////////////////
  // Subhyperedges, girth, forests
  ////////////////////////////////////////////////////////////////////////

  // Is the vertex set contained in some edge?
  inline bool is_subhyperedge(Hypergraph const& H, std::vector<Vertex> s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.empty()) {
      return true;
    }
    if (s.size() > H.uniformity()) {
      return false;
    }
    for (std::size_t ei : H.incident(s.front())) {
      Edge const& e = H.edge(ei);
      if (std::includes(e.begin(), e.end(), s.begin(), s.end())) {
        return true;
      }
    }
    return false;
  }

  // Shortest cycle measured in edges; nullopt for a hyperforest. Cycles of
  // the hypergraph are the cycles of its vertex-edge incidence graph, with
  // half the length.
  inline std::optional<std::size_t> girth(Hypergraph const& H) {
    std::size_t const n = H.num_vertices(), m = H.num_edges();
    std::size_t const N = n + m;
    auto neighbours     = [&](std::size_t x) -> std::vector<std::size_t> {
      std::vector<std::size_t> out;
      if (x < n) {
        for (std::size_t e : H.incident(static_cast<Vertex>(x))) {
          out.push_back(n + e);
        }
      } else {
        for (Vertex v : H.edge(x - n)) {
          out.push_back(v);
        }
      }
      return out;
    };
    std::size_t              best = SIZE_MAX;
    std::vector<std::size_t> dist(N), parent(N);
    for (std::size_t s = n; s < N; ++s) {
      std::fill(dist.begin(), dist.end(), SIZE_MAX);
      dist[s]   = 0;
      parent[s] = SIZE_MAX;
      std::deque<std::size_t> q{s};
      while (!q.empty()) {
        std::size_t x = q.front();
        q.pop_front();
        if (2 * dist[x] >= best) {
          break;
        }
        for (std::size_t y : neighbours(x)) {
          if (dist[y] == SIZE_MAX) {
            dist[y]   = dist[x] + 1;
            parent[y] = x;
            q.push_back(y);
          } else if (y != parent[x]) {
            best = std::min(best, dist[x] + dist[y] + 1);
          }
        }
      }
    }
    if (best == SIZE_MAX) {
      return std::nullopt;
    }
    return best / 2;
  }

  // Repeatedly removes leaves: edges with at most one vertex shared with the
  // remaining edges.
  inline bool is_hyperforest(Hypergraph const& H) {
    std::size_t const        m = H.num_edges();
    std::vector<std::size_t> deg(H.num_vertices(), 0);
    for (auto const& e : H.edges()) {
      for (Vertex v : e) {
        ++deg[v];
      }
    }
    std::vector<bool> removed(m, false);
    std::size_t       left = m;
    bool              progress = true;
    while (left > 0 && progress) {
      progress = false;
      for (std::size_t i = 0; i < m; ++i) {
        if (removed[i]) {
          continue;
        }
        std::size_t shared = 0;
        for (Vertex v : H.edge(i)) {
          shared += deg[v] >= 2 ? 1 : 0;
        }
        if (shared <= 1) {
          removed[i] = true;
          --left;
          progress = true;
          for (Vertex v : H.edge(i)) {
            --deg[v];
          }
        }
      }
    }
    return left == 0;
  }

  ////////////////////////////////////////////////////////////////////////
  // Link structure
  ////////////////////////////////////////////////////////////////////////

  class UnionFind {
   public:
    explicit UnionFind(std::size_t n) : _p(n) {
      std::iota(_p.begin(), _p.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
      while (_p[x] != x) {
        x = _p[x] = _p[_p[x]];
      }
      return x;
    }

    void unite(std::size_t a, std::size_t b) {
      a = find(a);
      b = find(b);
      if (a != b) {
        _p[std::max(a, b)] = std::min(a, b);
      }
    }

   private:
    std::vector<std::size_t> _p;
  };

  struct LinkPartition {
    std::vector<Edge>                     sets;       // (k-1)-subhyperedges
    std::vector<Vertex>                   completer;  // per set
    std::vector<std::size_t>              class_of;   // per set
    std::vector<std::vector<std::size_t>> classes;    // set indices
    std::map<Edge, std::size_t>           index;      // set -> position

    std::optional<std::size_t> class_of_set(Edge s) const {
      std::sort(s.begin(), s.end());
      auto it = index.find(s);
      if (it == index.end()) {
        return std::nullopt;
      }
      return class_of[it->second];
    }
  };

  // Two (k-1)-subhyperedges are linked when one vertex completes both to
  // edges. Classes come from union-find over that relation and are then
  // checked to be cliques.
  inline LinkPartition link_partition(Hypergraph const& H) {
    auto g = girth(H);
    if (g && *g < 4) {
      throw PreconditionError("link partition: girth " + std::to_string(*g)
                              + " is below 4");
    }
    LinkPartition P;
    std::map<Vertex, std::vector<std::size_t>> by_completer;
    for (auto const& e : H.edges()) {
      for (std::size_t drop = 0; drop < e.size(); ++drop) {
        Edge s;
        for (std::size_t i = 0; i < e.size(); ++i) {
          if (i != drop) {
            s.push_back(e[i]);
          }
        }
        auto [it, fresh] = P.index.emplace(s, P.sets.size());
        if (fresh) {
          P.sets.push_back(s);
          P.completer.push_back(e[drop]);
        }
        by_completer[e[drop]].push_back(it->second);
      }
    }
    UnionFind uf(P.sets.size());
    for (auto const& [w, list] : by_completer) {
      for (std::size_t i = 1; i < list.size(); ++i) {
        uf.unite(list[0], list[i]);
      }
    }
    std::map<std::size_t, std::size_t> root_class;
    P.class_of.resize(P.sets.size());
    for (std::size_t i = 0; i < P.sets.size(); ++i) {
      std::size_t r = uf.find(i);
      auto [it, fresh] = root_class.emplace(r, P.classes.size());
      if (fresh) {
        P.classes.emplace_back();
      }
      P.class_of[i] = it->second;
      P.classes[it->second].push_back(i);
    }
    auto linked = [&](std::size_t a, std::size_t b) {
      Edge ea = P.sets[a], eb = P.sets[b];
      ea.push_back(P.completer[b]);
      eb.push_back(P.completer[a]);
      return (P.completer[a] == P.completer[b])
             || (H.find_edge(ea) && H.find_edge(eb)
                 && P.completer[a] == P.completer[b]);
    };
    for (auto const& cls : P.classes) {
      for (std::size_t i = 0; i < cls.size(); ++i) {
        for (std::size_t j = i + 1; j < cls.size(); ++j) {
          if (!linked(cls[i], cls[j])) {
            throw Error("link partition: class is not a clique");
          }
        }
      }
    }
    return P;
  }

  struct HyperpropReport {
    bool        pairwise_overlap = true;  // distinct edges share <= 1 vertex
    bool        proper_subsets   = true;  // all proper subsets => subhyperedge
    bool        pair_criterion   = true;  // subhyperedge iff all pairs are
    bool        link_cliques     = true;
    std::string detail;

    bool ok() const {
      return pairwise_overlap && proper_subsets && pair_criterion
             && link_cliques;
    }
  };

  // Checks the structural consequences of girth >= 4. Sets whose pairs are
  // all subhyperedges are exactly the cliques of the 2-section, which are
  // enumerated up to size k + 1.
  inline HyperpropReport check_hyperprop2(Hypergraph const& H) {
    HyperpropReport   r;
    std::size_t const n = H.num_vertices(), k = H.uniformity();
    for (std::size_t i = 0; i < H.num_edges(); ++i) {
      for (std::size_t j = i + 1; j < H.num_edges(); ++j) {
        Edge common;
        std::set_intersection(H.edge(i).begin(), H.edge(i).end(),
                              H.edge(j).begin(), H.edge(j).end(),
                              std::back_inserter(common));
        if (common.size() > 1 && r.pairwise_overlap) {
          r.pairwise_overlap = false;
          r.detail += "edges " + std::to_string(i) + "," + std::to_string(j)
                      + " share " + std::to_string(common.size())
                      + " vertices; ";
        }
      }
    }
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (auto const& e : H.edges()) {
      for (Vertex a : e) {
        for (Vertex b : e) {
          adj[a][b] = a != b;
        }
      }
    }
    std::vector<Vertex> clique;
    auto rec = [&](auto& self, Vertex from) -> void {
      if (clique.size() >= 3) {
        bool sub = is_subhyperedge(H, clique);
        if (!sub) {
          r.pair_criterion = false;
          bool proper = true;
          // all proper subsets are subhyperedges iff all (size-1)-subsets are
          for (std::size_t d = 0; d < clique.size() && proper; ++d) {
            std::vector<Vertex> s;
            for (std::size_t i = 0; i < clique.size(); ++i) {
              if (i != d) {
                s.push_back(clique[i]);
              }
            }
            proper = is_subhyperedge(H, s);
          }
          if (proper) {
            r.proper_subsets = false;
          }
          return;
        }
      }
      if (clique.size() == k + 1) {
        return;
      }
      for (Vertex v = from; v < n; ++v) {
        bool ok = true;
        for (Vertex u : clique) {
          ok = ok && adj[u][v];
        }
        if (ok) {
          clique.push_back(v);
          self(self, v + 1);
          clique.pop_back();
        }
      }
    };
    rec(rec, 0);
    if (!r.pair_criterion) {
      r.detail += "a set with all pairs in edges is not a subhyperedge; ";
    }
    try {
      link_partition(H);
    } catch (PreconditionError const& e) {
      r.link_cliques = false;
      r.detail += e.what();
    } catch (Error const& e) {
      r.link_cliques = false;
      r.detail += e.what();
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // (k-1)-in-k satisfaction
  ////////////////////////////////////////////////////////////////////////

  using Assignment = std::vector<std::uint8_t>;  // per vertex, 0 or 1

  // Exactly one vertex of each edge has the value 0.
  inline bool is_exact_satisfaction(Hypergraph const& H, Assignment const& a) {
    if (a.size() != H.num_vertices()) {
      return false;
    }
    for (auto const& e : H.edges()) {
      std::size_t zeros = 0;
      for (Vertex v : e) {
        zeros += a[v] == 0 ? 1 : 0;
      }
      if (zeros != 1) {
        return false;
      }
    }
    return true;
  }

  enum class SolveMode { first, count, enumerate };

  struct SolveResult {
    bool                    satisfiable = false;
    Assignment              assignment;  // first solution found
    std::uint64_t           count = 0;   // count and enumerate modes
    std::vector<Assignment> solutions;   // enumerate mode
    std::uint64_t           nodes = 0;   // search nodes visited
  };

  namespace detail {

    // Backtracking over vertex values with propagation: a 0 forces the rest
    // of each incident edge to 1, and an edge with k-1 ones forces a 0 on
    // the last vertex.
    class ExactSolver {
     public:
      ExactSolver(Hypergraph const& H, SolveMode mode, std::uint64_t limit)
          : _H(H), _mode(mode), _limit(limit), _val(H.num_vertices(), 2) {}

      SolveResult run(std::vector<std::pair<Vertex, std::uint8_t>> const& pins) {
        SolveResult r;
        _out = &r;
        for (auto [v, b] : pins) {
          if (v >= _H.num_vertices() || b > 1) {
            throw PreconditionError("solve: bad pinned value");
          }
          if (!set(v, b) || !propagate()) {
            return r;
          }
        }
        // isolated, unpinned vertices are free
        std::size_t free_isolated = 0;
        for (Vertex v = 0; v < _H.num_vertices(); ++v) {
          if (_H.incident(v).empty() && _val[v] == 2) {
            if (_mode == SolveMode::enumerate) {
              continue;
            }
            _val[v] = 1;
            ++free_isolated;
          }
        }
        search();
        if (_mode == SolveMode::count && free_isolated < 64) {
          r.count <<= free_isolated;
        }
        return r;
      }

     private:
      bool set(Vertex v, std::uint8_t b) {
        if (_val[v] != 2) {
          return _val[v] == b;
        }
        _val[v] = b;
        _trail.push_back(v);
        _queue.push_back(v);
        return true;
      }

      bool propagate() {
        while (!_queue.empty()) {
          Vertex v = _queue.front();
          _queue.pop_front();
          for (std::size_t ei : _H.incident(v)) {
            std::size_t zeros = 0, free = 0;
            Vertex      last  = 0;
            for (Vertex u : _H.edge(ei)) {
              if (_val[u] == 0) {
                ++zeros;
              } else if (_val[u] == 2) {
                ++free;
                last = u;
              }
            }
            if (zeros > 1 || (zeros == 0 && free == 0)) {
              _queue.clear();
              return false;
            }
            if (zeros == 1 && free > 0) {
              for (Vertex u : _H.edge(ei)) {
                if (_val[u] == 2 && !set(u, 1)) {
                  _queue.clear();
                  return false;
                }
              }
            } else if (zeros == 0 && free == 1) {
              if (!set(last, 0)) {
                _queue.clear();
                return false;
              }
            }
          }
        }
        return true;
      }

      void undo(std::size_t mark) {
        while (_trail.size() > mark) {
          _val[_trail.back()] = 2;
          _trail.pop_back();
        }
      }

      // Returns true when the search should stop.
      bool search() {
        ++_out->nodes;
        Vertex      pick = 0;
        std::size_t best = 0;
        bool        any  = false;
        for (Vertex v = 0; v < _H.num_vertices(); ++v) {
          if (_val[v] == 2) {
            std::size_t d = _H.incident(v).size() + 1;
            if (!any || d > best) {
              pick = v;
              best = d;
              any  = true;
            }
          }
        }
        if (!any) {
          if (!_out->satisfiable) {
            _out->satisfiable = true;
            _out->assignment.assign(_val.begin(), _val.end());
          }
          ++_out->count;
          if (_mode == SolveMode::enumerate) {
            _out->solutions.emplace_back(_val.begin(), _val.end());
          }
          return _mode == SolveMode::first
                 || (_limit != 0 && _out->count >= _limit);
        }
        for (std::uint8_t b : {std::uint8_t{0}, std::uint8_t{1}}) {
          std::size_t mark = _trail.size();
          bool        stop = false;
          if (set(pick, b) && propagate()) {
            stop = search();
          }
          _queue.clear();
          undo(mark);
          if (stop) {
            return true;
          }
        }
        return false;
      }

      Hypergraph const&  _H;
      SolveMode          _mode;
      std::uint64_t      _limit;
      std::vector<std::uint8_t> _val;  // 0, 1, or 2 for unassigned
      std::vector<Vertex> _trail;
      std::deque<Vertex>  _queue;
      SolveResult*        _out = nullptr;
    };

  }  // namespace detail

  // Exactly-one-zero satisfaction by complete backtracking. `pins` fixes
  // values beforehand; `limit` stops count/enumerate modes early (0: none).
  inline SolveResult solve_exact(
      Hypergraph const&                                    H,
      SolveMode                                            mode = SolveMode::first,
      std::vector<std::pair<Vertex, std::uint8_t>> const& pins = {},
      std::uint64_t                                        limit = 0) {
    detail::ExactSolver s(H, mode, limit);
    return s.run(pins);
  }

  struct PartialAssignment {
    std::vector<std::pair<Vertex, std::uint8_t>> values;  // at most two
  };

  struct RobustResult {
    bool                             holds = true;
    std::optional<PartialAssignment> failing;
    std::uint64_t                    solver_calls = 0;
  };

  // Every valid partial assignment on at most two vertices extends. (0,0) on
  // a pair is valid only when the pair lies in no edge.
  inline RobustResult robust2_check(Hypergraph const& H) {
    RobustResult      r;
    std::size_t const n = H.num_vertices();
    std::vector<std::uint8_t> single(n * 2, 0);
    std::vector<std::uint8_t> pair(n * n * 4, 0);
    auto cover = [&](Assignment const& a) {
      for (Vertex u = 0; u < n; ++u) {
        single[u * 2 + a[u]] = 1;
        for (Vertex v = u + 1; v < n; ++v) {
          pair[(u * n + v) * 4 + a[u] * 2 + a[v]] = 1;
        }
      }
    };
    auto attempt = [&](PartialAssignment const& p) {
      ++r.solver_calls;
      SolveResult s = solve_exact(H, SolveMode::first, p.values);
      if (!s.satisfiable) {
        r.holds   = false;
        r.failing = p;
        return false;
      }
      cover(s.assignment);
      return true;
    };
    if (!attempt(PartialAssignment{})) {
      return r;
    }
    for (Vertex v = 0; v < n; ++v) {
      for (std::uint8_t b = 0; b < 2; ++b) {
        if (!single[v * 2 + b] && !attempt({{{v, b}}})) {
          return r;
        }
      }
    }
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        bool const coedge = is_subhyperedge(H, {u, v});
        for (std::uint8_t a = 0; a < 2; ++a) {
          for (std::uint8_t b = 0; b < 2; ++b) {
            if (a == 0 && b == 0 && coedge) {
              continue;
            }
            if (!pair[(u * n + v) * 4 + a * 2 + b]
                && !attempt({{{u, a}, {v, b}}})) {
              return r;
            }
          }
        }
      }
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Colouring
  ////////////////////////////////////////////////////////////////////////

  struct ColourResult {
    bool                      colourable = false;
    std::vector<std::uint8_t> colouring;
    std::uint64_t             nodes = 0;
  };

  // No edge monochromatic.
  inline bool is_proper_colouring(Hypergraph const&                H,
                                  std::vector<std::uint8_t> const& c) {
    if (c.size() != H.num_vertices()) {
      return false;
    }
    for (auto const& e : H.edges()) {
      bool mono = true;
      for (Vertex v : e) {
        mono = mono && c[v] == c[e.front()];
      }
      if (mono) {
        return false;
      }
    }
    return true;
  }

  namespace detail {

    class ColourSolver {
     public:
      ColourSolver(Hypergraph const& H, std::size_t l)
          : _H(H), _l(l), _dom(H.num_vertices(), (std::uint64_t{1} << l) - 1) {}

      ColourResult run() {
        ColourResult r;
        _out = &r;
        search(true);
        return r;
      }

     private:
      static int single(std::uint64_t d) {
        return (d && !(d & (d - 1))) ? std::countr_zero(d) : -1;
      }

      bool restrict(Vertex v, std::uint64_t d) {
        std::uint64_t nd = _dom[v] & d;
        if (nd == _dom[v]) {
          return true;
        }
        _trail.emplace_back(v, _dom[v]);
        _dom[v] = nd;
        if (nd == 0) {
          return false;
        }
        if (single(nd) >= 0) {
          _queue.push_back(v);
        }
        return true;
      }

      // An edge whose fixed vertices share one colour and has one vertex
      // left may not give that vertex the same colour.
      bool propagate() {
        while (!_queue.empty()) {
          Vertex v = _queue.front();
          _queue.pop_front();
          for (std::size_t ei : _H.incident(v)) {
            Edge const& e    = _H.edge(ei);
            int         c    = single(_dom[v]);
            std::size_t open = 0;
            Vertex      last = 0;
            bool        same = true;
            for (Vertex u : e) {
              int cu = single(_dom[u]);
              if (cu < 0) {
                ++open;
                last = u;
              } else if (cu != c) {
                same = false;
              }
            }
            if (!same) {
              continue;
            }
            if (open == 0) {
              _queue.clear();
              return false;
            }
            if (open == 1
                && !restrict(last, ~(std::uint64_t{1} << c))) {
              _queue.clear();
              return false;
            }
          }
        }
        return true;
      }

      void undo(std::size_t mark) {
        while (_trail.size() > mark) {
          _dom[_trail.back().first] = _trail.back().second;
          _trail.pop_back();
        }
      }

      bool search(bool root) {
        ++_out->nodes;
        Vertex      pick = 0;
        int         bestsz = 0;
        std::size_t bestdeg = 0;
        bool        any = false;
        for (Vertex v = 0; v < _H.num_vertices(); ++v) {
          if (single(_dom[v]) < 0) {
            int sz = std::popcount(_dom[v]);
            std::size_t deg = _H.incident(v).size();
            if (!any || sz < bestsz || (sz == bestsz && deg > bestdeg)) {
              pick = v;
              bestsz = sz;
              bestdeg = deg;
              any = true;
            }
          }
        }
        if (!any) {
          _out->colourable = true;
          _out->colouring.resize(_H.num_vertices());
          for (Vertex v = 0; v < _H.num_vertices(); ++v) {
            _out->colouring[v] = static_cast<std::uint8_t>(single(_dom[v]));
          }
          return true;
        }
        for (std::size_t c = 0; c < _l; ++c) {
          if (!(_dom[pick] >> c & 1)) {
            continue;
          }
          std::size_t mark = _trail.size();
          bool        ok   = restrict(pick, std::uint64_t{1} << c);
          if (ok && _queue.empty()) {
            _queue.push_back(pick);
          }
          if (ok && propagate() && search(false)) {
            return true;
          }
          _queue.clear();
          undo(mark);
          // colours are interchangeable before anything is fixed
          if (root) {
            break;
          }
        }
        return false;
      }

      Hypergraph const&                          _H;
      std::size_t                                _l;
      std::vector<std::uint64_t>                 _dom;
      std::vector<std::pair<Vertex, std::uint64_t>> _trail;
      std::deque<Vertex>                         _queue;
      ColourResult*                              _out = nullptr;
    };

  }  // namespace detail

  // Backtracking with forward checking over colours 0..l-1.
  inline ColourResult colourable(Hypergraph const& H, std::size_t l) {
    if (l < 2 || l > 64) {
      throw PreconditionError("colourable: need 2 <= l <= 64");
    }
    if (H.num_vertices() == 0) {
      return ColourResult{true, {}, 0};
    }
    detail::ColourSolver s(H, l);
    return s.run();
  }

  ////////////////////////////////////////////////////////////////////////
  // Random instances
  ////////////////////////////////////////////////////////////////////////

  // Uniform integer in [0, bound) by rejection, independent of the standard
  // library's distribution implementations.
  inline std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound <= 1) {
      return 0;
    }
    std::uint64_t const limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t       x;
    do {
      x = rng();
    } while (x >= limit);
    return x % bound;
  }

  inline Edge random_k_set(std::mt19937_64& rng, std::size_t n,
                           std::size_t k) {
    Edge e;
    while (e.size() < k) {
      Vertex v = static_cast<Vertex>(draw_below(rng, n));
      if (std::find(e.begin(), e.end(), v) == e.end()) {
        e.push_back(v);
      }
    }
    std::sort(e.begin(), e.end());
    return e;
  }

  // Would adding e create a cycle with fewer than g edges? Such a cycle runs
  // through e and a path between two of its vertices of length <= g - 2.
  inline bool closes_short_cycle(Hypergraph const& H, Edge const& e,
                                 std::size_t g) {
    if (g <= 2) {
      return H.find_edge(e).has_value();
    }
    std::size_t const        maxlen = g - 2;
    std::vector<std::size_t> dist(H.num_vertices());
    for (std::size_t i = 0; i < e.size(); ++i) {
      std::fill(dist.begin(), dist.end(), SIZE_MAX);
      dist[e[i]] = 0;
      std::deque<Vertex> q{e[i]};
      while (!q.empty()) {
        Vertex v = q.front();
        q.pop_front();
        if (dist[v] >= maxlen) {
          continue;
        }
        for (std::size_t ei : H.incident(v)) {
          for (Vertex u : H.edge(ei)) {
            if (dist[u] == SIZE_MAX) {
              dist[u] = dist[v] + 1;
              q.push_back(u);
            }
          }
        }
      }
      for (std::size_t j = i + 1; j < e.size(); ++j) {
        if (dist[e[j]] != SIZE_MAX) {
          return true;
        }
      }
    }
    return false;
  }

  namespace detail {

    inline constexpr std::uint64_t kSweepLimit = 1u << 21;

    inline std::uint64_t binomial(std::size_t n, std::size_t k) {
      std::uint64_t r = 1;
      for (std::size_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > kSweepLimit) {
          return kSweepLimit + 1;
        }
      }
      return r;
    }

    // Offers every k-subset once, in a seeded random order, so the result
    // is maximal. Skipped when there are too many subsets.
    inline void complete_randomly(Hypergraph& H, std::mt19937_64& rng,
                                  std::size_t g, std::size_t edges) {
      std::size_t const n = H.num_vertices(), k = H.uniformity();
      if (binomial(n, k) > kSweepLimit) {
        return;
      }
      std::vector<Edge> all;
      Edge              cur(k);
      for (std::size_t i = 0; i < k; ++i) {
        cur[i] = static_cast<Vertex>(i);
      }
      while (true) {
        all.push_back(cur);
        std::size_t i = k;
        while (i > 0 && cur[i - 1] == n - k + i - 1) {
          --i;
        }
        if (i == 0) {
          break;
        }
        ++cur[i - 1];
        for (std::size_t j = i; j < k; ++j) {
          cur[j] = cur[j - 1] + 1;
        }
      }
      for (std::size_t i = all.size(); i > 1; --i) {
        std::swap(all[i - 1], all[draw_below(rng, i)]);
      }
      for (auto& e : all) {
        if (edges != 0 && H.num_edges() >= edges) {
          return;
        }
        if (!H.find_edge(e) && !closes_short_cycle(H, e, g)) {
          H.add_edge(std::move(e));
        }
      }
    }

  }  // namespace detail

  enum class HardTarget { none, not_colourable, exact_unsat };

  struct RandomHypergraphParams {
    std::size_t   n       = 20;
    std::size_t   k       = 3;
    std::size_t   girth   = 2;    // minimum girth; 2 means unconstrained
    std::size_t   edges   = 0;    // stop after this many edges (0: maximal)
    HardTarget    target  = HardTarget::none;
    std::size_t   colours = 2;    // for not_colourable
    std::uint64_t seed    = 1;
    std::size_t   budget  = 20;   // independent attempts
    std::size_t   stall   = 0;    // rejected draws before giving up (0: auto)
  };

  struct RandomHypergraphResult {
    std::optional<Hypergraph>  hypergraph;
    std::size_t                attempts = 0;
    std::optional<std::size_t> certified_girth;  // nullopt also for forests
    bool                       girth_certified = false;
    bool                       target_certified = false;
    std::uint64_t              certificate_nodes = 0;
  };

  // Draws random k-sets and keeps those that do not close a cycle shorter
  // than the target girth, until the edge count is reached or draws keep
  // failing; the remaining k-sets are then offered in random order when
  // there are few enough of them. Each attempt is then certified: girth by
  // girth(), the target by a complete solver run. Nothing is returned
  // uncertified.
  inline RandomHypergraphResult random_hard_hypergraph(
      RandomHypergraphParams const& p) {
    if (p.k < 2 || p.n < p.k) {
      throw PreconditionError("random hypergraph: need n >= k >= 2");
    }
    RandomHypergraphResult out;
    std::mt19937_64        rng(p.seed);
    std::size_t const      stall =
        p.stall ? p.stall : std::max<std::size_t>(200, 20 * p.n);
    for (std::size_t attempt = 0; attempt < p.budget; ++attempt) {
      ++out.attempts;
      Hypergraph  H(p.n, p.k);
      std::size_t misses = 0;
      while (misses < stall && (p.edges == 0 || H.num_edges() < p.edges)) {
        Edge e = random_k_set(rng, p.n, p.k);
        if (H.find_edge(e) || closes_short_cycle(H, e, p.girth)) {
          ++misses;
          continue;
        }
        H.add_edge(std::move(e));
        misses = 0;
      }
      if (p.edges == 0 || H.num_edges() < p.edges) {
        detail::complete_randomly(H, rng, p.girth, p.edges);
      }
      auto g = girth(H);
      if (g && *g < p.girth) {
        continue;
      }
      bool          hit   = true;
      std::uint64_t nodes = 0;
      if (p.target == HardTarget::not_colourable) {
        auto c = colourable(H, p.colours);
        hit    = !c.colourable;
        nodes  = c.nodes;
      } else if (p.target == HardTarget::exact_unsat) {
        auto s = solve_exact(H);
        hit    = !s.satisfiable;
        nodes  = s.nodes;
      }
      if (hit) {
        out.hypergraph        = std::move(H);
        out.certified_girth   = g;
        out.girth_certified   = true;
        out.target_certified  = true;
        out.certificate_nodes = nodes;
        return out;
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // G+ closure
  ////////////////////////////////////////////////////////////////////////

  struct GplusClosure {
    std::vector<Vertex> vertices;  // sorted
    Hypergraph          induced;   // on 0..|vertices|-1 in sorted order
    std::size_t         bound = 0;  // k * C(|V_G|, 2) + |V_G|
    bool                bound_holds = true;
  };

  // V_G together with every edge meeting V_G in at least two vertices.
  inline GplusClosure gplus_closure(Hypergraph const&   H,
                                    std::vector<Vertex> VG) {
    std::sort(VG.begin(), VG.end());
    VG.erase(std::unique(VG.begin(), VG.end()), VG.end());
    std::vector<bool> inG(H.num_vertices(), false);
    for (Vertex v : VG) {
      if (v >= H.num_vertices()) {
        throw PreconditionError("gplus: vertex out of range");
      }
      inG[v] = true;
    }
    std::set<Vertex> V(VG.begin(), VG.end());
    for (auto const& e : H.edges()) {
      std::size_t meet = 0;
      for (Vertex v : e) {
        meet += inG[v] ? 1 : 0;
      }
      if (meet >= 2) {
        V.insert(e.begin(), e.end());
      }
    }
    GplusClosure out;
    out.vertices.assign(V.begin(), V.end());
    std::map<Vertex, Vertex> pos;
    for (std::size_t i = 0; i < out.vertices.size(); ++i) {
      pos[out.vertices[i]] = static_cast<Vertex>(i);
    }
    out.induced = Hypergraph(out.vertices.size(), H.uniformity());
    for (auto const& e : H.edges()) {
      bool inside = std::all_of(e.begin(), e.end(),
                                [&](Vertex v) { return V.count(v) > 0; });
      if (inside) {
        Edge f;
        for (Vertex v : e) {
          f.push_back(pos[v]);
        }
        out.induced.add_edge(std::move(f));
      }
    }
    std::size_t const g = VG.size();
    out.bound       = H.uniformity() * (g * (g - (g ? 1 : 0)) / 2) + g;
    out.bound_holds = out.vertices.size() <= out.bound;
    return out;
  }

}  // namespace aisr

#endif  // AISR_HYPERGRAPH_HPP_
