// Brute-force reference implementations used by the test suites. None of
// these call into the search routines they are compared against.

#ifndef AISR_TESTS_ORACLES_HPP_
#define AISR_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "aisr/aisr.hpp"

namespace oracle {

  using aisr::Elem;

  // Raw tables, no library calls.
  inline bool is_ai_semiring(std::size_t              n,
                             std::vector<Elem> const& add,
                             std::vector<Elem> const& mul) {
    auto A = [&](Elem x, Elem y) { return add[x * n + y]; };
    auto M = [&](Elem x, Elem y) { return mul[x * n + y]; };
    for (Elem x = 0; x < n; ++x) {
      if (A(x, x) != x) {
        return false;
      }
      for (Elem y = 0; y < n; ++y) {
        if (A(x, y) != A(y, x)) {
          return false;
        }
        for (Elem z = 0; z < n; ++z) {
          if (A(A(x, y), z) != A(x, A(y, z))) {
            return false;
          }
          if (M(M(x, y), z) != M(x, M(y, z))) {
            return false;
          }
          if (M(x, A(y, z)) != A(M(x, y), M(x, z))) {
            return false;
          }
          if (M(A(y, z), x) != A(M(y, x), M(z, x))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  inline bool is_ai_semiring(aisr::FiniteSemiring const& S) {
    return is_ai_semiring(S.size(), S.add_table(), S.mul_table());
  }

  // xy = xz != 0 => y = z and yx = zx != 0 => y = z.
  inline bool zero_cancellative(std::size_t              n,
                                std::vector<Elem> const& mul,
                                Elem                     zero) {
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        for (Elem z = 0; z < n; ++z) {
          if (y == z) {
            continue;
          }
          Elem l = mul[x * n + y];
          if (l != zero && l == mul[x * n + z]) {
            return false;
          }
          Elem r = mul[y * n + x];
          if (r != zero && r == mul[z * n + x]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Terms
  ////////////////////////////////////////////////////////////////////////

  // Direct evaluation of a sum of words under an assignment.
  inline Elem eval(aisr::FiniteSemiring const&   S,
                   aisr::AiTerm const&           t,
                   std::vector<Elem> const&      a) {
    std::optional<Elem> sum;
    for (auto const& w : t) {
      Elem p = a[w[0]];
      for (std::size_t i = 1; i < w.size(); ++i) {
        p = S.mul(p, a[w[i]]);
      }
      sum = sum ? S.add(*sum, p) : p;
    }
    return *sum;
  }

  // Every assignment of nvars variables, by odometer.
  inline bool holds(aisr::FiniteSemiring const& S,
                    aisr::AiTerm const&         u,
                    aisr::AiTerm const&         v,
                    std::size_t                 nvars) {
    std::vector<Elem> a(nvars, 0);
    while (true) {
      if (eval(S, u, a) != eval(S, v, a)) {
        return false;
      }
      std::size_t i = 0;
      while (i < nvars && ++a[i] == S.size()) {
        a[i++] = 0;
      }
      if (i == nvars) {
        return true;
      }
    }
  }

  inline aisr::AiTerm random_term(std::mt19937_64& rng,
                                  std::size_t      vars,
                                  std::size_t      length,
                                  std::size_t      summands) {
    aisr::AiTerm t;
    std::size_t  m = 1 + rng() % summands;
    for (std::size_t i = 0; i < m; ++i) {
      aisr::Word w(1 + rng() % length);
      for (auto& x : w) {
        x = static_cast<aisr::Var>(rng() % vars);
      }
      t.insert(w);
    }
    return t;
  }

  // All words over `vars` letters of length 1..len.
  inline std::vector<aisr::Word> all_words(std::size_t vars, std::size_t len) {
    std::vector<aisr::Word> out;
    std::function<void(aisr::Word&)> rec = [&](aisr::Word& w) {
      if (!w.empty()) {
        out.push_back(w);
      }
      if (w.size() == len) {
        return;
      }
      for (aisr::Var x = 0; x < vars; ++x) {
        w.push_back(x);
        rec(w);
        w.pop_back();
      }
    };
    aisr::Word w;
    rec(w);
    return out;
  }

  inline bool has_exact_hitting(std::vector<std::vector<aisr::Var>> const& fam,
                                std::size_t nvars) {
    // Exactly-one hitting set: Z meeting each member in exactly one point.
    for (std::uint32_t mask = 1; mask < (1u << nvars); ++mask) {
      bool ok = true;
      for (auto const& s : fam) {
        std::set<aisr::Var> distinct(s.begin(), s.end());
        std::size_t         hit = 0;
        for (aisr::Var x : distinct) {
          hit += (mask >> x) & 1;
        }
        if (hit != 1) {
          ok = false;
          break;
        }
      }
      if (ok) {
        return true;
      }
    }
    return false;
  }

  ////////////////////////////////////////////////////////////////////////
  // Hypergraphs
  ////////////////////////////////////////////////////////////////////////

  inline std::vector<aisr::Edge> random_edges(std::mt19937_64& rng,
                                              std::size_t      n,
                                              std::size_t      k,
                                              std::size_t      m) {
    std::set<aisr::Edge> es;
    for (std::size_t tries = 0; es.size() < m && tries < 50 * m + 50;
         ++tries) {
      std::vector<aisr::Vertex> all(n);
      for (std::size_t i = 0; i < n; ++i) {
        all[i] = static_cast<aisr::Vertex>(i);
      }
      std::shuffle(all.begin(), all.end(), rng);
      aisr::Edge e(all.begin(), all.begin() + static_cast<long>(k));
      std::sort(e.begin(), e.end());
      es.insert(e);
    }
    return {es.begin(), es.end()};
  }

  // Number of exact (one zero per edge) satisfactions, by 2^n sweep.
  inline std::uint64_t count_exact(aisr::Hypergraph const& H) {
    std::size_t const n = H.num_vertices();
    std::uint64_t     c = 0;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      bool ok = true;
      for (auto const& e : H.edges()) {
        std::size_t zeros = 0;
        for (auto v : e) {
          zeros += ((m >> v) & 1) ? 0 : 1;
        }
        if (zeros != 1) {
          ok = false;
          break;
        }
      }
      c += ok ? 1 : 0;
    }
    return c;
  }

  // Some colouring with l colours and no monochromatic edge, by l^n sweep.
  inline bool colourable(aisr::Hypergraph const& H, std::size_t l) {
    std::size_t const         n = H.num_vertices();
    std::vector<std::uint8_t> c(n, 0);
    while (true) {
      bool ok = true;
      for (auto const& e : H.edges()) {
        bool mono = true;
        for (auto v : e) {
          mono = mono && c[v] == c[e[0]];
        }
        if (mono) {
          ok = false;
          break;
        }
      }
      if (ok) {
        return true;
      }
      std::size_t i = 0;
      while (i < n && ++c[i] == l) {
        c[i++] = 0;
      }
      if (i == n) {
        return false;
      }
    }
  }

  // Shortest Berge cycle by depth-first search over alternating sequences of
  // distinct vertices and distinct edges, up to length `cap`.
  inline std::optional<std::size_t> berge_girth(aisr::Hypergraph const& H,
                                                std::size_t             cap) {
    std::size_t const n = H.num_vertices(), m = H.num_edges();
    for (std::size_t L = 2; L <= cap; ++L) {
      for (aisr::Vertex start = 0; start < n; ++start) {
        std::vector<bool> vused(n, false), eused(m, false);
        vused[start] = true;
        std::function<bool(aisr::Vertex, std::size_t)> rec =
            [&](aisr::Vertex v, std::size_t depth) -> bool {
          for (std::size_t i = 0; i < m; ++i) {
            auto const& e = H.edge(i);
            if (eused[i] || !std::count(e.begin(), e.end(), v)) {
              continue;
            }
            eused[i] = true;
            for (auto w : e) {
              if (w == v) {
                continue;
              }
              if (depth + 1 == L) {
                if (w == start) {
                  return true;
                }
              } else if (!vused[w] && w > start) {
                vused[w] = true;
                if (rec(w, depth + 1)) {
                  return true;
                }
                vused[w] = false;
              }
            }
            eused[i] = false;
          }
          return false;
        };
        if (rec(start, 0)) {
          return L;
        }
      }
    }
    return std::nullopt;
  }

  // Grown edge by edge: each new edge meets the existing vertices in at most
  // one vertex, so no cycle can form.
  inline aisr::Hypergraph random_forest(std::mt19937_64& rng,
                                        std::size_t      k,
                                        std::size_t      max_vertices) {
    std::vector<aisr::Edge> edges;
    std::size_t             used = 0;
    while (used + k <= max_vertices) {
      aisr::Edge e;
      std::size_t fresh = k;
      if (used > 0 && rng() % 5 != 0) {
        e.push_back(static_cast<aisr::Vertex>(rng() % used));
        fresh = k - 1;
      }
      for (std::size_t i = 0; i < fresh; ++i) {
        e.push_back(static_cast<aisr::Vertex>(used++));
      }
      edges.push_back(e);
      if (rng() % 4 == 0) {
        break;
      }
    }
    return aisr::Hypergraph(used, k, edges);
  }

  // Every valid partial assignment on at most two vertices extends to some
  // full satisfaction in the complete solution list.
  inline bool robust2(aisr::Hypergraph const& H) {
    std::size_t const                      n = H.num_vertices();
    std::vector<std::vector<std::uint8_t>> sols;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      std::vector<std::uint8_t> a(n);
      for (std::size_t v = 0; v < n; ++v) {
        a[v] = (m >> v) & 1;
      }
      if (aisr::is_exact_satisfaction(H, a)) {
        sols.push_back(a);
      }
    }
    if (sols.empty()) {
      return false;
    }
    auto co_edge = [&](aisr::Vertex u, aisr::Vertex v) {
      for (auto const& e : H.edges()) {
        if (std::count(e.begin(), e.end(), u) && std::count(e.begin(), e.end(), v)) {
          return true;
        }
      }
      return false;
    };
    for (aisr::Vertex u = 0; u < n; ++u) {
      for (std::uint8_t a = 0; a < 2; ++a) {
        bool ext = std::any_of(sols.begin(), sols.end(),
                               [&](auto const& s) { return s[u] == a; });
        if (!ext) {
          return false;
        }
        for (aisr::Vertex v = u + 1; v < n; ++v) {
          for (std::uint8_t b = 0; b < 2; ++b) {
            if (a == 0 && b == 0 && co_edge(u, v)) {
              continue;
            }
            bool e2 = std::any_of(sols.begin(), sols.end(), [&](auto const& s) {
              return s[u] == a && s[v] == b;
            });
            if (!e2) {
              return false;
            }
          }
        }
      }
    }
    return true;
  }

}  // namespace oracle

#endif  // AISR_TESTS_ORACLES_HPP_
