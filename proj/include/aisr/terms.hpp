#ifndef AISR_TERMS_HPP_
#define AISR_TERMS_HPP_

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "caps.hpp"
#include "error.hpp"
#include "semiring.hpp"

namespace aisr {

  using Var  = std::uint32_t;
  using Word = std::vector<Var>;

  // Variable names in order of first registration. Names match [a-z][0-9]*.
  class VarTable {
   public:
    Var intern(std::string const& name) {
      auto it = _index.find(name);
      if (it != _index.end()) {
        return it->second;
      }
      Var v = static_cast<Var>(_names.size());
      _names.push_back(name);
      _index.emplace(name, v);
      return v;
    }

    std::optional<Var> find(std::string const& name) const {
      auto it = _index.find(name);
      if (it == _index.end()) {
        return std::nullopt;
      }
      return it->second;
    }

    std::string name(Var v) const {
      if (v < _names.size()) {
        return _names[v];
      }
      return "v" + std::to_string(v);
    }

    std::size_t size() const noexcept {
      return _names.size();
    }

   private:
    std::vector<std::string>   _names;
    std::map<std::string, Var> _index;
  };

  ////////////////////////////////////////////////////////////////////////
  // General terms
  ////////////////////////////////////////////////////////////////////////

  struct GeneralTerm {
    enum class Kind { var, sum, product };
    Kind                     kind = Kind::var;
    Var                      var  = 0;
    std::vector<GeneralTerm> children;

    static GeneralTerm variable(Var v) {
      return GeneralTerm{Kind::var, v, {}};
    }

    static GeneralTerm sum(std::vector<GeneralTerm> c) {
      return c.size() == 1 ? std::move(c[0])
                           : GeneralTerm{Kind::sum, 0, std::move(c)};
    }

    static GeneralTerm product(std::vector<GeneralTerm> c) {
      return c.size() == 1 ? std::move(c[0])
                           : GeneralTerm{Kind::product, 0, std::move(c)};
    }

    std::size_t depth() const {
      std::size_t d = 0;
      for (auto const& c : children) {
        d = std::max(d, c.depth());
      }
      return d + 1;
    }
  };

  namespace detail {

    // sum     := product ('+' product)*
    // product := power (['*'] power)*
    // power   := atom ('^' number)?
    // atom    := variable | '(' sum ')'
    class TermParser {
     public:
      TermParser(std::string_view text, VarTable& vars)
          : _s(text), _vars(vars) {}

      GeneralTerm parse_sum() {
        std::vector<GeneralTerm> parts{parse_product()};
        while (peek() == '+') {
          ++_i;
          parts.push_back(parse_product());
        }
        return GeneralTerm::sum(std::move(parts));
      }

      char peek() {
        skip();
        return _i < _s.size() ? _s[_i] : '\0';
      }

      std::size_t pos() {
        skip();
        return _i;
      }

      void expect(char c) {
        if (peek() != c) {
          fail(std::string("expected '") + c + "'");
        }
        ++_i;
      }

      [[noreturn]] void fail(std::string const& what) {
        throw ParseError(what, pos());
      }

     private:
      void skip() {
        while (_i < _s.size()
               && std::isspace(static_cast<unsigned char>(_s[_i]))) {
          ++_i;
        }
      }

      static bool starts_atom(char c) {
        return c == '(' || (c >= 'a' && c <= 'z');
      }

      GeneralTerm parse_product() {
        std::vector<GeneralTerm> parts{parse_power()};
        while (true) {
          char c = peek();
          if (c == '*') {
            ++_i;
            parts.push_back(parse_power());
          } else if (starts_atom(c)) {
            parts.push_back(parse_power());
          } else {
            break;
          }
        }
        return GeneralTerm::product(std::move(parts));
      }

      GeneralTerm parse_power() {
        GeneralTerm base = parse_atom();
        if (peek() != '^') {
          return base;
        }
        ++_i;
        skip();
        std::size_t start = _i;
        while (_i < _s.size() && std::isdigit(static_cast<unsigned char>(_s[_i]))) {
          ++_i;
        }
        if (start == _i || _i - start > 3) {
          _i = start;
          fail("expected exponent");
        }
        int e = std::stoi(std::string(_s.substr(start, _i - start)));
        if (e < 1) {
          _i = start;
          fail("exponent must be at least 1");
        }
        return GeneralTerm::product(std::vector<GeneralTerm>(e, base));
      }

      GeneralTerm parse_atom() {
        char c = peek();
        if (c == '(') {
          ++_i;
          GeneralTerm t = parse_sum();
          expect(')');
          return t;
        }
        if (c >= 'a' && c <= 'z') {
          std::size_t start = _i++;
          while (_i < _s.size()
                 && std::isdigit(static_cast<unsigned char>(_s[_i]))) {
            ++_i;
          }
          return GeneralTerm::variable(
              _vars.intern(std::string(_s.substr(start, _i - start))));
        }
        fail("expected variable or '('");
      }

      std::string_view _s;
      std::size_t      _i = 0;
      VarTable&        _vars;
    };

  }  // namespace detail

  inline GeneralTerm parse_term(std::string_view text, VarTable& vars) {
    detail::TermParser p(text, vars);
    GeneralTerm        t = p.parse_sum();
    if (p.peek() != '\0') {
      p.fail("unexpected character");
    }
    return t;
  }

  inline std::pair<GeneralTerm, GeneralTerm> parse_identity(
      std::string_view text,
      VarTable&        vars) {
    detail::TermParser p(text, vars);
    GeneralTerm        lhs = p.parse_sum();
    p.expect('=');
    GeneralTerm rhs = p.parse_sum();
    if (p.peek() != '\0') {
      p.fail("unexpected character");
    }
    return {std::move(lhs), std::move(rhs)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Normal forms
  ////////////////////////////////////////////////////////////////////////

  using AiTerm = std::set<Word>;

  inline AiTerm normalize_term(GeneralTerm const& t) {
    switch (t.kind) {
      case GeneralTerm::Kind::var:
        return AiTerm{Word{t.var}};
      case GeneralTerm::Kind::sum: {
        AiTerm out;
        for (auto const& c : t.children) {
          auto s = normalize_term(c);
          out.insert(s.begin(), s.end());
        }
        return out;
      }
      case GeneralTerm::Kind::product: {
        AiTerm out{Word{}};
        for (auto const& c : t.children) {
          AiTerm rhs = normalize_term(c);
          AiTerm next;
          for (auto const& u : out) {
            for (auto const& v : rhs) {
              Word w = u;
              w.insert(w.end(), v.begin(), v.end());
              next.insert(std::move(w));
            }
          }
          out = std::move(next);
        }
        return out;
      }
    }
    return {};
  }

  inline std::string word_str(Word const& w, VarTable const& vars) {
    std::string out;
    for (Var v : w) {
      out += vars.name(v);
    }
    return out;
  }

  inline std::string term_str(AiTerm const& t, VarTable const& vars) {
    std::string out;
    for (auto const& w : t) {
      if (!out.empty()) {
        out += " + ";
      }
      out += word_str(w, vars);
    }
    return out;
  }

  // Sorted distinct variables.
  inline std::vector<Var> content(AiTerm const& t) {
    std::set<Var> s;
    for (auto const& w : t) {
      s.insert(w.begin(), w.end());
    }
    return {s.begin(), s.end()};
  }

  inline std::size_t occurrences(Var x, Word const& w) {
    return static_cast<std::size_t>(std::count(w.begin(), w.end(), x));
  }

  // Highest variable id plus one over both sides.
  inline std::size_t var_bound(AiTerm const& u, AiTerm const& v) {
    std::size_t m = 0;
    for (auto const* t : {&u, &v}) {
      for (auto const& w : *t) {
        for (Var x : w) {
          m = std::max<std::size_t>(m, x + 1);
        }
      }
    }
    return m;
  }

  ////////////////////////////////////////////////////////////////////////
  // Evaluation
  ////////////////////////////////////////////////////////////////////////

  inline Elem evaluate_word(FiniteSemiring const&    S,
                            Word const&              w,
                            std::vector<Elem> const& a) {
    if (w.empty()) {
      throw PreconditionError("evaluate: empty word");
    }
    Elem p = a.at(w[0]);
    for (std::size_t i = 1; i < w.size(); ++i) {
      p = S.mul(p, a.at(w[i]));
    }
    return p;
  }

  // `a` is indexed by variable id; kNoElem marks an unassigned variable.
  inline Elem evaluate(FiniteSemiring const&    S,
                       AiTerm const&            t,
                       std::vector<Elem> const& a) {
    if (t.empty()) {
      throw PreconditionError("evaluate: empty term");
    }
    for (auto const& w : t) {
      for (Var x : w) {
        if (x >= a.size() || a[x] == kNoElem) {
          throw PreconditionError("evaluate: variable " + std::to_string(x)
                                  + " is not assigned");
        }
      }
    }
    auto it  = t.begin();
    Elem sum = evaluate_word(S, *it, a);
    for (++it; it != t.end(); ++it) {
      sum = S.add(sum, evaluate_word(S, *it, a));
    }
    return sum;
  }

  inline Elem evaluate_tree(FiniteSemiring const&    S,
                            GeneralTerm const&       t,
                            std::vector<Elem> const& a) {
    switch (t.kind) {
      case GeneralTerm::Kind::var:
        return a.at(t.var);
      case GeneralTerm::Kind::sum: {
        Elem r = evaluate_tree(S, t.children[0], a);
        for (std::size_t i = 1; i < t.children.size(); ++i) {
          r = S.add(r, evaluate_tree(S, t.children[i], a));
        }
        return r;
      }
      case GeneralTerm::Kind::product: {
        Elem r = evaluate_tree(S, t.children[0], a);
        for (std::size_t i = 1; i < t.children.size(); ++i) {
          r = S.mul(r, evaluate_tree(S, t.children[i], a));
        }
        return r;
      }
    }
    return kNoElem;
  }

  struct IdentityCheck {
    bool              holds = true;
    std::vector<Elem> counterexample;  // indexed by variable id
    std::uint64_t     evaluated = 0;
  };

  // Exhaustive over assignments of the variables occurring in u or v, in
  // lexicographic order with the smallest variable id most significant. The
  // first counterexample in that order is returned.
  inline IdentityCheck holds_identity(FiniteSemiring const& S,
                                      AiTerm const&         u,
                                      AiTerm const&         v,
                                      Caps const&           caps = {}) {
    std::vector<Var> vars;
    {
      std::set<Var> s;
      for (auto const* t : {&u, &v}) {
        auto c = content(*t);
        s.insert(c.begin(), c.end());
      }
      vars.assign(s.begin(), s.end());
    }
    std::size_t const n     = S.size();
    std::uint64_t     total = 1;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      total *= n;
      if (total > caps.max_assignments) {
        throw SizeError("identity check: " + std::to_string(n) + "^"
                        + std::to_string(vars.size())
                        + " assignments exceed the cap");
      }
    }
    IdentityCheck     r;
    std::vector<Elem> a(var_bound(u, v), kNoElem);
    for (Var x : vars) {
      a[x] = 0;
    }
    while (true) {
      ++r.evaluated;
      if (evaluate(S, u, a) != evaluate(S, v, a)) {
        r.holds          = false;
        r.counterexample = a;
        return r;
      }
      std::size_t i = vars.size();
      while (i > 0) {
        --i;
        if (++a[vars[i]] < n) {
          break;
        }
        a[vars[i]] = 0;
        if (i == 0) {
          return r;
        }
      }
      if (vars.empty()) {
        return r;
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Decision procedures
  ////////////////////////////////////////////////////////////////////////

  using DeltaFamily = std::set<std::vector<Var>>;

  // Nonempty Z within the content such that every word meets Z in exactly
  // one variable, which occurs there exactly once.
  inline DeltaFamily delta_set(AiTerm const& t) {
    auto c = content(t);
    if (c.size() > 24) {
      throw SizeError("delta set: more than 24 variables");
    }
    std::vector<std::vector<std::size_t>> occ;  // per word, per content var
    for (auto const& w : t) {
      std::vector<std::size_t> o(c.size(), 0);
      for (Var x : w) {
        ++o[std::lower_bound(c.begin(), c.end(), x) - c.begin()];
      }
      occ.push_back(std::move(o));
    }
    DeltaFamily out;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << c.size());
         ++mask) {
      bool ok = true;
      for (auto const& o : occ) {
        std::size_t hit = 0, once = 0;
        for (std::size_t i = 0; i < c.size(); ++i) {
          if ((mask >> i & 1) && o[i] > 0) {
            ++hit;
            once += o[i] == 1 ? 1 : 0;
          }
        }
        if (hit != 1 || once != 1) {
          ok = false;
          break;
        }
      }
      if (ok) {
        std::vector<Var> z;
        for (std::size_t i = 0; i < c.size(); ++i) {
          if (mask >> i & 1) {
            z.push_back(c[i]);
          }
        }
        out.insert(std::move(z));
      }
    }
    return out;
  }

  inline bool s7_decide(AiTerm const& u, AiTerm const& v) {
    return content(u) == content(v) && delta_set(u) == delta_set(v);
  }

  inline bool m2_decide(AiTerm const& u, AiTerm const& v) {
    return content(u) == content(v);
  }

  // One word per member, variables in increasing id order.
  inline AiTerm exact_cover_term(std::vector<std::vector<Var>> const& family) {
    if (family.empty()) {
      throw PreconditionError("exact cover term: empty family");
    }
    AiTerm t;
    for (auto s : family) {
      if (s.empty()) {
        throw PreconditionError("exact cover term: empty member");
      }
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
      t.insert(std::move(s));
    }
    return t;
  }

  // t * t, distributed.
  inline AiTerm square(AiTerm const& t) {
    AiTerm out;
    for (auto const& u : t) {
      for (auto const& v : t) {
        Word w = u;
        w.insert(w.end(), v.begin(), v.end());
        out.insert(std::move(w));
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Separation search
  ////////////////////////////////////////////////////////////////////////

  struct SeparationBounds {
    std::size_t vars     = 8;
    std::size_t length   = 4;
    std::size_t summands = 2;
    bool        linear   = false;  // each variable occurs once overall
  };

  struct Separation {
    AiTerm        lhs;
    AiTerm        rhs;
    std::vector<Elem> counterexample;  // in T
  };

  struct SeparationResult {
    std::optional<Separation> found;
    std::uint64_t             candidates = 0;
    std::uint64_t             valid_in_s = 0;
  };

  // Variables printed as x1, x2, ... by id.
  inline std::string identity_str(AiTerm const& u, AiTerm const& v) {
    auto side = [&](AiTerm const& t) {
      std::string s;
      for (auto const& w : t) {
        if (!s.empty()) {
          s += " + ";
        }
        for (Var x : w) {
          s += "x" + std::to_string(x + 1);
        }
      }
      return s;
    };
    return side(u) + " = " + side(v);
  }

  namespace detail {

    // Compositions of `total` into between 1 and `parts` pieces, each in
    // [1, maxlen], in nonincreasing order.
    inline void shapes(std::size_t total, std::size_t parts, std::size_t maxlen,
                       std::vector<std::size_t>&               cur,
                       std::vector<std::vector<std::size_t>>& out) {
      if (total == 0) {
        if (!cur.empty()) {
          out.push_back(cur);
        }
        return;
      }
      if (cur.size() == parts) {
        return;
      }
      std::size_t hi = std::min(total, maxlen);
      if (!cur.empty()) {
        hi = std::min(hi, cur.back());
      }
      for (std::size_t l = hi; l >= 1; --l) {
        cur.push_back(l);
        shapes(total - l, parts, maxlen, cur, out);
        cur.pop_back();
      }
    }

    // Renames variables in order of first appearance after sorting each
    // side and ordering the two sides, iterated to a fixed point.
    inline std::pair<AiTerm, AiTerm> canonical(AiTerm u, AiTerm v) {
      for (int round = 0; round < 4; ++round) {
        if (v < u) {
          std::swap(u, v);
        }
        std::map<Var, Var> ren;
        auto               rename = [&](AiTerm const& t) {
          AiTerm out;
          for (auto const& w : t) {
            Word r;
            for (Var x : w) {
              auto [it, fresh] = ren.emplace(x, static_cast<Var>(ren.size()));
              r.push_back(it->second);
            }
            out.insert(std::move(r));
          }
          return out;
        };
        AiTerm nu = rename(u), nv = rename(v);
        if (nv < nu) {
          std::swap(nu, nv);
        }
        if (nu == u && nv == v) {
          break;
        }
        u = std::move(nu);
        v = std::move(nv);
      }
      return {u, v};
    }

  }  // namespace detail

  // Candidates are enumerated by total letter count, then by the shape of
  // each side, then by restricted-growth assignment of variables to letter
  // positions. The first identity valid in S and failing in T is returned.
  inline SeparationResult identity_separation_search(
      FiniteSemiring const&   S,
      FiniteSemiring const&   T,
      SeparationBounds const& b,
      Caps const&             caps = {}) {
    SeparationResult out;
    if (b.vars == 0 || b.length == 0 || b.summands == 0) {
      return out;
    }
    std::set<std::pair<AiTerm, AiTerm>> seen;
    std::size_t const max_total = 2 * b.length * b.summands;
    for (std::size_t total = 2; total <= max_total; ++total) {
      for (std::size_t left = 1; left < total; ++left) {
        std::size_t const right = total - left;
        if (left > right) {
          break;  // sides are unordered
        }
        std::vector<std::vector<std::size_t>> ls, rs;
        std::vector<std::size_t>              cur;
        detail::shapes(left, b.summands, b.length, cur, ls);
        detail::shapes(right, b.summands, b.length, cur, rs);
        for (auto const& lshape : ls) {
          for (auto const& rshape : rs) {
            // restricted-growth string over `total` positions
            std::vector<Var> rg(total, 0);
            std::size_t      maxv = b.linear ? total : b.vars;
            if (b.linear && total > b.vars) {
              continue;
            }
            auto emit = [&]() -> bool {
              std::size_t pos   = 0;
              auto        build = [&](std::vector<std::size_t> const& sh) {
                AiTerm t;
                for (std::size_t len : sh) {
                  Word w(rg.begin() + pos, rg.begin() + pos + len);
                  pos += len;
                  t.insert(std::move(w));
                }
                return t;
              };
              AiTerm u = build(lshape), v = build(rshape);
              if (u == v) {
                return false;
              }
              auto key = detail::canonical(u, v);
              if (!seen.insert(key).second) {
                return false;
              }
              if (++out.candidates > caps.max_candidates) {
                throw SizeError("separation search: candidate cap exceeded");
              }
              if (!holds_identity(S, key.first, key.second, caps).holds) {
                return false;
              }
              ++out.valid_in_s;
              auto t = holds_identity(T, key.first, key.second, caps);
              if (!t.holds) {
                out.found = Separation{key.first, key.second,
                                       t.counterexample};
                return true;
              }
              return false;
            };
            if (b.linear) {
              for (std::size_t i = 0; i < total; ++i) {
                rg[i] = static_cast<Var>(i);
              }
              if (emit()) {
                return out;
              }
              continue;
            }
            // iterate restricted-growth strings with at most maxv values
            std::vector<Var> mx(total, 0);  // max of rg[0..i]
            auto             rec = [&](auto& self, std::size_t i) -> bool {
              if (i == total) {
                return emit();
              }
              Var hi = i == 0 ? 0 : mx[i - 1] + 1;
              if (hi >= maxv) {
                hi = static_cast<Var>(maxv - 1);
              }
              for (Var x = 0; x <= hi; ++x) {
                rg[i] = x;
                mx[i] = i == 0 ? x : std::max(mx[i - 1], x);
                if (self(self, i + 1)) {
                  return true;
                }
              }
              return false;
            };
            if (rec(rec, 0)) {
              return out;
            }
          }
        }
      }
    }
    return out;
  }

}  // namespace aisr

#endif  // AISR_TERMS_HPP_
