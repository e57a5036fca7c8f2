#ifndef AISR_CONSTRUCTIONS_HPP_
#define AISR_CONSTRUCTIONS_HPP_

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "caps.hpp"
#include "error.hpp"
#include "product.hpp"
#include "semigroup.hpp"
#include "semiring.hpp"

namespace aisr {

  ////////////////////////////////////////////////////////////////////////
  // Flat completion
  ////////////////////////////////////////////////////////////////////////

  // xy = xz != 0 with y != z (left), or yx = zx != 0 with y != z (right).
  struct CancellationViolation {
    bool left;
    Elem x, y, z;
  };

  inline std::optional<CancellationViolation> find_cancellation_violation(
      SemigroupWithZero const& T) {
    std::size_t const n = T.size();
    Elem const        o = T.zero();
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        for (Elem z = y + 1; z < n; ++z) {
          if (T.mul(x, y) == T.mul(x, z) && T.mul(x, y) != o) {
            return CancellationViolation{true, x, y, z};
          }
          if (T.mul(y, x) == T.mul(z, x) && T.mul(y, x) != o) {
            return CancellationViolation{false, x, y, z};
          }
        }
      }
    }
    return std::nullopt;
  }

  struct FlatCompletion {
    std::optional<FiniteSemiring>        semiring;
    std::optional<CancellationViolation> violation;
  };

  // T with flat addition (x+x = x, x+y = zero otherwise), or the first
  // violation of the 0-cancellative laws.
  inline FlatCompletion flat_completion(SemigroupWithZero const& T) {
    FlatCompletion out;
    out.violation = find_cancellation_violation(T);
    if (out.violation) {
      return out;
    }
    Elem const o = T.zero();
    out.semiring = make_semiring(
        T.semigroup().names(),
        [o](Elem x, Elem y) { return x == y ? x : o; },
        [&T](Elem x, Elem y) { return T.mul(x, y); });
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Ideal quotients
  ////////////////////////////////////////////////////////////////////////

  struct IdealQuotient {
    FiniteSemiring    quotient;
    std::vector<Elem> projection;
    Elem              representative;  // element of S naming the class
  };

  // Collapses J, which must be a multiplicative ideal and an order filter.
  // The class keeps the position and name of the first <=-minimal member.
  inline IdealQuotient ideal_quotient(FiniteSemiring const&  S,
                                      std::vector<Elem> const& J) {
    std::size_t const n = S.size();
    std::vector<bool> in(n, false);
    for (Elem j : J) {
      if (j >= n) {
        throw PreconditionError("ideal quotient: element outside carrier");
      }
      in[j] = true;
    }
    std::size_t const jn = std::count(in.begin(), in.end(), true);
    if (jn == 0 || jn == n) {
      throw PreconditionError("ideal quotient: J must be proper and "
                              "nonempty");
    }
    for (Elem s = 0; s < n; ++s) {
      for (Elem j = 0; j < n; ++j) {
        if (!in[j]) {
          continue;
        }
        if (!in[S.mul(s, j)]) {
          throw PreconditionError("ideal quotient: J is not an ideal ("
                                  + S.name(s) + "*" + S.name(j) + " = "
                                  + S.name(S.mul(s, j)) + ")");
        }
        if (!in[S.mul(j, s)]) {
          throw PreconditionError("ideal quotient: J is not an ideal ("
                                  + S.name(j) + "*" + S.name(s) + " = "
                                  + S.name(S.mul(j, s)) + ")");
        }
        if (S.leq(j, s) && !in[s]) {
          throw PreconditionError("ideal quotient: J is not a filter ("
                                  + S.name(j) + " <= " + S.name(s) + ")");
        }
      }
    }
    Elem rep = kNoElem;
    for (Elem j = 0; j < n && rep == kNoElem; ++j) {
      if (!in[j]) {
        continue;
      }
      bool minimal = true;
      for (Elem i = 0; i < n && minimal; ++i) {
        minimal = !(in[i] && i != j && S.leq(i, j));
      }
      if (minimal) {
        rep = j;
      }
    }
    std::vector<Elem>        proj(n);
    std::vector<std::string> names;
    Elem                     next = 0;
    for (Elem x = 0; x < n; ++x) {
      if (!in[x] || x == rep) {
        names.push_back(S.name(x));
        proj[x] = next++;
      }
    }
    for (Elem x = 0; x < n; ++x) {
      if (in[x]) {
        proj[x] = proj[rep];
      }
    }
    std::vector<Elem> back(next);
    for (Elem x = 0; x < n; ++x) {
      if (!in[x] || x == rep) {
        back[proj[x]] = x;
      }
    }
    auto mapc = [&](std::optional<Elem> c) -> std::optional<Elem> {
      return c ? std::optional<Elem>(proj[*c]) : std::nullopt;
    };
    FiniteSemiring Q = make_semiring(
        std::move(names),
        [&](Elem a, Elem b) { return proj[S.add(back[a], back[b])]; },
        [&](Elem a, Elem b) { return proj[S.mul(back[a], back[b])]; },
        mapc(S.one()),
        mapc(S.zero()));
    return IdealQuotient{std::move(Q), std::move(proj), rep};
  }

  ////////////////////////////////////////////////////////////////////////
  // Generated subsemirings
  ////////////////////////////////////////////////////////////////////////

  struct Subsemiring {
    FiniteSemiring    semiring;
    std::vector<Elem> inclusion;        // position in S of each element
    std::size_t       mult_closure = 0;  // size of the generated subsemigroup
    bool              bound_holds  = true;
  };

  // Closure of gens under + and * (constants are not generators). Carrier
  // order follows S. Constants of S stay designated when they lie inside.
  inline Subsemiring subsemiring_generated(FiniteSemiring const&    S,
                                           std::vector<Elem> const& gens) {
    if (gens.empty()) {
      throw PreconditionError("subsemiring: no generators");
    }
    std::size_t const n = S.size();
    auto close = [&](bool with_add) {
      std::vector<bool> in(n, false);
      std::vector<Elem> list;
      for (Elem g : gens) {
        if (g >= n) {
          throw PreconditionError("subsemiring: generator outside carrier");
        }
        if (!in[g]) {
          in[g] = true;
          list.push_back(g);
        }
      }
      auto push = [&](Elem z) {
        if (!in[z]) {
          in[z] = true;
          list.push_back(z);
        }
      };
      for (std::size_t i = 0; i < list.size(); ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
          Elem const x = list[i], y = list[j];
          push(S.mul(x, y));
          push(S.mul(y, x));
          if (with_add) {
            push(S.add(x, y));
          }
        }
      }
      return in;
    };
    std::vector<bool> mul_in = close(false);
    std::vector<bool> all_in = close(true);

    Subsemiring out;
    out.mult_closure = std::count(mul_in.begin(), mul_in.end(), true);
    std::vector<Elem> pos(n, kNoElem);
    std::vector<std::string> names;
    for (Elem x = 0; x < n; ++x) {
      if (all_in[x]) {
        pos[x] = static_cast<Elem>(out.inclusion.size());
        out.inclusion.push_back(x);
        names.push_back(S.name(x));
      }
    }
    std::size_t const total = out.inclusion.size();
    out.bound_holds = out.mult_closure >= 63
                      || total + 1 <= (std::uint64_t{1} << out.mult_closure);
    auto keep = [&](std::optional<Elem> c) -> std::optional<Elem> {
      return (c && all_in[*c]) ? std::optional<Elem>(pos[*c]) : std::nullopt;
    };
    auto const& inc = out.inclusion;
    out.semiring    = make_semiring(
        std::move(names),
        [&](Elem a, Elem b) { return pos[S.add(inc[a], inc[b])]; },
        [&](Elem a, Elem b) { return pos[S.mul(inc[a], inc[b])]; },
        keep(S.one()),
        keep(S.zero()));
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Joins and adjunctions
  ////////////////////////////////////////////////////////////////////////

  // Flat, or a single element (which acts as the top).
  inline bool flat_or_trivial(FiniteSemiring const& S) {
    return S.is_flat() || (S.size() == 1 && S.add(0, 0) == 0
                           && S.mul(0, 0) == 0);
  }

  // Disjoint union of the non-top parts with a shared top; products across
  // the two parts are the top. Clashing names from T get the suffix "_r".
  inline FiniteSemiring zero_direct_join(FiniteSemiring const& S,
                                         FiniteSemiring const& T) {
    if (!flat_or_trivial(S) || !flat_or_trivial(T)) {
      throw PreconditionError("0-direct join: both inputs must be flat");
    }
    Elem const sTop = S.size() == 1 ? 0 : *S.top();
    Elem const tTop = T.size() == 1 ? 0 : *T.top();
    // side 0: S, side 1: T, element kNoElem: the shared top
    std::vector<std::pair<int, Elem>> elems;
    std::vector<std::string>          names;
    std::set<std::string>             used;
    for (Elem x = 0; x < S.size(); ++x) {
      if (x != sTop) {
        elems.emplace_back(0, x);
        names.push_back(S.name(x));
        used.insert(S.name(x));
      }
    }
    for (Elem x = 0; x < T.size(); ++x) {
      if (x != tTop) {
        std::string nm = T.name(x);
        while (used.count(nm) || nm == S.name(sTop)) {
          nm += "_r";
        }
        used.insert(nm);
        elems.emplace_back(1, x);
        names.push_back(nm);
      }
    }
    Elem const top = static_cast<Elem>(elems.size());
    elems.emplace_back(-1, kNoElem);
    names.push_back(S.name(sTop));
    std::vector<Elem> pos_s(S.size(), top), pos_t(T.size(), top);
    for (Elem i = 0; i < top; ++i) {
      (elems[i].first == 0 ? pos_s : pos_t)[elems[i].second] = i;
    }
    auto mulfn = [&](Elem a, Elem b) -> Elem {
      auto [sa, xa] = elems[a];
      auto [sb, xb] = elems[b];
      if (sa < 0 || sb < 0 || sa != sb) {
        return top;
      }
      return sa == 0 ? pos_s[S.mul(xa, xb)] : pos_t[T.mul(xa, xb)];
    };
    return make_semiring(
        std::move(names),
        [top](Elem a, Elem b) { return a == b ? a : top; },
        mulfn);
  }

  enum class AdjoinKind { additive_zero, multiplicative_identity };

  struct Adjoined {
    FiniteSemiring semiring;
    std::string    note;  // nonempty when the input was returned unchanged
  };

  inline std::string fresh_name(FiniteSemiring const&            S,
                                std::vector<std::string> const& choices) {
    for (auto const& c : choices) {
      if (!S.find(c)) {
        return c;
      }
    }
    std::string base = choices.back();
    while (S.find(base)) {
      base += "_";
    }
    return base;
  }

  // additive_zero: a new element z with z + x = x and zx = xz = z, which
  // becomes the designated zero.
  //
  // multiplicative_identity: a new element 1 with 1x = x1 = x and 1 + x the
  // top for x != 1. Needs a flat input.
  inline Adjoined adjoin(FiniteSemiring const& S, AdjoinKind kind) {
    std::size_t const n = S.size();
    auto              names = S.names();
    if (kind == AdjoinKind::additive_zero) {
      names.push_back(fresh_name(S, {"0", "z"}));
      Elem const z = static_cast<Elem>(n);
      FiniteSemiring R = make_semiring(
          std::move(names),
          [&](Elem x, Elem y) {
            return x == z ? y : y == z ? x : S.add(x, y);
          },
          [&](Elem x, Elem y) {
            return (x == z || y == z) ? z : S.mul(x, y);
          },
          S.one(),
          z);
      return {std::move(R), {}};
    }
    if (auto e = S.identity()) {
      return {S.with_constants(e, S.zero()),
              "identity already present: " + S.name(*e)};
    }
    if (!S.is_flat()) {
      throw PreconditionError("adjoin identity: input must be flat");
    }
    Elem const top = *S.top();
    Elem const one = static_cast<Elem>(n);
    names.push_back(fresh_name(S, {"1", "e"}));
    FiniteSemiring R = make_semiring(
        std::move(names),
        [&](Elem x, Elem y) {
          if (x == one || y == one) {
            return x == y ? one : top;
          }
          return S.add(x, y);
        },
        [&](Elem x, Elem y) {
          return x == one ? y : y == one ? x : S.mul(x, y);
        },
        one,
        S.zero());
    if (!verify_semiring_axioms(R, 1).ok()) {
      throw PreconditionError("adjoin identity: result is not a semiring");
    }
    return {std::move(R), {}};
  }

  ////////////////////////////////////////////////////////////////////////
  // Power semirings
  ////////////////////////////////////////////////////////////////////////

  // Subsets of T under union and complex product, ordered by size then by
  // bitmask. With include_empty the empty set is the designated zero.
  inline FiniteSemiring power_semiring(FiniteSemigroup const& T,
                                       bool                   include_empty,
                                       Caps const&            caps = {}) {
    std::size_t const m = T.size();
    if (m > caps.max_power_base || m > 20) {
      throw SizeError("power semiring: base of size " + std::to_string(m)
                      + " exceeds cap of "
                      + std::to_string(caps.max_power_base));
    }
    std::uint64_t const full = (std::uint64_t{1} << m);
    std::vector<std::uint64_t> masks;
    for (std::uint64_t s = include_empty ? 0 : 1; s < full; ++s) {
      masks.push_back(s);
    }
    if (masks.size() > caps.max_carrier) {
      throw SizeError("power semiring exceeds carrier cap");
    }
    std::stable_sort(masks.begin(), masks.end(), [](auto a, auto b) {
      int pa = std::popcount(a), pb = std::popcount(b);
      return pa != pb ? pa < pb : a < b;
    });
    std::vector<Elem> pos(full, kNoElem);
    for (std::size_t i = 0; i < masks.size(); ++i) {
      pos[masks[i]] = static_cast<Elem>(i);
    }
    bool zero_taken = false;
    for (auto const& nm : T.names()) {
      zero_taken = zero_taken || nm == "0";
    }
    std::vector<std::string> names;
    for (auto s : masks) {
      if (s == 0) {
        names.push_back(zero_taken ? "nil" : "0");
        continue;
      }
      std::string nm;
      for (std::size_t b = 0; b < m; ++b) {
        if (s >> b & 1) {
          nm += (nm.empty() ? "" : "+") + T.name(static_cast<Elem>(b));
        }
      }
      names.push_back(nm);
    }
    // left[x][B] = {x} B, built from singleton rows
    std::vector<std::uint64_t> row(m * m);
    for (Elem x = 0; x < m; ++x) {
      for (Elem y = 0; y < m; ++y) {
        row[x * m + y] = std::uint64_t{1} << T.mul(x, y);
      }
    }
    auto left = [&](Elem x, std::uint64_t B) {
      std::uint64_t r = 0;
      for (; B; B &= B - 1) {
        r |= row[x * m + std::countr_zero(B)];
      }
      return r;
    };
    std::size_t const n = masks.size();
    std::vector<Elem> add(n * n), mul(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        std::uint64_t prod = 0;
        for (std::uint64_t A = masks[i]; A; A &= A - 1) {
          prod |= left(static_cast<Elem>(std::countr_zero(A)), masks[j]);
        }
        add[i * n + j] = pos[masks[i] | masks[j]];
        mul[i * n + j] = pos[prod];
      }
    }
    std::optional<Elem> zero;
    if (include_empty) {
      zero = pos[0];
    }
    std::optional<Elem> one;
    for (Elem e = 0; e < m && !one; ++e) {
      bool ok = true;
      for (Elem x = 0; x < m && ok; ++x) {
        ok = T.mul(e, x) == x && T.mul(x, e) == x;
      }
      if (ok) {
        one = pos[std::uint64_t{1} << e];
      }
    }
    return FiniteSemiring(std::move(names), std::move(add), std::move(mul),
                          one, zero);
  }

  ////////////////////////////////////////////////////////////////////////
  // Word semirings
  ////////////////////////////////////////////////////////////////////////

  enum class WordVariant { S, M, Sc, Mc };

  inline char const* to_string(WordVariant v) {
    switch (v) {
      case WordVariant::S:
        return "S";
      case WordVariant::M:
        return "M";
      case WordVariant::Sc:
        return "Sc";
      case WordVariant::Mc:
        return "Mc";
    }
    return "?";
  }

  inline WordVariant parse_word_variant(std::string_view s) {
    if (s == "S") {
      return WordVariant::S;
    }
    if (s == "M") {
      return WordVariant::M;
    }
    if (s == "Sc") {
      return WordVariant::Sc;
    }
    if (s == "Mc") {
      return WordVariant::Mc;
    }
    throw Error("unknown word variant '" + std::string(s)
                + "' (expected S, M, Sc or Mc)");
  }

  // A letter is [a-z][0-9]*, ordered by character then by numeric suffix.
  struct Letter {
    char letter;
    int  index;  // -1 when there is no suffix

    friend auto operator<=>(Letter const&, Letter const&) = default;

    std::string str() const {
      return index < 0 ? std::string(1, letter)
                       : std::string(1, letter) + std::to_string(index);
    }
  };

  using LetterWord = std::vector<Letter>;

  inline LetterWord parse_letter_word(std::string_view s) {
    LetterWord  w;
    std::size_t i = 0;
    while (i < s.size()) {
      char c = s[i];
      if (c < 'a' || c > 'z') {
        throw ParseError("expected a letter [a-z]", i);
      }
      ++i;
      std::size_t j = i;
      while (j < s.size() && s[j] >= '0' && s[j] <= '9') {
        ++j;
      }
      int idx = -1;
      if (j > i) {
        if (j - i > 6) {
          throw ParseError("letter index too long", i);
        }
        idx = std::stoi(std::string(s.substr(i, j - i)));
      }
      w.push_back({c, idx});
      i = j;
    }
    if (w.empty()) {
      throw ParseError("empty word", 0);
    }
    return w;
  }

  inline std::string letter_word_str(LetterWord const& w) {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    for (auto const& l : w) {
      out += l.str();
    }
    return out;
  }

  struct WordSpec {
    WordVariant             variant = WordVariant::S;
    std::vector<LetterWord> words;

    static WordSpec parse(WordVariant v, std::vector<std::string> const& ws) {
      WordSpec spec{v, {}};
      for (auto const& w : ws) {
        spec.words.push_back(parse_letter_word(w));
      }
      return spec;
    }
  };

  // S/M: contiguous factors with concatenation; Sc/Mc: multiset divisors with
  // multiset union. Products leaving the closure go to the top "0". The M
  // variants add the empty word "1" as designated identity. Carrier order:
  // by length, then lexicographic.
  inline FiniteSemiring word_semiring(WordSpec const& spec,
                                      Caps const&     caps = {}) {
    if (spec.words.empty()) {
      throw PreconditionError("word semiring: no words");
    }
    bool const commutative =
        spec.variant == WordVariant::Sc || spec.variant == WordVariant::Mc;
    bool const monoid =
        spec.variant == WordVariant::M || spec.variant == WordVariant::Mc;
    std::set<LetterWord> closure;
    for (auto w : spec.words) {
      if (w.empty()) {
        throw PreconditionError("word semiring: empty word");
      }
      if (commutative) {
        std::sort(w.begin(), w.end());
        // multiset divisors: choose a count for each distinct letter
        std::vector<std::pair<Letter, int>> counts;
        for (auto const& l : w) {
          if (counts.empty() || counts.back().first != l) {
            counts.emplace_back(l, 0);
          }
          ++counts.back().second;
        }
        std::vector<int> pick(counts.size(), 0);
        while (true) {
          LetterWord d;
          for (std::size_t i = 0; i < counts.size(); ++i) {
            d.insert(d.end(), pick[i], counts[i].first);
          }
          if (!d.empty()) {
            closure.insert(d);
          }
          if (closure.size() > caps.max_carrier) {
            throw SizeError("word semiring exceeds carrier cap");
          }
          std::size_t i = 0;
          while (i < counts.size() && pick[i] == counts[i].second) {
            pick[i++] = 0;
          }
          if (i == counts.size()) {
            break;
          }
          ++pick[i];
        }
      } else {
        for (std::size_t i = 0; i < w.size(); ++i) {
          for (std::size_t j = i + 1; j <= w.size(); ++j) {
            closure.insert(LetterWord(w.begin() + i, w.begin() + j));
            if (closure.size() > caps.max_carrier) {
              throw SizeError("word semiring exceeds carrier cap");
            }
          }
        }
      }
    }
    std::vector<LetterWord> carrier;
    if (monoid) {
      carrier.emplace_back();
    }
    std::vector<LetterWord> sorted(closure.begin(), closure.end());
    std::stable_sort(sorted.begin(), sorted.end(), [](auto& a, auto& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    carrier.insert(carrier.end(), sorted.begin(), sorted.end());
    std::map<LetterWord, Elem> pos;
    for (std::size_t i = 0; i < carrier.size(); ++i) {
      pos[carrier[i]] = static_cast<Elem>(i);
    }
    Elem const               top = static_cast<Elem>(carrier.size());
    std::vector<std::string> names;
    for (auto const& w : carrier) {
      names.push_back(letter_word_str(w));
    }
    names.push_back("0");
    auto mulfn = [&](Elem x, Elem y) -> Elem {
      if (x == top || y == top) {
        return top;
      }
      LetterWord p = carrier[x];
      p.insert(p.end(), carrier[y].begin(), carrier[y].end());
      if (commutative) {
        std::sort(p.begin(), p.end());
      }
      auto it = pos.find(p);
      return it == pos.end() ? top : it->second;
    };
    return make_semiring(
        std::move(names),
        [top](Elem x, Elem y) { return x == y ? x : top; },
        mulfn,
        monoid ? std::optional<Elem>(0) : std::nullopt);
  }

  ////////////////////////////////////////////////////////////////////////
  // Index and period, flat monoids
  ////////////////////////////////////////////////////////////////////////

  struct IndexPeriod {
    std::size_t index  = 1;
    std::size_t period = 1;

    friend bool operator==(IndexPeriod const&, IndexPeriod const&) = default;
  };

  // Least k, then least p, with x^k = x^(k+p) for every x.
  inline IndexPeriod index_period(FiniteSemiring const& S) {
    IndexPeriod r;
    for (Elem x = 0; x < S.size(); ++x) {
      std::vector<Elem> powers{x};  // powers[i] = x^(i+1)
      std::map<Elem, std::size_t> first{{x, 0}};
      while (true) {
        Elem next = S.mul(powers.back(), x);
        auto it   = first.find(next);
        if (it != first.end()) {
          std::size_t idx = it->second + 1;
          std::size_t per = powers.size() + 1 - idx;
          r.index  = std::max(r.index, idx);
          r.period = std::lcm(r.period, per);
          break;
        }
        first.emplace(next, powers.size());
        powers.push_back(next);
      }
    }
    return r;
  }

  enum class FlatMonoidKind { contains_s7, flat_group };

  struct FlatMonoidVerdict {
    FlatMonoidKind    kind;
    std::vector<Elem> triple;  // (1, a^k, top) for contains_s7
    std::vector<Elem> group;   // S without the top, for flat_group
  };

  // A finite flat monoid either has an element a with a^n at the top, giving
  // the copy {1, a^k, top} of S_7 with k maximal below the top, or all
  // non-top elements are invertible.
  inline FlatMonoidVerdict classify_flat_monoid(FiniteSemiring const& S) {
    if (!S.is_flat()) {
      throw PreconditionError("classify: semiring is not flat");
    }
    auto one = S.identity();
    if (!one) {
      throw PreconditionError("classify: no multiplicative identity");
    }
    Elem const top = *S.top();
    for (Elem a = 0; a < S.size(); ++a) {
      if (a == top || a == *one) {
        continue;
      }
      Elem prev = a, cur = S.mul(a, a);
      for (std::size_t i = 0; i <= S.size() && cur != top; ++i) {
        prev = cur;
        cur  = S.mul(cur, a);
      }
      if (cur == top) {
        return {FlatMonoidKind::contains_s7, {*one, prev, top}, {}};
      }
    }
    FlatMonoidVerdict v{FlatMonoidKind::flat_group, {}, {}};
    for (Elem x = 0; x < S.size(); ++x) {
      if (x != top) {
        v.group.push_back(x);
      }
    }
    return v;
  }

  ////////////////////////////////////////////////////////////////////////
  // Flat variety laws
  ////////////////////////////////////////////////////////////////////////

  // x1 u x2 + y1 u y2 + y1 v y2 = x1 v x2 + y1 u y2 + y1 v y2, where each of
  // x1, x2, y1, y2 is present iff its bit in `mask` is set (bits 0..3).
  struct FlatLawResult {
    unsigned          mask = 0;
    bool              holds = true;
    std::vector<Elem> counterexample;  // x1,x2,y1,y2,u,v (absent: kNoElem)
  };

  inline std::string flat_law_text(unsigned mask) {
    auto part = [&](unsigned bit, char const* v) {
      return (mask >> bit & 1) ? std::string(v) : std::string();
    };
    std::string x1 = part(0, "x1"), x2 = part(1, "x2");
    std::string y1 = part(2, "y1"), y2 = part(3, "y2");
    std::string tail = " + " + y1 + "u" + y2 + " + " + y1 + "v" + y2;
    return x1 + "u" + x2 + tail + " = " + x1 + "v" + x2 + tail;
  }

  inline std::vector<FlatLawResult> check_flat_variety_laws(
      FiniteSemiring const& S,
      Caps const&           caps = {}) {
    std::size_t const          n = S.size();
    std::vector<FlatLawResult> out;
    for (unsigned mask = 0; mask < 16; ++mask) {
      FlatLawResult r;
      r.mask              = mask;
      unsigned const vars = 2 + std::popcount(mask);
      std::uint64_t  cnt  = 1;
      for (unsigned i = 0; i < vars; ++i) {
        cnt *= n;
        if (cnt > caps.max_assignments) {
          throw SizeError("flat laws: assignment count exceeds cap");
        }
      }
      std::vector<Elem> a(6, 0);
      auto present = [&](unsigned slot) {
        return slot >= 4 || (mask >> slot & 1);
      };
      auto prod3 = [&](unsigned l, Elem mid, unsigned r) {
        Elem p = mid;
        if (present(l)) {
          p = S.mul(a[l], p);
        }
        if (present(r)) {
          p = S.mul(p, a[r]);
        }
        return p;
      };
      std::vector<unsigned> slots;
      for (unsigned s = 0; s < 6; ++s) {
        if (present(s)) {
          slots.push_back(s);
        }
      }
      for (std::uint64_t c = 0; c < cnt && r.holds; ++c) {
        std::uint64_t rem = c;
        for (std::size_t i = slots.size(); i-- > 0;) {
          a[slots[i]] = static_cast<Elem>(rem % n);
          rem /= n;
        }
        Elem const tail = S.add(prod3(2, a[4], 3), prod3(2, a[5], 3));
        Elem const lhs  = S.add(prod3(0, a[4], 1), tail);
        Elem const rhs  = S.add(prod3(0, a[5], 1), tail);
        if (lhs != rhs) {
          r.holds = false;
          for (unsigned s = 0; s < 6; ++s) {
            r.counterexample.push_back(present(s) ? a[s] : kNoElem);
          }
        }
      }
      out.push_back(std::move(r));
    }
    return out;
  }

}  // namespace aisr

#endif  // AISR_CONSTRUCTIONS_HPP_
