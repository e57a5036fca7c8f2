#ifndef AISR_IO_HPP_
#define AISR_IO_HPP_

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "error.hpp"
#include "group.hpp"
#include "hypergraph.hpp"
#include "report.hpp"
#include "semiring.hpp"

namespace aisr {

  inline constexpr char const* kVersion = "aisr 0.1.0";

  inline bool valid_element_name(std::string_view s) {
    if (s.empty()) {
      return false;
    }
    for (char c : s) {
      bool ok = std::isalnum(static_cast<unsigned char>(c)) || c == '_'
                || c == '(' || c == ')' || c == '*' || c == '+';
      if (!ok) {
        return false;
      }
    }
    return true;
  }

  namespace detail {

    struct Token {
      std::string text;
      std::size_t offset;
    };

    // Whitespace-separated tokens with '#' comments removed. A ':' ends a
    // token and is returned as a token of its own.
    inline std::vector<Token> tokenize(std::string_view text) {
      std::vector<Token> out;
      std::size_t        i = 0;
      while (i < text.size()) {
        char c = text[i];
        if (c == '#') {
          while (i < text.size() && text[i] != '\n') {
            ++i;
          }
        } else if (std::isspace(static_cast<unsigned char>(c))) {
          ++i;
        } else if (c == ':') {
          out.push_back({":", i});
          ++i;
        } else {
          std::size_t start = i;
          while (i < text.size() && text[i] != ':' && text[i] != '#'
                 && !std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
          }
          out.push_back({std::string(text.substr(start, i - start)), start});
        }
      }
      return out;
    }

    struct Section {
      Token              key;
      std::vector<Token> values;
    };

    // "key: values... key: values..." where a key is a token followed by ':'.
    inline std::map<std::string, Section> sections(std::string_view text) {
      auto toks = tokenize(text);
      std::map<std::string, Section> out;
      Section*                       cur = nullptr;
      for (std::size_t i = 0; i < toks.size(); ++i) {
        if (toks[i].text == ":") {
          throw ParseError("unexpected ':'", toks[i].offset);
        }
        if (i + 1 < toks.size() && toks[i + 1].text == ":") {
          auto [it, fresh] = out.emplace(toks[i].text, Section{toks[i], {}});
          if (!fresh) {
            throw ParseError("duplicate key '" + toks[i].text + "'",
                             toks[i].offset);
          }
          cur = &it->second;
          ++i;
          continue;
        }
        if (cur == nullptr) {
          throw ParseError("expected a key", toks[i].offset);
        }
        cur->values.push_back(toks[i]);
      }
      return out;
    }

    inline std::size_t end_offset(std::string_view text) {
      return text.size();
    }

    inline void allow_keys(std::map<std::string, Section> const& secs,
                           std::vector<std::string> const&        keys) {
      for (auto const& [k, s] : secs) {
        if (std::find(keys.begin(), keys.end(), k) == keys.end()) {
          throw ParseError("unknown key '" + k + "'", s.key.offset);
        }
      }
    }

    inline Section const& need(std::map<std::string, Section> const& secs,
                               std::string const&                     key,
                               std::size_t                            at) {
      auto it = secs.find(key);
      if (it == secs.end()) {
        throw ParseError("missing key '" + key + "'", at);
      }
      return it->second;
    }

    inline std::vector<std::string> parse_names(Section const& s) {
      std::vector<std::string> names;
      std::map<std::string, bool> seen;
      for (auto const& t : s.values) {
        if (!valid_element_name(t.text)) {
          throw ParseError("invalid element name '" + t.text + "'", t.offset);
        }
        if (seen[t.text]) {
          throw ParseError("duplicate element name '" + t.text + "'",
                           t.offset);
        }
        seen[t.text] = true;
        names.push_back(t.text);
      }
      if (names.empty()) {
        throw ParseError("empty element list", s.key.offset);
      }
      return names;
    }

    inline Elem lookup(std::map<std::string, Elem> const& index,
                       Token const&                       t) {
      auto it = index.find(t.text);
      if (it == index.end()) {
        throw ParseError("unknown element '" + t.text + "'", t.offset);
      }
      return it->second;
    }

    inline std::vector<Elem> parse_table(Section const&                     s,
                                         std::map<std::string, Elem> const& index) {
      std::size_t const n = index.size();
      if (s.values.size() != n * n) {
        std::size_t at = s.values.size() > n * n ? s.values[n * n].offset
                                                 : s.key.offset;
        throw ParseError("table '" + s.key.text + "' needs "
                             + std::to_string(n * n) + " entries, got "
                             + std::to_string(s.values.size()),
                         at);
      }
      std::vector<Elem> t;
      for (auto const& tok : s.values) {
        t.push_back(lookup(index, tok));
      }
      return t;
    }

    inline std::optional<Elem> parse_constant(
        std::map<std::string, Section> const& secs,
        std::string const&                     key,
        std::map<std::string, Elem> const&     index) {
      auto it = secs.find(key);
      if (it == secs.end()) {
        return std::nullopt;
      }
      if (it->second.values.size() != 1) {
        throw ParseError("key '" + key + "' takes one element",
                         it->second.key.offset);
      }
      return lookup(index, it->second.values[0]);
    }

    inline void write_table(std::ostringstream&             os,
                            std::vector<std::string> const& names,
                            std::vector<Elem> const&        t) {
      std::size_t const n = names.size();
      std::size_t       w = 0;
      for (auto const& s : names) {
        w = std::max(w, s.size());
      }
      for (std::size_t i = 0; i < n; ++i) {
        os << " ";
        for (std::size_t j = 0; j < n; ++j) {
          std::string const& s = names[t[i * n + j]];
          os << ' ' << s;
          if (j + 1 < n) {
            os << std::string(w - s.size(), ' ');
          }
        }
        os << '\n';
      }
    }

  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // Semiring and group text formats
  ////////////////////////////////////////////////////////////////////////

  inline FiniteSemiring parse_semiring(std::string_view text) {
    auto secs = detail::sections(text);
    detail::allow_keys(secs, {"elements", "add", "mul", "one", "zero"});
    std::size_t const end = detail::end_offset(text);
    auto names = detail::parse_names(detail::need(secs, "elements", end));
    std::map<std::string, Elem> index;
    for (std::size_t i = 0; i < names.size(); ++i) {
      index[names[i]] = static_cast<Elem>(i);
    }
    auto add  = detail::parse_table(detail::need(secs, "add", end), index);
    auto mul  = detail::parse_table(detail::need(secs, "mul", end), index);
    auto one  = detail::parse_constant(secs, "one", index);
    auto zero = detail::parse_constant(secs, "zero", index);
    return FiniteSemiring(std::move(names), std::move(add), std::move(mul),
                          one, zero);
  }

  // Canonical form: one key per line, table rows indented by two spaces and
  // padded to the longest name.
  inline std::string format_semiring(FiniteSemiring const& S) {
    std::ostringstream os;
    os << "elements:";
    for (auto const& s : S.names()) {
      os << ' ' << s;
    }
    os << "\nadd:\n";
    detail::write_table(os, S.names(), S.add_table());
    os << "mul:\n";
    detail::write_table(os, S.names(), S.mul_table());
    if (S.one()) {
      os << "one: " << S.name(*S.one()) << '\n';
    }
    if (S.zero()) {
      os << "zero: " << S.name(*S.zero()) << '\n';
    }
    return os.str();
  }

  inline FiniteGroup parse_group(std::string_view text) {
    auto secs = detail::sections(text);
    detail::allow_keys(secs, {"elements", "mul", "identity"});
    std::size_t const end = detail::end_offset(text);
    auto names = detail::parse_names(detail::need(secs, "elements", end));
    std::map<std::string, Elem> index;
    for (std::size_t i = 0; i < names.size(); ++i) {
      index[names[i]] = static_cast<Elem>(i);
    }
    auto mul = detail::parse_table(detail::need(secs, "mul", end), index);
    auto e   = detail::parse_constant(secs, "identity", index);
    if (!e) {
      throw ParseError("missing key 'identity'", end);
    }
    return FiniteGroup(std::move(names), std::move(mul), *e);
  }

  inline std::string format_group(FiniteGroup const& G) {
    std::ostringstream os;
    os << "elements:";
    for (auto const& s : G.names()) {
      os << ' ' << s;
    }
    os << "\nmul:\n";
    detail::write_table(os, G.names(), G.mul_table());
    os << "identity: " << G.name(G.identity()) << '\n';
    return os.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Hypergraph and assignment formats
  ////////////////////////////////////////////////////////////////////////

  // "k n m" then m lines of k vertex indices.
  inline Hypergraph parse_hypergraph(std::string_view text) {
    auto toks = detail::tokenize(text);
    std::size_t pos = 0;
    auto number = [&](char const* what) -> std::uint64_t {
      if (pos >= toks.size()) {
        throw ParseError(std::string("expected ") + what, text.size());
      }
      auto const& t = toks[pos++];
      if (t.text.empty() || t.text.size() > 9
          || !std::all_of(t.text.begin(), t.text.end(), [](char c) {
               return std::isdigit(static_cast<unsigned char>(c));
             })) {
        throw ParseError(std::string("expected ") + what + ", got '" + t.text
                             + "'",
                         t.offset);
      }
      return std::stoull(t.text);
    };
    std::size_t k = number("uniformity k");
    std::size_t n = number("vertex count n");
    std::size_t m = number("edge count m");
    if (k < 2) {
      throw ParseError("uniformity must be at least 2", toks[0].offset);
    }
    Hypergraph H(n, k);
    for (std::size_t i = 0; i < m; ++i) {
      std::size_t at = pos < toks.size() ? toks[pos].offset : text.size();
      Edge        e;
      for (std::size_t j = 0; j < k; ++j) {
        e.push_back(static_cast<Vertex>(number("vertex")));
      }
      try {
        H.add_edge(std::move(e));
      } catch (StructureError const& err) {
        throw ParseError(err.what(), at);
      }
    }
    if (pos < toks.size()) {
      throw ParseError("trailing data after " + std::to_string(m) + " edges",
                       toks[pos].offset);
    }
    return H;
  }

  inline std::string format_hypergraph(Hypergraph const& H) {
    std::ostringstream os;
    os << H.uniformity() << ' ' << H.num_vertices() << ' ' << H.num_edges()
       << '\n';
    for (auto const& e : H.edges()) {
      for (std::size_t i = 0; i < e.size(); ++i) {
        os << (i ? " " : "") << e[i];
      }
      os << '\n';
    }
    return os.str();
  }

  inline std::string format_assignment(std::vector<std::uint8_t> const& a) {
    std::ostringstream os;
    for (std::size_t v = 0; v < a.size(); ++v) {
      os << v << ' ' << static_cast<unsigned>(a[v]) << '\n';
    }
    return os.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // JSON
  ////////////////////////////////////////////////////////////////////////

  using Json = nlohmann::ordered_json;

  inline Json to_json(FiniteSemiring const& S) {
    Json j;
    j["elements"]      = S.names();
    auto table         = [&](std::vector<Elem> const& t) {
      Json rows = Json::array();
      for (std::size_t i = 0; i < S.size(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < S.size(); ++k) {
          row.push_back(S.name(t[i * S.size() + k]));
        }
        rows.push_back(std::move(row));
      }
      return rows;
    };
    j["add"] = table(S.add_table());
    j["mul"] = table(S.mul_table());
    if (S.one()) {
      j["one"] = S.name(*S.one());
    }
    if (S.zero()) {
      j["zero"] = S.name(*S.zero());
    }
    return j;
  }

  inline FiniteSemiring semiring_from_json(Json const& j) {
    try {
      auto names = j.at("elements").get<std::vector<std::string>>();
      std::map<std::string, Elem> index;
      for (std::size_t i = 0; i < names.size(); ++i) {
        index[names[i]] = static_cast<Elem>(i);
      }
      auto get = [&](std::string const& s) {
        auto it = index.find(s);
        if (it == index.end()) {
          throw ParseError("unknown element '" + s + "'", 0);
        }
        return it->second;
      };
      auto table = [&](Json const& rows) {
        std::vector<Elem> t;
        for (auto const& row : rows) {
          for (auto const& x : row) {
            t.push_back(get(x.get<std::string>()));
          }
        }
        return t;
      };
      std::optional<Elem> one, zero;
      if (j.contains("one")) {
        one = get(j["one"].get<std::string>());
      }
      if (j.contains("zero")) {
        zero = get(j["zero"].get<std::string>());
      }
      return FiniteSemiring(std::move(names), table(j.at("add")),
                            table(j.at("mul")), one, zero);
    } catch (nlohmann::json::exception const& e) {
      throw ParseError(std::string("json: ") + e.what(), 0);
    }
  }

  inline Json to_json(WitnessReport const&         r,
                      std::optional<std::uint64_t> seed = std::nullopt) {
    Json j;
    j["version"]      = kVersion;
    j["seed"]         = seed ? Json(*seed) : Json(nullptr);
    j["construction"] = r.construction;
    j["ok"]           = r.ok();
    j["semiring"]     = to_json(r.semiring);
    if (r.target) {
      j["target"] = to_json(*r.target);
      Json m      = Json::object();
      for (std::size_t x = 0; x < r.map.size() && x < r.semiring.size(); ++x) {
        m[r.semiring.name(static_cast<Elem>(x))] =
            r.map[x] == kNoElem ? Json(nullptr)
                                : Json(r.target->name(r.map[x]));
      }
      j["map"] = std::move(m);
    }
    Json claims = Json::array();
    for (auto const& c : r.claims) {
      claims.push_back({{"name", c.name}, {"pass", c.pass},
                        {"detail", c.detail}});
    }
    j["claims"] = std::move(claims);
    j["notes"]  = r.notes;
    return j;
  }

  struct ReportRecheck {
    bool        axioms = false;
    bool        isomorphism = false;  // false also when no target
    std::string detail;
  };

  // Recomputes the checkable parts of a serialized report from its data:
  // the axioms of the emitted semiring and, when present, the map into the
  // target.
  inline ReportRecheck recheck_report(Json const& j) {
    ReportRecheck out;
    FiniteSemiring S = semiring_from_json(j.at("semiring"));
    out.axioms       = verify_semiring_axioms(S, 1).ok();
    if (!j.contains("target")) {
      out.detail = "no target";
      return out;
    }
    FiniteSemiring    T = semiring_from_json(j.at("target"));
    std::vector<Elem> f(S.size(), kNoElem);
    for (auto const& [k, v] : j.at("map").items()) {
      if (v.is_null()) {
        out.detail = "map undefined at " + k;
        return out;
      }
      f[S.at(k)] = T.at(v.get<std::string>());
    }
    if (std::find(f.begin(), f.end(), kNoElem) != f.end()) {
      out.detail = "map is not total";
      return out;
    }
    MapVerdict v    = verify_canonical_map(S, T, f);
    out.isomorphism = v.isomorphism();
    out.detail      = v.homomorphism ? "" : v.violation;
    return out;
  }

  inline std::string format_report(WitnessReport const& r) {
    std::ostringstream os;
    os << r.construction << ": " << (r.ok() ? "ok" : "FAILED") << " ("
       << r.semiring.size() << " elements)\n";
    for (auto const& c : r.claims) {
      os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name;
      if (!c.detail.empty()) {
        os << ": " << c.detail;
      }
      os << '\n';
    }
    for (auto const& n : r.notes) {
      os << "  note: " << n << '\n';
    }
    return os.str();
  }

}  // namespace aisr

#endif  // AISR_IO_HPP_
