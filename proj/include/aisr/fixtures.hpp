#ifndef AISR_FIXTURES_HPP_
#define AISR_FIXTURES_HPP_

#include <array>
#include <string>
#include <vector>

#include "constructions.hpp"
#include "error.hpp"
#include "group.hpp"
#include "semiring.hpp"

namespace aisr {

  inline FiniteSemiring s7() {
    return FiniteSemiring({"1", "a", "0"},
                          {0, 2, 2, 2, 1, 2, 2, 2, 2},
                          {0, 1, 2, 1, 2, 2, 2, 2, 2},
                          Elem{0});
  }

  inline FiniteSemiring m2() {
    return FiniteSemiring({"1", "0"}, {0, 1, 1, 1}, {0, 1, 1, 1}, Elem{0});
  }

  // Five 2x2 matrix units plus the identity under matrix product, where
  // every product outside the set is the zero matrix. Addition is the join
  // of the order with covers 1 < ab, 1 < ba and everything else below 0.
  inline FiniteSemiring b21() {
    using M = std::array<int, 4>;
    std::vector<std::string> const names{"1", "a", "b", "ab", "ba", "0"};
    std::vector<M> const           mats{
        M{1, 0, 0, 1}, M{0, 1, 0, 0}, M{0, 0, 1, 0},
        M{1, 0, 0, 0}, M{0, 0, 0, 1}, M{0, 0, 0, 0}};
    std::size_t const n = names.size();
    auto matmul         = [](M const& x, M const& y) {
      return M{x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
               x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
    };
    std::vector<Elem> mul(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        M    p     = matmul(mats[i], mats[j]);
        Elem found = 5;
        for (std::size_t k = 0; k < n; ++k) {
          if (mats[k] == p) {
            found = static_cast<Elem>(k);
          }
        }
        mul[i * n + j] = found;
      }
    }
    std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
      le[i][i] = true;
      le[i][5] = true;
    }
    le[0][3] = le[0][4] = true;
    std::vector<Elem> add(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Elem join = kNoElem;
        for (std::size_t u = 0; u < n; ++u) {
          if (!le[i][u] || !le[j][u]) {
            continue;
          }
          bool least = true;
          for (std::size_t w = 0; w < n; ++w) {
            if (le[i][w] && le[j][w] && !le[u][w]) {
              least = false;
            }
          }
          if (least) {
            join = static_cast<Elem>(u);
          }
        }
        add[i * n + j] = join;
      }
    }
    return FiniteSemiring(names, std::move(add), std::move(mul), Elem{0});
  }

  inline FiniteSemiring sc_abb() {
    return word_semiring(WordSpec::parse(WordVariant::Sc, {"abb"}));
  }

  inline FiniteSemiring sc_a1a2a3() {
    return word_semiring(WordSpec::parse(WordVariant::Sc, {"a1a2a3"}));
  }

  inline FiniteSemiring s7_zero() {
    return adjoin(s7(), AdjoinKind::additive_zero).semiring;
  }

  inline FiniteSemiring flat_q8() {
    return flat_extension(quaternion_group(), false);
  }

  inline FiniteSemiring flat_h27() {
    return flat_extension(heisenberg_group(), false);
  }

  inline FiniteSemiring power_q8() {
    return power_semiring(quaternion_group().as_semigroup(), false);
  }

  inline std::vector<std::string> semiring_fixture_names() {
    return {"S7",      "B21",     "M2",       "Sc_abb",  "Sc_a1a2a3",
            "S7_0",    "flat_Q8", "flat_H27", "power_Q8"};
  }

  inline std::vector<std::string> group_fixture_names() {
    return {"Z2", "Z3", "Z4", "S3", "Q8", "H27"};
  }

  inline bool is_semiring_fixture(std::string const& name) {
    auto v = semiring_fixture_names();
    return std::find(v.begin(), v.end(), name) != v.end();
  }

  inline bool is_group_fixture(std::string const& name) {
    auto v = group_fixture_names();
    return std::find(v.begin(), v.end(), name) != v.end();
  }

  inline FiniteSemiring semiring_fixture(std::string const& name) {
    if (name == "S7") {
      return s7();
    }
    if (name == "B21") {
      return b21();
    }
    if (name == "M2") {
      return m2();
    }
    if (name == "Sc_abb") {
      return sc_abb();
    }
    if (name == "Sc_a1a2a3") {
      return sc_a1a2a3();
    }
    if (name == "S7_0") {
      return s7_zero();
    }
    if (name == "flat_Q8") {
      return flat_q8();
    }
    if (name == "flat_H27") {
      return flat_h27();
    }
    if (name == "power_Q8") {
      return power_q8();
    }
    throw PreconditionError("unknown semiring fixture '" + name + "'");
  }

  inline FiniteGroup group_fixture(std::string const& name) {
    if (name == "Z2") {
      return cyclic_group(2);
    }
    if (name == "Z3") {
      return cyclic_group(3);
    }
    if (name == "Z4") {
      return cyclic_group(4);
    }
    if (name == "S3") {
      return symmetric_group_3();
    }
    if (name == "Q8") {
      return quaternion_group();
    }
    if (name == "H27") {
      return heisenberg_group();
    }
    throw PreconditionError("unknown group fixture '" + name + "'");
  }

}  // namespace aisr

#endif  // AISR_FIXTURES_HPP_
