#ifndef AISR_AISR_HPP_
#define AISR_AISR_HPP_

#include "error.hpp"
#include "caps.hpp"
#include "semiring.hpp"
#include "semigroup.hpp"
#include "product.hpp"
#include "constructions.hpp"
#include "report.hpp"
#include "group.hpp"
#include "hypergraph.hpp"
#include "terms.hpp"
#include "hg_semiring.hpp"
#include "io.hpp"
#include "fixtures.hpp"

#endif  // AISR_AISR_HPP_
