#pragma once

// Standard small categories.

#include <cstddef>

#include "layercake/fincat.hpp"
#include "layercake/group.hpp"

namespace layercake::catalog {

CategoryPtr empty_category();
/// One object, one morphism.
CategoryPtr terminal_category();
/// n objects, identities only.
CategoryPtr discrete_category(std::size_t n);
/// n objects, exactly one morphism between any two (so every morphism is invertible).
CategoryPtr codiscrete_category(std::size_t n);
/// The poset 0 ≤ 1 ≤ ... ≤ n-1.
CategoryPtr chain_category(std::size_t n);
/// Two objects a, b and two parallel arrows a ⇒ b.
CategoryPtr parallel_pair();
/// a ← c → b.
CategoryPtr span_category();
/// One object whose morphisms are the elements of g, composing as g·f.
CategoryPtr group_category(const FinGroup& g);

}  // namespace layercake::catalog
