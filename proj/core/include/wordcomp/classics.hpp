#pragma once

#include "wordcomp/morphism.hpp"

namespace wordcomp::classics {

// ternary Thue-Morse (base-3 digit sum mod 3)
inline Morphism ternary_thue_morse() { return Morphism::parse("0->012 1->120 2->201"); }

// generalized ternary Thue-Morse over {0, l, m}, 1 <= l < m
inline Morphism generalized_thue_morse(Letter l, Letter m) {
  return Morphism({{0, {0, l, m}}, {l, {l, m, 0}}, {m, {m, 0, l}}});
}

// squarefree variant of Thue-Morse (OEIS A036577)
inline Morphism vtm() { return Morphism::parse("0->012 1->02 2->1"); }

// vtm with the heaviest letter revalued: 0->01L, 1->0L, L->1
inline Morphism vtm_variant(Letter heavy) {
  return Morphism({{0, {0, 1, heavy}}, {1, {0, heavy}}, {heavy, {1}}});
}

// Parikh-collinear erasing morphism with fixed point 012112002112002...
inline Morphism parikh_collinear_example() { return Morphism::parse("0->012 1->112002 2->"); }

inline Morphism tribonacci() { return Morphism::parse("0->01 1->02 2->0"); }

inline Morphism fibonacci() { return Morphism::parse("0->01 1->0"); }

// fixed point with additive complexity 2*floor(log2 n) + 3
inline Morphism cww() { return Morphism::parse("0->01 1->12 2->20"); }

// additive-cube-free word over {0,1,3,4}
inline Morphism ccss() { return Morphism::parse("0->03 1->43 3->1 4->01"); }

}  // namespace wordcomp::classics
