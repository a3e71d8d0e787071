#pragma once

#include <string>
#include <vector>

#include "bracelab/bracelab.hpp"

namespace testutil {

using namespace bracelab;

inline FiniteBrace cyclic(int n) {
  return abelian_brace(AbelianGroupSpec{{n}});
}

inline FiniteBrace elementary(int p, int k) {
  std::vector<int> fs(k, p);
  return abelian_brace(AbelianGroupSpec::from_factors(fs));
}

inline FiniteBrace trivial_brace() {
  return FiniteBrace::unchecked(1, {0}, {0});
}

/// Encode a tuple in a family brace: (k1, .., kd) with k1 most significant.
inline int el(const FiniteBrace& br, std::vector<int> digits) {
  return br.codec.encode(digits);
}

/// The brace on C6 with non-abelian multiplicative group, from enumeration.
inline FiniteBrace c6_nonabelian_brace() {
  for (FiniteBrace& br : enumerate_braces(AbelianGroupSpec{{6}}, true, 16)) {
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b)
        if (br.mul(a, b) != br.mul(b, a)) return br;
  }
  throw std::runtime_error("no non-abelian brace on C6 found");
}

/// A compact mixed corpus for property tests.
inline std::vector<FiniteBrace> small_corpus() {
  std::vector<FiniteBrace> out;
  out.push_back(trivial_brace());
  out.push_back(cyclic(2));
  out.push_back(cyclic(4));
  out.push_back(cyclic(6));
  out.push_back(elementary(2, 2));
  out.push_back(family_brace({Family::E0, 1, 2}));
  out.push_back(family_brace({Family::E0, 1, 3}));
  out.push_back(family_brace({Family::E0, 2, 3}));
  out.push_back(family_brace({Family::E1, 0, 2}));
  out.push_back(family_brace({Family::E2, 1, 2}));
  out.push_back(family_brace({Family::E1, 1, 3}));
  out.push_back(family_brace({Family::E2, 2, 3}));
  out.push_back(family_brace({Family::E1, 1, 5}));
  out.push_back(family_brace({Family::E1, 2, 5}));
  out.push_back(c6_nonabelian_brace());
  out.push_back(direct_product(family_brace({Family::E0, 1, 2}), cyclic(3)));
  return out;
}

}  // namespace testutil
