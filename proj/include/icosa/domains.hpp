#pragma once

#include "icosa/permutation.hpp"

namespace icosa {

/// The 12 icosahedron vertices in canonical order:
/// 1,2,3, 1',2',3', 1+,2+,3+, 1'',2'',3''.
inline const Domain& icosahedron_domain() {
  static const Domain dom = Domain::of({"1", "2", "3", "1'", "2'", "3'", "1+",
                                        "2+", "3+", "1''", "2''", "3''"});
  return dom;
}

/// The five points 1..5 acted on by A5.
inline const Domain& a5_domain() {
  static const Domain dom = Domain::of({"1", "2", "3", "4", "5"});
  return dom;
}

}  // namespace icosa
