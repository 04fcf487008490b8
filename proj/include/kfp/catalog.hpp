#pragma once

// Hand-built reference configurations with exact rational coordinates.

#include "kfp/kconfig.hpp"

#include <string>
#include <vector>

namespace kfp::catalog {

/// Type (1,2,3) on the lines 3x+5y=24, y=0, y=x with exactly r in {1,2,3,4}
/// lines carrying three points.
KConfiguration type123(int r);

/// Type (1,3,4,5) with full lines L_2, L_3, L_4.
KConfiguration type1345();

/// Type (1,2,3,4) with all four defining lines full, each with one private point.
KConfiguration type1234_exact();

/// Type (1,3,4,5,6) whose full lines are L_2 and L_5, and the relabelling
/// that moves L_2 to the fourth position.
KConfiguration type13456_unsorted();
KConfiguration type13456_sorted();

struct Named {
  std::string id;
  KConfiguration config;
};

/// All of the above (sorted variant excluded), keyed by id.
std::vector<Named> reference_configurations();

}  // namespace kfp::catalog
