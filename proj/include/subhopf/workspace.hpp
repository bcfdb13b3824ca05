#pragma once

#include "enumeration.hpp"
#include "hopf.hpp"

namespace subhopf {

/// Everything computed about one host graph: its Hopf structure and its
/// graded bases, sharing their memo tables across operations.
struct Workspace {
    explicit Workspace(const Graph& g) : algebra(g), bases(g) {}

    const Graph& graph() const noexcept { return algebra.host(); }

    HopfAlgebra algebra;
    BasisCache bases;
};

}  // namespace subhopf
