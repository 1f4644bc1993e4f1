#pragma once

#include <vector>

#include "bpdyn/graph.hpp"
#include "bpdyn/polynomial.hpp"

namespace bpdyn {

/// B(G;x,y) = sum over all vertex subsets S of x^|B(S)| y^|S|, where B(S) is
/// the exterior vertex boundary. Coefficient (i,j) counts the subsets with
/// |B(S)| = i and |S| = j. Enumerates all 2^order subsets.
BivariatePoly boundary_polynomial(const Graph& g);

/// Raw coefficient grid: counts[i][j] with i+j <= order.
std::vector<std::vector<long long>> boundary_count_grid(const Graph& g);

/// Expanded closed forms: complete -> (x+y)^n + 1 - x^n, empty -> (1+y)^n.
/// Only GraphFamily::complete and GraphFamily::empty are accepted.
BivariatePoly closed_form_boundary(GraphFamily family, int n);

/// B_{i,j}(g); throws std::invalid_argument when i+j > order or negative.
long long boundary_coefficient(const Graph& g, int i, int j);

}  // namespace bpdyn
