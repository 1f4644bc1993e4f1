#pragma once

#include <vector>

#include "bpdyn/graph.hpp"
#include "bpdyn/polynomial.hpp"

namespace bpdyn {

/// Free parameters of the weighted boundary polynomial: k weighs nonempty
/// even-size subsets; u is the shared value assigned to every unrealized
/// coefficient cell. When u decomposes as a sum of named parts, the parts
/// can be carried along as metadata (their sum must equal u exactly).
struct WeightParams {
    Rational k;
    Rational u;
    std::vector<Rational> named_parts;

    WeightParams(Rational k_value, Rational u_value, std::vector<Rational> parts = {});
    /// k = 1, u = 0: collapses the weighted polynomial to subset counting.
    static WeightParams unweighted() { return WeightParams(Rational(1), Rational(0)); }
};

/// One cell of the weighted coefficient table. A realized cell carries the
/// parity split of its realizing subsets (odd-size subsets weigh 1, even
/// nonempty ones weigh k); an unrealized cell carries the parameter u.
struct AffineCell {
    long long odd_count = 0;   // "a": realizers of odd size
    long long even_count = 0;  // "b": realizers of even nonempty size
    bool unrealized = false;   // "c": cell receives u

    Rational value(const WeightParams& p) const;
};

/// Coefficient value as an affine form a + b*k + c*u in the free weights.
struct AffineForm {
    Rational constant{0};
    Rational k_coeff{0};
    Rational u_coeff{0};

    Rational value(const WeightParams& p) const { return constant + k_coeff * p.k + u_coeff * p.u; }
    AffineForm operator+(const AffineForm& o) const;
    AffineForm operator*(const Rational& s) const;
    bool is_constant() const { return k_coeff == 0 && u_coeff == 0; }
    /// "3 + 6k + u" style rendering.
    std::string render() const;
};

/// Symbolic weighted coefficient table B^(w)_{i,j} of a graph: every cell on
/// the grid 0 <= i+j <= order. Row j = 0 is structurally zero except (0,0).
class WeightedTable {
public:
    WeightedTable(int order, std::vector<AffineCell> cells);
    int order() const { return order_; }
    const AffineCell& cell(int i, int j) const;
    AffineForm cell_form(int i, int j) const;
    /// Sum of the cell forms along the diagonal i + j = total_degree.
    AffineForm diagonal_sum(int total_degree) const;

private:
    int order_;
    std::vector<AffineCell> cells_;  // (order+1)^2 row-major by i
};

/// Weight of a subset: 1 for the empty set and odd sizes, k otherwise.
Rational subset_weight(const VertexSet& s, const WeightParams& p);

/// Builds the symbolic table by one subset enumeration.
WeightedTable weighted_table(const Graph& g);

/// B_w(G;x,y) with the parameters substituted in.
BivariatePoly instantiate(const WeightedTable& table, const WeightParams& p);

/// The diagonalized tilde polynomial B~_w(G;x) = B_w(G;x,x) - 1 that feeds
/// the Lienard-type constructions. Constant term is always zero.
UnivariatePoly weighted_tilde_diagonal(const Graph& g, const WeightParams& p);

}  // namespace bpdyn
