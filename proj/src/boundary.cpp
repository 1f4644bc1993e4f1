#include "bpdyn/boundary.hpp"

#include <bit>
#include <stdexcept>

namespace bpdyn {

std::vector<std::vector<long long>> boundary_count_grid(const Graph& g) {
    const int n = g.order();
    std::vector<std::vector<long long>> counts(n + 1, std::vector<long long>(n + 1, 0));
    const std::uint32_t full = g.full_mask();
    const std::uint64_t total = 1ull << n;
    for (std::uint64_t s = 0; s < total; ++s) {
        std::uint32_t mask = static_cast<std::uint32_t>(s);
        std::uint32_t reach = 0;
        std::uint32_t bits = mask;
        while (bits) {
            int v = std::countr_zero(bits);
            bits &= bits - 1;
            reach |= g.neighbor_bits(v);
        }
        int i = std::popcount(reach & ~mask & full);
        int j = std::popcount(mask);
        ++counts[i][j];
    }
    return counts;
}

BivariatePoly boundary_polynomial(const Graph& g) {
    const int n = g.order();
    auto counts = boundary_count_grid(g);
    BivariatePoly p(n);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j)
            if (counts[i][j] != 0) p.set_coeff(i, j, Rational(static_cast<long>(counts[i][j])));
    return p;
}

BivariatePoly closed_form_boundary(GraphFamily family, int n) {
    if (n < 1) throw std::invalid_argument("closed form requires order >= 1");
    BivariatePoly p(n);
    switch (family) {
        case GraphFamily::complete:
            // (x+y)^n + 1 - x^n: the (n,0) binomial term cancels against x^n.
            p.set_coeff(0, 0, Rational(1));
            for (int j = 1; j <= n; ++j) p.set_coeff(n - j, j, Rational(binomial(n, j)));
            return p;
        case GraphFamily::empty:
            for (int j = 0; j <= n; ++j) p.set_coeff(0, j, Rational(binomial(n, j)));
            return p;
        default:
            throw std::invalid_argument("closed form available for complete and empty families only");
    }
}

long long boundary_coefficient(const Graph& g, int i, int j) {
    if (i < 0 || j < 0 || i + j > g.order())
        throw std::invalid_argument("coefficient index (i,j) outside 0 <= i+j <= order");
    auto counts = boundary_count_grid(g);
    return counts[i][j];
}

}  // namespace bpdyn
