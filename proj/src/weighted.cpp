#include "bpdyn/weighted.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace bpdyn {

WeightParams::WeightParams(Rational k_value, Rational u_value, std::vector<Rational> parts)
    : k(std::move(k_value)), u(std::move(u_value)), named_parts(std::move(parts)) {
    if (!named_parts.empty()) {
        Rational sum(0);
        for (const auto& part : named_parts) sum += part;
        if (sum != u)
            throw std::invalid_argument("named parts of u must sum to u exactly");
    }
}

Rational AffineCell::value(const WeightParams& p) const {
    if (unrealized) return p.u;
    return Rational(static_cast<long>(odd_count)) + Rational(static_cast<long>(even_count)) * p.k;
}

AffineForm AffineForm::operator+(const AffineForm& o) const {
    return AffineForm{constant + o.constant, k_coeff + o.k_coeff, u_coeff + o.u_coeff};
}

AffineForm AffineForm::operator*(const Rational& s) const {
    return AffineForm{constant * s, k_coeff * s, u_coeff * s};
}

std::string AffineForm::render() const {
    std::ostringstream os;
    bool first = true;
    auto piece = [&](const Rational& c, const char* sym) {
        if (c == 0) return;
        Rational a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (*sym == '\0') {
            os << rational_str(a);
        } else {
            if (a != 1) os << rational_str(a) << "*";
            os << sym;
        }
    };
    piece(constant, "");
    piece(k_coeff, "k");
    piece(u_coeff, "u");
    if (first) return "0";
    return os.str();
}

WeightedTable::WeightedTable(int order, std::vector<AffineCell> cells)
    : order_(order), cells_(std::move(cells)) {
    if (cells_.size() != static_cast<std::size_t>(order + 1) * (order + 1))
        throw std::invalid_argument("weighted table cell grid has wrong size");
}

const AffineCell& WeightedTable::cell(int i, int j) const {
    if (i < 0 || j < 0 || i + j > order_)
        throw std::invalid_argument("weighted table index outside 0 <= i+j <= order");
    return cells_[static_cast<std::size_t>(i) * (order_ + 1) + j];
}

AffineForm WeightedTable::cell_form(int i, int j) const {
    const AffineCell& c = cell(i, j);
    if (c.unrealized) return AffineForm{Rational(0), Rational(0), Rational(1)};
    return AffineForm{Rational(static_cast<long>(c.odd_count)), Rational(static_cast<long>(c.even_count)), Rational(0)};
}

AffineForm WeightedTable::diagonal_sum(int total_degree) const {
    AffineForm sum;
    for (int i = 0; i <= total_degree; ++i) {
        int j = total_degree - i;
        if (i + j > order_ || j < 0) continue;
        sum = sum + cell_form(i, j);
    }
    return sum;
}

Rational subset_weight(const VertexSet& s, const WeightParams& p) {
    if (s.size() == 0 || s.size() % 2 == 1) return Rational(1);
    return p.k;
}

WeightedTable weighted_table(const Graph& g) {
    const int n = g.order();
    const std::uint32_t full = g.full_mask();
    std::vector<AffineCell> cells(static_cast<std::size_t>(n + 1) * (n + 1));
    auto at = [&](int i, int j) -> AffineCell& {
        return cells[static_cast<std::size_t>(i) * (n + 1) + j];
    };

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
        if (j == 0 || j % 2 == 1)
            ++at(i, j).odd_count;
        else
            ++at(i, j).even_count;
    }

    // Row j = 0 is zero except the empty-set cell; unrealized cells with
    // j >= 1 receive the shared parameter.
    for (int i = 1; i <= n; ++i) at(i, 0) = AffineCell{};
    for (int j = 1; j <= n; ++j)
        for (int i = 0; i + j <= n; ++i) {
            AffineCell& c = at(i, j);
            if (c.odd_count == 0 && c.even_count == 0) c.unrealized = true;
        }
    return WeightedTable(n, std::move(cells));
}

BivariatePoly instantiate(const WeightedTable& table, const WeightParams& p) {
    const int n = table.order();
    BivariatePoly out(n);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j) {
            Rational v = table.cell(i, j).value(p);
            // row j = 0, i != 0 cells are structurally zero (never unrealized)
            if (v != 0) out.set_coeff(i, j, v);
        }
    return out;
}

UnivariatePoly weighted_tilde_diagonal(const Graph& g, const WeightParams& p) {
    UnivariatePoly diag = tilde(instantiate(weighted_table(g), p)).diagonal();
    return diag;
}

}  // namespace bpdyn
