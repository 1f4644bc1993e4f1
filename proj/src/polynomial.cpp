#include "bpdyn/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace bpdyn {

const Rational BivariatePoly::kZero = Rational(0);

// ---------------------------------------------------------------- univariate

UnivariatePoly::UnivariatePoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

void UnivariatePoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UnivariatePoly UnivariatePoly::constant(const Rational& c) {
    return UnivariatePoly(std::vector<Rational>{c});
}

UnivariatePoly UnivariatePoly::monomial(const Rational& c, int degree) {
    if (degree < 0) throw std::invalid_argument("monomial degree must be nonnegative");
    std::vector<Rational> cs(degree + 1, Rational(0));
    cs[degree] = c;
    return UnivariatePoly(std::move(cs));
}

Rational UnivariatePoly::coeff(int d) const {
    if (d < 0 || d >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[d];
}

Rational UnivariatePoly::evaluate(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double UnivariatePoly::evaluate(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
}

UnivariatePoly UnivariatePoly::derivative() const {
    if (coeffs_.size() <= 1) return UnivariatePoly();
    std::vector<Rational> out(coeffs_.size() - 1);
    for (std::size_t d = 1; d < coeffs_.size(); ++d) out[d - 1] = coeffs_[d] * Rational(static_cast<long>(d));
    return UnivariatePoly(std::move(out));
}

UnivariatePoly UnivariatePoly::operator+(const UnivariatePoly& o) const {
    std::vector<Rational> out(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (std::size_t d = 0; d < out.size(); ++d) {
        if (d < coeffs_.size()) out[d] += coeffs_[d];
        if (d < o.coeffs_.size()) out[d] += o.coeffs_[d];
    }
    return UnivariatePoly(std::move(out));
}

UnivariatePoly UnivariatePoly::operator-(const UnivariatePoly& o) const { return *this + (-o); }

UnivariatePoly UnivariatePoly::operator*(const UnivariatePoly& o) const {
    if (is_zero() || o.is_zero()) return UnivariatePoly();
    std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (std::size_t a = 0; a < coeffs_.size(); ++a)
        for (std::size_t b = 0; b < o.coeffs_.size(); ++b) out[a + b] += coeffs_[a] * o.coeffs_[b];
    return UnivariatePoly(std::move(out));
}

UnivariatePoly UnivariatePoly::operator*(const Rational& s) const {
    std::vector<Rational> out(coeffs_);
    for (auto& c : out) c *= s;
    return UnivariatePoly(std::move(out));
}

UnivariatePoly UnivariatePoly::operator-() const { return *this * Rational(-1); }

namespace {

std::string coeff_prefix(const Rational& c) {
    // |c| rendered for a non-constant term; 1 is dropped, fractions get parens.
    Rational a = abs(c);
    if (a == 1) return "";
    if (a.get_den() == 1) return a.get_num().get_str();
    return "(" + rational_str(a) + ")";
}

void append_term(std::ostringstream& os, bool first, const Rational& c, const std::string& body) {
    if (first) {
        if (c < 0) os << "-";
    } else {
        os << (c < 0 ? " - " : " + ");
    }
    if (body.empty()) {
        os << rational_str(abs(c));
    } else {
        os << coeff_prefix(c) << body;
    }
}

std::string power(const std::string& var, int d) {
    if (d == 0) return "";
    if (d == 1) return var;
    return var + "^" + std::to_string(d);
}

}  // namespace

std::string UnivariatePoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t d = 0; d < coeffs_.size(); ++d) {
        if (coeffs_[d] == 0) continue;
        append_term(os, first, coeffs_[d], power(var, static_cast<int>(d)));
        first = false;
    }
    return os.str();
}

UnivariateDivMod divmod(const UnivariatePoly& a, const UnivariatePoly& b) {
    if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
    std::vector<Rational> rem(a.coeffs());
    int db = b.degree();
    const Rational lead = b.coeff(db);
    if (a.degree() < db) return {UnivariatePoly(), a};
    std::vector<Rational> quot(a.degree() - db + 1, Rational(0));
    for (int d = a.degree(); d >= db; --d) {
        Rational c = rem[d];
        if (c == 0) continue;
        Rational q = c / lead;
        quot[d - db] = q;
        for (int k = 0; k <= db; ++k) rem[d - db + k] -= q * b.coeff(k);
    }
    return {UnivariatePoly(std::move(quot)), UnivariatePoly(std::move(rem))};
}

// ---------------------------------------------------------------- bivariate

BivariatePoly::BivariatePoly(int maxdeg) : maxdeg_(maxdeg) {
    if (maxdeg < 0) throw std::invalid_argument("maxdeg must be nonnegative");
    coeffs_.assign(static_cast<std::size_t>(maxdeg + 1) * (maxdeg + 1), Rational(0));
}

BivariatePoly BivariatePoly::constant(const Rational& c) {
    BivariatePoly p(0);
    p.set_coeff(0, 0, c);
    return p;
}

BivariatePoly BivariatePoly::variable_x() {
    BivariatePoly p(1);
    p.set_coeff(1, 0, Rational(1));
    return p;
}

BivariatePoly BivariatePoly::variable_y() {
    BivariatePoly p(1);
    p.set_coeff(0, 1, Rational(1));
    return p;
}

BivariatePoly BivariatePoly::from_x_poly(const UnivariatePoly& p) {
    BivariatePoly out(std::max(p.degree(), 0));
    for (int d = 0; d <= p.degree(); ++d) out.set_coeff(d, 0, p.coeff(d));
    return out;
}

const Rational& BivariatePoly::coeff(int i, int j) const {
    if (i < 0 || j < 0 || i + j > maxdeg_) return kZero;
    return coeffs_[idx(i, j)];
}

void BivariatePoly::set_coeff(int i, int j, const Rational& v) {
    if (i < 0 || j < 0 || i + j > maxdeg_)
        throw std::invalid_argument("coefficient index outside i+j <= maxdeg grid");
    coeffs_[idx(i, j)] = v;
}

Rational BivariatePoly::evaluate(const Rational& x, const Rational& y) const {
    // Horner in x; each row in turn Horner in y.
    Rational acc(0);
    for (int i = maxdeg_; i >= 0; --i) {
        Rational row(0);
        for (int j = maxdeg_ - i; j >= 0; --j) row = row * y + coeffs_[idx(i, j)];
        acc = acc * x + row;
    }
    return acc;
}

double BivariatePoly::evaluate(double x, double y) const {
    double acc = 0.0;
    for (int i = maxdeg_; i >= 0; --i) {
        double row = 0.0;
        for (int j = maxdeg_ - i; j >= 0; --j) row = row * y + coeffs_[idx(i, j)].get_d();
        acc = acc * x + row;
    }
    return acc;
}

BivariatePoly BivariatePoly::partial_x() const {
    BivariatePoly out(std::max(maxdeg_ - 1, 0));
    for (int i = 1; i <= maxdeg_; ++i)
        for (int j = 0; i + j <= maxdeg_; ++j)
            if (coeffs_[idx(i, j)] != 0) out.set_coeff(i - 1, j, coeffs_[idx(i, j)] * Rational(i));
    return out;
}

BivariatePoly BivariatePoly::partial_y() const {
    BivariatePoly out(std::max(maxdeg_ - 1, 0));
    for (int i = 0; i <= maxdeg_; ++i)
        for (int j = 1; i + j <= maxdeg_; ++j)
            if (coeffs_[idx(i, j)] != 0) out.set_coeff(i, j - 1, coeffs_[idx(i, j)] * Rational(j));
    return out;
}

UnivariatePoly BivariatePoly::diagonal() const {
    std::vector<Rational> out(maxdeg_ + 1, Rational(0));
    for (int i = 0; i <= maxdeg_; ++i)
        for (int j = 0; i + j <= maxdeg_; ++j) out[i + j] += coeffs_[idx(i, j)];
    return UnivariatePoly(std::move(out));
}

BivariatePoly BivariatePoly::trimmed() const {
    int d = 0;
    for (int i = 0; i <= maxdeg_; ++i)
        for (int j = 0; i + j <= maxdeg_; ++j)
            if (coeffs_[idx(i, j)] != 0) d = std::max(d, i + j);
    BivariatePoly out(d);
    for (int i = 0; i <= d; ++i)
        for (int j = 0; i + j <= d; ++j) out.set_coeff(i, j, coeff(i, j));
    return out;
}

bool BivariatePoly::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

BivariatePoly BivariatePoly::operator+(const BivariatePoly& o) const {
    BivariatePoly out(std::max(maxdeg_, o.maxdeg_));
    for (int i = 0; i <= out.maxdeg_; ++i)
        for (int j = 0; i + j <= out.maxdeg_; ++j) out.set_coeff(i, j, coeff(i, j) + o.coeff(i, j));
    return out;
}

BivariatePoly BivariatePoly::operator-(const BivariatePoly& o) const { return *this + (-o); }

BivariatePoly BivariatePoly::operator*(const BivariatePoly& o) const {
    BivariatePoly a = trimmed(), b = o.trimmed();
    if (a.is_zero() || b.is_zero()) return BivariatePoly(0);
    BivariatePoly out(a.maxdeg_ + b.maxdeg_);
    for (int i = 0; i <= a.maxdeg_; ++i)
        for (int j = 0; i + j <= a.maxdeg_; ++j) {
            const Rational& ca = a.coeff(i, j);
            if (ca == 0) continue;
            for (int p = 0; p <= b.maxdeg_; ++p)
                for (int q = 0; p + q <= b.maxdeg_; ++q) {
                    const Rational& cb = b.coeff(p, q);
                    if (cb == 0) continue;
                    out.coeffs_[out.idx(i + p, j + q)] += ca * cb;
                }
        }
    return out;
}

BivariatePoly BivariatePoly::operator*(const Rational& s) const {
    BivariatePoly out(*this);
    for (auto& c : out.coeffs_) c *= s;
    return out;
}

BivariatePoly BivariatePoly::operator-() const { return *this * Rational(-1); }

bool BivariatePoly::operator==(const BivariatePoly& o) const {
    int d = std::max(maxdeg_, o.maxdeg_);
    for (int i = 0; i <= d; ++i)
        for (int j = 0; i + j <= d; ++j)
            if (coeff(i, j) != o.coeff(i, j)) return false;
    return true;
}

std::string BivariatePoly::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int d = 0; d <= maxdeg_; ++d) {
        for (int i = d; i >= 0; --i) {
            const Rational& c = coeff(i, d - i);
            if (c == 0) continue;
            append_term(os, first, c, power("x", i) + power("y", d - i));
            first = false;
        }
    }
    if (first) return "0";
    return os.str();
}

BivariatePoly tilde(const BivariatePoly& p) {
    BivariatePoly out(p);
    out.set_coeff(0, 0, p.coeff(0, 0) - 1);
    return out;
}

// ----------------------------------------------------------------- compiled

CompiledPoly2D::CompiledPoly2D(const BivariatePoly& p) {
    BivariatePoly t = p.trimmed();
    rows_.assign(t.maxdeg() + 1, {});
    for (int i = 0; i <= t.maxdeg(); ++i) {
        int last = -1;
        for (int j = 0; i + j <= t.maxdeg(); ++j)
            if (t.coeff(i, j) != 0) last = j;
        rows_[i].resize(last + 1, 0.0);
        for (int j = 0; j <= last; ++j) rows_[i][j] = t.coeff(i, j).get_d();
    }
}

double CompiledPoly2D::operator()(double x, double y) const {
    double acc = 0.0;
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
        double row = 0.0;
        for (auto jt = it->rbegin(); jt != it->rend(); ++jt) row = row * y + *jt;
        acc = acc * x + row;
    }
    return acc;
}

}  // namespace bpdyn
