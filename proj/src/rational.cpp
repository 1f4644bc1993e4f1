#include "bpdyn/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace bpdyn {

namespace {

bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

BigInt parse_bigint(const std::string& s, const std::string& full) {
    if (!is_integer_token(s))
        throw std::invalid_argument("not a rational number: '" + full + "'");
    return BigInt(s);
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty rational literal");

    if (auto slash = s.find('/'); slash != std::string::npos) {
        BigInt num = parse_bigint(s.substr(0, slash), text);
        BigInt den = parse_bigint(s.substr(slash + 1), text);
        if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
        Rational r(num, den);
        r.canonicalize();
        return r;
    }

    if (is_integer_token(s)) return Rational(BigInt(s));

    // Decimal / scientific form, converted exactly.
    std::size_t epos = s.find_first_of("eE");
    std::string mant = (epos == std::string::npos) ? s : s.substr(0, epos);
    long exp10 = 0;
    if (epos != std::string::npos) {
        std::string etok = s.substr(epos + 1);
        if (!is_integer_token(etok))
            throw std::invalid_argument("not a rational number: '" + text + "'");
        exp10 = std::stol(etok);
    }

    bool negative = false;
    std::size_t i = 0;
    if (!mant.empty() && (mant[0] == '+' || mant[0] == '-')) {
        negative = (mant[0] == '-');
        i = 1;
    }
    std::string digits;
    long frac_digits = 0;
    bool seen_dot = false, seen_digit = false;
    for (; i < mant.size(); ++i) {
        char c = mant[i];
        if (c == '.') {
            if (seen_dot) throw std::invalid_argument("not a rational number: '" + text + "'");
            seen_dot = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
            seen_digit = true;
            if (seen_dot) ++frac_digits;
        } else {
            throw std::invalid_argument("not a rational number: '" + text + "'");
        }
    }
    if (!seen_digit) throw std::invalid_argument("not a rational number: '" + text + "'");

    BigInt num(digits.empty() ? "0" : digits);
    if (negative) num = -num;
    long shift = exp10 - frac_digits;
    BigInt pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    Rational r = (shift >= 0) ? Rational(num * pow10) : Rational(num, pow10);
    r.canonicalize();
    return r;
}

std::string rational_str(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

double to_double(const Rational& r) { return r.get_d(); }

std::optional<Rational> exact_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    if (r == 0) return Rational(0);
    const BigInt& num = r.get_num();
    const BigInt& den = r.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    BigInt ns, ds;
    mpz_sqrt(ns.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(ds.get_mpz_t(), den.get_mpz_t());
    return Rational(ns, ds);
}

SqrtApprox approx_sqrt(const Rational& r, int digits) {
    if (r < 0) throw std::invalid_argument("approx_sqrt of negative rational");
    const int prec_bits = static_cast<int>(digits * 3.33) + 64;
    mpf_class x(r, prec_bits);
    mpf_class root;
    mpf_sqrt(root.get_mpf_t(), x.get_mpf_t());

    mp_exp_t exp10 = 0;
    std::string mantissa = root.get_str(exp10, 10, static_cast<std::size_t>(digits));
    std::string dec;
    if (mantissa.empty() || mantissa == "0") {
        dec = "0";
    } else {
        bool neg = mantissa[0] == '-';
        std::string m = neg ? mantissa.substr(1) : mantissa;
        dec = (neg ? "-0." : "0.") + m + "e" + std::to_string(exp10);
    }
    return SqrtApprox{root.get_d(), dec};
}

Rational pow_rational(const Rational& base, unsigned exp) {
    BigInt n, d;
    mpz_pow_ui(n.get_mpz_t(), base.get_num().get_mpz_t(), exp);
    mpz_pow_ui(d.get_mpz_t(), base.get_den().get_mpz_t(), exp);
    Rational r(n, d);
    r.canonicalize();
    return r;
}

BigInt binomial(unsigned n, unsigned k) {
    BigInt b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

}  // namespace bpdyn
