#include "blockchar/rational.hpp"

#include <cctype>

namespace blockchar {

BigInt factorial(unsigned n) {
    BigInt result;
    mpz_fac_ui(result.get_mpz_t(), n);
    return result;
}

BigInt binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    BigInt result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return result;
}

Rational binomial(const Rational& top, unsigned k) {
    Rational result = 1;
    for (unsigned i = 0; i < k; ++i) {
        result *= top - i;
        result /= i + 1;
    }
    return result;
}

BigInt power(const BigInt& base, unsigned exponent) {
    BigInt result;
    mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
    return result;
}

Rational power(const Rational& base, unsigned exponent) {
    Rational result(power(BigInt(base.get_num()), exponent), power(BigInt(base.get_den()), exponent));
    result.canonicalize();
    return result;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

namespace {

bool is_integer_text(std::string_view text) {
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) text.remove_prefix(1);
    if (text.empty()) return false;
    for (char c : text)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

BigInt parse_integer(std::string_view text) {
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    return BigInt(std::string(text), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    const auto numerator = text.substr(0, slash);
    if (!is_integer_text(numerator)) throw std::invalid_argument("malformed rational: " + std::string(text));
    if (slash == std::string_view::npos) return Rational(parse_integer(numerator));
    const auto denominator = text.substr(slash + 1);
    if (!is_integer_text(denominator) || denominator.front() == '-' || denominator.front() == '+')
        throw std::invalid_argument("malformed rational: " + std::string(text));
    BigInt den = parse_integer(denominator);
    if (den == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
    Rational result(parse_integer(numerator), den);
    result.canonicalize();
    return result;
}

}  // namespace blockchar
