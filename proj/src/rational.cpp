#include <rgcalc/rational.hpp>

#include <stdexcept>

namespace rgcalc
{

Rational make_rational(long num, long den)
{
    if (den == 0) {
        throw std::invalid_argument("zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(std::string_view text)
{
    if (text.empty()) {
        throw std::invalid_argument("empty rational literal");
    }
    const auto slash = text.find('/');
    auto check_int = [](std::string_view s, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) {
            ++i;
        }
        if (i == s.size()) {
            return false;
        }
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') {
                return false;
            }
        }
        return true;
    };
    const auto num = text.substr(0, slash);
    const auto den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!check_int(num, true) || !check_int(den, false)) {
        throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
    }
    std::string num_str(num);
    if (num_str[0] == '+') {
        num_str.erase(0, 1);
    }
    Integer n(num_str, 10);
    Integer d(std::string(den), 10);
    if (d == 0) {
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational &q)
{
    return q.get_str();
}

Integer factorial(unsigned n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Rational inverse_factorial(unsigned n)
{
    Rational q;
    mpz_set_ui(q.get_num_mpz_t(), 1);
    mpz_fac_ui(q.get_den_mpz_t(), n);
    return q;
}

Integer binomial(long n, long k)
{
    if (k < 0) {
        return 0;
    }
    Integer r;
    if (n >= 0) {
        if (k > n) {
            return 0;
        }
        mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    } else {
        Integer nn(n);
        mpz_bin_ui(r.get_mpz_t(), nn.get_mpz_t(), static_cast<unsigned long>(k));
    }
    return r;
}

} // namespace rgcalc
