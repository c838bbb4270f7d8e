#include "containerkit/rational.hpp"
#include "containerkit/errors.hpp"

#include <cctype>

namespace containerkit {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational");
    auto is_int = [](const std::string& s) {
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i >= s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_int(text)) throw ParseError("bad rational '" + text + "'");
        return Rational(BigInt(text));
    }
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den))
        throw ParseError("bad rational '" + text + "'");
    BigInt d(den);
    if (d <= 0) throw ParseError("rational denominator must be positive: '" + text + "'");
    return Rational(BigInt(num), d);
}

std::string rational_str(const Rational& value) {
    std::string s = numerator(value).str();
    if (denominator(value) != 1) s += "/" + denominator(value).str();
    return s;
}

Rational rational_pow(const Rational& value, long exp) {
    if (exp == 0) return Rational(1);
    bool invert = exp < 0;
    unsigned long e = invert ? static_cast<unsigned long>(-exp)
                             : static_cast<unsigned long>(exp);
    if (invert && value == 0) throw std::invalid_argument("0 raised to negative power");
    Rational base = value, acc(1);
    while (e > 0) {
        if (e & 1u) acc *= base;
        base *= base;
        e >>= 1u;
    }
    return invert ? Rational(1) / acc : acc;
}

BigInt binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (long i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result /= i;
    }
    return result;
}

BigInt factorial(long n) {
    BigInt result = 1;
    for (long i = 2; i <= n; ++i) result *= i;
    return result;
}

BigInt floor_nth_root(const BigInt& a, unsigned p) {
    if (a < 0) throw std::invalid_argument("nth root of negative value");
    if (p == 0) throw std::invalid_argument("0th root");
    if (a == 0 || a == 1 || p == 1) return a;
    // Newton iteration with an initial guess from the bit length.
    unsigned long bits = msb(a) + 1;
    BigInt x = BigInt(1) << (bits / p + 1);
    while (true) {
        // x' = ((p-1)x + a / x^(p-1)) / p
        BigInt xp1 = 1;
        for (unsigned i = 0; i + 1 < p; ++i) xp1 *= x;
        BigInt next = ((p - 1) * x + a / xp1) / p;
        if (next >= x) break;
        x = next;
    }
    // Newton can undershoot by at most a few steps near the root.
    while (true) {
        BigInt xp = 1;
        for (unsigned i = 0; i < p; ++i) xp *= x;
        if (xp <= a) break;
        --x;
    }
    while (true) {
        BigInt xp = 1;
        for (unsigned i = 0; i < p; ++i) xp *= (x + 1);
        if (xp > a) break;
        ++x;
    }
    return x;
}

Rational rational_neg_pow_lower(long base, const BigInt& num, const BigInt& den) {
    if (base < 1 || num < 1 || den < 1)
        throw std::invalid_argument("rational_neg_pow_lower: base, num, den must be >= 1");
    if (base == 1) return Rational(1);
    // base^(-num/den) = 1 / (base^num)^(1/den). Compute an upper bound u on
    // (base^num)^(1/den) at scale 10^15, then return 1/u <= base^(-num/den).
    if (num > 4096 || den > 4096)
        throw ResourceLimitError("rational_neg_pow_lower: exponent too large");
    unsigned p = static_cast<unsigned>(den);
    BigInt v = 1;
    for (BigInt i = 0; i < num; ++i) v *= base;
    const BigInt scale = BigInt("1000000000000000");
    BigInt scaled = v;
    for (unsigned i = 0; i < p; ++i) scaled *= scale;
    BigInt t = floor_nth_root(scaled, p);
    BigInt tp = 1;
    for (unsigned i = 0; i < p; ++i) tp *= t;
    if (tp < scaled) ++t; // round up: t/scale >= v^(1/p)
    return Rational(scale, t);
}

long long next_prime_above(long long n) {
    auto is_prime = [](long long m) {
        if (m < 2) return false;
        for (long long d = 2; d * d <= m; ++d)
            if (m % d == 0) return false;
        return true;
    };
    long long candidate = n + 1;
    while (!is_prime(candidate)) ++candidate;
    return candidate;
}

double rational_to_double(const Rational& value) {
    return static_cast<double>(value);
}

} // namespace containerkit
