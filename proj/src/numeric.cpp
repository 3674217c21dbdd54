#include "numeric.hpp"
#include "error.hpp"

namespace braidlevel {

BigInt pow_int(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Rat parse_rat(const std::string& text) {
    std::size_t pos = 0;
    bool neg = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        neg = text[pos] == '-';
        ++pos;
    }
    std::size_t digits_start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits_start)
        throw Error(ErrorKind::InvalidInput, "malformed rational '" + text + "'");
    BigInt num(text.substr(digits_start, pos - digits_start));
    BigInt den(1);
    if (pos < text.size()) {
        if (text[pos] != '/')
            throw Error(ErrorKind::InvalidInput, "malformed rational '" + text + "'");
        ++pos;
        std::size_t den_start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == den_start || pos != text.size())
            throw Error(ErrorKind::InvalidInput, "malformed rational '" + text + "'");
        den = BigInt(text.substr(den_start, pos - den_start));
        if (den == 0)
            throw Error(ErrorKind::InvalidInput, "zero denominator in '" + text + "'");
    }
    if (neg) num = -num;
    return make_rat(num, den);
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t next_prime_above(std::uint64_t n) {
    std::uint64_t q = n + 1;
    while (!is_prime_u64(q)) ++q;
    return q;
}

} // namespace braidlevel
