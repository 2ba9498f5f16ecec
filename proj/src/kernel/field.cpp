#include "segreta/kernel/field.hpp"

#include <limits>

namespace segreta::kernel {

PrimeField::PrimeField(std::uint64_t p) {
    if (p < 2 || p > std::numeric_limits<std::uint32_t>::max())
        throw std::invalid_argument("prime field modulus must lie in [2, 2^32): " + std::to_string(p));
    mpz_class z(static_cast<unsigned long>(p));
    // 25 Miller-Rabin rounds on top of GMP's trial division; exact below 2^32 in practice.
    if (mpz_probab_prime_p(z.get_mpz_t(), 25) == 0)
        throw std::invalid_argument("prime field modulus is not prime: " + std::to_string(p));
    p_ = static_cast<std::uint32_t>(p);
}

PrimeField::Element PrimeField::inv(Element a) const {
    if (a == 0) throw std::domain_error("division by zero in " + name());
    // Extended Euclid on signed 64-bit values.
    std::int64_t r0 = p_, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t t = r0 - q * r1;
        r0 = r1;
        r1 = t;
        t = s0 - q * s1;
        s0 = s1;
        s1 = t;
    }
    if (s0 < 0) s0 += p_;
    return static_cast<Element>(s0);
}

PrimeField::Element PrimeField::from_integer(const mpz_class& z) const {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p_);
    return static_cast<Element>(r.get_ui());
}

PrimeField::Element PrimeField::from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<Element>(r);
}

PrimeField::Element PrimeField::from_rational(const mpq_class& q) const {
    Element den = from_integer(q.get_den());
    if (den == 0) throw std::domain_error("denominator vanishes in " + name());
    return div(from_integer(q.get_num()), den);
}

PrimeField::Element PrimeField::random(std::mt19937_64& gen) const {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % p_;
    std::uint64_t x;
    do {
        x = gen();
    } while (x >= limit);
    return static_cast<Element>(x % p_);
}

mpz_class PrimeField::lift(Element a) const {
    if (a > p_ / 2) return mpz_class(static_cast<long>(a)) - static_cast<long>(p_);
    return mpz_class(static_cast<long>(a));
}

std::string PrimeField::to_string(Element a) const { return lift(a).get_str(); }

RationalField::Element RationalField::random(std::mt19937_64& gen) const {
    const std::uint64_t width = 2 * kRationalRandomBound + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % width;
    std::uint64_t x;
    do {
        x = gen();
    } while (x >= limit);
    return Element(static_cast<long>(x % width) - static_cast<long>(kRationalRandomBound));
}

}  // namespace segreta::kernel
