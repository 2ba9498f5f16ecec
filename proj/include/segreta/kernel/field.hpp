#pragma once

// Coefficient fields for the polynomial kernel.
//
// Both fields expose the same duck-typed interface so the kernel can be
// templated on them: an Element type plus arithmetic on elements.  Field
// objects are small immutable values; elements carry no back-pointer.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace segreta::kernel {

/// 2^31 - 1.  Products of two residues fit comfortably in 64 bits.
inline constexpr std::uint32_t kDefaultPrime = 2147483647u;

/// Half-width of the integer range used for random coefficients over Q.
inline constexpr std::int64_t kRationalRandomBound = 32768;

class PrimeField {
   public:
    using Element = std::uint32_t;

    /// Throws std::invalid_argument unless p is a prime below 2^32.
    explicit PrimeField(std::uint64_t p = kDefaultPrime);

    std::uint32_t characteristic() const noexcept { return p_; }
    std::string name() const { return "Fp:" + std::to_string(p_); }

    Element zero() const noexcept { return 0; }
    Element one() const noexcept { return 1; }
    bool is_zero(Element a) const noexcept { return a == 0; }
    bool is_one(Element a) const noexcept { return a == 1; }

    Element add(Element a, Element b) const noexcept {
        std::uint64_t s = std::uint64_t{a} + b;
        return static_cast<Element>(s >= p_ ? s - p_ : s);
    }
    Element sub(Element a, Element b) const noexcept { return a >= b ? a - b : static_cast<Element>(std::uint64_t{a} + p_ - b); }
    Element neg(Element a) const noexcept { return a == 0 ? 0 : p_ - a; }
    Element mul(Element a, Element b) const noexcept {
        return static_cast<Element>(std::uint64_t{a} * b % p_);
    }
    Element inv(Element a) const;
    Element div(Element a, Element b) const { return mul(a, inv(b)); }

    Element from_integer(const mpz_class& z) const;
    Element from_int(std::int64_t v) const;
    /// Rational -> residue; throws std::domain_error if p divides the denominator.
    Element from_rational(const mpq_class& q) const;

    /// Uniform draw from [0, p) by rejection on the raw 64-bit output.
    Element random(std::mt19937_64& gen) const;

    /// Symmetric representative in (-p/2, p/2].
    std::string to_string(Element a) const;
    /// Symmetric representative as an integer.
    mpz_class lift(Element a) const;

    friend bool operator==(const PrimeField& a, const PrimeField& b) noexcept { return a.p_ == b.p_; }

   private:
    std::uint32_t p_;
};

class RationalField {
   public:
    using Element = mpq_class;

    std::uint32_t characteristic() const noexcept { return 0; }
    std::string name() const { return "Q"; }

    Element zero() const { return Element(0); }
    Element one() const { return Element(1); }
    bool is_zero(const Element& a) const { return sgn(a) == 0; }
    bool is_one(const Element& a) const { return a == 1; }

    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element neg(const Element& a) const { return -a; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element inv(const Element& a) const {
        if (sgn(a) == 0) throw std::domain_error("division by zero in Q");
        return 1 / a;
    }
    Element div(const Element& a, const Element& b) const {
        if (sgn(b) == 0) throw std::domain_error("division by zero in Q");
        return a / b;
    }

    Element from_integer(const mpz_class& z) const { return Element(z); }
    Element from_int(std::int64_t v) const { return Element(static_cast<long>(v)); }
    Element from_rational(const mpq_class& q) const { return q; }

    /// Integer drawn uniformly from [-kRationalRandomBound, kRationalRandomBound].
    Element random(std::mt19937_64& gen) const;

    std::string to_string(const Element& a) const { return a.get_str(); }

    friend bool operator==(const RationalField&, const RationalField&) noexcept { return true; }
};

}  // namespace segreta::kernel
