#pragma once

// Ideal file format:
//
//     # comment
//     ring: x0, x1, x2 over Fp:2147483647      (or: over Q)
//     degree: 2
//     ideal: x0^2 - x1*x2, (x0 + x1)*x2
//
// Polynomials use integer literals of any size, variable names, `^` with a
// positive integer exponent, `*`, `+`, `-` and parentheses.  Generators are
// separated by top-level commas and may span lines.  Every generator is
// homogeneous and the declared degree is the largest generator degree.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "segreta/kernel/ideal.hpp"

namespace segreta::cli {

/// Malformed or invalid input.  line/column are 1-based; 0 when not tied to a position.
class InputError : public std::runtime_error {
   public:
    InputError(const std::string& what, int line = 0, int column = 0)
        : std::runtime_error(line > 0 ? what + " at line " + std::to_string(line) + ", column " + std::to_string(column)
                                      : what),
          line_(line),
          column_(column) {}
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

   private:
    int line_;
    int column_;
};

/// Polynomial with integer coefficients, keyed by exponent vector.
using IntegerPolynomial = std::map<std::vector<int>, mpz_class>;

struct FieldSpec {
    bool rational = false;
    std::uint32_t prime = kernel::kDefaultPrime;

    /// "Q" or "Fp:<prime>".  Throws InputError.
    static FieldSpec parse(std::string_view text);
    std::string to_string() const { return rational ? "Q" : "Fp:" + std::to_string(prime); }
    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

struct IdealFile {
    std::vector<std::string> names;
    FieldSpec field;
    int degree = 0;
    std::vector<IntegerPolynomial> generators;

    int nvars() const noexcept { return static_cast<int>(names.size()); }
    /// Text in the ideal file grammar; parse_ideal(to_string()) reproduces this value.
    std::string to_string() const;
};

IdealFile parse_ideal(std::string_view text);
/// A single polynomial over the given variables.
IntegerPolynomial parse_polynomial(std::string_view text, const std::vector<std::string>& names);
std::string format_polynomial(const IntegerPolynomial& p, const std::vector<std::string>& names);

template <class F>
kernel::Polynomial<F> to_polynomial(const IntegerPolynomial& p, const kernel::RingPtr<F>& ring) {
    using Poly = kernel::Polynomial<F>;
    std::vector<typename Poly::Term> terms;
    for (const auto& [exps, c] : p) terms.push_back({kernel::Monomial(ring->nvars(), exps), ring->field().from_integer(c)});
    return Poly::from_terms(ring, std::move(terms));
}

/// Generators mapped into `field`; throws InputError if one vanishes there.
template <class F>
kernel::Ideal<F> to_ideal(const IdealFile& file, const F& field) {
    auto ring = kernel::Ring<F>::create(field, file.names, kernel::MonomialOrder::grevlex(file.nvars()));
    std::vector<kernel::Polynomial<F>> gens;
    for (std::size_t i = 0; i < file.generators.size(); ++i) {
        auto g = to_polynomial<F>(file.generators[i], ring);
        if (g.is_zero()) throw InputError("generator " + std::to_string(i + 1) + " vanishes over " + field.name());
        gens.push_back(std::move(g));
    }
    return kernel::Ideal<F>(ring, std::move(gens));
}

}  // namespace segreta::cli
