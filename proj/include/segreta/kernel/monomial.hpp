#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace segreta::kernel {

/// Upper bound on the number of variables of any ring (including tag variables).
inline constexpr int kMaxVars = 32;

/// Exponent vector with cached total degree and a support bitmask.
///
/// Exponents past nvars are always zero, so two monomials of the same ring
/// compare equal iff their arrays are equal.
class Monomial {
   public:
    using Exponent = std::uint16_t;

    Monomial() = default;
    explicit Monomial(int nvars) : nvars_(check_nvars(nvars)) {}
    Monomial(int nvars, std::span<const int> exps);
    Monomial(int nvars, std::initializer_list<int> exps)
        : Monomial(nvars, std::span<const int>(exps.begin(), exps.size())) {}

    static Monomial variable(int nvars, int index, int power = 1);

    int nvars() const noexcept { return nvars_; }
    int total_degree() const noexcept { return degree_; }
    int operator[](int i) const noexcept { return exps_[static_cast<std::size_t>(i)]; }
    std::uint32_t support_mask() const noexcept { return mask_; }
    bool is_one() const noexcept { return degree_ == 0; }

    std::vector<int> exponents() const { return {exps_.begin(), exps_.begin() + nvars_}; }

    /// this | other
    bool divides(const Monomial& other) const noexcept {
        if ((mask_ & ~other.mask_) != 0 || degree_ > other.degree_) return false;
        for (int i = 0; i < nvars_; ++i)
            if (exps_[i] > other.exps_[i]) return false;
        return true;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r;
        r.nvars_ = a.nvars_;
        unsigned seen = 0;
        for (int i = 0; i < a.nvars_; ++i) {
            unsigned e = unsigned{a.exps_[i]} + b.exps_[i];
            seen |= e;
            r.exps_[i] = static_cast<Exponent>(e);
        }
        if (seen > 0xFFFFu) throw std::overflow_error("monomial exponent out of range");
        r.degree_ = a.degree_ + b.degree_;
        r.mask_ = a.mask_ | b.mask_;
        return r;
    }
    /// Exact quotient; caller guarantees b | a.
    friend Monomial operator/(const Monomial& a, const Monomial& b);
    friend Monomial lcm(const Monomial& a, const Monomial& b);
    friend Monomial gcd(const Monomial& a, const Monomial& b);
    friend bool coprime(const Monomial& a, const Monomial& b) noexcept { return (a.mask_ & b.mask_) == 0; }

    friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
        return a.degree_ == b.degree_ && a.exps_ == b.exps_;
    }

    std::string to_string(std::span<const std::string> names) const;

   private:
    static int check_nvars(int n) {
        if (n < 0 || n > kMaxVars) throw std::invalid_argument("unsupported number of variables: " + std::to_string(n));
        return n;
    }
    void set(int i, int e);
    void refresh();

    std::array<Exponent, kMaxVars> exps_{};
    int degree_ = 0;
    std::uint32_t mask_ = 0;
    int nvars_ = 0;
};

/// Graded monomial order with an optional leading elimination block.
///
/// Comparison: first the elimination block (variables [0, elim_block)) by
/// block degree then reverse-lex, then the remaining variables by weighted
/// degree then reverse-lex.  With elim_block == 0 and unit weights this is
/// plain grevlex.  `weights` also define the grading used for homogeneity
/// and the sugar degree; block variables may carry weight 0.
class MonomialOrder {
   public:
    static MonomialOrder grevlex(int nvars);
    static MonomialOrder weighted_grevlex(std::vector<int> weights);
    /// Weighted grevlex in which variable `last` breaks ties first, as if it
    /// were listed last.
    static MonomialOrder weighted_grevlex(std::vector<int> weights, int last);
    /// Eliminates the first `block` variables.
    static MonomialOrder elimination(std::vector<int> weights, int block);

    int nvars() const noexcept { return static_cast<int>(weights_.size()); }
    int elimination_block() const noexcept { return block_; }
    /// The variable moved to the end of the reverse-lex tie-break, or -1.
    int last_variable() const noexcept { return last_; }
    const std::vector<int>& weights() const noexcept { return weights_; }
    bool is_plain_grevlex() const noexcept;

    int degree(const Monomial& m) const noexcept {
        int d = 0;
        for (int i = 0; i < nvars(); ++i) d += weights_[i] * m[i];
        return d;
    }

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const noexcept {
        if (!plain_) return compare_general(a, b);
        if (a.total_degree() != b.total_degree()) return a.total_degree() <=> b.total_degree();
        for (int i = nvars() - 1; i >= 0; --i)
            if (a[i] != b[i]) return b[i] <=> a[i];
        return std::strong_ordering::equal;
    }
    std::string describe() const;

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

   private:
    MonomialOrder(std::vector<int> weights, int block, int last = -1);
    std::strong_ordering compare_general(const Monomial& a, const Monomial& b) const noexcept;

    std::vector<int> weights_;
    int block_ = 0;
    int last_ = -1;
    bool plain_ = false;
};

}  // namespace segreta::kernel
