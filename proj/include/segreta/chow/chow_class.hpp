#pragma once

// Classes in the Chow group of P^n, stored codimension first:
// coeffs[i] is the coefficient of [P^{n-i}], equivalently of H^i.
//
// All arithmetic is exact int64 with overflow checks (std::overflow_error).

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace segreta::chow {

using Integer = std::int64_t;
/// Truncated power series in one variable, coefficient of x^i at index i.
using Series = std::vector<Integer>;

class TwistMismatch : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

class ChowClass {
   public:
    /// Zero class in P^n.
    explicit ChowClass(int n);
    /// Class in P^{coeffs.size()-1}.
    explicit ChowClass(std::vector<Integer> coeffs);

    int ambient_dim() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
    Integer operator[](int codim) const { return coeffs_.at(static_cast<std::size_t>(codim)); }
    bool is_zero() const noexcept;

    /// "2[P^2] + 18[P^1] - 334[P^0]"; "0" for the zero class.
    std::string to_string() const;

    friend bool operator==(const ChowClass&, const ChowClass&) = default;

   private:
    std::vector<Integer> coeffs_;
};

ChowClass operator+(const ChowClass& a, const ChowClass& b);
ChowClass operator-(const ChowClass& a, const ChowClass& b);

/// A class s(Z, P^n)^{O(twist H)}.
struct TwistedSegreClass {
    ChowClass cls;
    Integer twist = 0;
    /// Degree of the forms defining Z, when known.
    std::optional<int> degree;

    friend bool operator==(const TwistedSegreClass&, const TwistedSegreClass&) = default;
};

/// c ⊗ O(mH): a[P^k] -> a (1+mH)^{-(n+1-k)} ∩ [P^k].
ChowClass tensor_twist(const ChowClass& c, Integer m);
/// s^{L1 ⊗ L2} = s^{L1} ⊗ L2, with L2 = O(m2 H).
TwistedSegreClass compose_twists(const TwistedSegreClass& s, Integer m2);
/// The tensored class of an ordinary class s.
TwistedSegreClass from_ordinary(const ChowClass& s, Integer m);
ChowClass to_ordinary(const TwistedSegreClass& s);

/// H · c, as a class in P^{n-1}.
ChowClass hyperplane_cut(const ChowClass& c);
/// (-1)^i a_i.
ChowClass dual_class(const ChowClass& c);
/// (1+H)^{n+1} ∩ S.
ChowClass fulton_class(const ChowClass& S);

/// s(Z,V)^{O(-X)} = sD + sR, where sR is the residual class at twist
/// sD.twist + deg_D.
TwistedSegreClass residual_combine(const TwistedSegreClass& sD, const TwistedSegreClass& sR, Integer deg_D);

/// a_c of a class at twist -d.
Integer excess_contribution(const TwistedSegreClass& s, int c);
/// N_k = d^k - a_k for a class at twist -d.
std::vector<Integer> predicted_counts(const TwistedSegreClass& s, Integer d);

struct EffectivityReport {
    bool effective = true;
    /// Codimensions with a negative coefficient.
    std::vector<int> offending;
};
EffectivityReport effectivity_check(const TwistedSegreClass& s);

/// Nonnegative, log-concave and without internal zeros.
bool is_log_concave(const std::vector<Integer>& seq);
bool huh_logconcavity_check(const TwistedSegreClass& s, Integer d);

/// Class of the linear join Z ∨ P^m in P^{n+m+1}, at twist -d.
TwistedSegreClass join_class(const TwistedSegreClass& s, int m);

namespace series {

Integer add(Integer a, Integer b);
Integer mul(Integer a, Integer b);
Integer pow(Integer a, int e);
Integer binomial(Integer n, Integer k);
/// (1 + a x)^e for any integer e, truncated to `len` terms.
Series binomial_series(Integer a, Integer e, std::size_t len);
Series multiply(const Series& a, const Series& b, std::size_t len);
/// 1/a for a with constant term 1.
Series inverse(const Series& a, std::size_t len);

}  // namespace series

}  // namespace segreta::chow
