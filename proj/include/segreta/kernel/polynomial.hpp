#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <type_traits>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "segreta/kernel/ring.hpp"

namespace segreta::kernel {

/// Sparse polynomial: terms sorted strictly decreasing in the ring's order,
/// no zero coefficients.
template <class F>
class Polynomial {
   public:
    using Element = typename F::Element;
    struct Term {
        Monomial mono;
        Element coeff;
    };

    explicit Polynomial(RingPtr<F> ring) : ring_(std::move(ring)) {}

    /// Sorts, merges equal monomials and drops zeros.
    static Polynomial from_terms(RingPtr<F> ring, std::vector<Term> terms);
    static Polynomial constant(RingPtr<F> ring, Element c);
    static Polynomial variable(RingPtr<F> ring, int index);
    static Polynomial monomial(RingPtr<F> ring, const Monomial& m, Element c);

    const RingPtr<F>& ring() const noexcept { return ring_; }
    const F& field() const noexcept { return ring_->field(); }
    int nvars() const noexcept { return ring_->nvars(); }

    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    const Term& lead() const { return terms_.front(); }
    const Monomial& lead_monomial() const { return terms_.front().mono; }
    const Element& lead_coeff() const { return terms_.front().coeff; }

    /// Common total degree of all terms, if there is one (empty for zero).
    std::optional<int> homogeneous_degree() const;
    /// Same with respect to the ring's grading weights.
    std::optional<int> graded_degree() const;
    /// Largest weighted degree over the terms.
    int max_graded_degree() const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return a.combine(b, false); }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a.combine(b, true); }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) { return a.multiply(b); }

    Polynomial scaled(const Element& c) const;
    Polynomial times_term(const Monomial& m, const Element& c) const;
    Polynomial monic() const;
    Polynomial pow(int e) const;
    Polynomial derivative(int var) const;

    /// Re-express in `target`, sending variable i to target variable var_map[i].
    Polynomial remap(RingPtr<F> target, std::span<const int> var_map) const;
    /// Same variables, different order (re-sorts).
    Polynomial in_ring(RingPtr<F> target) const;

    /// Replaces variable `var` by `value` (a polynomial of the same ring).
    Polynomial substitute(int var, const Polynomial& value) const;

    /// Exact division; empty if `divisor` does not divide this polynomial.
    std::optional<Polynomial> divide_exact(const Polynomial& divisor) const;

    std::string to_string() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (!a.ring_->compatible(*b.ring_) || a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
        return true;
    }

    /// p - c * m * g where all three share a ring; used by reduction.
    static std::vector<Term> sub_scaled(std::span<const Term> p, const Element& c, const Monomial& m,
                                        std::span<const Term> g, const Ring<F>& ring) {
        return sub_scaled_impl(p, c, m, g, ring);
    }
    /// As above, consuming the terms of p from position `from` on.
    static std::vector<Term> sub_scaled(std::vector<Term>&& p, std::size_t from, const Element& c, const Monomial& m,
                                        std::span<const Term> g, const Ring<F>& ring) {
        return sub_scaled_impl(std::span<Term>(p).subspan(from), c, m, g, ring);
    }

   private:
    Polynomial(RingPtr<F> ring, std::vector<Term> sorted) : ring_(std::move(ring)), terms_(std::move(sorted)) {}

    template <class T>
    static std::vector<Term> sub_scaled_impl(std::span<T> p, const Element& c, const Monomial& m,
                                             std::span<const Term> g, const Ring<F>& ring);

    Polynomial combine(const Polynomial& b, bool subtract) const;
    Polynomial multiply(const Polynomial& b) const;

    RingPtr<F> ring_;
    std::vector<Term> terms_;
};

// ---------------------------------------------------------------------------

template <class F>
Polynomial<F> Polynomial<F>::from_terms(RingPtr<F> ring, std::vector<Term> terms) {
    const auto& ord = ring->order();
    const auto& K = ring->field();
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) { return ord.compare(a.mono, b.mono) > 0; });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (t.mono.nvars() != ring->nvars()) throw RingMismatch("monomial arity does not match ring");
        if (!out.empty() && out.back().mono == t.mono) {
            out.back().coeff = K.add(out.back().coeff, t.coeff);
        } else {
            if (!out.empty() && K.is_zero(out.back().coeff)) out.pop_back();
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && K.is_zero(out.back().coeff)) out.pop_back();
    return Polynomial(std::move(ring), std::move(out));
}

template <class F>
Polynomial<F> Polynomial<F>::constant(RingPtr<F> ring, Element c) {
    return monomial(ring, Monomial(ring->nvars()), std::move(c));
}

template <class F>
Polynomial<F> Polynomial<F>::variable(RingPtr<F> ring, int index) {
    auto one = ring->field().one();
    return monomial(ring, Monomial::variable(ring->nvars(), index), one);
}

template <class F>
Polynomial<F> Polynomial<F>::monomial(RingPtr<F> ring, const Monomial& m, Element c) {
    std::vector<Term> t;
    if (!ring->field().is_zero(c)) t.push_back({m, std::move(c)});
    return Polynomial(std::move(ring), std::move(t));
}

template <class F>
std::optional<int> Polynomial<F>::homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    int d = terms_.front().mono.total_degree();
    for (const auto& t : terms_)
        if (t.mono.total_degree() != d) return std::nullopt;
    return d;
}

template <class F>
std::optional<int> Polynomial<F>::graded_degree() const {
    if (terms_.empty()) return std::nullopt;
    const auto& ord = ring_->order();
    int d = ord.degree(terms_.front().mono);
    for (const auto& t : terms_)
        if (ord.degree(t.mono) != d) return std::nullopt;
    return d;
}

template <class F>
int Polynomial<F>::max_graded_degree() const {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, ring_->order().degree(t.mono));
    return d;
}

template <class F>
Polynomial<F> Polynomial<F>::operator-() const {
    std::vector<Term> out = terms_;
    for (auto& t : out) t.coeff = field().neg(t.coeff);
    return Polynomial(ring_, std::move(out));
}

template <class F>
Polynomial<F> Polynomial<F>::scaled(const Element& c) const {
    if (field().is_zero(c)) return Polynomial(ring_);
    std::vector<Term> out = terms_;
    for (auto& t : out) t.coeff = field().mul(t.coeff, c);
    return Polynomial(ring_, std::move(out));
}

template <class F>
Polynomial<F> Polynomial<F>::times_term(const Monomial& m, const Element& c) const {
    if (field().is_zero(c)) return Polynomial(ring_);
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back({t.mono * m, field().mul(t.coeff, c)});
    return Polynomial(ring_, std::move(out));
}

template <class F>
Polynomial<F> Polynomial<F>::monic() const {
    if (is_zero() || field().is_one(lead_coeff())) return *this;
    return scaled(field().inv(lead_coeff()));
}

template <class F>
Polynomial<F> Polynomial<F>::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative polynomial power");
    Polynomial result = constant(ring_, field().one());
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

template <class F>
Polynomial<F> Polynomial<F>::derivative(int var) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
        int e = t.mono[var];
        if (e == 0) continue;
        std::vector<int> exps = t.mono.exponents();
        exps[static_cast<std::size_t>(var)] -= 1;
        out.push_back({Monomial(nvars(), exps), field().mul(t.coeff, field().from_int(e))});
    }
    // Differentiation preserves the relative order of the surviving terms only
    // for some orders, so re-sort.
    return from_terms(ring_, std::move(out));
}

template <class F>
Polynomial<F> Polynomial<F>::remap(RingPtr<F> target, std::span<const int> var_map) const {
    if (static_cast<int>(var_map.size()) != nvars()) throw std::invalid_argument("remap: variable map has wrong length");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        std::vector<int> exps(static_cast<std::size_t>(target->nvars()), 0);
        for (int i = 0; i < nvars(); ++i) {
            if (t.mono[i] == 0) continue;
            int j = var_map[static_cast<std::size_t>(i)];
            if (j < 0 || j >= target->nvars()) throw std::out_of_range("remap: target variable out of range");
            exps[static_cast<std::size_t>(j)] += t.mono[i];
        }
        out.push_back({Monomial(target->nvars(), exps), t.coeff});
    }
    return from_terms(std::move(target), std::move(out));
}

template <class F>
Polynomial<F> Polynomial<F>::in_ring(RingPtr<F> target) const {
    if (target->nvars() != nvars() || !(target->field() == field())) throw RingMismatch("in_ring: incompatible target ring");
    return from_terms(std::move(target), terms_);
}

template <class F>
Polynomial<F> Polynomial<F>::substitute(int var, const Polynomial& value) const {
    require_same_ring(*ring_, *value.ring_, "substitute");
    // Horner-free: group by power of var, cache powers of value.
    std::vector<Polynomial> powers{constant(ring_, field().one())};
    Polynomial result(ring_);
    std::vector<Term> rest;
    for (const auto& t : terms_) {
        int e = t.mono[var];
        while (static_cast<int>(powers.size()) <= e) powers.push_back(powers.back() * value);
        std::vector<int> exps = t.mono.exponents();
        exps[static_cast<std::size_t>(var)] = 0;
        result = result + powers[static_cast<std::size_t>(e)].times_term(Monomial(nvars(), exps), t.coeff);
    }
    return result;
}

template <class F>
std::optional<Polynomial<F>> Polynomial<F>::divide_exact(const Polynomial& divisor) const {
    require_same_ring(*ring_, *divisor.ring_, "divide_exact");
    if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
    const auto& K = field();
    const Element lc_inv = K.inv(divisor.lead_coeff());
    std::vector<Term> rem = terms_;
    std::vector<Term> quotient;
    while (!rem.empty()) {
        const Term& lt = rem.front();
        if (!divisor.lead_monomial().divides(lt.mono)) return std::nullopt;
        Monomial q = lt.mono / divisor.lead_monomial();
        Element c = K.mul(lt.coeff, lc_inv);
        rem = sub_scaled(rem, c, q, divisor.terms_, *ring_);
        quotient.push_back({q, c});
    }
    // Quotient terms were produced in decreasing order.
    return Polynomial(ring_, std::move(quotient));
}

template <class F>
template <class T>
std::vector<typename Polynomial<F>::Term> Polynomial<F>::sub_scaled_impl(std::span<T> p, const Element& c,
                                                                         const Monomial& m, std::span<const Term> g,
                                                                         const Ring<F>& ring) {
    auto take = [](T& t) -> Term {
        if constexpr (std::is_const_v<T>)
            return t;
        else
            return std::move(t);
    };
    const auto& K = ring.field();
    const auto& ord = ring.order();
    std::vector<Term> out;
    out.reserve(p.size() + g.size());
    std::size_t i = 0, j = 0;
    const Element nc = K.neg(c);
    Monomial shifted;
    bool have = false;
    while (i < p.size() || j < g.size()) {
        if (j < g.size() && !have) {
            shifted = g[j].mono * m;
            have = true;
        }
        if (j >= g.size()) {
            out.push_back(take(p[i++]));
            continue;
        }
        if (i >= p.size()) {
            out.push_back({shifted, K.mul(nc, g[j].coeff)});
            ++j;
            have = false;
            continue;
        }
        auto cmp = ord.compare(p[i].mono, shifted);
        if (cmp > 0) {
            out.push_back(take(p[i++]));
        } else if (cmp < 0) {
            out.push_back({shifted, K.mul(nc, g[j].coeff)});
            ++j;
            have = false;
        } else {
            Element v = K.add(p[i].coeff, K.mul(nc, g[j].coeff));
            if (!K.is_zero(v)) out.push_back({p[i].mono, std::move(v)});
            ++i;
            ++j;
            have = false;
        }
    }
    return out;
}

template <class F>
Polynomial<F> Polynomial<F>::combine(const Polynomial& b, bool subtract) const {
    require_same_ring(*ring_, *b.ring_, subtract ? "subtraction" : "addition");
    const Element c = subtract ? field().one() : field().neg(field().one());
    return Polynomial(ring_, sub_scaled(terms_, c, Monomial(nvars()), b.terms_, *ring_));
}

template <class F>
Polynomial<F> Polynomial<F>::multiply(const Polynomial& b) const {
    require_same_ring(*ring_, *b.ring_, "multiplication");
    if (is_zero() || b.is_zero()) return Polynomial(ring_);
    const Polynomial& small = size() <= b.size() ? *this : b;
    const Polynomial& large = size() <= b.size() ? b : *this;
    Polynomial acc(ring_);
    for (const auto& t : small.terms_) {
        acc.terms_ = sub_scaled(acc.terms_, field().neg(t.coeff), t.mono, large.terms_, *ring_);
    }
    return acc;
}

template <class F>
std::string Polynomial<F>::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    const auto& K = field();
    bool first = true;
    for (const auto& t : terms_) {
        std::string c = K.to_string(t.coeff);
        bool negative = !c.empty() && c[0] == '-';
        if (negative) c.erase(0, 1);
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        if (t.mono.is_one()) {
            os << c;
        } else {
            if (c != "1") os << c << '*';
            os << t.mono.to_string(ring_->names());
        }
    }
    return os.str();
}

}  // namespace segreta::kernel
