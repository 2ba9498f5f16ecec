#include "segreta/chow/chow_class.hpp"

#include <algorithm>

namespace segreta::chow {

namespace series {

Integer add(Integer a, Integer b) {
    Integer r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("class coefficient overflow");
    return r;
}

Integer mul(Integer a, Integer b) {
    Integer r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("class coefficient overflow");
    return r;
}

Integer pow(Integer a, int e) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    Integer r = 1;
    for (int i = 0; i < e; ++i) r = mul(r, a);
    return r;
}

// Generalized binomial n(n-1)...(n-k+1)/k!, valid for negative n.
Integer binomial(Integer n, Integer k) {
    if (k < 0) return 0;
    __int128 c = 1;
    for (Integer j = 1; j <= k; ++j) {
        c = c * (n - j + 1) / j;
        if (c > INT64_MAX || c < INT64_MIN) throw std::overflow_error("binomial coefficient overflow");
        if (c == 0) break;
    }
    return static_cast<Integer>(c);
}

Series binomial_series(Integer a, Integer e, std::size_t len) {
    Series out(len, 0);
    Integer apow = 1;
    for (std::size_t j = 0; j < len; ++j) {
        Integer c = binomial(e, static_cast<Integer>(j));
        out[j] = c == 0 ? 0 : mul(c, apow);
        if (j + 1 < len && a != 0) apow = mul(apow, a);
        if (a == 0) apow = 0;
    }
    return out;
}

Series multiply(const Series& a, const Series& b, std::size_t len) {
    Series out(len, 0);
    for (std::size_t i = 0; i < a.size() && i < len; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size() && i + j < len; ++j) out[i + j] = add(out[i + j], mul(a[i], b[j]));
    }
    return out;
}

Series inverse(const Series& a, std::size_t len) {
    if (a.empty() || a[0] != 1) throw std::invalid_argument("series inverse needs constant term 1");
    Series out(len, 0);
    if (len) out[0] = 1;
    for (std::size_t k = 1; k < len; ++k) {
        Integer s = 0;
        for (std::size_t j = 1; j <= k && j < a.size(); ++j) s = add(s, mul(a[j], out[k - j]));
        out[k] = -s;
    }
    return out;
}

}  // namespace series

ChowClass::ChowClass(int n) {
    if (n < 0) throw std::invalid_argument("ChowClass: negative ambient dimension");
    coeffs_.assign(static_cast<std::size_t>(n) + 1, 0);
}

ChowClass::ChowClass(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("ChowClass: empty coefficient vector");
}

bool ChowClass::is_zero() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](Integer a) { return a == 0; });
}

std::string ChowClass::to_string() const {
    std::string s;
    const int n = ambient_dim();
    for (int i = 0; i <= n; ++i) {
        Integer a = coeffs_[static_cast<std::size_t>(i)];
        if (a == 0) continue;
        std::string mag = std::to_string(a);
        if (a < 0) mag.erase(0, 1);
        if (s.empty())
            s += a < 0 ? "-" : "";
        else
            s += a < 0 ? " - " : " + ";
        if (mag != "1") s += mag;
        s += "[P^" + std::to_string(n - i) + "]";
    }
    return s.empty() ? "0" : s;
}

namespace {

void require_same_dim(const ChowClass& a, const ChowClass& b, const char* what) {
    if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument(std::string(what) + ": ambient dimensions differ");
}

Integer require_negative_twist(const TwistedSegreClass& s, const char* what) {
    if (s.twist >= 0) throw TwistMismatch(std::string(what) + ": expected a class at twist -d with d >= 1");
    if (s.degree && *s.degree != -s.twist) throw TwistMismatch(std::string(what) + ": twist does not match the defining degree");
    return -s.twist;
}

}  // namespace

ChowClass operator+(const ChowClass& a, const ChowClass& b) {
    require_same_dim(a, b, "class sum");
    std::vector<Integer> c(a.coeffs());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = series::add(c[i], b.coeffs()[i]);
    return ChowClass(std::move(c));
}

ChowClass operator-(const ChowClass& a, const ChowClass& b) {
    require_same_dim(a, b, "class difference");
    std::vector<Integer> c(a.coeffs());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = series::add(c[i], series::mul(-1, b.coeffs()[i]));
    return ChowClass(std::move(c));
}

ChowClass tensor_twist(const ChowClass& c, Integer m) {
    const int n = c.ambient_dim();
    if (m == 0) return c;
    std::vector<Integer> out(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i <= n; ++i) {
        Integer a = c[i];
        if (a == 0) continue;
        auto f = series::binomial_series(m, -(i + 1), static_cast<std::size_t>(n - i + 1));
        for (int j = 0; i + j <= n; ++j)
            out[static_cast<std::size_t>(i + j)] = series::add(out[static_cast<std::size_t>(i + j)], series::mul(a, f[static_cast<std::size_t>(j)]));
    }
    return ChowClass(std::move(out));
}

TwistedSegreClass compose_twists(const TwistedSegreClass& s, Integer m2) {
    return {tensor_twist(s.cls, m2), series::add(s.twist, m2), s.degree};
}

TwistedSegreClass from_ordinary(const ChowClass& s, Integer m) { return {tensor_twist(s, m), m, std::nullopt}; }

ChowClass to_ordinary(const TwistedSegreClass& s) { return tensor_twist(s.cls, -s.twist); }

ChowClass hyperplane_cut(const ChowClass& c) {
    if (c.ambient_dim() == 0) throw std::invalid_argument("hyperplane_cut: class lives in P^0");
    auto v = c.coeffs();
    v.pop_back();
    return ChowClass(std::move(v));
}

ChowClass dual_class(const ChowClass& c) {
    auto v = c.coeffs();
    for (std::size_t i = 1; i < v.size(); i += 2) v[i] = series::mul(-1, v[i]);
    return ChowClass(std::move(v));
}

ChowClass fulton_class(const ChowClass& S) {
    const auto len = S.coeffs().size();
    auto tangent = series::binomial_series(1, static_cast<Integer>(len), len);
    return ChowClass(series::multiply(tangent, S.coeffs(), len));
}

TwistedSegreClass residual_combine(const TwistedSegreClass& sD, const TwistedSegreClass& sR, Integer deg_D) {
    if (sR.twist != series::add(sD.twist, deg_D))
        throw TwistMismatch("residual_combine: residual class must be at twist " + std::to_string(sD.twist + deg_D));
    return {sD.cls + sR.cls, sD.twist, sD.degree};
}

Integer excess_contribution(const TwistedSegreClass& s, int c) {
    require_negative_twist(s, "excess_contribution");
    if (c < 0 || c > s.cls.ambient_dim()) throw std::out_of_range("excess_contribution: codimension out of range");
    return s.cls[c];
}

std::vector<Integer> predicted_counts(const TwistedSegreClass& s, Integer d) {
    if (s.twist != -d) throw TwistMismatch("predicted_counts: class is not at twist -d");
    std::vector<Integer> N;
    Integer dk = 1;
    for (int k = 0; k <= s.cls.ambient_dim(); ++k) {
        N.push_back(series::add(dk, -s.cls[k]));
        if (k < s.cls.ambient_dim()) dk = series::mul(dk, d);
    }
    return N;
}

EffectivityReport effectivity_check(const TwistedSegreClass& s) {
    EffectivityReport r;
    for (int i = 0; i <= s.cls.ambient_dim(); ++i)
        if (s.cls[i] < 0) r.offending.push_back(i);
    r.effective = r.offending.empty();
    return r;
}

bool is_log_concave(const std::vector<Integer>& seq) {
    for (Integer v : seq)
        if (v < 0) return false;
    for (std::size_t k = 1; k + 1 < seq.size(); ++k) {
        __int128 lhs = static_cast<__int128>(seq[k]) * seq[k];
        __int128 rhs = static_cast<__int128>(seq[k - 1]) * seq[k + 1];
        if (lhs < rhs) return false;
    }
    auto first = std::find_if(seq.begin(), seq.end(), [](Integer v) { return v != 0; });
    auto last = std::find_if(seq.rbegin(), seq.rend(), [](Integer v) { return v != 0; });
    if (first == seq.end()) return true;
    return std::find(first, last.base(), 0) == last.base();
}

bool huh_logconcavity_check(const TwistedSegreClass& s, Integer d) { return is_log_concave(predicted_counts(s, d)); }

TwistedSegreClass join_class(const TwistedSegreClass& s, int m) {
    const Integer d = require_negative_twist(s, "join_class");
    if (m < 0) throw std::invalid_argument("join_class: m must be nonnegative");
    const int n = s.cls.ambient_dim();
    std::vector<Integer> out = s.cls.coeffs();
    Integer v = series::pow(d, n + 1);
    for (int j = 0; j <= m; ++j) {
        out.push_back(v);
        if (j < m) v = series::mul(v, d);
    }
    return {ChowClass(std::move(out)), s.twist, s.degree};
}

}  // namespace segreta::chow
