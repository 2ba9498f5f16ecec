#include "segreta/kernel/monomial.hpp"

#include <limits>
#include <sstream>

namespace segreta::kernel {

Monomial::Monomial(int nvars, std::span<const int> exps) : nvars_(check_nvars(nvars)) {
    if (static_cast<int>(exps.size()) != nvars) throw std::invalid_argument("exponent vector length does not match nvars");
    for (int i = 0; i < nvars; ++i) set(i, exps[static_cast<std::size_t>(i)]);
    refresh();
}

Monomial Monomial::variable(int nvars, int index, int power) {
    Monomial m(nvars);
    if (index < 0 || index >= nvars) throw std::out_of_range("variable index out of range");
    m.set(index, power);
    m.refresh();
    return m;
}

void Monomial::set(int i, int e) {
    if (e < 0 || e > std::numeric_limits<Exponent>::max())
        throw std::overflow_error("monomial exponent out of range: " + std::to_string(e));
    exps_[static_cast<std::size_t>(i)] = static_cast<Exponent>(e);
}

void Monomial::refresh() {
    degree_ = 0;
    mask_ = 0;
    for (int i = 0; i < nvars_; ++i) {
        degree_ += exps_[i];
        if (exps_[i] != 0) mask_ |= (1u << i);
    }
}

Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r(a.nvars_);
    for (int i = 0; i < a.nvars_; ++i) r.exps_[i] = static_cast<Monomial::Exponent>(a.exps_[i] - b.exps_[i]);
    r.refresh();
    return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.nvars_);
    for (int i = 0; i < a.nvars_; ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    r.refresh();
    return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r(a.nvars_);
    for (int i = 0; i < a.nvars_; ++i) r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
    r.refresh();
    return r;
}

std::string Monomial::to_string(std::span<const std::string> names) const {
    if (degree_ == 0) return "1";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < nvars_; ++i) {
        if (exps_[i] == 0) continue;
        if (!first) os << '*';
        first = false;
        os << names[static_cast<std::size_t>(i)];
        if (exps_[i] > 1) os << '^' << exps_[i];
    }
    return os.str();
}

MonomialOrder::MonomialOrder(std::vector<int> weights, int block, int last)
    : weights_(std::move(weights)), block_(block), last_(last) {
    if (nvars() > kMaxVars) throw std::invalid_argument("too many variables for a monomial order");
    if (block_ < 0 || block_ > nvars()) throw std::invalid_argument("elimination block out of range");
    if (last_ != -1 && (last_ < block_ || last_ >= nvars())) throw std::invalid_argument("last variable out of range");
    if (last_ == nvars() - 1) last_ = -1;
    for (int i = 0; i < nvars(); ++i) {
        if (weights_[i] < 0 || (i >= block_ && weights_[i] == 0))
            throw std::invalid_argument("monomial order weights must be positive outside the elimination block");
    }
    plain_ = is_plain_grevlex();
}

MonomialOrder MonomialOrder::grevlex(int nvars) { return MonomialOrder(std::vector<int>(static_cast<std::size_t>(nvars), 1), 0); }

MonomialOrder MonomialOrder::weighted_grevlex(std::vector<int> weights) { return MonomialOrder(std::move(weights), 0); }

MonomialOrder MonomialOrder::weighted_grevlex(std::vector<int> weights, int last) {
    return MonomialOrder(std::move(weights), 0, last);
}

MonomialOrder MonomialOrder::elimination(std::vector<int> weights, int block) { return MonomialOrder(std::move(weights), block); }

bool MonomialOrder::is_plain_grevlex() const noexcept {
    return block_ == 0 && last_ == -1 && std::all_of(weights_.begin(), weights_.end(), [](int w) { return w == 1; });
}

std::strong_ordering MonomialOrder::compare_general(const Monomial& a, const Monomial& b) const noexcept {
    const int n = nvars();
    if (block_ > 0) {
        int da = 0, db = 0;
        for (int i = 0; i < block_; ++i) {
            da += a[i];
            db += b[i];
        }
        if (da != db) return da <=> db;
        for (int i = block_ - 1; i >= 0; --i)
            if (a[i] != b[i]) return b[i] <=> a[i];
    }
    int wa = 0, wb = 0;
    for (int i = block_; i < n; ++i) {
        wa += weights_[i] * a[i];
        wb += weights_[i] * b[i];
    }
    if (wa != wb) return wa <=> wb;
    if (last_ >= 0 && a[last_] != b[last_]) return b[last_] <=> a[last_];
    for (int i = n - 1; i >= block_; --i)
        if (i != last_ && a[i] != b[i]) return b[i] <=> a[i];
    return std::strong_ordering::equal;
}

std::string MonomialOrder::describe() const {
    if (is_plain_grevlex()) return "grevlex";
    std::ostringstream os;
    os << (block_ > 0 ? "elimination(block=" + std::to_string(block_) + ")" : "weighted-grevlex");
    if (last_ >= 0) os << "(last=" << last_ << ")";
    os << "[";
    for (int i = 0; i < nvars(); ++i) os << (i ? "," : "") << weights_[i];
    os << "]";
    return os.str();
}

}  // namespace segreta::kernel
