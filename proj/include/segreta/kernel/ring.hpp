#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "segreta/kernel/field.hpp"
#include "segreta/kernel/monomial.hpp"

namespace segreta::kernel {

/// Raised when two kernel values from different rings are combined.
class RingMismatch : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Polynomial ring k[x_0..x_{n-1}] together with its active monomial order.
template <class F>
class Ring {
   public:
    Ring(F field, std::vector<std::string> names, MonomialOrder order)
        : field_(std::move(field)), names_(std::move(names)), order_(std::move(order)) {
        if (static_cast<int>(names_.size()) != order_.nvars())
            throw std::invalid_argument("ring: variable names and monomial order disagree on nvars");
    }

    static std::shared_ptr<const Ring> create(F field, std::vector<std::string> names, MonomialOrder order) {
        return std::make_shared<const Ring>(std::move(field), std::move(names), std::move(order));
    }
    /// Ring with variables x0..x{n-1} under grevlex.
    static std::shared_ptr<const Ring> standard(F field, int nvars) {
        return create(std::move(field), default_names(nvars), MonomialOrder::grevlex(nvars));
    }
    static std::vector<std::string> default_names(int nvars) {
        std::vector<std::string> names;
        for (int i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i));
        return names;
    }

    const F& field() const noexcept { return field_; }
    int nvars() const noexcept { return order_.nvars(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const MonomialOrder& order() const noexcept { return order_; }

    /// Same ring with a different order (names and field kept).
    std::shared_ptr<const Ring> with_order(MonomialOrder order) const { return create(field_, names_, std::move(order)); }

    /// Structural equality: field, arity and order.  Variable names are labels only.
    bool compatible(const Ring& other) const noexcept {
        return this == &other || (field_ == other.field_ && order_ == other.order_);
    }

   private:
    F field_;
    std::vector<std::string> names_;
    MonomialOrder order_;
};

template <class F>
using RingPtr = std::shared_ptr<const Ring<F>>;

template <class F>
void require_same_ring(const Ring<F>& a, const Ring<F>& b, const char* what) {
    if (!a.compatible(b)) throw RingMismatch(std::string(what) + ": operands live in different rings");
}

}  // namespace segreta::kernel
