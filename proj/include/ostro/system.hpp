#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>

#include "ostro/linalg.hpp"

namespace ostro {

/// Scalar component F_i evaluated at a point of dimension m. Must be a pure function of its inputs.
using ComponentFn = std::function<Real(std::size_t i, std::span<const Real> x)>;

/// A vector function F: R^m -> R^m evaluated one scalar component at a time.
///
/// Every component evaluation is charged to the caller's OpCounters, which is
/// what makes the per-iteration evaluation counts observable.
class NonlinearSystem {
public:
    NonlinearSystem(std::string name, std::size_t m, ComponentFn component);

    const std::string& name() const noexcept { return name_; }
    std::size_t dimension() const noexcept { return m_; }

    Real eval_component(std::size_t i, const Vector& x, OpCounters& counters) const;
    Vector eval(const Vector& x, OpCounters& counters) const;

    const std::optional<Vector>& reference_root() const noexcept { return reference_root_; }
    void set_reference_root(Vector root) { reference_root_ = std::move(root); }

    /// Products per scalar evaluation, when known.
    const std::optional<double>& mu_hint() const noexcept { return mu_hint_; }
    void set_mu_hint(double mu) { mu_hint_ = mu; }

private:
    std::string name_;
    std::size_t m_;
    ComponentFn component_;
    std::optional<Vector> reference_root_;
    std::optional<double> mu_hint_;
};

}  // namespace ostro
