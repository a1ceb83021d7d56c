#include "ostro/system.hpp"

#include <stdexcept>

namespace ostro {

NonlinearSystem::NonlinearSystem(std::string name, std::size_t m, ComponentFn component)
    : name_(std::move(name)), m_(m), component_(std::move(component)) {
    if (m_ == 0) throw std::invalid_argument("system dimension must be at least 1");
    if (!component_) throw std::invalid_argument("system component function is empty");
}

Real NonlinearSystem::eval_component(std::size_t i, const Vector& x, OpCounters& counters) const {
    if (x.size() != m_) throw std::invalid_argument(name_ + ": point has wrong dimension");
    ++counters.scalar_fn_evals;
    return component_(i, x.span());
}

Vector NonlinearSystem::eval(const Vector& x, OpCounters& counters) const {
    Vector out(m_);
    for (std::size_t i = 0; i < m_; ++i) out[i] = eval_component(i, x, counters);
    return out;
}

}  // namespace ostro
