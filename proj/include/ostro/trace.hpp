#pragma once

#include <vector>

#include "ostro/linalg.hpp"

namespace ostro {

/// History of an iterative solve.
///
/// iterates = x_0 .. x_I, correction_norms[k-1] = ||x_k - x_{k-1}||_inf and
/// ratios[k-2] = correction_norms[k-1] / correction_norms[k-2] (k >= 2), so
/// there are I correction norms and I - 1 ratios. per_iteration[k-1] holds the
/// operations spent producing x_k.
struct IterationTrace {
    std::vector<Vector> iterates;
    std::vector<Real> correction_norms;
    std::vector<Real> ratios;
    std::vector<OpCounters> per_iteration;

    std::size_t iterations() const noexcept { return iterates.empty() ? 0 : iterates.size() - 1; }
};

}  // namespace ostro
