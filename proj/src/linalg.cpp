#include "ostro/linalg.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

#include "ostro/errors.hpp"

namespace ostro {
namespace {

void require_same_size(std::size_t a, std::size_t b, const char* what) {
    if (a != b) throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

}  // namespace

Vector operator+(const Vector& a, const Vector& b) {
    require_same_size(a.size(), b.size(), "vector +");
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vector operator-(const Vector& a, const Vector& b) {
    require_same_size(a.size(), b.size(), "vector -");
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vector operator*(const Real& c, const Vector& v) {
    Vector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Real>> rows) : m_(rows.size()) {
    entries_.reserve(m_ * m_);
    for (const auto& row : rows) {
        require_same_size(row.size(), m_, "matrix literal");
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

Matrix Matrix::identity(std::size_t m) {
    Matrix r(m);
    for (std::size_t i = 0; i < m; ++i) r(i, i) = Real(1);
    return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    require_same_size(a.m_, b.m_, "matrix +");
    Matrix r(a.m_);
    for (std::size_t k = 0; k < a.entries_.size(); ++k) r.entries_[k] = a.entries_[k] + b.entries_[k];
    return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    require_same_size(a.m_, b.m_, "matrix -");
    Matrix r(a.m_);
    for (std::size_t k = 0; k < a.entries_.size(); ++k) r.entries_[k] = a.entries_[k] - b.entries_[k];
    return r;
}

Matrix operator*(const Real& c, const Matrix& a) {
    Matrix r(a.m_);
    for (std::size_t k = 0; k < a.entries_.size(); ++k) r.entries_[k] = c * a.entries_[k];
    return r;
}

Vector operator*(const Matrix& a, const Vector& x) {
    require_same_size(a.m_, x.size(), "matrix * vector");
    Vector r(a.m_);
    for (std::size_t i = 0; i < a.m_; ++i) {
        Real acc;
        for (std::size_t j = 0; j < a.m_; ++j) acc += a(i, j) * x[j];
        r[i] = std::move(acc);
    }
    return r;
}

Real inf_norm(const Vector& v) {
    Real best;
    for (const Real& x : v) {
        Real a = abs(x);
        if (a > best) best = std::move(a);
    }
    return best;
}

Real inf_norm(const Matrix& a) {
    Real best;
    for (std::size_t i = 0; i < a.size(); ++i) {
        Real row;
        for (std::size_t j = 0; j < a.size(); ++j) row += abs(a(i, j));
        if (row > best) best = std::move(row);
    }
    return best;
}

Real max_abs_entry(const Matrix& a) {
    Real best;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) {
            Real v = abs(a(i, j));
            if (v > best) best = std::move(v);
        }
    }
    return best;
}

LUFactorization lu_factor(const Matrix& a, OpCounters& counters, const PrecisionContext& ctx) {
    const std::size_t m = a.size();
    if (m == 0) throw std::invalid_argument("lu_factor: empty matrix");
    LUFactorization f{a, std::vector<std::size_t>(m), false};
    std::iota(f.pivots.begin(), f.pivots.end(), std::size_t{0});
    Matrix& lu = f.lu;

    for (std::size_t k = 0; k < m; ++k) {
        std::size_t p = k;
        Real best = abs(lu(k, k));
        for (std::size_t i = k + 1; i < m; ++i) {
            Real v = abs(lu(i, k));
            if (v > best) {
                best = std::move(v);
                p = i;
            }
        }
        if (p != k) {
            for (std::size_t j = 0; j < m; ++j) std::swap(lu(k, j), lu(p, j));
            std::swap(f.pivots[k], f.pivots[p]);
        }
        if (best < ctx.eps_machine()) f.singular = true;

        // The loop runs in full even when singular so the counts stay value-independent.
        for (std::size_t i = k + 1; i < m; ++i) {
            lu(i, k) = lu(i, k) / lu(k, k);
            ++counters.quotients;
            for (std::size_t j = k + 1; j < m; ++j) {
                lu(i, j) -= lu(i, k) * lu(k, j);
                ++counters.products;
            }
        }
    }
    return f;
}

Vector lu_solve(const LUFactorization& fact, const Vector& b, OpCounters& counters) {
    if (fact.singular) throw SingularOperator("lu_solve: operator is numerically singular");
    const std::size_t m = fact.size();
    require_same_size(b.size(), m, "lu_solve");
    const Matrix& lu = fact.lu;

    Vector y(m);
    for (std::size_t i = 0; i < m; ++i) {
        Real acc = b[fact.pivots[i]];
        for (std::size_t j = 0; j < i; ++j) {
            acc -= lu(i, j) * y[j];
            ++counters.products;
        }
        y[i] = std::move(acc);
    }

    Vector x(m);
    for (std::size_t ii = m; ii-- > 0;) {
        Real acc = y[ii];
        for (std::size_t j = ii + 1; j < m; ++j) {
            acc -= lu(ii, j) * x[j];
            ++counters.products;
        }
        x[ii] = acc / lu(ii, ii);
        ++counters.quotients;
    }
    return x;
}

}  // namespace ostro
