#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "ostro/precision.hpp"
#include "ostro/real.hpp"

namespace ostro {

/// Instrumented operation counts of a solve.
///
/// Only arithmetic the cost model charges for is counted: scalar component
/// evaluations, products and quotients. Additions and pivot comparisons are free.
struct OpCounters {
    std::uint64_t scalar_fn_evals = 0;
    std::uint64_t products = 0;
    std::uint64_t quotients = 0;

    friend OpCounters operator-(const OpCounters& a, const OpCounters& b) noexcept {
        return {a.scalar_fn_evals - b.scalar_fn_evals, a.products - b.products, a.quotients - b.quotients};
    }
    friend bool operator==(const OpCounters&, const OpCounters&) = default;
};

/// Dense vector of dimension m.
class Vector {
public:
    Vector() = default;
    explicit Vector(std::size_t m) : entries_(m) {}
    explicit Vector(std::vector<Real> entries) : entries_(std::move(entries)) {}
    Vector(std::initializer_list<Real> entries) : entries_(entries) {}

    std::size_t size() const noexcept { return entries_.size(); }
    Real& operator[](std::size_t i) { return entries_[i]; }
    const Real& operator[](std::size_t i) const { return entries_[i]; }

    std::span<const Real> span() const noexcept { return entries_; }
    auto begin() const noexcept { return entries_.begin(); }
    auto end() const noexcept { return entries_.end(); }

    friend Vector operator+(const Vector& a, const Vector& b);
    friend Vector operator-(const Vector& a, const Vector& b);
    friend Vector operator*(const Real& c, const Vector& v);

private:
    std::vector<Real> entries_;
};

/// Square m x m matrix, row-major.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t m) : m_(m), entries_(m * m) {}
    /// Builds from rows; throws std::invalid_argument unless square.
    Matrix(std::initializer_list<std::initializer_list<Real>> rows);

    static Matrix identity(std::size_t m);

    std::size_t size() const noexcept { return m_; }
    Real& operator()(std::size_t i, std::size_t j) { return entries_[i * m_ + j]; }
    const Real& operator()(std::size_t i, std::size_t j) const { return entries_[i * m_ + j]; }

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Real& c, const Matrix& a);
    friend Vector operator*(const Matrix& a, const Vector& x);

private:
    std::size_t m_ = 0;
    std::vector<Real> entries_;
};

/// max_i |v_i|; zero for the empty vector.
Real inf_norm(const Vector& v);

/// Induced infinity norm: maximum absolute row sum.
Real inf_norm(const Matrix& a);

/// Maximum absolute entry.
Real max_abs_entry(const Matrix& a);

/// P*A = L*U with unit-diagonal L stored below the diagonal of `lu`.
struct LUFactorization {
    Matrix lu;
    std::vector<std::size_t> pivots;  // row i of P*A is row pivots[i] of A
    bool singular = false;

    std::size_t size() const noexcept { return lu.size(); }
};

/// Gaussian elimination with partial pivoting.
///
/// Adds exactly m(m-1)(2m-1)/6 products and m(m-1)/2 quotients to `counters`
/// whatever the entries are. The result is flagged singular when a pivot falls
/// below `ctx.eps_machine()`.
LUFactorization lu_factor(const Matrix& a, OpCounters& counters, const PrecisionContext& ctx);

/// Solves A x = b from a factorization; adds m(m-1) products and m quotients.
/// Throws SingularOperator when the factorization is flagged singular.
Vector lu_solve(const LUFactorization& fact, const Vector& b, OpCounters& counters);

}  // namespace ostro
