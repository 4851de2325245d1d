#pragma once

#include <cstddef>
#include <vector>

#include "cqg/numeric.hpp"
#include "cqg/polynomial.hpp"

namespace cqg {

/// Dense row-major matrix with exact integer entries.
class IntMatrix {
   public:
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols, 0) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);

    static IntMatrix identity(std::size_t n);
    /// Companion matrix of a monic polynomial.
    static IntMatrix companion(const IntPoly& monic);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Int& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    const Int& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

    bool is_zero() const;
    bool operator==(const IntMatrix& o) const = default;

    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator*(const Int& k) const;

    std::vector<Int> apply(const std::vector<Int>& v) const;

   private:
    std::size_t rows_, cols_;
    std::vector<Int> e_;
};

/// Basis of the rational kernel of M as primitive integer vectors (content 1,
/// first nonzero entry positive), produced by fraction-free Gauss-Jordan
/// elimination. Deterministic; empty iff M is injective over Q.
std::vector<std::vector<Int>> kernel_basis(const IntMatrix& m);

/// Monic minimal polynomial of a square matrix, via the first linear
/// dependence among I, M, M^2, ...
IntPoly minimal_polynomial(const IntMatrix& m);

/// p(M) with exact arithmetic.
IntMatrix eval_poly(const IntPoly& p, const IntMatrix& m);

}  // namespace cqg
