#include "cqg/matrix.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

#include "cqg/errors.hpp"

namespace cqg {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != rows_ * cols_)
        throw std::invalid_argument("IntMatrix: entry count does not match rows*cols");
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::companion(const IntPoly& monic) {
    if (!monic.is_monic()) throw std::invalid_argument("companion: polynomial must be monic");
    std::size_t n = static_cast<std::size_t>(monic.degree());
    IntMatrix m(n, n);
    for (std::size_t i = 1; i < n; ++i) m.at(i, i - 1) = 1;
    for (std::size_t i = 0; i < n; ++i) m.at(i, n - 1) = -monic[i];
    return m;
}

bool IntMatrix::is_zero() const {
    for (const Int& v : e_)
        if (v != 0) return false;
    return true;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("IntMatrix: shape mismatch in product");
    IntMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("IntMatrix: shape mismatch in sum");
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

IntMatrix IntMatrix::operator*(const Int& k) const {
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * k;
    return r;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("IntMatrix: vector length mismatch");
    std::vector<Int> r(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
    return r;
}

namespace {

Int exact_div(const Int& a, const Int& b) {
    assert(b != 0 && a % b == 0);
    return a / b;
}

}  // namespace

std::vector<std::vector<Int>> kernel_basis(const IntMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<Int>> a(rows, std::vector<Int>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = m.at(i, j);

    // Montante fraction-free Gauss-Jordan; afterwards every pivot entry holds
    // the same value d and kernel vectors read off the free columns directly.
    Int prev = 1;
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
    std::vector<bool> is_pivot_col(cols, false);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[r], a[p]);
        const std::vector<Int> pivot_row = a[r];
        const Int pivot = pivot_row[c];
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            const Int f = a[i][c];
            for (std::size_t j = 0; j < cols; ++j)
                a[i][j] = exact_div(pivot * a[i][j] - f * pivot_row[j], prev);
        }
        prev = pivot;
        pivots.emplace_back(r, c);
        is_pivot_col[c] = true;
        ++r;
    }

    std::vector<std::vector<Int>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot_col[f]) continue;
        std::vector<Int> v(cols, 0);
        v[f] = prev;
        for (const auto& [pr, pc] : pivots) v[pc] = -a[pr][f];
        make_primitive(v);
        basis.push_back(std::move(v));
    }
    return basis;
}

IntPoly minimal_polynomial(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw non_square_matrix("minimal_polynomial: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return IntPoly({1});  // empty algebra: 1 = 0

    std::vector<IntMatrix> powers;
    powers.push_back(IntMatrix::identity(n));
    for (std::size_t k = 1; k <= n; ++k) {
        powers.push_back(powers.back() * m);
        IntMatrix stacked(n * n, k + 1);
        for (std::size_t j = 0; j <= k; ++j)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t l = 0; l < n; ++l)
                    stacked.at(i * n + l, j) = powers[j].at(i, l);
        auto ker = kernel_basis(stacked);
        if (ker.empty()) continue;
        std::vector<Int> c = ker.front();
        if (c.back() < 0)
            for (Int& v : c) v = -v;
        if (c.back() != 1)
            throw data_corruption("minimal_polynomial: dependence is not monic");
        return IntPoly(std::move(c));
    }
    throw data_corruption("minimal_polynomial: no dependence up to the matrix size");
}

IntMatrix eval_poly(const IntPoly& p, const IntMatrix& m) {
    if (m.rows() != m.cols()) throw non_square_matrix("eval_poly: matrix not square");
    const std::size_t n = m.rows();
    IntMatrix acc(n, n);
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * m;
        const Int& c = p[static_cast<std::size_t>(i)];
        if (c != 0)
            for (std::size_t d = 0; d < n; ++d) acc.at(d, d) += c;
    }
    return acc;
}

}  // namespace cqg
