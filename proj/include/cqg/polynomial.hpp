#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cqg/numeric.hpp"

namespace cqg {

/// Univariate polynomial over Z, coefficients stored in ascending degree.
/// Canonical form: no trailing zero coefficients; the zero polynomial has an
/// empty coefficient vector.
class IntPoly {
   public:
    IntPoly() = default;
    IntPoly(std::initializer_list<Int> ascending) : coeff_(ascending) { trim(); }
    explicit IntPoly(std::vector<Int> ascending) : coeff_(std::move(ascending)) { trim(); }

    static IntPoly constant(Int c);
    static IntPoly monomial(std::size_t degree, Int c = 1);
    static IntPoly x() { return monomial(1); }

    bool is_zero() const { return coeff_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeff_.size()) - 1; }
    /// Coefficient of x^i (0 beyond the stored range).
    const Int& operator[](std::size_t i) const;
    const std::vector<Int>& coefficients() const { return coeff_; }
    const Int& leading() const;
    bool is_monic() const { return !is_zero() && leading() == 1; }

    Int eval(const Int& x) const;
    Int content() const;
    /// Content-free part with positive leading coefficient.
    IntPoly primitive_part() const;

    IntPoly operator-() const;
    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator*(const Int& c) const;

    bool operator==(const IntPoly& o) const { return coeff_ == o.coeff_; }

    /// "x^3 - x^2 - 2*x" style rendering.
    std::string to_string(const std::string& var = "x") const;

   private:
    std::vector<Int> coeff_;
    void trim();
};

/// Ordering used wherever factor lists must be deterministic: by degree,
/// then by the ascending coefficient vectors lexicographically.
bool poly_less(const IntPoly& a, const IntPoly& b);

/// Quotient of a by b when the division is exact over Z; nullopt otherwise.
std::optional<IntPoly> exact_divide(const IntPoly& a, const IntPoly& b);

struct Factorization {
    Int content;  // sign chosen so every factor has positive leading coefficient
    std::vector<std::pair<IntPoly, unsigned>> factors;  // irreducible, with multiplicity

    IntPoly expand() const;
};

/// Complete factorization into irreducibles over Q (primitive integer
/// factors). Rational-root extraction plus Kronecker interpolation; a
/// remaining hard factor of degree > 12 raises unsupported_degree instead of
/// returning an unproven "irreducible".
Factorization factor_over_integers(const IntPoly& p);

/// q with p = (x - c) * q; raises not_a_root when p(c) != 0.
IntPoly synthetic_divide(const IntPoly& p, const Int& c);

}  // namespace cqg
