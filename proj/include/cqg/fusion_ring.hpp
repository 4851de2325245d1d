#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "cqg/matrix.hpp"
#include "cqg/numeric.hpp"
#include "cqg/polynomial.hpp"

namespace cqg {

using Index = std::uint32_t;

/// Decomposition of a product of irreducibles into irreducibles: sorted by
/// index, multiplicities positive.
using Decomposition = std::vector<std::pair<Index, Int>>;

/// Default size cap for operations on lazily presented rings.
inline constexpr std::size_t kDefaultCap = 64;

struct ValidationIssue {
    std::string axiom;
    std::vector<Index> where;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
};

/// Fusion ring with a distinguished irreducible basis. Two presentations
/// share one interface: a finite table of structure constants, or a lazy
/// product oracle over an infinite basis (e.g. the representation ring of
/// SU(2) through the Clebsch-Gordan rule). Immutable after construction.
class FusionRing {
   public:
    struct FiniteData {
        std::vector<std::string> labels;
        Index unit = 0;
        std::vector<Index> dual;
        // (i, j) -> decomposition of i (x) j; absent key means zero product
        std::map<std::pair<Index, Index>, Decomposition> products;
        std::optional<std::vector<Int>> dims;
    };

    using ProductOracle = std::function<Decomposition(Index, Index)>;
    using DualOracle = std::function<Index(Index)>;
    using LabelOracle = std::function<std::string(Index)>;
    using LabelParser = std::function<std::optional<Index>(const std::string&)>;
    using DimOracle = std::function<Int(Index)>;

    static std::shared_ptr<const FusionRing> finite(FiniteData data);
    static std::shared_ptr<const FusionRing> lazy(std::string name, ProductOracle product,
                                                  DualOracle dual, LabelOracle label,
                                                  LabelParser parse_label,
                                                  std::optional<DimOracle> dims);
    /// Rep SU(2): u_m (x) u_n = u_|m-n| + u_|m-n|+2 + ... + u_m+n.
    static std::shared_ptr<const FusionRing> rep_su2();

    bool finite_rank() const { return finite_.has_value(); }
    std::size_t rank() const;
    Index unit() const;
    Index dual(Index i) const;
    bool has_dims() const;
    Int dim(Index i) const;
    std::string label(Index i) const;
    std::optional<Index> index_of(const std::string& label) const;

    Decomposition product(Index i, Index j) const;
    /// Structure constant N_{ij}^k.
    Int structure_constant(Index i, Index j, Index k) const;
    /// N_{ij}^k == N_{ji}^k everywhere (finite rings only).
    bool commutative() const;

    const FiniteData& finite_data() const;
    const std::string& name() const { return name_; }

    /// Structural equality of presentations (used after document round-trips;
    /// lazy rings compare by name).
    bool operator==(const FusionRing& o) const;

   private:
    FusionRing() = default;
    std::optional<FiniteData> finite_;
    ProductOracle oracle_product_;
    DualOracle oracle_dual_;
    LabelOracle oracle_label_;
    LabelParser oracle_parse_;
    std::optional<DimOracle> oracle_dims_;
    std::string name_;

    mutable std::mutex cache_mu_;
    mutable std::map<std::pair<Index, Index>, Decomposition> cache_;
};

using RingPtr = std::shared_ptr<const FusionRing>;

/// Element of a fusion ring: integer coefficients over the irreducible basis,
/// finite support, zero coefficients never stored.
class RingElement {
   public:
    RingElement(RingPtr ring, std::map<Index, Int> coeffs);

    static RingElement zero(RingPtr ring);
    static RingElement basis(RingPtr ring, Index i);
    static RingElement unit(RingPtr ring);
    static RingElement scalar(RingPtr ring, const Int& c);

    const RingPtr& ring() const { return ring_; }
    const std::map<Index, Int>& coeffs() const { return coeff_; }
    Int coeff(Index i) const;
    bool is_zero() const { return coeff_.empty(); }
    /// Exactly one coefficient, equal to 1.
    bool is_irreducible() const;
    /// The single supported index of an irreducible element.
    Index irreducible_index() const;

    RingElement operator+(const RingElement& o) const;
    RingElement operator-(const RingElement& o) const;
    RingElement operator-() const;
    RingElement scaled(const Int& k) const;

    bool operator==(const RingElement& o) const;

    std::string to_string() const;

   private:
    RingPtr ring_;
    std::map<Index, Int> coeff_;
    void prune();
};

/// Checks every fusion-ring axiom on a finite presentation and reports each
/// violation with the witnessing index tuple.
ValidationReport validate(const RingPtr& ring);

RingElement multiply(const RingElement& x, const RingElement& y);
RingElement dual(const RingElement& x);
Int dim(const RingElement& x);
/// Horner evaluation of an integer polynomial at a ring element.
RingElement eval_poly(const IntPoly& p, const RingElement& x);

inline RingElement operator*(const RingElement& x, const RingElement& y) { return multiply(x, y); }
inline RingElement operator*(const Int& k, const RingElement& x) { return x.scaled(k); }

struct SpanResult {
    /// Sorted irreducibles supporting 1, u, u^2, ..., u^m.
    std::vector<Index> support;
    /// Coordinates of u^0 .. u^m over `support`; row m is the first power
    /// lying in the rational span of the rows above it.
    std::vector<std::vector<Int>> power_coords;
    /// Degree at which the span stabilized (= m = rank of the span).
    std::size_t stabilized_at = 0;
};

/// Iterates powers of u until the span stabilizes. Throws cap_exceeded when
/// the support outgrows `cap` (lazy rings only; finite rings ignore the cap).
SpanResult powers_span(const RingElement& u, std::size_t cap);

/// Monic integer minimal polynomial of u, from the first linear dependence
/// among its powers. Propagates cap_exceeded.
IntPoly element_min_poly(const RingElement& u, std::size_t cap = kDefaultCap);

struct Closure {
    /// Sorted set of irreducibles reachable from {unit, u} by repeatedly
    /// tensoring with u and u*.
    std::vector<Index> members;
    std::size_t sweeps = 0;
};

/// Irreducibles appearing in all tensor powers of u + u*. Requires u
/// irreducible; throws cap_exceeded when the set outgrows `cap` (lazy rings).
Closure generated_closure(const RingElement& u, std::size_t cap);

}  // namespace cqg
