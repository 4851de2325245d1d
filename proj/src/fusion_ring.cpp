#include "cqg/fusion_ring.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cqg/errors.hpp"

namespace cqg {

std::shared_ptr<const FusionRing> FusionRing::finite(FiniteData data) {
    const std::size_t rank = data.labels.size();
    if (rank == 0) throw std::invalid_argument("fusion ring needs at least one basis label");
    if (data.unit >= rank) throw std::invalid_argument("unit index out of range");
    if (data.dual.size() != rank) throw std::invalid_argument("dual permutation has wrong length");
    for (Index d : data.dual)
        if (d >= rank) throw std::invalid_argument("dual index out of range");
    if (data.dims && data.dims->size() != rank)
        throw std::invalid_argument("dims vector has wrong length");
    {
        std::set<std::string> seen;
        for (const auto& l : data.labels)
            if (!seen.insert(l).second) throw std::invalid_argument("duplicate label: " + l);
    }
    for (const auto& [key, dec] : data.products) {
        if (key.first >= rank || key.second >= rank)
            throw std::invalid_argument("product key out of range");
        Index last = 0;
        bool first = true;
        for (const auto& [k, n] : dec) {
            if (k >= rank) throw std::invalid_argument("product target out of range");
            if (n <= 0) throw std::invalid_argument("structure constants must be positive");
            if (!first && k <= last) throw std::invalid_argument("decomposition not sorted");
            last = k;
            first = false;
        }
    }
    auto ring = std::shared_ptr<FusionRing>(new FusionRing());
    ring->finite_ = std::move(data);
    return ring;
}

std::shared_ptr<const FusionRing> FusionRing::lazy(std::string name, ProductOracle product,
                                                   DualOracle dual, LabelOracle label,
                                                   LabelParser parse_label,
                                                   std::optional<DimOracle> dims) {
    auto ring = std::shared_ptr<FusionRing>(new FusionRing());
    ring->name_ = std::move(name);
    ring->oracle_product_ = std::move(product);
    ring->oracle_dual_ = std::move(dual);
    ring->oracle_label_ = std::move(label);
    ring->oracle_parse_ = std::move(parse_label);
    ring->oracle_dims_ = std::move(dims);
    return ring;
}

std::shared_ptr<const FusionRing> FusionRing::rep_su2() {
    return lazy(
        "su2",
        [](Index m, Index n) {
            Decomposition dec;
            Index lo = m > n ? m - n : n - m;
            for (Index k = lo; k <= m + n; k += 2) dec.emplace_back(k, 1);
            return dec;
        },
        [](Index m) { return m; }, [](Index m) { return "u" + std::to_string(m); },
        [](const std::string& s) -> std::optional<Index> {
            if (s.size() < 2 || s[0] != 'u') return std::nullopt;
            Index v = 0;
            for (std::size_t i = 1; i < s.size(); ++i) {
                if (s[i] < '0' || s[i] > '9') return std::nullopt;
                v = v * 10 + static_cast<Index>(s[i] - '0');
            }
            return v;
        },
        DimOracle([](Index m) { return Int(m) + 1; }));
}

std::size_t FusionRing::rank() const {
    if (!finite_) throw std::logic_error("rank() on a lazily presented ring");
    return finite_->labels.size();
}

Index FusionRing::unit() const { return finite_ ? finite_->unit : 0; }

Index FusionRing::dual(Index i) const {
    if (finite_) {
        if (i >= rank()) throw std::out_of_range("dual: index out of range");
        return finite_->dual[i];
    }
    return oracle_dual_(i);
}

bool FusionRing::has_dims() const {
    return finite_ ? finite_->dims.has_value() : oracle_dims_.has_value();
}

Int FusionRing::dim(Index i) const {
    if (!has_dims()) throw no_dimension_function("ring has no dimension function");
    if (finite_) {
        if (i >= rank()) throw std::out_of_range("dim: index out of range");
        return (*finite_->dims)[i];
    }
    return (*oracle_dims_)(i);
}

std::string FusionRing::label(Index i) const {
    if (finite_) {
        if (i >= rank()) throw std::out_of_range("label: index out of range");
        return finite_->labels[i];
    }
    return oracle_label_(i);
}

std::optional<Index> FusionRing::index_of(const std::string& label) const {
    if (finite_) {
        for (Index i = 0; i < rank(); ++i)
            if (finite_->labels[i] == label) return i;
        return std::nullopt;
    }
    return oracle_parse_ ? oracle_parse_(label) : std::nullopt;
}

Decomposition FusionRing::product(Index i, Index j) const {
    if (finite_) {
        if (i >= rank() || j >= rank()) throw std::out_of_range("product: index out of range");
        auto it = finite_->products.find({i, j});
        return it == finite_->products.end() ? Decomposition{} : it->second;
    }
    {
        std::lock_guard lock(cache_mu_);
        auto it = cache_.find({i, j});
        if (it != cache_.end()) return it->second;
    }
    Decomposition dec = oracle_product_(i, j);
    std::lock_guard lock(cache_mu_);
    return cache_.emplace(std::make_pair(i, j), std::move(dec)).first->second;
}

Int FusionRing::structure_constant(Index i, Index j, Index k) const {
    for (const auto& [t, n] : product(i, j))
        if (t == k) return n;
    return 0;
}

bool FusionRing::commutative() const {
    if (!finite_) throw std::logic_error("commutative() on a lazily presented ring");
    const std::size_t n = rank();
    for (Index i = 0; i < n; ++i)
        for (Index j = static_cast<Index>(i) + 1; j < n; ++j)
            if (product(i, j) != product(j, i)) return false;
    return true;
}

const FusionRing::FiniteData& FusionRing::finite_data() const {
    if (!finite_) throw std::logic_error("finite_data() on a lazily presented ring");
    return *finite_;
}

bool FusionRing::operator==(const FusionRing& o) const {
    if (finite_.has_value() != o.finite_.has_value()) return false;
    if (!finite_) return name_ == o.name_;
    const FiniteData& a = *finite_;
    const FiniteData& b = *o.finite_;
    return a.labels == b.labels && a.unit == b.unit && a.dual == b.dual &&
           a.products == b.products && a.dims == b.dims;
}

// ---------------------------------------------------------------------------
// RingElement

RingElement::RingElement(RingPtr ring, std::map<Index, Int> coeffs)
    : ring_(std::move(ring)), coeff_(std::move(coeffs)) {
    if (!ring_) throw std::invalid_argument("RingElement: null ring");
    prune();
}

void RingElement::prune() {
    for (auto it = coeff_.begin(); it != coeff_.end();)
        it = (it->second == 0) ? coeff_.erase(it) : std::next(it);
}

RingElement RingElement::zero(RingPtr ring) { return RingElement(std::move(ring), {}); }

RingElement RingElement::basis(RingPtr ring, Index i) {
    if (ring->finite_rank() && i >= ring->rank())
        throw std::out_of_range("basis: index out of range");
    return RingElement(std::move(ring), {{i, 1}});
}

RingElement RingElement::unit(RingPtr ring) {
    Index u = ring->unit();
    return basis(std::move(ring), u);
}

RingElement RingElement::scalar(RingPtr ring, const Int& c) {
    Index u = ring->unit();
    return RingElement(std::move(ring), {{u, c}});
}

Int RingElement::coeff(Index i) const {
    auto it = coeff_.find(i);
    return it == coeff_.end() ? Int(0) : it->second;
}

bool RingElement::is_irreducible() const {
    return coeff_.size() == 1 && coeff_.begin()->second == 1;
}

Index RingElement::irreducible_index() const {
    if (!is_irreducible()) throw not_irreducible("element is not a single irreducible");
    return coeff_.begin()->first;
}

namespace {

void check_same_ring(const RingElement& x, const RingElement& y) {
    if (x.ring() == y.ring()) return;
    if (*x.ring() == *y.ring()) return;
    throw ring_mismatch("elements live in different fusion rings");
}

}  // namespace

RingElement RingElement::operator+(const RingElement& o) const {
    check_same_ring(*this, o);
    std::map<Index, Int> c = coeff_;
    for (const auto& [i, v] : o.coeff_) c[i] += v;
    return RingElement(ring_, std::move(c));
}

RingElement RingElement::operator-(const RingElement& o) const { return *this + (-o); }

RingElement RingElement::operator-() const {
    std::map<Index, Int> c = coeff_;
    for (auto& [i, v] : c) v = -v;
    return RingElement(ring_, std::move(c));
}

RingElement RingElement::scaled(const Int& k) const {
    std::map<Index, Int> c = coeff_;
    for (auto& [i, v] : c) v *= k;
    return RingElement(ring_, std::move(c));
}

bool RingElement::operator==(const RingElement& o) const {
    if (ring_ != o.ring_ && !(*ring_ == *o.ring_)) return false;
    return coeff_ == o.coeff_;
}

std::string RingElement::to_string() const {
    if (coeff_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, v] : coeff_) {
        Int a = abs(v);
        if (first) {
            if (v < 0) os << "-";
            first = false;
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        if (a != 1) os << a.str() << "*";
        os << ring_->label(i);
    }
    return os.str();
}

RingElement multiply(const RingElement& x, const RingElement& y) {
    check_same_ring(x, y);
    std::map<Index, Int> acc;
    for (const auto& [i, a] : x.coeffs())
        for (const auto& [j, b] : y.coeffs()) {
            Int ab = a * b;
            for (const auto& [k, n] : x.ring()->product(i, j)) acc[k] += ab * n;
        }
    return RingElement(x.ring(), std::move(acc));
}

RingElement dual(const RingElement& x) {
    std::map<Index, Int> c;
    for (const auto& [i, v] : x.coeffs()) c[x.ring()->dual(i)] += v;
    return RingElement(x.ring(), std::move(c));
}

Int dim(const RingElement& x) {
    if (!x.ring()->has_dims()) throw no_dimension_function("ring has no dimension function");
    Int d = 0;
    for (const auto& [i, v] : x.coeffs()) d += v * x.ring()->dim(i);
    return d;
}

RingElement eval_poly(const IntPoly& p, const RingElement& x) {
    RingElement acc = RingElement::zero(x.ring());
    for (int i = p.degree(); i >= 0; --i) {
        acc = multiply(acc, x);
        const Int& c = p[static_cast<std::size_t>(i)];
        if (c != 0) acc = acc + RingElement::scalar(x.ring(), c);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// validate

namespace {

void report(ValidationReport& rep, std::string axiom, std::vector<Index> where,
            std::string detail) {
    rep.issues.push_back({std::move(axiom), std::move(where), std::move(detail)});
}

}  // namespace

ValidationReport validate(const RingPtr& ring) {
    if (!ring->finite_rank())
        throw std::invalid_argument("validate: only finite presentations can be checked");
    ValidationReport rep;
    const std::size_t n = ring->rank();
    const Index e = ring->unit();

    for (Index i = 0; i < n; ++i) {
        Index d = ring->dual(i);
        if (ring->dual(d) != i)
            report(rep, "dual-involution", {i}, "dual(dual(i)) != i");
    }
    if (ring->dual(e) != e) report(rep, "dual-unit", {e}, "unit* != unit");

    for (Index j = 0; j < n; ++j)
        for (Index k = 0; k < n; ++k) {
            Int expect = (j == k) ? 1 : 0;
            if (ring->structure_constant(e, j, k) != expect)
                report(rep, "unit-left", {e, j, k}, "N_{e,j}^k != delta_{jk}");
            if (ring->structure_constant(j, e, k) != expect)
                report(rep, "unit-right", {j, e, k}, "N_{j,e}^k != delta_{jk}");
        }

    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) {
            Int expect = (j == ring->dual(i)) ? 1 : 0;
            if (ring->structure_constant(i, j, e) != expect)
                report(rep, "duality-unit-multiplicity", {i, j, e}, "N_{ij}^e != delta_{j,i*}");
        }

    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            for (Index k = 0; k < n; ++k) {
                Int nijk = ring->structure_constant(i, j, k);
                if (ring->structure_constant(ring->dual(j), ring->dual(i), ring->dual(k)) != nijk)
                    report(rep, "duality-reverse", {i, j, k}, "N_{ij}^k != N_{j*i*}^{k*}");
                if (ring->structure_constant(ring->dual(i), k, j) != nijk)
                    report(rep, "frobenius-left", {i, j, k}, "N_{ij}^k != N_{i*k}^j");
                if (ring->structure_constant(k, ring->dual(j), i) != nijk)
                    report(rep, "frobenius-right", {i, j, k}, "N_{ij}^k != N_{k j*}^i");
            }

    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            for (Index k = 0; k < n; ++k) {
                // ((e_i e_j) e_k)_l vs (e_i (e_j e_k))_l
                std::map<Index, Int> lhs, rhs;
                for (const auto& [m, a] : ring->product(i, j))
                    for (const auto& [l, b] : ring->product(m, k)) lhs[l] += a * b;
                for (const auto& [m, a] : ring->product(j, k))
                    for (const auto& [l, b] : ring->product(i, m)) rhs[l] += a * b;
                if (lhs == rhs) continue;
                Index l = 0;
                for (Index cand = 0; cand < n; ++cand) {
                    Int lv = lhs.count(cand) ? lhs[cand] : 0;
                    Int rv = rhs.count(cand) ? rhs[cand] : 0;
                    if (lv != rv) {
                        l = cand;
                        break;
                    }
                }
                report(rep, "associativity", {i, j, k, l},
                       "sum_m N_{ij}^m N_{mk}^l != sum_m N_{jk}^m N_{im}^l");
            }

    if (ring->has_dims()) {
        if (ring->dim(e) != 1) report(rep, "dim-unit", {e}, "d_unit != 1");
        for (Index i = 0; i < n; ++i) {
            if (ring->dim(i) <= 0) report(rep, "dim-positive", {i}, "d_i <= 0");
            if (ring->dim(ring->dual(i)) != ring->dim(i))
                report(rep, "dim-dual", {i}, "d_{i*} != d_i");
        }
        for (Index i = 0; i < n; ++i)
            for (Index j = 0; j < n; ++j) {
                Int sum = 0;
                for (const auto& [k, c] : ring->product(i, j)) sum += c * ring->dim(k);
                if (sum != ring->dim(i) * ring->dim(j))
                    report(rep, "dim-homomorphism", {i, j},
                           "sum_k N_{ij}^k d_k != d_i d_j");
            }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// powers and closures

SpanResult powers_span(const RingElement& u, std::size_t cap) {
    if (cap < 1) throw std::invalid_argument("powers_span: cap must be >= 1");
    const RingPtr& ring = u.ring();
    const bool lazy = !ring->finite_rank();

    std::vector<RingElement> powers{RingElement::unit(ring)};
    std::set<Index> support{ring->unit()};

    for (std::size_t step = 1;; ++step) {
        powers.push_back(multiply(powers.back(), u));
        for (const auto& [i, v] : powers.back().coeffs()) support.insert(i);
        if (lazy && support.size() > cap)
            throw cap_exceeded(step, support.size(),
                               "powers_span: support exceeded cap of " + std::to_string(cap));

        std::vector<Index> sup(support.begin(), support.end());
        IntMatrix stacked(sup.size(), powers.size());
        for (std::size_t j = 0; j < powers.size(); ++j)
            for (std::size_t s = 0; s < sup.size(); ++s)
                stacked.at(s, j) = powers[j].coeff(sup[s]);
        if (!kernel_basis(stacked).empty()) {
            SpanResult res;
            res.support = std::move(sup);
            res.stabilized_at = powers.size() - 1;
            res.power_coords.resize(powers.size());
            for (std::size_t j = 0; j < powers.size(); ++j) {
                res.power_coords[j].resize(res.support.size());
                for (std::size_t s = 0; s < res.support.size(); ++s)
                    res.power_coords[j][s] = powers[j].coeff(res.support[s]);
            }
            return res;
        }
        if (!lazy && powers.size() > ring->rank() + 1)
            throw data_corruption("powers_span: no dependence within the ring rank");
    }
}

IntPoly element_min_poly(const RingElement& u, std::size_t cap) {
    SpanResult span = powers_span(u, cap);
    IntMatrix stacked(span.support.size(), span.power_coords.size());
    for (std::size_t j = 0; j < span.power_coords.size(); ++j)
        for (std::size_t s = 0; s < span.support.size(); ++s)
            stacked.at(s, j) = span.power_coords[j][s];
    auto ker = kernel_basis(stacked);
    if (ker.size() != 1)
        throw data_corruption("element_min_poly: dependence space is not one-dimensional");
    std::vector<Int> c = ker.front();
    if (c.back() < 0)
        for (Int& v : c) v = -v;
    if (c.back() != 1) throw data_corruption("element_min_poly: dependence is not monic");
    return IntPoly(std::move(c));
}

Closure generated_closure(const RingElement& u, std::size_t cap) {
    if (cap < 1) throw std::invalid_argument("generated_closure: cap must be >= 1");
    const RingPtr& ring = u.ring();
    const bool lazy = !ring->finite_rank();
    const Index iu = u.irreducible_index();
    const Index idual = ring->dual(iu);

    std::set<Index> members{ring->unit(), iu};
    std::deque<Index> frontier(members.begin(), members.end());
    std::size_t sweeps = 0;
    while (!frontier.empty()) {
        ++sweeps;
        std::deque<Index> next;
        for (Index i : frontier) {
            for (Index w : {iu, idual}) {
                for (const auto& [k, n] : ring->product(i, w)) {
                    if (members.insert(k).second) next.push_back(k);
                }
            }
            if (lazy && members.size() > cap)
                throw cap_exceeded(sweeps, members.size(),
                                   "generated_closure: set exceeded cap of " +
                                       std::to_string(cap));
        }
        frontier = std::move(next);
    }
    Closure c;
    c.members.assign(members.begin(), members.end());
    c.sweeps = sweeps;
    return c;
}

}  // namespace cqg
