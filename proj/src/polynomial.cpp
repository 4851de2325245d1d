#include "cqg/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "cqg/errors.hpp"

namespace cqg {

namespace {

const Int kZero = 0;

}  // namespace

void IntPoly::trim() {
    while (!coeff_.empty() && coeff_.back() == 0) coeff_.pop_back();
}

IntPoly IntPoly::constant(Int c) {
    IntPoly p;
    if (c != 0) p.coeff_.push_back(std::move(c));
    return p;
}

IntPoly IntPoly::monomial(std::size_t degree, Int c) {
    IntPoly p;
    if (c != 0) {
        p.coeff_.assign(degree + 1, 0);
        p.coeff_.back() = std::move(c);
    }
    return p;
}

const Int& IntPoly::operator[](std::size_t i) const {
    return i < coeff_.size() ? coeff_[i] : kZero;
}

const Int& IntPoly::leading() const {
    if (is_zero()) throw zero_polynomial("leading coefficient of zero polynomial");
    return coeff_.back();
}

Int IntPoly::eval(const Int& x) const {
    Int r = 0;
    for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it) r = r * x + *it;
    return r;
}

Int IntPoly::content() const { return content_of(coeff_); }

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return {};
    Int g = content();
    if (leading() < 0) g = -g;
    std::vector<Int> c = coeff_;
    for (Int& v : c) v /= g;
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-() const {
    std::vector<Int> c = coeff_;
    for (Int& v : c) v = -v;
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Int> c(std::max(coeff_.size(), o.coeff_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = (*this)[i] + o[i];
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<Int> c(std::max(coeff_.size(), o.coeff_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = (*this)[i] - o[i];
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Int> c(coeff_.size() + o.coeff_.size() - 1, 0);
    for (std::size_t i = 0; i < coeff_.size(); ++i)
        for (std::size_t j = 0; j < o.coeff_.size(); ++j) c[i + j] += coeff_[i] * o.coeff_[j];
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator*(const Int& k) const {
    std::vector<Int> c = coeff_;
    for (Int& v : c) v *= k;
    return IntPoly(std::move(c));
}

std::string IntPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Int& c = coeff_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        Int a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (i == 0 || a != 1) os << a.str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

bool poly_less(const IntPoly& a, const IntPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    const auto& ca = a.coefficients();
    const auto& cb = b.coefficients();
    return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
}

std::optional<IntPoly> exact_divide(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) return std::nullopt;
    if (a.is_zero()) return IntPoly{};
    if (a.degree() < b.degree()) return std::nullopt;
    // long division over Q, checking integrality as we go
    std::vector<Rat> rem(a.coefficients().begin(), a.coefficients().end());
    std::size_t db = static_cast<std::size_t>(b.degree());
    Rat lead = b.leading();
    std::vector<Rat> q(rem.size() - db, 0);
    for (std::size_t i = q.size(); i-- > 0;) {
        Rat f = rem[i + db] / lead;
        q[i] = f;
        if (f == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) rem[i + j] -= f * Rat(b[j]);
    }
    for (std::size_t j = 0; j < db; ++j)
        if (rem[j] != 0) return std::nullopt;
    std::vector<Int> qi(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (denominator(q[i]) != 1) return std::nullopt;
        qi[i] = numerator(q[i]);
    }
    return IntPoly(std::move(qi));
}

IntPoly Factorization::expand() const {
    IntPoly p = IntPoly::constant(content);
    for (const auto& [f, mult] : factors)
        for (unsigned i = 0; i < mult; ++i) p = p * f;
    return p;
}

namespace {

constexpr std::size_t kKroneckerDegreeLimit = 12;
constexpr std::size_t kDivisorTrialLimit = 1u << 22;

/// All positive divisors of n > 0, ascending. Plain trial division; the
/// values factored here are evaluations of small minimal polynomials.
std::vector<Int> positive_divisors(Int n) {
    n = abs(n);
    std::vector<Int> low, high;
    std::size_t steps = 0;
    for (Int d = 1; d * d <= n; ++d) {
        if (++steps > kDivisorTrialLimit)
            throw unsupported_degree("divisor enumeration too large during factorization");
        if (n % d == 0) {
            low.push_back(d);
            if (d * d != n) high.push_back(n / d);
        }
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

/// Sample points 0, 1, -1, 2, -2, ...
Int sample_point(std::size_t i) {
    if (i == 0) return 0;
    Int m = (i + 1) / 2;
    return (i % 2 == 1) ? m : -m;
}

/// Lagrange interpolation through (xs[i], ys[i]); nullopt when the result is
/// not an integer polynomial.
std::optional<IntPoly> interpolate_integer(const std::vector<Int>& xs, const std::vector<Int>& ys) {
    std::size_t n = xs.size();
    std::vector<Rat> acc(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        // numerator polynomial prod_{j != i} (x - x_j), denominator prod (x_i - x_j)
        std::vector<Rat> num(1, 1);
        Rat den = 1;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            std::vector<Rat> next(num.size() + 1, 0);
            for (std::size_t k = 0; k < num.size(); ++k) {
                next[k + 1] += num[k];
                next[k] -= num[k] * Rat(xs[j]);
            }
            num = std::move(next);
            den *= Rat(xs[i]) - Rat(xs[j]);
        }
        Rat w = Rat(ys[i]) / den;
        for (std::size_t k = 0; k < num.size(); ++k) acc[k] += num[k] * w;
    }
    std::vector<Int> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        if (denominator(acc[k]) != 1) return std::nullopt;
        out[k] = numerator(acc[k]);
    }
    return IntPoly(std::move(out));
}

/// Strip every rational root from the primitive polynomial p, appending the
/// corresponding primitive linear factors.
IntPoly strip_rational_roots(IntPoly p, std::vector<IntPoly>& out) {
    bool progress = true;
    while (progress && p.degree() >= 1) {
        progress = false;
        if (p.degree() == 1) {
            out.push_back(p.primitive_part());
            return IntPoly::constant(p.leading() > 0 ? 1 : -1);
        }
        std::vector<Int> nums = positive_divisors(p[0]);
        std::vector<Int> dens = positive_divisors(p.leading());
        for (const Int& b : dens) {
            for (const Int& a : nums) {
                if (gcd(a, b) != 1) continue;
                for (int s : {1, -1}) {
                    Int num = s * a;
                    // b^deg * p(num/b)
                    Int acc = 0;
                    Int bp = 1;
                    for (int i = p.degree(); i >= 0; --i) {
                        acc = acc * num + p[static_cast<std::size_t>(i)] * bp;
                        bp *= b;
                    }
                    if (acc != 0) continue;
                    IntPoly lin({-num, b});  // b*x - num, positive leading
                    auto q = exact_divide(p, lin);
                    if (!q) continue;  // root of content only; cannot happen for primitive p
                    out.push_back(lin);
                    p = *q;
                    progress = true;
                    break;
                }
                if (progress) break;
            }
            if (progress) break;
        }
    }
    return p;
}

/// Kronecker search for an irreducible factor of degree exactly d of the
/// primitive polynomial p (which has no factor of smaller degree).
std::optional<IntPoly> kronecker_factor(const IntPoly& p, std::size_t d) {
    std::vector<Int> xs(d + 1), vals(d + 1);
    for (std::size_t i = 0; i <= d; ++i) {
        xs[i] = sample_point(i);
        vals[i] = p.eval(xs[i]);
        // integer roots were stripped beforehand
    }
    std::vector<std::vector<Int>> choices(d + 1);
    for (std::size_t i = 0; i <= d; ++i) {
        std::vector<Int> divs = positive_divisors(vals[i]);
        if (i == 0) {
            choices[i] = divs;  // sign symmetry g ~ -g: first point positive
        } else {
            choices[i].reserve(divs.size() * 2);
            for (const Int& v : divs) {
                choices[i].push_back(v);
                choices[i].push_back(-v);
            }
        }
    }
    Int tuples = 1;
    for (const auto& c : choices) tuples *= Int(c.size());
    if (tuples > 1'000'000)
        throw unsupported_degree("Kronecker divisor search too large at degree " +
                                 std::to_string(d));
    std::vector<std::size_t> idx(d + 1, 0);
    std::vector<Int> ys(d + 1);
    while (true) {
        for (std::size_t i = 0; i <= d; ++i) ys[i] = choices[i][idx[i]];
        if (auto g = interpolate_integer(xs, ys)) {
            if (g->degree() == static_cast<int>(d) && g->content() == 1) {
                IntPoly cand = g->leading() > 0 ? *g : -*g;
                if (p.leading() % cand.leading() == 0 && exact_divide(p, cand)) return cand;
            }
        }
        std::size_t pos = 0;
        while (pos <= d && ++idx[pos] == choices[pos].size()) {
            idx[pos] = 0;
            ++pos;
        }
        if (pos > d) return std::nullopt;
    }
}

}  // namespace

Factorization factor_over_integers(const IntPoly& p) {
    if (p.is_zero()) throw zero_polynomial("cannot factor the zero polynomial");

    Factorization result;
    result.content = p.content();
    if (p.leading() < 0) result.content = -result.content;

    std::vector<IntPoly> found;
    IntPoly q = p.primitive_part();

    std::size_t low = 0;
    while (q.degree() > static_cast<int>(low) && q[low] == 0) ++low;
    if (low > 0) {
        std::vector<Int> shifted(q.coefficients().begin() + static_cast<long>(low),
                                 q.coefficients().end());
        q = IntPoly(std::move(shifted));
        for (std::size_t i = 0; i < low; ++i) found.push_back(IntPoly::x());
    }

    q = strip_rational_roots(std::move(q), found);

    if (q.degree() >= 2) {
        if (q.degree() > static_cast<int>(kKroneckerDegreeLimit))
            throw unsupported_degree("factorization beyond degree 12 is not supported");
        std::size_t d = 2;
        while (2 * d <= static_cast<std::size_t>(q.degree())) {
            if (auto f = kronecker_factor(q, d)) {
                found.push_back(*f);
                q = *exact_divide(q, *f);
            } else {
                ++d;
            }
        }
        if (q.degree() >= 1) found.push_back(q);
    } else if (q.degree() == 1) {
        found.push_back(q);
    }

    std::sort(found.begin(), found.end(), poly_less);
    for (const IntPoly& f : found) {
        if (!result.factors.empty() && result.factors.back().first == f)
            ++result.factors.back().second;
        else
            result.factors.emplace_back(f, 1u);
    }
    return result;
}

IntPoly synthetic_divide(const IntPoly& p, const Int& c) {
    if (p.is_zero()) return {};
    std::size_t n = static_cast<std::size_t>(p.degree());
    std::vector<Int> q(n, 0);
    Int carry = p[n];
    for (std::size_t i = n; i-- > 0;) {
        q[i] = carry;
        carry = carry * c + p[i];
    }
    if (carry != 0)
        throw not_a_root("synthetic division: p(" + c.str() + ") = " + carry.str() + " != 0");
    return IntPoly(std::move(q));
}

}  // namespace cqg
