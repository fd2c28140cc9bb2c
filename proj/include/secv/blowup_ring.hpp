#ifndef SECV_BLOWUP_RING_HPP
#define SECV_BLOWUP_RING_HPP

#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "secv/detail/format.hpp"
#include "secv/errors.hpp"
#include "secv/rational.hpp"
#include "secv/xring.hpp"

namespace secv {

/// Monomial e^e x^x y^y on the blow-up of X x X along the diagonal, where e
/// is the exceptional divisor class and x, y are the pullbacks of the
/// hyperplane class under the two projections. Canonical form: a monomial
/// containing e carries no y factor, because e*(x - y) = 0 lets every y
/// merge into x.
struct BlowupMonomial {
    int e = 0;
    int x = 0;
    int y = 0;

    int degree() const { return e + x + y; }

    friend bool operator==(const BlowupMonomial&, const BlowupMonomial&) = default;
};

/// Render/storage order: increasing total degree, then e, x, y exponents in
/// decreasing order (so "2*e + x - y" and "4*e^2 + x^2 - 2*x*y + y^2").
struct BlowupMonomialOrder {
    bool operator()(const BlowupMonomial& l, const BlowupMonomial& r) const {
        if (l.degree() != r.degree())
            return l.degree() < r.degree();
        if (l.e != r.e)
            return l.e > r.e;
        if (l.x != r.x)
            return l.x > r.x;
        return l.y > r.y;
    }
};

/// A class on Bl_{Delta(X)}(X x X), dim 2n, in the subring generated by e, x
/// and y. Relations enforced on every stored monomial:
///   e*x = e*y            (e times x - y vanishes)
///   x^{n+1} = y^{n+1} = 0 (pullbacks of h^{n+1})
///   total degree > 2n = 0
class BlowupClass {
public:
    using Terms = std::map<BlowupMonomial, Rational, BlowupMonomialOrder>;

    explicit BlowupClass(int n) : n_(n) {
        if (n < 1)
            throw InvalidArgument("blow-up base dimension must be >= 1");
    }

    static BlowupClass unit(int n) { return monomial(n, {0, 0, 0}, 1); }
    static BlowupClass exceptional(int n) { return monomial(n, {1, 0, 0}, 1); }
    static BlowupClass hyperplane_first(int n) { return monomial(n, {0, 1, 0}, 1); }
    static BlowupClass hyperplane_second(int n) { return monomial(n, {0, 0, 1}, 1); }

    static BlowupClass monomial(int n, BlowupMonomial m, const Rational& coeff) {
        BlowupClass c(n);
        c.add_term(m, coeff);
        return c;
    }

    int dim() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }

    Rational coefficient(BlowupMonomial m) const {
        canonicalize(m);
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Accumulates coeff on the canonical form of m, dropping monomials that
    /// vanish (x- or y-exponent beyond n, or total degree beyond 2n).
    void add_term(BlowupMonomial m, const Rational& coeff) {
        if (m.e < 0 || m.x < 0 || m.y < 0)
            throw InvalidArgument("negative exponent in blow-up monomial");
        canonicalize(m);
        if (coeff == 0 || m.x > n_ || m.y > n_ || m.degree() > 2 * n_)
            return;
        auto [it, inserted] = terms_.emplace(m, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    friend BlowupClass operator+(const BlowupClass& u, const BlowupClass& v) {
        check_same_dim(u, v);
        BlowupClass r = u;
        for (const auto& [m, c] : v.terms_)
            r.add_term(m, c);
        return r;
    }

    friend BlowupClass operator-(const BlowupClass& u, const BlowupClass& v) {
        check_same_dim(u, v);
        BlowupClass r = u;
        for (const auto& [m, c] : v.terms_)
            r.add_term(m, -c);
        return r;
    }

    friend BlowupClass operator-(const BlowupClass& u) {
        BlowupClass r(u.n_);
        for (const auto& [m, c] : u.terms_)
            r.add_term(m, -c);
        return r;
    }

    friend BlowupClass operator*(const Rational& c, const BlowupClass& u) {
        BlowupClass r(u.n_);
        if (c == 0)
            return r;
        for (const auto& [m, coeff] : u.terms_)
            r.add_term(m, c * coeff);
        return r;
    }

    friend BlowupClass operator*(const BlowupClass& u, const Rational& c) { return c * u; }

    friend BlowupClass operator*(const BlowupClass& u, const BlowupClass& v) {
        check_same_dim(u, v);
        BlowupClass r(u.n_);
        for (const auto& [mu, cu] : u.terms_)
            for (const auto& [mv, cv] : v.terms_)
                r.add_term({mu.e + mv.e, mu.x + mv.x, mu.y + mv.y}, cu * cv);
        return r;
    }

    friend bool operator==(const BlowupClass& u, const BlowupClass& v) {
        return u.n_ == v.n_ && u.terms_ == v.terms_;
    }

private:
    static void canonicalize(BlowupMonomial& m) {
        if (m.e >= 1) {
            m.x += m.y;
            m.y = 0;
        }
    }

    static void check_same_dim(const BlowupClass& u, const BlowupClass& v) {
        if (u.n_ != v.n_)
            throw DimensionMismatch("blow-up classes live over varieties of different dimension");
    }

    int n_;
    Terms terms_;
};

/// The class of the universal family restricted to itself, 2e + x - y:
/// the self-intersection divisor driving the Segre-class computation.
inline BlowupClass self_intersection_divisor(int n) {
    return Rational(2) * BlowupClass::exceptional(n) + BlowupClass::hyperplane_first(n) -
           BlowupClass::hyperplane_second(n);
}

/// The alternating geometric series sum_{i >= 0} (-1)^i D^i of a divisor
/// class D. Powers beyond total degree 2n vanish, so the sum stops at 2n.
inline BlowupClass segre_alternating_sum(const BlowupClass& divisor) {
    const int n = divisor.dim();
    BlowupClass acc = BlowupClass::unit(n);
    BlowupClass sum = acc;
    for (int i = 1; i <= 2 * n; ++i) {
        acc = acc * divisor;
        sum = (i % 2 == 0) ? sum + acc : sum - acc;
    }
    return sum;
}

/// Pushforward along q = pr_1 . eta to a class on X, monomial by monomial:
///   e^i x^m, i >= n: (-1)^{i-1} s_{i-n} h^m   (eta_* e^i lands on the
///                     diagonal; the x-power rides along by the projection
///                     formula)
///   e^i x^m, 1 <= i < n: 0  (the image would have dimension > n)
///   x^a y^b: d h^a when b = n (integrating h^n over the second factor),
///            otherwise 0.
inline AmbientClass push_to_X(const BlowupClass& u, const SegreIntegralTable& table) {
    if (u.dim() != table.dim())
        throw DimensionMismatch("blow-up class and table have different dimension");
    const int n = table.dim();
    const Rational& d = table.degree();
    AmbientClass out(n);
    for (const auto& [m, c] : u.terms()) {
        if (m.e >= 1) {
            if (m.e < n)
                continue;
            const Rational sign = ((m.e - 1) % 2 == 0) ? 1 : -1;
            out.add_term({m.x, 0, m.e - n}, sign * c);
        } else if (m.y == n) {
            out.add_term({m.x, 0, 0}, d * c);
        }
    }
    return out;
}

inline std::string monomial_to_string(const BlowupMonomial& m) {
    std::string out;
    detail::append_factor(out, detail::power_factor("e", m.e));
    detail::append_factor(out, detail::power_factor("x", m.x));
    detail::append_factor(out, detail::power_factor("y", m.y));
    return out;
}

inline std::string to_string(const BlowupClass& u) {
    std::vector<std::pair<Rational, std::string>> terms;
    terms.reserve(u.terms().size());
    for (const auto& [m, c] : u.terms())
        terms.emplace_back(c, monomial_to_string(m));
    return detail::format_terms(terms);
}

inline std::ostream& operator<<(std::ostream& os, const BlowupClass& u) {
    return os << to_string(u);
}

} // namespace secv

#endif
