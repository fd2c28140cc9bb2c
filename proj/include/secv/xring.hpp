#ifndef SECV_XRING_HPP
#define SECV_XRING_HPP

#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "secv/detail/format.hpp"
#include "secv/errors.hpp"
#include "secv/rational.hpp"

namespace secv {

enum class Ample5 { yes, no, unknown };

inline std::string to_string(Ample5 flag) {
    switch (flag) {
    case Ample5::yes: return "yes";
    case Ample5::no: return "no";
    default: return "unknown";
    }
}

inline Ample5 ample5_from_string(const std::string& text) {
    if (text == "yes") return Ample5::yes;
    if (text == "no") return Ample5::no;
    if (text == "unknown") return Ample5::unknown;
    throw ParseError("invalid ample5 flag \"" + text + "\" (expected yes/no/unknown)");
}

/// The integral data of an embedded n-dimensional variety X:
///   entry (a, b) = integral over X of s_a(T_X) * s_b(T_X) * h^{n-a-b}
/// for 0 <= a <= b, a + b <= n. Entry (0, 0) is the degree d of X.
/// Only keys with a <= b are stored; lookup symmetrizes.
class SegreIntegralTable {
public:
    using Entries = std::map<std::pair<int, int>, Rational>;

    SegreIntegralTable(int n, std::string name, Ample5 ample5, Entries entries)
        : n_(n), name_(std::move(name)), ample5_(ample5), entries_(std::move(entries)) {
        if (n_ < 1)
            throw InvalidArgument("table dimension must be >= 1");
        for (const auto& [key, value] : entries_) {
            const auto [a, b] = key;
            if (a < 0 || a > b || a + b > n_)
                throw InvalidArgument("invalid table key (" + std::to_string(a) + "," +
                                      std::to_string(b) + ") for n = " + std::to_string(n_));
        }
        for (int a = 0; a <= n_; ++a)
            for (int b = a; a + b <= n_; ++b)
                if (!entries_.count({a, b}))
                    throw IncompleteTable("missing table entry (" + std::to_string(a) + "," +
                                          std::to_string(b) + ")");
        if (entries_.at({0, 0}) == 0)
            throw ZeroDegree("table has deg X = 0");
    }

    int dim() const { return n_; }
    const std::string& name() const { return name_; }
    Ample5 ample5() const { return ample5_; }

    /// d = deg X.
    const Rational& degree() const { return entries_.at({0, 0}); }

    /// Symmetric lookup: (b, a) resolves to (a, b).
    const Rational& operator()(int a, int b) const {
        if (a > b)
            std::swap(a, b);
        auto it = entries_.find({a, b});
        if (it == entries_.end())
            throw IncompleteTable("table entry (" + std::to_string(a) + "," +
                                  std::to_string(b) + ") is not defined");
        return it->second;
    }

    const Entries& entries() const { return entries_; }

    /// Equality of the mathematical content (dimension and integrals);
    /// name and ample5 are descriptor metadata.
    friend bool operator==(const SegreIntegralTable& lhs, const SegreIntegralTable& rhs) {
        return lhs.n_ == rhs.n_ && lhs.entries_ == rhs.entries_;
    }

private:
    int n_;
    std::string name_;
    Ample5 ample5_;
    Entries entries_;
};

/// Monomial h^h * s_a * s_b on X, normalized with 0 <= a <= b (s_0 = 1, so
/// pure h-powers have a = b = 0). Codimension is h + a + b.
struct AmbientMonomial {
    int h = 0;
    int a = 0;
    int b = 0;

    int codim() const { return h + a + b; }
    int segre_factors() const { return (a > 0 ? 1 : 0) + (b > 0 ? 1 : 0); }

    AmbientMonomial normalized() const {
        AmbientMonomial m = *this;
        if (m.a > m.b)
            std::swap(m.a, m.b);
        return m;
    }

    friend bool operator==(const AmbientMonomial&, const AmbientMonomial&) = default;
};

/// Monomial order for storage and rendering: increasing codimension, then
/// lexicographic (h, a, b).
struct AmbientMonomialOrder {
    bool operator()(const AmbientMonomial& l, const AmbientMonomial& r) const {
        return std::tuple(l.codim(), l.h, l.a, l.b) < std::tuple(r.codim(), r.h, r.a, r.b);
    }
};

/// A class in the subring of the Chow ring of X generated by the hyperplane
/// class h and the tangent Segre classes s_1..s_n, with at most two Segre
/// factors per monomial. Monomials of codimension > n are identically zero
/// and never stored.
class AmbientClass {
public:
    using Terms = std::map<AmbientMonomial, Rational, AmbientMonomialOrder>;

    AmbientClass() : n_(0) {}

    explicit AmbientClass(int n) : n_(n) {
        if (n < 1)
            throw InvalidArgument("ambient dimension must be >= 1");
    }

    static AmbientClass unit(int n) { return monomial(n, {0, 0, 0}, 1); }

    static AmbientClass h_power(int n, int p) { return monomial(n, {p, 0, 0}, 1); }

    /// s_k as a class; s_0 is the unit.
    static AmbientClass segre(int n, int k) { return monomial(n, {0, 0, k}, 1); }

    static AmbientClass monomial(int n, AmbientMonomial m, const Rational& coeff) {
        AmbientClass c(n);
        c.add_term(m, coeff);
        return c;
    }

    int dim() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }

    /// Coefficient of a monomial; zero when absent.
    Rational coefficient(const AmbientMonomial& m) const {
        auto it = terms_.find(m.normalized());
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Accumulates coeff on the monomial; normalizes a <= b, silently drops
    /// codimension > n, and never keeps zero coefficients.
    void add_term(AmbientMonomial m, const Rational& coeff) {
        m = m.normalized();
        if (m.h < 0 || m.a < 0)
            throw InvalidArgument("negative exponent in ambient monomial");
        if (coeff == 0 || m.codim() > n_)
            return;
        auto [it, inserted] = terms_.emplace(m, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    friend AmbientClass operator+(const AmbientClass& u, const AmbientClass& v) {
        check_same_dim(u, v);
        AmbientClass r = u;
        for (const auto& [m, c] : v.terms_)
            r.add_term(m, c);
        return r;
    }

    friend AmbientClass operator-(const AmbientClass& u, const AmbientClass& v) {
        check_same_dim(u, v);
        AmbientClass r = u;
        for (const auto& [m, c] : v.terms_)
            r.add_term(m, -c);
        return r;
    }

    friend AmbientClass operator-(const AmbientClass& u) {
        AmbientClass r(u.n_);
        for (const auto& [m, c] : u.terms_)
            r.add_term(m, -c);
        return r;
    }

    friend AmbientClass operator*(const Rational& c, const AmbientClass& u) {
        AmbientClass r(u.n_);
        if (c == 0)
            return r;
        for (const auto& [m, coeff] : u.terms_)
            r.add_term(m, c * coeff);
        return r;
    }

    friend AmbientClass operator*(const AmbientClass& u, const Rational& c) { return c * u; }

    /// Distributive product. Segre factors concatenate; any product monomial
    /// that would carry three or more of them throws MoreThanTwoSegreFactors
    /// (checked before the codimension cutoff).
    friend AmbientClass operator*(const AmbientClass& u, const AmbientClass& v) {
        check_same_dim(u, v);
        AmbientClass r(u.n_);
        for (const auto& [mu, cu] : u.terms_) {
            for (const auto& [mv, cv] : v.terms_) {
                if (mu.segre_factors() + mv.segre_factors() > 2)
                    throw MoreThanTwoSegreFactors(
                        "product monomial would carry more than two Segre factors");
                int indices[2] = {0, 0};
                int count = 0;
                for (int s : {mu.a, mu.b, mv.a, mv.b})
                    if (s > 0)
                        indices[count++] = s; // count <= 2 by the check above
                r.add_term({mu.h + mv.h, indices[0], indices[1]}, cu * cv);
            }
        }
        return r;
    }

    friend bool operator==(const AmbientClass& u, const AmbientClass& v) {
        return u.n_ == v.n_ && u.terms_ == v.terms_;
    }

private:
    static void check_same_dim(const AmbientClass& u, const AmbientClass& v) {
        if (u.n_ != v.n_)
            throw DimensionMismatch("ambient classes live on varieties of different dimension");
    }

    int n_;
    Terms terms_;
};

/// Total Segre class of the tangent bundle as a formal class:
/// 1 + s_1 + ... + s_n.
inline AmbientClass tangent_segre_total(int n) {
    AmbientClass c(n);
    for (int i = 0; i <= n; ++i)
        c.add_term({0, 0, i}, 1);
    return c;
}

/// Degrees of the dimension-k parts of u for k = 0..n: the codimension n-k
/// part of u integrated against h^k. A monomial h^p s_a s_b of codimension
/// n-k contributes coeff * T[a][b], since h^p s_a s_b h^k = s_a s_b h^{n-a-b}.
inline std::vector<Rational> degree_by_dimension(const AmbientClass& u,
                                                 const SegreIntegralTable& table) {
    if (u.dim() != table.dim())
        throw DimensionMismatch("class and table have different dimension");
    const int n = table.dim();
    std::vector<Rational> deg(static_cast<size_t>(n) + 1);
    for (const auto& [m, c] : u.terms())
        deg[static_cast<size_t>(n - m.codim())] += c * table(m.a, m.b);
    return deg;
}

inline std::string monomial_to_string(const AmbientMonomial& m) {
    std::string out;
    detail::append_factor(out, detail::power_factor("h", m.h));
    if (m.a > 0 && m.a == m.b) {
        detail::append_factor(out, "s" + std::to_string(m.a) + "^2");
    } else {
        if (m.a > 0)
            detail::append_factor(out, "s" + std::to_string(m.a));
        if (m.b > 0)
            detail::append_factor(out, "s" + std::to_string(m.b));
    }
    return out;
}

inline std::string to_string(const AmbientClass& u) {
    std::vector<std::pair<Rational, std::string>> terms;
    terms.reserve(u.terms().size());
    for (const auto& [m, c] : u.terms())
        terms.emplace_back(c, monomial_to_string(m));
    return detail::format_terms(terms);
}

inline std::ostream& operator<<(std::ostream& os, const AmbientClass& u) {
    return os << to_string(u);
}

} // namespace secv

#endif
