#ifndef SECV_SERIES_HPP
#define SECV_SERIES_HPP

#include <algorithm>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

#include "secv/errors.hpp"
#include "secv/rational.hpp"

namespace secv {

/// Univariate formal power series over the rationals, truncated at a fixed
/// order m: c_0 + c_1 t + ... + c_m t^m. Binary operations on series of
/// different orders truncate to the smaller order.
class TruncatedSeries {
public:
    /// The zero series of the given order.
    explicit TruncatedSeries(int order) : coeff_(static_cast<size_t>(check_order(order)) + 1) {}

    static TruncatedSeries constant(const Rational& c, int order) {
        TruncatedSeries s(order);
        s.coeff_[0] = c;
        return s;
    }

    /// Series with the given coefficients c_0..c_m; order is m = size - 1.
    static TruncatedSeries from_coefficients(std::vector<Rational> coefficients) {
        if (coefficients.empty())
            throw InvalidArgument("a truncated series needs at least the constant coefficient");
        TruncatedSeries s(static_cast<int>(coefficients.size()) - 1);
        s.coeff_ = std::move(coefficients);
        return s;
    }

    int order() const { return static_cast<int>(coeff_.size()) - 1; }

    const Rational& operator[](int i) const { return coeff_.at(static_cast<size_t>(i)); }

    void set_coefficient(int i, const Rational& c) { coeff_.at(static_cast<size_t>(i)) = c; }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(std::min(a.order(), b.order()));
        for (int i = 0; i <= r.order(); ++i)
            r.coeff_[static_cast<size_t>(i)] = a[i] + b[i];
        return r;
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(std::min(a.order(), b.order()));
        for (int i = 0; i <= r.order(); ++i)
            r.coeff_[static_cast<size_t>(i)] = a[i] - b[i];
        return r;
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a) {
        TruncatedSeries r(a.order());
        for (int i = 0; i <= r.order(); ++i)
            r.coeff_[static_cast<size_t>(i)] = -a[i];
        return r;
    }

    /// Cauchy product, truncated to the smaller order.
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(std::min(a.order(), b.order()));
        for (int i = 0; i <= r.order(); ++i) {
            Rational acc = 0;
            for (int j = 0; j <= i; ++j)
                acc += a[j] * b[i - j];
            r.coeff_[static_cast<size_t>(i)] = acc;
        }
        return r;
    }

    friend TruncatedSeries operator*(const Rational& c, const TruncatedSeries& a) {
        TruncatedSeries r(a.order());
        for (int i = 0; i <= r.order(); ++i)
            r.coeff_[static_cast<size_t>(i)] = c * a[i];
        return r;
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const Rational& c) { return c * a; }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.coeff_ == b.coeff_;
    }

private:
    static int check_order(int order) {
        if (order < 0)
            throw InvalidArgument("series order must be non-negative");
        return order;
    }

    std::vector<Rational> coeff_;
};

inline std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s) {
    os << to_string(s[0]);
    for (int i = 1; i <= s.order(); ++i) {
        const Rational& c = s[i];
        if (c == 0)
            continue;
        os << (c < 0 ? " - " : " + ");
        Rational a = abs(c);
        if (a != 1)
            os << to_string(a) << "*";
        os << "t";
        if (i > 1)
            os << "^" << i;
    }
    return os;
}

inline std::string to_string(const TruncatedSeries& s) {
    std::ostringstream os;
    os << s;
    return os.str();
}

/// Multiplicative inverse: returns b with a*b = 1 up to the order of a.
/// Throws NonUnitConstantTerm when the constant term is zero.
inline TruncatedSeries inverse(const TruncatedSeries& a) {
    if (a[0] == 0)
        throw NonUnitConstantTerm("cannot invert a series with zero constant term");
    TruncatedSeries b(a.order());
    b.set_coefficient(0, 1 / a[0]);
    for (int i = 1; i <= a.order(); ++i) {
        Rational acc = 0;
        for (int j = 1; j <= i; ++j)
            acc += a[j] * b[i - j];
        b.set_coefficient(i, -acc / a[0]);
    }
    return b;
}

/// e^{lambda t} truncated at the given order: sum of lambda^i t^i / i!.
inline TruncatedSeries exp_scaled(const Rational& lambda, int order) {
    TruncatedSeries s(order);
    Rational term = 1;
    s.set_coefficient(0, term);
    for (int i = 1; i <= order; ++i) {
        term = term * lambda / i;
        s.set_coefficient(i, term);
    }
    return s;
}

/// Divides by t, dropping the (necessarily zero) constant term; the order
/// decreases by one.
inline TruncatedSeries divide_by_variable(const TruncatedSeries& a) {
    if (a.order() < 1)
        throw InvalidArgument("cannot divide a constant series by t");
    if (a[0] != 0)
        throw InvalidArgument("series is not divisible by t: nonzero constant term");
    TruncatedSeries r(a.order() - 1);
    for (int i = 0; i <= r.order(); ++i)
        r.set_coefficient(i, a[i + 1]);
    return r;
}

/// Checks the Todd-quotient identity
///   (2t / (1 - e^{-2t})) / (t / (1 - e^{-t}))  ==  2 / (1 + e^{-t})
/// as truncated series up to the given order, with both sides built
/// independently from exp_scaled and inverse. The apparent poles cancel:
/// each Todd-type factor x/(1 - e^{-x}) is computed by forming
/// (1 - e^{-x})/x first and then inverting.
inline bool todd_identity_check(int order) {
    if (order < 1)
        throw InvalidArgument("todd_identity_check needs order >= 1");
    const TruncatedSeries one = TruncatedSeries::constant(1, order + 1);
    const TruncatedSeries one_minus_exp1 = one - exp_scaled(-1, order + 1);
    const TruncatedSeries one_minus_exp2 = one - exp_scaled(-2, order + 1);
    // (1 - e^{-t})/t and (1 - e^{-2t})/(2t), both of order `order`
    const TruncatedSeries g1 = divide_by_variable(one_minus_exp1);
    const TruncatedSeries g2 = Rational(1, 2) * divide_by_variable(one_minus_exp2);
    // lhs = [1/g2] / [1/g1] = g1 * inverse(g2)
    const TruncatedSeries lhs = g1 * inverse(g2);
    const TruncatedSeries rhs =
        Rational(2) * inverse(TruncatedSeries::constant(1, order) + exp_scaled(-1, order));
    return lhs == rhs;
}

/// Segre coefficients s_0..s_n of a bundle from its Chern coefficients:
/// the total Segre series is the inverse of the total Chern series.
/// The chern list starts with c_0 = 1 and may be shorter than n + 1.
inline std::vector<Rational> segre_from_chern(const std::vector<Rational>& chern, int n) {
    if (chern.empty() || chern[0] != 1)
        throw InvalidArgument("total Chern class must have constant term 1");
    if (static_cast<int>(chern.size()) > n + 1)
        throw InvalidArgument("more Chern coefficients than the dimension allows");
    if (n < 0)
        throw InvalidArgument("dimension must be non-negative");
    TruncatedSeries c(n);
    for (size_t i = 0; i < chern.size(); ++i)
        c.set_coefficient(static_cast<int>(i), chern[i]);
    const TruncatedSeries s = inverse(c);
    std::vector<Rational> out(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        out[static_cast<size_t>(i)] = s[i];
    return out;
}

} // namespace secv

#endif
