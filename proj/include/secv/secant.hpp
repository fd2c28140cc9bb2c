#ifndef SECV_SECANT_HPP
#define SECV_SECANT_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "secv/blowup_ring.hpp"
#include "secv/errors.hpp"
#include "secv/rational.hpp"
#include "secv/xring.hpp"

namespace secv {

/// Coefficient a_{n,k} of deg s_k(T_X) in the 3-secant degree formula:
///   a_{n,k} = C(2n+1, n-k) + 2 * sum_{i=k}^{n} (-1)^{i-k} C(3n+2, n-i) C(i-k+n, n).
inline Integer coeff_a(int n, int k) {
    if (n < 1 || k < 0 || k > n)
        throw InvalidArgument("coeff_a requires 1 <= n and 0 <= k <= n");
    Integer acc = binomial(2 * n + 1, n - k);
    for (int i = k; i <= n; ++i) {
        const Integer term = 2 * binomial(3 * n + 2, n - i) * binomial(i - k + n, n);
        acc += ((i - k) % 2 == 0) ? term : -term;
    }
    return acc;
}

/// The binomial-weighted sum of tangent Segre degrees subtracted from d^2 in
/// the double point formula: A = sum_j C(2n+1, j) * T[0][n-j], the degree of
/// the dimension-j part being T[0][n-j].
inline Rational a_value(const SegreIntegralTable& table) {
    const int n = table.dim();
    Rational acc = 0;
    for (int j = 0; j <= n; ++j)
        acc += Rational(binomial(2 * n + 1, j)) * table(0, n - j);
    return acc;
}

/// Validity caveats for the 2-secant degree (needs a 3-very ample embedding,
/// which the descriptor flag does not establish unless it is "yes").
inline std::vector<std::string> sigma2_warnings(const SegreIntegralTable& table) {
    if (table.ample5() == Ample5::yes)
        return {};
    return {"the descriptor does not establish 3-very ampleness (5-very-ample flag: " +
            to_string(table.ample5()) + "); deg sigma_2 may lack geometric meaning"};
}

/// Validity caveats for the 3-secant degree (needs 5-very ampleness).
inline std::vector<std::string> sigma3_warnings(const SegreIntegralTable& table) {
    switch (table.ample5()) {
    case Ample5::yes:
        return {};
    case Ample5::no:
        return {"the embedding is not 5-very ample; the sigma_3 degree formula is evaluated "
                "outside its hypotheses"};
    default:
        return {"the embedding is not known to be 5-very ample; the sigma_3 degree formula "
                "may be evaluated outside its hypotheses"};
    }
}

/// deg sigma_2(X) = (d^2 - A) / 2 (double point formula).
inline Rational deg_sigma2(const SegreIntegralTable& table) {
    const Rational& d = table.degree();
    return (d * d - a_value(table)) / 2;
}

/// deg sigma_3(X) by the closed-form degree formula:
///   (1/6) ( d^3 - sum_k d a_{n,k} T[0][k]
///           + sum_k sum_{a<=k} 2^{k-a+n+1} C(3n+2, n-k) T[a][k-a] ).
inline Rational deg_sigma3(const SegreIntegralTable& table) {
    const int n = table.dim();
    const Rational& d = table.degree();
    Rational acc = d * d * d;
    for (int k = 0; k <= n; ++k)
        acc -= d * Rational(coeff_a(n, k)) * table(0, k);
    for (int k = 0; k <= n; ++k)
        for (int a = 0; a <= k; ++a)
            acc += Rational(pow2(k - a + n + 1) * binomial(3 * n + 2, n - k)) * table(a, k - a);
    return acc / 6;
}

/// Closed form of the Segre class s(X, sigma_2(X)):
///   sum_{i=0}^{n} (-1)^i d C(i+n, n) h^i - sum_{i=0}^{n} 2^{i+n} s_i.
inline AmbientClass segre_x_sigma2_closed(const SegreIntegralTable& table) {
    const int n = table.dim();
    const Rational& d = table.degree();
    AmbientClass out(n);
    for (int i = 0; i <= n; ++i) {
        const Rational sign = (i % 2 == 0) ? 1 : -1;
        out.add_term({i, 0, 0}, sign * d * Rational(binomial(i + n, n)));
        out.add_term({0, 0, i}, -Rational(pow2(i + n)));
    }
    return out;
}

/// s(Delta(X), X x sigma_2(X)) = s(T_X) * s(X, sigma_2(X)).
inline AmbientClass segre_diag_closed(const SegreIntegralTable& table) {
    return tangent_segre_total(table.dim()) * segre_x_sigma2_closed(table);
}

/// The multiplicity of sigma_2(X) along X: d - 2^n, the coefficient of the
/// fundamental class in s(X, sigma_2(X)). Both routes are evaluated and
/// checked against each other.
inline Rational mult_sigma2_along_x(const SegreIntegralTable& table) {
    const Rational value = table.degree() - Rational(pow2(table.dim()));
    if (segre_x_sigma2_closed(table).coefficient({0, 0, 0}) != value)
        throw InternalError("multiplicity disagrees with the Segre class unit coefficient");
    return value;
}

/// B = sum_k C(3n+2, k) * deg of the dimension-k part of
/// s(Delta(X), X x sigma_2(X)); the other Segre-degree sum in the 3-secant
/// assembly.
inline Rational b_value(const SegreIntegralTable& table) {
    const int n = table.dim();
    const std::vector<Rational> deg = degree_by_dimension(segre_diag_closed(table), table);
    Rational acc = 0;
    for (int k = 0; k <= n; ++k)
        acc += Rational(binomial(3 * n + 2, k)) * deg[static_cast<size_t>(k)];
    return acc;
}

/// Curve specialization of the 3-secant degree formula (n = 1):
///   (1/6)(d^3 - 9 d^2 + 26 d - 24 - 6 d g + 24 g).
inline Rational curve_sigma3(const Rational& d, const Rational& g) {
    return (d * d * d - 9 * d * d + 26 * d - 24 - 6 * d * g + 24 * g) / 6;
}

/// The curve polynomial as printed in the literature, which differs from
/// curve_sigma3 in the signs of the constant and genus terms; the two
/// disagree by 8(1 - g). The rational-normal-curve and elliptic-curve
/// benchmarks match curve_sigma3, not this variant.
inline Rational curve_sigma3_literature(const Rational& d, const Rational& g) {
    return (d * d * d - 9 * d * d + 26 * d + 24 - 6 * d * g - 24 * g) / 6;
}

/// Surface specialization (n = 2), in terms of d = h^2, pi = h.K,
/// kappa = K^2 and the topological Euler characteristic e:
///   (1/6)(d^3 - 30 d^2 + 224 d - 3 d (5 pi + kappa - e) + 192 pi
///         + 56 kappa - 40 e).
inline Rational surface_sigma3(const Rational& d, const Rational& pi, const Rational& kappa,
                               const Rational& e) {
    return (d * d * d - 30 * d * d + 224 * d - 3 * d * (5 * pi + kappa - e) + 192 * pi +
            56 * kappa - 40 * e) /
           6;
}

enum class Method { closed_form, pipeline, cross_validated };

inline std::string to_string(Method method) {
    switch (method) {
    case Method::closed_form: return "closed_form";
    case Method::pipeline: return "pipeline";
    default: return "cross_validated";
    }
}

/// Everything the library computes for one descriptor.
struct SecantReport {
    std::string name;
    int n = 0;
    Rational d;
    Rational deg_sigma2;
    Rational deg_sigma3;
    Rational mult_x;
    Rational a_value;
    Rational b_value;
    AmbientClass segre_x_sigma2;
    AmbientClass segre_diag;
    Method method = Method::closed_form;
    std::vector<std::string> warnings;
};

/// Raised when the closed-form and pipeline reports disagree; carries both
/// reports and the first differing field.
class CrossValidationMismatch : public Error {
public:
    CrossValidationMismatch(std::string field, SecantReport closed, SecantReport pipeline)
        : Error("cross-validation mismatch in field \"" + field + "\""),
          field_(std::move(field)), closed_(std::move(closed)), pipeline_(std::move(pipeline)) {}

    const std::string& field() const { return field_; }
    const SecantReport& closed() const { return closed_; }
    const SecantReport& pipeline() const { return pipeline_; }

private:
    std::string field_;
    SecantReport closed_;
    SecantReport pipeline_;
};

namespace detail {

inline std::vector<std::string> report_warnings(const SegreIntegralTable& table,
                                                const Rational& sigma3) {
    std::vector<std::string> warnings = sigma2_warnings(table);
    for (auto& w : sigma3_warnings(table))
        warnings.push_back(std::move(w));
    if (!is_integer(sigma3))
        warnings.push_back("deg sigma_3 = " + to_string(sigma3) +
                           " is not an integer; the table is not the integral data of a "
                           "5-very-ample embedding");
    return warnings;
}

} // namespace detail

/// All quantities by their closed-form expressions.
inline SecantReport closed_form_report(const SegreIntegralTable& table) {
    SecantReport report;
    report.name = table.name();
    report.n = table.dim();
    report.d = table.degree();
    report.a_value = a_value(table);
    report.b_value = b_value(table);
    report.deg_sigma2 = deg_sigma2(table);
    report.deg_sigma3 = deg_sigma3(table);
    report.mult_x = mult_sigma2_along_x(table);
    report.segre_x_sigma2 = segre_x_sigma2_closed(table);
    report.segre_diag = segre_diag_closed(table);
    report.method = Method::closed_form;
    report.warnings = detail::report_warnings(table, report.deg_sigma3);
    return report;
}

/// Re-derives every quantity through the blow-up pipeline: s(X, sigma_2(X))
/// is pushed forward from the alternating powers of 2e + x - y, the diagonal
/// Segre class is s(T_X) times that, and the secant degrees follow from the
/// assembly ((d (d^2 - A)) / 2 - B) / 3 instead of the closed formula.
inline SecantReport derive_via_blowup(const SegreIntegralTable& table) {
    const int n = table.dim();
    const Rational& d = table.degree();
    SecantReport report;
    report.name = table.name();
    report.n = n;
    report.d = d;
    report.segre_x_sigma2 = push_to_X(segre_alternating_sum(self_intersection_divisor(n)), table);
    report.segre_diag = tangent_segre_total(n) * report.segre_x_sigma2;
    report.a_value = a_value(table);
    const std::vector<Rational> deg = degree_by_dimension(report.segre_diag, table);
    report.b_value = 0;
    for (int k = 0; k <= n; ++k)
        report.b_value += Rational(binomial(3 * n + 2, k)) * deg[static_cast<size_t>(k)];
    report.deg_sigma2 = (d * d - report.a_value) / 2;
    report.deg_sigma3 = (d * (d * d - report.a_value) / 2 - report.b_value) / 3;
    report.mult_x = report.segre_x_sigma2.coefficient({0, 0, 0});
    report.method = Method::pipeline;
    report.warnings = detail::report_warnings(table, report.deg_sigma3);
    return report;
}

/// Field-by-field comparison of a closed-form and a pipeline report; returns
/// the merged report or throws CrossValidationMismatch naming the first
/// field that differs.
inline SecantReport merge_validated(const SecantReport& closed, const SecantReport& pipeline) {
    const auto fail = [&](const char* field) {
        throw CrossValidationMismatch(field, closed, pipeline);
    };
    if (closed.n != pipeline.n)
        fail("n");
    if (closed.d != pipeline.d)
        fail("d");
    if (closed.a_value != pipeline.a_value)
        fail("A");
    if (closed.b_value != pipeline.b_value)
        fail("B");
    if (closed.deg_sigma2 != pipeline.deg_sigma2)
        fail("deg_sigma2");
    if (closed.deg_sigma3 != pipeline.deg_sigma3)
        fail("deg_sigma3");
    if (closed.mult_x != pipeline.mult_x)
        fail("mult_X");
    if (closed.segre_x_sigma2 != pipeline.segre_x_sigma2)
        fail("segre_x_sigma2");
    if (closed.segre_diag != pipeline.segre_diag)
        fail("segre_diag");
    SecantReport merged = closed;
    merged.method = Method::cross_validated;
    for (const auto& w : pipeline.warnings)
        if (std::find(merged.warnings.begin(), merged.warnings.end(), w) ==
            merged.warnings.end())
            merged.warnings.push_back(w);
    return merged;
}

/// Runs both paths and checks that they agree on every field.
inline SecantReport cross_validate(const SegreIntegralTable& table) {
    return merge_validated(closed_form_report(table), derive_via_blowup(table));
}

} // namespace secv

#endif
