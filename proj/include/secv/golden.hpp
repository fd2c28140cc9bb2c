#ifndef SECV_GOLDEN_HPP
#define SECV_GOLDEN_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "secv/blowup_ring.hpp"
#include "secv/descriptors.hpp"
#include "secv/secant.hpp"
#include "secv/series.hpp"

namespace secv {

struct GoldenResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

namespace detail {

template <typename T>
std::optional<std::string> expect_eq(const T& got, const T& want) {
    if (got == want)
        return std::nullopt;
    return "expected " + to_string(want) + ", got " + to_string(got);
}

inline std::optional<std::string> expect_true(bool got, const std::string& what) {
    if (got)
        return std::nullopt;
    return what;
}

} // namespace detail

/// The built-in regression corpus behind the `check` command: classical
/// benchmark values plus internal consistency checks, all exact. Needs no
/// files or network.
inline std::vector<GoldenResult> run_golden_corpus() {
    using detail::expect_eq;
    using detail::expect_true;

    struct Item {
        std::string name;
        std::function<std::optional<std::string>()> run;
    };

    const std::vector<Item> items = {
        {"sigma3 of rational normal curves d=5..8 is 1, 4, 10, 20",
         [] {
             const Rational want[] = {1, 4, 10, 20};
             for (int d = 5; d <= 8; ++d)
                 if (auto err = expect_eq(deg_sigma3(curve(d, 0)), want[d - 5]))
                     return std::optional<std::string>("d=" + std::to_string(d) + ": " + *err);
             return std::optional<std::string>();
         }},
        {"sigma3 of the elliptic normal curve (d=7, g=1) is 7",
         [] { return expect_eq(deg_sigma3(curve(7, 1)), Rational(7)); }},
        {"sigma2 of rational normal curves d=4..10 is C(d-1, 2)",
         [] {
             for (int d = 4; d <= 10; ++d)
                 if (auto err = expect_eq(deg_sigma2(curve(d, 0)),
                                          Rational(binomial(d - 1, 2))))
                     return std::optional<std::string>("d=" + std::to_string(d) + ": " + *err);
             return std::optional<std::string>();
         }},
        {"sigma2 of the 3-uple Veronese surface is 15",
         [] { return expect_eq(deg_sigma2(veronese(2, 3)), Rational(15)); }},
        {"sigma3 of the 5-uple Veronese surface is 859",
         [] { return expect_eq(deg_sigma3(veronese(2, 5)), Rational(859)); }},
        {"surface formula at (25, -15, 9, 3) gives 859",
         [] { return expect_eq(surface_sigma3(25, -15, 9, 3), Rational(859)); }},
        {"cross-validation on curve(6, 0): A=16, B=48, sigma2=10, sigma3=4, mult=4",
         [] {
             const SecantReport report = cross_validate(curve(6, 0));
             if (auto err = expect_eq(report.a_value, Rational(16)))
                 return std::optional<std::string>("A: " + *err);
             if (auto err = expect_eq(report.b_value, Rational(48)))
                 return std::optional<std::string>("B: " + *err);
             if (auto err = expect_eq(report.deg_sigma2, Rational(10)))
                 return std::optional<std::string>("deg_sigma2: " + *err);
             if (auto err = expect_eq(report.deg_sigma3, Rational(4)))
                 return std::optional<std::string>("deg_sigma3: " + *err);
             if (auto err = expect_eq(report.mult_x, Rational(4)))
                 return std::optional<std::string>("mult_X: " + *err);
             return std::optional<std::string>();
         }},
        {"cross-validation on veronese(2, 5): sigma2=222, sigma3=859, mult=21",
         [] {
             const SecantReport report = cross_validate(veronese(2, 5));
             if (auto err = expect_eq(report.deg_sigma2, Rational(222)))
                 return std::optional<std::string>("deg_sigma2: " + *err);
             if (auto err = expect_eq(report.deg_sigma3, Rational(859)))
                 return std::optional<std::string>("deg_sigma3: " + *err);
             if (auto err = expect_eq(report.mult_x, Rational(21)))
                 return std::optional<std::string>("mult_X: " + *err);
             return std::optional<std::string>();
         }},
        {"cross-validation on veronese(3, 5) is consistent and integral",
         [] {
             const SecantReport report = cross_validate(veronese(3, 5));
             return expect_true(is_integer(report.deg_sigma3) && is_integer(report.deg_sigma2),
                                "secant degrees of a genuine embedding must be integers");
         }},
        {"multiplicity along X equals d - 2^n on the benchmark descriptors",
         [] {
             if (auto err = expect_eq(mult_sigma2_along_x(curve(6, 0)), Rational(4)))
                 return std::optional<std::string>("curve(6,0): " + *err);
             if (auto err = expect_eq(mult_sigma2_along_x(veronese(2, 5)), Rational(21)))
                 return std::optional<std::string>("veronese(2,5): " + *err);
             return std::optional<std::string>();
         }},
        {"coefficient rows: (9, 3) for n=1, (30, 15, 3) for n=2, and a_{n,n} = 3",
         [] {
             if (coeff_a(1, 0) != 9 || coeff_a(1, 1) != 3)
                 return std::optional<std::string>("row n=1 is not (9, 3)");
             if (coeff_a(2, 0) != 30 || coeff_a(2, 1) != 15 || coeff_a(2, 2) != 3)
                 return std::optional<std::string>("row n=2 is not (30, 15, 3)");
             for (int n = 1; n <= 8; ++n)
                 if (coeff_a(n, n) != 3)
                     return std::optional<std::string>("a_{n,n} != 3 at n = " +
                                                       std::to_string(n));
             return std::optional<std::string>();
         }},
        {"Todd quotient identity holds to order 12",
         [] { return expect_true(todd_identity_check(12), "series identity failed"); }},
        {"pushforwards of the divisor powers at n=2 match (d-4), 8s1+3dh, -16s2+6dh^2",
         [] {
             for (const Rational d : {Rational(6), Rational(25)}) {
                 const SegreIntegralTable table = surface(d, -3, 9, 3);
                 const BlowupClass divisor = self_intersection_divisor(2);
                 const BlowupClass sq = divisor * divisor;
                 AmbientClass want = (d - 4) * AmbientClass::unit(2);
                 if (push_to_X(sq, table) != want)
                     return std::optional<std::string>("square at d=" + to_string(d));
                 want = 8 * AmbientClass::segre(2, 1) + 3 * d * AmbientClass::h_power(2, 1);
                 if (push_to_X(sq * divisor, table) != want)
                     return std::optional<std::string>("cube at d=" + to_string(d));
                 want = -16 * AmbientClass::segre(2, 2) + 6 * d * AmbientClass::h_power(2, 2);
                 if (push_to_X(sq * sq, table) != want)
                     return std::optional<std::string>("fourth power at d=" + to_string(d));
             }
             return std::optional<std::string>();
         }},
        {"curve formula and its literature variant differ by 8(1 - g)",
         [] {
             for (int d = 5; d <= 9; ++d)
                 for (int g = 0; g <= 3; ++g) {
                     const Rational diff =
                         curve_sigma3_literature(d, g) - curve_sigma3(d, g);
                     if (diff != Rational(8) * (1 - g))
                         return std::optional<std::string>(
                             "difference is " + to_string(diff) + " at d=" +
                             std::to_string(d) + ", g=" + std::to_string(g));
                 }
             return std::optional<std::string>();
         }},
    };

    std::vector<GoldenResult> results;
    results.reserve(items.size());
    for (const auto& item : items) {
        GoldenResult r;
        r.name = item.name;
        try {
            auto err = item.run();
            r.pass = !err.has_value();
            r.detail = err.value_or("");
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        results.push_back(std::move(r));
    }
    return results;
}

} // namespace secv

#endif
