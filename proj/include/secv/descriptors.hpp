#ifndef SECV_DESCRIPTORS_HPP
#define SECV_DESCRIPTORS_HPP

#include <cstdio>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "secv/errors.hpp"
#include "secv/rational.hpp"
#include "secv/series.hpp"
#include "secv/xring.hpp"

namespace secv {

/// Integral table of an embedded smooth curve of degree d and genus g:
/// T[0][0] = d, T[0][1] = deg s_1(T_C) = 2g - 2. The embedding is certainly
/// 5-very ample when d >= 2g + 5 (a sufficient condition only).
inline SegreIntegralTable curve(const Rational& d, const Rational& g) {
    SegreIntegralTable::Entries entries;
    entries[{0, 0}] = d;
    entries[{0, 1}] = 2 * g - 2;
    const Ample5 flag = (d >= 2 * g + 5) ? Ample5::yes : Ample5::unknown;
    return SegreIntegralTable(1, "curve(" + to_string(d) + "," + to_string(g) + ")", flag,
                              std::move(entries));
}

/// Integral table of an embedded smooth surface with d = h^2, pi = h.K,
/// kappa = K^2, e = c_2: the tangent Segre classes are s_1 = K and
/// s_2 = kappa - e, so T[0][1] = pi, T[1][1] = kappa, T[0][2] = kappa - e.
inline SegreIntegralTable surface(const Rational& d, const Rational& pi, const Rational& kappa,
                                  const Rational& e) {
    SegreIntegralTable::Entries entries;
    entries[{0, 0}] = d;
    entries[{0, 1}] = pi;
    entries[{1, 1}] = kappa;
    entries[{0, 2}] = kappa - e;
    return SegreIntegralTable(2,
                              "surface(" + to_string(d) + "," + to_string(pi) + "," +
                                  to_string(kappa) + "," + to_string(e) + ")",
                              Ample5::unknown, std::move(entries));
}

/// Integral table of P^n embedded by O(t). With s_k(T_{P^n}) = sigma_k H^k,
/// sigma_k = (-1)^k C(n+k, k), and h = t H:
///   d = t^n,  T[a][b] = sigma_a sigma_b t^{n-a-b}.
/// O(t) is t-very ample and no more: for t < 5 six collinear points obstruct
/// 5-very ampleness, so the flag is a definite no there.
inline SegreIntegralTable veronese(int n, int t) {
    if (n < 1 || t < 1)
        throw InvalidArgument("veronese requires n >= 1 and t >= 1");
    std::vector<Rational> chern(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
        chern[static_cast<size_t>(k)] = Rational(binomial(n + 1, k));
    const std::vector<Rational> sigma = segre_from_chern(chern, n);
    SegreIntegralTable::Entries entries;
    for (int a = 0; a <= n; ++a)
        for (int b = a; a + b <= n; ++b) {
            Rational scale = 1;
            for (int i = 0; i < n - a - b; ++i)
                scale *= t;
            entries[{a, b}] = sigma[static_cast<size_t>(a)] * sigma[static_cast<size_t>(b)] * scale;
        }
    return SegreIntegralTable(n, "veronese(" + std::to_string(n) + "," + std::to_string(t) + ")",
                              t >= 5 ? Ample5::yes : Ample5::no, std::move(entries));
}

/// Parses the table file format: a JSON object with integer "n", optional
/// "name", optional "ample5" ("yes"/"no"/"unknown") and "table" mapping keys
/// "a,b" (a <= b) to rational strings. Example:
///   {"n":1, "name":"rational sextic", "table":{"0,0":"6", "0,1":"-2"}}
inline SegreIntegralTable from_text(std::string_view document) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(document);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed table document: ") + e.what());
    }
    if (!doc.is_object())
        throw ParseError("table document must be an object");
    if (!doc.contains("n") || !doc["n"].is_number_integer())
        throw ParseError("table document needs an integer field \"n\"");
    const int n = doc["n"].get<int>();
    if (n < 1)
        throw ParseError("table dimension n must be >= 1");
    std::string name;
    if (doc.contains("name")) {
        if (!doc["name"].is_string())
            throw ParseError("field \"name\" must be a string");
        name = doc["name"].get<std::string>();
    }
    Ample5 flag = Ample5::unknown;
    if (doc.contains("ample5")) {
        if (!doc["ample5"].is_string())
            throw ParseError("field \"ample5\" must be a string");
        flag = ample5_from_string(doc["ample5"].get<std::string>());
    }
    if (!doc.contains("table") || !doc["table"].is_object())
        throw ParseError("table document needs an object field \"table\"");
    SegreIntegralTable::Entries entries;
    for (const auto& [key, value] : doc["table"].items()) {
        int a = 0, b = 0;
        char extra = 0;
        if (std::sscanf(key.c_str(), "%d,%d%c", &a, &b, &extra) != 2)
            throw ParseError("invalid table key \"" + key + "\" (expected \"a,b\")");
        if (a < 0 || a > b)
            throw ParseError("table key \"" + key + "\" must satisfy 0 <= a <= b");
        if (a + b > n)
            throw ParseError("table key \"" + key + "\" exceeds the dimension n = " +
                             std::to_string(n));
        if (!value.is_string())
            throw ParseError("table entry \"" + key + "\" must be a rational string");
        entries[{a, b}] = parse_rational(value.get<std::string>());
    }
    return SegreIntegralTable(n, std::move(name), flag, std::move(entries));
}

/// Serializes a table in the file format accepted by from_text. The ample5
/// field is included unless it is unknown.
inline std::string render(const SegreIntegralTable& table) {
    nlohmann::json doc;
    doc["n"] = table.dim();
    if (!table.name().empty())
        doc["name"] = table.name();
    if (table.ample5() != Ample5::unknown)
        doc["ample5"] = to_string(table.ample5());
    nlohmann::json entries = nlohmann::json::object();
    for (const auto& [key, value] : table.entries())
        entries[std::to_string(key.first) + "," + std::to_string(key.second)] = to_string(value);
    doc["table"] = entries;
    return doc.dump();
}

} // namespace secv

#endif
