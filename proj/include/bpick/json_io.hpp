/*
   Copyright 2026 The bpick Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

///
/// \file json_io.hpp
///
/// JSON reading and writing of problems, solutions, parametrizations and
/// verification reports (nlohmann::json).
///
/// Problems:
///
///     {"class": "pick", "nodes": [...], "targets": [...], "derivs": [...]}
///     {"class": "schur", "xi": [{"re": .., "im": ..}], "eta": [...], "rho": [...],
///      "tau": {"re": .., "im": ..}, "sigma": {...}}          tau, sigma optional
///
/// Real scalars are JSON numbers, "p/q" or decimal strings, and targets may
/// also be "inf". A problem is exact when every scalar is an integer or a
/// string; any number with a fractional part makes it a float problem.
///

#ifndef BPICK_JSON_IO_HPP
#define BPICK_JSON_IO_HPP

#include <cmath>
#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "schur_disk.hpp"
#include "solver.hpp"

namespace bpick {

using Json = nlohmann::json;

/// A real scalar as read from JSON, kept in both representations.
struct RawScalar {
    bool infinite = false;
    bool exact_literal = true;  ///< integer or string in the source
    Rational q;
    double d = 0;
};

inline bool is_inf_token(std::string s)
{
    for (auto& c : s)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s == "inf" || s == "+inf" || s == "infinity" || s == "+infinity";
}

inline RawScalar parse_scalar(const Json& j, bool allow_inf, const std::string& what)
{
    RawScalar r;
    if (j.is_number_integer()) {
        r.q = Rational(j.get<std::int64_t>());
        r.d = static_cast<double>(r.q);
    } else if (j.is_number_unsigned()) {
        r.q = Rational(BigInt(j.get<std::uint64_t>()));
        r.d = static_cast<double>(r.q);
    } else if (j.is_number_float()) {
        r.d = j.get<double>();
        if (!std::isfinite(r.d))
            throw Error(ErrorCode::Parse, what + ": non-finite number");
        r.exact_literal = false;
        r.q = rational_from_shortest(r.d);
    } else if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (is_inf_token(s)) {
            if (!allow_inf)
                throw Error(ErrorCode::Parse, what + ": infinity not allowed here");
            r.infinite = true;
            return r;
        }
        r.q = parse_rational(s);
        r.d = static_cast<double>(r.q);
    } else {
        throw Error(ErrorCode::Parse, what + ": expected a number or string");
    }
    return r;
}

inline std::vector<RawScalar> parse_scalar_array(const Json& j, const char* key, bool allow_inf)
{
    if (!j.contains(key) || !j.at(key).is_array())
        throw Error(ErrorCode::Parse, std::string("missing array \"") + key + "\"");
    std::vector<RawScalar> out;
    std::size_t k = 0;
    for (const auto& e : j.at(key))
        out.push_back(parse_scalar(e, allow_inf, std::string(key) + "[" + std::to_string(k++) + "]"));
    return out;
}

inline Complex parse_complex(const Json& j, const std::string& what)
{
    if (j.is_number())
        return {j.get<double>(), 0.0};
    if (j.is_object() && j.contains("re")) {
        const double re = j.at("re").get<double>();
        const double im = j.contains("im") ? j.at("im").get<double>() : 0.0;
        return {re, im};
    }
    if (j.is_array() && j.size() == 2)
        return {j[0].get<double>(), j[1].get<double>()};
    throw Error(ErrorCode::Parse, what + ": expected {\"re\": .., \"im\": ..}");
}

/// Real-line problem in raw form.
struct PickProblemFile {
    std::vector<RawScalar> nodes, targets, derivs;

    bool all_exact() const
    {
        for (const auto* v : {&nodes, &targets, &derivs})
            for (const auto& s : *v)
                if (!s.infinite && !s.exact_literal)
                    return false;
        return true;
    }

    BoundaryProblem<Rational> exact() const
    {
        BoundaryProblem<Rational> p;
        for (const auto& s : nodes)
            p.nodes.push_back(s.q);
        for (const auto& s : targets)
            p.targets.push_back(s.infinite ? ExtReal<Rational>::infinity() : ExtReal<Rational>(s.q));
        for (const auto& s : derivs)
            p.derivs.push_back(s.q);
        return p;
    }

    BoundaryProblem<double> numeric() const
    {
        BoundaryProblem<double> p;
        for (const auto& s : nodes)
            p.nodes.push_back(s.d);
        for (const auto& s : targets)
            p.targets.push_back(s.infinite ? ExtReal<double>::infinity() : ExtReal<double>(s.d));
        for (const auto& s : derivs)
            p.derivs.push_back(s.d);
        return p;
    }
};

struct CircleProblemFile {
    CircleProblem problem;
    std::optional<Complex> tau, sigma;
};

struct ProblemFile {
    enum class Kind { Pick, Schur } kind = Kind::Pick;
    PickProblemFile pick;
    CircleProblemFile schur;
};

inline ProblemFile parse_problem(const Json& j)
{
    if (!j.is_object())
        throw Error(ErrorCode::Parse, "problem must be a JSON object");
    const std::string cls = j.value("class", std::string("pick"));
    ProblemFile out;
    if (cls == "pick") {
        out.kind = ProblemFile::Kind::Pick;
        out.pick.nodes = parse_scalar_array(j, "nodes", false);
        out.pick.targets = parse_scalar_array(j, "targets", true);
        out.pick.derivs = parse_scalar_array(j, "derivs", false);
        if (out.pick.targets.size() != out.pick.nodes.size() || out.pick.derivs.size() != out.pick.nodes.size())
            throw Error(ErrorCode::Parse, "nodes, targets and derivs differ in length");
        if (out.pick.nodes.empty())
            throw Error(ErrorCode::Parse, "problem has no nodes");
    } else if (cls == "schur") {
        out.kind = ProblemFile::Kind::Schur;
        for (const char* key : {"xi", "eta", "rho"})
            if (!j.contains(key) || !j.at(key).is_array())
                throw Error(ErrorCode::Parse, std::string("missing array \"") + key + "\"");
        auto& cp = out.schur.problem;
        for (const auto& e : j.at("xi"))
            cp.xi.push_back(parse_complex(e, "xi"));
        for (const auto& e : j.at("eta"))
            cp.eta.push_back(parse_complex(e, "eta"));
        for (const auto& e : parse_scalar_array(j, "rho", false))
            cp.rho.push_back(e.d);
        if (j.contains("tau") && !j.at("tau").is_null())
            out.schur.tau = parse_complex(j.at("tau"), "tau");
        if (j.contains("sigma") && !j.at("sigma").is_null())
            out.schur.sigma = parse_complex(j.at("sigma"), "sigma");
        if (cp.eta.size() != cp.xi.size() || cp.rho.size() != cp.xi.size())
            throw Error(ErrorCode::Parse, "xi, eta and rho differ in length");
        if (cp.xi.empty())
            throw Error(ErrorCode::Parse, "problem has no nodes");
    } else {
        throw Error(ErrorCode::Parse, "unknown problem class \"" + cls + "\"");
    }
    return out;
}

inline Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::Parse, "cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw Error(ErrorCode::Parse, path + ": " + e.what());
    }
}

// ---------------------------------------------------------------------------
// writing

/// Exact values print as JSON integers when they fit, else as "p/q".
inline Json scalar_json(const Rational& x)
{
    if (denominator(x) == 1) {
        const BigInt n = numerator(x);
        if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max())
            return static_cast<std::int64_t>(n);
    }
    return to_string(x);
}

inline Json scalar_json(double x)
{
    if (std::isnan(x))
        return nullptr;
    if (std::isinf(x))
        return x > 0 ? "inf" : "-inf";
    return x;
}

inline Json scalar_json(const Complex& z) { return Json{{"re", scalar_json(z.real())}, {"im", scalar_json(z.imag())}}; }

template <Scalar T>
Json scalar_json(const Extended<T>& e)
{
    return e.is_infinite() ? Json("inf") : scalar_json(e.value());
}

/// Row-major array of arrays.
template <class T>
Json matrix_json(const Matrix<T>& m)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(scalar_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

template <Scalar T>
Json poly_json(const Polynomial<T>& p)
{
    Json a = Json::array();
    for (const auto& c : p.coeffs())
        a.push_back(scalar_json(c));
    if (a.empty())
        a.push_back(0);
    return a;
}

template <RealScalar T>
Polynomial<T> parse_poly(const Json& j, const char* key)
{
    std::vector<T> c;
    for (const auto& s : parse_scalar_array(j, key, false)) {
        if constexpr (is_exact_v<T>)
            c.push_back(s.q);
        else
            c.push_back(s.d);
    }
    return Polynomial<T>(std::move(c));
}

inline Polynomial<Complex> parse_complex_poly(const Json& j, const char* key)
{
    if (!j.contains(key) || !j.at(key).is_array())
        throw Error(ErrorCode::Parse, std::string("missing array \"") + key + "\"");
    std::vector<Complex> c;
    for (const auto& e : j.at(key))
        c.push_back(parse_complex(e, key));
    return Polynomial<Complex>(std::move(c));
}

/// Raw coefficients of a stored solution, convertible to either backend.
struct SolutionFile {
    Json num, den;
    bool all_exact = true;
    bool complex = false;

    template <RealScalar T>
    RationalFunction<T> function() const
    {
        Json j{{"num", num}, {"den", den}};
        return RationalFunction<T>(parse_poly<T>(j, "num"), parse_poly<T>(j, "den"));
    }

    RationalFunction<Complex> complex_function() const
    {
        Json j{{"num", num}, {"den", den}};
        return RationalFunction<Complex>(parse_complex_poly(j, "num"), parse_complex_poly(j, "den"));
    }
};

inline SolutionFile parse_solution(const Json& j)
{
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw Error(ErrorCode::Parse, "solution needs \"num\" and \"den\" arrays");
    SolutionFile s;
    s.num = j.at("num");
    s.den = j.at("den");
    if (!s.num.is_array() || !s.den.is_array())
        throw Error(ErrorCode::Parse, "solution needs \"num\" and \"den\" arrays");
    for (const auto* a : {&s.num, &s.den})
        for (const auto& e : *a) {
            if (e.is_object())
                s.complex = true;
            else if (!parse_scalar(e, false, "coefficient").exact_literal)
                s.all_exact = false;
        }
    if (s.complex)
        s.all_exact = false;
    return s;
}

inline Json membership_json(const MembershipReport& m)
{
    Json v = Json::array();
    for (const auto& x : m.violations)
        v.push_back({{"kind", x.kind}, {"at", scalar_json(x.witness)}, {"value", scalar_json(x.value)}});
    return {{"pass", m.pass}, {"samples", m.samples}, {"violations", v}};
}

inline Json report_json(const VerificationReport& r)
{
    Json nodes = Json::array();
    for (const auto& c : r.nodes) {
        nodes.push_back({{"index", c.index},
                         {"x", scalar_json(c.x)},
                         {"pole", c.pole_expected},
                         {"value", scalar_json(c.value)},
                         {c.pole_expected ? "residue" : "derivative", scalar_json(c.measured)},
                         {"expected", scalar_json(c.expected)},
                         {"slack", scalar_json(c.slack)},
                         {"value_ok", c.value_ok},
                         {"derivative_ok", c.deriv_ok},
                         {"pass", c.ok()}});
    }
    return {{"mode", to_string(r.mode)},
            {"pass", r.pass},
            {"failed_nodes", r.failed_nodes()},
            {"nodes", nodes},
            {"membership", membership_json(r.membership)}};
}

template <RealScalar T>
Json solution_json(const RationalFunction<T>& f, VerifyMode mode, bool determinate)
{
    return {{"num", poly_json(f.num())},
            {"den", poly_json(f.den())},
            {"degree", f.degree()},
            {"mode", to_string(mode)},
            {"scalar", is_exact_v<T> ? "exact" : "float"},
            {"determinate", determinate}};
}

inline Json circle_solution_json(const SchurSolveResult& r)
{
    Json checks = Json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"index", c.index}, {"value", scalar_json(c.value)}, {"angular_derivative", c.angular}, {"pass", c.ok}});
    Json disk = Json::array();
    for (const auto& [z, a] : r.disk.violations)
        disk.push_back({{"at", scalar_json(z)}, {"abs", a}});
    return {{"num", poly_json(r.phi->num())},
            {"den", poly_json(r.phi->den())},
            {"degree", r.phi->degree()},
            {"mode", "strict"},
            {"determinate", r.determinate},
            {"tau", scalar_json(r.tau)},
            {"sigma", scalar_json(r.sigma)},
            {"verification",
             {{"pass", true}, {"nodes", checks}, {"disk", {{"pass", r.disk.pass}, {"samples", r.disk.samples}, {"violations", disk}}}}}};
}

template <RealScalar T>
Json parametrization_json(const Parametrization<T>& p, const RecursionTables<T>& tb)
{
    Json forbidden = Json::array();
    for (const auto& fv : p.forbidden)
        forbidden.push_back({{"node", scalar_json(fv.node)}, {"y", scalar_json(fv.y)}});
    Json s = Json::array(), t = Json::array();
    for (const auto& v : p.s)
        s.push_back(scalar_json(v));
    for (const auto& v : p.t)
        t.push_back(scalar_json(v));
    return {{"a", poly_json(p.coeff_matrix.a)},
            {"b", poly_json(p.coeff_matrix.b)},
            {"c", poly_json(p.coeff_matrix.c)},
            {"d", poly_json(p.coeff_matrix.d)},
            {"m", scalar_json(p.det_scale)},
            {"forbidden", forbidden},
            {"s", s},
            {"t", t},
            {"continued_fraction", continued_fraction_string(tb)},
            {"diagnostics", {{"min_node_gap", tb.min_node_gap()}, {"min_t", tb.min_t()}, {"s", s}}}};
}

}  // namespace bpick

#endif  // BPICK_JSON_IO_HPP
