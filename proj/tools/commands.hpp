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
/// \file commands.hpp
///
/// The bpick command implementations. Each command returns an exit code and
/// a JSON document; main() only parses arguments and prints.
///
/// Exit codes: 0 success, 2 parse or validation error, 3 unsolvable,
/// 4 verification failure.
///

#ifndef BPICK_TOOLS_COMMANDS_HPP
#define BPICK_TOOLS_COMMANDS_HPP

#include <algorithm>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "bpick/bpick.hpp"
#include "bpick/json_io.hpp"

namespace bpick::cli {

enum Exit : int { Ok = 0, ParseError = 2, Unsolvable = 3, VerificationFailed = 4 };

struct Options {
    std::string mode = "auto";  ///< auto | exact | float
    bool relaxed = false;
    std::optional<std::string> param;  ///< constant or path to a solution file
    std::optional<double> tol;         ///< verification tolerance
    std::vector<std::size_t> order;    ///< reduction order (node indices)
    std::optional<unsigned long long> seed;
    Complex at{0.0, 0.0};
    std::optional<Complex> tau, sigma;
};

struct Result {
    int exit = Ok;
    Json output;
};

namespace detail {

inline ToleranceProfile profile(const Options& o)
{
    ToleranceProfile t;
    if (o.tol)
        t.val = *o.tol;
    return t;
}

inline bool use_exact(const Options& o, bool all_exact)
{
    if (o.mode == "exact")
        return true;
    if (o.mode == "float")
        return false;
    if (o.mode != "auto")
        throw Error(ErrorCode::Parse, "unknown mode \"" + o.mode + "\" (auto, exact, float)");
    return all_exact;
}

inline int exit_for(ErrorCode c)
{
    switch (c) {
    case ErrorCode::InternalVerificationFailure: return VerificationFailed;
    case ErrorCode::NotPositiveDefinite: return Unsolvable;
    default: return ParseError;
    }
}

/// Runs `body`, mapping library and JSON exceptions to exit codes.
template <class F>
Result guarded(F&& body)
{
    try {
        return body();
    } catch (const Error& e) {
        return {exit_for(e.code()), Json{{"status", "error"}, {"error", to_string(e.code())}, {"message", e.what()}}};
    } catch (const Json::exception& e) {
        return {ParseError, Json{{"status", "error"}, {"error", "Parse"}, {"message", e.what()}}};
    }
}

template <class F>
auto with_scalar(bool exact, F&& f)
{
    if (exact)
        return f(Rational{});
    return f(double{});
}

inline Json unsolvable_json(Classification c, const std::string& why)
{
    return {{"status", "unsolvable"}, {"classification", to_string(c)}, {"reason", why}};
}

template <RealScalar T>
Json slacks_json(const std::vector<T>& s)
{
    Json a = Json::array();
    for (const auto& v : s)
        a.push_back(scalar_json(v));
    return a;
}

template <RealScalar T>
Result check_pick(const BoundaryProblem<T>& p, const Options& o)
{
    const auto tol = profile(o);
    const auto pm = build_pick_matrix(p, tol);
    const auto c = pm.classification;
    const bool strict = c == Classification::PositiveDefinite || c == Classification::MinimallyPositive;
    const bool relaxed = c != Classification::Indefinite;
    Json out{{"class", "pick"},
             {"scalar", is_exact_v<T> ? "exact" : "float"},
             {"classification", to_string(c)},
             {"rank", pm.rank},
             {"matrix", matrix_json(pm.entries)},
             {"solvable_strict", strict},
             {"solvable_relaxed", relaxed},
             {"determinate", c == Classification::MinimallyPositive},
             {"marginal_flags",
              {{"marginal", pm.marginal}, {"min_eigenvalue", pm.min_eigenvalue}, {"slacks", slacks_json(pm.slacks)}}}};
    return {(o.relaxed ? relaxed : strict) ? Ok : Unsolvable, out};
}

inline Result check_schur(const CircleProblemFile& f, const Options& o)
{
    const auto cm = circle_pick_matrix(f.problem, profile(o));
    const auto c = cm.classification;
    const bool strict = c == Classification::PositiveDefinite || c == Classification::MinimallyPositive;
    Json out{{"class", "schur"},
             {"classification", to_string(c)},
             {"rank", cm.rank},
             {"matrix", matrix_json(cm.entries)},
             {"real_symmetric", cm.real_symmetric},
             {"solvable_strict", strict},
             {"solvable_relaxed", c != Classification::Indefinite},
             {"determinate", c == Classification::MinimallyPositive},
             {"marginal_flags",
              {{"marginal", cm.marginal}, {"min_eigenvalue", cm.min_eigenvalue}, {"slacks", slacks_json(cm.slacks)}}}};
    return {strict ? Ok : Unsolvable, out};
}

/// The free parameter: a constant ("0", "-2/3", 1.5) or a solution file.
template <RealScalar T>
RationalFunction<T> load_parameter(const std::string& spec)
{
    try {
        const auto j = Json::parse(spec);
        if (j.is_number() || j.is_string()) {
            const auto s = parse_scalar(j, false, "--param");
            if constexpr (is_exact_v<T>)
                return RationalFunction<T>(s.q);
            else
                return RationalFunction<T>(s.d);
        }
    } catch (const Json::exception&) {
    }
    try {
        const auto s = parse_rational(spec);
        return RationalFunction<T>(scalar_cast<T>(s));
    } catch (const Error&) {
    }
    return parse_solution(read_json_file(spec)).template function<T>();
}

template <RealScalar T>
Result solve_pick(const BoundaryProblem<T>& p, const Options& o)
{
    const auto tol = profile(o);
    if (o.relaxed) {
        const auto r = solve_relaxed(p, o.order, tol);
        if (!r)
            return {Unsolvable, unsolvable_json(r.classification, r.reason)};
        const auto rep = verify_solution(p, *r.f, VerifyMode::Relaxed, tol);
        Json out = solution_json(*r.f, VerifyMode::Relaxed, r.determinate);
        out["classification"] = to_string(r.classification);
        out["verification"] = report_json(rep);
        return {rep.pass ? Ok : VerificationFailed, out};
    }
    if (o.param) {
        const auto pm = build_pick_matrix(p, tol);
        if (pm.classification != Classification::PositiveDefinite)
            return {Unsolvable, unsolvable_json(pm.classification, "a free parameter needs a positive definite Pick matrix")};
        const auto tb = compute_tables(p, tol);
        const auto pr = build_parametrization(tb);
        const auto inst = instantiate_solution(pr, load_parameter<T>(*o.param), tol);
        const auto rep = verify_solution(p, inst.f, VerifyMode::Strict, tol);
        Json out = solution_json(inst.f, VerifyMode::Strict, false);
        out["classification"] = to_string(pm.classification);
        out["forbidden_hits"] = inst.violated;
        out["verification"] = report_json(rep);
        return {rep.pass ? Ok : VerificationFailed, out};
    }
    const auto r = solve_strict(p, tol, o.seed, o.order);
    if (!r)
        return {Unsolvable, unsolvable_json(r.classification, r.reason)};
    const auto rep = verify_solution(p, *r.f, VerifyMode::Strict, tol);
    Json out = solution_json(*r.f, VerifyMode::Strict, r.determinate);
    out["classification"] = to_string(r.classification);
    out["verification"] = report_json(rep);
    return {rep.pass ? Ok : VerificationFailed, out};
}

inline Result solve_schur_file(const CircleProblemFile& f, const Options& o)
{
    const auto tau = o.tau ? o.tau : f.tau;
    const auto sigma = o.sigma ? o.sigma : f.sigma;
    const auto r = solve_schur(f.problem, tau, sigma, profile(o));
    if (!r)
        return {Unsolvable, unsolvable_json(r.classification, r.reason)};
    Json out = circle_solution_json(r);
    out["classification"] = to_string(r.classification);
    return {Ok, out};
}

template <RealScalar T>
Result parametrize_pick(const BoundaryProblem<T>& p, const Options& o)
{
    const auto tol = profile(o);
    const auto pm = build_pick_matrix(p, tol);
    if (pm.classification != Classification::PositiveDefinite) {
        const std::string why = pm.classification == Classification::MinimallyPositive
                                    ? "determinate; unique solution via solve"
                                    : "no parametrization: Pick matrix is not positive definite";
        return {Unsolvable, unsolvable_json(pm.classification, why)};
    }
    const auto tb = compute_tables(p, tol);
    const auto pr = build_parametrization(tb);
    if (!determinant_invariant_holds(pr, tol))
        throw Error(ErrorCode::InternalVerificationFailure, "ad - bc differs from m prod (z - x_k)^2");
    Json out = parametrization_json(pr, tb);
    out["scalar"] = is_exact_v<T> ? "exact" : "float";
    return {Ok, out};
}

}  // namespace detail

inline ProblemFile load_problem(const std::string& path)
{
    return parse_problem(read_json_file(path));
}

inline Result cmd_check(const std::string& path, const Options& o)
{
    return detail::guarded([&]() -> Result {
        const auto pf = load_problem(path);
        if (pf.kind == ProblemFile::Kind::Schur)
            return detail::check_schur(pf.schur, o);
        return detail::with_scalar(detail::use_exact(o, pf.pick.all_exact()), [&](auto tag) {
            using T = decltype(tag);
            if constexpr (is_exact_v<T>)
                return detail::check_pick(pf.pick.exact(), o);
            else
                return detail::check_pick(pf.pick.numeric(), o);
        });
    });
}

inline Result cmd_solve(const std::string& path, const Options& o)
{
    return detail::guarded([&]() -> Result {
        const auto pf = load_problem(path);
        if (pf.kind == ProblemFile::Kind::Schur)
            return detail::solve_schur_file(pf.schur, o);
        return detail::with_scalar(detail::use_exact(o, pf.pick.all_exact()), [&](auto tag) {
            using T = decltype(tag);
            if constexpr (is_exact_v<T>)
                return detail::solve_pick(pf.pick.exact(), o);
            else
                return detail::solve_pick(pf.pick.numeric(), o);
        });
    });
}

inline Result cmd_parametrize(const std::string& path, const Options& o)
{
    return detail::guarded([&]() -> Result {
        const auto pf = load_problem(path);
        if (pf.kind != ProblemFile::Kind::Pick)
            throw Error(ErrorCode::Parse, "parametrize needs a \"pick\" problem");
        return detail::with_scalar(detail::use_exact(o, pf.pick.all_exact()), [&](auto tag) {
            using T = decltype(tag);
            if constexpr (is_exact_v<T>)
                return detail::parametrize_pick(pf.pick.exact(), o);
            else
                return detail::parametrize_pick(pf.pick.numeric(), o);
        });
    });
}

inline Result cmd_eval(const std::string& solution_path, const Options& o)
{
    return detail::guarded([&]() -> Result {
        const auto sol = parse_solution(read_json_file(solution_path));
        const auto f = sol.complex ? sol.complex_function() : sol.function<double>().template cast<Complex>();
        const Complex v = f(o.at);
        Json value = std::isfinite(v.real()) && std::isfinite(v.imag()) ? scalar_json(v) : Json("inf");
        return {Ok, Json{{"z", scalar_json(o.at)}, {"value", value}}};
    });
}

inline Result cmd_verify(const std::string& problem_path, const std::string& solution_path, const Options& o)
{
    return detail::guarded([&]() -> Result {
        const auto pf = load_problem(problem_path);
        const auto sol = parse_solution(read_json_file(solution_path));
        const auto tol = detail::profile(o);
        if (pf.kind == ProblemFile::Kind::Schur) {
            const auto phi = sol.complex_function();
            const auto checks = verify_circle_solution(pf.schur.problem, phi, tol);
            const auto disk = sample_schur_membership(phi, tol);
            bool pass = disk.pass;
            Json nodes = Json::array();
            for (const auto& c : checks) {
                pass = pass && c.ok;
                nodes.push_back({{"index", c.index}, {"value", scalar_json(c.value)}, {"angular_derivative", c.angular}, {"pass", c.ok}});
            }
            return {pass ? Ok : VerificationFailed,
                    Json{{"mode", "strict"}, {"pass", pass}, {"nodes", nodes}, {"disk", {{"pass", disk.pass}}}}};
        }
        if (sol.complex)
            throw Error(ErrorCode::Parse, "a pick problem needs real coefficients");
        const auto mode = o.relaxed ? VerifyMode::Relaxed : VerifyMode::Strict;
        const bool exact = detail::use_exact(o, pf.pick.all_exact() && sol.all_exact);
        return detail::with_scalar(exact, [&](auto tag) -> Result {
            using T = decltype(tag);
            const auto p = [&] {
                if constexpr (is_exact_v<T>)
                    return pf.pick.exact();
                else
                    return pf.pick.numeric();
            }();
            const auto rep = verify_solution(p, sol.function<T>(), mode, tol);
            Json out = report_json(rep);
            out["scalar"] = is_exact_v<T> ? "exact" : "float";
            return {rep.pass ? Ok : VerificationFailed, out};
        });
    });
}

inline Result cmd_schur_check(const std::string& path, const Options& o)
{
    return detail::guarded([&]() -> Result {
        const auto pf = load_problem(path);
        if (pf.kind != ProblemFile::Kind::Schur)
            throw Error(ErrorCode::Parse, "schur-check needs a \"schur\" problem");
        return detail::check_schur(pf.schur, o);
    });
}

inline Result cmd_schur_solve(const std::string& path, const Options& o)
{
    return detail::guarded([&]() -> Result {
        const auto pf = load_problem(path);
        if (pf.kind != ProblemFile::Kind::Schur)
            throw Error(ErrorCode::Parse, "schur-solve needs a \"schur\" problem");
        return detail::solve_schur_file(pf.schur, o);
    });
}

/// Runs check and solve on every *.json file of a directory.
inline Result cmd_corpus(const std::string& dir, const Options& o)
{
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir))
        return {ParseError, Json{{"status", "error"}, {"error", "Parse"}, {"message", "not a directory: " + dir}}};
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.path().extension() == ".json")
            files.push_back(e.path());
    std::sort(files.begin(), files.end());
    Json rows = Json::array();
    int worst = Ok;
    for (const auto& f : files) {
        const auto c = cmd_check(f.string(), o);
        const auto s = cmd_solve(f.string(), o);
        if (c.exit == ParseError || s.exit == ParseError || s.exit == VerificationFailed)
            worst = std::max(worst, s.exit == VerificationFailed ? int(VerificationFailed) : int(ParseError));
        rows.push_back({{"file", f.filename().string()},
                        {"check_exit", c.exit},
                        {"classification", c.output.value("classification", "")},
                        {"solve_exit", s.exit},
                        {"degree", s.output.value("degree", Json())}});
    }
    return {worst, Json{{"files", rows}}};
}

}  // namespace bpick::cli

#endif  // BPICK_TOOLS_COMMANDS_HPP
