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

#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

bpick::Complex parse_point(const std::string& s)
{
    std::istringstream in(s);
    double re = 0, im = 0;
    char comma = 0;
    in >> re;
    if (in >> comma && comma == ',')
        in >> im;
    if (in.fail())
        throw CLI::ValidationError("expected <re,im>, got " + s);
    return {re, im};
}

std::vector<std::size_t> parse_order(const std::string& s)
{
    std::vector<std::size_t> out;
    std::istringstream in(s);
    std::string item;
    while (std::getline(in, item, ','))
        out.push_back(std::stoul(item));
    return out;
}

}  // namespace

int main(int argc, char** argv)
{
    using namespace bpick::cli;
    CLI::App app{"bpick: boundary Nevanlinna-Pick interpolation"};
    app.require_subcommand(1);

    Options opt;
    std::string problem, solution, dir, at, order, tau, sigma;
    unsigned long long seed = 0;
    double tol = 0;
    bool strict = false;

    auto common = [&](CLI::App* c) {
        c->add_option("--mode", opt.mode, "auto | exact | float")->check(CLI::IsMember({"auto", "exact", "float"}));
        c->add_option("--tol", tol, "verification tolerance (default 1e-9)");
    };

    auto* check = app.add_subcommand("check", "classify the Pick matrix; exit 0 if solvable");
    check->add_option("problem", problem)->required();
    check->add_flag("--relaxed", opt.relaxed, "judge relaxed solvability");
    common(check);

    auto* solve = app.add_subcommand("solve", "construct and verify a solution");
    solve->add_option("problem", problem)->required();
    solve->add_flag("--relaxed", opt.relaxed, "solve the relaxed problem");
    solve->add_option("--param", opt.param, "free parameter: constant or solution file");
    solve->add_option("--order", order, "reduction order, comma-separated node indices");
    solve->add_option("--seed", seed, "random admissible constant parameter");
    solve->add_option("--tau", tau, "disk problems: tau as re,im");
    solve->add_option("--sigma", sigma, "disk problems: sigma as re,im");
    common(solve);

    auto* param = app.add_subcommand("parametrize", "coefficient matrix and forbidden values");
    param->add_option("problem", problem)->required();
    common(param);

    auto* eval = app.add_subcommand("eval", "evaluate a stored solution");
    eval->add_option("solution", solution)->required();
    eval->add_option("--at", at, "point re,im")->required();

    auto* verify = app.add_subcommand("verify", "verify a solution against a problem");
    verify->add_option("problem", problem)->required();
    verify->add_option("solution", solution)->required();
    auto* fs = verify->add_flag("--strict", strict, "strict conditions (default)");
    verify->add_flag("--relaxed", opt.relaxed, "relaxed conditions")->excludes(fs);
    common(verify);

    auto* scheck = app.add_subcommand("schur-check", "classify a disk problem");
    scheck->add_option("problem", problem)->required();
    common(scheck);

    auto* ssolve = app.add_subcommand("schur-solve", "solve a disk problem");
    ssolve->add_option("problem", problem)->required();
    ssolve->add_option("--tau", tau, "tau as re,im");
    ssolve->add_option("--sigma", sigma, "sigma as re,im");
    common(ssolve);

    auto* corpus = app.add_subcommand("corpus", "check and solve every problem in a directory");
    corpus->add_option("--dir", dir)->required();
    corpus->add_flag("--relaxed", opt.relaxed);
    common(corpus);

    try {
        app.parse(argc, argv);
        if (tol > 0)
            opt.tol = tol;
        if (!at.empty())
            opt.at = parse_point(at);
        if (!order.empty())
            opt.order = parse_order(order);
        if (!tau.empty())
            opt.tau = parse_point(tau);
        if (!sigma.empty())
            opt.sigma = parse_point(sigma);
        if (solve->count("--seed"))
            opt.seed = seed;
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : Exit::ParseError;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return Exit::ParseError;
    }

    Result r;
    if (*check)
        r = cmd_check(problem, opt);
    else if (*solve)
        r = cmd_solve(problem, opt);
    else if (*param)
        r = cmd_parametrize(problem, opt);
    else if (*eval)
        r = cmd_eval(solution, opt);
    else if (*verify)
        r = cmd_verify(problem, solution, opt);
    else if (*scheck)
        r = cmd_schur_check(problem, opt);
    else if (*ssolve)
        r = cmd_schur_solve(problem, opt);
    else if (*corpus)
        r = cmd_corpus(dir, opt);
    std::cout << r.output.dump(2) << "\n";
    return r.exit;
}
