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

// Library walk-through: f(0) = 0, f(1) = 1, f'(0) = f'(1) = 2.

#include <iostream>

#include <bpick/bpick.hpp>

int main()
{
    using Q = bpick::Rational;
    using EQ = bpick::ExtReal<Q>;

    bpick::BoundaryProblem<Q> p;
    p.nodes = {Q(0), Q(1)};
    p.targets = {EQ(Q(0)), EQ(Q(1))};
    p.derivs = {Q(2), Q(2)};

    const auto pm = bpick::build_pick_matrix(p);
    std::cout << "classification: " << bpick::to_string(pm.classification) << "\n";

    const auto tb = bpick::compute_tables(p);
    std::cout << "continued fraction: " << bpick::continued_fraction_string(tb) << "\n";

    const auto pr = bpick::build_parametrization(tb);
    for (const Q h : {Q(0), Q(5)}) {
        const auto inst = bpick::instantiate_solution(pr, bpick::RationalFunction<Q>(h));
        const auto rep = bpick::verify_solution(p, inst.f, bpick::VerifyMode::Strict);
        std::cout << "h = " << h << ": f = " << inst.f.str() << (rep.pass ? "  [verified]" : "  [fails]") << "\n";
    }

    // h = -2/3 hits the forbidden value at x = 0: only the relaxed problem holds there
    const auto bad = bpick::instantiate_solution(pr, bpick::RationalFunction<Q>(Q(-2) / 3));
    std::cout << "h = -2/3: strict "
              << (bpick::verify_solution(p, bad.f, bpick::VerifyMode::Strict).pass ? "passes" : "fails")
              << ", relaxed "
              << (bpick::verify_solution(p, bad.f, bpick::VerifyMode::Relaxed).pass ? "passes" : "fails") << "\n";
}
