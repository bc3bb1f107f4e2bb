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

// Acceptance runner: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "support.hpp"

using namespace bpick;
using namespace bpick::testing;
using F = RationalFunction<Q>;
using MQ = Matrix<Q>;

namespace {

/// Collects the first failed expectation of a criterion.
class Check {
public:
    void expect(bool ok, const std::string& what)
    {
        if (!ok && failure_.empty())
            failure_ = what;
    }
    bool ok() const { return failure_.empty(); }
    const std::string& failure() const { return failure_; }

private:
    std::string failure_;
};

/// Every function a solver produced, for the membership sweep of criterion 12.
std::vector<F> g_outputs;

void record(const F& f) { g_outputs.push_back(f); }

Polynomial<Q> prod_sq(const std::vector<Q>& nodes)
{
    Polynomial<Q> out{Q(1)};
    for (const Q& x : nodes)
        out *= Polynomial<Q>::linear_root(x) * Polynomial<Q>::linear_root(x);
    return out;
}

// ---------------------------------------------------------------------------

void worked_example_one(Check& c)
{
    const auto start = std::chrono::steady_clock::now();
    const auto tb = compute_tables(two_point());
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.expect(tb.s == std::vector<EQ>{EQ(q(0)), EQ(q(-1, 2))}, "s != (0, -1/2)");
    c.expect(tb.t == std::vector<Q>{2, q(3, 2)}, "t != (2, 3/2)");
    c.expect(tb.y == std::vector<EQ>{EQ(q(-2, 3)), EQ::infinity()}, "y != (-2/3, inf)");
    c.expect(tb.w_table[1][1] == EQ(q(-1, 2)) && tb.v_table[1][1] == q(3, 2), "f2(1), f2'(1) != -1/2, 3/2");
    c.expect(secs < 1.0, "runtime " + std::to_string(secs) + "s");
}

void worked_example_two(Check& c)
{
    const auto r = reduce_problem_data(three_point());
    c.expect(r.problem.targets == std::vector<EQ>{EQ(q(0)), EQ(q(0))}, "w' != (0, 0)");
    c.expect(r.problem.derivs == std::vector<Q>{1, q(1, 2)}, "v' != (1, 1/2)");
    const auto r2 = reduce_problem_data(r.problem);
    c.expect(r2.problem.targets.size() == 1 && r2.problem.targets[0].is_infinite(), "second reduction target not inf");
    c.expect(r2.problem.derivs.size() == 1 && Q(-1) / r2.problem.derivs[0] == -2, "residue bound != -2");
    const auto tb = compute_tables(three_point());
    c.expect(tb.s[2].is_infinite() && tb.t[2] == q(1, 2), "s3, t3 != inf, 1/2");
}

void augmented_pole_note(Check& c)
{
    const auto p = augmented_pole();
    const auto r = solve_relaxed(p);
    c.expect(r.solved() && *r.f == ident<Q>(), "relaxed solution is not z");
    if (r.solved())
        record(*r.f);
    const auto rep = verify_solution(p, ident<Q>(), VerifyMode::Strict);
    c.expect(!rep.pass && rep.failed_nodes() == std::vector<std::size_t>{1}, "strict failure not only at x = 0");
    c.expect(rep.nodes.size() == 3 && rep.nodes[1].measured == 1.0 && rep.nodes[1].expected == 2.0,
             "f'(0) = 1 < 2 not reported");
    const auto pm = build_pick_matrix(p);
    c.expect(pm.classification == Classification::PositiveSingularNotMinimal, "classification not PSNM");
    c.expect(pm.rank == 2, "rank != 2");
    c.expect(!solve_strict(p).solved(), "strict problem solved");
}

void sarason_counterexample(Check& c)
{
    for (auto [a, b] : std::vector<std::pair<Q, Q>>{{0, 1}, {-3, q(1, 2)}, {q(7, 4), 5}}) {
        const auto p = problem<Q>({a, b}, {EQ(q(0)), EQ(q(0))}, {0, 1});
        c.expect(pick_entries(p) == MQ{{0, 0}, {0, 1}}, "M != [[0,0],[0,1]]");
        c.expect(is_psd(pick_entries(p)), "M not psd");
        c.expect(!solve_strict(p).solved(), "strict counterexample solved");
    }
}

void determinant_identities(Check& c)
{
    Gen g(1001);
    int done = 0;
    while (done < 50) {
        auto p = g.arbitrary(static_cast<std::size_t>(g.integer(2, 5)), true);
        if (!(p.derivs[0] > 0))
            continue;
        const auto m = pick_entries(p);
        const auto red = reduce_problem_data(p);
        Q expect = cofactor_det(m) / p.derivs[0];
        if (p.targets[0].is_finite())
            for (std::size_t j = 1; j < p.size(); ++j)
                if (p.targets[j].is_finite() && p.targets[j] != p.targets[0]) {
                    const Q d = p.targets[0].value() - p.targets[j].value();
                    expect /= d * d;
                }
        c.expect(cofactor_det(pick_entries(red.problem)) == expect, "single-step det identity");
        ++done;
    }
    done = 0;
    while (done < 50) {
        const auto p = g.positive_definite(static_cast<std::size_t>(g.integer(1, 5)), true);
        c.expect(table_determinant(compute_tables(p)) == cofactor_det(pick_entries(p)), "iterated det identity");
        ++done;
    }
    c.expect(table_determinant(compute_tables(three_point())) == 2, "ex2 table product != 2");
    c.expect(cofactor_det(pick_entries(three_point())) == 2, "ex2 det M != 2");
}

void schur_congruence(Check& c)
{
    Gen g(1002);
    int done = 0, mixed = 0;
    while (done < 50) {
        const auto p = g.arbitrary(static_cast<std::size_t>(g.integer(2, 5)), true);
        const auto red = reduce_problem_data(p);
        c.expect(congruence_check(schur_complement_11(pick_entries(p)), red.lambda, pick_entries(red.problem)),
                 "Lambda M~ Lambda != schur complement");
        mixed += p.has_infinite_target() ? 1 : 0;
        ++done;
    }
    c.expect(mixed >= 10, "too few instances with infinite targets");
    const auto red = reduce_problem_data(three_point());
    const auto& l = red.lambda;
    const auto mt = pick_entries(red.problem);
    MQ lml(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            lml(i, j) = l[i] * mt(i, j) * l[j];
    c.expect(lml == MQ{{1, 0}, {0, 2}}, "ex2 Lambda M~ Lambda != [[1,0],[0,2]]");
    c.expect(schur_complement_11(pick_entries(three_point())) == MQ{{1, 0}, {0, 2}}, "ex2 schur != [[1,0],[0,2]]");
}

void parametrization_soundness(Check& c)
{
    Gen g(1003);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    int float_failures = 0;
    double worst = 0;
    for (int inst = 0; inst < 25; ++inst) {
        const auto p = g.positive_definite(static_cast<std::size_t>(g.integer(1, 4)), true);
        const auto tb = compute_tables(p);
        const auto pr = build_parametrization(tb);
        c.expect(polymatrix_det(pr.coeff_matrix) == pr.det_scale * prod_sq(p.nodes), "ad - bc identity");
        Q m = 1;
        for (const Q& t : tb.t)
            m *= t * t;
        c.expect(pr.det_scale == m, "m != prod t^2");

        const auto pd = p.cast<double>();
        const auto prd = build_parametrization(compute_tables(pd));
        ToleranceProfile tol;
        tol.val = 1e-9;
        int used = 0;
        while (used < 10) {
            const F h(g.quarter(-8, 8));
            const auto inst_q = instantiate_solution(pr, h);
            if (!inst_q.violated.empty())
                continue;
            ++used;
            c.expect(verify_solution(p, inst_q.f, VerifyMode::Strict).pass, "exact strict verification");
            record(inst_q.f);
            const auto inst_d = instantiate_solution(prd, h.cast<double>(), tol);
            const auto rep = verify_solution(pd, inst_d.f, VerifyMode::Strict, tol);
            if (!rep.pass) {
                ++float_failures;
                for (const auto& n : rep.nodes)
                    worst = std::max(worst, std::abs(n.measured - n.expected) / (1.0 + std::abs(n.expected)));
            }
        }
        const F h(g.quarter(-8, 8));
        const auto f = instantiate_solution(pr, h).f;
        for (int k = 0; k < 20; ++k) {
            const Complex z(u(g.engine()), std::abs(u(g.engine())) + 0.05);
            const Complex a = eval_continued_fraction(tb, h, z), b = f(z);
            c.expect(std::abs(a - b) <= 1e-10 * (1.0 + std::abs(b)), "continued fraction disagrees");
        }
    }
    std::ostringstream msg;
    msg << "float strict verification failed on " << float_failures << "/250 instantiations (worst relative error "
        << worst << ")";
    c.expect(float_failures == 0, msg.str());
}

void forbidden_value(Check& c)
{
    const auto p = two_point();
    const auto pr = build_parametrization(compute_tables(p));
    const auto f = instantiate_solution(pr, F(q(-2, 3))).f;
    c.expect(f.value_at(Q(0)) == 0 && f.value_at(Q(1)) == 1, "values not (0, 1)");
    c.expect(f.derivative_at(Q(1)) == 2, "f'(1) != 2");
    c.expect(f.derivative_at(Q(0)) < 2, "f'(0) not < 2");
    const auto st = verify_solution(p, f, VerifyMode::Strict);
    c.expect(!st.pass && st.failed_nodes() == std::vector<std::size_t>{0}, "strict failure not only at node 0");
    c.expect(verify_solution(p, f, VerifyMode::Relaxed).pass, "relaxed verification fails");
    record(f);
}

void degree_bounds(Check& c)
{
    Gen g(1004);
    int singular = 0;
    while (singular < 25) {
        const auto f = g.pick_function(static_cast<std::size_t>(g.integer(0, 2)));
        auto p = g.data_of(f, static_cast<std::size_t>(g.integer(2, 5)), true);
        if (p.size() < 2)
            continue;
        if (g.coin(1, 2) && p.targets[0].is_finite())
            p.derivs[0] += g.positive(1);
        const auto pm = build_pick_matrix(p);
        if (pm.classification == Classification::PositiveDefinite || pm.classification == Classification::Indefinite)
            continue;
        ++singular;
        const auto r = solve_relaxed(p);
        c.expect(r.solved(), "singular psd instance unsolved");
        if (!r.solved())
            continue;
        record(*r.f);
        c.expect(r.f->degree() <= pm.rank, "relaxed degree > rank");
        c.expect(verify_solution(p, *r.f, VerifyMode::Relaxed).pass, "relaxed verification fails");
    }
    for (int k = 0; k < 25; ++k) {
        const auto p = g.positive_definite(static_cast<std::size_t>(g.integer(1, 5)), true);
        const auto r = solve_strict(p);
        c.expect(r.solved() && r.f->degree() <= p.size(), "strict degree > n");
        if (r.solved())
            record(*r.f);
    }
}

void normalization_equivalence(Check& c)
{
    Gen g(1005);
    int done = 0;
    while (done < 25) {
        const auto p = g.positive_definite(static_cast<std::size_t>(g.integer(1, 4)), true);
        if (!p.has_infinite_target())
            continue;
        ++done;
        const auto np = normalize_infinities(p);
        c.expect(!np.problem.has_infinite_target(), "normalized problem has infinite targets");
        c.expect(congruence_check(pick_entries(p), np.d, pick_entries(np.problem)), "M != D M(alpha) D");
        const auto h = solve_strict(np.problem);
        c.expect(h.solved(), "normalized problem unsolved");
        if (!h.solved())
            continue;
        const auto f = denormalize_solution(*h.f, np.alpha);
        record(f);
        c.expect(verify_solution(p, f, VerifyMode::Strict).pass, "denormalized solution fails");
    }
}

void schur_pipeline(Check& c)
{
    const Complex i(0.0, 1.0);
    const CircleProblem p{{1.0, i}, {1.0, i}, {1.0, 1.0}};
    const auto cm = circle_pick_matrix(p);
    bool ones = true;
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b)
            ones = ones && std::abs(cm.entries(a, b) - 1.0) < 1e-12;
    c.expect(ones, "circle Pick matrix not all-ones");
    c.expect(cm.classification == Classification::MinimallyPositive, "not minimally positive");
    const auto r = solve_schur(p);
    c.expect(r.solved() && r.determinate, "identity data unsolved or indeterminate");
    if (r.solved()) {
        const auto& phi = *r.phi;
        bool id = true;
        for (double t : {0.0, 0.2, 0.5, 0.9})
            id = id && std::abs(phi(Complex(t, t / 2)) - Complex(t, t / 2)) < 1e-9;
        c.expect(id, "phi is not the identity");
        for (const auto& xi : p.xi)
            c.expect(std::abs(angular_derivative(phi, xi) - 1.0) < 1e-9, "angular derivative != 1");
    }
    const auto hp = circle_to_halfplane(CircleProblem{{-1.0}, {i}, {1.0}}, 1.0, 1.0);
    c.expect(std::abs(hp.derivs[0] - 2.0) < 1e-12, "spot value v != 2 rho");
    const auto hp3 = circle_to_halfplane(CircleProblem{{-1.0}, {i}, {3.0}}, 1.0, 1.0);
    c.expect(std::abs(hp3.derivs[0] - 6.0) < 1e-12, "spot value v != 2 rho at rho = 3");
}

void property_suites(Check& c)
{
    Gen g(1006);
    int trips = 0;
    while (trips < 100) {
        const auto f = g.pick_function(static_cast<std::size_t>(g.integer(0, 3)));
        const Q x = g.quarter(-5, 5) + q(1, 8);
        if (f.is_constant() || f.is_pole_at(x))
            continue;
        ++trips;
        c.expect(roundtrip_check(f, x), "round trip failed");
    }
    for (int k = 0; k < 50; ++k) {
        const Q pole = g.quarter(-3, 3);
        const auto gg = make_pick_function<Q>(g.positive(2), g.quarter(-2, 2), {{g.positive(3), pole}});
        const Q r = gg.residue_at(pole), a1 = g.positive(3);
        const auto f = augment_at(gg, pole, EQ(g.quarter(-3, 3)), a1);
        const Q d = f.derivative_at(pole);
        c.expect(d == a1 / (1 - a1 * r) && d < a1, "pole derivative law");
    }
    for (const auto& f : g_outputs)
        c.expect(sample_pick_membership(f).pass, "solver output fails membership: " + f.str());
    c.expect(g_outputs.size() >= 100, "too few solver outputs sampled");
    const std::vector<F> planted{ratfn<Q>({0, -1}, {1}), ratfn<Q>({1}, {0, 1}), ratfn<Q>({1}, {0, 0, 1}),
                                 ratfn<Q>({1}, {1, 0, 1}), ratfn<Q>({0, 0, 1}, {1})};
    for (const auto& f : planted)
        c.expect(!sample_pick_membership(f).pass, "planted non-Pick function passes: " + f.str());
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
        {"worked example 1: tables s, t, y", worked_example_one},
        {"worked example 2: reduced data and pole branch", worked_example_two},
        {"augmented pole: relaxed f = z, strict unsolvable", augmented_pole_note},
        {"psd counterexample is strictly unsolvable", sarason_counterexample},
        {"determinant identities (single step and iterated)", determinant_identities},
        {"schur complement congruence", schur_congruence},
        {"parametrization soundness and continued fraction", parametrization_soundness},
        {"forbidden value loses strictness at one node", forbidden_value},
        {"degree bounds", degree_bounds},
        {"infinite-target normalization equivalence", normalization_equivalence},
        {"disk pipeline on identity data", schur_pipeline},
        {"property suites", property_suites},
    };
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Check c;
        try {
            criteria[k].second(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        std::cout << (c.ok() ? "[PASS]" : "[FAIL]") << " criterion " << (k + 1) << ": " << criteria[k].first;
        if (!c.ok()) {
            std::cout << " -- " << c.failure();
            ++failed;
        }
        std::cout << "\n";
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
