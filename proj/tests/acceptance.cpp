// Acceptance runner: one PASS/FAIL line per criterion.
//   acceptance            run all criteria
//   acceptance --only 4   run one criterion

#include "oracles.hpp"

#include "mealy/asymptotics.hpp"
#include "mealy/automaton.hpp"
#include "mealy/endomorphism_pool.hpp"
#include "mealy/i2.hpp"
#include "mealy/monoid.hpp"
#include "mealy/series.hpp"
#include "mealy/transform.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

using namespace mealy;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double x, int precision = 4) {
    std::ostringstream os;
    os << std::setprecision(precision) << x;
    return os.str();
}

Outcome quotient_orders() {
    const auto t0 = Clock::now();
    for (unsigned n = 1; n <= 12; ++n) {
        const auto bfs = quotient_order(n);
        if (bfs != quotient_order_formula(n)) {
            return {false, "n=" + std::to_string(n) + ": BFS " + bfs.get_str() + " vs formula " +
                               quotient_order_formula(n).get_str()};
        }
    }
    const double t = seconds_since(t0);
    return {t < 60, "n=1..12 exact, |S_12|=94210, " + fmt(t, 3) + " s (limit 60 s)"};
}

Outcome series_vs_oracle() {
    const auto gamma = automaton_growth_coeffs(12);
    const auto ball = ball_growth_coeffs(12);
    const std::vector<long> g0{2, 4, 6, 9, 13, 18};
    const std::vector<long> b0{3, 6, 10, 15, 22};
    for (std::size_t i = 0; i < g0.size(); ++i) {
        if (gamma[i + 1] != g0[i]) return {false, "Gamma(" + std::to_string(i + 1) + ") = " + gamma[i + 1].get_str()};
    }
    for (std::size_t i = 0; i < b0.size(); ++i) {
        if (ball[i + 1] != b0[i]) return {false, "gamma_S(" + std::to_string(i + 1) + ") = " + ball[i + 1].get_str()};
    }
    const auto a = i2_automaton();
    for (std::size_t n = 1; n <= 12; ++n) {
        const auto s = stabilized_growth(a, n);
        if (gamma[n] != s.sphere || ball[n] != s.ball) {
            return {false, "n=" + std::to_string(n) + ": sphere " + std::to_string(s.sphere) + " vs " +
                               gamma[n].get_str() + ", ball " + std::to_string(s.ball) + " vs " + ball[n].get_str()};
        }
    }
    return {true, "Gamma(12)=" + gamma[12].get_str() + ", gamma_S(12)=" + ball[12].get_str() +
                      " equal the stabilized sphere and ball"};
}

Outcome normal_form_census() {
    const auto delta = word_growth_coeffs(20);
    const std::vector<long> d0{1, 2, 3, 4, 5, 7, 9, 11, 13, 16};
    for (std::size_t n = 0; n < d0.size(); ++n) {
        if (delta[n] != d0[n]) return {false, "delta(" + std::to_string(n) + ") = " + delta[n].get_str()};
    }
    for (std::size_t n = 0; n <= 20; ++n) {
        const auto count = i2::enumerate_normal_forms(n);
        if (delta[n] != count) {
            return {false, "n=" + std::to_string(n) + ": " + std::to_string(count) + " forms vs delta " +
                               delta[n].get_str()};
        }
    }
    const auto brute = oracle::word_growth(12, 8);
    for (std::size_t n = 0; n <= 12; ++n) {
        if (delta[n] != brute[n]) return {false, "brute-force word growth differs at n=" + std::to_string(n)};
    }
    return {true, "n=0..20 exact, delta(20)=" + delta[20].get_str() + ", brute force agrees to n=12"};
}

Outcome rewriting_soundness() {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(20240601);
    EndomorphismPool pool(2);
    const auto gens = pool.from_automaton(i2_automaton(), 12);
    auto node = [&](const i2::GenWord& w) {
        std::vector<Node> f(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) f[i] = gens[static_cast<std::size_t>(w[i])];
        return pool.product(f, 12);
    };
    std::size_t failures = 0;
    std::size_t max_steps = 0;
    for (int trial = 0; trial < 100000; ++trial) {
        const auto w = oracle::random_word(rng, 40);
        const auto r = i2::reduce_counted(w);
        max_steps = std::max(max_steps, r.steps);
        if (r.steps > w.size() / 2 || node(w) != node(i2::nf_to_word(r.form))) ++failures;
    }
    const double t = seconds_since(t0);
    return {failures == 0 && t < 120, std::to_string(failures) + " failures in 100000 words, max steps " +
                                          std::to_string(max_steps) + ", " + fmt(t, 3) + " s (limit 120 s)"};
}

Outcome relation_suite() {
    for (unsigned p = 0; p <= 6; ++p) {
        if (!i2::verify_relation(p, 12)) return {false, "r_" + std::to_string(p) + " fails at level 12"};
    }
    for (unsigned n = 1; n <= 8; ++n) {
        const auto c = i2::verify_left_zero(n);
        if (!c.holds_at_n || !c.fails_at_n_plus_1) {
            return {false, "left zero n=" + std::to_string(n) + ": (" + std::to_string(c.holds_at_n) + ", " +
                               std::to_string(c.fails_at_n_plus_1) + ")"};
        }
    }
    return {true, "r_0..r_6 hold at level 12; left zeros (true, true) for n=1..8"};
}

Outcome psi_identity() {
    const auto t0 = Clock::now();
    const auto q = odd_distinct_partitions(2000);
    if (!(psi_sum_form(2000) == q)) return {false, "product and sum forms differ"};
    const auto d = word_growth_coeffs(q);
    const auto g = automaton_growth_coeffs(q);
    const auto b = ball_growth_coeffs(q);
    if (!(b.times_one_minus_xk(1) == d)) return {false, "Delta != (1-X) Gamma_S"};
    if (!(g == d.divided_by_one_minus_xk(2))) return {false, "Gamma != Delta/(1-X^2)"};
    if (!(b == d.divided_by_one_minus_xk(1))) return {false, "Gamma_S != Delta/(1-X)"};
    const double t = seconds_since(t0);
    return {t < 30, "all identities exact to N=2000, " + fmt(t, 3) + " s (limit 30 s)"};
}

Outcome growth_asymptotics() {
    const auto q = odd_distinct_partitions(10000);
    const auto d = word_growth_coeffs(q);
    const auto g = automaton_growth_coeffs(q);
    const auto b = ball_growth_coeffs(q);
    const std::size_t ns[3] = {100, 1000, 10000};
    double err[3][3];
    for (int i = 0; i < 3; ++i) {
        const auto a = growth_asymptotes(ns[i], q[ns[i]]);
        err[0][i] = std::abs(static_cast<double>(ratio_to(b[ns[i]], a.log_ball_q)) - 1);
        err[1][i] = std::abs(static_cast<double>(ratio_to(g[ns[i]], a.log_aut_q)) - 1);
        err[2][i] = std::abs(static_cast<double>(ratio_to(d[ns[i]], a.log_delta_q)) - 1);
    }
    bool pass = true;
    const char* names[3] = {"gamma_S", "Gamma", "delta"};
    std::string detail;
    for (int f = 0; f < 3; ++f) {
        pass = pass && err[f][2] < 0.05 && err[f][2] < err[f][1] && err[f][2] < err[f][0];
        detail += std::string(f ? ", " : "") + names[f] + " |r-1| " + fmt(err[f][0]) + " > " + fmt(err[f][1]) +
                  " > " + fmt(err[f][2]);
    }
    return {pass, detail + " at n=1e2,1e3,1e4 (limit 0.05)"};
}

Outcome q_asymptote() {
    const auto q = odd_distinct_partitions(10000);
    const std::vector<unsigned> odd{1};
    const auto spec = richmond_spec(odd, 2, 1);
    const std::size_t ns[3] = {100, 1000, 10000};
    double ratio[3];
    for (int i = 0; i < 3; ++i) {
        ratio[i] = static_cast<double>(ratio_to(q[ns[i]], spec.log_value(static_cast<long double>(ns[i]))));
    }
    const bool decreasing = std::abs(ratio[2] - 1) < std::abs(ratio[1] - 1) && std::abs(ratio[1] - 1) < std::abs(ratio[0] - 1);
    const bool pass = decreasing && std::abs(ratio[2] - 1) < 0.1;

    const auto fixed = richmond_spec_corrected(odd, 2, 1);
    const double corrected = static_cast<double>(ratio_to(q[10000], fixed.log_value(10000)));
    return {pass, "q/asym " + fmt(ratio[0]) + ", " + fmt(ratio[1]) + ", " + fmt(ratio[2]) +
                      " at n=1e2,1e3,1e4 (need |r-1| < 0.1); with constant 2^(-7/4) 3^(-1/4) the ratio at 1e4 is " +
                      fmt(corrected, 6)};
}

Outcome hausdorff() {
    const auto h = hausdorff_sequence(20);
    for (std::size_t i = 1; i < h.size(); ++i) {
        if (!(h[i] < h[i - 1])) return {false, "not decreasing at n=" + std::to_string(i + 1)};
    }
    return {h[19] < 0.01, "strictly decreasing, term(1)=" + fmt(h[0]) + ", term(20)=" + fmt(h[19]) + " (limit 0.01)"};
}

Outcome width_invariance() {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<unsigned> relation(0, 8);
    std::bernoulli_distribution forward(0.5);
    std::size_t failures = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        const auto u = oracle::random_word(rng, 20);
        const auto v = oracle::random_word(rng, 20);
        const unsigned r = relation(rng);
        i2::GenWord lhs = r == 0 ? i2::parse_gen_word("00") : i2::relation_lhs(r - 1);
        i2::GenWord rhs = r == 0 ? i2::GenWord{} : i2::relation_rhs(r - 1);
        if (!forward(rng)) std::swap(lhs, rhs);
        i2::GenWord a = u;
        a.insert(a.end(), lhs.begin(), lhs.end());
        a.insert(a.end(), v.begin(), v.end());
        i2::GenWord b = u;
        b.insert(b.end(), rhs.begin(), rhs.end());
        b.insert(b.end(), v.begin(), v.end());
        if (i2::width(a) != i2::width(b)) ++failures;
    }
    return {failures == 0, std::to_string(failures) + " failures in 10000 (word, relation, direction) triples"};
}

Outcome product_minimize_laws() {
    std::mt19937_64 rng(99);
    std::size_t checks = 0;
    for (int trial = 0; trial < 200; ++trial) {
        auto make = [&](std::size_t n) {
            std::uniform_int_distribution<State> st(0, static_cast<State>(n - 1));
            std::uniform_int_distribution<Letter> bit(0, 1);
            std::vector<std::vector<State>> t(n, std::vector<State>(2));
            std::vector<std::vector<Letter>> o(n, std::vector<Letter>(2));
            for (auto& r : t) for (auto& x : r) x = st(rng);
            for (auto& r : o) for (auto& x : r) x = bit(rng);
            return MealyAutomaton(2, t, o);
        };
        const auto a = make(1 + trial % 4);
        const auto b = make(1 + (trial / 4) % 4);
        const auto p = product(a, b);
        for (unsigned len = 0; len <= 6; ++len) {
            for (std::uint32_t bits = 0; bits < (1U << len); ++bits) {
                const auto w = decode_word(bits, len);
                for (State q1 = 0; q1 < a.state_count(); ++q1) {
                    for (State q2 = 0; q2 < b.state_count(); ++q2) {
                        ++checks;
                        if (apply(p, static_cast<State>(q1 * b.state_count() + q2), w) != apply(a, q1, apply(b, q2, w))) {
                            return {false, "product semantics fail in trial " + std::to_string(trial)};
                        }
                    }
                }
            }
        }
    }
    const auto gamma = automaton_growth_coeffs(10);
    const auto i2a = i2_automaton();
    for (std::size_t n = 1; n <= 10; ++n) {
        const auto states = minimize(power(i2a, n)).state_count();
        if (gamma[n] != states) {
            return {false, "minimize(power(I2," + std::to_string(n) + ")) has " + std::to_string(states) +
                               " states, Gamma = " + gamma[n].get_str()};
        }
    }
    return {true, std::to_string(checks) + " product checks; minimize(power(I2,n)) = Gamma(n) for n=1..10"};
}

struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance criteria"};
    int only = 0;
    app.add_option("--only", only, "Run a single criterion (1-11)")->check(CLI::Range(1, 11));
    CLI11_PARSE(app, argc, argv);

    const std::vector<Criterion> criteria{
        {1, "quotient orders", quotient_orders},
        {2, "series vs oracle", series_vs_oracle},
        {3, "normal form census", normal_form_census},
        {4, "rewriting soundness", rewriting_soundness},
        {5, "relation suite", relation_suite},
        {6, "Psi identity", psi_identity},
        {7, "growth asymptotics", growth_asymptotics},
        {8, "q asymptote", q_asymptote},
        {9, "Hausdorff sequence", hausdorff},
        {10, "width invariance", width_invariance},
        {11, "product/minimize laws", product_minimize_laws},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        if (only && c.id != only) continue;
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.id << " (" << c.name << "): " << o.detail
                  << std::endl;
        failed += !o.pass;
    }
    return failed == 0 ? 0 : 1;
}
