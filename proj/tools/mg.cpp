// mg: command-line front end for the mealy library.

#include "mealy/asymptotics.hpp"
#include "mealy/automaton.hpp"
#include "mealy/automaton_io.hpp"
#include "mealy/errors.hpp"
#include "mealy/i2.hpp"
#include "mealy/monoid.hpp"
#include "mealy/series.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

using namespace mealy;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

enum class Format { Csv, Json };

unsigned worker_count() {
    if (const char* env = std::getenv("MG_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

// Runs body(i) for i in [0, count) on MG_THREADS workers. Results are
// written by index, so output order never depends on scheduling.
template <class Body>
void parallel_for(std::size_t count, Body body) {
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(worker_count(), count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

std::string real(long double x) {
    std::ostringstream os;
    os << std::setprecision(10) << static_cast<double>(x);
    return os.str();
}

// CSV or JSON-lines rows with a fixed column order.
class Table {
public:
    Table(Format format, std::vector<std::string> columns) : format_(format), columns_(std::move(columns)) {
        if (format_ == Format::Csv) {
            for (std::size_t i = 0; i < columns_.size(); ++i) std::cout << (i ? "," : "") << columns_[i];
            std::cout << '\n';
        }
    }

    // Values are already formatted; `numeric` marks those emitted unquoted in JSON.
    void row(const std::vector<std::string>& values, const std::vector<bool>& numeric) {
        if (format_ == Format::Csv) {
            for (std::size_t i = 0; i < values.size(); ++i) std::cout << (i ? "," : "") << values[i];
            std::cout << '\n';
            return;
        }
        std::cout << '{';
        for (std::size_t i = 0; i < values.size(); ++i) {
            std::cout << (i ? "," : "") << json(columns_[i]).dump() << ':';
            if (values[i].empty()) {
                std::cout << "null";
            } else if (numeric[i]) {
                std::cout << values[i];
            } else {
                std::cout << json(values[i]).dump();
            }
        }
        std::cout << "}\n";
    }

private:
    Format format_;
    std::vector<std::string> columns_;
};

struct Common {
    Format format = Format::Csv;
    std::size_t max_states = 1'000'000;
    std::size_t max_elements = 20'000'000;
    unsigned max_level = 24;
};

// ---- growth ---------------------------------------------------------------

int cmd_growth(const Common& c, std::size_t N, bool with_oracle, std::size_t oracle_cap) {
    if (N < 1) throw InputDomainError("--N must be at least 1");
    const auto q = odd_distinct_partitions(N);
    const auto delta = word_growth_coeffs(q);
    const auto gamma = automaton_growth_coeffs(q);
    const auto ball = ball_growth_coeffs(q);

    const std::size_t oracle_rows = with_oracle ? std::min(N, oracle_cap) : 0;
    std::vector<StabilizedGrowth> oracle(oracle_rows);
    parallel_for(oracle_rows, [&](std::size_t i) {
        oracle[i] = stabilized_growth(i2_automaton(), i + 1, c.max_level, c.max_elements);
    });

    std::vector<std::string> columns{"n",          "delta",     "gamma_aut", "gamma_ball", "q",
                                     "asym_delta", "asym_aut",  "asym_ball", "ratio_delta", "ratio_aut",
                                     "ratio_ball"};
    if (with_oracle) {
        columns.insert(columns.end(), {"oracle_level", "oracle_sphere", "oracle_ball"});
    }
    Table table(c.format, columns);
    std::vector<bool> numeric(columns.size(), true);
    bool all_agree = true;
    for (std::size_t n = 1; n <= N; ++n) {
        std::vector<std::string> v{std::to_string(n), delta[n].get_str(), gamma[n].get_str(), ball[n].get_str(),
                                   q[n].get_str()};
        if (sgn(q[n]) > 0) {
            const auto a = growth_asymptotes(n, q[n]);
            v.insert(v.end(), {real(std::exp(a.log_delta_q)), real(std::exp(a.log_aut_q)),
                               real(std::exp(a.log_ball_q)), real(ratio_to(delta[n], a.log_delta_q)),
                               real(ratio_to(gamma[n], a.log_aut_q)), real(ratio_to(ball[n], a.log_ball_q))});
        } else {
            v.insert(v.end(), 6, "");
        }
        if (with_oracle) {
            if (n <= oracle_rows) {
                const auto& o = oracle[n - 1];
                v.insert(v.end(), {std::to_string(o.level), std::to_string(o.sphere), std::to_string(o.ball)});
                all_agree = all_agree && gamma[n] == o.sphere && ball[n] == o.ball;
            } else {
                v.insert(v.end(), 3, "");
            }
        }
        table.row(v, numeric);
    }
    if (!all_agree) {
        std::cerr << "oracle disagrees with the series coefficients\n";
        return 1;
    }
    return 0;
}

// ---- words ----------------------------------------------------------------

int cmd_reduce(const Common& c, const std::string& word, std::optional<unsigned> n) {
    const auto w = i2::parse_gen_word(word);
    const auto r = i2::reduce_counted(w);
    const auto nf = n ? i2::reduce_quotient(w, *n) : r.form;
    const auto out = i2::format_gen_word(i2::nf_to_word(nf));
    if (c.format == Format::Json) {
        ordered_json j{{"input", word}, {"normal_form", out}, {"form", nf.to_string()}, {"length", nf.length()},
                       {"steps", r.steps}};
        if (n) j["quotient"] = *n;
        std::cout << j.dump() << '\n';
    } else {
        std::cout << out << '\n';
    }
    return 0;
}

int cmd_equal(const Common& c, const std::string& a, const std::string& b, std::optional<unsigned> n) {
    const auto wa = i2::parse_gen_word(a);
    const auto wb = i2::parse_gen_word(b);
    const bool eq = n ? i2::words_equal_quotient(wa, wb, *n) : i2::words_equal(wa, wb);
    if (c.format == Format::Json) {
        ordered_json j{{"a", a}, {"b", b}, {"equal", eq}};
        if (n) j["quotient"] = *n;
        std::cout << j.dump() << '\n';
    } else {
        std::cout << (eq ? "true" : "false") << '\n';
    }
    return 0;
}

int cmd_quotient(const Common& c, unsigned n, unsigned bfs_cap) {
    if (n < 1) throw InputDomainError("--n must be at least 1");
    const auto formula = quotient_order_formula(n);
    std::string bfs;
    if (n <= bfs_cap) bfs = quotient_order(n, c.max_elements).get_str();
    const double term = static_cast<double>(log_big(formula) / log_big(endomorphism_count(2, n)));
    Table table(c.format, {"n", "order", "order_bfs", "endomorphisms", "hausdorff_term"});
    table.row({std::to_string(n), formula.get_str(), bfs, endomorphism_count(2, n).get_str(), real(term)},
              {true, true, true, true, true});
    if (!bfs.empty() && bfs != formula.get_str()) {
        std::cerr << "BFS order differs from the closed formula\n";
        return 1;
    }
    return 0;
}

int cmd_hausdorff(const Common& c, unsigned K) {
    const auto h = hausdorff_sequence(K);
    Table table(c.format, {"n", "order", "hausdorff_term"});
    for (unsigned n = 1; n <= K; ++n) {
        table.row({std::to_string(n), quotient_order_formula(n).get_str(), real(h[n - 1])}, {true, true, true});
    }
    return 0;
}

int cmd_enumerate(const Common& c, unsigned level, std::optional<std::size_t> depth, bool spheres) {
    EnumerateOptions o;
    o.max_depth = depth;
    o.max_elements = c.max_elements;
    o.track_spheres = spheres;
    const auto e = enumerate_monoid(i2_automaton(), level, o);
    const auto& L = e.layers();
    Table table(c.format, {"level", "depth", "ball", "sphere", "new"});
    for (std::size_t d = 0; d < L.cumulative.size(); ++d) {
        table.row({std::to_string(level), std::to_string(d), std::to_string(L.cumulative[d]),
                   spheres ? std::to_string(L.sphere_sizes[d]) : "", std::to_string(L.layer_sizes[d])},
                  {true, true, true, true, true});
    }
    return 0;
}

// ---- automaton files ------------------------------------------------------

int cmd_automaton(const Common& c, const std::string& path, const std::string& action, std::size_t N,
                  const std::string& other) {
    const auto a = read_automaton_file(path);
    const Limits limits{c.max_states};
    if (action == "growth") {
        const auto g = automaton_growth(a, N, limits);
        if (c.format == Format::Json) {
            std::cout << ordered_json{{"file", path}, {"growth", g}}.dump() << '\n';
        } else {
            for (std::size_t i = 0; i < g.size(); ++i) std::cout << (i ? "," : "") << g[i];
            std::cout << '\n';
        }
    } else if (action == "minimize") {
        std::cout << format_automaton(minimize(a, limits));
    } else if (action == "product") {
        if (other.empty()) throw InputDomainError("product needs --with <file>");
        std::cout << format_automaton(product(a, read_automaton_file(other)));
    } else if (action == "invertible") {
        const bool inv = is_invertible(a);
        if (c.format == Format::Json) {
            std::cout << ordered_json{{"file", path}, {"invertible", inv}}.dump() << '\n';
        } else {
            std::cout << (inv ? "true" : "false") << '\n';
        }
    } else {
        throw InputDomainError("unknown automaton action '" + action + "'");
    }
    return 0;
}

// ---- verification suites --------------------------------------------------

struct VerifyParams {
    unsigned pmax = 6;
    unsigned level = 12;
    unsigned nmax = 12;
    std::size_t N = 2000;
    std::size_t samples = 10000;
};

struct SuiteResult {
    std::string suite;
    bool pass = true;
    std::vector<std::string> failures;
    std::size_t checks = 0;

    void check(bool ok, const std::string& what) {
        ++checks;
        if (!ok) {
            pass = false;
            if (failures.size() < 20) failures.push_back(what);
        }
    }
};

SuiteResult suite_relations(const VerifyParams& p) {
    SuiteResult r{"relations"};
    for (unsigned k = 0; k <= p.pmax; ++k) r.check(i2::verify_relation(k, p.level), "r_" + std::to_string(k));
    return r;
}

SuiteResult suite_left_zero(const VerifyParams& p) {
    SuiteResult r{"left-zero"};
    for (unsigned n = 1; n <= std::min(p.nmax, kMaxTableLevel - 1); ++n) {
        const auto c = i2::verify_left_zero(n);
        r.check(c.holds_at_n && c.fails_at_n_plus_1, "n=" + std::to_string(n));
    }
    return r;
}

SuiteResult suite_width(const VerifyParams& p) {
    SuiteResult r{"width"};
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<std::size_t> len(0, 20);
    std::bernoulli_distribution bit(0.5);
    std::uniform_int_distribution<unsigned> rel(0, p.pmax + 1);
    auto word = [&] {
        i2::GenWord w(len(rng));
        for (auto& g : w) g = bit(rng) ? i2::Gen::F1 : i2::Gen::F0;
        return w;
    };
    for (std::size_t t = 0; t < p.samples; ++t) {
        const auto u = word();
        const auto v = word();
        const unsigned k = rel(rng);
        auto lhs = k == 0 ? i2::parse_gen_word("00") : i2::relation_lhs(k - 1);
        auto rhs = k == 0 ? i2::GenWord{} : i2::relation_rhs(k - 1);
        i2::GenWord a = u, b = u;
        a.insert(a.end(), lhs.begin(), lhs.end());
        b.insert(b.end(), rhs.begin(), rhs.end());
        a.insert(a.end(), v.begin(), v.end());
        b.insert(b.end(), v.begin(), v.end());
        r.check(i2::width(a) == i2::width(b), i2::format_gen_word(a) + " vs " + i2::format_gen_word(b));
    }
    return r;
}

SuiteResult suite_series(const VerifyParams& p) {
    SuiteResult r{"series"};
    const auto q = odd_distinct_partitions(p.N);
    r.check(psi_sum_form(p.N) == q, "Psi product form = sum form");
    try {
        const auto d = word_growth_coeffs(q);
        const auto g = automaton_growth_coeffs(q);
        const auto b = ball_growth_coeffs(q);
        r.check(b.times_one_minus_xk(1) == d, "Delta = (1-X) Gamma_S");
        r.check(g == d.divided_by_one_minus_xk(2), "Gamma = Delta/(1-X^2)");
        r.check(b == d.divided_by_one_minus_xk(1), "Gamma_S = Delta/(1-X)");
    } catch (const ConsistencyError& e) {
        r.check(false, e.what());
    }
    return r;
}

SuiteResult suite_oracle(const VerifyParams& p, const Common& c) {
    SuiteResult r{"oracle"};
    const auto gamma = automaton_growth_coeffs(p.nmax);
    const auto ball = ball_growth_coeffs(p.nmax);
    const auto delta = word_growth_coeffs(p.nmax);
    std::vector<StabilizedGrowth> s(p.nmax);
    parallel_for(p.nmax, [&](std::size_t i) {
        s[i] = stabilized_growth(i2_automaton(), i + 1, c.max_level, c.max_elements);
    });
    for (unsigned n = 1; n <= p.nmax; ++n) {
        r.check(gamma[n] == s[n - 1].sphere, "sphere n=" + std::to_string(n));
        r.check(ball[n] == s[n - 1].ball, "ball n=" + std::to_string(n));
        r.check(delta[n] == i2::enumerate_normal_forms(n), "normal forms n=" + std::to_string(n));
    }
    return r;
}

SuiteResult suite_rewrite(const VerifyParams& p) {
    SuiteResult r{"rewrite"};
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<std::size_t> len(0, 40);
    std::bernoulli_distribution bit(0.5);
    EndomorphismPool pool(2);
    for (std::size_t t = 0; t < p.samples; ++t) {
        i2::GenWord w(len(rng));
        for (auto& g : w) g = bit(rng) ? i2::Gen::F1 : i2::Gen::F0;
        const auto red = i2::reduce_counted(w);
        const bool ok = red.steps <= w.size() / 2 &&
                        i2::word_node(pool, w, p.level) == i2::word_node(pool, i2::nf_to_word(red.form), p.level);
        r.check(ok, i2::format_gen_word(w));
    }
    return r;
}

int cmd_verify(const Common& c, const std::string& suite, const VerifyParams& p) {
    static const std::vector<std::string> names{"relations", "left-zero", "width", "series", "oracle", "rewrite"};
    std::vector<std::string> chosen;
    if (suite == "all") {
        chosen = names;
    } else if (std::find(names.begin(), names.end(), suite) != names.end()) {
        chosen = {suite};
    } else {
        throw InputDomainError("unknown suite '" + suite + "'");
    }
    bool all = true;
    for (const auto& s : chosen) {
        SuiteResult r;
        if (s == "relations") r = suite_relations(p);
        if (s == "left-zero") r = suite_left_zero(p);
        if (s == "width") r = suite_width(p);
        if (s == "series") r = suite_series(p);
        if (s == "oracle") r = suite_oracle(p, c);
        if (s == "rewrite") r = suite_rewrite(p);
        all = all && r.pass;
        if (c.format == Format::Json) {
            std::cout << ordered_json{{"suite", r.suite}, {"pass", r.pass}, {"checks", r.checks}, {"failures", r.failures}}
                             .dump()
                      << '\n';
        } else {
            std::cout << r.suite << ": " << (r.pass ? "pass" : "FAIL") << " (" << r.checks << " checks)\n";
            for (const auto& f : r.failures) std::cout << "  failed: " << f << '\n';
        }
    }
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Growth and rewriting tools for Mealy automata and the I2 semigroup"};
    app.require_subcommand(1);
    app.fallthrough();

    Common common;
    std::string format = "csv";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--max-states", common.max_states, "State cap for automaton operations");
    app.add_option("--max-elements", common.max_elements, "Element cap for monoid enumeration");
    app.add_option("--max-level", common.max_level, "Level cap for the stabilization rule");

    std::size_t N = 12;
    bool with_oracle = false;
    std::size_t oracle_cap = 12;
    auto* growth = app.add_subcommand("growth", "Exact growth coefficients, asymptotes and ratios");
    growth->add_option("--N", N, "Largest n")->required();
    growth->add_flag("--oracle", with_oracle, "Add stabilized BFS sphere and ball columns");
    growth->add_option("--oracle-cap", oracle_cap, "Largest n checked against the oracle");

    std::string word, word2;
    std::optional<unsigned> quotient_n;
    auto* reduce = app.add_subcommand("reduce", "Normal form of a word over {0,1} (0 = f0, 1 = f1)");
    reduce->add_option("word", word, "Generator word")->required();
    reduce->add_option("--n", quotient_n, "Reduce in the quotient S_n");

    auto* equal = app.add_subcommand("equal", "Word problem in S(I2) or in S_n");
    equal->add_option("a", word)->required();
    equal->add_option("b", word2)->required();
    equal->add_option("--n", quotient_n, "Compare in the quotient S_n");

    unsigned n = 1;
    unsigned bfs_cap = 14;
    auto* quotient = app.add_subcommand("quotient", "Order of S_n and its Hausdorff term");
    quotient->add_option("--n", n, "Level")->required();
    quotient->add_option("--bfs-cap", bfs_cap, "Largest n confirmed by enumeration");

    unsigned K = 20;
    auto* hausdorff = app.add_subcommand("hausdorff", "log|S_n| / log|End| for n = 1..K");
    hausdorff->add_option("--K", K, "Largest level")->check(CLI::PositiveNumber);

    unsigned level = 4;
    std::optional<std::size_t> depth;
    bool no_spheres = false;
    auto* enumerate = app.add_subcommand("enumerate", "BFS layers of the I2 monoid at one level");
    enumerate->add_option("--level", level, "Tree level")->required();
    enumerate->add_option("--depth", depth, "Stop after this depth");
    enumerate->add_flag("--no-spheres", no_spheres, "Skip exact sphere tracking");

    std::string file, action, other;
    std::size_t aut_N = 5;
    auto* automaton = app.add_subcommand("automaton", "Operations on an automaton file");
    automaton->add_option("file", file, "Automaton file")->required()->check(CLI::ExistingFile);
    automaton->add_option("action", action, "growth | minimize | product | invertible")
        ->required()
        ->check(CLI::IsMember({"growth", "minimize", "product", "invertible"}));
    automaton->add_option("--N", aut_N, "Growth length");
    automaton->add_option("--with", other, "Second factor for product")->check(CLI::ExistingFile);

    std::string suite;
    VerifyParams vp;
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", suite, "relations | left-zero | width | series | oracle | rewrite | all")
        ->required();
    verify->add_option("--pmax", vp.pmax, "Largest relation index");
    verify->add_option("--level", vp.level, "Table level");
    verify->add_option("--nmax", vp.nmax, "Largest n for oracle and left-zero suites");
    verify->add_option("--N", vp.N, "Series order");
    verify->add_option("--samples", vp.samples, "Random samples for width and rewrite suites");

    CLI11_PARSE(app, argc, argv);
    common.format = format == "json" ? Format::Json : Format::Csv;

    try {
        if (*growth) return cmd_growth(common, N, with_oracle, oracle_cap);
        if (*reduce) return cmd_reduce(common, word, quotient_n);
        if (*equal) return cmd_equal(common, word, word2, quotient_n);
        if (*quotient) return cmd_quotient(common, n, bfs_cap);
        if (*hausdorff) return cmd_hausdorff(common, K);
        if (*enumerate) return cmd_enumerate(common, level, depth, !no_spheres);
        if (*automaton) return cmd_automaton(common, file, action, aut_N, other);
        if (*verify) return cmd_verify(common, suite, vp);
    } catch (const ParseError& e) {
        std::cerr << "parse error at " << e.what() << '\n';
        return 2;
    } catch (const CapacityError& e) {
        std::cerr << "capacity exceeded: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
