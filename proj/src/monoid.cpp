#include "mealy/monoid.hpp"

#include "mealy/errors.hpp"

#include <cmath>
#include <string>

namespace mealy {

namespace {

MonoidEnumeration run_bfs(std::shared_ptr<EndomorphismPool> pool, std::span<const Node> generators, unsigned level,
                          const EnumerateOptions& options) {
    const Node one = pool->identity(level);

    std::vector<Node> elements{one};
    std::unordered_set<Node> seen{one};
    GrowthLayers layers;
    layers.level = level;
    layers.layer_sizes.push_back(1);
    layers.cumulative.push_back(1);
    if (options.track_spheres) layers.sphere_sizes.push_back(1);

    // With spheres on, the frontier is every product of exactly d factors;
    // otherwise only the elements first reached at depth d.
    std::vector<Node> frontier{one};
    std::unordered_set<Node> next_set;
    for (std::size_t depth = 1;; ++depth) {
        if (options.max_depth && depth > *options.max_depth) break;

        next_set.clear();
        std::vector<Node> next_frontier;
        std::uint64_t fresh = 0;
        for (Node s : frontier) {
            for (Node g : generators) {
                const Node t = pool->compose(s, g);
                const bool new_in_ball = seen.insert(t).second;
                if (new_in_ball) {
                    elements.push_back(t);
                    ++fresh;
                    if (elements.size() > options.max_elements) {
                        throw CapacityError("monoid enumeration exceeded " + std::to_string(options.max_elements) +
                                            " elements");
                    }
                }
                if (options.track_spheres) {
                    if (next_set.insert(t).second) next_frontier.push_back(t);
                } else if (new_in_ball) {
                    next_frontier.push_back(t);
                }
            }
        }
        layers.layer_sizes.push_back(fresh);
        layers.cumulative.push_back(elements.size());
        if (options.track_spheres) layers.sphere_sizes.push_back(next_frontier.size());
        frontier.swap(next_frontier);
        if (fresh == 0) {
            layers.closed = true;
            // Spheres can keep changing after the ball has closed.
            if (!options.track_spheres || !options.max_depth) break;
        }
    }
    return MonoidEnumeration(std::move(pool), std::move(elements), std::move(layers));
}

} // namespace

MonoidEnumeration::MonoidEnumeration(std::shared_ptr<EndomorphismPool> pool, std::vector<Node> elements,
                                     GrowthLayers layers)
    : pool_(std::move(pool)), elements_(std::move(elements)), members_(elements_.begin(), elements_.end()),
      layers_(std::move(layers)) {}

TransformTable MonoidEnumeration::element(std::size_t i) const {
    return pool_->to_table(elements_.at(i));
}

bool MonoidEnumeration::contains(const TransformTable& t) const {
    if (t.level() != layers_.level) return false;
    return members_.contains(pool_->from_table(t));
}

MonoidEnumeration enumerate_monoid(std::span<const TransformTable> generators, const EnumerateOptions& options) {
    unsigned level = 0;
    if (!generators.empty()) {
        level = generators.front().level();
        for (const auto& g : generators) {
            if (g.level() != level) throw InputDomainError("generators must share one level");
        }
    }
    auto pool = std::make_shared<EndomorphismPool>(2);
    std::vector<Node> gens;
    gens.reserve(generators.size());
    for (const auto& g : generators) gens.push_back(pool->from_table(g));
    return run_bfs(std::move(pool), gens, level, options);
}

MonoidEnumeration enumerate_monoid(const MealyAutomaton& a, unsigned level, const EnumerateOptions& options) {
    auto pool = std::make_shared<EndomorphismPool>(a.alphabet_size());
    const auto gens = pool->from_automaton(a, level);
    return run_bfs(std::move(pool), gens, level, options);
}

StabilizedGrowth stabilized_growth(const MealyAutomaton& a, std::size_t n, unsigned max_level,
                                   std::size_t max_elements) {
    EnumerateOptions options;
    options.max_depth = n;
    options.max_elements = max_elements;
    options.track_spheres = true;

    auto measure = [&](unsigned level) {
        const auto layers = enumerate_monoid(a, level, options).layers();
        StabilizedGrowth g;
        g.radius = n;
        g.level = level;
        g.sphere = layers.sphere_sizes.at(n);
        g.ball = layers.cumulative.back();
        return g;
    };

    unsigned level = static_cast<unsigned>(n / 2 + 2);
    if (level + 1 > max_level) throw CapacityError("stabilization level exceeds the cap");
    StabilizedGrowth previous = measure(level);
    for (;;) {
        if (level + 1 > max_level) {
            throw CapacityError("growth at radius " + std::to_string(n) + " did not stabilize below level " +
                                std::to_string(max_level));
        }
        StabilizedGrowth current = measure(level + 1);
        if (current.sphere == previous.sphere && current.ball == previous.ball) return previous;
        previous = current;
        ++level;
    }
}

std::uint64_t spherical_growth_oracle(const MealyAutomaton& a, std::size_t n) {
    if (n == 0) throw InputDomainError("radius must be positive");
    return stabilized_growth(a, n).sphere;
}

mpz_class quotient_order(unsigned n, std::size_t max_elements) {
    if (n == 0) throw InputDomainError("quotient level must be positive");
    EnumerateOptions options;
    options.track_spheres = false;
    options.max_elements = max_elements;
    const auto result = enumerate_monoid(i2_automaton(), n, options);
    return mpz_class(static_cast<unsigned long>(result.size()));
}

mpz_class quotient_order_formula(unsigned n) {
    if (n == 0) throw InputDomainError("quotient level must be positive");
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, n);
    return 2 + (2 * mpz_class(n) - 1) * p;
}

mpz_class endomorphism_count(unsigned m, unsigned k) {
    if (m < 2 || k < 1) throw InputDomainError("endomorphism_count needs m >= 2 and k >= 1");
    // exponent m (m^k - 1) / (m - 1) = m (1 + m + ... + m^(k-1))
    mpz_class geometric = 0;
    mpz_class term = 1;
    for (unsigned i = 0; i < k; ++i) {
        geometric += term;
        term *= m;
    }
    const mpz_class exponent = geometric * m;
    if (!exponent.fits_ulong_p()) throw CapacityError("endomorphism count exponent too large");
    mpz_class result;
    mpz_ui_pow_ui(result.get_mpz_t(), m, exponent.get_ui());
    return result;
}

long double log_big(const mpz_class& value) {
    if (sgn(value) <= 0) throw InputDomainError("log of a non-positive integer");
    long exp2 = 0;
    const double mantissa = mpz_get_d_2exp(&exp2, value.get_mpz_t());
    return std::log(static_cast<long double>(mantissa)) + static_cast<long double>(exp2) * std::log(2.0L);
}

std::vector<double> hausdorff_sequence(unsigned K) {
    if (K == 0) throw InputDomainError("hausdorff_sequence needs K >= 1");
    std::vector<double> terms;
    terms.reserve(K);
    for (unsigned n = 1; n <= K; ++n) {
        terms.push_back(static_cast<double>(log_big(quotient_order_formula(n)) / log_big(endomorphism_count(2, n))));
    }
    return terms;
}

} // namespace mealy
