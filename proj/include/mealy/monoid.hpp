#pragma once

#include "mealy/automaton.hpp"
#include "mealy/endomorphism_pool.hpp"
#include "mealy/transform.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <unordered_set>
#include <vector>

namespace mealy {

/// Growth data of a finitely generated transformation monoid, by depth d
/// (number of generator factors).
struct GrowthLayers {
    unsigned level = 0;
    /// Elements first reached at depth d (word growth of the quotient).
    std::vector<std::uint64_t> layer_sizes;
    /// Elements expressible with at most d factors.
    std::vector<std::uint64_t> cumulative;
    /// Elements expressible with exactly d factors. Empty unless tracked.
    std::vector<std::uint64_t> sphere_sizes;
    /// True when the last depth added nothing new.
    bool closed = false;

    std::size_t depth() const noexcept { return cumulative.empty() ? 0 : cumulative.size() - 1; }
};

struct EnumerateOptions {
    /// Stop after this depth; without it the search runs to closure.
    std::optional<std::size_t> max_depth;
    std::size_t max_elements = 20'000'000;
    /// Spheres need the full set of length-d products at every depth,
    /// which costs more than the plain ball search.
    bool track_spheres = true;
};

/// Elements of a monoid of tree maps, found by breadth-first search from
/// the identity.
class MonoidEnumeration {
public:
    MonoidEnumeration(std::shared_ptr<EndomorphismPool> pool, std::vector<Node> elements, GrowthLayers layers);

    const GrowthLayers& layers() const noexcept { return layers_; }
    std::size_t size() const noexcept { return elements_.size(); }
    std::span<const Node> nodes() const noexcept { return elements_; }
    const EndomorphismPool& pool() const noexcept { return *pool_; }

    /// Materializes element i (BFS order) as a flat table.
    TransformTable element(std::size_t i) const;
    bool contains(const TransformTable& t) const;

private:
    std::shared_ptr<EndomorphismPool> pool_;
    std::vector<Node> elements_;
    std::unordered_set<Node> members_;
    GrowthLayers layers_;
};

/// Monoid generated by same-level tables.
MonoidEnumeration enumerate_monoid(std::span<const TransformTable> generators, const EnumerateOptions& options = {});

/// Monoid generated by the level-k actions of all states of `a`.
MonoidEnumeration enumerate_monoid(const MealyAutomaton& a, unsigned level, const EnumerateOptions& options = {});

/// Sphere and ball sizes of radius n, evaluated at a level where they have
/// stopped changing.
struct StabilizedGrowth {
    std::size_t radius = 0;
    unsigned level = 0;
    std::uint64_t sphere = 0;
    std::uint64_t ball = 0;
};

/// Starts at level floor(n/2) + 2 and raises the level until two consecutive
/// levels give the same sphere and ball counts.
StabilizedGrowth stabilized_growth(const MealyAutomaton& a, std::size_t n, unsigned max_level = 32,
                                   std::size_t max_elements = 20'000'000);

/// Number of distinct products of exactly n generators.
std::uint64_t spherical_growth_oracle(const MealyAutomaton& a, std::size_t n);

/// |S_n| for I2, counted by closing the level-n action.
mpz_class quotient_order(unsigned n, std::size_t max_elements = 20'000'000);

/// 2 + (2n - 1) 2^n.
mpz_class quotient_order_formula(unsigned n);

/// |End(X_m^[k])| = m^(m (m^k - 1) / (m - 1)).
mpz_class endomorphism_count(unsigned m, unsigned k);

/// log|S_n| / log|End(X_2^[n])| for n = 1..K.
std::vector<double> hausdorff_sequence(unsigned K);

/// Natural logarithm of a positive big integer.
long double log_big(const mpz_class& value);

} // namespace mealy
