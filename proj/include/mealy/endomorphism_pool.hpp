#pragma once

#include "mealy/automaton.hpp"
#include "mealy/transform.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace mealy {

using Node = std::uint32_t;

/// Hash-consed endomorphisms of the first k levels of the m-ary tree.
///
/// A level-k element is stored through its wreath recursion: the map
/// sigma on the first letter and one level-(k-1) section per letter.
/// Structurally equal elements get the same Node, so equality of tree
/// maps is equality of ids. Sections of automaton transformations are
/// again automaton transformations, which keeps the pool small even at
/// levels where flat tables would need gigabytes.
///
/// Not thread-safe; use one pool per thread.
class EndomorphismPool {
public:
    explicit EndomorphismPool(std::size_t alphabet_size = 2);

    std::size_t alphabet_size() const noexcept { return m_; }
    std::size_t size() const noexcept { return levels_.size(); }

    Node identity(unsigned level);
    Node make(unsigned level, std::span<const Letter> sigma, std::span<const Node> sections);

    unsigned level(Node f) const { return levels_[f]; }
    Letter sigma(Node f, Letter x) const { return data_[f * stride() + x]; }
    Node section(Node f, Letter x) const { return data_[f * stride() + m_ + x]; }

    /// f after g.
    Node compose(Node f, Node g);

    /// Product f_1 f_2 ... f_r of same-level nodes, rightmost acting first.
    Node product(std::span<const Node> factors, unsigned level);

    /// Nodes of every state of `a` at the given level.
    std::vector<Node> from_automaton(const MealyAutomaton& a, unsigned level);

    Node from_table(const TransformTable& table);
    TransformTable to_table(Node f) const;

    LetterWord apply(Node f, std::span<const Letter> word) const;

private:
    std::size_t stride() const noexcept { return 2 * m_; }

    std::size_t m_;
    std::vector<std::uint8_t> levels_;
    std::vector<std::uint32_t> data_;
    std::unordered_map<std::u32string, Node> index_;
    std::unordered_map<std::uint64_t, Node> compose_memo_;
    std::vector<Node> identity_by_level_;
};

} // namespace mealy
