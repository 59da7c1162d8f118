#pragma once

#include "mealy/automaton.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace mealy {

/// Largest level a flat table may have.
inline constexpr unsigned kMaxTableLevel = 24;

/// Packs a binary word: letter i goes to bit i.
std::uint32_t encode_word(std::span<const Letter> word);
LetterWord decode_word(std::uint32_t bits, unsigned length);

/// The action of an endomorphism of the binary tree on its first k levels:
/// outputs[w] is the image of the length-k input word w, both bit-packed
/// with encode_word.
class TransformTable {
public:
    /// Validates sizes, ranges and prefix compatibility.
    TransformTable(unsigned level, std::vector<std::uint32_t> outputs);

    static TransformTable identity(unsigned level);
    static TransformTable constant(unsigned level, std::uint32_t value);

    unsigned level() const noexcept { return level_; }
    std::size_t size() const noexcept { return outputs_.size(); }
    std::span<const std::uint32_t> outputs() const noexcept { return outputs_; }
    std::uint32_t operator[](std::uint32_t input) const { return outputs_[input]; }

    /// Inputs sharing a length-j prefix have outputs sharing a length-j prefix.
    bool is_prefix_compatible() const;
    bool is_identity() const;
    std::size_t hash() const noexcept;

    friend bool operator==(const TransformTable&, const TransformTable&) = default;

private:
    struct Unchecked {};
    TransformTable(Unchecked, unsigned level, std::vector<std::uint32_t> outputs)
        : level_(level), outputs_(std::move(outputs)) {}

    friend TransformTable table_of(const MealyAutomaton&, State, unsigned);
    friend TransformTable compose(const TransformTable&, const TransformTable&);

    unsigned level_;
    std::vector<std::uint32_t> outputs_;
};

struct TransformTableHash {
    std::size_t operator()(const TransformTable& t) const noexcept { return t.hash(); }
};

/// Level-k table of f_q. Requires a binary alphabet; k <= kMaxTableLevel.
TransformTable table_of(const MealyAutomaton& a, State q, unsigned level);

/// f after g: result[w] = f[g[w]].
TransformTable compose(const TransformTable& f, const TransformTable& g);

/// Table of the product f_{q_1} f_{q_2} ... f_{q_r} (rightmost acts first).
/// The empty product is the identity.
TransformTable table_of_word(const MealyAutomaton& a, std::span<const State> word, unsigned level);

} // namespace mealy
