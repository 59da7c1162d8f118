#include "mealy/transform.hpp"

#include "mealy/errors.hpp"

#include <numeric>
#include <string>

namespace mealy {

namespace {

void check_level(unsigned level) {
    if (level > kMaxTableLevel) {
        throw CapacityError("table level " + std::to_string(level) + " exceeds the maximum of " +
                            std::to_string(kMaxTableLevel));
    }
}

} // namespace

std::uint32_t encode_word(std::span<const Letter> word) {
    if (word.size() > 32) throw CapacityError("word too long to pack");
    std::uint32_t bits = 0;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (word[i] > 1) throw InputDomainError("packed words are binary");
        bits |= word[i] << i;
    }
    return bits;
}

LetterWord decode_word(std::uint32_t bits, unsigned length) {
    LetterWord word(length);
    for (unsigned i = 0; i < length; ++i) word[i] = (bits >> i) & 1u;
    return word;
}

TransformTable::TransformTable(unsigned level, std::vector<std::uint32_t> outputs)
    : level_(level), outputs_(std::move(outputs)) {
    check_level(level_);
    if (outputs_.size() != (std::size_t{1} << level_)) {
        throw InputDomainError("a level-" + std::to_string(level_) + " table needs " +
                               std::to_string(std::size_t{1} << level_) + " entries");
    }
    const std::uint32_t limit = level_ == 32 ? 0 : (std::uint32_t{1} << level_);
    for (auto v : outputs_) {
        if (v >= limit) throw InputDomainError("table output longer than its level");
    }
    if (!is_prefix_compatible()) throw InputDomainError("table is not prefix compatible");
}

TransformTable TransformTable::identity(unsigned level) {
    check_level(level);
    std::vector<std::uint32_t> out(std::size_t{1} << level);
    std::iota(out.begin(), out.end(), 0u);
    return TransformTable(Unchecked{}, level, std::move(out));
}

TransformTable TransformTable::constant(unsigned level, std::uint32_t value) {
    check_level(level);
    if (value >= (std::uint32_t{1} << level)) throw InputDomainError("constant longer than the level");
    return TransformTable(Unchecked{}, level, std::vector<std::uint32_t>(std::size_t{1} << level, value));
}

bool TransformTable::is_prefix_compatible() const {
    for (unsigned j = 0; j < level_; ++j) {
        const std::uint32_t mask = (std::uint32_t{1} << j) - 1;
        for (std::uint32_t w = 0; w < outputs_.size(); ++w) {
            if ((outputs_[w] & mask) != (outputs_[w & mask] & mask)) return false;
        }
    }
    return true;
}

bool TransformTable::is_identity() const {
    for (std::uint32_t w = 0; w < outputs_.size(); ++w) {
        if (outputs_[w] != w) return false;
    }
    return true;
}

std::size_t TransformTable::hash() const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL ^ level_;
    for (auto v : outputs_) {
        h ^= v;
        h *= 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(h);
}

TransformTable table_of(const MealyAutomaton& a, State q, unsigned level) {
    check_level(level);
    if (a.alphabet_size() != 2) throw InputDomainError("transform tables need a binary alphabet");
    if (q >= a.state_count()) throw InputDomainError("state out of range");

    const std::size_t size = std::size_t{1} << level;
    std::vector<std::uint32_t> out(size, 0);
    std::vector<State> state(size, q);
    // Extend prefixes one letter at a time; entries below 2^j hold length-j prefixes.
    for (unsigned j = 0; j < level; ++j) {
        const std::uint32_t half = std::uint32_t{1} << j;
        for (std::uint32_t w = 0; w < half; ++w) {
            const State s = state[w];
            const std::uint32_t o = out[w];
            const std::uint32_t w1 = w | half;
            state[w1] = a.next(s, 1);
            out[w1] = o | (a.out(s, 1) << j);
            state[w] = a.next(s, 0);
            out[w] = o | (a.out(s, 0) << j);
        }
    }
    return TransformTable(TransformTable::Unchecked{}, level, std::move(out));
}

TransformTable compose(const TransformTable& f, const TransformTable& g) {
    if (f.level() != g.level()) throw InputDomainError("composing tables of different levels");
    std::vector<std::uint32_t> out(g.size());
    for (std::size_t w = 0; w < out.size(); ++w) out[w] = f.outputs_[g.outputs_[w]];
    return TransformTable(TransformTable::Unchecked{}, f.level(), std::move(out));
}

TransformTable table_of_word(const MealyAutomaton& a, std::span<const State> word, unsigned level) {
    if (word.empty()) return TransformTable::identity(level);
    for (State q : word) {
        if (q >= a.state_count()) throw InputDomainError("state out of range");
    }
    std::vector<TransformTable> generators;
    generators.reserve(a.state_count());
    for (State q = 0; q < a.state_count(); ++q) generators.push_back(table_of(a, q, level));

    TransformTable result = generators[word.back()];
    for (std::size_t i = word.size() - 1; i-- > 0;) {
        result = compose(generators[word[i]], result);
    }
    return result;
}

} // namespace mealy
