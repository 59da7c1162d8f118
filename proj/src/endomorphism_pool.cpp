#include "mealy/endomorphism_pool.hpp"

#include "mealy/errors.hpp"

#include <limits>
#include <numeric>

namespace mealy {

EndomorphismPool::EndomorphismPool(std::size_t alphabet_size) : m_(alphabet_size) {
    if (m_ == 0) throw InputDomainError("alphabet must be non-empty");
    // Node 0: the unique map on the empty level.
    levels_.push_back(0);
    data_.resize(stride(), 0);
    identity_by_level_.push_back(0);
}

Node EndomorphismPool::make(unsigned level, std::span<const Letter> sigma, std::span<const Node> sections) {
    if (level == 0) return 0;
    if (level > std::numeric_limits<std::uint8_t>::max()) throw CapacityError("pool level too large");
    if (sigma.size() != m_ || sections.size() != m_) throw InputDomainError("node arity differs from alphabet size");

    std::u32string key;
    key.reserve(1 + stride());
    key.push_back(level);
    for (Letter s : sigma) {
        if (s >= m_) throw InputDomainError("sigma letter out of range");
        key.push_back(s);
    }
    for (Node c : sections) {
        if (c >= levels_.size() || levels_[c] + 1U != level) throw InputDomainError("section has the wrong level");
        key.push_back(c);
    }
    auto [it, fresh] = index_.try_emplace(std::move(key), static_cast<Node>(levels_.size()));
    if (fresh) {
        if (levels_.size() == std::numeric_limits<Node>::max()) throw CapacityError("endomorphism pool is full");
        levels_.push_back(static_cast<std::uint8_t>(level));
        data_.insert(data_.end(), sigma.begin(), sigma.end());
        data_.insert(data_.end(), sections.begin(), sections.end());
    }
    return it->second;
}

Node EndomorphismPool::identity(unsigned level) {
    std::vector<Letter> sigma(m_);
    std::iota(sigma.begin(), sigma.end(), 0u);
    while (identity_by_level_.size() <= level) {
        const unsigned next_level = static_cast<unsigned>(identity_by_level_.size());
        std::vector<Node> sections(m_, identity_by_level_.back());
        identity_by_level_.push_back(make(next_level, sigma, sections));
    }
    return identity_by_level_[level];
}

Node EndomorphismPool::compose(Node f, Node g) {
    const unsigned lvl = level(f);
    if (lvl != level(g)) throw InputDomainError("composing nodes of different levels");
    if (lvl == 0) return 0;

    const std::uint64_t key = (std::uint64_t{f} << 32) | g;
    if (auto it = compose_memo_.find(key); it != compose_memo_.end()) return it->second;

    std::vector<Letter> perm(m_);
    std::vector<Node> sections(m_);
    for (Letter x = 0; x < m_; ++x) {
        const Letter y = sigma(g, x);
        perm[x] = sigma(f, y);
        const Node fs = section(f, y);
        const Node gs = section(g, x);
        sections[x] = compose(fs, gs);
    }
    const Node result = make(lvl, perm, sections);
    compose_memo_.emplace(key, result);
    return result;
}

Node EndomorphismPool::product(std::span<const Node> factors, unsigned level) {
    Node acc = identity(level);
    for (std::size_t i = factors.size(); i-- > 0;) acc = compose(factors[i], acc);
    return acc;
}

std::vector<Node> EndomorphismPool::from_automaton(const MealyAutomaton& a, unsigned level) {
    if (a.alphabet_size() != m_) throw InputDomainError("automaton alphabet differs from the pool alphabet");
    std::vector<Node> current(a.state_count(), 0);
    std::vector<Node> next(a.state_count());
    std::vector<Node> sections(m_);
    for (unsigned j = 1; j <= level; ++j) {
        for (State q = 0; q < a.state_count(); ++q) {
            for (Letter x = 0; x < m_; ++x) sections[x] = current[a.next(q, x)];
            next[q] = make(j, a.outputs_of(q), sections);
        }
        current.swap(next);
    }
    return current;
}

Node EndomorphismPool::from_table(const TransformTable& table) {
    if (m_ != 2) throw InputDomainError("flat tables describe binary trees");
    const unsigned k = table.level();
    // Level-j nodes for every length-(k-j) prefix, built from the bottom.
    const std::size_t leaves = std::size_t{1} << k;
    std::vector<Node> nodes(leaves, 0);
    std::vector<std::uint32_t> prefix_out(leaves);
    for (unsigned j = 1; j <= k; ++j) {
        const unsigned depth = k - j; // letters consumed before this node
        const std::size_t count = std::size_t{1} << depth;
        std::vector<Node> parents(count);
        for (std::size_t p = 0; p < count; ++p) {
            Letter sigma[2];
            Node sections[2];
            for (Letter x = 0; x < 2; ++x) {
                const std::size_t child = p | (std::size_t{x} << depth);
                // any completion of the prefix gives the same output letter at position depth
                sigma[x] = (table[static_cast<std::uint32_t>(child)] >> depth) & 1u;
                sections[x] = nodes[child];
            }
            parents[p] = make(j, sigma, sections);
        }
        nodes.swap(parents);
    }
    return nodes[0];
}

TransformTable EndomorphismPool::to_table(Node f) const {
    if (m_ != 2) throw InputDomainError("flat tables describe binary trees");
    const unsigned k = level(f);
    if (k > kMaxTableLevel) throw CapacityError("node level exceeds the flat table limit");
    std::vector<std::uint32_t> out(std::size_t{1} << k);
    for (std::uint32_t w = 0; w < out.size(); ++w) out[w] = encode_word(apply(f, decode_word(w, k)));
    return TransformTable(k, std::move(out));
}

LetterWord EndomorphismPool::apply(Node f, std::span<const Letter> word) const {
    if (word.size() > level(f)) throw InputDomainError("word longer than the node level");
    LetterWord out;
    out.reserve(word.size());
    for (Letter x : word) {
        if (x >= m_) throw InputDomainError("letter out of range");
        out.push_back(sigma(f, x));
        f = section(f, x);
    }
    return out;
}

} // namespace mealy
