#include "mealy/automaton.hpp"

#include "mealy/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

namespace mealy {

namespace {

struct VectorHash {
    std::size_t operator()(const std::vector<State>& v) const noexcept {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (State s : v) {
            h ^= s + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

void check_state(const MealyAutomaton& a, State q) {
    if (q >= a.state_count()) {
        throw InputDomainError("state " + std::to_string(q) + " out of range (automaton has " +
                               std::to_string(a.state_count()) + " states)");
    }
}

bool is_permutation_of_range(std::span<const std::uint32_t> p, std::size_t n) {
    if (p.size() != n) return false;
    std::vector<bool> seen(n, false);
    for (auto v : p) {
        if (v >= n || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

std::uint64_t factorial_capped(std::size_t n, std::uint64_t cap) {
    std::uint64_t f = 1;
    for (std::size_t i = 2; i <= n; ++i) {
        f *= i;
        if (f > cap) return cap + 1;
    }
    return f;
}

bool isomorphism_search(const MealyAutomaton& a, const MealyAutomaton& b, bool similar) {
    if (a.alphabet_size() != b.alphabet_size() || a.state_count() != b.state_count()) return false;
    const std::size_t m = a.alphabet_size();
    const std::size_t n = a.state_count();

    constexpr std::uint64_t kCap = 50'000'000;
    const std::uint64_t nf = factorial_capped(n, kCap);
    const std::uint64_t mf = factorial_capped(m, kCap);
    const std::uint64_t total = similar ? nf * mf : nf * mf * mf;
    if (nf > kCap || mf > kCap || total > kCap) {
        throw CapacityError("isomorphism search space too large");
    }

    std::vector<State> theta(n);
    std::vector<Letter> xi(m);
    std::vector<Letter> psi(m);
    std::iota(xi.begin(), xi.end(), 0);
    do {
        std::iota(psi.begin(), psi.end(), 0);
        do {
            const auto& out_map = similar ? xi : psi;
            std::iota(theta.begin(), theta.end(), 0);
            do {
                bool ok = true;
                for (State q = 0; q < n && ok; ++q) {
                    for (Letter x = 0; x < m && ok; ++x) {
                        ok = theta[a.next(q, x)] == b.next(theta[q], xi[x]) &&
                             out_map[a.out(q, x)] == b.out(theta[q], xi[x]);
                    }
                }
                if (ok) return true;
            } while (std::next_permutation(theta.begin(), theta.end()));
            if (similar) break;
        } while (std::next_permutation(psi.begin(), psi.end()));
    } while (std::next_permutation(xi.begin(), xi.end()));
    return false;
}

} // namespace

MealyAutomaton::MealyAutomaton(std::size_t alphabet_size,
                               std::vector<std::vector<State>> transition,
                               std::vector<std::vector<Letter>> output,
                               std::vector<std::string> labels)
    : m_(alphabet_size), n_(transition.size()) {
    if (m_ == 0) throw InputDomainError("alphabet must be non-empty");
    if (n_ == 0) throw InputDomainError("automaton must have at least one state");
    if (output.size() != n_) throw InputDomainError("output table has wrong number of rows");
    if (!labels.empty() && labels.size() != n_) throw InputDomainError("label count differs from state count");

    next_.reserve(n_ * m_);
    out_.reserve(n_ * m_);
    for (std::size_t q = 0; q < n_; ++q) {
        if (transition[q].size() != m_ || output[q].size() != m_) {
            throw InputDomainError("row " + std::to_string(q) + " does not have " + std::to_string(m_) + " entries");
        }
        for (std::size_t x = 0; x < m_; ++x) {
            if (transition[q][x] >= n_) throw InputDomainError("transition target out of range");
            if (output[q][x] >= m_) throw InputDomainError("output letter out of range");
            next_.push_back(transition[q][x]);
            out_.push_back(output[q][x]);
        }
    }
    if (labels.empty()) {
        labels.reserve(n_);
        for (std::size_t q = 0; q < n_; ++q) labels.push_back("q" + std::to_string(q));
    }
    labels_ = std::move(labels);
}

MealyAutomaton i2_automaton() {
    return MealyAutomaton(2, {{0, 0}, {1, 0}}, {{1, 0}, {1, 1}}, {"f0", "f1"});
}

MealyAutomaton identity_automaton(std::size_t alphabet_size) {
    std::vector<Letter> row(alphabet_size);
    std::iota(row.begin(), row.end(), 0);
    return MealyAutomaton(alphabet_size, {std::vector<State>(alphabet_size, 0)}, {row}, {"e"});
}

LetterWord apply(const MealyAutomaton& a, State q, std::span<const Letter> word) {
    check_state(a, q);
    LetterWord result;
    result.reserve(word.size());
    for (Letter x : word) {
        if (x >= a.alphabet_size()) {
            throw InputDomainError("letter " + std::to_string(x) + " out of range");
        }
        result.push_back(a.out(q, x));
        q = a.next(q, x);
    }
    return result;
}

WreathForm unrolled_form(const MealyAutomaton& a, State q) {
    check_state(a, q);
    auto t = a.transitions_of(q);
    auto o = a.outputs_of(q);
    return {{t.begin(), t.end()}, {o.begin(), o.end()}};
}

MealyAutomaton product(const MealyAutomaton& a, const MealyAutomaton& b) {
    if (a.alphabet_size() != b.alphabet_size()) {
        throw InputDomainError("product of automata over different alphabets");
    }
    const std::size_t m = a.alphabet_size();
    const std::size_t nb = b.state_count();
    const std::size_t n = a.state_count() * nb;

    std::vector<std::vector<State>> trans(n, std::vector<State>(m));
    std::vector<std::vector<Letter>> out(n, std::vector<Letter>(m));
    std::vector<std::string> labels(n);
    for (State q1 = 0; q1 < a.state_count(); ++q1) {
        for (State q2 = 0; q2 < nb; ++q2) {
            const std::size_t q = q1 * nb + q2;
            labels[q] = a.label(q1) + b.label(q2);
            for (Letter x = 0; x < m; ++x) {
                const Letter y = b.out(q2, x);
                trans[q][x] = static_cast<State>(a.next(q1, y) * nb + b.next(q2, x));
                out[q][x] = a.out(q1, y);
            }
        }
    }
    return MealyAutomaton(m, std::move(trans), std::move(out), std::move(labels));
}

MealyAutomaton power(const MealyAutomaton& a, std::size_t n, const Limits& limits) {
    if (n == 0) throw InputDomainError("power exponent must be positive");
    MealyAutomaton result = a;
    for (std::size_t i = 1; i < n; ++i) {
        if (result.state_count() * a.state_count() > limits.max_states) {
            throw CapacityError("power exceeds the state cap of " + std::to_string(limits.max_states));
        }
        result = product(result, a);
    }
    return result;
}

std::vector<State> equivalence_classes(const MealyAutomaton& a) {
    const std::size_t n = a.state_count();
    const std::size_t m = a.alphabet_size();
    std::vector<State> block(n);

    std::size_t blocks = 0;
    {
        std::map<std::vector<Letter>, State> ids;
        for (State q = 0; q < n; ++q) {
            auto o = a.outputs_of(q);
            auto [it, fresh] = ids.try_emplace(std::vector<Letter>(o.begin(), o.end()), static_cast<State>(ids.size()));
            block[q] = it->second;
        }
        blocks = ids.size();
    }

    std::vector<State> signature(m + 1);
    std::vector<State> refined(n);
    for (;;) {
        std::unordered_map<std::vector<State>, State, VectorHash> ids;
        ids.reserve(blocks * 2);
        for (State q = 0; q < n; ++q) {
            signature[0] = block[q];
            for (Letter x = 0; x < m; ++x) signature[x + 1] = block[a.next(q, x)];
            auto [it, fresh] = ids.try_emplace(signature, static_cast<State>(ids.size()));
            refined[q] = it->second;
        }
        const bool stable = ids.size() == blocks;
        blocks = ids.size();
        block.swap(refined);
        if (stable) break;
    }
    return block;
}

MealyAutomaton minimize(const MealyAutomaton& a, const Limits& limits) {
    if (a.state_count() > limits.max_states) {
        throw CapacityError("minimize input exceeds the state cap of " + std::to_string(limits.max_states));
    }
    const auto block = equivalence_classes(a);
    const std::size_t blocks = *std::max_element(block.begin(), block.end()) + 1;
    const std::size_t m = a.alphabet_size();

    std::vector<State> representative(blocks, static_cast<State>(a.state_count()));
    for (State q = 0; q < a.state_count(); ++q) {
        if (representative[block[q]] == a.state_count()) representative[block[q]] = q;
    }
    std::vector<std::vector<State>> trans(blocks, std::vector<State>(m));
    std::vector<std::vector<Letter>> out(blocks, std::vector<Letter>(m));
    std::vector<std::string> labels(blocks);
    for (State b = 0; b < blocks; ++b) {
        const State r = representative[b];
        labels[b] = a.label(r);
        for (Letter x = 0; x < m; ++x) {
            trans[b][x] = block[a.next(r, x)];
            out[b][x] = a.out(r, x);
        }
    }
    return MealyAutomaton(m, std::move(trans), std::move(out), std::move(labels));
}

std::vector<std::uint64_t> automaton_growth(const MealyAutomaton& a, std::size_t N, const Limits& limits) {
    if (N == 0) throw InputDomainError("growth length must be positive");
    std::vector<std::uint64_t> growth;
    growth.reserve(N);
    MealyAutomaton current = minimize(a, limits);
    growth.push_back(current.state_count());
    for (std::size_t n = 2; n <= N; ++n) {
        if (current.state_count() * a.state_count() > limits.max_states) {
            throw CapacityError("automaton growth at n=" + std::to_string(n) + " exceeds the state cap of " +
                                std::to_string(limits.max_states));
        }
        current = minimize(product(current, a), limits);
        growth.push_back(current.state_count());
    }
    return growth;
}

bool is_invertible(const MealyAutomaton& a) {
    for (State q = 0; q < a.state_count(); ++q) {
        if (!is_permutation_of_range(a.outputs_of(q), a.alphabet_size())) return false;
    }
    return true;
}

bool are_isomorphic(const MealyAutomaton& a, const MealyAutomaton& b) {
    return isomorphism_search(a, b, false);
}

bool are_similar(const MealyAutomaton& a, const MealyAutomaton& b) {
    return isomorphism_search(a, b, true);
}

MealyAutomaton relabel(const MealyAutomaton& a, std::span<const State> theta,
                       std::span<const Letter> xi, std::span<const Letter> psi) {
    const std::size_t m = a.alphabet_size();
    const std::size_t n = a.state_count();
    if (!is_permutation_of_range(theta, n) || !is_permutation_of_range(xi, m) ||
        !is_permutation_of_range(psi, m)) {
        throw InputDomainError("relabel expects permutations of the state set and alphabet");
    }
    std::vector<std::vector<State>> trans(n, std::vector<State>(m));
    std::vector<std::vector<Letter>> out(n, std::vector<Letter>(m));
    std::vector<std::string> labels(n);
    for (State q = 0; q < n; ++q) {
        labels[theta[q]] = a.label(q);
        for (Letter x = 0; x < m; ++x) {
            trans[theta[q]][xi[x]] = theta[a.next(q, x)];
            out[theta[q]][xi[x]] = psi[a.out(q, x)];
        }
    }
    return MealyAutomaton(m, std::move(trans), std::move(out), std::move(labels));
}

} // namespace mealy
