#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace mealy {

using State = std::uint32_t;
using Letter = std::uint32_t;
using LetterWord = std::vector<Letter>;

/// Resource caps shared by the automaton operations.
struct Limits {
    std::size_t max_states = 1'000'000;
};

/// A non-initial Mealy automaton whose input and output alphabets coincide.
///
/// Letters are 0..m-1 and states 0..n-1. Tables are total and stored
/// row-major by state. Labels are cosmetic and ignored by comparisons.
class MealyAutomaton {
public:
    MealyAutomaton(std::size_t alphabet_size,
                   std::vector<std::vector<State>> transition,
                   std::vector<std::vector<Letter>> output,
                   std::vector<std::string> labels = {});

    std::size_t alphabet_size() const noexcept { return m_; }
    std::size_t state_count() const noexcept { return n_; }

    State next(State q, Letter x) const { return next_[q * m_ + x]; }
    Letter out(State q, Letter x) const { return out_[q * m_ + x]; }

    std::span<const State> transitions_of(State q) const { return {next_.data() + q * m_, m_}; }
    std::span<const Letter> outputs_of(State q) const { return {out_.data() + q * m_, m_}; }

    const std::string& label(State q) const { return labels_[q]; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    friend bool operator==(const MealyAutomaton& a, const MealyAutomaton& b) {
        return a.m_ == b.m_ && a.n_ == b.n_ && a.next_ == b.next_ && a.out_ == b.out_;
    }

private:
    std::size_t m_;
    std::size_t n_;
    std::vector<State> next_;
    std::vector<Letter> out_;
    std::vector<std::string> labels_;
};

/// The recursion f_q = (f_{pi(x_0,q)}, ..., f_{pi(x_{m-1},q)}) sigma_q.
struct WreathForm {
    std::vector<State> successor_states;
    std::vector<Letter> output_map;

    friend bool operator==(const WreathForm&, const WreathForm&) = default;
};

/// The two-state automaton over {x0, x1} of intermediate growth:
/// f0 = (f0, f0)(x1, x0), f1 = (f1, f0)(x1, x1).
MealyAutomaton i2_automaton();

/// One state over m letters acting as the identity.
MealyAutomaton identity_automaton(std::size_t alphabet_size);

/// Runs the transducer from q. Throws InputDomainError on a bad state or letter.
LetterWord apply(const MealyAutomaton& a, State q, std::span<const Letter> word);

WreathForm unrolled_form(const MealyAutomaton& a, State q);

/// Product automaton on Q_a x Q_b. State (q1, q2) has index q1 * |Q_b| + q2
/// and acts as f_{q1} after f_{q2}.
MealyAutomaton product(const MealyAutomaton& a, const MealyAutomaton& b);

/// Left-associated n-fold product, not minimized. n must be positive.
MealyAutomaton power(const MealyAutomaton& a, std::size_t n, const Limits& limits = {});

/// Block index of every state under the coarsest partition into states
/// with equal automatic transformations. Blocks are numbered in order of
/// first appearance.
std::vector<State> equivalence_classes(const MealyAutomaton& a);

/// Reduced automaton: one state per class of equal transformations.
/// Unreachable states are kept, since every state defines a transformation.
MealyAutomaton minimize(const MealyAutomaton& a, const Limits& limits = {});

/// Gamma_a(1..N): state counts of the reduced powers of a.
std::vector<std::uint64_t> automaton_growth(const MealyAutomaton& a, std::size_t N,
                                            const Limits& limits = {});

bool is_invertible(const MealyAutomaton& a);

/// Exhaustive search over (theta, xi, psi). Automata of different sizes are
/// never isomorphic. Throws CapacityError when the search space is too large.
bool are_isomorphic(const MealyAutomaton& a, const MealyAutomaton& b);

/// Isomorphism with psi = xi.
bool are_similar(const MealyAutomaton& a, const MealyAutomaton& b);

/// The automaton b with pi_b(xi x, theta q) = theta pi_a(x, q) and
/// lambda_b(xi x, theta q) = psi lambda_a(x, q).
MealyAutomaton relabel(const MealyAutomaton& a, std::span<const State> theta,
                       std::span<const Letter> xi, std::span<const Letter> psi);

} // namespace mealy
