#pragma once

#include "mealy/automaton.hpp"
#include "mealy/endomorphism_pool.hpp"
#include "mealy/transform.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace mealy::i2 {

/// Generators of S(I2). Their values are the state indices in i2_automaton().
enum class Gen : std::uint8_t { F0 = 0, F1 = 1 };
using GenWord = std::vector<Gen>;

/// Parses a word over {'0', '1'}; '0' is f0 and '1' is f1. Whitespace is
/// not allowed. ParseError reports the 1-based column of the bad character.
GenWord parse_gen_word(std::string_view text);
std::string format_gen_word(const GenWord& w);

/// f0^e1 f1 (f0 f1)^p_1 f1 ... f1 (f0 f1)^p_k f1 (f0 f1)^tail f0^e2 with
/// p_1 < ... < p_k, or one of the two words without f1.
struct NormalForm {
    enum class Kind : std::uint8_t { One, JustF0, General };

    Kind kind = Kind::One;
    unsigned e1 = 0;
    std::vector<unsigned> p;
    unsigned tail = 0;
    unsigned e2 = 0;

    static NormalForm one() { return {}; }
    static NormalForm just_f0() { return {Kind::JustF0, 0, {}, 0, 0}; }
    /// Throws InputDomainError unless e1, e2 are 0/1 and p is strictly increasing.
    static NormalForm general(unsigned e1, std::vector<unsigned> p, unsigned tail, unsigned e2);

    std::size_t length() const noexcept;
    /// e1=..;p=[..];tail=..;e2=.. or the literals "1" and "f0".
    std::string to_string() const;

    friend bool operator==(const NormalForm&, const NormalForm&) = default;
    friend auto operator<=>(const NormalForm&, const NormalForm&) = default;
};

struct Reduction {
    NormalForm form;
    /// Relation applications used; each one shortens the word by two letters.
    std::size_t steps = 0;
};

Reduction reduce_counted(const GenWord& w);
NormalForm reduce(const GenWord& w);

/// Normal form in S_n: reduce, then cut at the first block whose exponent
/// reaches n - 1, since f1 (f0 f1)^(n-1) is a left zero there.
NormalForm reduce_quotient(const GenWord& w, unsigned n);

bool words_equal(const GenWord& a, const GenWord& b);
bool words_equal_quotient(const GenWord& a, const GenWord& b, unsigned n);

GenWord nf_to_word(const NormalForm& nf);

/// f1 (f0 f1)^p f1 (f0 f1)^p f1, the long side of r_p.
GenWord relation_lhs(unsigned p);
/// f1 (f0 f1)^p f1 (f0 f1)^(p-1) f0, or f1 when p = 0.
GenWord relation_rhs(unsigned p);

/// Level-k table of a generator word.
TransformTable word_table(const GenWord& w, unsigned level);
/// Same element as a node of a hash-consed pool over the binary alphabet.
Node word_node(EndomorphismPool& pool, const GenWord& w, unsigned level);

/// Both sides of r_p have equal level-k tables.
bool verify_relation(unsigned p, unsigned level);

struct LeftZeroCheck {
    bool holds_at_n = false;
    bool fails_at_n_plus_1 = false;
};

/// Level n: z = f1 (f0 f1)^(n-1) is the constant x1^n and z f1 = z f0 = z.
/// Level n + 1: neither equation holds.
LeftZeroCheck verify_left_zero(unsigned n);

/// Image of x0^n under nf = f0 f1 (f0 f1)^p_1 f1 ... f1 (f0 f1)^tail with
/// p_k < n - 1 and tail <= n - 1. Computed from the table and from the run
/// pattern; ConsistencyError if they differ.
LetterWord eval_test_word(const NormalForm& nf, unsigned n);
/// Run pattern alone.
LetterWord test_word_pattern(const NormalForm& nf, unsigned n);

/// Width max - min of the alternating partial sums of f1-block sizes.
unsigned width(const GenWord& w);

/// Visits every normal form of length exactly n.
void for_each_normal_form(std::size_t n, const std::function<void(const NormalForm&)>& visit);
std::uint64_t enumerate_normal_forms(std::size_t n);

/// Visits every normal form of S_n (quotient bounds).
void for_each_quotient_form(unsigned n, const std::function<void(const NormalForm&)>& visit);

} // namespace mealy::i2
