#include "mealy/i2.hpp"

#include "mealy/errors.hpp"

#include <algorithm>
#include <limits>

namespace mealy::i2 {

namespace {

constexpr Gen F0 = Gen::F0;
constexpr Gen F1 = Gen::F1;

const MealyAutomaton& automaton() {
    static const MealyAutomaton a = i2_automaton();
    return a;
}

std::vector<State> as_states(const GenWord& w) {
    std::vector<State> states(w.size());
    std::transform(w.begin(), w.end(), states.begin(), [](Gen g) { return static_cast<State>(g); });
    return states;
}

void append_block(GenWord& out, unsigned p) {
    out.push_back(F1);
    for (unsigned i = 0; i < p; ++i) {
        out.push_back(F0);
        out.push_back(F1);
    }
}

// Stack pass removing f0 f0 and turning f1 f1 f1 into f1.
GenWord cancel(const GenWord& w, std::size_t& steps) {
    GenWord s;
    s.reserve(w.size());
    for (Gen g : w) {
        s.push_back(g);
        const std::size_t n = s.size();
        if (n >= 2 && s[n - 1] == F0 && s[n - 2] == F0) {
            s.resize(n - 2);
            ++steps;
        } else if (n >= 3 && s[n - 1] == F1 && s[n - 2] == F1 && s[n - 3] == F1) {
            s.resize(n - 2);
            ++steps;
        }
    }
    return s;
}

struct Parsed {
    unsigned e1 = 0;
    std::vector<unsigned> blocks;
    unsigned e2 = 0;
};

// Input has no f0 f0 and no f1 f1 f1.
Parsed parse_blocks(const GenWord& w) {
    Parsed r;
    std::size_t i = 0;
    if (i < w.size() && w[i] == F0) {
        r.e1 = 1;
        ++i;
    }
    while (i < w.size()) {
        if (w[i] == F0) {
            if (i + 1 != w.size()) throw ConsistencyError("unexpected f0 while parsing blocks");
            r.e2 = 1;
            break;
        }
        ++i;
        unsigned p = 0;
        while (i + 1 < w.size() && w[i] == F0 && w[i + 1] == F1) {
            ++p;
            i += 2;
        }
        r.blocks.push_back(p);
    }
    return r;
}

} // namespace

GenWord parse_gen_word(std::string_view text) {
    GenWord w;
    w.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '0') {
            w.push_back(F0);
        } else if (text[i] == '1') {
            w.push_back(F1);
        } else {
            throw ParseError(std::string("expected '0' or '1', got '") + text[i] + "'", 1, i + 1);
        }
    }
    return w;
}

std::string format_gen_word(const GenWord& w) {
    std::string s;
    s.reserve(w.size());
    for (Gen g : w) s.push_back(g == F0 ? '0' : '1');
    return s;
}

NormalForm NormalForm::general(unsigned e1, std::vector<unsigned> p, unsigned tail, unsigned e2) {
    if (e1 > 1 || e2 > 1) throw InputDomainError("f0 exponents of a normal form must be 0 or 1");
    for (std::size_t i = 1; i < p.size(); ++i) {
        if (p[i - 1] >= p[i]) throw InputDomainError("normal form exponents must be strictly increasing");
    }
    return {Kind::General, e1, std::move(p), tail, e2};
}

std::size_t NormalForm::length() const noexcept {
    switch (kind) {
    case Kind::One: return 0;
    case Kind::JustF0: return 1;
    case Kind::General: break;
    }
    std::size_t n = e1 + e2 + 2 * std::size_t{tail} + 1;
    for (unsigned x : p) n += 2 * std::size_t{x} + 1;
    return n;
}

std::string NormalForm::to_string() const {
    if (kind == Kind::One) return "1";
    if (kind == Kind::JustF0) return "f0";
    std::string s = "e1=" + std::to_string(e1) + ";p=[";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(p[i]);
    }
    s += "];tail=" + std::to_string(tail) + ";e2=" + std::to_string(e2);
    return s;
}

Reduction reduce_counted(const GenWord& w) {
    Reduction result;
    GenWord current = w;
    for (;;) {
        current = cancel(current, result.steps);
        Parsed parsed = parse_blocks(current);
        if (parsed.blocks.empty()) {
            result.form = parsed.e1 ? NormalForm::just_f0() : NormalForm::one();
            break;
        }

        // Leftmost j with p_j >= p_{j+1}, block j+1 not the last one.
        const auto& b = parsed.blocks;
        std::size_t j = b.size();
        for (std::size_t i = 0; i + 2 < b.size(); ++i) {
            if (b[i] >= b[i + 1]) {
                j = i;
                break;
            }
        }
        if (j == b.size()) {
            const unsigned tail = b.back();
            parsed.blocks.pop_back();
            result.form = NormalForm{NormalForm::Kind::General, parsed.e1, std::move(parsed.blocks), tail, parsed.e2};
            break;
        }

        // Rewrite f1 (f0f1)^q f1 (f0f1)^q f1 -> f1 (f0f1)^q f1 (f0f1)^(q-1) f0,
        // starting inside block j.
        const unsigned q = b[j + 1];
        std::size_t start = parsed.e1;
        for (std::size_t i = 0; i < j; ++i) start += 2 * std::size_t{b[i]} + 1;
        start += 2 * std::size_t{b[j] - q};
        const GenWord rhs = relation_rhs(q);
        GenWord next(current.begin(), current.begin() + static_cast<std::ptrdiff_t>(start));
        next.insert(next.end(), rhs.begin(), rhs.end());
        next.insert(next.end(), current.begin() + static_cast<std::ptrdiff_t>(start + 4 * std::size_t{q} + 3),
                    current.end());
        current = std::move(next);
        ++result.steps;
    }
    if (result.steps > w.size() / 2) {
        throw ConsistencyError("reduction used more than |w|/2 relation applications");
    }
    return result;
}

NormalForm reduce(const GenWord& w) {
    return reduce_counted(w).form;
}

NormalForm reduce_quotient(const GenWord& w, unsigned n) {
    if (n < 1) throw InputDomainError("quotient level must be at least 1");
    NormalForm nf = reduce(w);
    if (nf.kind != NormalForm::Kind::General) return nf;
    const unsigned cap = n - 1;
    auto it = std::find_if(nf.p.begin(), nf.p.end(), [cap](unsigned x) { return x >= cap; });
    if (it != nf.p.end()) {
        nf.p.erase(it, nf.p.end());
        nf.tail = cap;
        nf.e2 = 0;
    } else if (nf.tail >= cap) {
        nf.tail = cap;
        nf.e2 = 0;
    }
    return nf;
}

bool words_equal(const GenWord& a, const GenWord& b) {
    return reduce(a) == reduce(b);
}

bool words_equal_quotient(const GenWord& a, const GenWord& b, unsigned n) {
    return reduce_quotient(a, n) == reduce_quotient(b, n);
}

GenWord nf_to_word(const NormalForm& nf) {
    switch (nf.kind) {
    case NormalForm::Kind::One: return {};
    case NormalForm::Kind::JustF0: return {F0};
    case NormalForm::Kind::General: break;
    }
    const NormalForm checked = NormalForm::general(nf.e1, nf.p, nf.tail, nf.e2);
    GenWord w;
    w.reserve(checked.length());
    if (checked.e1) w.push_back(F0);
    for (unsigned x : checked.p) append_block(w, x);
    append_block(w, checked.tail);
    if (checked.e2) w.push_back(F0);
    return w;
}

GenWord relation_lhs(unsigned p) {
    GenWord w;
    append_block(w, p);
    append_block(w, p);
    w.push_back(F1);
    return w;
}

GenWord relation_rhs(unsigned p) {
    if (p == 0) return {F1};
    GenWord w;
    append_block(w, p);
    append_block(w, p - 1);
    w.push_back(F0);
    return w;
}

TransformTable word_table(const GenWord& w, unsigned level) {
    return table_of_word(automaton(), as_states(w), level);
}

Node word_node(EndomorphismPool& pool, const GenWord& w, unsigned level) {
    if (pool.alphabet_size() != 2) throw InputDomainError("I2 words need a binary pool");
    const auto gens = pool.from_automaton(automaton(), level);
    std::vector<Node> factors(w.size());
    std::transform(w.begin(), w.end(), factors.begin(), [&](Gen g) { return gens[static_cast<std::size_t>(g)]; });
    return pool.product(factors, level);
}

bool verify_relation(unsigned p, unsigned level) {
    return word_table(relation_lhs(p), level) == word_table(relation_rhs(p), level);
}

LeftZeroCheck verify_left_zero(unsigned n) {
    if (n < 1) throw InputDomainError("left-zero level must be at least 1");
    if (n + 1 > kMaxTableLevel) throw CapacityError("left-zero level exceeds the table cap");
    GenWord z;
    append_block(z, n - 1);
    GenWord z1 = z;
    z1.push_back(F1);
    GenWord z0 = z;
    z0.push_back(F0);

    LeftZeroCheck check;
    {
        const auto tz = word_table(z, n);
        const auto all_x1 = static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
        check.holds_at_n = tz == TransformTable::constant(n, all_x1) && word_table(z1, n) == tz &&
                           word_table(z0, n) == tz;
    }
    {
        const auto tz = word_table(z, n + 1);
        check.fails_at_n_plus_1 = word_table(z1, n + 1) != tz && word_table(z0, n + 1) != tz;
    }
    return check;
}

LetterWord test_word_pattern(const NormalForm& nf, unsigned n) {
    if (n < 1) throw InputDomainError("test word level must be at least 1");
    if (nf.kind != NormalForm::Kind::General || nf.e1 != 1 || nf.e2 != 0) {
        throw InputDomainError("test word needs the shape f0 f1 ... (f0 f1)^tail");
    }
    if ((!nf.p.empty() && nf.p.back() >= n - 1) || nf.tail > n - 1) {
        throw InputDomainError("test word exponents exceed the level bounds");
    }
    LetterWord out;
    out.reserve(n);
    long previous = -1;
    for (std::size_t i = 0; i < nf.p.size(); ++i) {
        const Letter x = static_cast<Letter>(i % 2);
        for (long r = previous; r < static_cast<long>(nf.p[i]); ++r) out.push_back(x);
        previous = nf.p[i];
    }
    const Letter last = static_cast<Letter>(nf.p.size() % 2);
    while (out.size() < n) out.push_back(last);
    return out;
}

LetterWord eval_test_word(const NormalForm& nf, unsigned n) {
    LetterWord expected = test_word_pattern(nf, n);
    const auto table = word_table(nf_to_word(nf), n);
    LetterWord actual = decode_word(table[0], n);
    if (actual != expected) {
        throw ConsistencyError("test word pattern disagrees with the table for " + nf.to_string());
    }
    return actual;
}

unsigned width(const GenWord& w) {
    std::size_t i = 0;
    while (i < w.size() && w[i] == F0) ++i;

    std::vector<unsigned> blocks;
    std::size_t gap = 0;
    for (; i < w.size(); ++i) {
        if (w[i] == F0) {
            ++gap;
            continue;
        }
        if (blocks.empty() || gap % 2 == 0) {
            blocks.push_back(1);
        } else {
            ++blocks.back();
        }
        gap = 0;
    }

    long sum = 0;
    long lo = 0;
    long hi = 0;
    for (std::size_t j = 0; j < blocks.size(); ++j) {
        sum += (j % 2 == 0) ? static_cast<long>(blocks[j]) : -static_cast<long>(blocks[j]);
        lo = std::min(lo, sum);
        hi = std::max(hi, sum);
    }
    return static_cast<unsigned>(hi - lo);
}

namespace {

// Strictly increasing sequences with sum of (2p + 1) equal to budget and
// every element >= min_p.
void increasing_sequences(std::size_t budget, unsigned min_p, std::vector<unsigned>& prefix,
                          const std::function<void(const std::vector<unsigned>&)>& visit) {
    if (budget == 0) {
        visit(prefix);
        return;
    }
    for (unsigned p = min_p; 2 * std::size_t{p} + 1 <= budget; ++p) {
        prefix.push_back(p);
        increasing_sequences(budget - (2 * std::size_t{p} + 1), p + 1, prefix, visit);
        prefix.pop_back();
    }
}

} // namespace

void for_each_normal_form(std::size_t n, const std::function<void(const NormalForm&)>& visit) {
    if (n == 0) visit(NormalForm::one());
    if (n == 1) visit(NormalForm::just_f0());
    std::vector<unsigned> prefix;
    for (unsigned e1 = 0; e1 <= 1; ++e1) {
        for (unsigned e2 = 0; e2 <= 1; ++e2) {
            for (unsigned tail = 0;; ++tail) {
                const std::size_t fixed = e1 + e2 + 2 * std::size_t{tail} + 1;
                if (fixed > n) break;
                increasing_sequences(n - fixed, 0, prefix, [&](const std::vector<unsigned>& p) {
                    visit(NormalForm{NormalForm::Kind::General, e1, p, tail, e2});
                });
            }
        }
    }
}

std::uint64_t enumerate_normal_forms(std::size_t n) {
    std::uint64_t count = 0;
    for_each_normal_form(n, [&](const NormalForm&) { ++count; });
    return count;
}

void for_each_quotient_form(unsigned n, const std::function<void(const NormalForm&)>& visit) {
    if (n < 1) throw InputDomainError("quotient level must be at least 1");
    if (n > 31) throw CapacityError("quotient level too large to enumerate");
    visit(NormalForm::one());
    visit(NormalForm::just_f0());
    const unsigned bound = n - 1;
    std::vector<unsigned> p;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << bound); ++mask) {
        p.clear();
        for (unsigned i = 0; i < bound; ++i) {
            if (mask >> i & 1U) p.push_back(i);
        }
        for (unsigned e1 = 0; e1 <= 1; ++e1) {
            for (unsigned tail = 0; tail <= bound; ++tail) {
                for (unsigned e2 = 0; tail + e2 <= bound && e2 <= 1; ++e2) {
                    visit(NormalForm{NormalForm::Kind::General, e1, p, tail, e2});
                }
            }
        }
    }
}

} // namespace mealy::i2
