#include "mealy/automaton_io.hpp"

#include "mealy/errors.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace mealy {

namespace {

struct Token {
    std::string_view text;
    std::size_t column;
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;
        if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
            ++i;
            continue;
        }
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#') ++i;
        tokens.push_back({line.substr(start, i - start), start + 1});
    }
    return tokens;
}

class LineParser {
public:
    LineParser(std::vector<Token> tokens, std::size_t line_no, std::size_t line_length)
        : tokens_(std::move(tokens)), line_(line_no), end_column_(line_length + 1) {}

    void keyword(std::string_view expected) {
        const Token& t = take("'" + std::string(expected) + "'");
        if (t.text != expected) {
            throw ParseError("expected '" + std::string(expected) + "', found '" + std::string(t.text) + "'", line_,
                             t.column);
        }
    }

    std::string_view word(const std::string& what) { return take(what).text; }

    std::uint64_t number(const std::string& what, std::uint64_t bound) {
        const Token& t = take(what);
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
        if (ec != std::errc{} || ptr != t.text.data() + t.text.size()) {
            throw ParseError("expected " + what + ", found '" + std::string(t.text) + "'", line_, t.column);
        }
        if (value >= bound) {
            throw ParseError(what + " " + std::string(t.text) + " out of range (must be < " + std::to_string(bound) + ")",
                             line_, t.column);
        }
        return value;
    }

    void finish() const {
        if (pos_ < tokens_.size()) {
            throw ParseError("unexpected token '" + std::string(tokens_[pos_].text) + "'", line_, tokens_[pos_].column);
        }
    }

private:
    const Token& take(const std::string& what) {
        if (pos_ >= tokens_.size()) throw ParseError("expected " + what + " before end of line", line_, end_column_);
        return tokens_[pos_++];
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::size_t line_;
    std::size_t end_column_;
};

} // namespace

MealyAutomaton parse_automaton(std::string_view text) {
    std::size_t m = 0;
    std::size_t n = 0;
    std::vector<std::vector<State>> trans;
    std::vector<std::vector<Letter>> out;
    std::vector<std::string> labels;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    std::size_t stage = 0; // 0: alphabet, 1: states, 2: state rows
    while (pos <= text.size()) {
        const std::size_t eol = std::min(text.find('\n', pos), text.size());
        const std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;

        auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        LineParser p(std::move(tokens), line_no, line.size());
        if (stage == 0) {
            p.keyword("alphabet");
            m = p.number("alphabet size", 1u << 16);
            if (m == 0) throw ParseError("alphabet size must be positive", line_no, 1);
            p.finish();
            stage = 1;
        } else if (stage == 1) {
            p.keyword("states");
            n = p.number("state count", 1u << 24);
            if (n == 0) throw ParseError("state count must be positive", line_no, 1);
            p.finish();
            stage = 2;
        } else {
            if (trans.size() == n) {
                throw ParseError("more than " + std::to_string(n) + " state lines", line_no, 1);
            }
            p.keyword("state");
            labels.emplace_back(p.word("state name"));
            p.keyword("trans");
            std::vector<State> row_t(m);
            for (auto& t : row_t) t = static_cast<State>(p.number("state index", n));
            p.keyword("out");
            std::vector<Letter> row_o(m);
            for (auto& o : row_o) o = static_cast<Letter>(p.number("letter index", m));
            p.finish();
            trans.push_back(std::move(row_t));
            out.push_back(std::move(row_o));
        }
    }
    if (stage < 2) throw ParseError(stage == 0 ? "missing 'alphabet' line" : "missing 'states' line", line_no, 1);
    if (trans.size() != n) {
        throw ParseError("expected " + std::to_string(n) + " state lines, found " + std::to_string(trans.size()),
                         line_no, 1);
    }
    return MealyAutomaton(m, std::move(trans), std::move(out), std::move(labels));
}

MealyAutomaton read_automaton_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputDomainError("cannot open automaton file " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_automaton(buffer.str());
}

std::string format_automaton(const MealyAutomaton& a) {
    std::ostringstream os;
    os << "alphabet " << a.alphabet_size() << "\n";
    os << "states " << a.state_count() << "\n";
    for (State q = 0; q < a.state_count(); ++q) {
        os << "state " << a.label(q) << " trans";
        for (State t : a.transitions_of(q)) os << ' ' << t;
        os << " out";
        for (Letter o : a.outputs_of(q)) os << ' ' << o;
        os << '\n';
    }
    return os.str();
}

} // namespace mealy
