#include "snp/parser.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace snp {

namespace {

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#') {  // comment to end of line
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, col_, msg); }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c)
            fail(std::string("expected '") + c + "'");
        advance();
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            advance();
            return true;
        }
        return false;
    }

    std::string identifier() {
        skip_ws();
        if (pos_ >= text_.size() ||
            !(std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            fail("expected identifier");
        std::string id;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            id += text_[pos_];
            advance();
        }
        return id;
    }

    Nat natural() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected a natural number");
        Nat value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > 1000000000) fail("number too large");
            advance();
        }
        return value;
    }

    void expect_keyword(const std::string& kw) {
        std::string id = identifier();
        if (id != kw) fail("expected keyword '" + kw + "', got '" + id + "'");
    }

    // Raw text up to (not including) the next ';', for rule bodies.
    std::string until_semicolon() {
        skip_ws();
        std::string out;
        while (pos_ < text_.size() && text_[pos_] != ';') {
            out += text_[pos_];
            advance();
        }
        if (pos_ >= text_.size()) fail("expected ';'");
        return out;
    }

    int line() const { return line_; }
    int col() const { return col_; }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// "a" or "a^k"; returns k.
Nat parse_spike_term(const std::string& text, Lexer& lex) {
    std::string t = trim(text);
    if (t == "a") return 1;
    if (t.size() >= 3 && t[0] == 'a' && t[1] == '^') {
        std::string digits = trim(t.substr(2));
        if (!digits.empty() &&
            std::all_of(digits.begin(), digits.end(),
                        [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
            Nat k = 0;
            for (char c : digits) {
                k = k * 10 + (c - '0');
                if (k > 1000000000) lex.fail("spike amount too large");
            }
            if (k == 0) lex.fail("a^0 is not allowed");
            return k;
        }
    }
    lex.fail("expected 'a' or 'a^<k>', got '" + t + "'");
}

Rule parse_rule_body(const std::string& name, const std::string& body, Lexer& lex) {
    std::size_t arrow = body.find("->");
    if (arrow == std::string::npos) lex.fail("rule " + name + ": expected '->'");
    std::string lhs = body.substr(0, arrow);
    std::string rhs = trim(body.substr(arrow + 2));

    Rule rule;
    rule.name = name;

    std::string regex_text;
    std::size_t slash = lhs.rfind('/');
    std::string consumed_text = lhs;
    if (slash != std::string::npos) {
        regex_text = trim(lhs.substr(0, slash));
        consumed_text = lhs.substr(slash + 1);
    }
    rule.consumed = parse_spike_term(consumed_text, lex);
    rule.guard_text = regex_text;

    if (rhs == "lambda") {
        rule.kind = RuleKind::Forgetting;
        rule.produced = 0;
    } else {
        rule.kind = RuleKind::Spiking;
        rule.produced = parse_spike_term(rhs, lex);
    }

    if (regex_text.empty()) {
        rule.guard = singleton_set(static_cast<std::uint64_t>(rule.consumed));
    } else {
        try {
            rule.guard = compile(*parse_regex(regex_text));
        } catch (const RegexError& e) {
            lex.fail("rule " + name + ": regex error at offset " + std::to_string(e.position) +
                     ": " + e.what());
        }
    }
    return rule;
}

}  // namespace

SNPSystem parse_system(const std::string& text) {
    Lexer lex(text);
    SNPSystem sys;

    lex.expect_keyword("system");
    sys.name = lex.identifier();
    lex.expect('{');

    std::map<std::string, int> neuron_index;  // name -> 1-based
    struct PendingSyn { std::string from, to; int line, col; };
    std::vector<PendingSyn> pending_syn;
    std::string out_name, in_name;
    int out_line = 0, out_col = 0;

    while (!lex.accept('}')) {
        if (lex.at_end()) lex.fail("unexpected end of file, expected '}'");
        std::string kw = lex.identifier();
        if (kw == "neuron") {
            std::string name = lex.identifier();
            if (neuron_index.count(name)) lex.fail("duplicate neuron '" + name + "'");
            int idx = ++sys.neuron_count;
            neuron_index[name] = idx;
            sys.neuron_names.push_back(name);
            sys.initial.push_back(0);

            lex.expect('{');
            while (!lex.accept('}')) {
                if (lex.at_end()) lex.fail("unexpected end of file in neuron '" + name + "'");
                std::string inner = lex.identifier();
                if (inner == "spikes") {
                    sys.initial[idx - 1] = lex.natural();
                    lex.expect(';');
                } else if (inner == "rule") {
                    std::string rule_name = lex.identifier();
                    lex.expect(':');
                    std::string body = lex.until_semicolon();
                    lex.expect(';');
                    Rule rule = parse_rule_body(rule_name, body, lex);
                    rule.owner = idx;
                    rule.id = static_cast<int>(sys.rules.size()) + 1;
                    sys.rules.push_back(std::move(rule));
                } else {
                    lex.fail("unknown keyword '" + inner + "' in neuron body");
                }
            }
        } else if (kw == "syn") {
            PendingSyn syn;
            syn.line = lex.line();
            syn.col = lex.col();
            syn.from = lex.identifier();
            lex.expect('-');
            lex.expect('>');
            syn.to = lex.identifier();
            lex.expect(';');
            pending_syn.push_back(std::move(syn));
        } else if (kw == "out") {
            out_line = lex.line();
            out_col = lex.col();
            out_name = lex.identifier();
            lex.expect(';');
        } else if (kw == "in") {
            in_name = lex.identifier();
            lex.expect(';');
        } else {
            lex.fail("unknown keyword '" + kw + "'");
        }
    }

    auto resolve = [&](const std::string& name, int line, int col) {
        auto it = neuron_index.find(name);
        if (it == neuron_index.end())
            throw ParseError(line, col, "unknown neuron '" + name + "'");
        return it->second;
    };
    for (const auto& syn : pending_syn) {
        int i = resolve(syn.from, syn.line, syn.col);
        int j = resolve(syn.to, syn.line, syn.col);
        if (i == j) throw ParseError(syn.line, syn.col, "self-synapse on neuron '" + syn.from + "'");
        sys.synapses.emplace(i, j);
    }
    if (!out_name.empty()) sys.out_neuron = resolve(out_name, out_line, out_col);
    if (!in_name.empty()) sys.in_neuron = resolve(in_name, out_line, out_col);

    return sys;
}

SNPSystem parse_system_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_system(buf.str());
}

Config parse_config_literal(const std::string& text) {
    std::string t = trim(text);
    if (t.size() < 2 || t.front() != '(' || t.back() != ')')
        throw ParseError(1, 1, "configuration literal must look like (a1,...,am)");
    Config config;
    std::stringstream ss(t.substr(1, t.size() - 2));
    std::string part;
    while (std::getline(ss, part, ',')) {
        part = trim(part);
        if (part.empty() || !std::all_of(part.begin(), part.end(), [](char c) {
                return std::isdigit(static_cast<unsigned char>(c));
            }))
            throw ParseError(1, 1, "bad entry '" + part + "' in configuration literal");
        config.push_back(std::stoll(part));
    }
    if (config.empty()) throw ParseError(1, 1, "empty configuration literal");
    return config;
}

}  // namespace snp
