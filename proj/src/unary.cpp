#include "snp/unary.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

namespace snp {

RegexPtr make_symbol(std::uint64_t k) {
    if (k < 1) throw std::invalid_argument("Symbol count must be >= 1");
    auto node = std::make_shared<RegexAst>();
    node->kind = RegexKind::Symbol;
    node->count = k;
    return node;
}

static RegexPtr make_nary(RegexKind kind, std::vector<RegexPtr> children) {
    if (children.size() < 2) throw std::invalid_argument("Concat/Union need >= 2 children");
    auto node = std::make_shared<RegexAst>();
    node->kind = kind;
    node->children = std::move(children);
    return node;
}

RegexPtr make_concat(std::vector<RegexPtr> children) {
    return make_nary(RegexKind::Concat, std::move(children));
}

RegexPtr make_union(std::vector<RegexPtr> children) {
    return make_nary(RegexKind::Union, std::move(children));
}

static RegexPtr make_unary(RegexKind kind, RegexPtr child) {
    auto node = std::make_shared<RegexAst>();
    node->kind = kind;
    node->children.push_back(std::move(child));
    return node;
}

RegexPtr make_star(RegexPtr child) { return make_unary(RegexKind::Star, std::move(child)); }
RegexPtr make_plus(RegexPtr child) { return make_unary(RegexKind::Plus, std::move(child)); }

RegexPtr make_epsilon() {
    auto node = std::make_shared<RegexAst>();
    node->kind = RegexKind::Epsilon;
    return node;
}

namespace {

// Recursive-descent parser. Precedence: star/plus > concat > union.
class RegexParser {
public:
    explicit RegexParser(const std::string& text) : text_(text) {}

    RegexPtr parse() {
        skip_ws();
        if (at_end()) throw RegexError(pos_, "empty regular expression");
        RegexPtr ast = parse_union();
        skip_ws();
        if (!at_end()) throw RegexError(pos_, std::string("unexpected '") + text_[pos_] + "'");
        return ast;
    }

private:
    RegexPtr parse_union() {
        std::vector<RegexPtr> parts;
        parts.push_back(parse_concat());
        skip_ws();
        while (!at_end() && text_[pos_] == '|') {
            ++pos_;
            parts.push_back(parse_concat());
            skip_ws();
        }
        if (parts.size() == 1) return parts[0];
        return make_union(std::move(parts));
    }

    RegexPtr parse_concat() {
        std::vector<RegexPtr> parts;
        parts.push_back(parse_postfix());
        for (;;) {
            skip_ws();
            if (at_end()) break;
            char c = text_[pos_];
            if (c == '.') {
                ++pos_;
                parts.push_back(parse_postfix());
            } else if (c == 'a' || c == '(') {
                parts.push_back(parse_postfix());
            } else {
                break;
            }
        }
        if (parts.size() == 1) return parts[0];
        return make_concat(std::move(parts));
    }

    RegexPtr parse_postfix() {
        RegexPtr node = parse_primary();
        for (;;) {
            skip_ws();
            if (at_end()) break;
            if (text_[pos_] == '*') {
                ++pos_;
                node = make_star(std::move(node));
            } else if (text_[pos_] == '+') {
                ++pos_;
                node = make_plus(std::move(node));
            } else {
                break;
            }
        }
        return node;
    }

    RegexPtr parse_primary() {
        skip_ws();
        if (at_end()) throw RegexError(pos_, "expected 'a' or '('");
        char c = text_[pos_];
        if (c == '(') {
            std::size_t open = pos_;
            ++pos_;
            RegexPtr inner = parse_union();
            skip_ws();
            if (at_end() || text_[pos_] != ')') throw RegexError(open, "unmatched '('");
            ++pos_;
            return inner;
        }
        if (c == 'a') {
            ++pos_;
            skip_ws();
            if (!at_end() && text_[pos_] == '^') {
                std::size_t caret = pos_;
                ++pos_;
                skip_ws();
                if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    throw RegexError(caret, "expected decimal exponent after '^'");
                std::uint64_t k = 0;
                while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                    k = k * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
                    if (k > 1000000) throw RegexError(caret, "exponent too large");
                    ++pos_;
                }
                if (k == 0) throw RegexError(caret, "a^0 is not allowed");
                return make_symbol(k);
            }
            return make_symbol(1);
        }
        throw RegexError(pos_, std::string("unexpected '") + c + "'");
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }

    const std::string& text_;
    std::size_t pos_ = 0;
};

struct NfaBuilder {
    UnaryNfa nfa;

    std::uint32_t new_state() {
        nfa.eps.emplace_back();
        nfa.on_a.emplace_back();
        return static_cast<std::uint32_t>(nfa.state_count++);
    }

    // Thompson fragment: (entry, exit).
    std::pair<std::uint32_t, std::uint32_t> build(const RegexAst& ast) {
        switch (ast.kind) {
            case RegexKind::Symbol: {
                // a^k as a chain of k a-transitions
                std::uint32_t entry = new_state();
                std::uint32_t cur = entry;
                for (std::uint64_t i = 0; i < ast.count; ++i) {
                    std::uint32_t next = new_state();
                    nfa.on_a[cur].push_back(next);
                    cur = next;
                }
                return {entry, cur};
            }
            case RegexKind::Epsilon: {
                std::uint32_t s = new_state();
                return {s, s};
            }
            case RegexKind::Concat: {
                auto frag = build(*ast.children.front());
                for (std::size_t i = 1; i < ast.children.size(); ++i) {
                    auto next = build(*ast.children[i]);
                    nfa.eps[frag.second].push_back(next.first);
                    frag.second = next.second;
                }
                return frag;
            }
            case RegexKind::Union: {
                std::uint32_t entry = new_state();
                std::uint32_t exit = new_state();
                for (const auto& child : ast.children) {
                    auto frag = build(*child);
                    nfa.eps[entry].push_back(frag.first);
                    nfa.eps[frag.second].push_back(exit);
                }
                return {entry, exit};
            }
            case RegexKind::Star: {
                std::uint32_t entry = new_state();
                std::uint32_t exit = new_state();
                auto frag = build(*ast.children.front());
                nfa.eps[entry].push_back(frag.first);
                nfa.eps[entry].push_back(exit);
                nfa.eps[frag.second].push_back(frag.first);
                nfa.eps[frag.second].push_back(exit);
                return {entry, exit};
            }
            case RegexKind::Plus: {
                auto frag = build(*ast.children.front());
                std::uint32_t exit = new_state();
                nfa.eps[frag.second].push_back(frag.first);
                nfa.eps[frag.second].push_back(exit);
                return {frag.first, exit};
            }
        }
        throw std::logic_error("unreachable regex kind");
    }
};

using StateSet = std::vector<std::uint32_t>;  // sorted, unique

StateSet eps_closure(const UnaryNfa& nfa, StateSet states) {
    std::vector<bool> seen(nfa.state_count, false);
    std::vector<std::uint32_t> stack;
    for (std::uint32_t s : states) {
        seen[s] = true;
        stack.push_back(s);
    }
    while (!stack.empty()) {
        std::uint32_t s = stack.back();
        stack.pop_back();
        for (std::uint32_t t : nfa.eps[s]) {
            if (!seen[t]) {
                seen[t] = true;
                stack.push_back(t);
            }
        }
    }
    StateSet out;
    for (std::uint32_t s = 0; s < nfa.state_count; ++s)
        if (seen[s]) out.push_back(s);
    return out;
}

StateSet advance_a(const UnaryNfa& nfa, const StateSet& states) {
    std::vector<bool> hit(nfa.state_count, false);
    for (std::uint32_t s : states)
        for (std::uint32_t t : nfa.on_a[s]) hit[t] = true;
    StateSet out;
    for (std::uint32_t s = 0; s < nfa.state_count; ++s)
        if (hit[s]) out.push_back(s);
    return eps_closure(nfa, std::move(out));
}

bool accepts_set(const UnaryNfa& nfa, const StateSet& states) {
    for (std::uint32_t a : nfa.accepting)
        if (std::binary_search(states.begin(), states.end(), a)) return true;
    return false;
}

}  // namespace

RegexPtr parse_regex(const std::string& text) { return RegexParser(text).parse(); }

UnaryNfa build_nfa(const RegexAst& ast) {
    NfaBuilder builder;
    auto frag = builder.build(ast);
    builder.nfa.start = frag.first;
    builder.nfa.accepting.push_back(frag.second);
    return std::move(builder.nfa);
}

bool nfa_accepts(const UnaryNfa& nfa, std::uint64_t n) {
    StateSet cur = eps_closure(nfa, {nfa.start});
    for (std::uint64_t i = 0; i < n; ++i) {
        cur = advance_a(nfa, cur);
        if (cur.empty()) return false;
    }
    return accepts_set(nfa, cur);
}

bool UnarySet::empty() const {
    return std::none_of(head.begin(), head.end(), [](bool b) { return b; }) &&
           std::none_of(tail.begin(), tail.end(), [](bool b) { return b; });
}

namespace {

// Canonicalize: shrink the period to its minimal divisor, then pull the
// threshold down while the head agrees with the periodic tail.
UnarySet canonicalize(std::size_t threshold, std::size_t period, std::vector<bool> head,
                      std::vector<bool> tail) {
    for (std::size_t d = 1; d < period; ++d) {
        if (period % d != 0) continue;
        bool periodic = true;
        for (std::size_t i = 0; i < period && periodic; ++i)
            if (tail[i] != tail[i % d]) periodic = false;
        if (periodic) {
            tail.resize(d);
            period = d;
            break;
        }
    }
    while (threshold > 0 && head[threshold - 1] == tail[(threshold - 1) % period]) {
        head.pop_back();
        --threshold;
    }
    UnarySet set;
    set.threshold = threshold;
    set.period = period;
    set.head = std::move(head);
    set.tail = std::move(tail);
    return set;
}

}  // namespace

UnarySet singleton_set(std::uint64_t n) {
    std::size_t t = static_cast<std::size_t>(n) + 1;
    std::vector<bool> head(t, false);
    head[static_cast<std::size_t>(n)] = true;
    return canonicalize(t, 1, std::move(head), {false});
}

UnarySet compile(const RegexAst& ast) {
    UnaryNfa nfa = build_nfa(ast);

    // The reachable state-set sequence S_0, S_1, ... lives in a finite
    // powerset, so it must repeat; S_i = S_j (i < j) gives threshold i and
    // period j - i.
    std::map<StateSet, std::size_t> first_index;
    std::vector<bool> accept_bits;
    StateSet cur = eps_closure(nfa, {nfa.start});
    std::size_t repeat_start = 0, repeat_at = 0;
    for (std::size_t k = 0;; ++k) {
        auto [it, inserted] = first_index.emplace(cur, k);
        if (!inserted) {
            repeat_start = it->second;
            repeat_at = k;
            break;
        }
        accept_bits.push_back(accepts_set(nfa, cur));
        cur = advance_a(nfa, cur);
    }

    std::size_t threshold = repeat_start;
    std::size_t period = repeat_at - repeat_start;
    std::vector<bool> head(accept_bits.begin(), accept_bits.begin() + threshold);
    // tail is indexed by absolute residue n % period, not by offset past the
    // threshold, so rotate accordingly
    std::vector<bool> tail(period);
    for (std::size_t i = 0; i < period; ++i)
        tail[(threshold + i) % period] = accept_bits[threshold + i];
    return canonicalize(threshold, period, std::move(head), std::move(tail));
}

bool is_exactly(const UnarySet& set, std::uint64_t s) {
    return set == singleton_set(s);
}

}  // namespace snp
