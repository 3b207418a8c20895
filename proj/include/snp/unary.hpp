#pragma once

// Regular expressions over the singleton alphabet {a}. A unary regular
// language is an ultimately periodic subset of the naturals, so membership
// compiles down to two lookup tables: an explicit head for small lengths and
// a residue table mod p for everything past the threshold.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace snp {

enum class RegexKind { Symbol, Concat, Union, Star, Plus, Epsilon };

struct RegexAst {
    RegexKind kind;
    std::uint64_t count = 0;  // Symbol: k in a^k, k >= 1
    std::vector<std::shared_ptr<RegexAst>> children;
};

using RegexPtr = std::shared_ptr<RegexAst>;

RegexPtr make_symbol(std::uint64_t k);
RegexPtr make_concat(std::vector<RegexPtr> children);
RegexPtr make_union(std::vector<RegexPtr> children);
RegexPtr make_star(RegexPtr child);
RegexPtr make_plus(RegexPtr child);
RegexPtr make_epsilon();

struct RegexError : std::runtime_error {
    std::size_t position;  // byte offset into the regex text
    RegexError(std::size_t pos, const std::string& msg)
        : std::runtime_error(msg), position(pos) {}
};

// Grammar: `a`, `a^k` (k >= 1), juxtaposition or `.` for concatenation,
// `|` union, `*` star, `+` plus, parentheses; whitespace ignored.
// Throws RegexError (with position) on bad input, including `a^0`.
RegexPtr parse_regex(const std::string& text);

// Canonical representation of an ultimately periodic subset of N.
// Membership of n < threshold is head[n]; of n >= threshold is
// tail[n % period]. Canonical: period minimal, threshold minimal for it,
// so equal languages compare equal.
struct UnarySet {
    std::size_t threshold = 0;
    std::size_t period = 1;
    std::vector<bool> head;  // size == threshold
    std::vector<bool> tail;  // size == period

    bool contains(std::uint64_t n) const {
        if (n < threshold) return head[static_cast<std::size_t>(n)];
        return tail[static_cast<std::size_t>(n % period)];
    }
    bool empty() const;
    bool operator==(const UnarySet&) const = default;
};

// Exactly the singleton {n}.
UnarySet singleton_set(std::uint64_t n);

// Thompson NFA over {a}; states 0..state_count-1.
struct UnaryNfa {
    std::size_t state_count = 0;
    std::vector<std::vector<std::uint32_t>> eps;       // per state
    std::vector<std::vector<std::uint32_t>> on_a;      // per state
    std::uint32_t start = 0;
    std::vector<std::uint32_t> accepting;
};

UnaryNfa build_nfa(const RegexAst& ast);

// Direct state-set simulation: does the NFA accept a^n?  Independent of
// UnarySet compilation; used as the membership oracle.
bool nfa_accepts(const UnaryNfa& nfa, std::uint64_t n);

// Compile to the canonical ultimately periodic set by running the reachable
// state-set sequence until it repeats, then minimizing period and threshold.
UnarySet compile(const RegexAst& ast);

inline bool member(const UnarySet& set, std::uint64_t n) { return set.contains(n); }

// True iff the set is exactly the singleton {s}.
bool is_exactly(const UnarySet& set, std::uint64_t s);

}  // namespace snp
