#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cqm {

enum class Letter : std::uint8_t { L, R };

inline char to_char(Letter a) { return a == Letter::L ? 'L' : 'R'; }

/// A word over {L, R} read in composition order: "s1...sk" denotes s1*...*sk,
/// so the last letter is the first to act on whatever it multiplies.
class ShiftWord {
public:
    ShiftWord() = default;

    /// Accepts letters 'L' and 'R' only; the empty string is the identity.
    explicit ShiftWord(std::string_view letters);

    const std::string& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    ShiftWord operator+(const ShiftWord& rhs) const;

    /// "R*R*L", or "I" for the empty word.
    std::string to_string() const;
    /// "RRL", or "I" for the empty word.
    std::string compact() const;

    friend bool operator==(const ShiftWord&, const ShiftWord&) = default;
    /// Shortlex.
    friend std::strong_ordering operator<=>(const ShiftWord& a, const ShiftWord& b);

private:
    std::string letters_;
};

/// Accepts both "R*R*L" and compact "RRL"; "I" is the empty word.
ShiftWord parse_shift(std::string_view text);

/// Raw expression over I, L, R, composition and pairing. Immutable and
/// cheap to copy; subterms are shared.
class Term {
public:
    enum class Kind : std::uint8_t { I, L, R, Compose, Pair };

    static Term identity();
    static Term left();
    static Term right();
    static Term compose(Term lhs, Term rhs);
    static Term pair(Term first, Term second);

    /// Left-associated product of the letters, or I for the empty word.
    static Term shift(const ShiftWord& word);

    Kind kind() const;
    bool is_atom() const;
    /// Left factor of a Compose, first component of a Pair.
    const Term& lhs() const;
    /// Right factor of a Compose, second component of a Pair.
    const Term& rhs() const;
    std::size_t node_count() const;

    friend bool operator==(const Term& a, const Term& b);

private:
    struct Node;
    explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, std::size_t offset);
    std::size_t offset() const { return offset_; }
    /// The message without the offset suffix.
    const std::string& message() const { return message_; }

private:
    std::string message_;
    std::size_t offset_;
};

/// term   := factor ('*' factor)*
/// factor := 'I' | 'L' | 'R' | '<' term ',' term '>' | '(' term ')'
/// Whitespace is ignored and a run of letters such as "RRL" is read as R*R*L.
Term parse_term(std::string_view text);

/// Canonical text with minimal parentheses; parse_term(to_string(t)) == t.
std::string to_string(const Term& t);

}  // namespace cqm
