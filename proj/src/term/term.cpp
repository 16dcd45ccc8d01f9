#include "cqm/term.hpp"

#include <cctype>
#include <string>

namespace cqm {

// ---------------------------------------------------------------- ShiftWord

ShiftWord::ShiftWord(std::string_view letters) : letters_(letters) {
    for (char c : letters_) {
        if (c != 'L' && c != 'R')
            throw std::invalid_argument("shift words contain only L and R, got '" +
                                        std::string(letters) + "'");
    }
}

ShiftWord ShiftWord::operator+(const ShiftWord& rhs) const {
    ShiftWord out;
    out.letters_.reserve(letters_.size() + rhs.letters_.size());
    out.letters_ = letters_;
    out.letters_ += rhs.letters_;
    return out;
}

std::string ShiftWord::to_string() const {
    if (letters_.empty()) return "I";
    std::string out;
    out.reserve(2 * letters_.size());
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) out += '*';
        out += letters_[i];
    }
    return out;
}

std::string ShiftWord::compact() const { return letters_.empty() ? "I" : letters_; }

std::strong_ordering operator<=>(const ShiftWord& a, const ShiftWord& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return a.letters_.compare(b.letters_) <=> 0;
}

ShiftWord parse_shift(std::string_view text) {
    std::string letters;
    std::size_t i = 0;
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c)) || c == '*') {
            ++i;
            continue;
        }
        if (c == 'L' || c == 'R') {
            letters += c;
        } else if (c != 'I') {
            throw ParseError("unexpected character in shift word", i);
        }
        ++i;
    }
    return ShiftWord(letters);
}

// --------------------------------------------------------------------- Term

struct Term::Node {
    Kind kind;
    Term lhs;
    Term rhs;
    std::size_t count;

    Node(Kind k) : kind(k), lhs(nullptr), rhs(nullptr), count(1) {}
    Node(Kind k, Term a, Term b)
        : kind(k), lhs(std::move(a)), rhs(std::move(b)),
          count(1 + lhs.node_count() + rhs.node_count()) {}
};

Term Term::identity() {
    static const Term t(std::make_shared<const Node>(Kind::I));
    return t;
}

Term Term::left() {
    static const Term t(std::make_shared<const Node>(Kind::L));
    return t;
}

Term Term::right() {
    static const Term t(std::make_shared<const Node>(Kind::R));
    return t;
}

Term Term::compose(Term lhs, Term rhs) {
    return Term(std::make_shared<const Node>(Kind::Compose, std::move(lhs), std::move(rhs)));
}

Term Term::pair(Term first, Term second) {
    return Term(std::make_shared<const Node>(Kind::Pair, std::move(first), std::move(second)));
}

Term Term::shift(const ShiftWord& word) {
    if (word.empty()) return identity();
    auto atom = [](char c) { return c == 'L' ? left() : right(); };
    Term t = atom(word.letters()[0]);
    for (std::size_t i = 1; i < word.size(); ++i) t = compose(t, atom(word.letters()[i]));
    return t;
}

Term::Kind Term::kind() const { return node_->kind; }

bool Term::is_atom() const {
    return node_->kind == Kind::I || node_->kind == Kind::L || node_->kind == Kind::R;
}

const Term& Term::lhs() const {
    if (is_atom()) throw std::logic_error("atom has no subterms");
    return node_->lhs;
}

const Term& Term::rhs() const {
    if (is_atom()) throw std::logic_error("atom has no subterms");
    return node_->rhs;
}

std::size_t Term::node_count() const { return node_->count; }

bool operator==(const Term& a, const Term& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind() || a.node_count() != b.node_count()) return false;
    if (a.is_atom()) return true;
    return a.lhs() == b.lhs() && a.rhs() == b.rhs();
}

// ------------------------------------------------------------------- Parser

ParseError::ParseError(std::string message, std::size_t offset)
    : std::runtime_error(message + " at offset " + std::to_string(offset)), message_(std::move(message)), offset_(offset) {}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Term parse() {
        skip_ws();
        if (pos_ == text_.size()) throw ParseError("empty term", pos_);
        Term t = term();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
        return t;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool at_letter() const {
        return pos_ < text_.size() &&
               (text_[pos_] == 'I' || text_[pos_] == 'L' || text_[pos_] == 'R');
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c)
            throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    Term term() {
        Term t = factor();
        for (;;) {
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '*') {
                ++pos_;
                t = Term::compose(t, factor());
            } else {
                return t;
            }
        }
    }

    Term letter() {
        char c = text_[pos_++];
        return c == 'I' ? Term::identity() : c == 'L' ? Term::left() : Term::right();
    }

    Term factor() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        char c = text_[pos_];
        if (at_letter()) {
            // Compact shift syntax: juxtaposed letters compose.
            Term t = letter();
            for (;;) {
                std::size_t save = pos_;
                skip_ws();
                if (!at_letter()) {
                    pos_ = save;
                    return t;
                }
                t = Term::compose(t, letter());
            }
        }
        if (c == '<') {
            ++pos_;
            Term first = term();
            expect(',');
            Term second = term();
            expect('>');
            return Term::pair(first, second);
        }
        if (c == '(') {
            ++pos_;
            Term t = term();
            expect(')');
            return t;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

void print(const Term& t, std::string& out) {
    switch (t.kind()) {
    case Term::Kind::I: out += 'I'; return;
    case Term::Kind::L: out += 'L'; return;
    case Term::Kind::R: out += 'R'; return;
    case Term::Kind::Pair:
        out += '<';
        print(t.lhs(), out);
        out += ',';
        print(t.rhs(), out);
        out += '>';
        return;
    case Term::Kind::Compose:
        print(t.lhs(), out);
        out += '*';
        if (t.rhs().kind() == Term::Kind::Compose) {
            out += '(';
            print(t.rhs(), out);
            out += ')';
        } else {
            print(t.rhs(), out);
        }
        return;
    }
}

}  // namespace

Term parse_term(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const Term& t) {
    std::string out;
    print(t, out);
    return out;
}

}  // namespace cqm
