#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

#include "cqm/jigsaw.hpp"

namespace cqm::jigsaw {

struct Pattern::Node {
    Kind kind;
    Term closed;
    std::string name;
    Pattern lhs{nullptr};
    Pattern rhs{nullptr};
};

// Hole-free subtrees are folded into a single closed Term, so every pattern
// has one representation.
Pattern Pattern::term(Term t) { return Pattern(std::make_shared<const Node>(Node{Kind::Term, std::move(t), {}, Pattern(nullptr), Pattern(nullptr)})); }

Pattern Pattern::hole(std::string name) {
    return Pattern(std::make_shared<const Node>(Node{Kind::Hole, Term::identity(), std::move(name), Pattern(nullptr), Pattern(nullptr)}));
}

Pattern Pattern::compose(Pattern lhs, Pattern rhs) {
    if (lhs.kind() == Kind::Term && rhs.kind() == Kind::Term) return term(Term::compose(lhs.closed(), rhs.closed()));
    return Pattern(std::make_shared<const Node>(Node{Kind::Compose, Term::identity(), {}, std::move(lhs), std::move(rhs)}));
}

Pattern Pattern::pair(Pattern first, Pattern second) {
    if (first.kind() == Kind::Term && second.kind() == Kind::Term) return term(Term::pair(first.closed(), second.closed()));
    return Pattern(std::make_shared<const Node>(Node{Kind::Pair, Term::identity(), {}, std::move(first), std::move(second)}));
}

Pattern::Kind Pattern::kind() const { return node_->kind; }

const Term& Pattern::closed() const {
    if (node_->kind != Kind::Term) throw std::logic_error("closed() on a non-term pattern");
    return node_->closed;
}

const std::string& Pattern::name() const {
    if (node_->kind != Kind::Hole) throw std::logic_error("name() on a non-hole pattern");
    return node_->name;
}

const Pattern& Pattern::lhs() const {
    if (node_->kind != Kind::Compose && node_->kind != Kind::Pair) throw std::logic_error("lhs() on a leaf pattern");
    return node_->lhs;
}

const Pattern& Pattern::rhs() const {
    if (node_->kind != Kind::Compose && node_->kind != Kind::Pair) throw std::logic_error("rhs() on a leaf pattern");
    return node_->rhs;
}

namespace {

void collect_holes(const Pattern& p, std::vector<std::string>& out) {
    switch (p.kind()) {
    case Pattern::Kind::Term: return;
    case Pattern::Kind::Hole: out.push_back(p.name()); return;
    default:
        collect_holes(p.lhs(), out);
        collect_holes(p.rhs(), out);
    }
}

}  // namespace

std::vector<std::string> Pattern::holes() const {
    std::vector<std::string> out;
    collect_holes(*this, out);
    return out;
}

Term Pattern::substitute(const std::map<std::string, Term>& binding) const {
    switch (kind()) {
    case Kind::Term: return closed();
    case Kind::Hole: return binding.at(name());
    case Kind::Compose: return Term::compose(lhs().substitute(binding), rhs().substitute(binding));
    case Kind::Pair: return Term::pair(lhs().substitute(binding), rhs().substitute(binding));
    }
    throw std::logic_error("bad pattern kind");
}

bool operator==(const Pattern& a, const Pattern& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
    case Pattern::Kind::Term: return a.closed() == b.closed();
    case Pattern::Kind::Hole: return a.name() == b.name();
    default: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
    }
}

// ------------------------------------------------------------ Parsing

namespace {

bool name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class PatternParser {
public:
    explicit PatternParser(std::string_view text) : text_(text) {}

    Pattern parse() {
        skip_ws();
        if (pos_ == text_.size()) throw ParseError("empty pattern", pos_);
        Pattern p = term();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
        return p;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool at_letter() const {
        return pos_ < text_.size() && (text_[pos_] == 'I' || text_[pos_] == 'L' || text_[pos_] == 'R');
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c) throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    Pattern term() {
        Pattern p = factor();
        for (;;) {
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '*') {
                ++pos_;
                p = Pattern::compose(p, factor());
            } else {
                return p;
            }
        }
    }

    Pattern letter() {
        char c = text_[pos_++];
        return Pattern::term(c == 'I' ? Term::identity() : c == 'L' ? Term::left() : Term::right());
    }

    Pattern factor() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        const char c = text_[pos_];
        if (at_letter()) {
            Pattern p = letter();
            for (;;) {
                std::size_t save = pos_;
                skip_ws();
                if (!at_letter()) {
                    pos_ = save;
                    return p;
                }
                p = Pattern::compose(p, letter());
            }
        }
        if (c == '?') {
            std::size_t start = ++pos_;
            while (pos_ < text_.size() && name_char(text_[pos_])) ++pos_;
            if (pos_ == start) throw ParseError("empty hole name", pos_);
            return Pattern::hole(std::string(text_.substr(start, pos_ - start)));
        }
        if (c == '<') {
            ++pos_;
            Pattern first = term();
            expect(',');
            Pattern second = term();
            expect('>');
            return Pattern::pair(first, second);
        }
        if (c == '(') {
            ++pos_;
            Pattern p = term();
            expect(')');
            return p;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

bool is_composite(const Pattern& p) {
    return p.kind() == Pattern::Kind::Compose ||
           (p.kind() == Pattern::Kind::Term && p.closed().kind() == Term::Kind::Compose);
}

void print(const Pattern& p, std::string& out) {
    switch (p.kind()) {
    case Pattern::Kind::Term: out += to_string(p.closed()); return;
    case Pattern::Kind::Hole: out += '?' + p.name(); return;
    case Pattern::Kind::Pair:
        out += '<';
        print(p.lhs(), out);
        out += ',';
        print(p.rhs(), out);
        out += '>';
        return;
    case Pattern::Kind::Compose:
        print(p.lhs(), out);
        out += '*';
        if (is_composite(p.rhs())) {
            out += '(';
            print(p.rhs(), out);
            out += ')';
        } else {
            print(p.rhs(), out);
        }
        return;
    }
}

}  // namespace

Pattern parse_pattern(std::string_view text) { return PatternParser(text).parse(); }

std::string to_string(const Pattern& p) {
    std::string out;
    print(p, out);
    return out;
}

// ------------------------------------------------------------- Puzzles

void PuzzleInstance::validate() const {
    std::set<std::string> declared;
    for (const auto& v : variables)
        if (!declared.insert(v).second) throw std::invalid_argument("variable declared twice: " + v);
    std::set<std::string> used;
    for (const Identity& id : identities)
        for (const auto& h : id.lhs.holes()) {
            if (!declared.count(h)) throw std::invalid_argument("undeclared variable: " + h);
            if (!used.insert(h).second) throw std::invalid_argument("variable occurs more than once: " + h);
        }
}

namespace {

std::string_view trim(std::string_view s, std::size_t& offset) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
        ++offset;
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

template <typename F>
auto at_offset(std::size_t base, F&& parse) {
    try {
        return parse();
    } catch (const ParseError& e) {
        throw ParseError(e.message(), base + e.offset());
    }
}

}  // namespace

PuzzleInstance parse_puzzle(std::string_view text) {
    PuzzleInstance p;
    std::size_t line_start = 0;
    while (line_start <= text.size()) {
        std::size_t line_end = text.find('\n', line_start);
        if (line_end == std::string_view::npos) line_end = text.size();
        std::string_view line = text.substr(line_start, line_end - line_start);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        std::size_t offset = line_start;
        line = trim(line, offset);
        line_start = line_end + 1;
        if (line.empty()) continue;

        std::size_t space = line.find_first_of(" \t");
        std::string_view keyword = line.substr(0, space);
        std::size_t rest_offset = offset + keyword.size();
        std::string_view rest = space == std::string_view::npos ? std::string_view() : line.substr(space);
        rest = trim(rest, rest_offset);

        if (keyword == "var") {
            if (rest.empty() || !std::all_of(rest.begin(), rest.end(), name_char))
                throw ParseError("bad variable name", rest_offset);
            p.variables.emplace_back(rest);
        } else if (keyword == "gadget") {
            p.gadgets.push_back(at_offset(rest_offset, [&] { return parse_term(rest); }));
        } else if (keyword == "identity") {
            std::size_t eq = rest.find('=');
            if (eq == std::string_view::npos) throw ParseError("identity needs '='", rest_offset + rest.size());
            Pattern lhs = at_offset(rest_offset, [&] { return parse_pattern(rest.substr(0, eq)); });
            Term rhs = at_offset(rest_offset + eq + 1, [&] { return parse_term(rest.substr(eq + 1)); });
            p.identities.push_back({std::move(lhs), std::move(rhs)});
        } else if (keyword == "mode") {
            if (rest == "CQ") p.mode = Theory::CQ;
            else if (rest == "CM") p.mode = Theory::CM;
            else throw ParseError("mode must be CQ or CM", rest_offset);
        } else if (keyword == "policy") {
            if (rest == "exact-once") p.policy = UsagePolicy::ExactlyOnce;
            else if (rest == "at-most-once") p.policy = UsagePolicy::AtMostOnce;
            else throw ParseError("policy must be exact-once or at-most-once", rest_offset);
        } else {
            throw ParseError("unknown keyword '" + std::string(keyword) + "'", offset);
        }
    }
    return p;
}

std::string to_text(const PuzzleInstance& p) {
    std::string out;
    out += p.mode == Theory::CQ ? "mode CQ\n" : "mode CM\n";
    out += p.policy == UsagePolicy::ExactlyOnce ? "policy exact-once\n" : "policy at-most-once\n";
    for (const auto& v : p.variables) out += "var " + v + "\n";
    for (const Term& g : p.gadgets) out += "gadget " + to_string(g) + "\n";
    for (const Identity& id : p.identities) out += "identity " + to_string(id.lhs) + " = " + to_string(id.rhs) + "\n";
    return out;
}

}  // namespace cqm::jigsaw
