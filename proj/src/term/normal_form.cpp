#include "cqm/normal_form.hpp"

#include <functional>
#include <stdexcept>

namespace cqm {

struct NormalForm::Rep {
    bool leaf = true;
    ShiftWord word;
    NormalForm first, second;
    std::size_t leaves = 1;
    std::size_t depth = 0;
    std::size_t hash = 0;

    // Only used for the shared identity; avoids NormalForm() recursing.
    Rep() : first(nullptr), second(nullptr) {}
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

NormalForm::NormalForm() {
    static const std::shared_ptr<const Rep> id = [] {
        auto r = std::make_shared<Rep>();
        r->hash = mix(0x51ed27, std::hash<std::string>{}(""));
        return r;
    }();
    rep_ = id;
}

NormalForm NormalForm::leaf(ShiftWord word) {
    if (word.empty()) return NormalForm();
    auto r = std::make_shared<Rep>();
    r->hash = mix(0x51ed27, std::hash<std::string>{}(word.letters()));
    r->word = std::move(word);
    return NormalForm(std::move(r));
}

NormalForm NormalForm::node(NormalForm first, NormalForm second) {
    auto r = std::make_shared<Rep>();
    r->leaf = false;
    r->leaves = first.leaf_count() + second.leaf_count();
    r->depth = 1 + std::max(first.depth(), second.depth());
    r->hash = mix(mix(0x7a11, first.hash()), second.hash());
    r->first = std::move(first);
    r->second = std::move(second);
    return NormalForm(std::move(r));
}

bool NormalForm::is_leaf() const { return rep_->leaf; }
bool NormalForm::is_identity() const { return rep_->leaf && rep_->word.empty(); }
std::size_t NormalForm::leaf_count() const { return rep_->leaves; }
std::size_t NormalForm::depth() const { return rep_->depth; }
std::size_t NormalForm::hash() const { return rep_->hash; }

const ShiftWord& NormalForm::word() const {
    if (!rep_->leaf) throw std::logic_error("word() on a pair node");
    return rep_->word;
}

const NormalForm& NormalForm::first() const {
    if (rep_->leaf) throw std::logic_error("first() on a leaf");
    return rep_->first;
}

const NormalForm& NormalForm::second() const {
    if (rep_->leaf) throw std::logic_error("second() on a leaf");
    return rep_->second;
}

bool operator==(const NormalForm& a, const NormalForm& b) {
    if (a.rep_ == b.rep_) return true;
    if (a.hash() != b.hash() || a.leaf_count() != b.leaf_count() || a.is_leaf() != b.is_leaf())
        return false;
    if (a.is_leaf()) return a.word() == b.word();
    return a.first() == b.first() && a.second() == b.second();
}

std::strong_ordering operator<=>(const NormalForm& a, const NormalForm& b) {
    if (a.rep_ == b.rep_) return std::strong_ordering::equal;
    if (a.is_leaf() != b.is_leaf())
        return a.is_leaf() ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.is_leaf()) return a.word() <=> b.word();
    if (auto c = a.first() <=> b.first(); c != 0) return c;
    return a.second() <=> b.second();
}

// ------------------------------------------------------------ LeafAddress

ShiftWord LeafAddress::access_word() const {
    std::string letters;
    letters.reserve(path.size());
    for (auto it = path.rbegin(); it != path.rend(); ++it)
        letters += *it == Side::First ? 'L' : 'R';
    return ShiftWord(letters);
}

std::string LeafAddress::to_string() const {
    if (path.empty()) return "e";
    std::string out;
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (i) out += '.';
        out += path[i] == Side::First ? "first" : "second";
    }
    return out;
}

// ----------------------------------------------------------- normalization

NormalForm apply_shift(const ShiftWord& s, const NormalForm& f) {
    const std::string& letters = s.letters();
    std::size_t remaining = letters.size();
    const NormalForm* cur = &f;
    while (remaining > 0 && !cur->is_leaf()) {
        cur = letters[remaining - 1] == 'L' ? &cur->first() : &cur->second();
        --remaining;
    }
    if (!cur->is_leaf() || remaining == 0) return *cur;
    std::string word = letters.substr(0, remaining);
    word += cur->word().letters();
    return NormalForm::leaf(ShiftWord(word));
}

NormalForm multiply(const NormalForm& a, const NormalForm& b) {
    if (b.is_identity()) return a;
    if (a.is_leaf()) return apply_shift(a.word(), b);
    return NormalForm::node(multiply(a.first(), b), multiply(a.second(), b));
}

NormalForm cq_normalize(const Term& t) {
    switch (t.kind()) {
    case Term::Kind::I: return NormalForm();
    case Term::Kind::L: return NormalForm::leaf(ShiftWord("L"));
    case Term::Kind::R: return NormalForm::leaf(ShiftWord("R"));
    case Term::Kind::Pair: return NormalForm::node(cq_normalize(t.lhs()), cq_normalize(t.rhs()));
    case Term::Kind::Compose: return multiply(cq_normalize(t.lhs()), cq_normalize(t.rhs()));
    }
    throw std::logic_error("unreachable term kind");
}

NormalForm collapse(const NormalForm& f) {
    if (f.is_leaf()) return f;
    NormalForm a = collapse(f.first());
    NormalForm b = collapse(f.second());
    if (a.is_leaf() && b.is_leaf()) {
        const std::string& x = a.word().letters();
        const std::string& y = b.word().letters();
        if (!x.empty() && x.size() == y.size() && x[0] == 'L' && y[0] == 'R' &&
            x.compare(1, std::string::npos, y, 1, std::string::npos) == 0)
            return NormalForm::leaf(ShiftWord(std::string_view(x).substr(1)));
    }
    if (a == f.first() && b == f.second()) return f;
    return NormalForm::node(std::move(a), std::move(b));
}

NormalForm cm_normalize(const Term& t) { return collapse(cq_normalize(t)); }

NormalForm normalize(const Term& t, Theory theory) {
    return theory == Theory::CQ ? cq_normalize(t) : cm_normalize(t);
}

bool equal(const Term& a, const Term& b, Theory theory) {
    return normalize(a, theory) == normalize(b, theory);
}

bool in_kernel(const Term& t) { return cm_normalize(t).is_identity(); }

// ------------------------------------------------------------------ shifts

namespace {

void collect_shifts(const NormalForm& f, LeafAddress& at, std::vector<ShiftEntry>& out) {
    if (f.is_leaf()) {
        out.push_back({at, f.word()});
        return;
    }
    at.path.push_back(Side::First);
    collect_shifts(f.first(), at, out);
    at.path.back() = Side::Second;
    collect_shifts(f.second(), at, out);
    at.path.pop_back();
}

NormalForm rebuild(std::vector<const ShiftEntry*> entries, std::size_t depth) {
    if (entries.empty()) throw std::invalid_argument("shift addresses leave an empty subtree");
    if (entries.size() == 1 && entries[0]->address.path.size() == depth)
        return NormalForm::leaf(entries[0]->word);
    std::vector<const ShiftEntry*> left, right;
    for (const ShiftEntry* e : entries) {
        if (e->address.path.size() <= depth)
            throw std::invalid_argument("shift addresses are not prefix-free");
        (e->address.path[depth] == Side::First ? left : right).push_back(e);
    }
    return NormalForm::node(rebuild(std::move(left), depth + 1), rebuild(std::move(right), depth + 1));
}

NormalForm trie(std::vector<const std::pair<std::string, ShiftWord>*> entries, std::size_t depth) {
    if (entries.empty()) return NormalForm();
    if (entries.size() == 1 && entries[0]->first.size() == depth)
        return NormalForm::leaf(entries[0]->second);
    std::vector<const std::pair<std::string, ShiftWord>*> left, right;
    for (const auto* e : entries) {
        if (e->first.size() <= depth) throw std::invalid_argument("trie paths are not prefix-free");
        (e->first[depth] == 'L' ? left : right).push_back(e);
    }
    return NormalForm::node(trie(std::move(left), depth + 1), trie(std::move(right), depth + 1));
}

}  // namespace

std::vector<ShiftEntry> shifts_of(const NormalForm& f) {
    std::vector<ShiftEntry> out;
    out.reserve(f.leaf_count());
    LeafAddress at;
    collect_shifts(f, at, out);
    return out;
}

NormalForm from_shifts(const std::vector<ShiftEntry>& entries) {
    std::vector<const ShiftEntry*> ptrs;
    for (const auto& e : entries) ptrs.push_back(&e);
    return rebuild(std::move(ptrs), 0);
}

NormalForm build_trie(const std::vector<std::pair<std::string, ShiftWord>>& entries) {
    std::vector<const std::pair<std::string, ShiftWord>*> ptrs;
    for (const auto& e : entries) {
        for (char c : e.first)
            if (c != 'L' && c != 'R') throw std::invalid_argument("trie path must be over L, R");
        ptrs.push_back(&e);
    }
    return trie(std::move(ptrs), 0);
}

// ------------------------------------------------------------- conversions

Term to_term(const NormalForm& f) {
    if (f.is_leaf()) return Term::shift(f.word());
    return Term::pair(to_term(f.first()), to_term(f.second()));
}

std::string to_string(const NormalForm& f) {
    if (f.is_leaf()) return f.word().to_string();
    return "<" + to_string(f.first()) + "," + to_string(f.second()) + ">";
}

namespace {

bool collect_letters(const Term& t, std::string& out) {
    switch (t.kind()) {
    case Term::Kind::L: out += 'L'; return true;
    case Term::Kind::R: out += 'R'; return true;
    case Term::Kind::Compose: return collect_letters(t.lhs(), out) && collect_letters(t.rhs(), out);
    default: return false;
    }
}

}  // namespace

std::optional<NormalForm> as_normal_form(const Term& t) {
    if (t.kind() == Term::Kind::I) return NormalForm();
    if (t.kind() == Term::Kind::Pair) {
        auto a = as_normal_form(t.lhs());
        auto b = as_normal_form(t.rhs());
        if (!a || !b) return std::nullopt;
        return NormalForm::node(*a, *b);
    }
    std::string letters;
    if (!collect_letters(t, letters)) return std::nullopt;
    return NormalForm::leaf(ShiftWord(letters));
}

}  // namespace cqm
