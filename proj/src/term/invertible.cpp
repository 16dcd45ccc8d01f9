#include "cqm/invertible.hpp"

#include <stdexcept>
#include <string>

namespace cqm {

namespace {

std::string reversed(const std::string& s) { return {s.rbegin(), s.rend()}; }

bool is_suffix(const std::string& shorter, const std::string& longer) {
    return shorter.size() <= longer.size() &&
           longer.compare(longer.size() - shorter.size(), shorter.size(), shorter) == 0;
}

}  // namespace

bool is_right_invertible(const NormalForm& f) {
    const auto shifts = shifts_of(collapse(f));
    for (std::size_t i = 0; i < shifts.size(); ++i)
        for (std::size_t j = 0; j < shifts.size(); ++j)
            if (i != j && is_suffix(shifts[i].word.letters(), shifts[j].word.letters()))
                return false;
    return true;
}

NormalForm right_inverse(const NormalForm& f) {
    if (!is_right_invertible(f))
        throw std::invalid_argument("element is not right invertible: " + to_string(f));
    // Leaf i of f needs w_i * g = access word of leaf i. Leaf words are
    // suffix-free, so their consumption-order paths form a prefix-free trie.
    std::vector<std::pair<std::string, ShiftWord>> entries;
    for (const auto& [address, word] : shifts_of(collapse(f)))
        entries.emplace_back(reversed(word.letters()), address.access_word());
    return build_trie(entries);
}

Separation cq_separator(const NormalForm& u0, const NormalForm& u1) {
    if (u0 == u1) throw std::invalid_argument("separator needs distinct CQ normal forms");
    if (collapse(u0) != collapse(u1))
        throw std::invalid_argument("separator needs elements equal in CM");

    std::string path;  // composition order; the latest descent is leftmost
    const NormalForm* a = &u0;
    const NormalForm* b = &u1;
    while (!a->is_leaf() && !b->is_leaf()) {
        if (a->first() != b->first()) {
            path.insert(path.begin(), 'L');
            a = &a->first();
            b = &b->first();
        } else {
            path.insert(path.begin(), 'R');
            a = &a->second();
            b = &b->second();
        }
    }
    // CM equality survives projection, and two CM-equal leaves are equal, so
    // exactly one side is a leaf here.
    if (a->is_leaf() && b->is_leaf())
        throw std::logic_error("separator reached two leaves; CM precondition violated");
    const int index = a->is_leaf() ? 0 : 1;
    const ShiftWord& word = (index == 0 ? a : b)->word();
    Separation out{Term::shift(ShiftWord(path)),
                   to_term(build_trie({{reversed(word.letters()), ShiftWord()}})), index};
    return out;
}

}  // namespace cqm
