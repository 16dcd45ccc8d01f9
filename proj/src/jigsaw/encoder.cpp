#include <cstdlib>
#include <stdexcept>

#include "cqm/jigsaw.hpp"

namespace cqm::jigsaw {

namespace {

Term identity_pair() { return Term::pair(Term::identity(), Term::identity()); }

// <I,<I,I>> for positive literals, <<I,I>,I> for negative ones.
Term literal_tail(bool positive) {
    return positive ? Term::pair(Term::identity(), identity_pair()) : Term::pair(identity_pair(), Term::identity());
}

// <<L,<I,I>>,<<I,I>,R>>
Term consistency_tail() {
    return Term::pair(Term::pair(Term::left(), identity_pair()), Term::pair(identity_pair(), Term::right()));
}

/// L*R^e as a left-nested composition.
Term selector(std::size_t variable, const EncoderOptions& o) {
    const std::size_t e = o.exponent == EncoderOptions::Exponent::Shifted ? variable - 1 : variable;
    Term t = Term::left();
    for (std::size_t i = 0; i < e; ++i) t = Term::compose(t, Term::right());
    return t;
}

Pattern times(Pattern a, Pattern b) { return Pattern::compose(std::move(a), std::move(b)); }

}  // namespace

std::string to_string(const EncoderOptions& o) {
    std::string out = "exponent=";
    out += o.exponent == EncoderOptions::Exponent::Shifted ? "a-1" : "a";
    out += " negative=";
    out += o.negative == EncoderOptions::NegativeIndex::FromEnd ? "b(k-i)" : "b(i-k)";
    out += " consistency=";
    out += o.consistency == EncoderOptions::Consistency::Selector ? "selector" : "bare";
    return out;
}

std::vector<EncoderOptions> all_encoder_options() {
    std::vector<EncoderOptions> out;
    for (auto e : {EncoderOptions::Exponent::Shifted, EncoderOptions::Exponent::AsPrinted})
        for (auto n : {EncoderOptions::NegativeIndex::FromEnd, EncoderOptions::NegativeIndex::Swapped})
            for (auto c : {EncoderOptions::Consistency::Selector, EncoderOptions::Consistency::AsPrinted})
                out.push_back(EncoderOptions{e, n, c});
    return out;
}

Term gadget(std::size_t i, std::size_t n, Letter letter) {
    if (i < 1 || i > n) throw std::invalid_argument("gadget index out of range");
    std::vector<Term> cells(i - 1, identity_pair());
    cells.push_back(letter == Letter::L ? Term::left() : Term::right());
    cells.insert(cells.end(), n - i + 1, identity_pair());
    Term acc = Term::identity();
    for (auto it = cells.rbegin(); it != cells.rend(); ++it) acc = Term::pair(*it, acc);
    return acc;
}

Encoding encode(const Cnf& cnf, const EncoderOptions& options) {
    const std::size_t n = cnf.variables;
    Encoding e;
    std::vector<std::size_t> occurrences(n, 0);
    for (const auto& clause : cnf.clauses)
        for (int lit : clause) {
            const std::size_t v = std::size_t(std::abs(lit));
            if (lit == 0 || v > n) throw std::invalid_argument("literal out of range");
            ++occurrences[v - 1];
        }

    // Clause identities C# = I.
    std::size_t next_y = 1;
    for (std::size_t c = 0; c < cnf.clauses.size(); ++c) {
        std::vector<int> pos, neg;
        for (int lit : cnf.clauses[c]) (lit > 0 ? pos : neg).push_back(lit);
        const std::size_t k = pos.size(), m = neg.size();
        std::optional<Pattern> product;
        for (std::size_t i = 1; i <= k + m; ++i) {
            int lit;
            if (i <= k) {
                lit = pos[i - 1];
            } else if (options.negative == EncoderOptions::NegativeIndex::FromEnd) {
                lit = neg[m - (i - k)];  // b(k-i): index -1 is the last
            } else {
                lit = neg[i - k - 1];
            }
            const std::string hole = "y" + std::to_string(next_y++);
            e.puzzle.variables.push_back(hole);
            e.literals.push_back({hole, c, lit});
            Pattern factor = times(times(Pattern::term(selector(std::size_t(std::abs(lit)), options)),
                                         Pattern::hole(hole)),
                                   Pattern::term(literal_tail(lit > 0)));
            product = product ? times(*product, factor) : factor;
        }
        e.puzzle.identities.push_back({product.value_or(Pattern::term(Term::identity())), Term::identity()});
    }

    // One consistency identity B*<I,I> = I per variable.
    e.consistency_holes.resize(n);
    for (std::size_t i = 1; i <= n; ++i) {
        const std::size_t m = occurrences[i - 1];
        if (m == 0) {
            e.puzzle.identities.push_back({Pattern::term(Term::compose(Term::left(), identity_pair())), Term::identity()});
            continue;
        }
        auto pick = [&](const std::string& hole) {
            if (options.consistency == EncoderOptions::Consistency::Selector)
                return times(Pattern::term(selector(i, options)), Pattern::hole(hole));
            return Pattern::hole(hole);
        };
        std::optional<Pattern> b;
        for (std::size_t j = 1; j <= m; ++j) {
            const std::string hole = "z" + std::to_string(i) + "_" + std::to_string(j);
            e.puzzle.variables.push_back(hole);
            e.consistency_holes[i - 1].push_back(hole);
            if (!b) {
                b = options.consistency == EncoderOptions::Consistency::Selector
                        ? pick(hole)
                        : times(Pattern::term(Term::left()), Pattern::hole(hole));
            } else {
                b = times(times(*b, pick(hole)), Pattern::term(consistency_tail()));
            }
        }
        e.puzzle.identities.push_back({times(*b, Pattern::term(identity_pair())), Term::identity()});
    }

    for (std::size_t i = 1; i <= n; ++i) {
        e.gadget_g.push_back(gadget(i, n, Letter::L));
        e.gadget_h.push_back(gadget(i, n, Letter::R));
        e.puzzle.gadgets.insert(e.puzzle.gadgets.end(), occurrences[i - 1], e.gadget_g.back());
        e.puzzle.gadgets.insert(e.puzzle.gadgets.end(), occurrences[i - 1], e.gadget_h.back());
    }
    return e;
}

PuzzleAssignment canonical_assignment(const Encoding& e, const std::vector<bool>& truth) {
    const auto& p = e.puzzle;
    std::map<std::string, Term> wanted;
    for (const LiteralSlot& s : e.literals) {
        const std::size_t v = std::size_t(std::abs(s.literal)) - 1;
        wanted.emplace(s.hole, truth.at(v) ? e.gadget_g[v] : e.gadget_h[v]);
    }
    for (std::size_t v = 0; v < e.consistency_holes.size(); ++v)
        for (const auto& hole : e.consistency_holes[v]) wanted.emplace(hole, truth.at(v) ? e.gadget_h[v] : e.gadget_g[v]);

    PuzzleAssignment a;
    std::vector<bool> used(p.gadgets.size());
    for (const auto& var : p.variables) {
        const Term& t = wanted.at(var);
        std::size_t g = 0;
        while (g < p.gadgets.size() && (used[g] || !(p.gadgets[g] == t))) ++g;
        if (g == p.gadgets.size()) throw std::logic_error("gadget multiset does not match the slots");
        used[g] = true;
        a.gadget_of.push_back(g);
    }
    return a;
}

}  // namespace cqm::jigsaw
