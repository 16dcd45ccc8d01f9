// Saturation for the shift machine viewed as a pushdown system.
//
// The machine has one real control state. Popping a multi-letter word is
// compiled into a chain of single-letter pops through fresh intermediate
// control states (one per internal node of each generator), and a shift
// generator, whose pop word is empty, becomes one rule per possible top
// symbol. A bottom marker is kept as a third stack symbol so that configs
// are whole stacks and "the stack is empty" is an ordinary top symbol.

#include <array>
#include <set>
#include <vector>

#include "cqm/shift_system.hpp"

namespace cqm {

namespace {

using State = std::uint32_t;

constexpr int kL = 0;
constexpr int kR = 1;
constexpr int kBottom = 2;
constexpr int kEps = 3;
constexpr State kMain = 0;

int symbol(char c) { return c == 'L' ? kL : kR; }

struct PdsRule {
    State from;
    int pop;
    State to;
    std::vector<int> push;
};

struct Pds {
    std::size_t controls = 1;
    std::vector<PdsRule> rules;
};

void compile_generator(const NormalForm& f, State control, Pds& pds) {
    for (int side : {kL, kR}) {
        const NormalForm& child = side == kL ? f.first() : f.second();
        if (child.is_leaf()) {
            std::vector<int> push;
            for (char c : Config::of(child.word()).letters()) push.push_back(symbol(c));
            pds.rules.push_back({control, side, kMain, std::move(push)});
        } else {
            State next = State(pds.controls++);
            pds.rules.push_back({control, side, next, {}});
            compile_generator(child, next, pds);
        }
    }
}

Pds compile(const PrefixRewriteSystem& sys) {
    Pds pds;
    for (const NormalForm& f : sys.generators()) {
        if (f.is_leaf()) {
            std::vector<int> word;
            for (char c : Config::of(f.word()).letters()) word.push_back(symbol(c));
            for (int top : {kL, kR, kBottom}) {
                std::vector<int> push = word;
                push.push_back(top);
                pds.rules.push_back({kMain, top, kMain, std::move(push)});
            }
        } else {
            compile_generator(f, kMain, pds);
        }
    }
    return pds;
}

/// Automaton over {L, R, bottom, epsilon} whose first `controls` states are
/// the control states; a config c at the main state is accepted when
/// c + bottom leads from state 0 to `final_state`.
struct PAutomaton {
    std::vector<std::array<std::set<State>, 4>> out;
    State final_state = 0;

    State add_state() {
        out.emplace_back();
        return State(out.size() - 1);
    }

    bool add(State from, int sym, State to) { return out[from][sym].insert(to).second; }

    /// States reached from `from` reading `word`, no epsilon moves.
    std::set<State> read(State from, const std::vector<int>& word) const {
        std::set<State> cur{from};
        for (int sym : word) {
            std::set<State> next;
            for (State s : cur) next.insert(out[s][sym].begin(), out[s][sym].end());
            cur = std::move(next);
            if (cur.empty()) break;
        }
        return cur;
    }
};

PAutomaton embed(const ConfigAutomaton& a, std::size_t controls) {
    PAutomaton p;
    for (std::size_t i = 0; i < controls; ++i) p.add_state();
    const State offset = State(controls);
    for (State s = 0; s < a.state_count(); ++s) p.add_state();
    p.final_state = p.add_state();
    for (State s = 0; s < a.state_count(); ++s) {
        for (int sym : {kL, kR})
            for (State t : a.successors(s, sym == kL ? Letter::L : Letter::R)) {
                p.add(offset + s, sym, offset + t);
                // The main control state mirrors the initial states' edges so
                // that nothing ever enters a control state.
                if (a.is_initial(s)) p.add(kMain, sym, offset + t);
            }
        if (a.is_accepting(s)) {
            p.add(offset + s, kBottom, p.final_state);
            if (a.is_initial(s)) p.add(kMain, kBottom, p.final_state);
        }
    }
    return p;
}

ConfigAutomaton extract(const PAutomaton& p) {
    ConfigAutomaton a;
    for (std::size_t i = 0; i < p.out.size(); ++i) a.add_state();
    a.set_initial(kMain);
    for (State t : p.out[kMain][kEps]) a.set_initial(t);
    for (State s = 0; s < p.out.size(); ++s) {
        for (State t : p.out[s][kL]) a.add_transition(s, Letter::L, t);
        for (State t : p.out[s][kR]) a.add_transition(s, Letter::R, t);
        if (p.out[s][kBottom].count(p.final_state)) a.set_accepting(s);
    }
    return a.normalized();
}

}  // namespace

ConfigAutomaton pre_star(const PrefixRewriteSystem& sys, const ConfigAutomaton& target) {
    const Pds pds = compile(sys);
    PAutomaton p = embed(target, pds.controls);
    for (bool changed = true; changed;) {
        changed = false;
        for (const PdsRule& r : pds.rules)
            for (State q : p.read(r.to, r.push)) changed |= p.add(r.from, r.pop, q);
    }
    return extract(p);
}

ConfigAutomaton post_star(const PrefixRewriteSystem& sys, const ConfigAutomaton& start) {
    const Pds pds = compile(sys);
    PAutomaton p = embed(start, pds.controls);

    // Fresh states spelling out each push of two or more symbols; shared by
    // every application of the same rule.
    std::vector<std::vector<State>> chains(pds.rules.size());
    for (std::size_t i = 0; i < pds.rules.size(); ++i) {
        const PdsRule& r = pds.rules[i];
        if (r.push.size() < 2) continue;
        State prev = r.to;
        for (std::size_t k = 0; k + 1 < r.push.size(); ++k) {
            State next = p.add_state();
            p.add(prev, r.push[k], next);
            chains[i].push_back(next);
            prev = next;
        }
    }

    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < pds.rules.size(); ++i) {
            const PdsRule& r = pds.rules[i];
            // Targets of pop-symbol edges out of r.from, through at most one
            // epsilon edge (epsilon edges never lead into control states).
            std::set<State> tops = p.out[r.from][r.pop];
            for (State e : p.out[r.from][kEps])
                tops.insert(p.out[e][r.pop].begin(), p.out[e][r.pop].end());
            for (State q : tops) {
                if (r.push.empty()) {
                    changed |= p.add(r.to, kEps, q);
                } else if (r.push.size() == 1) {
                    changed |= p.add(r.to, r.push[0], q);
                } else {
                    changed |= p.add(chains[i].back(), r.push.back(), q);
                }
            }
        }
    }
    return extract(p);
}

}  // namespace cqm
