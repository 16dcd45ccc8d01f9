#include "cqm/automaton.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

namespace cqm {

namespace {

constexpr std::array<Letter, 2> kAlphabet{Letter::L, Letter::R};

std::size_t index(Letter a) { return static_cast<std::size_t>(a); }

}  // namespace

// ------------------------------------------------------------ construction

ConfigAutomaton ConfigAutomaton::empty_language() { return {}; }

ConfigAutomaton ConfigAutomaton::universal() {
    ConfigAutomaton a;
    State s = a.add_state();
    a.set_initial(s);
    a.set_accepting(s);
    a.add_transition(s, Letter::L, s);
    a.add_transition(s, Letter::R, s);
    return a;
}

ConfigAutomaton ConfigAutomaton::from_configs(const std::vector<Config>& configs) {
    ConfigAutomaton a;
    if (configs.empty()) return a;
    State root = a.add_state();
    a.set_initial(root);
    for (const Config& c : configs) {
        State cur = root;
        for (char ch : c.letters()) {
            Letter x = ch == 'L' ? Letter::L : Letter::R;
            const auto& succ = a.successors(cur, x);
            if (succ.empty()) {
                State next = a.add_state();
                a.add_transition(cur, x, next);
                cur = next;
            } else {
                cur = succ.front();
            }
        }
        a.set_accepting(cur);
    }
    return a;
}

ConfigAutomaton::State ConfigAutomaton::add_state() {
    delta_.emplace_back();
    initial_.push_back(false);
    accepting_.push_back(false);
    return static_cast<State>(delta_.size() - 1);
}

void ConfigAutomaton::add_transition(State from, Letter a, State to) {
    auto& succ = delta_.at(from)[index(a)];
    if (to >= delta_.size()) throw std::out_of_range("transition target out of range");
    auto it = std::lower_bound(succ.begin(), succ.end(), to);
    if (it == succ.end() || *it != to) succ.insert(it, to);
}

void ConfigAutomaton::set_initial(State s, bool on) { initial_.at(s) = on; }
void ConfigAutomaton::set_accepting(State s, bool on) { accepting_.at(s) = on; }

// ----------------------------------------------------------------- queries

bool ConfigAutomaton::accepts(const Config& c) const {
    std::vector<bool> cur = initial_;
    for (char ch : c.letters()) {
        std::vector<bool> next(state_count(), false);
        const std::size_t x = ch == 'L' ? 0 : 1;
        for (State s = 0; s < state_count(); ++s)
            if (cur[s])
                for (State t : delta_[s][x]) next[t] = true;
        cur = std::move(next);
    }
    for (State s = 0; s < state_count(); ++s)
        if (cur[s] && accepting_[s]) return true;
    return false;
}

std::vector<bool> ConfigAutomaton::reachable() const {
    std::vector<bool> seen = initial_;
    std::vector<State> stack;
    for (State s = 0; s < state_count(); ++s)
        if (seen[s]) stack.push_back(s);
    while (!stack.empty()) {
        State s = stack.back();
        stack.pop_back();
        for (const auto& succ : delta_[s])
            for (State t : succ)
                if (!seen[t]) {
                    seen[t] = true;
                    stack.push_back(t);
                }
    }
    return seen;
}

std::vector<bool> ConfigAutomaton::coreachable() const {
    std::vector<std::vector<State>> preds(state_count());
    for (State s = 0; s < state_count(); ++s)
        for (const auto& succ : delta_[s])
            for (State t : succ) preds[t].push_back(s);
    std::vector<bool> seen = accepting_;
    std::vector<State> stack;
    for (State s = 0; s < state_count(); ++s)
        if (seen[s]) stack.push_back(s);
    while (!stack.empty()) {
        State s = stack.back();
        stack.pop_back();
        for (State p : preds[s])
            if (!seen[p]) {
                seen[p] = true;
                stack.push_back(p);
            }
    }
    return seen;
}

bool ConfigAutomaton::is_empty() const {
    auto reach = reachable();
    for (State s = 0; s < state_count(); ++s)
        if (reach[s] && accepting_[s]) return false;
    return true;
}

bool ConfigAutomaton::is_finite() const {
    const ConfigAutomaton u = normalized();
    // Iterative DFS cycle detection; every remaining state is useful, so
    // any cycle yields infinitely many accepted words.
    enum Color : std::uint8_t { White, Grey, Black };
    std::vector<Color> color(u.state_count(), White);
    for (State root = 0; root < u.state_count(); ++root) {
        if (color[root] != White) continue;
        std::vector<std::pair<State, std::size_t>> stack{{root, 0}};
        color[root] = Grey;
        while (!stack.empty()) {
            auto& [s, next] = stack.back();
            std::vector<State> succ;
            for (const auto& v : u.delta_[s]) succ.insert(succ.end(), v.begin(), v.end());
            if (next < succ.size()) {
                State t = succ[next++];
                if (color[t] == Grey) return false;
                if (color[t] == White) {
                    color[t] = Grey;
                    stack.emplace_back(t, 0);
                }
            } else {
                color[s] = Black;
                stack.pop_back();
            }
        }
    }
    return true;
}

// -------------------------------------------------------------- transforms

ConfigAutomaton ConfigAutomaton::restricted(const std::vector<bool>& keep) const {
    std::vector<State> order;
    std::vector<std::int64_t> map(state_count(), -1);
    auto visit = [&](State s) {
        if (keep[s] && map[s] < 0) {
            map[s] = static_cast<std::int64_t>(order.size());
            order.push_back(s);
        }
    };
    for (State s = 0; s < state_count(); ++s)
        if (initial_[s]) visit(s);
    for (std::size_t i = 0; i < order.size(); ++i)
        for (Letter a : kAlphabet)
            for (State t : delta_[order[i]][index(a)]) visit(t);
    for (State s = 0; s < state_count(); ++s) visit(s);

    ConfigAutomaton out;
    for (std::size_t i = 0; i < order.size(); ++i) out.add_state();
    for (std::size_t i = 0; i < order.size(); ++i) {
        State s = order[i];
        out.initial_[i] = initial_[s];
        out.accepting_[i] = accepting_[s];
        for (Letter a : kAlphabet)
            for (State t : delta_[s][index(a)])
                if (map[t] >= 0) out.add_transition(State(i), a, State(map[t]));
    }
    return out;
}

ConfigAutomaton ConfigAutomaton::normalized() const {
    auto keep = reachable();
    auto co = coreachable();
    for (State s = 0; s < state_count(); ++s) keep[s] = keep[s] && co[s];
    return restricted(keep);
}

ConfigAutomaton ConfigAutomaton::determinize() const {
    using Subset = std::vector<State>;
    std::map<Subset, State> ids;
    std::deque<Subset> work;
    ConfigAutomaton out;

    auto id_of = [&](const Subset& set) {
        auto it = ids.find(set);
        if (it != ids.end()) return it->second;
        State s = out.add_state();
        for (State q : set)
            if (accepting_[q]) out.set_accepting(s);
        ids.emplace(set, s);
        work.push_back(set);
        return s;
    };

    Subset start;
    for (State s = 0; s < state_count(); ++s)
        if (initial_[s]) start.push_back(s);
    out.set_initial(id_of(start));
    while (!work.empty()) {
        Subset set = std::move(work.front());
        work.pop_front();
        State from = ids.at(set);
        for (Letter a : kAlphabet) {
            Subset next;
            for (State q : set) {
                const auto& succ = delta_[q][index(a)];
                next.insert(next.end(), succ.begin(), succ.end());
            }
            std::sort(next.begin(), next.end());
            next.erase(std::unique(next.begin(), next.end()), next.end());
            out.add_transition(from, a, id_of(next));
        }
    }
    return out;
}

ConfigAutomaton ConfigAutomaton::complement() const {
    ConfigAutomaton d = determinize();
    for (State s = 0; s < d.state_count(); ++s) d.accepting_[s] = !d.accepting_[s];
    return d;
}

ConfigAutomaton ConfigAutomaton::minimize() const {
    const ConfigAutomaton d = determinize();
    const std::size_t n = d.state_count();
    auto next_of = [&](State s, Letter a) { return d.delta_[s][index(a)].front(); };

    std::vector<std::size_t> cls(n);
    for (State s = 0; s < n; ++s) cls[s] = d.accepting_[s] ? 1 : 0;
    std::size_t classes = 0;
    for (;;) {
        std::map<std::array<std::size_t, 3>, std::size_t> sig;
        std::vector<std::size_t> refined(n);
        for (State s = 0; s < n; ++s) {
            std::array<std::size_t, 3> key{cls[s], cls[next_of(s, Letter::L)], cls[next_of(s, Letter::R)]};
            auto [it, fresh] = sig.emplace(key, sig.size());
            refined[s] = it->second;
        }
        cls = std::move(refined);
        if (sig.size() == classes) break;
        classes = sig.size();
    }

    ConfigAutomaton q;
    for (std::size_t c = 0; c < classes; ++c) q.add_state();
    for (State s = 0; s < n; ++s) {
        State c = State(cls[s]);
        if (d.initial_[s]) q.set_initial(c);
        if (d.accepting_[s]) q.set_accepting(c);
        for (Letter a : kAlphabet) q.add_transition(c, a, State(cls[next_of(s, a)]));
    }
    return q.normalized();
}

bool ConfigAutomaton::equivalent(const ConfigAutomaton& other) const {
    return minimize() == other.minimize();
}

ConfigAutomaton ConfigAutomaton::intersect(const ConfigAutomaton& other) const {
    std::map<std::pair<State, State>, State> ids;
    std::deque<std::pair<State, State>> work;
    ConfigAutomaton out;
    auto id_of = [&](State a, State b) {
        auto key = std::make_pair(a, b);
        auto it = ids.find(key);
        if (it != ids.end()) return it->second;
        State s = out.add_state();
        if (accepting_[a] && other.accepting_[b]) out.set_accepting(s);
        ids.emplace(key, s);
        work.push_back(key);
        return s;
    };
    for (State a = 0; a < state_count(); ++a)
        if (initial_[a])
            for (State b = 0; b < other.state_count(); ++b)
                if (other.initial_[b]) out.set_initial(id_of(a, b));
    while (!work.empty()) {
        auto [a, b] = work.front();
        work.pop_front();
        State from = ids.at({a, b});
        for (Letter x : kAlphabet)
            for (State ta : delta_[a][index(x)])
                for (State tb : other.delta_[b][index(x)]) out.add_transition(from, x, id_of(ta, tb));
    }
    return out.normalized();
}

ConfigAutomaton ConfigAutomaton::unite(const ConfigAutomaton& other) const {
    ConfigAutomaton out = *this;
    const State offset = State(state_count());
    for (State s = 0; s < other.state_count(); ++s) out.add_state();
    for (State s = 0; s < other.state_count(); ++s) {
        out.initial_[offset + s] = other.initial_[s];
        out.accepting_[offset + s] = other.accepting_[s];
        for (Letter a : kAlphabet)
            for (State t : other.delta_[s][index(a)]) out.add_transition(offset + s, a, offset + t);
    }
    return out.normalized();
}

std::vector<Config> ConfigAutomaton::enumerate(std::size_t max_length) const {
    std::vector<Config> out;
    std::vector<std::pair<std::string, std::vector<bool>>> level{{"", initial_}};
    for (std::size_t len = 0; len <= max_length && !level.empty(); ++len) {
        std::vector<std::pair<std::string, std::vector<bool>>> next;
        for (auto& [word, set] : level) {
            bool any = false, acc = false;
            for (State s = 0; s < state_count(); ++s)
                if (set[s]) {
                    any = true;
                    acc = acc || accepting_[s];
                }
            if (!any) continue;
            if (acc) out.emplace_back(word);
            if (len == max_length) continue;
            for (Letter a : kAlphabet) {
                std::vector<bool> succ(state_count(), false);
                for (State s = 0; s < state_count(); ++s)
                    if (set[s])
                        for (State t : delta_[s][index(a)]) succ[t] = true;
                next.emplace_back(word + to_char(a), std::move(succ));
            }
        }
        level = std::move(next);
    }
    return out;
}

// ----------------------------------------------------------- serialization

std::string ConfigAutomaton::serialize() const {
    std::ostringstream out;
    out << "states " << state_count() << '\n';
    out << "initial";
    for (State s = 0; s < state_count(); ++s)
        if (initial_[s]) out << ' ' << s;
    out << "\naccepting";
    for (State s = 0; s < state_count(); ++s)
        if (accepting_[s]) out << ' ' << s;
    out << '\n';
    for (State s = 0; s < state_count(); ++s)
        for (Letter a : kAlphabet)
            for (State t : delta_[s][index(a)]) out << s << ' ' << to_char(a) << ' ' << t << '\n';
    return out.str();
}

ConfigAutomaton ConfigAutomaton::deserialize(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    ConfigAutomaton out;
    bool sized = false;
    auto parse_state = [&](const std::string& tok) {
        std::size_t pos = 0;
        unsigned long v = std::stoul(tok, &pos);
        if (pos != tok.size() || v >= out.state_count())
            throw std::invalid_argument("bad state '" + tok + "'");
        return State(v);
    };
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        if (head == "states") {
            std::size_t n = 0;
            if (!(ls >> n) || sized) throw std::invalid_argument("malformed 'states' line");
            for (std::size_t i = 0; i < n; ++i) out.add_state();
            sized = true;
            continue;
        }
        if (!sized) throw std::invalid_argument("'states' line must come first");
        std::string tok;
        if (head == "initial" || head == "accepting") {
            while (ls >> tok) {
                State s = parse_state(tok);
                head == "initial" ? out.set_initial(s) : out.set_accepting(s);
            }
            continue;
        }
        std::string letter, target;
        if (!(ls >> letter >> target) || (letter != "L" && letter != "R") || (ls >> tok))
            throw std::invalid_argument("malformed transition line '" + line + "'");
        out.add_transition(parse_state(head), letter == "L" ? Letter::L : Letter::R, parse_state(target));
    }
    return out;
}

}  // namespace cqm
