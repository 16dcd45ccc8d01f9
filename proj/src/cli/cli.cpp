#include "cqm/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "cqm/decisions.hpp"
#include "cqm/invertible.hpp"
#include "cqm/jigsaw.hpp"
#include "cqm/verdict_json.hpp"

namespace cqm::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Context {
    std::ostream& out;
    bool as_json = false;

    int boolean(bool value) {
        if (as_json) out << json{{"verdict", value ? "true" : "false"}}.dump() << "\n";
        else out << (value ? "true" : "false") << "\n";
        return value ? kTrue : kFalse;
    }

    int value(const char* key, const std::string& text) {
        if (as_json) out << json{{key, text}}.dump() << "\n";
        else out << text << "\n";
        return kTrue;
    }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::vector<NormalForm> parse_generators(const std::vector<std::string>& texts) {
    std::vector<NormalForm> out;
    for (const auto& t : texts) out.push_back(cq_normalize(parse_term(t)));
    return out;
}

std::string sequence_text(const std::vector<std::size_t>& seq) {
    std::string out;
    for (std::size_t i = 0; i < seq.size(); ++i) out += (i ? " " : "") + std::to_string(seq[i]);
    return out;
}

int verdict_exit(VerdictKind k) {
    switch (k) {
    case VerdictKind::Yes:
    case VerdictKind::Infinite: return kTrue;
    case VerdictKind::No:
    case VerdictKind::Finite: return kFalse;
    case VerdictKind::Unknown: return kUnknown;
    }
    return kUnknown;
}

void print_verdict(Context& ctx, const Verdict& v) {
    if (ctx.as_json) {
        ctx.out << to_json(v).dump() << "\n";
        return;
    }
    ctx.out << to_string(v.kind);
    switch (v.kind) {
    case VerdictKind::Yes: ctx.out << "\nwitness: " << sequence_text(v.witness); break;
    case VerdictKind::No: ctx.out << (v.exhaustive ? " (exhaustive)" : ""); break;
    case VerdictKind::Unknown:
        ctx.out << " after " << v.budget_spent;
        if (!v.certificate.empty()) ctx.out << ": " << v.certificate;
        break;
    case VerdictKind::Infinite: ctx.out << ": " << v.certificate; break;
    case VerdictKind::Finite:
        ctx.out << ": " << v.elements.size() << " elements";
        for (const NormalForm& f : v.elements) ctx.out << "\n" << to_string(f);
        break;
    }
    ctx.out << "\n";
}

jigsaw::EncoderOptions encoder_options(const std::string& exponent, const std::string& negative,
                                       const std::string& consistency) {
    jigsaw::EncoderOptions o;
    o.exponent = exponent == "a" ? jigsaw::EncoderOptions::Exponent::AsPrinted : jigsaw::EncoderOptions::Exponent::Shifted;
    o.negative = negative == "i-k" ? jigsaw::EncoderOptions::NegativeIndex::Swapped
                                   : jigsaw::EncoderOptions::NegativeIndex::FromEnd;
    o.consistency = consistency == "bare" ? jigsaw::EncoderOptions::Consistency::AsPrinted
                                          : jigsaw::EncoderOptions::Consistency::Selector;
    return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Normal forms, shift dynamics and decision procedures for CQ and CM", "cqm"};
    app.require_subcommand(1);
    Context ctx{out};
    app.add_flag("--json", ctx.as_json, "Emit JSON");

    std::function<int()> action;
    std::string t1, t2, shift_text;
    bool cm = false;
    std::vector<std::string> gens, rest;
    std::size_t budget = kDefaultSearchBudget;

    auto gen_option = [&](CLI::App* sub) {
        sub->add_option("--gen", gens, "Generator term (repeatable)")
            ->expected(1)
            ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    };

    // ----------------------------------------------------------- terms
    auto* normalize_cmd = app.add_subcommand("normalize", "Normal form of a term");
    normalize_cmd->add_flag("--cm", cm, "Collapse to the CM normal form");
    normalize_cmd->add_option("term", t1)->required();
    normalize_cmd->callback([&] {
        action = [&] { return ctx.value("normal_form", to_string(normalize(parse_term(t1), cm ? Theory::CM : Theory::CQ))); };
    });

    auto* eq_cmd = app.add_subcommand("eq", "Word problem");
    eq_cmd->add_flag("--cm", cm, "Decide equality in CM instead of CQ");
    eq_cmd->add_option("lhs", t1)->required();
    eq_cmd->add_option("rhs", t2)->required();
    eq_cmd->callback([&] {
        action = [&] { return ctx.boolean(equal(parse_term(t1), parse_term(t2), cm ? Theory::CM : Theory::CQ)); };
    });

    auto* apply_cmd = app.add_subcommand("apply", "Normal form of S*T for a shift S");
    apply_cmd->add_option("shift", shift_text)->required();
    apply_cmd->add_option("term", t1)->required();
    apply_cmd->callback([&] {
        action = [&] {
            return ctx.value("normal_form", to_string(apply_shift(parse_shift(shift_text), cq_normalize(parse_term(t1)))));
        };
    });

    auto* shifts_cmd = app.add_subcommand("shifts", "Leaf addresses and shift words");
    shifts_cmd->add_option("term", t1)->required();
    shifts_cmd->callback([&] {
        action = [&] {
            const auto entries = shifts_of(cq_normalize(parse_term(t1)));
            if (ctx.as_json) {
                json arr = json::array();
                for (const auto& e : entries)
                    arr.push_back({{"address", e.address.to_string()},
                                   {"access", e.address.access_word().to_string()},
                                   {"word", e.word.to_string()}});
                ctx.out << arr.dump() << "\n";
            } else {
                for (const auto& e : entries)
                    ctx.out << e.address.to_string() << " " << e.address.access_word().to_string() << " "
                            << e.word.to_string() << "\n";
            }
            return kTrue;
        };
    });

    auto* ri_cmd = app.add_subcommand("ri-check", "Right-invertibility in CM");
    ri_cmd->add_option("term", t1)->required();
    ri_cmd->callback([&] { action = [&] { return ctx.boolean(is_right_invertible(cq_normalize(parse_term(t1)))); }; });

    auto* inv_cmd = app.add_subcommand("right-inverse", "Some G with T*G = I in CM");
    inv_cmd->add_option("term", t1)->required();
    inv_cmd->callback([&] {
        action = [&] {
            const NormalForm f = cq_normalize(parse_term(t1));
            if (!is_right_invertible(f)) {
                if (ctx.as_json) ctx.out << json{{"verdict", "false"}}.dump() << "\n";
                else ctx.out << "not right-invertible\n";
                return int(kFalse);
            }
            return ctx.value("inverse", to_string(right_inverse(f)));
        };
    });

    auto* sep_cmd = app.add_subcommand("separate", "Separate CM-equal, CQ-distinct terms");
    sep_cmd->add_option("first", t1)->required();
    sep_cmd->add_option("second", t2)->required();
    sep_cmd->callback([&] {
        action = [&] {
            const NormalForm a = cq_normalize(parse_term(t1)), b = cq_normalize(parse_term(t2));
            if (a == b || collapse(a) != collapse(b)) {
                if (ctx.as_json) ctx.out << json{{"verdict", "false"}}.dump() << "\n";
                else ctx.out << (a == b ? "equal in CQ" : "different in CM") << "\n";
                return int(kFalse);
            }
            const Separation s = cq_separator(a, b);
            if (ctx.as_json)
                ctx.out << json{{"h", to_string(s.h)}, {"k", to_string(s.k)}, {"index", s.index}}.dump() << "\n";
            else
                ctx.out << "h: " << to_string(s.h) << "\nk: " << to_string(s.k) << "\nindex: " << s.index << "\n";
            return int(kTrue);
        };
    });

    auto* kernel_cmd = app.add_subcommand("kernel", "Whether T equals I in CM");
    kernel_cmd->add_option("term", t1)->required();
    kernel_cmd->callback([&] { action = [&] { return ctx.boolean(in_kernel(parse_term(t1))); }; });

    // ----------------------------------------------------------- shifts
    // Generators may follow --gen or come as extra positionals.
    auto shift_and_gens = [&](const char* name, const char* help, std::function<int(const ShiftWord&, const std::vector<NormalForm>&)> body) {
        auto* sub = app.add_subcommand(name, help);
        gen_option(sub);
        sub->add_option("shift", shift_text)->required();
        sub->add_option("more", rest, "Further generators");
        sub->callback([&, body] {
            action = [&, body] {
                std::vector<std::string> all = gens;
                all.insert(all.end(), rest.begin(), rest.end());
                return body(parse_shift(shift_text), parse_generators(all));
            };
        });
    };
    shift_and_gens("bad", "Whether the shift is bad for the generators",
                   [&](const ShiftWord& s, const std::vector<NormalForm>& b) { return ctx.boolean(is_bad(s, b)); });
    shift_and_gens("extenuative", "Whether the shift is extenuative",
                   [&](const ShiftWord& s, const std::vector<NormalForm>& b) { return ctx.boolean(is_extenuative(s, b)); });
    shift_and_gens("kill", "Shortest generator sequence turning the shift into a pair",
                   [&](const ShiftWord& s, const std::vector<NormalForm>& b) {
                       const KillResult k = killing_sequence(s, b, budget);
                       const int code = k.sequence ? kTrue : k.frontier_closed ? kFalse : kUnknown;
                       if (ctx.as_json) {
                           json j{{"frontier_closed", k.frontier_closed}, {"states", k.states_expanded}};
                           j["verdict"] = k.sequence ? "yes" : k.frontier_closed ? "no" : "unknown";
                           if (k.sequence) j["witness"] = *k.sequence;
                           ctx.out << j.dump() << "\n";
                       } else if (k.sequence) {
                           ctx.out << "yes\nwitness: " << sequence_text(*k.sequence) << "\n";
                       } else {
                           ctx.out << (k.frontier_closed ? "no (the shift is bad)" : "unknown") << "\n";
                       }
                       return code;
                   });
    app.get_subcommand("kill")->add_option("--budget", budget, "Search states");

    auto gens_only = [&](const char* name, const char* help, std::function<int(const std::vector<NormalForm>&)> body) {
        auto* sub = app.add_subcommand(name, help);
        gen_option(sub);
        sub->add_option("more", rest, "Further generators");
        sub->callback([&, body] {
            action = [&, body] {
                std::vector<std::string> all = gens;
                all.insert(all.end(), rest.begin(), rest.end());
                return body(parse_generators(all));
            };
        });
        return sub;
    };
    gens_only("covers", "Whether the generators cover Cantor space",
              [&](const std::vector<NormalForm>& b) { return ctx.boolean(covers_cantor(b)); });
    std::size_t tree_cap = kDefaultTreeCap;
    gens_only("infinite", "Whether the generated submonoid is infinite", [&](const std::vector<NormalForm>& b) {
        const Verdict v = submonoid_infinite(b, tree_cap);
        print_verdict(ctx, v);
        return verdict_exit(v.kind);
    })->add_option("--cap", tree_cap, "Product tree cap");

    // ----------------------------------------------------------- membership
    bool ri = false;
    auto* member_cmd = app.add_subcommand("member", "Whether TARGET is a product of generators");
    gen_option(member_cmd);
    member_cmd->add_flag("--ri", ri, "Right-invertible fragment");
    member_cmd->add_option("--budget", budget, "Search states");
    member_cmd->add_option("args", rest, "[generators...] TARGET")->required();
    member_cmd->callback([&] {
        action = [&] {
            std::vector<std::string> all = gens;
            all.insert(all.end(), rest.begin(), rest.end() - 1);
            const NormalForm target = cq_normalize(parse_term(rest.back()));
            const auto b = parse_generators(all);
            Verdict v;
            try {
                v = ri ? is_member_ri(target, b, budget) : is_member(target, b, budget);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            print_verdict(ctx, v);
            return verdict_exit(v.kind);
        };
    });

    // ----------------------------------------------------------- jigsaw
    auto* jig = app.add_subcommand("jigsaw", "Jigsaw puzzles and the SAT reduction");
    jig->require_subcommand(1);
    std::string file, exponent = "a-1", negative = "k-i", consistency = "selector";
    std::size_t solver_budget = jigsaw::kDefaultSolverBudget;
    auto encoder_flags = [&](CLI::App* sub) {
        sub->add_option("--exponent", exponent, "Selector exponent: a-1 or a")->check(CLI::IsMember({"a-1", "a"}));
        sub->add_option("--negative", negative, "Negative literal index: k-i or i-k")->check(CLI::IsMember({"k-i", "i-k"}));
        sub->add_option("--consistency", consistency, "Consistency chain: selector or bare")
            ->check(CLI::IsMember({"selector", "bare"}));
    };

    auto* encode_cmd = jig->add_subcommand("encode", "Puzzle for a DIMACS file");
    encode_cmd->add_option("file", file)->required();
    encoder_flags(encode_cmd);
    encode_cmd->callback([&] {
        action = [&] {
            const auto e = jigsaw::encode(jigsaw::parse_dimacs(read_file(file)), encoder_options(exponent, negative, consistency));
            if (ctx.as_json) ctx.out << json{{"puzzle", jigsaw::to_text(e.puzzle)}}.dump() << "\n";
            else ctx.out << jigsaw::to_text(e.puzzle);
            return int(kTrue);
        };
    });

    auto* solve_cmd = jig->add_subcommand("solve", "Solve a puzzle file");
    solve_cmd->add_option("file", file)->required();
    solve_cmd->add_option("--budget", solver_budget, "Search nodes");
    solve_cmd->callback([&] {
        action = [&] {
            const auto p = jigsaw::parse_puzzle(read_file(file));
            jigsaw::SolveResult r;
            try {
                r = jigsaw::solve_puzzle(p, solver_budget);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            const char* status = r.status == jigsaw::SolveStatus::Solved       ? "solved"
                                 : r.status == jigsaw::SolveStatus::Unsolvable ? "unsolvable"
                                                                                : "unknown";
            if (ctx.as_json) {
                json j{{"verdict", status}, {"nodes", r.nodes}};
                if (r.assignment) {
                    json a = json::object();
                    for (std::size_t v = 0; v < p.variables.size(); ++v)
                        a[p.variables[v]] = to_string(p.gadgets[r.assignment->gadget_of[v]]);
                    j["assignment"] = a;
                }
                ctx.out << j.dump() << "\n";
            } else {
                ctx.out << status << "\n";
                if (r.assignment)
                    for (std::size_t v = 0; v < p.variables.size(); ++v)
                        ctx.out << p.variables[v] << " = " << to_string(p.gadgets[r.assignment->gadget_of[v]]) << "\n";
            }
            return r.status == jigsaw::SolveStatus::Solved       ? int(kTrue)
                   : r.status == jigsaw::SolveStatus::Unsolvable ? int(kFalse)
                                                                  : int(kUnknown);
        };
    });

    auto* reduce_cmd = jig->add_subcommand("verify-reduction", "Compare the puzzle with brute-force SAT");
    reduce_cmd->add_option("file", file)->required();
    encoder_flags(reduce_cmd);
    reduce_cmd->callback([&] {
        action = [&] {
            const auto r = jigsaw::verify_reduction(jigsaw::parse_dimacs(read_file(file)),
                                                    encoder_options(exponent, negative, consistency), solver_budget);
            if (ctx.as_json) {
                json j{{"satisfiable", r.satisfiable()},
                       {"solvable", r.solvable()},
                       {"conclusive", r.conclusive()},
                       {"agree", r.agree()},
                       {"identities", r.identities},
                       {"encoder", jigsaw::to_string(r.options)}};
                if (r.naive_solvable) j["naive_solvable"] = *r.naive_solvable;
                if (r.canonical_verifies) j["canonical_verifies"] = *r.canonical_verifies;
                ctx.out << j.dump() << "\n";
            } else {
                ctx.out << r.render();
            }
            return !r.conclusive() ? int(kUnknown) : r.agree() ? int(kTrue) : int(kFalse);
        };
    });

    bool all_options = false;
    auto* corpus_cmd = jig->add_subcommand("corpus", "Run the reduction check over the built-in CNF corpus");
    corpus_cmd->add_flag("--all-options", all_options, "Every encoder configuration");
    encoder_flags(corpus_cmd);
    corpus_cmd->callback([&] {
        action = [&] {
            std::vector<jigsaw::EncoderOptions> configs{encoder_options(exponent, negative, consistency)};
            if (all_options) configs = jigsaw::all_encoder_options();
            bool all_agree = true;
            json arr = json::array();
            for (const auto& o : configs) {
                const auto s = jigsaw::verify_corpus(jigsaw::desk_corpus(), o);
                all_agree = all_agree && s.agreements == s.total;
                if (ctx.as_json)
                    arr.push_back({{"encoder", jigsaw::to_string(o)},
                                   {"total", s.total},
                                   {"agree", s.agreements},
                                   {"confirmed_disagreements", s.confirmed_disagreements},
                                   {"inconclusive", s.inconclusive}});
                else
                    ctx.out << s.render();
            }
            if (ctx.as_json) ctx.out << arr.dump() << "\n";
            return all_agree ? int(kTrue) : int(kFalse);
        };
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kTrue : kUsage;
    }
    try {
        return action ? action() : kUsage;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
    }
    return kUsage;
}

}  // namespace cqm::cli
