#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

#include "cqm/cli.hpp"
#include "cqm/decisions.hpp"
#include "cqm/jigsaw.hpp"

using namespace cqm;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome call(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& contents) {
    const auto path = std::filesystem::temp_directory_path() / ("cqm_test_cli_" + name);
    std::ofstream(path) << contents;
    return path.string();
}

}  // namespace

TEST_CASE("word problem examples") {
    auto r = call({"eq", "--cm", "<L,R>", "I"});
    CHECK(r.code == 0);
    CHECK(r.out == "true\n");
    r = call({"eq", "<L,R>", "I"});
    CHECK(r.code == 1);
    CHECK(r.out == "false\n");
    CHECK(call({"normalize", "L*<R,L>"}).out == "R\n");
    CHECK(call({"normalize", "--cm", "<L*R,R*R>"}).out == "R\n");
    CHECK(call({"kernel", "<L,R>"}).code == 0);
    CHECK(call({"kernel", "L"}).code == 1);
}

TEST_CASE("shift arguments accept both spellings") {
    const auto a = call({"apply", "RR", "<L,<R,<I,L>>>"});
    const auto b = call({"apply", "R*R", "<L,<R,<I,L>>>"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == "<I,L>\n");
    CHECK(call({"shifts", "<L,I>"}).out == "first L L\nsecond R I\n");
}

TEST_CASE("right-invertible tooling") {
    CHECK(call({"ri-check", "<R,L>"}).code == 0);
    CHECK(call({"ri-check", "<L,L>"}).code == 1);
    const auto inv = call({"right-inverse", "<R,L>"});
    REQUIRE(inv.code == 0);
    const std::string g = inv.out.substr(0, inv.out.size() - 1);
    CHECK(call({"eq", "--cm", "<R,L>*" + g, "I"}).code == 0);
    CHECK(call({"right-inverse", "<L,L>"}).code == 1);

    const auto sep = call({"--json", "separate", "<L,R>", "I"});
    REQUIRE(sep.code == 0);
    const auto j = nlohmann::json::parse(sep.out);
    const std::string h = j["h"], k = j["k"];
    const std::string u[2] = {"<L,R>", "I"};
    const int index = j["index"];
    CHECK(call({"eq", h + "*" + u[index] + "*" + k, "I"}).code == 0);
    CHECK(call({"eq", h + "*" + u[1 - index] + "*" + k, "I"}).code == 1);
    CHECK(call({"separate", "L", "R"}).code == 1);
}

TEST_CASE("shift predicates") {
    CHECK(call({"covers", "--gen", "<R,L>"}).code == 1);
    CHECK(call({"covers", "--gen", "<R,L>"}).out == "false\n");
    CHECK(call({"covers", "--gen", "<I,I>"}).code == 0);
    CHECK(call({"covers", "--gen", "L", "--gen", "R"}).code == 1);
    CHECK(call({"bad", "R", "--gen", "<R,L>"}).code == 0);
    CHECK(call({"bad", "I", "--gen", "L"}).code == 0);
    CHECK(call({"bad", "I", "--gen", "<L,R>"}).code == 1);
    CHECK(call({"extenuative", "R", "--gen", "<L,<I,I>>"}).code ==
          (is_extenuative(parse_shift("R"), {cq_normalize(parse_term("<L,<I,I>>"))}) ? 0 : 1));
    // Extra positionals after the shift are generators too.
    CHECK(call({"bad", "R", "<R,L>", "<L,R>"}).code == call({"bad", "R", "--gen", "<R,L>", "--gen", "<L,R>"}).code);
}

TEST_CASE("membership verdicts and exit codes") {
    auto r = call({"member", "--gen", "<L,R*R>", "<L,R*R*R>"});
    CHECK(r.code == 0);
    CHECK(r.out == "yes\nwitness: 0 0\n");
    r = call({"--json", "member", "--gen", "<L,R*R>", "<L,R*R*R>"});
    CHECK(nlohmann::json::parse(r.out) == nlohmann::json{{"verdict", "yes"}, {"witness", {0, 0}}});

    r = call({"member", "--gen", "R*R", "R"});
    CHECK(r.code == 1);
    r = call({"member", "--budget", "50", "--gen", "L", "--gen", "<I,I>", "<L,R>"});
    const Verdict v = is_member(cq_normalize(parse_term("<L,R>")),
                                {cq_normalize(parse_term("L")), cq_normalize(parse_term("<I,I>"))}, 50);
    REQUIRE(v.kind == VerdictKind::Unknown);
    CHECK(r.code == 2);

    CHECK(call({"member", "--ri", "--gen", "<R,L>", "I"}).code == 0);
    CHECK(call({"member", "--ri", "--gen", "<L,L>", "I"}).code == 64);
}

TEST_CASE("submonoid and killing sequences") {
    CHECK(call({"infinite", "--gen", "<R,L>"}).code == 1);
    CHECK(call({"infinite", "--gen", "R"}).code == 0);
    const auto k = call({"kill", "R", "--gen", "<L,<I,I>>"});
    CHECK(k.code != 64);
    CHECK(call({"kill", "R", "--gen", "<R,L>"}).code == 1);
}

TEST_CASE("usage and parse errors") {
    CHECK(call({}).code == 64);
    CHECK(call({"frobnicate"}).code == 64);
    CHECK(call({"eq", "L"}).code == 64);
    const auto r = call({"eq", "((", "I"});
    CHECK(r.code == 64);
    CHECK(r.err.find("parse error") != std::string::npos);
    CHECK(call({"apply", "RX", "L"}).code == 64);
    CHECK(call({"member", "--gen", "L"}).code == 64);
    CHECK(call({"jigsaw", "solve", "/nonexistent/file"}).code == 64);
    CHECK(call({"--help"}).code == 0);
}

TEST_CASE("json output is parseable and repeatable") {
    const std::vector<std::vector<std::string>> invocations{
        {"--json", "normalize", "<L,R>*<R,L>"},
        {"--json", "eq", "L", "R"},
        {"--json", "shifts", "<L,<R,I>>"},
        {"--json", "infinite", "--gen", "<R,L>"},
        {"--json", "infinite", "--gen", "R"},
        {"--json", "member", "--gen", "R*R", "R"},
        {"--json", "kill", "R", "--gen", "<R,L>"},
    };
    for (const auto& args : invocations) {
        const auto a = call(args), b = call(args);
        CHECK(a.out == b.out);
        CHECK(nlohmann::json::accept(a.out));
    }
    CHECK(nlohmann::json::parse(call({"--json", "infinite", "--gen", "<R,L>"}).out)["verdict"] == "finite");
}

TEST_CASE("jigsaw subcommands") {
    const std::string cnf = temp_file("sat.cnf", "p cnf 2 2\n1 2 0\n-1 0\n");
    const auto enc = call({"jigsaw", "encode", cnf});
    REQUIRE(enc.code == 0);
    const auto puzzle = jigsaw::parse_puzzle(enc.out);
    CHECK(puzzle == jigsaw::encode(jigsaw::parse_dimacs("p cnf 2 2\n1 2 0\n-1 0\n")).puzzle);

    const std::string solvable = temp_file("yes.puzzle", "var a\nvar b\ngadget R\ngadget <L,I>\nidentity ?a*?b = I\n");
    auto r = call({"jigsaw", "solve", solvable});
    CHECK(r.code == 0);
    CHECK(r.out == "solved\na = R\nb = <L,I>\n");
    const std::string hopeless = temp_file("no.puzzle", "var a\nvar b\ngadget L\ngadget <R,I>\nidentity ?a*?b = I\n");
    CHECK(call({"jigsaw", "solve", hopeless}).code == 1);
    CHECK(call({"jigsaw", "solve", "--budget", "0", solvable}).code == 2);

    // Every literal occurrence can be true here, so the reduction agrees.
    const std::string agreeing = temp_file("agree.cnf", "p cnf 2 2\n1 2 0\n2 0\n");
    r = call({"jigsaw", "verify-reduction", agreeing});
    CHECK(r.code == 0);
    CHECK(r.out.find("agree") != std::string::npos);
    const std::string clash = temp_file("clash.cnf", "p cnf 1 1\n1 -1 0\n");
    CHECK(call({"jigsaw", "verify-reduction", clash}).code == 1);
    CHECK(call({"jigsaw", "verify-reduction", "--exponent", "b", clash}).code == 64);
    const std::string broken = temp_file("broken.cnf", "p cnf 1 2\n1 0\n");
    CHECK(call({"jigsaw", "encode", broken}).code == 64);
}
