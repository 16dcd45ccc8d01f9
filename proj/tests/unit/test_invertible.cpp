#include <random>

#include "doctest.h"

#include "cqm/invertible.hpp"
#include "generators.hpp"

using namespace cqm;

namespace {

NormalForm nf(const char* text) { return cq_normalize(parse_term(text)); }

void check_separation(const NormalForm& u0, const NormalForm& u1) {
    const Separation s = cq_separator(u0, u1);
    const Term u[2] = {to_term(u0), to_term(u1)};
    const Term hit = Term::compose(Term::compose(s.h, u[s.index]), s.k);
    const Term miss = Term::compose(Term::compose(s.h, u[1 - s.index]), s.k);
    CHECK(cq_normalize(hit).is_identity());
    CHECK_FALSE(cq_normalize(miss).is_identity());
    CHECK(in_kernel(miss));
}

}  // namespace

TEST_CASE("right invertibility by the suffix test") {
    CHECK(is_right_invertible(nf("<R,L>")));
    CHECK_FALSE(is_right_invertible(nf("<L,R*L>")));
    CHECK(is_right_invertible(nf("L")));
    CHECK(is_right_invertible(nf("I")));
    // Equal words at two leaves.
    CHECK_FALSE(is_right_invertible(nf("<L,L>")));
    CHECK_FALSE(is_right_invertible(nf("<I,I>")));
    // Collapsed first: <<LL,RL>,R> is <L,R> which is I.
    CHECK(is_right_invertible(nf("<<LL,RL>,R>")));
    CHECK(is_right_invertible(nf("<<LL,R>,RL>")));
}

TEST_CASE("right_inverse examples") {
    CHECK(right_inverse(nf("<R,L>")) == nf("<R,L>"));
    CHECK(right_inverse(NormalForm()) == NormalForm());
    CHECK(right_inverse(nf("L")) == nf("<I,I>"));
    CHECK(cq_normalize(parse_term("L*<I,I>")).is_identity());
    CHECK_THROWS_AS(right_inverse(nf("<L,R*L>")), std::invalid_argument);
}

TEST_CASE("right_inverse on random right-invertible elements") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 200; ++i) {
        NormalForm f = testing::random_ri(rng, 1 + i % 7);
        REQUIRE(is_right_invertible(f));
        NormalForm g = right_inverse(f);
        CHECK(collapse(multiply(f, g)).is_identity());
    }
}

TEST_CASE("cq_separator examples") {
    Separation a = cq_separator(NormalForm(), nf("<L,R>"));
    CHECK(a.h == Term::identity());
    CHECK(a.k == Term::identity());
    CHECK(a.index == 0);

    Separation b = cq_separator(nf("L"), nf("<L*L,R*L>"));
    CHECK(b.h == Term::identity());
    CHECK(to_string(b.k) == "<I,I>");
    CHECK(b.index == 0);

    Separation c = cq_separator(nf("<I,R>"), nf("<<L,R>,R>"));
    CHECK(to_string(c.h) == "L");
    CHECK(c.k == Term::identity());
    CHECK(c.index == 0);

    Separation d = cq_separator(nf("<L,R>"), NormalForm());
    CHECK(d.index == 1);

    check_separation(NormalForm(), nf("<L,R>"));
    check_separation(nf("L"), nf("<LL,RL>"));
    check_separation(nf("<I,R>"), nf("<<L,R>,R>"));
}

TEST_CASE("cq_separator rejects bad preconditions") {
    CHECK_THROWS_AS(cq_separator(nf("<L,R>"), nf("<L,R>")), std::invalid_argument);
    CHECK_THROWS_AS(cq_separator(nf("<R,L>"), nf("<L,R>")), std::invalid_argument);
}

TEST_CASE("cq_separator on pairs built by reverse collapse") {
    std::mt19937_64 rng(23);
    int checked = 0;
    while (checked < 200) {
        NormalForm base = testing::random_normal_form(rng, 3, 3);
        NormalForm u0 = base, u1 = base;
        for (int k = int(rng() % 3); k >= 0; --k) u1 = testing::expand_random_leaf(rng, u1);
        if (rng() % 2) u0 = testing::expand_random_leaf(rng, u0);
        if (u0 == u1) continue;
        REQUIRE(collapse(u0) == collapse(u1));
        check_separation(u0, u1);
        ++checked;
    }
}
