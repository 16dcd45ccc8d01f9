#pragma once

#include <vector>

namespace cqm::testing {

struct HandPuzzle {
    const char* name;
    const char* text;
    bool solvable;
};

// Small puzzles with known answers, worked out by hand.
inline const std::vector<HandPuzzle>& hand_puzzles() {
    static const std::vector<HandPuzzle> puzzles{
        {"identity slot", "var y1\ngadget I\nidentity ?y1 = I\n", true},
        {"projection absorbs", "var y1\ngadget <I,R>\nidentity L*?y1 = I\n", true},
        {"surjective pair in CQ", "var y1\ngadget <L,R>\nidentity ?y1 = I\n", false},
        {"surjective pair in CM", "mode CM\nvar y1\ngadget <L,R>\nidentity ?y1 = I\n", true},
        {"swap squares to surjective pair", "var a\nvar b\ngadget <R,L>\ngadget <R,L>\nidentity ?a*?b = <L,R>\n",
         true},
        {"swap squared is I only in CM",
         "mode CM\nvar a\nvar b\ngadget <R,L>\ngadget <R,L>\nidentity ?a*?b = I\n", true},
        {"swap squared is not I in CQ", "var a\nvar b\ngadget <R,L>\ngadget <R,L>\nidentity ?a*?b = I\n", false},
        {"order matters", "var a\nvar b\ngadget R\ngadget <L,I>\nidentity ?a*?b = I\n", true},
        {"no order works", "var a\nvar b\ngadget L\ngadget <R,I>\nidentity ?a*?b = I\n", false},
        {"two identities share gadgets",
         "var a\nvar b\ngadget <I,R>\ngadget <R,I>\nidentity L*?a = I\nidentity R*?b = I\n", true},
        {"two identities need the same gadget",
         "var a\nvar b\ngadget <I,R>\ngadget <L,L>\nidentity L*?a = I\nidentity L*?b = I\n", false},
        {"leftover gadget under exact-once", "var a\ngadget I\ngadget L\nidentity ?a = I\n", false},
        {"leftover gadget under at-most-once",
         "policy at-most-once\nvar a\ngadget L\ngadget I\nidentity ?a = I\n", true},
        {"unused variable takes the spare", "var a\nvar b\ngadget I\ngadget <L,R>\nidentity ?a = I\n", true},
        {"closed false identity", "var a\ngadget I\nidentity L*<R,I> = L\n", false},
        {"closed true identity", "var a\ngadget I\nidentity L*<R,I> = R\n", true},
        {"hole inside a pair", "var a\ngadget R\nidentity <?a,L>*<L,R> = <R,L>\n", true},
        {"pairing with a shift", "var a\nvar b\ngadget L\ngadget R*R\nidentity <?a,?b> = <L,RR>\n", true},
        {"pairing wants the other order",
         "var a\nvar b\ngadget R*R\ngadget L\nidentity <?a,?b> = <L,RR>\n", true},
        {"empty puzzle", "", true},
    };
    return puzzles;
}

}  // namespace cqm::testing
