#include "commdet/error.hpp"
#include "commdet/proof_script.hpp"

#include <map>

namespace commdet {

namespace {

// Shared derivation: the 16-generator commutator of the two Whitehead blocks
// reduces to the 4-generator word x32(1-u^-1) x23(v-1) x32(u^-1-1) x23(1-v).
// The four phases walk the d12(u) factors one at a time past the d13(v)
// block; every commutator picked up on the way either collapses to a
// zero-argument generator (the defining relation at work) or cancels against
// a partner produced later.
const char* kSymbolReductionBody = R"(
# phase 1: walk x12(1-u^-1) across the d13 block, cancel it against the
# leading factor of d12(u)^-1, then annihilate the two x32 commutators
push-outer @4
swap @6
push-outer @7
swap @9
merge @10
delzero @10
push-inner @6
delzero @6
swap @5
merge @4
delzero @4
expect: x21(u^-1) x12(1-u) x21(-1) x31(v^-1) x13(1-v) x31(-1) x13(1-v^-1) x21(1) x12(u-1) x21(-u^-1) x13(v^-1-1) x31(1) x13(v-1) x31(-v^-1)

# phase 2: walk x21(-1) across; the two x23 commutators stay for later
swap @3
push-inner @4
swap @6
push-inner @7
merge @9
delzero @9
expect: x21(u^-1) x12(1-u) x31(v^-1) x23(v-1) x13(1-v) x31(-1) x23(v^-1-1) x13(1-v^-1) x12(u-1) x21(-u^-1) x13(v^-1-1) x31(1) x13(v-1) x31(-v^-1)

# phase 3: walk x12(1-u) across, producing the x32 pair
push-outer @2
push-inner @4
delzero @4
swap @5
push-outer @6
push-inner @8
delzero @8
swap @9
merge @10
delzero @10
expect: x21(u^-1) x32(u-1) x31(v^-1) x23(v-1) x13(1-v) x32(1-u) x31(-1) x23(v^-1-1) x13(1-v^-1) x21(-u^-1) x13(v^-1-1) x31(1) x13(v-1) x31(-v^-1)

# phase 4: walk x21(u^-1) across, then cancel the x23, x32 pairs and the
# tail of d13(v)^-1
push-outer @1
swap @3
swap @4
push-inner @5
push-outer @7
swap @9
swap @10
push-inner @11
merge @13
delzero @13
merge @4
delzero @4
merge @8
delzero @8
swap @2
push-outer @3
delzero @3
swap @4
merge @5
delzero @5
merge @6
delzero @6
merge @5
delzero @5
expect: x31(u^-1-1) x31(v^-1) x13(1-v) x31(1-u^-1) x13(v-1) x31(-v^-1)

# endgame: factorize x31(1-u^-1) into x32/x21 generators, then drain the
# remaining d13 factors to the right where they cancel
inszero @5 x21
split @5 1|-1
inszero @6 x32
split @6 1-u^-1|u^-1-1
push-inner-inv @4
push-inner @3
delzero @3
push-outer @4
push-inner @6
delzero @6
push-outer @7
merge @9
delzero @9
expect: x31(u^-1-1) x31(v^-1) x32(1-u^-1) x23(v-1) x21(1) x32(u^-1-1) x23(1-v) x21(-1) x31(-v^-1)
swap @2
push-outer @3
swap @5
swap @6
push-outer @7
swap @9
merge @10
delzero @10
swap @3
swap @4
push-outer @5
delzero @5
merge @6
delzero @6
push-outer @4
push-inner @3
delzero @3
swap @2
merge @1
delzero @1
swap @4
merge @5
delzero @5
)";

const char* kSymbolWordHeader =
    "start: x21(u^-1) x12(1-u) x21(-1) x12(1-u^-1) "
    "x31(v^-1) x13(1-v) x31(-1) x13(1-v^-1) "
    "x12(u^-1-1) x21(1) x12(u-1) x21(-u^-1) "
    "x13(v^-1-1) x31(1) x13(v-1) x31(-v^-1)\n"
    "level: strict\n";

std::string make_prop22() {
    std::string s = kSymbolWordHeader;
    s += "target: x32(1-u^-1) x23(v-1) x32(u^-1-1) x23(1-v)\n";
    s += kSymbolReductionBody;
    return s;
}

std::string make_thm32() {
    std::string s = kSymbolWordHeader;
    s += "target: x12(u-1) x21(v-1) x12(1-u) x21(1-v)\n";
    s += kSymbolReductionBody;
    // The reduced word maps into the kernel of the matrix homomorphism, so
    // cyclic rotation is licensed; the substitution (u,v) -> (v^-1,u) and an
    // index relabeling carry it to the commutator in slots 12/21.
    s += "subst u->v^-1 v->u\n";
    s += "expect: x32(1-v) x23(u-1) x32(v-1) x23(1-u)\n";
    s += "rotate k=2\n";
    s += "perm (3 1 2)\n";
    s += "expect: x21(v-1) x12(1-u) x21(1-v) x12(u-1)\n";
    s += "rotate k=3\n";
    return s;
}

const std::map<std::string, std::string>& builtin_map() {
    static const std::map<std::string, std::string> m = {
        {"prop22", make_prop22()},
        {"thm32", make_thm32()},
    };
    return m;
}

} // namespace

const std::string& builtin_script_text(const std::string& name) {
    std::string key = name;
    if (key.rfind("builtin:", 0) == 0) key = key.substr(8);
    auto it = builtin_map().find(key);
    if (it == builtin_map().end())
        throw Error(ErrorKind::BadArgument, "unknown builtin script '" + name + "'");
    return it->second;
}

std::vector<std::string> builtin_script_names() {
    std::vector<std::string> names;
    for (const auto& [k, v] : builtin_map()) names.push_back("builtin:" + k);
    return names;
}

} // namespace commdet
