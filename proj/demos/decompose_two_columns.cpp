// Decomposition numbers of the standard modules of a two-column pyramid:
// for every column strict filling with entries in a small window, print the
// expansion of [V(A)] into irreducibles, flagging the irreducible ones.

#include <cstdio>

#include "wrep/classify.hpp"

using namespace wrep;

int main() {
    Pyramid p({2, 2}, 0, 2);
    KLTable kl(p.boxes());
    std::printf("standard modules of the 2x2 pyramid, entries in [0,3]\n\n");
    for (const Tableau& a : enumerate_col0(p, 0, 3)) {
        SymVector dec = decompose_standard(a, kl);
        std::printf("V(%s %s | %s %s)  dim %lld  =",
                    a.column(1)[0].to_string().c_str(), a.column(1)[1].to_string().c_str(),
                    a.column(2)[0].to_string().c_str(), a.column(2)[1].to_string().c_str(),
                    standard_character(a).dimension());
        bool first = true;
        for (const auto& [b, c] : dec) {
            std::printf("%s %lld*L(", first ? "" : " +", c);
            for (std::size_t t = 0; t < b.size(); ++t) std::printf("%s%lld", t ? " " : "", b[t]);
            std::printf(")");
            first = false;
        }
        std::printf("%s\n", is_separated(a) ? "   [irreducible]" : "");
    }
    return 0;
}
