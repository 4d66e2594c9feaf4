// Walk the crystal component of a ground-state tableau and print the graph
// in DOT format; pipe into graphviz to draw it.

#include <cstdio>

#include "wrep/crystal.hpp"
#include "wrep/io.hpp"

using namespace wrep;

int main() {
    Pyramid p({2, 1}, 0, 2);
    Tableau a0 = ground_state(p);
    CrystalGraph g = crystal_graph({to_weight(column_reading(a0))}, -3, 2, 200);
    std::printf("digraph crystal {\n");
    std::vector<std::string> ids;
    for (const auto& w : g.nodes) {
        json nj = tableau_to_json(Tableau(p, from_weight(w)));
        std::string id = "n" + content_hash(nj.dump());
        ids.push_back(id);
        std::string label = nj["rows"].dump();
        for (auto& ch : label)
            if (ch == '"') ch = '\'';
        std::printf("  %s [label=\"%s\"];\n", id.c_str(), label.c_str());
    }
    for (const auto& e : g.edges)
        std::printf("  %s -> %s [label=\"%lld\"];\n", ids[e[0]].c_str(), ids[e[1]].c_str(), (long long)e[2]);
    std::printf("}\n");
    return 0;
}
