// Generates one oriented-tree gadget pair and prints its files plus the
// verdict of the rotation-respecting isomorphism test.

#include <iostream>

#include "rotcanon/gadgets.hpp"
#include "rotcanon/io.hpp"
#include "rotcanon/oriented.hpp"

int main() {
    using namespace rotcanon;

    GadgetPair pair = build_oriented_trees({4, 2, 3});
    std::cout << serialize_graph(pair.first) << "\n" << serialize_graph(pair.second) << "\n";

    auto iso = is_isomorphic_oriented(pair.first.oriented(), pair.second.oriented());
    std::cout << "label: " << (pair.label ? "isomorphic" : "non-isomorphic") << "\n";
    std::cout << "test:  " << (iso ? "isomorphic" : "non-isomorphic") << "\n";
    return iso.has_value() == pair.label ? 0 : 1;
}
