// Builds the wheel on five vertices, computes its canonical form, and shows
// that a scrambled copy lands on the same code.

#include <iostream>
#include <numeric>
#include <random>
#include <vector>

#include "rotcanon/canon.hpp"
#include "rotcanon/embedding.hpp"

int main() {
    using namespace rotcanon;

    Graph wheel(5);  // hub 0, rim 1..4
    for (int v = 1; v <= 4; ++v) wheel.add_edge(0, v);
    for (int v = 1; v <= 4; ++v) wheel.add_edge(v, v % 4 + 1);

    CanonicalCode form = canonical_form_planar3(wheel);
    std::cout << "W4 canonical form: " << form.to_string() << "\n";

    std::vector<int> shuffle(5);
    std::iota(shuffle.begin(), shuffle.end(), 0);
    std::mt19937 rng(7);
    std::shuffle(shuffle.begin(), shuffle.end(), rng);
    CanonicalCode scrambled = canonical_form_planar3(apply_permutation(wheel, shuffle));
    std::cout << "relabeled copy:    " << scrambled.to_string() << "\n";
    std::cout << (form == scrambled ? "codes match" : "codes differ") << "\n";
    return form == scrambled ? 0 : 1;
}
