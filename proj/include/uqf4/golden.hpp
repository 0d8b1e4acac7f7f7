// Reference commutation identities among root vectors, stored as expression chains.
#pragma once

#include <string>
#include <vector>

namespace uqf4 {

// Every expression in sides must evaluate to the same element.
struct GoldenIdentity {
    std::string family;
    int clause = 0;
    std::vector<std::string> sides;
    // Non-empty when the stated chain is known not to hold; this chain holds instead.
    std::vector<std::string> corrected{};
    std::string note{};
};

const std::vector<GoldenIdentity>& golden_identities();

// Roots whose alternative Lyndon bracketings must reproduce the root vector.
const std::vector<int>& lyndon_checked_roots();

}  // namespace uqf4
