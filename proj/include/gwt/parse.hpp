#pragma once

#include "gwt/correlator.hpp"
#include "gwt/tangency.hpp"

#include <string>
#include <vector>

namespace gwt {

// Bracket grammar: a "d=<int>" token plus insertion tokens "tau_a(C)" with
// C one of 1, H, H^0, H^1, H^2, optionally repeated as "tau_a(C)^k".
// Example: "d=2 tau_1(H)^2 tau_0(H^2)^3". Throws std::invalid_argument.
struct BracketRequest {
    int degree = -1;
    std::vector<Insertion> insertions;
};
BracketRequest parse_bracket(const std::vector<std::string>& tokens);

// Condition grammar: marked points separated by commas; conditions at one
// point joined by "&"; each condition "point", "m*point", "div(e)" or
// "m*div(e)". Example: "point,point,point, 2*div(1) & 1*div(1)".
std::vector<std::vector<TangencyCondition>> parse_conditions(const std::string& text);

} // namespace gwt
