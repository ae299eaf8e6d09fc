#pragma once

// Line-oriented scenario files describing a fiber, vanishing cycles and an
// optional monodromy word. Grammar ("#" starts a comment):
//
//   fiber A <m> <n>
//   cycle vector <m integers>
//   cycle word <integers...> base <j>
//   monodromy word <integers...>
//
// "cycle word w base j" denotes the class rho(w) applied to e_j, with w a
// braid word on m+1 strands. Exactly one of {cycle list, monodromy word}
// may be present. Unknown keys are errors.

#include "qpfill/fibration.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qpfill::scenario {

class ScenarioError : public std::runtime_error {
public:
    ScenarioError(int line, const std::string& message);
    int line() const { return line_; }

private:
    int line_;
};

struct CycleSpec {
    bool is_vector = true;
    std::vector<Int> vec;   // when is_vector
    std::vector<int> word;  // when !is_vector
    int base = 0;

    bool operator==(const CycleSpec&) const = default;
};

struct Scenario {
    int m = 0;
    int n = 0;
    std::vector<CycleSpec> cycles;
    std::optional<std::vector<int>> monodromy_word;

    bool operator==(const Scenario&) const = default;
};

Scenario parse_scenario(const std::string& text);
std::string print_scenario(const Scenario& s);

milnor::MilnorLattice lattice_of(const Scenario& s);
std::vector<milnor::HomologyClass> resolve_cycles(const Scenario& s);
IntMatrix resolve_monodromy(const Scenario& s);

}  // namespace qpfill::scenario
