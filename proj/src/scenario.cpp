#include "qpfill/scenario.hpp"

#include <cstdlib>
#include <sstream>

namespace qpfill::scenario {

namespace {

std::string with_line(int line, const std::string& message)
{
    std::ostringstream os;
    os << "line " << line << ": " << message;
    return os.str();
}

}  // namespace

ScenarioError::ScenarioError(int line, const std::string& message)
    : std::runtime_error(with_line(line, message)), line_(line)
{
}

Scenario parse_scenario(const std::string& text)
{
    Scenario s;
    bool have_fiber = false;
    std::istringstream input(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(input, raw)) {
        ++lineno;
        const std::size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream line(raw);
        std::string key;
        if (!(line >> key)) continue;  // blank line

        if (key == "fiber") {
            if (have_fiber) throw ScenarioError(lineno, "duplicate fiber section");
            std::string family;
            if (!(line >> family >> s.m >> s.n) || family != "A")
                throw ScenarioError(lineno, "expected: fiber A <m> <n>");
            if (s.m < 1 || s.n < 2)
                throw ScenarioError(lineno, "fiber parameters out of range (need m >= 1, n >= 2)");
            have_fiber = true;
        } else if (key == "cycle") {
            if (!have_fiber) throw ScenarioError(lineno, "cycle before fiber");
            std::string kind;
            if (!(line >> kind)) throw ScenarioError(lineno, "expected: cycle vector|word ...");
            CycleSpec spec;
            if (kind == "vector") {
                spec.is_vector = true;
                std::string tok;
                while (line >> tok) {
                    try {
                        spec.vec.emplace_back(tok);
                    } catch (const std::runtime_error&) {
                        throw ScenarioError(lineno, "malformed integer: " + tok);
                    }
                }
                if (spec.vec.size() != static_cast<std::size_t>(s.m))
                    throw ScenarioError(lineno, "cycle vector length must equal m");
            } else if (kind == "word") {
                spec.is_vector = false;
                std::string tok;
                bool have_base = false;
                while (line >> tok) {
                    if (tok == "base") {
                        if (!(line >> spec.base) || (line >> tok))
                            throw ScenarioError(lineno, "expected a single index after 'base'");
                        have_base = true;
                        break;
                    }
                    try {
                        spec.word.push_back(std::stoi(tok));
                    } catch (const std::exception&) {
                        throw ScenarioError(lineno, "malformed integer: " + tok);
                    }
                }
                if (!have_base) throw ScenarioError(lineno, "cycle word is missing 'base <j>'");
                if (spec.base < 1 || spec.base > s.m)
                    throw ScenarioError(lineno, "base index out of range");
                for (int l : spec.word)
                    if (l == 0 || std::abs(l) > s.m)
                        throw ScenarioError(lineno, "braid letter out of range");
            } else {
                throw ScenarioError(lineno, "unknown cycle kind: " + kind);
            }
            s.cycles.push_back(std::move(spec));
        } else if (key == "monodromy") {
            if (!have_fiber) throw ScenarioError(lineno, "monodromy before fiber");
            if (s.monodromy_word) throw ScenarioError(lineno, "duplicate monodromy section");
            std::string kind;
            if (!(line >> kind) || kind != "word")
                throw ScenarioError(lineno, "expected: monodromy word <integers...>");
            std::vector<int> word;
            std::string tok;
            while (line >> tok) {
                try {
                    word.push_back(std::stoi(tok));
                } catch (const std::exception&) {
                    throw ScenarioError(lineno, "malformed integer: " + tok);
                }
            }
            for (int l : word)
                if (l == 0 || std::abs(l) > s.m)
                    throw ScenarioError(lineno, "braid letter out of range");
            s.monodromy_word = std::move(word);
        } else {
            throw ScenarioError(lineno, "unknown key: " + key);
        }
    }
    if (!have_fiber) throw ScenarioError(lineno, "missing fiber section");
    if (!s.cycles.empty() && s.monodromy_word)
        throw ScenarioError(lineno, "a scenario may carry cycles or a monodromy word, not both");
    return s;
}

std::string print_scenario(const Scenario& s)
{
    std::ostringstream os;
    os << "fiber A " << s.m << ' ' << s.n << '\n';
    for (const CycleSpec& c : s.cycles) {
        if (c.is_vector) {
            os << "cycle vector";
            for (const Int& v : c.vec) os << ' ' << v;
        } else {
            os << "cycle word";
            for (int l : c.word) os << ' ' << l;
            os << " base " << c.base;
        }
        os << '\n';
    }
    if (s.monodromy_word) {
        os << "monodromy word";
        for (int l : *s.monodromy_word) os << ' ' << l;
        os << '\n';
    }
    return os.str();
}

milnor::MilnorLattice lattice_of(const Scenario& s)
{
    return milnor::MilnorLattice(s.m, s.n);
}

std::vector<milnor::HomologyClass> resolve_cycles(const Scenario& s)
{
    const milnor::MilnorLattice lattice = lattice_of(s);
    std::vector<milnor::HomologyClass> out;
    out.reserve(s.cycles.size());
    for (const CycleSpec& c : s.cycles) {
        if (c.is_vector) {
            out.emplace_back(lattice, c.vec);
        } else {
            const braid::BraidWord w(s.m + 1, c.word);
            out.push_back(apply_matrix(rho_matrix(w, lattice),
                                       basis_class(lattice, c.base)));
        }
    }
    return out;
}

IntMatrix resolve_monodromy(const Scenario& s)
{
    const milnor::MilnorLattice lattice = lattice_of(s);
    if (s.monodromy_word) {
        const braid::BraidWord w(s.m + 1, *s.monodromy_word);
        return rho_matrix(w, lattice);
    }
    return monodromy_of_classes(lattice, resolve_cycles(s));
}

}  // namespace qpfill::scenario
