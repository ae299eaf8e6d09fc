// qpfill: homological invariants of fillings and open-book boundaries over
// A_m Milnor fibers, driven by braid words and quasipositive factorizations.
//
// Exit codes: 0 success / all checks pass, 1 computation mismatch, 2 usage
// or input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "qpfill/abelian.hpp"
#include "qpfill/braid.hpp"
#include "qpfill/families.hpp"
#include "qpfill/fibration.hpp"
#include "qpfill/milnor.hpp"
#include "qpfill/scenario.hpp"

namespace {

using namespace qpfill;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

std::size_t env_cap(const char* name, std::size_t fallback)
{
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    char* end = nullptr;
    const unsigned long long parsed = std::strtoull(v, &end, 10);
    if (end == v || *end != '\0')
        throw std::invalid_argument(std::string("malformed value in $") + name);
    return static_cast<std::size_t>(parsed);
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

json json_int(const Int& v)
{
    // Values in this tool are small, but SNF of user matrices may not be.
    if (v >= std::numeric_limits<long long>::min() &&
        v <= std::numeric_limits<long long>::max())
        return static_cast<long long>(v);
    return v.str();
}

json matrix_to_json(const IntMatrix& m)
{
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(json_int(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

json invariants_to_json(const AbelianInvariants& g)
{
    json torsion = json::array();
    for (const Int& d : g.torsion) torsion.push_back(json_int(d));
    return {{"free_rank", g.free_rank}, {"torsion", torsion}};
}

// Matrix file: optional "#" comments, then "rows cols" followed by the
// entries in row-major order.
IntMatrix parse_matrix_file(const std::string& text)
{
    std::istringstream input(text);
    std::string line, cleaned;
    while (std::getline(input, line)) {
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        cleaned += line + ' ';
    }
    std::istringstream is(cleaned);
    long long rows, cols;
    if (!(is >> rows >> cols) || rows < 0 || cols < 0)
        throw std::invalid_argument("matrix file must start with 'rows cols'");
    IntMatrix m(rows, cols);
    std::string tok;
    for (long long i = 0; i < rows * cols; ++i) {
        if (!(is >> tok)) throw std::invalid_argument("matrix file: not enough entries");
        m.at(i / cols, i % cols) = Int(tok);
    }
    if (is >> tok) throw std::invalid_argument("matrix file: trailing entries");
    return m;
}

int run_snf(const std::string& path)
{
    const IntMatrix m = parse_matrix_file(read_file(path));
    const SmithDecomposition snf = smith_normal_form(m);
    const json out = {{"d", matrix_to_json(snf.d)},
                      {"u", matrix_to_json(snf.u)},
                      {"v", matrix_to_json(snf.v)},
                      {"invariants", invariants_to_json(cokernel_invariants(m))}};
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int run_fill(const std::string& path)
{
    const scenario::Scenario s = scenario::parse_scenario(read_file(path));
    const fibration::LefschetzModel model{scenario::lattice_of(s),
                                          scenario::resolve_cycles(s)};
    std::cout << invariants_to_json(filling_homology(model)).dump(2) << "\n";
    return kExitOk;
}

int run_boundary(const std::string& path)
{
    const scenario::Scenario s = scenario::parse_scenario(read_file(path));
    const fibration::OpenBookModel model{scenario::lattice_of(s),
                                         scenario::resolve_monodromy(s)};
    std::cout << invariants_to_json(boundary_homology(model)).dump(2) << "\n";
    return kExitOk;
}

std::vector<int> parse_n_set(const std::string& spec)
{
    std::vector<int> out;
    std::istringstream is(spec);
    std::string piece;
    while (std::getline(is, piece, ',')) {
        if (piece.empty()) continue;
        out.push_back(std::stoi(piece));
    }
    if (out.empty()) throw std::invalid_argument("--n must list at least one value");
    return out;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Homology of fillings and open-book boundaries over A_m Milnor fibers"};
    app.require_subcommand(1);

    // snf
    std::string snf_path;
    CLI::App* snf = app.add_subcommand("snf", "Smith normal form of a matrix file");
    snf->add_option("file", snf_path, "matrix file")->required();

    // braid
    CLI::App* braid_cmd = app.add_subcommand("braid", "braid word operations");
    braid_cmd->require_subcommand(1);
    int b_strands = 2;
    std::string b_w1, b_w2;
    std::vector<std::string> b_words;
    CLI::App* braid_eq = braid_cmd->add_subcommand("eq", "test braid equality");
    braid_eq->add_option("-m,--strands", b_strands, "strand count")->required();
    braid_eq->add_option("u", b_w1, "first word")->required();
    braid_eq->add_option("v", b_w2, "second word")->required();
    CLI::App* braid_product = braid_cmd->add_subcommand("product", "concatenate words");
    braid_product->add_option("-m,--strands", b_strands)->required();
    braid_product->add_option("words", b_words, "words to concatenate");
    CLI::App* braid_act = braid_cmd->add_subcommand("act", "free-group images of a word");
    braid_act->add_option("-m,--strands", b_strands)->required();
    braid_act->add_option("w", b_w1, "word")->required();

    // factor
    CLI::App* factor = app.add_subcommand("factor", "factorization operations");
    factor->require_subcommand(1);
    int f_strands = 2;
    std::size_t f_index = 1, f_from = 1, f_to = 0, f_depth = 0;
    bool f_inverse = false;
    std::string f_text, f_gamma;
    CLI::App* factor_hurwitz = factor->add_subcommand("hurwitz", "apply a Hurwitz move");
    factor_hurwitz->add_option("-m,--strands", f_strands)->required();
    factor_hurwitz->add_option("-j,--index", f_index, "1-based pair index")->required();
    factor_hurwitz->add_flag("--inverse", f_inverse, "apply the inverse move");
    factor_hurwitz->add_option("f", f_text, "factorization")->required();
    CLI::App* factor_orbit = factor->add_subcommand("orbit", "Hurwitz orbit size");
    factor_orbit->add_option("-m,--strands", f_strands)->required();
    factor_orbit->add_option("-d,--depth", f_depth)->required();
    factor_orbit->add_option("f", f_text, "factorization")->required();
    CLI::App* factor_twist =
        factor->add_subcommand("partial-twist", "conjugate a contiguous block");
    factor_twist->add_option("-m,--strands", f_strands)->required();
    factor_twist->add_option("--from", f_from, "first entry (1-based)")->required();
    factor_twist->add_option("--to", f_to, "last entry (1-based)")->required();
    factor_twist->add_option("--gamma", f_gamma, "conjugating word")->required();
    factor_twist->add_option("f", f_text, "factorization")->required();

    // fib
    CLI::App* fib = app.add_subcommand("fib", "homology from a scenario file");
    fib->require_subcommand(1);
    std::string fib_path;
    CLI::App* fib_fill = fib->add_subcommand("fill", "filling homology");
    fib_fill->add_option("file", fib_path)->required();
    CLI::App* fib_boundary = fib->add_subcommand("boundary", "boundary homology");
    fib_boundary->add_option("file", fib_path)->required();

    // brieskorn
    CLI::App* brieskorn = app.add_subcommand("brieskorn", "Brieskorn sphere checks");
    brieskorn->require_subcommand(1);
    std::vector<long long> exponents;
    CLI::App* brieskorn_check =
        brieskorn->add_subcommand("check", "homotopy-sphere criterion");
    brieskorn_check->add_option("exponents", exponents)->required()->expected(-2);

    // paper
    CLI::App* paper = app.add_subcommand("paper", "reproduce the published computations");
    paper->require_subcommand(1);
    long p_kmax = 5, p_lmax = 5;
    std::string p_nset = "2,3";
    CLI::App* paper_reproduce =
        paper->add_subcommand("reproduce", "full verification report");
    paper_reproduce->add_option("--kmax", p_kmax, "largest k");
    paper_reproduce->add_option("--lmax", p_lmax, "largest l");
    paper_reproduce->add_option("--n", p_nset, "comma-separated dimension parameters");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        const std::size_t artin_cap =
            env_cap("QPFILL_ARTIN_CAP", braid::kDefaultArtinCap);
        const std::size_t orbit_cap = env_cap("QPFILL_ORBIT_CAP", 100'000);

        if (snf->parsed()) return run_snf(snf_path);

        if (braid_eq->parsed()) {
            const braid::BraidWord u = braid::parse_braid(b_w1, b_strands);
            const braid::BraidWord v = braid::parse_braid(b_w2, b_strands);
            const bool eq = artin_action(u, artin_cap).images ==
                            artin_action(v, artin_cap).images;
            std::cout << (eq ? "equal" : "not-equal") << "\n";
            return eq ? kExitOk : kExitMismatch;
        }
        if (braid_product->parsed()) {
            braid::BraidWord acc(b_strands);
            for (const std::string& w : b_words)
                acc = concat(acc, braid::parse_braid(w, b_strands));
            std::cout << braid::to_text(acc) << "\n";
            return kExitOk;
        }
        if (braid_act->parsed()) {
            const braid::FreeAutomorphism a =
                artin_action(braid::parse_braid(b_w1, b_strands), artin_cap);
            json images = json::array();
            for (const braid::FreeWord& img : a.images) images.push_back(img);
            std::cout << json{{"images", images}}.dump(2) << "\n";
            return kExitOk;
        }
        if (factor_hurwitz->parsed()) {
            const braid::Factorization f = braid::parse_factorization(f_text, f_strands);
            const braid::Factorization out =
                f_inverse ? hurwitz_move_inverse(f, f_index) : hurwitz_move(f, f_index);
            std::cout << braid::to_text(out) << "\n";
            return kExitOk;
        }
        if (factor_orbit->parsed()) {
            const braid::Factorization f = braid::parse_factorization(f_text, f_strands);
            const auto orbit = hurwitz_orbit(f, f_depth, orbit_cap);
            std::cout << json{{"size", orbit.size()}}.dump(2) << "\n";
            return kExitOk;
        }
        if (factor_twist->parsed()) {
            const braid::Factorization f = braid::parse_factorization(f_text, f_strands);
            const braid::BraidWord gamma = braid::parse_braid(f_gamma, f_strands);
            std::cout << braid::to_text(partial_twist(f, f_from, f_to, gamma)) << "\n";
            return kExitOk;
        }
        if (fib_fill->parsed()) return run_fill(fib_path);
        if (fib_boundary->parsed()) return run_boundary(fib_path);
        if (brieskorn_check->parsed()) {
            const auto verdict =
                is_homotopy_sphere(fibration::BrieskornExponents(exponents));
            std::cout << (verdict == fibration::SphereVerdict::yes ? "yes" : "unknown")
                      << "\n";
            return kExitOk;
        }
        if (paper_reproduce->parsed()) {
            const families::VerificationReport report =
                families::verify_families(p_kmax, p_lmax, parse_n_set(p_nset));
            std::cout << families::report_to_json(report);
            return report.all_pass() ? kExitOk : kExitMismatch;
        }
    } catch (const scenario::ScenarioError& e) {
        std::cerr << "error [E_PARSE] " << e.what() << "\n";
        return kExitUsage;
    } catch (const ResourceError& e) {
        std::cerr << "error [E_RESOURCE] " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error [E_UNSUPPORTED_FIBER] " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error [E_INVALID] " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error [E_INTERNAL] " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
