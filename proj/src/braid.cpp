#include "qpfill/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <iostream>
#include <sstream>

namespace qpfill::braid {

namespace {

void check_strands(int strands)
{
    if (strands < 2) throw std::invalid_argument("braid: strand count must be >= 2");
}

void check_same_strands(int a, int b)
{
    if (a != b) throw std::invalid_argument("braid: strand count mismatch");
}

void push_reduced(FreeWord& w, int sym)
{
    if (!w.empty() && w.back() == -sym)
        w.pop_back();
    else
        w.push_back(sym);
}

// Appends the image of the single free-group symbol `sym` under the braid
// letter `letter`, freely reducing as it goes.
void append_symbol_image(FreeWord& out, int sym, int letter)
{
    const int i = letter > 0 ? letter : -letter;
    const int g = sym > 0 ? sym : -sym;
    int buf[3];
    int len;
    if (letter > 0) {
        if (g == i) {
            buf[0] = i; buf[1] = i + 1; buf[2] = -i; len = 3;
        } else if (g == i + 1) {
            buf[0] = i; len = 1;
        } else {
            buf[0] = g; len = 1;
        }
    } else {
        if (g == i) {
            buf[0] = i + 1; len = 1;
        } else if (g == i + 1) {
            buf[0] = -(i + 1); buf[1] = i; buf[2] = i + 1; len = 3;
        } else {
            buf[0] = g; len = 1;
        }
    }
    if (sym > 0)
        for (int t = 0; t < len; ++t) push_reduced(out, buf[t]);
    else
        for (int t = len - 1; t >= 0; --t) push_reduced(out, -buf[t]);
}

FreeWord apply_letter(const FreeWord& w, int letter)
{
    FreeWord out;
    out.reserve(w.size() + 2);
    for (int sym : w) append_symbol_image(out, sym, letter);
    return out;
}

}  // namespace

BraidWord::BraidWord(int strands_, std::vector<int> letters_)
    : strands(strands_), letters(std::move(letters_))
{
    check_strands(strands);
    for (int l : letters) {
        const int a = l > 0 ? l : -l;
        if (a < 1 || a > strands - 1)
            throw std::invalid_argument("braid: letter index out of range for strand count");
    }
}

bool FreeAutomorphism::is_identity() const
{
    for (int k = 1; k <= strands; ++k)
        if (images[k - 1] != FreeWord{k}) return false;
    return true;
}

FreeAutomorphism artin_action(const BraidWord& w, std::size_t length_cap)
{
    FreeAutomorphism a;
    a.strands = w.strands;
    a.images.reserve(w.strands);
    for (int k = 1; k <= w.strands; ++k) a.images.push_back({k});
    for (int letter : w.letters)
        for (FreeWord& img : a.images) {
            img = apply_letter(img, letter);
            if (img.size() > length_cap)
                throw ResourceError("artin_action: reduced image length cap exceeded");
        }
    return a;
}

bool braids_equal(const BraidWord& u, const BraidWord& v)
{
    check_same_strands(u.strands, v.strands);
    return artin_action(u).images == artin_action(v).images;
}

BraidWord concat(const BraidWord& u, const BraidWord& v)
{
    check_same_strands(u.strands, v.strands);
    BraidWord out = u;
    out.letters.insert(out.letters.end(), v.letters.begin(), v.letters.end());
    return out;
}

BraidWord inverse(const BraidWord& u)
{
    BraidWord out(u.strands);
    out.letters.reserve(u.letters.size());
    for (auto it = u.letters.rbegin(); it != u.letters.rend(); ++it)
        out.letters.push_back(-*it);
    return out;
}

BraidWord conjugate(const BraidWord& u, const BraidWord& gamma)
{
    return concat(concat(inverse(gamma), u), gamma);
}

BraidWord power(const BraidWord& u, long k)
{
    const BraidWord base = k >= 0 ? u : inverse(u);
    const long reps = k >= 0 ? k : -k;
    BraidWord out(u.strands);
    for (long i = 0; i < reps; ++i) out = concat(out, base);
    return out;
}

Factorization::Factorization(int strands_, std::vector<BraidWord> entries_)
    : strands(strands_), entries(std::move(entries_))
{
    check_strands(strands);
    for (const BraidWord& e : entries) check_same_strands(strands, e.strands);
}

Factorization hurwitz_move(const Factorization& f, std::size_t j)
{
    if (j < 1 || j >= f.entries.size())
        throw std::invalid_argument("hurwitz_move: index out of range");
    Factorization out = f;
    const BraidWord a = f.entries[j - 1];
    const BraidWord b = f.entries[j];
    out.entries[j - 1] = concat(concat(a, b), inverse(a));
    out.entries[j] = a;
    return out;
}

Factorization hurwitz_move_inverse(const Factorization& f, std::size_t j)
{
    if (j < 1 || j >= f.entries.size())
        throw std::invalid_argument("hurwitz_move_inverse: index out of range");
    Factorization out = f;
    const BraidWord a = f.entries[j - 1];
    const BraidWord b = f.entries[j];
    out.entries[j - 1] = b;
    out.entries[j] = conjugate(a, b);
    return out;
}

Factorization global_conjugate(const Factorization& f, const BraidWord& gamma)
{
    check_same_strands(f.strands, gamma.strands);
    Factorization out = f;
    for (BraidWord& e : out.entries) e = conjugate(e, gamma);
    return out;
}

Factorization partial_twist(const Factorization& f, std::size_t first,
                            std::size_t last, const BraidWord& gamma)
{
    check_same_strands(f.strands, gamma.strands);
    if (first == last + 1 && first >= 1 && first <= f.entries.size() + 1)
        return f;  // empty range
    if (first < 1 || last > f.entries.size() || first > last)
        throw std::invalid_argument("partial_twist: invalid range");
    Factorization out = f;
    for (std::size_t i = first; i <= last; ++i)
        out.entries[i - 1] = conjugate(out.entries[i - 1], gamma);
    return out;
}

BraidWord product(const Factorization& f)
{
    BraidWord out(f.strands);
    for (const BraidWord& e : f.entries) out = concat(out, e);
    return out;
}

std::string canonical_key(const Factorization& f)
{
    std::ostringstream os;
    os << f.strands << ':';
    for (const BraidWord& e : f.entries) {
        const FreeAutomorphism a = artin_action(e);
        for (const FreeWord& img : a.images) {
            for (int sym : img) os << sym << ',';
            os << '|';
        }
        os << ';';
    }
    return os.str();
}

std::set<std::string> hurwitz_orbit(const Factorization& f, std::size_t depth,
                                    std::size_t node_cap)
{
    std::set<std::string> seen;
    seen.insert(canonical_key(f));
    std::deque<Factorization> frontier{f};
    for (std::size_t d = 0; d < depth && !frontier.empty(); ++d) {
        std::deque<Factorization> next;
        for (const Factorization& g : frontier) {
            for (std::size_t j = 1; j < g.entries.size(); ++j) {
                for (const Factorization& h :
                     {hurwitz_move(g, j), hurwitz_move_inverse(g, j)}) {
                    if (seen.insert(canonical_key(h)).second) {
                        if (seen.size() > node_cap)
                            throw ResourceError("hurwitz_orbit: node cap exceeded");
                        next.push_back(h);
                    }
                }
            }
        }
        frontier = std::move(next);
    }
    return seen;
}

BetaGenerators beta_generators()
{
    return {BraidWord(4, {-3, -3, -1, 2, 1, 3, 3}),
            BraidWord(4, {2}),
            BraidWord(4, {3, 3, 1, 2, -1, -3, -3}),
            BraidWord(4, {3})};
}

Factorization beta_kl(long k, long l)
{
    if (k < 0 || l < 1)
        std::cerr << "warning: beta_kl called with (k, l) = (" << k << ", " << l
                  << ") outside the usual range k >= 0, l >= 1\n";
    const BetaGenerators g = beta_generators();
    const BraidWord twist_k = power(g.twist, k);
    std::vector<BraidWord> entries{conjugate(g.b1, twist_k),
                                   conjugate(g.b2, twist_k),
                                   conjugate(g.b3, twist_k)};
    const BraidWord last = l >= 0 ? g.b2 : inverse(g.b2);
    const long reps = l >= 0 ? l : -l;
    for (long i = 0; i < reps; ++i) entries.push_back(last);
    return Factorization(4, std::move(entries));
}

std::optional<QuasipositiveShape> quasipositive_shape(const BraidWord& w)
{
    FreeWord r;
    for (int l : w.letters) push_reduced(r, l);
    if (r.size() % 2 == 0) return std::nullopt;
    const std::size_t t = r.size() / 2;
    if (r[t] <= 0) return std::nullopt;
    for (std::size_t j = 1; j <= t; ++j)
        if (r[t - j] != -r[t + j]) return std::nullopt;
    return QuasipositiveShape{
        r[t], BraidWord(w.strands, std::vector<int>(r.begin() + t + 1, r.end()))};
}

bool is_syntactically_quasipositive(const BraidWord& w)
{
    return quasipositive_shape(w).has_value();
}

std::string to_text(const BraidWord& w)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        if (i) os << ' ';
        os << w.letters[i];
    }
    return os.str();
}

std::string to_text(const Factorization& f)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < f.entries.size(); ++i) {
        if (i) os << " ; ";
        os << to_text(f.entries[i]);
    }
    return os.str();
}

BraidWord parse_braid(const std::string& text, int strands)
{
    std::istringstream is(text);
    std::vector<int> letters;
    int v;
    while (is >> v) letters.push_back(v);
    if (!is.eof()) throw std::invalid_argument("parse_braid: malformed integer");
    return BraidWord(strands, std::move(letters));
}

Factorization parse_factorization(const std::string& text, int strands)
{
    Factorization out(strands);
    if (text.find_first_not_of(" \t\n") == std::string::npos) return out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t sep = text.find(';', start);
        const std::string piece =
            text.substr(start, sep == std::string::npos ? sep : sep - start);
        out.entries.push_back(parse_braid(piece, strands));
        if (sep == std::string::npos) break;
        start = sep + 1;
    }
    return out;
}

}  // namespace qpfill::braid
