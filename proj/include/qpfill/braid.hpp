#pragma once

// Braid words in Artin generators, exact equality via the faithful Artin
// action on the free group, and quasipositive factorizations with Hurwitz
// moves, global conjugation and partial twists.
//
// Word order convention (fixed project-wide): in a word w = g_1 g_2 ... g_r
// the LEFTMOST letter acts first. Consequently the Artin action satisfies
// action(concat(u, v)) = action(v) o action(u).

#include "qpfill/abelian.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace qpfill::braid {

// A word in the Artin generators of B_strands. Letter i > 0 is sigma_i,
// letter -i is sigma_i^{-1}; 1 <= |i| <= strands - 1.
struct BraidWord {
    int strands = 2;
    std::vector<int> letters;

    BraidWord(int strands_, std::vector<int> letters_ = {});

    bool operator==(const BraidWord&) const = default;  // literal, not semantic
};

// A word in the free group F_m: symbol k > 0 is x_k, -k is x_k^{-1}.
// Always kept freely reduced.
using FreeWord = std::vector<int>;

struct FreeAutomorphism {
    int strands = 2;
    std::vector<FreeWord> images;  // images of x_1, ..., x_strands

    bool is_identity() const;
    bool operator==(const FreeAutomorphism&) const = default;
};

// Default cap on any intermediate reduced image length; overridable per call
// and via the QPFILL_ARTIN_CAP environment variable in the CLI.
inline constexpr std::size_t kDefaultArtinCap = 1'000'000;

// Image of (x_1, ..., x_m) under the word's action, leftmost letter first.
// sigma_i: x_i -> x_i x_{i+1} x_i^{-1}, x_{i+1} -> x_i, others fixed.
// Throws ResourceError if an image exceeds `length_cap` symbols.
FreeAutomorphism artin_action(const BraidWord& w,
                              std::size_t length_cap = kDefaultArtinCap);

// Complete and sound: the Artin action is faithful.
bool braids_equal(const BraidWord& u, const BraidWord& v);

BraidWord concat(const BraidWord& u, const BraidWord& v);
BraidWord inverse(const BraidWord& u);
// gamma^{-1} u gamma
BraidWord conjugate(const BraidWord& u, const BraidWord& gamma);
BraidWord power(const BraidWord& u, long k);

struct Factorization {
    int strands = 2;
    std::vector<BraidWord> entries;

    Factorization(int strands_, std::vector<BraidWord> entries_ = {});

    bool operator==(const Factorization&) const = default;
};

// (..., a, b, ...) -> (..., a b a^{-1}, a, ...); j is the 1-based index of
// the left entry of the pair, 1 <= j < entries.size().
Factorization hurwitz_move(const Factorization& f, std::size_t j);
// (..., a, b, ...) -> (..., b, b^{-1} a b, ...)
Factorization hurwitz_move_inverse(const Factorization& f, std::size_t j);

Factorization global_conjugate(const Factorization& f, const BraidWord& gamma);

// Conjugates entries first..last (1-based, inclusive) by gamma. first = last + 1
// denotes an empty range.
Factorization partial_twist(const Factorization& f, std::size_t first,
                            std::size_t last, const BraidWord& gamma);

// Left-to-right concatenation of the entries.
BraidWord product(const Factorization& f);

// Canonical key identifying a factorization up to entrywise braid equality:
// the serialized tuple of the entries' Artin images.
std::string canonical_key(const Factorization& f);

// BFS closure of f under Hurwitz moves and their inverses up to `depth`,
// deduplicated by canonical key. Throws ResourceError past `node_cap` states.
std::set<std::string> hurwitz_orbit(const Factorization& f, std::size_t depth,
                                    std::size_t node_cap = 100'000);

// The fixed quadruple in B_4 driving the W/M families:
// b1 = s3^-2 s1^-1 s2 s1 s3^2, b2 = s2, b3 = s3^2 s1 s2 s1^-1 s3^-2, twist = s3.
struct BetaGenerators {
    BraidWord b1, b2, b3, twist;
};
BetaGenerators beta_generators();

// (twist^-k b1 twist^k, twist^-k b2 twist^k, twist^-k b3 twist^k, b2 x l)
// in B_4. Values outside k >= 0, l >= 1 are accepted with a warning on
// stderr; negative l contributes |l| copies of b2^{-1}.
Factorization beta_kl(long k, long l);

// True iff w freely reduces to the literal shape gamma^{-1} sigma_i gamma.
// Sound but incomplete for genuine conjugacy to a generator.
bool is_syntactically_quasipositive(const BraidWord& w);

struct QuasipositiveShape {
    int generator = 0;     // the i of sigma_i
    BraidWord conjugator;  // gamma, so that w ~ gamma^{-1} sigma_i gamma
};
std::optional<QuasipositiveShape> quasipositive_shape(const BraidWord& w);

// Text format: whitespace-separated signed nonzero integers; factorization
// entries separated by ";". Round-trips bit-exactly through parse/print.
std::string to_text(const BraidWord& w);
std::string to_text(const Factorization& f);
BraidWord parse_braid(const std::string& text, int strands);
Factorization parse_factorization(const std::string& text, int strands);

}  // namespace qpfill::braid
