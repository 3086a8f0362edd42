// avoidance.hpp -- patterns in the Thue-Morse word: generator families for
// the avoided ideal, pattern-instance matching, the binary unavoidability
// decision, and bounded witness search

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tmpat/morphism.hpp"
#include "tmpat/thue_morse.hpp"
#include "tmpat/word.hpp"

namespace tmpat {

/// The generating set of the fully invariant ideal of words avoided by the
/// Thue-Morse word: four fixed generators plus two infinite families,
/// materialized up to a length cutoff. Family members for parameter k have
/// length 3*2^k + 2, and no generator is a segment.
struct GeneratorSet {
    std::vector<Word> fixed;    ///< aaa, ababa, aabaab, abbabb (those within the cutoff)
    std::vector<Word> family_k; ///< last(mu^k(a)) mu^k(aba) a, for k >= 1
    std::vector<Word> family_m; ///< last(mu^m(a)) mu^m(bab) a, for m >= 2
    std::size_t cutoff_len = 0;

    /// All materialized generators, sorted length-then-lex.
    std::vector<Word> all() const;
};

/// Generators of length <= max_len. Requires max_len >= 3.
GeneratorSet shur_generators(std::size_t max_len);

/// Searches for a nonerasing morphism phi from p's alphabet to {a,b} with
/// phi(p) a factor of w. Exhaustive backtracking over variable-length
/// letter images, scanning occurrence starts left to right and image
/// lengths shortest first, so the first match is deterministic. Letters of
/// p's alphabet that do not occur in p are mapped to "a".
std::optional<Morphism> contains_pattern_instance(const Word& w, const Word& p);

/// Decision-only instance search for binary patterns (sweep fast path).
bool has_binary_pattern_instance(std::string_view w, std::string_view p);

/// Ideal membership against a pre-materialized generator list (texts,
/// sorted by length); only generators with |g| <= |w| are tried.
bool is_avoided_via_ideal_text(std::string_view w,
                               const std::vector<std::string>& generators_by_length);

/// True iff w lies in the fully invariant ideal, i.e. some generator g has
/// a morphic image of g as a factor of w. Images of nonerasing morphisms
/// never shrink, so only generators with |g| <= |w| can contribute and the
/// infinite families may be cut off exactly at |w|.
bool is_avoided_via_ideal(const Word& w);

/// True iff w is aabaa, bbabb, or a segment of t. These are exactly the
/// binary words some endomorphism maps onto a segment.
bool is_unavoidable_binary(const Word& w);

/// A morphism mapping a pattern onto a concrete segment, together with
/// where the image occurs in a prefix of t.
struct Witness {
    Morphism morphism;
    Word image;
    std::size_t position;
};

/// First morphism in enumeration order (images of length <= max_image_len)
/// whose image of the pattern occurs in tm_prefix(prefix_len). Absence is
/// not a proof of avoidance: the search is bounded by max_image_len, and
/// prefix_len must be at least 2^min_generation(longest image) for the
/// occurrence test to coincide with the exact segment test.
std::optional<Witness> find_witness(const Word& pattern, int max_image_len,
                                    std::size_t prefix_len);

/// Compares the window of t starting at i against the window of the
/// letter-exchanged word starting at j: returns the least d < horizon where
/// they differ, or absent if they agree on the whole horizon.
std::optional<std::size_t> suffix_divergence(std::size_t i, std::size_t j,
                                             std::size_t horizon);

} // namespace tmpat
