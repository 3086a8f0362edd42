// typicality.hpp -- the typical/atypical split of Thue-Morse segments, the
// finite semigroup of atypical words, and segment-preservation checks

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tmpat/morphism.hpp"
#include "tmpat/thue_morse.hpp"
#include "tmpat/word.hpp"

namespace tmpat {

/// A segment w is atypical when some binary endomorphism outside
/// { mu^n, xi o mu^n } maps it onto another segment; all other segments are
/// typical. The atypical words form a finite set: the variant closure of
/// the factors of aabab, abaaba, and aabbaab.
const std::vector<Word>& atypical_words();

/// The three maximal atypical words, each the lexicographic minimum of its
/// variant class.
const std::vector<Word>& maximal_atypical_words();

bool is_atypical(std::string_view w) noexcept;

/// True iff w contains aab, abb, baa, bba and at least one of aba, bab as
/// factors. Any segment satisfying this is typical.
bool satisfies_length3_criterion(const Word& w);
bool satisfies_length3_criterion(std::string_view w) noexcept;

enum class Typicality { typical, atypical, not_a_segment };

const char* to_string(Typicality verdict) noexcept;

struct TypicalityVerdict {
    Word word;
    Typicality verdict;

    // For segments: which of the six length-3 segments occur in word, and
    // whether the full criterion held (a certificate of typicality).
    std::vector<Word> length3_found;
    bool criterion_met = false;

    // For atypical words: a membership certificate locating the word
    // inside a variant of one of the maximal atypical words.
    std::optional<Word> atypical_container;
    std::string container_variant; ///< identity / reverse / exchange / reverse+exchange
    std::optional<std::size_t> container_position;
};

/// not_a_segment if w is no segment; atypical iff w is in the closed-form
/// atypical set; typical otherwise. Raises std::logic_error if the
/// length-3 criterion and the atypical list ever disagree.
TypicalityVerdict classify(const Word& w);

/// First enumerated endomorphism with images of length <= max_image_len
/// that lies outside { mu^n, xi o mu^n } and maps w onto a segment; absent
/// if none within the bound (which proves nothing beyond the bound).
/// Requires w to be a segment.
std::optional<Morphism> brute_force_atypical_check(const Word& w, int max_image_len);

/// Core of the bounded witness search, shared with the sweep kernels:
/// index pair into `images` (length-then-lex ordered) of the first
/// non-monoid pair mapping w onto a segment. `checker` must cover
/// |w| * longest image.
std::optional<std::pair<std::size_t, std::size_t>> first_atypicality_witness(
    std::string_view w, const std::vector<std::string>& images,
    const SegmentChecker& checker);

/// The atypical words with an adjoined absorbing zero. The product of two
/// words is their concatenation when that is again atypical and zero
/// otherwise; the order is the factor order (u above v iff u is a factor
/// of v), with zero at the bottom.
class AtypicalSemigroup {
public:
    static constexpr std::size_t kZero = 0;

    /// Element count including the zero element.
    std::size_t size() const noexcept { return words_.size() + 1; }
    std::size_t word_count() const noexcept { return words_.size(); }

    /// Word of a nonzero element; elements 1..size()-1 are words in
    /// length-then-lex order.
    const Word& word(std::size_t element) const;

    std::optional<std::size_t> element_of(std::string_view text) const noexcept;

    std::size_t product(std::size_t x, std::size_t y) const;

    /// Factor order: x above y iff x's word is a factor of y's word;
    /// every element is above zero; the order is reflexive.
    bool above(std::size_t x, std::size_t y) const;

private:
    friend const AtypicalSemigroup& build_s0();
    AtypicalSemigroup() = default;

    std::vector<Word> words_;
    std::vector<std::size_t> product_; // size() * size()
    std::vector<bool> above_;          // size() * size()
};

/// The semigroup built from atypical_words(); computed once and cached.
const AtypicalSemigroup& build_s0();

/// Cover edges of the factor order, directed factor -> extension, with the
/// zero element as the bottom (atoms point to zero).
std::vector<std::pair<std::size_t, std::size_t>> jorder_cover_edges(
    const AtypicalSemigroup& s);

/// DOT rendering of the order diagram: one node per word plus a node "0",
/// style=bold on lexicographic minima among variants, peripheries=2 on the
/// bold atoms, edges from jorder_cover_edges.
std::string export_jorder_dot(const AtypicalSemigroup& s);

/// First segment (length-then-lex, up to max_len) that phi maps outside
/// the segment language; absent when phi preserves all of them. An absent
/// result for every length bounds nothing: it is evidence, not proof,
/// except where exhaustive sweeps pin it down.
std::optional<Word> segment_preservation_check(const Morphism& phi, std::size_t max_len);

} // namespace tmpat
