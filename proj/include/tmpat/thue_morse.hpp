// thue_morse.hpp -- the Thue-Morse word: prefixes, segments, squares,
// synchronization, recurrence windows

#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "tmpat/morphism.hpp"
#include "tmpat/word.hpp"

namespace tmpat {

/// A cached prefix of the Thue-Morse word t (fixed point of a->ab, b->ba,
/// starting from a). The backing text is shared and immutable, so views
/// stay valid while any TmPrefix referencing them lives.
class TmPrefix {
public:
    std::size_t length() const noexcept { return length_; }

    /// Number of substitution iterations backing this prefix; the letters
    /// are a prefix of the generation-th iterate applied to a, and
    /// 2^generation >= length().
    int generation() const noexcept { return generation_; }

    std::string_view view() const noexcept {
        return std::string_view(text_->data(), length_);
    }

    Word word() const { return Word::binary(view()); }

private:
    friend TmPrefix tm_prefix(std::size_t);
    TmPrefix(std::shared_ptr<const std::string> text, std::size_t length, int generation)
        : text_(std::move(text)), length_(length), generation_(generation) {}

    std::shared_ptr<const std::string> text_;
    std::size_t length_;
    int generation_;
};

/// Ceiling on tm_prefix length; the environment variable TMPAT_MAX_PREFIX
/// overrides the default of 2^25.
std::size_t prefix_ceiling();

/// The first n letters of t. Thread-safe; the cache only ever grows, one
/// doubling step at a time, and racing extensions are serialized.
TmPrefix tm_prefix(std::size_t n);

/// The least n such that every segment of t of length k is a factor of the
/// length-2^n prefix: n = 1 for k = 1, n = 3 for k = 2, and
/// n = 2 + ceil(log2(k-1)) otherwise.
int min_generation(std::size_t k);

/// True iff w occurs somewhere in t. Decided exactly by searching the
/// length-2^min_generation(|w|) prefix.
bool is_segment(const Word& w);
bool is_segment(std::string_view w);

/// Reusable segment test for hot loops: pins a long-enough prefix once so
/// repeated queries touch no locks. Valid for words up to max_word_len.
class SegmentChecker {
public:
    explicit SegmentChecker(std::size_t max_word_len);

    bool is_segment(std::string_view w) const noexcept;

    /// Smallest occurrence position within the pinned prefix.
    std::optional<std::size_t> first_occurrence(std::string_view w) const noexcept;

    std::size_t max_word_len() const noexcept { return max_word_len_; }

private:
    TmPrefix prefix_;
    std::size_t max_word_len_;
};

/// A word of length 2^(n-3)+2 that is a segment of t but not a factor of
/// the length-2^(n-1) prefix, witnessing that min_generation is tight.
/// Requires n >= 3.
Word minimality_witness(int n);

/// All distinct segments of t of length k, sorted lexicographically.
std::vector<Word> segments_of_length(std::size_t k);

/// Same enumeration as raw texts (sweep fast path).
std::vector<std::string> segment_texts_of_length(std::size_t k);

/// A segment u is special when both ua and ub are segments.
bool is_special(const Word& u);
bool is_special(std::string_view u);

/// If u*u is a segment of t, u must be mu^n(x) for x among a, b, aba, bab;
/// this returns that decomposition, or absent when u*u is not a segment.
/// A square segment with no matching shape would contradict the square
/// classification and raises std::logic_error.
struct SquareRootClass {
    Word base;
    int exponent;
    bool operator==(const SquareRootClass&) const noexcept = default;
};
std::optional<SquareRootClass> classify_square_root(const Word& u);

/// The unique v with mu(v) = w, if w splits into blocks from {ab, ba}.
std::optional<Word> mu_preimage(const Word& w);

/// All start positions of the (n+1)-th iterate image of letter x inside
/// tm_prefix(prefix_len). Every such position is a multiple of 2^n; a
/// violation would break the synchronization property and raises
/// std::logic_error. Requires 2^(n+1) <= prefix_len.
std::vector<std::size_t> aligned_occurrences(int n, char x, std::size_t prefix_len);

/// The minimal window L such that every segment of t of length L contains
/// every segment of length k: L = 9 * 2^r + k - 1 where r is determined by
/// 2^r + 2 <= k <= 2^(r+1) + 1. Requires k >= 3.
std::size_t recurrence_window(std::size_t k);

} // namespace tmpat
