// word.hpp -- alphabets, finite words, and the basic word primitives

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tmpat {

/// Thrown when an operation receives a word or morphism over the wrong
/// alphabet (e.g. letter exchange on a non-binary word).
struct AlphabetMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An ordered alphabet of distinct lowercase ASCII letters.
///
/// The declaration order is fixed at construction and is the order used
/// for lexicographic comparisons everywhere in the library, so that all
/// enumerations are deterministic.
class Alphabet {
public:
    /// Builds an alphabet from its letters, e.g. "ab" or "xyz".
    /// Throws `std::invalid_argument` unless the string consists of 1 to 26
    /// distinct lowercase ASCII letters.
    explicit Alphabet(std::string_view letters);

    /// The two-letter alphabet {a, b} used for the Thue-Morse side.
    static const Alphabet& binary();

    std::size_t size() const noexcept { return letters_.size(); }
    char letter(std::size_t i) const { return letters_.at(i); }
    bool contains(char c) const noexcept;

    /// Index of `c` in declaration order; throws if absent.
    std::size_t index(char c) const;

    const std::string& letters() const noexcept { return letters_; }

    bool operator==(const Alphabet&) const noexcept = default;

private:
    std::string letters_;
};

/// A nonempty immutable word over an Alphabet.
///
/// Words are plain values: equality is letterwise (plus alphabet equality)
/// and all operations below return fresh words. The empty word is rejected
/// at construction; the library works in free semigroups, not monoids.
class Word {
public:
    Word(Alphabet alphabet, std::string text);

    /// Parses a word from its ASCII spelling, e.g. Word::parse(ab, "abbab").
    static Word parse(const Alphabet& alphabet, std::string_view text);

    /// Shorthand for a word over Alphabet::binary().
    static Word binary(std::string_view text);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    const std::string& text() const noexcept { return text_; }
    std::string_view view() const noexcept { return text_; }
    std::size_t size() const noexcept { return text_.size(); }
    char operator[](std::size_t i) const noexcept { return text_[i]; }

    bool operator==(const Word&) const noexcept = default;

private:
    Alphabet alphabet_;
    std::string text_;
};

/// Length-then-lexicographic order (lexicographic in the order the word's
/// alphabet declares its letters, which for lowercase letters coincides
/// with ASCII order). This is the enumeration order used project-wide.
bool length_lex_less(const Word& a, const Word& b) noexcept;
bool length_lex_less(std::string_view a, std::string_view b) noexcept;

/// Last letter of a word.
char last_letter(const Word& w) noexcept;

/// Letter exchange a <-> b. Requires a binary word.
Word exchange(const Word& w);

/// Letter exchange on a raw binary text (characters 'a'/'b').
std::string exchanged_text(std::string_view binary_text);

/// The word read backwards.
Word reverse(const Word& w);

/// The set {w, reverse(w), exchange(w), exchange(reverse(w))}, deduplicated
/// and sorted. Requires a binary word; the result has between 1 and 4
/// elements (palindromes and exchange-symmetric words collapse cases).
std::vector<Word> variants(const Word& w);

/// Smallest start index of `u` inside `w`, if any. Both words must be over
/// the same alphabet.
std::optional<std::size_t> contains_factor(const Word& w, const Word& u);

/// Raw-text factor search; `npos`-free interface used by the sweep kernels.
std::optional<std::size_t> find_factor(std::string_view haystack,
                                       std::string_view needle) noexcept;

/// True iff some nonempty u has u*u*u as a factor of w.
bool has_cube(const Word& w) noexcept;
bool has_cube(std::string_view w) noexcept;

/// True iff w has a factor of the form c v c v c with c a letter and v
/// possibly empty. Under this convention a cube of a single letter is an
/// overlap, so has_cube implies has_overlap.
bool has_overlap(const Word& w) noexcept;
bool has_overlap(std::string_view w) noexcept;

} // namespace tmpat
