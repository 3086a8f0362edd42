// morphism.hpp -- homomorphisms between free semigroups

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tmpat/word.hpp"

namespace tmpat {

/// A nonerasing homomorphism between free semigroups: every source letter
/// carries a nonempty image word over the target alphabet. Erasing maps are
/// unrepresentable by construction.
class Morphism {
public:
    /// `images[i]` is the image of the i-th source letter.
    Morphism(Alphabet source, Alphabet target, std::vector<std::string> images);

    /// Parses the text format `a->ab,b->ba`. Every source letter must get
    /// exactly one nonempty image over the target alphabet.
    static Morphism parse(std::string_view literal, const Alphabet& source,
                          const Alphabet& target);

    /// The identity endomorphism of an alphabet.
    static Morphism identity(const Alphabet& alphabet);

    const Alphabet& source() const noexcept { return source_; }
    const Alphabet& target() const noexcept { return target_; }

    const std::string& image(char source_letter) const;
    const std::string& image_at(std::size_t index) const { return images_[index]; }

    /// Image of a raw source text, without Word wrapping.
    std::string apply_text(std::string_view source_text) const;

    /// Renders the `a->ab,b->ba` format, letters in declaration order.
    std::string format() const;

    bool operator==(const Morphism&) const noexcept = default;

private:
    Alphabet source_;
    Alphabet target_;
    std::vector<std::string> images_;
};

/// phi(w); throws AlphabetMismatchError unless w is over phi's source.
Word apply(const Morphism& phi, const Word& w);

/// phi after psi; psi's target must equal phi's source.
Morphism compose(const Morphism& phi, const Morphism& psi);

/// The Thue-Morse substitution a->ab, b->ba.
const Morphism& mu();

/// The letter exchange a->b, b->a.
const Morphism& xi();

inline constexpr int kDefaultMaxMuExponent = 30;

/// The n-th iterate of mu as an explicit endomorphism (images of length
/// 2^n). n = 0 yields the identity. `max_exponent` caps memory.
Morphism mu_power(int n, int max_exponent = kDefaultMaxMuExponent);

/// Decomposition of an endomorphism over the monoid generated by the letter
/// exchange and the Thue-Morse substitution. Since the exchange is an
/// involution and commutes with the substitution, that monoid is exactly
/// { mu^n, xi o mu^n : n >= 0 }.
struct MuXiForm {
    int exponent = 0;
    bool uses_exchange = false;
    bool operator==(const MuXiForm&) const noexcept = default;
};

/// Returns the decomposition if phi is mu^n or xi o mu^n, absent otherwise.
/// phi must be a binary endomorphism.
std::optional<MuXiForm> in_mu_xi_monoid(const Morphism& phi);

/// Text-level core of in_mu_xi_monoid, allocation-free for hot loops.
/// Decides against the letter-parity form of the iterate images rather
/// than materialized words, so it is also an independent route.
std::optional<MuXiForm> images_in_mu_xi_monoid(std::string_view a_image,
                                               std::string_view b_image) noexcept;

/// All nonempty binary words of length <= max_len, in length-then-lex
/// order. This fixed order underlies every morphism enumeration.
std::vector<std::string> binary_words_upto(int max_len);

/// Number of morphisms enumerate_morphisms yields:
/// (2^(max_len+1) - 2) ^ |source|.
std::uint64_t morphism_count(const Alphabet& source, int max_image_len);

/// Streams every morphism from `source` to {a,b} whose images all have
/// length <= max_image_len, ordered lexicographically over image tuples
/// (source letters in declaration order, image words in length-then-lex
/// order). Witness searches rely on this order being stable.
class MorphismEnumerator {
public:
    MorphismEnumerator(Alphabet source, int max_image_len);

    /// Next morphism, or absent when exhausted.
    std::optional<Morphism> next();

    /// Images of the next morphism without building a Morphism (sweep fast
    /// path); returns false when exhausted. Views stay valid until the
    /// enumerator is destroyed.
    bool next_images(std::vector<std::string_view>& images);

    std::uint64_t total() const noexcept { return total_; }

private:
    bool advance();

    Alphabet source_;
    std::vector<std::string> image_words_;
    std::vector<std::size_t> odometer_;
    std::uint64_t total_ = 0;
    bool fresh_ = true;
    bool done_ = false;
};

} // namespace tmpat
