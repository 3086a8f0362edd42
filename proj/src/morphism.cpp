#include "tmpat/morphism.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace tmpat {

Morphism::Morphism(Alphabet source, Alphabet target, std::vector<std::string> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (images_.size() != source_.size())
        throw std::invalid_argument("morphism needs exactly one image per source letter");
    for (const std::string& im : images_) {
        if (im.empty())
            throw std::invalid_argument("morphism images must be nonempty (nonerasing)");
        for (char c : im)
            if (!target_.contains(c))
                throw std::invalid_argument(std::string("image letter '") + c +
                                            "' not in target alphabet " + target_.letters());
    }
}

Morphism Morphism::parse(std::string_view literal, const Alphabet& source,
                         const Alphabet& target) {
    std::vector<std::string> images(source.size());
    std::vector<bool> assigned(source.size(), false);

    std::size_t pos = 0;
    while (pos < literal.size()) {
        std::size_t end = literal.find(',', pos);
        if (end == std::string_view::npos) end = literal.size();
        std::string_view pair = literal.substr(pos, end - pos);
        const std::size_t arrow = pair.find("->");
        if (arrow == std::string_view::npos || arrow != 1)
            throw std::invalid_argument("morphism literal must be letter->image pairs, e.g. a->ab,b->ba");
        const char letter = pair[0];
        if (!source.contains(letter))
            throw std::invalid_argument(std::string("unknown source letter '") + letter + "'");
        const std::size_t idx = source.index(letter);
        if (assigned[idx])
            throw std::invalid_argument(std::string("duplicate image for letter '") + letter + "'");
        std::string_view image = pair.substr(arrow + 2);
        if (image.empty())
            throw std::invalid_argument(std::string("empty image for letter '") + letter + "'");
        images[idx] = std::string(image);
        assigned[idx] = true;
        pos = end + 1;
    }
    for (std::size_t i = 0; i < source.size(); ++i)
        if (!assigned[i])
            throw std::invalid_argument(std::string("missing image for letter '") +
                                        source.letter(i) + "'");
    return Morphism(source, target, std::move(images));
}

Morphism Morphism::identity(const Alphabet& alphabet) {
    std::vector<std::string> images;
    images.reserve(alphabet.size());
    for (char c : alphabet.letters()) images.emplace_back(1, c);
    return Morphism(alphabet, alphabet, std::move(images));
}

const std::string& Morphism::image(char source_letter) const {
    return images_[source_.index(source_letter)];
}

std::string Morphism::apply_text(std::string_view source_text) const {
    std::size_t total = 0;
    for (char c : source_text) total += images_[source_.index(c)].size();
    std::string out;
    out.reserve(total);
    for (char c : source_text) out += images_[source_.index(c)];
    return out;
}

std::string Morphism::format() const {
    std::string out;
    for (std::size_t i = 0; i < source_.size(); ++i) {
        if (i) out += ',';
        out += source_.letter(i);
        out += "->";
        out += images_[i];
    }
    return out;
}

Word apply(const Morphism& phi, const Word& w) {
    if (w.alphabet() != phi.source())
        throw AlphabetMismatchError("apply: word alphabet differs from morphism source");
    return Word(phi.target(), phi.apply_text(w.view()));
}

Morphism compose(const Morphism& phi, const Morphism& psi) {
    if (psi.target() != phi.source())
        throw AlphabetMismatchError("compose: inner morphism target differs from outer source");
    std::vector<std::string> images;
    images.reserve(psi.source().size());
    for (std::size_t i = 0; i < psi.source().size(); ++i)
        images.push_back(phi.apply_text(psi.image_at(i)));
    return Morphism(psi.source(), phi.target(), std::move(images));
}

const Morphism& mu() {
    static const Morphism m(Alphabet::binary(), Alphabet::binary(), {"ab", "ba"});
    return m;
}

const Morphism& xi() {
    static const Morphism m(Alphabet::binary(), Alphabet::binary(), {"b", "a"});
    return m;
}

Morphism mu_power(int n, int max_exponent) {
    if (n < 0) throw std::invalid_argument("mu_power: exponent must be nonnegative");
    if (n > max_exponent)
        throw std::invalid_argument("mu_power: exponent above configured maximum");
    std::string image_a = "a";
    for (int i = 0; i < n; ++i) {
        std::string next;
        next.reserve(image_a.size() * 2);
        for (char c : image_a) {
            next += c;
            next += (c == 'a') ? 'b' : 'a';
        }
        image_a = std::move(next);
    }
    return Morphism(Alphabet::binary(), Alphabet::binary(),
                    {image_a, exchanged_text(image_a)});
}

std::optional<MuXiForm> in_mu_xi_monoid(const Morphism& phi) {
    if (phi.source() != Alphabet::binary() || phi.target() != Alphabet::binary())
        throw AlphabetMismatchError("in_mu_xi_monoid requires a binary endomorphism");
    return images_in_mu_xi_monoid(phi.image_at(0), phi.image_at(1));
}

std::optional<MuXiForm> images_in_mu_xi_monoid(std::string_view a_image,
                                               std::string_view b_image) noexcept {
    const std::size_t n = a_image.size();
    if (b_image.size() != n || !std::has_single_bit(n)) return std::nullopt;
    // Letter i of the n-th iterate image of a is 'a' iff popcount(i) is
    // even; the image of b is the letterwise exchange.
    bool matches_a = true;
    bool matches_b = true;
    for (std::size_t i = 0; i < n; ++i) {
        if (a_image[i] == b_image[i]) return std::nullopt;
        const char expect = (std::popcount(i) & 1) ? 'b' : 'a';
        if (a_image[i] == expect)
            matches_b = false;
        else
            matches_a = false;
        if (!matches_a && !matches_b) return std::nullopt;
    }
    return MuXiForm{std::countr_zero(n), matches_b};
}

std::vector<std::string> binary_words_upto(int max_len) {
    if (max_len < 1) throw std::invalid_argument("binary_words_upto: max_len must be >= 1");
    std::vector<std::string> out;
    out.reserve((std::size_t{1} << (max_len + 1)) - 2);
    for (int len = 1; len <= max_len; ++len) {
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
            std::string w(static_cast<std::size_t>(len), 'a');
            for (int i = 0; i < len; ++i)
                if ((bits >> (len - 1 - i)) & 1) w[static_cast<std::size_t>(i)] = 'b';
            out.push_back(std::move(w));
        }
    }
    return out;
}

std::uint64_t morphism_count(const Alphabet& source, int max_image_len) {
    const std::uint64_t per_letter = (std::uint64_t{1} << (max_image_len + 1)) - 2;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < source.size(); ++i) total *= per_letter;
    return total;
}

MorphismEnumerator::MorphismEnumerator(Alphabet source, int max_image_len)
    : source_(std::move(source)),
      image_words_(binary_words_upto(max_image_len)),
      odometer_(source_.size(), 0),
      total_(morphism_count(source_, max_image_len)) {}

bool MorphismEnumerator::advance() {
    // Rightmost index moves fastest: lexicographic order over image tuples.
    for (std::size_t i = odometer_.size(); i-- > 0;) {
        if (++odometer_[i] < image_words_.size()) return true;
        odometer_[i] = 0;
    }
    return false;
}

std::optional<Morphism> MorphismEnumerator::next() {
    if (done_) return std::nullopt;
    if (!fresh_ && !advance()) {
        done_ = true;
        return std::nullopt;
    }
    fresh_ = false;
    std::vector<std::string> images;
    images.reserve(odometer_.size());
    for (std::size_t idx : odometer_) images.push_back(image_words_[idx]);
    return Morphism(source_, Alphabet::binary(), std::move(images));
}

bool MorphismEnumerator::next_images(std::vector<std::string_view>& images) {
    if (done_) return false;
    if (!fresh_ && !advance()) {
        done_ = true;
        return false;
    }
    fresh_ = false;
    images.clear();
    for (std::size_t idx : odometer_) images.push_back(image_words_[idx]);
    return true;
}

} // namespace tmpat
