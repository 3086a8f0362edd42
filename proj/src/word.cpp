#include "tmpat/word.hpp"

#include <algorithm>
#include <array>
#include <cassert>

namespace tmpat {

Alphabet::Alphabet(std::string_view letters) : letters_(letters) {
    if (letters_.empty() || letters_.size() > 26)
        throw std::invalid_argument("alphabet must have between 1 and 26 letters");
    std::array<bool, 26> seen{};
    for (char c : letters_) {
        if (c < 'a' || c > 'z')
            throw std::invalid_argument("alphabet letters must be lowercase ASCII");
        if (seen[static_cast<std::size_t>(c - 'a')])
            throw std::invalid_argument("alphabet letters must be distinct");
        seen[static_cast<std::size_t>(c - 'a')] = true;
    }
}

const Alphabet& Alphabet::binary() {
    static const Alphabet ab("ab");
    return ab;
}

bool Alphabet::contains(char c) const noexcept {
    return letters_.find(c) != std::string::npos;
}

std::size_t Alphabet::index(char c) const {
    const std::size_t i = letters_.find(c);
    if (i == std::string::npos)
        throw std::invalid_argument(std::string("letter '") + c + "' not in alphabet " + letters_);
    return i;
}

Word::Word(Alphabet alphabet, std::string text)
    : alphabet_(std::move(alphabet)), text_(std::move(text)) {
    if (text_.empty())
        throw std::invalid_argument("words are nonempty; the empty word is not a value");
    for (char c : text_)
        if (!alphabet_.contains(c))
            throw std::invalid_argument(std::string("letter '") + c + "' not in alphabet " +
                                        alphabet_.letters());
}

Word Word::parse(const Alphabet& alphabet, std::string_view text) {
    return Word(alphabet, std::string(text));
}

Word Word::binary(std::string_view text) {
    return Word(Alphabet::binary(), std::string(text));
}

bool length_lex_less(std::string_view a, std::string_view b) noexcept {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

bool length_lex_less(const Word& a, const Word& b) noexcept {
    return length_lex_less(a.view(), b.view());
}

char last_letter(const Word& w) noexcept {
    return w.text().back();
}

std::string exchanged_text(std::string_view binary_text) {
    std::string out(binary_text);
    for (char& c : out) c = (c == 'a') ? 'b' : 'a';
    return out;
}

namespace {

void require_binary(const Word& w, const char* op) {
    if (w.alphabet() != Alphabet::binary())
        throw AlphabetMismatchError(std::string(op) + " requires a word over the alphabet ab");
}

} // namespace

Word exchange(const Word& w) {
    require_binary(w, "exchange");
    return Word(Alphabet::binary(), exchanged_text(w.text()));
}

Word reverse(const Word& w) {
    std::string out(w.text().rbegin(), w.text().rend());
    return Word(w.alphabet(), std::move(out));
}

std::vector<Word> variants(const Word& w) {
    require_binary(w, "variants");
    std::vector<Word> out{w, reverse(w), exchange(w), exchange(reverse(w))};
    std::sort(out.begin(), out.end(),
              [](const Word& a, const Word& b) { return length_lex_less(a, b); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<std::size_t> find_factor(std::string_view haystack,
                                       std::string_view needle) noexcept {
    const std::size_t pos = haystack.find(needle);
    if (pos == std::string_view::npos) return std::nullopt;
    return pos;
}

std::optional<std::size_t> contains_factor(const Word& w, const Word& u) {
    if (w.alphabet() != u.alphabet())
        throw AlphabetMismatchError("contains_factor requires words over the same alphabet");
    return find_factor(w.view(), u.view());
}

// Both repetition tests scan agreement runs between the word and itself
// shifted by p. A run of p+1 agreements is an overlap (c v c v c with
// |cv| = p); a run of 2p agreements is a cube with root length p.

bool has_overlap(std::string_view w) noexcept {
    const std::size_t n = w.size();
    for (std::size_t p = 1; 2 * p + 1 <= n; ++p) {
        std::size_t run = 0;
        for (std::size_t j = 0; j + p < n; ++j) {
            run = (w[j] == w[j + p]) ? run + 1 : 0;
            if (run >= p + 1) return true;
        }
    }
    return false;
}

bool has_cube(std::string_view w) noexcept {
    const std::size_t n = w.size();
    for (std::size_t p = 1; 3 * p <= n; ++p) {
        std::size_t run = 0;
        for (std::size_t j = 0; j + p < n; ++j) {
            run = (w[j] == w[j + p]) ? run + 1 : 0;
            if (run >= 2 * p) return true;
        }
    }
    return false;
}

bool has_overlap(const Word& w) noexcept { return has_overlap(w.view()); }
bool has_cube(const Word& w) noexcept { return has_cube(w.view()); }

} // namespace tmpat
