#include "tmpat/avoidance.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace tmpat {

std::vector<Word> GeneratorSet::all() const {
    std::vector<Word> out = fixed;
    out.insert(out.end(), family_k.begin(), family_k.end());
    out.insert(out.end(), family_m.begin(), family_m.end());
    std::sort(out.begin(), out.end(),
              [](const Word& a, const Word& b) { return length_lex_less(a, b); });
    return out;
}

namespace {

std::string family_generator(int k, bool middle_is_bab) {
    const std::string_view mu_a = tm_prefix(std::size_t{1} << k).view();
    const std::string mu_b = exchanged_text(mu_a);
    std::string text;
    text.reserve(3 * mu_a.size() + 2);
    text += mu_a.back();
    if (middle_is_bab)
        text.append(mu_b).append(mu_a).append(mu_b);
    else
        text.append(mu_a).append(mu_b).append(mu_a);
    text += 'a';
    return text;
}

} // namespace

GeneratorSet shur_generators(std::size_t max_len) {
    if (max_len < 3) throw std::invalid_argument("shur_generators needs max_len >= 3");
    GeneratorSet out;
    out.cutoff_len = max_len;
    for (const char* g : {"aaa", "ababa", "aabaab", "abbabb"})
        if (std::string_view(g).size() <= max_len) out.fixed.push_back(Word::binary(g));
    for (int k = 1; (std::size_t{3} << k) + 2 <= max_len; ++k)
        out.family_k.push_back(Word::binary(family_generator(k, false)));
    for (int m = 2; (std::size_t{3} << m) + 2 <= max_len; ++m)
        out.family_m.push_back(Word::binary(family_generator(m, true)));
    return out;
}

namespace {

// Backtracking matcher for pattern instances: assigns nonempty images to
// pattern letters left to right along a fixed occurrence start. `slot_of`
// maps a pattern letter to its image slot.
struct InstanceSearch {
    std::string_view w;
    std::string_view p;
    const std::uint8_t* slot_of; // indexed by letter - 'a'
    std::vector<std::string_view> images; // empty view = unassigned

    bool match(std::size_t pi, std::size_t ti) {
        if (pi == p.size()) return true;
        const std::size_t later_letters = p.size() - pi - 1;
        std::string_view& img = images[slot_of[p[pi] - 'a']];
        if (!img.empty()) {
            if (ti + img.size() + later_letters > w.size()) return false;
            if (w.substr(ti, img.size()) != img) return false;
            return match(pi + 1, ti + img.size());
        }
        const std::size_t max_len = w.size() - ti - later_letters;
        for (std::size_t len = 1; len <= max_len; ++len) {
            img = w.substr(ti, len);
            if (match(pi + 1, ti + len)) return true;
        }
        img = {};
        return false;
    }

    bool search() {
        for (std::size_t start = 0; start + p.size() <= w.size(); ++start) {
            std::fill(images.begin(), images.end(), std::string_view{});
            if (match(0, start)) return true;
        }
        return false;
    }
};

} // namespace

std::optional<Morphism> contains_pattern_instance(const Word& w, const Word& p) {
    if (w.alphabet() != Alphabet::binary())
        throw AlphabetMismatchError("contains_pattern_instance: the searched word must be binary");
    if (p.size() > w.size()) return std::nullopt;

    std::uint8_t slot_of[26] = {};
    for (std::size_t i = 0; i < p.alphabet().size(); ++i)
        slot_of[p.alphabet().letter(i) - 'a'] = static_cast<std::uint8_t>(i);

    InstanceSearch search{w.view(), p.view(), slot_of,
                          std::vector<std::string_view>(p.alphabet().size())};
    if (!search.search()) return std::nullopt;

    std::vector<std::string> images;
    images.reserve(search.images.size());
    for (std::string_view img : search.images)
        images.emplace_back(img.empty() ? std::string_view("a") : img);
    return Morphism(p.alphabet(), Alphabet::binary(), std::move(images));
}

bool has_binary_pattern_instance(std::string_view w, std::string_view p) {
    if (p.size() > w.size()) return false;
    static constexpr std::uint8_t kBinarySlots[26] = {0, 1};
    InstanceSearch search{w, p, kBinarySlots, std::vector<std::string_view>(2)};
    return search.search();
}

bool is_avoided_via_ideal_text(std::string_view w,
                               const std::vector<std::string>& generators_by_length) {
    for (const std::string& g : generators_by_length) {
        if (g.size() > w.size()) break;
        if (has_binary_pattern_instance(w, g)) return true;
    }
    return false;
}

bool is_avoided_via_ideal(const Word& w) {
    if (w.alphabet() != Alphabet::binary())
        throw AlphabetMismatchError("is_avoided_via_ideal requires a word over the alphabet ab");
    if (w.size() < 3) return false;
    for (const Word& g : shur_generators(w.size()).all())
        if (contains_pattern_instance(w, g)) return true;
    return false;
}

bool is_unavoidable_binary(const Word& w) {
    if (w.alphabet() != Alphabet::binary())
        throw AlphabetMismatchError("is_unavoidable_binary requires a word over the alphabet ab");
    return w.text() == "aabaa" || w.text() == "bbabb" || is_segment(w);
}

std::optional<Witness> find_witness(const Word& pattern, int max_image_len,
                                    std::size_t prefix_len) {
    if (max_image_len < 1)
        throw std::invalid_argument("find_witness: max_image_len must be >= 1");
    const TmPrefix prefix = tm_prefix(prefix_len);
    MorphismEnumerator candidates(pattern.alphabet(), max_image_len);
    while (auto phi = candidates.next()) {
        const std::string image = phi->apply_text(pattern.view());
        const std::size_t pos = prefix.view().find(image);
        if (pos != std::string_view::npos)
            return Witness{std::move(*phi), Word::binary(image), pos};
    }
    return std::nullopt;
}

std::optional<std::size_t> suffix_divergence(std::size_t i, std::size_t j,
                                             std::size_t horizon) {
    if (horizon < 1) throw std::invalid_argument("suffix_divergence: horizon must be >= 1");
    const std::size_t needed = std::max(i, j) + horizon;
    const std::string_view t = tm_prefix(needed).view();
    for (std::size_t d = 0; d < horizon; ++d) {
        const char exchanged = (t[j + d] == 'a') ? 'b' : 'a';
        if (t[i + d] != exchanged) return d;
    }
    return std::nullopt;
}

} // namespace tmpat
