#include "tmpat/typicality.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tmpat {

namespace {

std::vector<std::string> compute_atypical_texts() {
    std::set<std::string> texts;
    for (std::string_view base : {"aabab", "abaaba", "aabbaab"}) {
        for (std::size_t i = 0; i < base.size(); ++i) {
            for (std::size_t len = 1; i + len <= base.size(); ++len) {
                const std::string factor(base.substr(i, len));
                const std::string reversed(factor.rbegin(), factor.rend());
                texts.insert(factor);
                texts.insert(reversed);
                texts.insert(exchanged_text(factor));
                texts.insert(exchanged_text(reversed));
            }
        }
    }
    std::vector<std::string> out(texts.begin(), texts.end());
    std::sort(out.begin(), out.end(),
              [](const std::string& a, const std::string& b) { return length_lex_less(a, b); });
    return out;
}

const std::vector<std::string>& atypical_texts() {
    static const std::vector<std::string> cached = compute_atypical_texts();
    return cached;
}

} // namespace

const std::vector<Word>& atypical_words() {
    static const std::vector<Word> cached = [] {
        std::vector<Word> out;
        out.reserve(atypical_texts().size());
        for (const std::string& t : atypical_texts()) out.push_back(Word::binary(t));
        return out;
    }();
    return cached;
}

const std::vector<Word>& maximal_atypical_words() {
    static const std::vector<Word> cached = {Word::binary("aabab"), Word::binary("abaaba"),
                                             Word::binary("aabbaab")};
    return cached;
}

bool is_atypical(std::string_view w) noexcept {
    const std::vector<std::string>& texts = atypical_texts();
    auto it = std::lower_bound(texts.begin(), texts.end(), w,
                               [](const std::string& a, std::string_view b) {
                                   return length_lex_less(std::string_view(a), b);
                               });
    return it != texts.end() && std::string_view(*it) == w;
}

bool satisfies_length3_criterion(std::string_view w) noexcept {
    const auto has = [&](std::string_view f) { return w.find(f) != std::string_view::npos; };
    return has("aab") && has("abb") && has("baa") && has("bba") && (has("aba") || has("bab"));
}

bool satisfies_length3_criterion(const Word& w) {
    if (w.alphabet() != Alphabet::binary())
        throw AlphabetMismatchError("satisfies_length3_criterion requires a binary word");
    return satisfies_length3_criterion(w.view());
}

const char* to_string(Typicality verdict) noexcept {
    switch (verdict) {
        case Typicality::typical: return "typical";
        case Typicality::atypical: return "atypical";
        case Typicality::not_a_segment: return "not-a-segment";
    }
    return "?";
}

TypicalityVerdict classify(const Word& w) {
    if (w.alphabet() != Alphabet::binary())
        throw AlphabetMismatchError("classify requires a binary word");

    TypicalityVerdict result{w, Typicality::typical, {}, false, std::nullopt, "", std::nullopt};
    if (!is_segment(w.view())) {
        result.verdict = Typicality::not_a_segment;
        return result;
    }

    for (std::string_view f : {"aab", "aba", "abb", "baa", "bab", "bba"})
        if (w.view().find(f) != std::string_view::npos)
            result.length3_found.push_back(Word::binary(f));
    result.criterion_met = satisfies_length3_criterion(w.view());

    if (is_atypical(w.view())) {
        if (result.criterion_met)
            throw std::logic_error("length-3 criterion satisfied by listed atypical word " +
                                   w.text());
        result.verdict = Typicality::atypical;
        for (const Word& maximal : maximal_atypical_words()) {
            const Word rev = reverse(maximal);
            const std::pair<const char*, Word> candidates[] = {
                {"identity", maximal},
                {"reverse", rev},
                {"exchange", exchange(maximal)},
                {"reverse+exchange", exchange(rev)},
            };
            for (const auto& [name, variant] : candidates) {
                if (auto pos = find_factor(variant.view(), w.view())) {
                    result.atypical_container = maximal;
                    result.container_variant = name;
                    result.container_position = *pos;
                    return result;
                }
            }
        }
        throw std::logic_error("atypical word missing from every maximal-word variant: " +
                               w.text());
    }
    return result;
}

std::optional<std::pair<std::size_t, std::size_t>> first_atypicality_witness(
    std::string_view w, const std::vector<std::string>& images,
    const SegmentChecker& checker) {
    std::size_t longest = 0;
    for (const std::string& im : images) longest = std::max(longest, im.size());

    std::string buffer;
    buffer.reserve(w.size() * longest);
    for (std::size_t ia = 0; ia < images.size(); ++ia) {
        const std::string& image_a = images[ia];
        for (std::size_t ib = 0; ib < images.size(); ++ib) {
            const std::string& image_b = images[ib];
            if (images_in_mu_xi_monoid(image_a, image_b)) continue;
            buffer.clear();
            for (char c : w) buffer += (c == 'a') ? image_a : image_b;
            if (checker.is_segment(buffer)) return std::make_pair(ia, ib);
        }
    }
    return std::nullopt;
}

std::optional<Morphism> brute_force_atypical_check(const Word& w, int max_image_len) {
    if (w.alphabet() != Alphabet::binary())
        throw AlphabetMismatchError("brute_force_atypical_check requires a binary word");
    if (!is_segment(w.view()))
        throw std::invalid_argument("brute_force_atypical_check: word is not a segment: " +
                                    w.text());
    if (max_image_len < 1)
        throw std::invalid_argument("brute_force_atypical_check: image bound must be >= 1");

    const std::vector<std::string> images = binary_words_upto(max_image_len);
    const SegmentChecker checker(w.size() * static_cast<std::size_t>(max_image_len));
    if (auto hit = first_atypicality_witness(w.view(), images, checker))
        return Morphism(Alphabet::binary(), Alphabet::binary(),
                        {images[hit->first], images[hit->second]});
    return std::nullopt;
}

const Word& AtypicalSemigroup::word(std::size_t element) const {
    if (element == kZero || element > words_.size())
        throw std::out_of_range("AtypicalSemigroup: no word for element " +
                                std::to_string(element));
    return words_[element - 1];
}

std::optional<std::size_t> AtypicalSemigroup::element_of(std::string_view text) const noexcept {
    auto it = std::lower_bound(words_.begin(), words_.end(), text,
                               [](const Word& a, std::string_view b) {
                                   return length_lex_less(a.view(), b);
                               });
    if (it == words_.end() || it->view() != text) return std::nullopt;
    return static_cast<std::size_t>(it - words_.begin()) + 1;
}

std::size_t AtypicalSemigroup::product(std::size_t x, std::size_t y) const {
    return product_.at(x * size() + y);
}

bool AtypicalSemigroup::above(std::size_t x, std::size_t y) const {
    return above_.at(x * size() + y);
}

const AtypicalSemigroup& build_s0() {
    static const AtypicalSemigroup cached = [] {
        AtypicalSemigroup s;
        s.words_ = atypical_words();
        const std::size_t n = s.size();

        s.product_.assign(n * n, AtypicalSemigroup::kZero);
        for (std::size_t x = 1; x < n; ++x) {
            for (std::size_t y = 1; y < n; ++y) {
                const std::string concat = s.words_[x - 1].text() + s.words_[y - 1].text();
                if (auto element = s.element_of(concat)) s.product_[x * n + y] = *element;
            }
        }

        s.above_.assign(n * n, false);
        for (std::size_t x = 0; x < n; ++x) s.above_[x * n + x] = true;
        for (std::size_t x = 1; x < n; ++x) {
            s.above_[x * n + AtypicalSemigroup::kZero] = true;
            for (std::size_t y = 1; y < n; ++y)
                if (find_factor(s.words_[y - 1].view(), s.words_[x - 1].view()))
                    s.above_[x * n + y] = true;
        }
        return s;
    }();
    return cached;
}

std::vector<std::pair<std::size_t, std::size_t>> jorder_cover_edges(
    const AtypicalSemigroup& s) {
    const std::size_t n = s.size();
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t upper = 0; upper < n; ++upper) {
        for (std::size_t lower = 0; lower < n; ++lower) {
            if (upper == lower || !s.above(upper, lower)) continue;
            bool covered = true;
            for (std::size_t mid = 0; mid < n && covered; ++mid) {
                if (mid == upper || mid == lower) continue;
                if (s.above(upper, mid) && s.above(mid, lower)) covered = false;
            }
            if (covered) edges.emplace_back(upper, lower);
        }
    }
    return edges;
}

std::string export_jorder_dot(const AtypicalSemigroup& s) {
    const auto label = [&](std::size_t element) {
        return element == AtypicalSemigroup::kZero ? std::string("0")
                                                   : s.word(element).text();
    };
    const auto is_bold = [&](std::size_t element) {
        if (element == AtypicalSemigroup::kZero) return false;
        const Word& w = s.word(element);
        const std::vector<Word> vs = variants(w);
        return vs.front() == w; // variants() sorts, same length -> lex order
    };
    const auto is_atom = [&](std::size_t element) {
        if (element == AtypicalSemigroup::kZero) return false;
        for (std::size_t other = 1; other < s.size(); ++other)
            if (other != element && s.above(element, other)) return false;
        return true;
    };

    std::string dot = "digraph S0 {\n";
    for (std::size_t element = 1; element < s.size(); ++element) {
        dot += "  \"" + label(element) + "\"";
        const bool bold = is_bold(element);
        const bool underlined = bold && is_atom(element);
        if (bold && underlined)
            dot += " [style=bold, peripheries=2]";
        else if (bold)
            dot += " [style=bold]";
        dot += ";\n";
    }
    dot += "  \"0\";\n";
    for (const auto& [upper, lower] : jorder_cover_edges(s))
        dot += "  \"" + label(upper) + "\" -> \"" + label(lower) + "\";\n";
    dot += "}\n";
    return dot;
}

std::optional<Word> segment_preservation_check(const Morphism& phi, std::size_t max_len) {
    if (phi.source() != Alphabet::binary() || phi.target() != Alphabet::binary())
        throw AlphabetMismatchError("segment_preservation_check requires a binary endomorphism");
    if (max_len < 1)
        throw std::invalid_argument("segment_preservation_check: max_len must be >= 1");
    for (std::size_t k = 1; k <= max_len; ++k) {
        for (const std::string& segment : segment_texts_of_length(k)) {
            const std::string image = phi.apply_text(segment);
            if (!is_segment(std::string_view(image))) return Word::binary(segment);
        }
    }
    return std::nullopt;
}

} // namespace tmpat
