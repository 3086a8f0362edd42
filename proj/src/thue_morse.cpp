#include "tmpat/thue_morse.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdlib>
#include <mutex>
#include <stdexcept>
#include <string>

namespace tmpat {

namespace {

struct PrefixCache {
    std::mutex mutex;
    std::shared_ptr<const std::string> text = std::make_shared<const std::string>("a");
    int generation = 0;
};

PrefixCache& prefix_cache() {
    static PrefixCache cache;
    return cache;
}

std::string substitute_once(const std::string& w) {
    std::string next;
    next.reserve(w.size() * 2);
    for (char c : w) {
        next += c;
        next += (c == 'a') ? 'b' : 'a';
    }
    return next;
}

} // namespace

std::size_t prefix_ceiling() {
    static const std::size_t ceiling = [] {
        if (const char* env = std::getenv("TMPAT_MAX_PREFIX")) {
            char* end = nullptr;
            const unsigned long long v = std::strtoull(env, &end, 10);
            if (end && *end == '\0' && v >= 1) return static_cast<std::size_t>(v);
        }
        return std::size_t{1} << 25;
    }();
    return ceiling;
}

TmPrefix tm_prefix(std::size_t n) {
    if (n < 1) throw std::invalid_argument("tm_prefix: length must be >= 1");
    if (n > prefix_ceiling())
        throw std::invalid_argument("tm_prefix: length above configured ceiling");

    PrefixCache& cache = prefix_cache();
    std::shared_ptr<const std::string> text;
    {
        std::scoped_lock lock(cache.mutex);
        while (cache.text->size() < n) {
            cache.text = std::make_shared<const std::string>(substitute_once(*cache.text));
            ++cache.generation;
        }
        text = cache.text;
    }
    const int generation = static_cast<int>(std::bit_width(n - 1));
    return TmPrefix(std::move(text), n, generation);
}

int min_generation(std::size_t k) {
    if (k < 1) throw std::invalid_argument("min_generation: length must be >= 1");
    if (k == 1) return 1;
    if (k == 2) return 3;
    // 2 + ceil(log2(k-1))
    return 2 + static_cast<int>(std::bit_width(k - 2));
}

bool is_segment(std::string_view w) {
    assert(!w.empty());
    const std::size_t window = std::size_t{1} << min_generation(w.size());
    return tm_prefix(window).view().find(w) != std::string_view::npos;
}

bool is_segment(const Word& w) {
    if (w.alphabet() != Alphabet::binary())
        throw AlphabetMismatchError("is_segment requires a word over the alphabet ab");
    return is_segment(w.view());
}

SegmentChecker::SegmentChecker(std::size_t max_word_len)
    : prefix_(tm_prefix(std::size_t{1} << min_generation(std::max<std::size_t>(max_word_len, 1)))),
      max_word_len_(max_word_len) {}

bool SegmentChecker::is_segment(std::string_view w) const noexcept {
    assert(!w.empty() && w.size() <= max_word_len_);
    const std::size_t window = std::size_t{1} << min_generation(w.size());
    return prefix_.view().substr(0, window).find(w) != std::string_view::npos;
}

std::optional<std::size_t> SegmentChecker::first_occurrence(std::string_view w) const noexcept {
    return find_factor(prefix_.view(), w);
}

Word minimality_witness(int n) {
    if (n < 3) throw std::invalid_argument("minimality_witness needs n >= 3");
    const std::string_view mu_a = tm_prefix(std::size_t{1} << (n - 3)).view();
    // last letter of the iterate image of b = exchanged last letter of the
    // iterate image of a
    const char head = (mu_a.back() == 'a') ? 'b' : 'a';
    std::string text;
    text.reserve(mu_a.size() + 2);
    text += head;
    text += mu_a;
    text += 'b';
    return Word::binary(text);
}

std::vector<std::string> segment_texts_of_length(std::size_t k) {
    if (k < 1) throw std::invalid_argument("segment_texts_of_length: length must be >= 1");
    const std::string_view text = tm_prefix(std::size_t{1} << min_generation(k)).view();
    std::vector<std::string> out;
    for (std::size_t i = 0; i + k <= text.size(); ++i) {
        std::string w(text.substr(i, k));
        auto it = std::lower_bound(out.begin(), out.end(), w);
        if (it == out.end() || *it != w) out.insert(it, std::move(w));
    }
    return out;
}

std::vector<Word> segments_of_length(std::size_t k) {
    std::vector<Word> out;
    for (std::string& s : segment_texts_of_length(k))
        out.push_back(Word::binary(s));
    return out;
}

bool is_special(std::string_view u) {
    std::string ext(u);
    ext += 'a';
    if (!is_segment(std::string_view(ext))) return false;
    ext.back() = 'b';
    return is_segment(std::string_view(ext));
}

bool is_special(const Word& u) {
    if (u.alphabet() != Alphabet::binary())
        throw AlphabetMismatchError("is_special requires a word over the alphabet ab");
    return is_special(u.view());
}

std::optional<SquareRootClass> classify_square_root(const Word& u) {
    if (u.alphabet() != Alphabet::binary())
        throw AlphabetMismatchError("classify_square_root requires a word over the alphabet ab");
    std::string square = u.text() + u.text();
    if (!is_segment(std::string_view(square))) return std::nullopt;

    const std::size_t len = u.size();
    std::string base;
    int exponent = -1;
    if (std::has_single_bit(len)) {
        exponent = std::countr_zero(len);
        const std::string_view mu_a = tm_prefix(len).view();
        if (u.view() == mu_a)
            base = "a";
        else if (u.text() == exchanged_text(mu_a))
            base = "b";
    } else if (len % 3 == 0 && std::has_single_bit(len / 3)) {
        exponent = std::countr_zero(len / 3);
        const std::string_view mu_a = tm_prefix(len / 3).view();
        const std::string mu_b = exchanged_text(mu_a);
        std::string aba;
        aba.reserve(len);
        aba.append(mu_a).append(mu_b).append(mu_a);
        if (u.text() == aba) {
            base = "aba";
        } else {
            std::string bab;
            bab.reserve(len);
            bab.append(mu_b).append(mu_a).append(mu_b);
            if (u.text() == bab) base = "bab";
        }
    }
    if (base.empty())
        throw std::logic_error("square segment with no mu-power root: classification violated for " +
                               u.text());
    return SquareRootClass{Word::binary(base), exponent};
}

std::optional<Word> mu_preimage(const Word& w) {
    if (w.alphabet() != Alphabet::binary())
        throw AlphabetMismatchError("mu_preimage requires a word over the alphabet ab");
    const std::string& text = w.text();
    if (text.size() % 2 != 0) return std::nullopt;
    std::string pre;
    pre.reserve(text.size() / 2);
    for (std::size_t i = 0; i < text.size(); i += 2) {
        if (text[i] == text[i + 1]) return std::nullopt; // blocks are ab or ba
        pre += text[i];
    }
    return Word::binary(pre);
}

std::vector<std::size_t> aligned_occurrences(int n, char x, std::size_t prefix_len) {
    if (n < 0) throw std::invalid_argument("aligned_occurrences: n must be >= 0");
    if (x != 'a' && x != 'b')
        throw std::invalid_argument("aligned_occurrences: letter must be a or b");
    const std::size_t block_len = std::size_t{1} << (n + 1);
    if (block_len > prefix_len)
        throw std::invalid_argument("aligned_occurrences: 2^(n+1) must be <= prefix_len");

    const std::string_view prefix = tm_prefix(prefix_len).view();
    std::string block(tm_prefix(block_len).view());
    if (x == 'b') block = exchanged_text(block);

    std::vector<std::size_t> positions;
    const std::size_t step = std::size_t{1} << n;
    std::size_t from = 0;
    while (true) {
        const std::size_t pos = prefix.find(block, from);
        if (pos == std::string_view::npos) break;
        if (pos % step != 0)
            throw std::logic_error("synchronization violated: occurrence at unaligned position " +
                                   std::to_string(pos));
        positions.push_back(pos);
        from = pos + 1;
    }
    return positions;
}

std::size_t recurrence_window(std::size_t k) {
    if (k < 3) throw std::invalid_argument("recurrence_window needs k >= 3");
    // r with 2^r + 2 <= k <= 2^(r+1) + 1, i.e. 2^r <= k-2 < 2^(r+1)
    const int r = static_cast<int>(std::bit_width(k - 2)) - 1;
    return 9 * (std::size_t{1} << r) + k - 1;
}

} // namespace tmpat
