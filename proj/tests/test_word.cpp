#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "tmpat/word.hpp"

using namespace tmpat;

namespace {

Word bw(std::string_view text) { return Word::binary(text); }

template <typename Fn>
void for_each_binary_word(int max_len, Fn fn) {
    for (int len = 1; len <= max_len; ++len) {
        for (unsigned long bits = 0; bits < (1ul << len); ++bits) {
            std::string w(static_cast<std::size_t>(len), 'a');
            for (int i = 0; i < len; ++i)
                if ((bits >> (len - 1 - i)) & 1) w[static_cast<std::size_t>(i)] = 'b';
            fn(w);
        }
    }
}

// Reference repetition scanners, cubic but obviously correct.
bool naive_overlap(std::string_view w) {
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t p = 1; i + 2 * p < w.size(); ++p) {
            bool all = true;
            for (std::size_t j = i; j <= i + p; ++j)
                if (w[j] != w[j + p]) {
                    all = false;
                    break;
                }
            if (all) return true;
        }
    }
    return false;
}

bool naive_cube(std::string_view w) {
    for (std::size_t p = 1; 3 * p <= w.size(); ++p) {
        for (std::size_t i = 0; i + 3 * p <= w.size(); ++i) {
            bool all = true;
            for (std::size_t j = i; j < i + 2 * p; ++j)
                if (w[j] != w[j + p]) {
                    all = false;
                    break;
                }
            if (all) return true;
        }
    }
    return false;
}

} // namespace

TEST_CASE("alphabet validation") {
    CHECK(Alphabet("ab").size() == 2);
    CHECK(Alphabet("abcdefghijklmnopqrstuvwxyz").size() == 26);
    CHECK(Alphabet("xyz").index('y') == 1);
    CHECK_THROWS_AS(Alphabet(""), std::invalid_argument);
    CHECK_THROWS_AS(Alphabet("aa"), std::invalid_argument);
    CHECK_THROWS_AS(Alphabet("aB"), std::invalid_argument);
    CHECK_THROWS_AS(Alphabet("a1"), std::invalid_argument);
    CHECK_THROWS_AS(Alphabet("ab").index('c'), std::invalid_argument);
}

TEST_CASE("word construction and equality") {
    const Word w = bw("abbab");
    CHECK(w.text() == "abbab");
    CHECK(w.size() == 5);
    CHECK(w == Word::parse(Alphabet::binary(), "abbab"));
    CHECK(w != bw("abbaa"));
    CHECK_THROWS_AS(bw(""), std::invalid_argument);
    CHECK_THROWS_AS(bw("abc"), std::invalid_argument);
    // same text over a different alphabet is a different value
    CHECK(Word(Alphabet("abc"), "ab") != bw("ab"));
}

TEST_CASE("last letter") {
    CHECK(last_letter(bw("abba")) == 'a');
    CHECK(last_letter(bw("b")) == 'b');
    CHECK(last_letter(bw("abbabaab")) == 'b');
}

TEST_CASE("exchange") {
    CHECK(exchange(bw("aabaa")) == bw("bbabb"));
    CHECK(exchange(bw("ab")) == bw("ba"));
    CHECK(exchange(exchange(bw("abbabaab"))) == bw("abbabaab"));
    CHECK_THROWS_AS(exchange(Word(Alphabet("xy"), "xy")), AlphabetMismatchError);
}

TEST_CASE("reverse") {
    CHECK(reverse(bw("aabab")) == bw("babaa"));
    CHECK(reverse(bw("abba")) == bw("abba"));
    CHECK(reverse(Word(Alphabet("xyz"), "xzy")) == Word(Alphabet("xyz"), "yzx"));
}

TEST_CASE("exchange and reverse are commuting involutions") {
    for_each_binary_word(8, [](const std::string& text) {
        const Word w = bw(text);
        CHECK(exchange(exchange(w)) == w);
        CHECK(reverse(reverse(w)) == w);
        CHECK(exchange(reverse(w)) == reverse(exchange(w)));
    });
}

TEST_CASE("variants") {
    const auto texts = [](const std::vector<Word>& ws) {
        std::vector<std::string> out;
        for (const Word& w : ws) out.push_back(w.text());
        return out;
    };
    CHECK(texts(variants(bw("aabab"))) ==
          std::vector<std::string>{"aabab", "ababb", "babaa", "bbaba"});
    CHECK(texts(variants(bw("ab"))) == std::vector<std::string>{"ab", "ba"});
    CHECK(texts(variants(bw("abba"))) == std::vector<std::string>{"abba", "baab"});

    // closed under both maps
    for_each_binary_word(7, [](const std::string& text) {
        const Word w = bw(text);
        const std::vector<Word> vs = variants(w);
        CHECK(vs.size() >= 1);
        CHECK(vs.size() <= 4);
        for (const Word& v : vs) {
            const std::vector<Word> vv = variants(v);
            CHECK(vv == vs);
        }
    });
}

TEST_CASE("contains_factor") {
    CHECK(!contains_factor(bw("abbabaab"), bw("aabb")).has_value());
    CHECK(contains_factor(bw("abbabaabbaababba"), bw("abab")) == 10);
    const Word w = bw("babba");
    CHECK(contains_factor(w, w) == 0);
    CHECK_THROWS_AS(contains_factor(bw("ab"), Word(Alphabet("abc"), "ab")),
                    AlphabetMismatchError);
}

TEST_CASE("contains_factor is reflexive and monotone") {
    for_each_binary_word(6, [](const std::string& wt) {
        const Word w = bw(wt);
        for (std::size_t i = 0; i < wt.size(); ++i) {
            for (std::size_t len = 1; i + len <= wt.size(); ++len) {
                const Word v = bw(wt.substr(i, len));
                REQUIRE(contains_factor(w, v).has_value());
                // factors of v are factors of w
                for (std::size_t j = 0; j < len; ++j) {
                    const Word u = bw(wt.substr(i + j, len - j));
                    CHECK(contains_factor(w, u).has_value());
                }
            }
        }
    });
}

TEST_CASE("repetition examples") {
    CHECK(has_overlap(bw("ababa")));
    CHECK(has_cube(bw("aaa")));
    CHECK(has_overlap(bw("aaa")));
    CHECK(!has_overlap(bw("abbabaabbaababba")));
    CHECK(!has_cube(bw("abbabaabbaababba")));
    CHECK(has_cube(bw("babbabbabba"))); // (bba)^3 inside
}

TEST_CASE("repetition scanners match the naive reference") {
    for_each_binary_word(11, [](const std::string& w) {
        CHECK(has_overlap(std::string_view(w)) == naive_overlap(w));
        CHECK(has_cube(std::string_view(w)) == naive_cube(w));
    });
}

TEST_CASE("cubes imply overlaps") {
    for_each_binary_word(11, [](const std::string& w) {
        if (has_cube(std::string_view(w))) CHECK(has_overlap(std::string_view(w)));
    });
}

TEST_CASE("length-lex order") {
    CHECK(length_lex_less(bw("b"), bw("aa")));
    CHECK(length_lex_less(bw("ab"), bw("ba")));
    CHECK(!length_lex_less(bw("ba"), bw("ab")));
    CHECK(!length_lex_less(bw("ab"), bw("ab")));
}
