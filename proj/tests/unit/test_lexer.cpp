#include "generators.hpp"

#include "smartgraph/frontend.hpp"
#include "smartgraph/lexer.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace smartgraph;

namespace {

std::size_t newlines(const std::string& s)
{
    return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

}  // namespace

TEST(StripNoise, LineCommentBlankedToSpaces)
{
    EXPECT_EQ(strip_noise("a = 1; // stake"), "a = 1;         ");
}

TEST(StripNoise, EmptyInput)
{
    EXPECT_EQ(strip_noise(""), "");
}

TEST(StripNoise, BlockCommentKeepsLineBreaks)
{
    EXPECT_EQ(strip_noise("a /* x\ny */ b"), "a     \n     b");
}

TEST(StripNoise, StringContentsBecomePlaceholders)
{
    const std::string out = strip_noise("s = \"stake\"; t = 'it''s';");
    EXPECT_EQ(out, "s = \"_____\"; t = '__''_';");
    EXPECT_EQ(out.find("stake"), std::string::npos);
}

TEST(StripNoise, EscapedQuoteStaysInsideString)
{
    EXPECT_EQ(strip_noise(R"(x = "a\"b"; y)"), R"(x = "____"; y)");
}

TEST(StripNoise, CommentMarkersInsideStringsAreData)
{
    EXPECT_EQ(strip_noise("x = \"//\"; y"), "x = \"__\"; y");
}

TEST(StripNoise, UnterminatedBlockCommentBlanksRemainder)
{
    const std::string src = "contract A {}\n/* open\nfunction stake() {}";
    const StrippedSource stripped = strip_noise_detailed(src);
    EXPECT_EQ(stripped.text, "contract A {}\n       \n                   ");
    EXPECT_EQ(stripped.unterminated_comment_line, 2);

    const SourceUnit unit = parse_source(src, "u.sol");
    ASSERT_EQ(unit.diagnostics.size(), 1u);
    EXPECT_EQ(unit.diagnostics[0].line, 2);
    EXPECT_EQ(unit.contracts.size(), 1u);
}

TEST(StripNoise, LinePreservationOverRandomInputs)
{
    std::mt19937 rng(7);
    for (int i = 0; i < 2000; ++i) {
        const std::string src = testsupport::random_soup(rng, 300);
        const std::string out = strip_noise(src);
        ASSERT_EQ(out.size(), src.size());
        ASSERT_EQ(newlines(out), newlines(src));
    }
}

TEST(Tokenize, PositionsAddressTheOriginal)
{
    const std::string src = "x += y; // c\nz.call{value: 1}(\"\");";
    const std::string stripped = strip_noise(src);
    for (const Token& t : tokenize(stripped)) {
        EXPECT_EQ(stripped.substr(t.offset, t.length), t.text);
    }
    const auto tokens = tokenize(stripped);
    ASSERT_GE(tokens.size(), 4u);
    EXPECT_EQ(tokens[0].text, "x");
    EXPECT_EQ(tokens[1].text, "+=");
    EXPECT_EQ(tokens.back().line, 2);
}

TEST(Tokenize, NumbersAndUnknownBytes)
{
    const auto tokens = tokenize("1e18 0xff 1_000 \x01");
    ASSERT_EQ(tokens.size(), 4u);
    EXPECT_EQ(tokens[0].kind, TokenKind::Number);
    EXPECT_EQ(tokens[1].kind, TokenKind::Number);
    EXPECT_EQ(tokens[2].kind, TokenKind::Number);
    EXPECT_EQ(tokens[3].kind, TokenKind::Unknown);
}

TEST(Tokenizer, MultiByteCharacterIsOneToken)
{
    const auto tokens = tokenize("a \xc3\xa9 b");
    ASSERT_EQ(tokens.size(), 3u);
    EXPECT_EQ(tokens[1].kind, TokenKind::Unknown);
    EXPECT_EQ(tokens[1].text, "\xc3\xa9");
}
