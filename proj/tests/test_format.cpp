#include <doctest.h>

#include "bgs/format.hpp"
#include "fixtures.hpp"

using namespace bgs;

TEST_CASE("parse trivial group") {
    auto doc = parse_bgs("GROUP g\nORDER 1\nTABLE\n0\nEND");
    REQUIRE(doc.blocks.size() == 1);
    auto* gb = std::get_if<BgsDocument::GroupBlock>(&doc.blocks[0]);
    REQUIRE(gb);
    CHECK(gb->name == "g");
    CHECK(gb->group.order == 1);
}

TEST_CASE("comments and whitespace are ignored") {
    auto doc = parse_bgs("# a comment\nGROUP g # trailing\nORDER 2\nTABLE\n  0 1\n\t1 0\nEND\n# tail");
    REQUIRE(doc.blocks.size() == 1);
    CHECK(std::get<BgsDocument::GroupBlock>(doc.blocks[0]).group == make_cyclic(2));
}

TEST_CASE("parse errors carry line numbers") {
    try {
        parse_bgs("GROUP g\nORDER 2\nTABLE\n0 1\n1 x\nEND");
        FAIL("expected BgsParseError");
    } catch (const BgsParseError& e) {
        CHECK(e.line == 5);
    }

    // short row: the END keyword gets consumed as a table entry
    CHECK_THROWS_AS(parse_bgs("SPACE 3\nOP\n0 1 2\n0 1\nEND"), BgsParseError);
    CHECK_THROWS_AS(parse_bgs("BOGUS"), BgsParseError);
    CHECK_THROWS_AS(parse_bgs("GROUP g\nORDER 2\nTABLE\n0 1\n1 1\nEND"), BgsParseError);  // not a group
    CHECK_THROWS_AS(parse_bgs("GROUP g\nORDER 2\nTABLE\n0 1"), BgsParseError);            // truncated
}

TEST_CASE("dangling references") {
    CHECK_THROWS_AS(parse_bgs("SPACE 2\nACTION nosuch\n0 1\n0 1\nEND"), BgsParseError);
    // ACTION without SPACE
    CHECK_THROWS_AS(parse_bgs("GROUP g\nORDER 1\nTABLE\n0\nEND\nACTION g\n0 1\n0 1\nEND"), BgsParseError);
    CHECK_THROWS_AS(parse_bgs("OP\n0\nEND"), BgsParseError);
}

TEST_CASE("ACTION block round trip on ACT3") {
    auto doc = document_for(fixtures::act3(), "z2");
    auto text = serialize_bgs(doc);
    auto back = parse_bgs(text);
    REQUIRE(back.blocks.size() == 3);
    auto* ab = std::get_if<BgsDocument::ActionBlock>(&back.blocks[2]);
    REQUIRE(ab);
    CHECK(ab->action == fixtures::act3());
    CHECK(serialize_bgs(back) == text);
}

TEST_CASE("invalid ACTION table is rejected on load") {
    auto doc = document_for(fixtures::act3(), "z2");
    auto text = serialize_bgs(doc);
    // corrupt one entry of the non-identity slice: '0 2 1' -> '0 2 2'
    auto pos = text.find("0 2 1");
    REQUIRE(pos != std::string::npos);
    text[pos + 4] = '2';
    CHECK_THROWS_AS(parse_bgs(text), BgsParseError);
}

TEST_CASE("FIELD block round trip") {
    auto doc = document_for(gf(3, 1));
    auto text = serialize_bgs(doc);
    CHECK(text.find("FIELD\nORDER 3\nADD\n0 1 2\n1 2 0\n2 0 1\nMUL\n") != std::string::npos);
    auto back = parse_bgs(text);
    CHECK(std::get<BgsDocument::FieldBlock>(back.blocks[0]).field == gf(3, 1));
}

TEST_CASE("OP block round trip") {
    auto doc = document_for(BinaryOp{2, {{1, 0}, {1, 0}}});
    auto back = parse_bgs(serialize_bgs(doc));
    REQUIRE(back.blocks.size() == 2);
    CHECK(std::get<BgsDocument::OpBlock>(back.blocks[1]).op == BinaryOp{2, {{1, 0}, {1, 0}}});
    CHECK_THROWS_AS(parse_bgs("SPACE 2\nOP\n0 2\n0 1\nEND"), BgsParseError);  // entry out of range
}

TEST_CASE("empty document serializes to empty text") {
    CHECK(serialize_bgs(BgsDocument{}) == "");
    CHECK(parse_bgs("").blocks.empty());
    CHECK(parse_bgs("# only a comment\n").blocks.empty());
}

TEST_CASE("serialize is canonical and idempotent across fixtures") {
    std::vector<BgsDocument> fixtures_docs;
    fixtures_docs.push_back(document_for(make_symmetric(3), "s3"));
    fixtures_docs.push_back(document_for(fixtures::act3(), "z2"));
    fixtures_docs.push_back(document_for(gf(4)));
    fixtures_docs.push_back(document_for(gf(9)));
    fixtures_docs.push_back(document_for(identity_op(3)));
    for (const auto& d : fixtures_docs) {
        auto s1 = serialize_bgs(d);
        auto s2 = serialize_bgs(parse_bgs(s1));
        CHECK(s1 == s2);
        CHECK(serialize_bgs(parse_bgs(s2)) == s2);
    }
}

TEST_CASE("group tables in files are renumbered so the identity is 0") {
    auto doc = parse_bgs("GROUP g\nORDER 2\nTABLE\n1 0\n0 1\nEND");
    CHECK(std::get<BgsDocument::GroupBlock>(doc.blocks[0]).group == make_cyclic(2));
}

TEST_CASE("multiple blocks with name resolution to the latest group") {
    std::string text =
        "GROUP a\nORDER 1\nTABLE\n0\nEND\n"
        "GROUP a\nORDER 2\nTABLE\n0 1\n1 0\nEND\n"
        "SPACE 3\n"
        "ACTION a\n"
        "0 1 2\n0 1 2\n0 1 2\n\n0 2 1\n2 1 0\n1 0 2\nEND\n";
    auto doc = parse_bgs(text);
    auto* ab = std::get_if<BgsDocument::ActionBlock>(&doc.blocks.back());
    REQUIRE(ab);
    CHECK(ab->action.group.order == 2);
    CHECK(ab->action == fixtures::act3());
}
