#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bgs/action.hpp"
#include "bgs/binop.hpp"
#include "bgs/field.hpp"
#include "bgs/group.hpp"

namespace bgs {

struct BgsParseError : BgsError {
    int line;
    BgsParseError(int l, const std::string& msg)
        : BgsError("line " + std::to_string(l) + ": " + msg), line(l) {}
};

/// An ordered sequence of BGS blocks. ACTION and OP blocks resolve their
/// group / space size against the nearest earlier GROUP and SPACE blocks.
struct BgsDocument {
    struct GroupBlock {
        std::string name;
        FiniteGroup group;
    };
    struct SpaceBlock {
        int m = 0;
    };
    struct ActionBlock {
        std::string group_name;
        BinaryAction action;
    };
    struct FieldBlock {
        FiniteField field;
    };
    struct OpBlock {
        BinaryOp op;
    };
    using Block = std::variant<GroupBlock, SpaceBlock, ActionBlock, FieldBlock, OpBlock>;

    std::vector<Block> blocks;
};

/// Parses the BGS text format. `#` starts a comment; integers are 0-based
/// and whitespace-separated; all tables are validated by their owning
/// module on load. Throws BgsParseError with a line number.
BgsDocument parse_bgs(std::string_view text);

/// Canonical rendering: a fixed convention header, single spaces, one table
/// row per line. Stable across runs; parse-serialize round trips are exact
/// on canonical documents.
std::string serialize_bgs(const BgsDocument& doc);

/// Convenience builders that insert the SPACE blocks an ACTION or OP needs.
BgsDocument document_for(const FiniteGroup& g, const std::string& name = "g");
BgsDocument document_for(const BinaryAction& a, const std::string& group_name = "g");
BgsDocument document_for(const FiniteField& f);
BgsDocument document_for(const BinaryOp& op);

}  // namespace bgs
