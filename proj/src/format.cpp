#include "bgs/format.hpp"

#include <cctype>
#include <sstream>

namespace bgs {

namespace {

struct Token {
    std::string text;
    int line;
};

std::vector<Token> lex(std::string_view text) {
    std::vector<Token> out;
    int line = 1;
    size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == '\n') {
            ++line;
            ++i;
        } else if (c == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else {
            size_t j = i;
            while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) && text[j] != '#') ++j;
            out.push_back({std::string(text.substr(i, j - i)), line});
            i = j;
        }
    }
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view text) : tokens_(lex(text)) {}

    BgsDocument parse() {
        BgsDocument doc;
        while (!done()) {
            const Token& t = peek();
            if (t.text == "GROUP")
                parse_group(doc);
            else if (t.text == "SPACE")
                parse_space(doc);
            else if (t.text == "ACTION")
                parse_action(doc);
            else if (t.text == "FIELD")
                parse_field(doc);
            else if (t.text == "OP")
                parse_op(doc);
            else
                throw BgsParseError(t.line, "unexpected token '" + t.text + "'");
        }
        return doc;
    }

private:
    std::vector<Token> tokens_;
    size_t pos_ = 0;
    int current_space_ = -1;

    bool done() const { return pos_ >= tokens_.size(); }

    const Token& peek() const { return tokens_[pos_]; }

    Token take() {
        if (done()) throw BgsParseError(last_line(), "unexpected end of input");
        return tokens_[pos_++];
    }

    int last_line() const { return tokens_.empty() ? 1 : tokens_.back().line; }

    void expect(const std::string& kw) {
        Token t = take();
        if (t.text != kw) throw BgsParseError(t.line, "expected " + kw + ", got '" + t.text + "'");
    }

    int take_int() {
        Token t = take();
        try {
            size_t used = 0;
            int v = std::stoi(t.text, &used);
            if (used != t.text.size()) throw std::invalid_argument("");
            return v;
        } catch (const std::exception&) {
            throw BgsParseError(t.line, "expected an integer, got '" + t.text + "'");
        }
    }

    std::vector<std::vector<int>> take_table(int rows, int cols) {
        std::vector<std::vector<int>> t(rows, std::vector<int>(cols));
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) t[r][c] = take_int();
        return t;
    }

    void parse_group(BgsDocument& doc) {
        expect("GROUP");
        Token name = take();
        int line = name.line;
        expect("ORDER");
        int n = take_int();
        if (n < 1) throw BgsParseError(line, "ORDER must be positive");
        expect("TABLE");
        auto table = take_table(n, n);
        expect("END");
        try {
            doc.blocks.push_back(BgsDocument::GroupBlock{name.text, group_from_table(std::move(table))});
        } catch (const BgsError& e) {
            throw BgsParseError(line, std::string("GROUP ") + name.text + ": " + e.what());
        }
    }

    void parse_space(BgsDocument& doc) {
        expect("SPACE");
        Token t = peek();
        int m = take_int();
        if (m < 1) throw BgsParseError(t.line, "SPACE must be positive");
        current_space_ = m;
        doc.blocks.push_back(BgsDocument::SpaceBlock{m});
    }

    void parse_action(BgsDocument& doc) {
        expect("ACTION");
        Token name = take();
        const FiniteGroup* group = nullptr;
        for (const auto& b : doc.blocks)
            if (auto* gb = std::get_if<BgsDocument::GroupBlock>(&b))
                if (gb->name == name.text) group = &gb->group;
        if (!group) throw BgsParseError(name.line, "ACTION references unknown group '" + name.text + "'");
        if (current_space_ < 0) throw BgsParseError(name.line, "ACTION requires a preceding SPACE block");
        int m = current_space_;
        std::vector<std::vector<std::vector<int>>> table(group->order);
        for (int g = 0; g < group->order; ++g) table[g] = take_table(m, m);
        expect("END");
        try {
            doc.blocks.push_back(BgsDocument::ActionBlock{name.text, make_action(*group, m, std::move(table))});
        } catch (const BgsError& e) {
            throw BgsParseError(name.line, std::string("ACTION: ") + e.what());
        }
    }

    void parse_field(BgsDocument& doc) {
        Token t = take();  // FIELD
        expect("ORDER");
        int q = take_int();
        if (q < 2) throw BgsParseError(t.line, "FIELD ORDER must be at least 2");
        expect("ADD");
        auto add = take_table(q, q);
        expect("MUL");
        auto mul = take_table(q, q);
        expect("END");
        try {
            doc.blocks.push_back(BgsDocument::FieldBlock{field_from_tables(std::move(add), std::move(mul))});
        } catch (const BgsError& e) {
            throw BgsParseError(t.line, std::string("FIELD: ") + e.what());
        }
    }

    void parse_op(BgsDocument& doc) {
        Token t = take();  // OP
        if (current_space_ < 0) throw BgsParseError(t.line, "OP requires a preceding SPACE block");
        int m = current_space_;
        auto table = take_table(m, m);
        expect("END");
        for (const auto& row : table)
            for (int v : row)
                if (v < 0 || v >= m) throw BgsParseError(t.line, "OP entry out of range");
        doc.blocks.push_back(BgsDocument::OpBlock{BinaryOp{m, std::move(table)}});
    }
};

void write_table(std::ostringstream& os, const std::vector<std::vector<int>>& table) {
    for (const auto& row : table) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) os << ' ';
            os << row[i];
        }
        os << '\n';
    }
}

}  // namespace

BgsDocument parse_bgs(std::string_view text) { return Parser(text).parse(); }

std::string serialize_bgs(const BgsDocument& doc) {
    if (doc.blocks.empty()) return "";
    std::ostringstream os;
    os << "# BGS: 0-based indices; group identity = 0; field zero = 0, one = 1\n";
    for (const auto& block : doc.blocks) {
        if (const auto* g = std::get_if<BgsDocument::GroupBlock>(&block)) {
            os << "GROUP " << g->name << "\nORDER " << g->group.order << "\nTABLE\n";
            write_table(os, g->group.cayley);
            os << "END\n";
        } else if (const auto* s = std::get_if<BgsDocument::SpaceBlock>(&block)) {
            os << "SPACE " << s->m << '\n';
        } else if (const auto* a = std::get_if<BgsDocument::ActionBlock>(&block)) {
            os << "ACTION " << a->group_name << '\n';
            for (int g = 0; g < a->action.group.order; ++g) {
                if (g) os << '\n';
                write_table(os, a->action.table[g]);
            }
            os << "END\n";
        } else if (const auto* f = std::get_if<BgsDocument::FieldBlock>(&block)) {
            os << "FIELD\nORDER " << f->field.order << "\nADD\n";
            write_table(os, f->field.add);
            os << "MUL\n";
            write_table(os, f->field.mul);
            os << "END\n";
        } else if (const auto* o = std::get_if<BgsDocument::OpBlock>(&block)) {
            os << "OP\n";
            write_table(os, o->op.table);
            os << "END\n";
        }
    }
    return os.str();
}

BgsDocument document_for(const FiniteGroup& g, const std::string& name) {
    BgsDocument doc;
    doc.blocks.push_back(BgsDocument::GroupBlock{name, g});
    return doc;
}

BgsDocument document_for(const BinaryAction& a, const std::string& group_name) {
    BgsDocument doc;
    doc.blocks.push_back(BgsDocument::GroupBlock{group_name, a.group});
    doc.blocks.push_back(BgsDocument::SpaceBlock{a.space_size});
    doc.blocks.push_back(BgsDocument::ActionBlock{group_name, a});
    return doc;
}

BgsDocument document_for(const FiniteField& f) {
    BgsDocument doc;
    doc.blocks.push_back(BgsDocument::FieldBlock{f});
    return doc;
}

BgsDocument document_for(const BinaryOp& op) {
    BgsDocument doc;
    doc.blocks.push_back(BgsDocument::SpaceBlock{op.space_size});
    doc.blocks.push_back(BgsDocument::OpBlock{op});
    return doc;
}

}  // namespace bgs
