#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bgs/duality.hpp"
#include "bgs/format.hpp"
#include "bgs/search.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw bgs::BgsError("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw bgs::BgsError("cannot write file: " + path);
    out << text;
}

bgs::FiniteGroup group_from_spec(const std::string& spec) {
    if (spec.rfind("cyclic:", 0) == 0) return bgs::make_cyclic(std::stoi(spec.substr(7)));
    if (spec.rfind("symmetric:", 0) == 0) return bgs::make_symmetric(std::stoi(spec.substr(10)));
    if (spec == "klein") return bgs::direct_product(bgs::make_cyclic(2), bgs::make_cyclic(2));
    auto doc = bgs::parse_bgs(read_file(spec));
    for (const auto& b : doc.blocks)
        if (const auto* g = std::get_if<bgs::BgsDocument::GroupBlock>(&b)) return g->group;
    throw bgs::BgsError("no GROUP block in " + spec);
}

bgs::SearchOptions search_options_from_env() {
    bgs::SearchOptions opts;
    // BGS_SEARCH_BOUNDS="space,group" raises the default desk-scale limits
    if (const char* env = std::getenv("BGS_SEARCH_BOUNDS")) {
        std::string s(env);
        auto comma = s.find(',');
        if (comma == std::string::npos) throw bgs::BgsError("BGS_SEARCH_BOUNDS must be 'space,group'");
        opts.max_space = std::stoi(s.substr(0, comma));
        opts.max_group = std::stoi(s.substr(comma + 1));
    }
    return opts;
}

int cmd_verify(const std::string& file, bool identities) {
    auto doc = bgs::parse_bgs(read_file(file));
    bool all_ok = true;
    int idx = 0;
    for (const auto& block : doc.blocks) {
        ++idx;
        if (const auto* g = std::get_if<bgs::BgsDocument::GroupBlock>(&block)) {
            std::cout << "block " << idx << " GROUP " << g->name << ": valid, order " << g->group.order
                      << ", abelian=" << (bgs::is_abelian(g->group) ? "true" : "false") << "\n";
        } else if (const auto* s = std::get_if<bgs::BgsDocument::SpaceBlock>(&block)) {
            std::cout << "block " << idx << " SPACE " << s->m << "\n";
        } else if (const auto* a = std::get_if<bgs::BgsDocument::ActionBlock>(&block)) {
            const auto& act = a->action;
            bool eff = bgs::is_effective(act);
            bool dist = bgs::is_distributive(act);
            bool semi = bgs::is_semitransitive(act);
            bool trans = bgs::is_transitive(act);
            std::cout << "block " << idx << " ACTION over " << a->group_name << ": valid"
                      << ", effective=" << (eff ? "true" : "false")
                      << ", distributive=" << (dist ? "true" : "false")
                      << ", semitransitive=" << (semi ? "true" : "false")
                      << ", transitive=" << (trans ? "true" : "false")
                      << ", kernel_size=" << bgs::kernel(act).size() << "\n";
            if (identities) {
                if (eff && dist && semi) {
                    for (const auto& c : bgs::verify_lemma_suite(act)) {
                        std::cout << "  identity " << c.name << ": " << (c.ok() ? "pass" : "FAIL") << " ("
                                  << c.tuples << " tuples)\n";
                        if (!c.ok()) all_ok = false;
                    }
                } else {
                    std::cout << "  identities skipped: action is not semitransitive+distributive+effective\n";
                    all_ok = false;
                }
            }
        } else if (const auto* f = std::get_if<bgs::BgsDocument::FieldBlock>(&block)) {
            std::cout << "block " << idx << " FIELD: valid, order " << f->field.order << ", characteristic "
                      << f->field.characteristic << "\n";
        } else if (const auto* o = std::get_if<bgs::BgsDocument::OpBlock>(&block)) {
            std::cout << "block " << idx << " OP: size " << o->op.space_size
                      << ", left_quasigroup=" << (bgs::is_left_quasigroup(o->op) ? "true" : "false") << "\n";
        }
    }
    return all_ok ? 0 : 1;
}

const bgs::BinaryAction& first_action(const bgs::BgsDocument& doc) {
    for (const auto& b : doc.blocks)
        if (const auto* a = std::get_if<bgs::BgsDocument::ActionBlock>(&b)) return a->action;
    throw bgs::BgsError("no ACTION block in input");
}

const bgs::FiniteField& first_field(const bgs::BgsDocument& doc) {
    for (const auto& b : doc.blocks)
        if (const auto* f = std::get_if<bgs::BgsDocument::FieldBlock>(&b)) return f->field;
    throw bgs::BgsError("no FIELD block in input");
}

int cmd_derive_action(const std::string& file, const std::string& emit) {
    auto doc = bgs::parse_bgs(read_file(file));
    auto act = bgs::field_to_action(first_field(doc));
    std::cout << "derived action: group order " << act.group.order << ", space " << act.space_size
              << ", semitransitive=" << (bgs::is_semitransitive(act) ? "true" : "false")
              << ", distributive=" << (bgs::is_distributive(act) ? "true" : "false") << "\n";
    if (!emit.empty()) write_file(emit, bgs::serialize_bgs(bgs::document_for(act)));
    return 0;
}

int cmd_build_field(const std::string& file, int x0, int x1, int s, const std::string& emit) {
    auto doc = bgs::parse_bgs(read_file(file));
    auto built = bgs::action_to_field(first_action(doc), bgs::FieldParams{x0, x1, s});
    std::cout << "built field: order " << built.field.order << ", characteristic "
              << built.field.characteristic << "\n";
    if (!emit.empty()) write_file(emit, bgs::serialize_bgs(bgs::document_for(built.field)));
    return 0;
}

int cmd_roundtrip(const std::string& file) {
    auto doc = bgs::parse_bgs(read_file(file));
    for (const auto& b : doc.blocks) {
        if (const auto* f = std::get_if<bgs::BgsDocument::FieldBlock>(&b)) {
            auto iso = bgs::roundtrip_field(f->field);
            bool identity = true;
            for (size_t i = 0; i < iso.size(); ++i)
                if (iso[i] != static_cast<int>(i)) identity = false;
            std::cout << "roundtrip FIELD order " << f->field.order << ": pass"
                      << (identity ? " (identity isomorphism)" : "") << "\n";
            return 0;
        }
        if (const auto* a = std::get_if<bgs::BgsDocument::ActionBlock>(&b)) {
            bgs::FieldParams params{0, 1, a->action.group.order > 1 ? 1 : 0};
            bool ok = bgs::roundtrip_action(a->action, params);
            std::cout << "roundtrip ACTION (x0=0, x1=1, s=1): " << (ok ? "pass" : "FAIL") << "\n";
            return ok ? 0 : 1;
        }
    }
    throw bgs::BgsError("no FIELD or ACTION block in input");
}

int cmd_search(const std::string& spec, int m, bool no_prune, const std::string& emit) {
    auto g = group_from_spec(spec);
    auto opts = search_options_from_env();
    if (no_prune) {
        opts.prune_size = false;
        opts.prune_abelian = false;
    }
    auto rep = bgs::search_semitransitive(g, m, opts);
    std::cout << "search: group order " << g.order << ", space " << m << "\n";
    if (!rep.pruned_reason.empty()) std::cout << "short-circuit: " << rep.pruned_reason << "\n";
    std::cout << rep.count_raw << " actions found"
              << " (" << rep.count_up_to_biequimorphism << " up to biequimorphism, "
              << rep.count_up_to_twisted_biequimorphism << " up to twisted biequimorphism)\n"
              << "nodes explored: " << rep.nodes_explored << "\n";
    if (!emit.empty() && !rep.found.empty()) {
        bgs::BgsDocument doc = bgs::document_for(rep.found.front().group);
        doc.blocks.push_back(bgs::BgsDocument::SpaceBlock{m});
        for (const auto& a : rep.found) doc.blocks.push_back(bgs::BgsDocument::ActionBlock{"g", a});
        write_file(emit, bgs::serialize_bgs(doc));
    }
    return rep.found.empty() ? 1 : 0;
}

int cmd_h2(int size) {
    bgs::H2Enumerator en(size);
    std::int64_t n = 0;
    while (en.next()) ++n;
    std::cout << "|H2(" << size << ")| = " << n << "\n";
    return 0;
}

int cmd_classify_transitive(const std::string& spec) {
    auto g = group_from_spec(spec);
    auto rep = bgs::classify_transitive(g);
    std::cout << "effective transitive distributive actions of order-" << g.order << " group on " << g.order
              << " points: " << rep.count << "\n"
              << "candidates scanned: " << rep.candidates_scanned << "\n"
              << "all biequimorphic to conjugate left translation: "
              << (rep.all_biequimorphic_to_translation ? "true" : "false") << "\n";
    return rep.all_biequimorphic_to_translation ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"binary G-space / finite field duality toolkit"};
    app.require_subcommand(1);

    std::string file, emit, group_spec;
    bool identities = false, no_prune = false;
    int x0 = 0, x1 = 1, s = 1, space = 0, size = 0;

    auto* verify = app.add_subcommand("verify", "validate a BGS file and report properties");
    verify->add_option("file", file)->required();
    verify->add_flag("--identities", identities, "run the derived-element identity suite on actions");

    auto* derive = app.add_subcommand("derive-action", "build the natural action of a field's unit group");
    derive->add_option("file", file)->required();
    derive->add_option("--emit", emit);

    auto* build = app.add_subcommand("build-field", "build the field of a qualifying action");
    build->add_option("file", file)->required();
    build->add_option("--x0", x0)->required();
    build->add_option("--x1", x1)->required();
    build->add_option("--s", s)->required();
    build->add_option("--emit", emit);

    auto* roundtrip = app.add_subcommand("roundtrip", "field->action->field or action->field->action");
    roundtrip->add_option("file", file)->required();

    auto* search = app.add_subcommand("search", "classify semitransitive distributive actions");
    search->add_option("--group", group_spec)->required();
    search->add_option("--space", space)->required();
    search->add_flag("--no-prune", no_prune);
    search->add_option("--emit", emit);

    auto* h2 = app.add_subcommand("h2", "count binary transformations");
    h2->add_option("--size", size)->required();

    auto* classify = app.add_subcommand("classify-transitive", "check the transitive classification");
    classify->add_option("--group", group_spec)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "bgs: usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (verify->parsed()) return cmd_verify(file, identities);
        if (derive->parsed()) return cmd_derive_action(file, emit);
        if (build->parsed()) return cmd_build_field(file, x0, x1, s, emit);
        if (roundtrip->parsed()) return cmd_roundtrip(file);
        if (search->parsed()) return cmd_search(group_spec, space, no_prune, emit);
        if (h2->parsed()) return cmd_h2(size);
        if (classify->parsed()) return cmd_classify_transitive(group_spec);
    } catch (const bgs::BgsError& e) {
        std::cerr << "bgs: error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "bgs: error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
