// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. argv[1] is the path to the bgs CLI binary (used by criterion 12).

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "bgs/duality.hpp"
#include "bgs/format.hpp"
#include "bgs/identities.hpp"
#include "bgs/search.hpp"
#include "fixtures.hpp"

using namespace bgs;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    std::cout << "criterion " << number << " [" << name << "]: " << (ok ? "PASS" : "FAIL");
    if (!detail.empty()) std::cout << " — " << detail;
    std::cout << std::endl;
    if (!ok) ++failures;
}

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& cli, const std::string& args) {
    std::string out_path = "acceptance_cli_out.tmp";
    std::string cmd = "'" + cli + "' " + args + " > " + out_path + " 2>&1";
    int status = std::system(cmd.c_str());
    RunResult r;
    if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
    std::ifstream in(out_path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    r.output = os.str();
    return r;
}

std::vector<FieldParams> admissible_params(const BinaryAction& a) {
    std::vector<FieldParams> out;
    for (int x0 = 0; x0 < a.space_size; ++x0)
        for (int x1 = 0; x1 < a.space_size; ++x1) {
            if (x0 == x1) continue;
            for (int s = 1; s < a.group.order; ++s) out.push_back({x0, x1, s});
        }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli = argc > 1 ? argv[1] : "";

    criterion(1, "field round trips", [](std::string& detail) {
        for (int q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27}) {
            auto iso = roundtrip_field(gf(q));
            for (int i = 0; i < q; ++i)
                if (iso[i] != i) {
                    detail = "q=" + std::to_string(q) + ": round trip is not the identity";
                    return false;
                }
        }
        detail = "10 prime powers, exact table identity";
        return true;
    });

    criterion(2, "action round trips", [](std::string& detail) {
        int swept = 0;
        for (int q : {3, 4, 5, 7, 8, 9}) {
            auto a = field_to_action(gf(q));
            for (const auto& ps : admissible_params(a)) {
                if (!roundtrip_action(a, ps)) {
                    detail = "q=" + std::to_string(q) + " x0=" + std::to_string(ps.x0) + " x1=" +
                             std::to_string(ps.x1) + " s=" + std::to_string(ps.s);
                    return false;
                }
                ++swept;
            }
        }
        detail = std::to_string(swept) + " parameter triples";
        return true;
    });

    criterion(3, "prime-power obstruction", [](std::string& detail) {
        SearchOptions noprune;
        noprune.prune_size = noprune.prune_abelian = false;
        auto r56 = search_semitransitive(make_cyclic(5), 6, noprune);
        if (r56.count_raw != 0) {
            detail = "Z/5 on 6 points returned actions";
            return false;
        }
        struct Case {
            int n, m, q;
        };
        for (auto [n, m, q] : {Case{2, 3, 3}, Case{3, 4, 4}, Case{4, 5, 5}}) {
            auto r = search_semitransitive(make_cyclic(n), m);
            if (r.count_raw < 1) {
                detail = "no action for Z/" + std::to_string(n);
                return false;
            }
            for (const auto& a : r.found)
                if (!fields_isomorphic(action_to_field(a, FieldParams{0, 1, 1}).field, gf(q)).has_value()) {
                    detail = "induced field not GF(" + std::to_string(q) + ")";
                    return false;
                }
            if (n == 2 && (r.count_raw != 1 || !(r.found[0] == fixtures::act3()))) {
                detail = "Z/2 on 3 points did not yield exactly the canonical action";
                return false;
            }
        }
        detail = "Z/5 on 6 points empty unpruned; Z/2, Z/3, Z/4 realize GF(3), GF(4), GF(5)";
        return true;
    });

    criterion(4, "abelianness obstruction", [](std::string& detail) {
        auto pruned = search_semitransitive(make_symmetric(3), 7);
        SearchOptions noprune;
        noprune.prune_size = noprune.prune_abelian = false;
        auto full = search_semitransitive(make_symmetric(3), 7, noprune);
        if (pruned.count_raw != 0 || full.count_raw != 0 || !(pruned.found == full.found)) {
            detail = "short-circuit and full search disagree";
            return false;
        }
        detail = "S3 on 7 points: 0 actions, short-circuit agrees with full search (" +
                 std::to_string(full.nodes_explored) + " nodes)";
        return true;
    });

    criterion(5, "identity suites", [](std::string& detail) {
        std::int64_t total = 0;
        for (int q : {3, 4, 5, 7, 8, 9})
            for (const auto& check : verify_lemma_suite(field_to_action(gf(q)))) {
                if (!check.ok()) {
                    detail = "q=" + std::to_string(q) + " identity '" + check.name + "' failed";
                    return false;
                }
                total += check.tuples;
            }
        detail = "5 identities x 6 fields, " + std::to_string(total) + " tuples, zero counterexamples";
        return true;
    });

    criterion(6, "mixed identities", [](std::string& detail) {
        std::mt19937 rng(1);
        for (int q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27}) {
            auto f = gf(q);
            auto a = field_to_action(f);
            auto check = [&](int g, int x, int y, int z, int t) {
                return a.at(g, f.addv(x, y), f.addv(z, t)) == f.addv(a.at(g, x, z), a.at(g, y, t)) &&
                       a.at(g, x, y) == f.addv(a.at(g, x, 0), a.at(g, 0, y));
            };
            if (q <= 9) {
                for (int g = 0; g < a.group.order; ++g)
                    for (int x = 0; x < q; ++x)
                        for (int y = 0; y < q; ++y)
                            for (int z = 0; z < q; ++z)
                                for (int t = 0; t < q; ++t)
                                    if (!check(g, x, y, z, t)) {
                                        detail = "q=" + std::to_string(q) + " exhaustive check failed";
                                        return false;
                                    }
            } else {
                std::uniform_int_distribution<int> dg(0, a.group.order - 1), dx(0, q - 1);
                for (int i = 0; i < 10000; ++i)
                    if (!check(dg(rng), dx(rng), dx(rng), dx(rng), dx(rng))) {
                        detail = "q=" + std::to_string(q) + " randomized check failed";
                        return false;
                    }
            }
        }
        detail = "exhaustive q <= 9, 10^4 random tuples each for q in {16,25,27}";
        return true;
    });

    criterion(7, "parameter independence", [](std::string& detail) {
        int pairs = 0;
        std::string counts;
        for (int q : {4, 5}) {
            auto a = field_to_action(gf(q));
            auto params = admissible_params(a);
            for (const auto& p1 : params)
                for (const auto& p2 : params) {
                    auto phi = parameter_iso(a, p1, p2);  // verified entrywise inside
                    if (static_cast<int>(phi.size()) != q) {
                        detail = "q=" + std::to_string(q) + ": malformed isomorphism";
                        return false;
                    }
                    ++pairs;
                }
            if (!counts.empty()) counts += ", ";
            counts += std::to_string(params.size()) + " triples for q=" + std::to_string(q);
        }
        detail = counts + "; all " + std::to_string(pairs) + " ordered pairs give field isomorphisms";
        return true;
    });

    criterion(8, "distributivity criterion equivalence", [](std::string& detail) {
        std::vector<BinaryAction> fixtures_list;
        for (int q : {2, 3, 4, 5, 7, 8, 9}) fixtures_list.push_back(field_to_action(gf(q)));
        for (int n = 1; n <= 6; ++n) fixtures_list.push_back(conjugate_left_translation(make_cyclic(n)));
        fixtures_list.push_back(conjugate_left_translation(make_symmetric(3)));
        auto s3 = make_symmetric(3);
        for (const auto& h : normal_subgroups(s3)) fixtures_list.push_back(coset_action(s3, h));
        auto z4 = make_cyclic(4);
        for (const auto& h : normal_subgroups(z4)) fixtures_list.push_back(coset_action(z4, h));

        // random valid actions of Z/2 and Z/3 on m <= 4, built from random
        // per-point generator permutations of order dividing |G|
        std::mt19937 rng(2);
        int random_built = 0;
        while (random_built < 1000) {
            int n = 2 + static_cast<int>(random_built % 2);
            int m = 2 + static_cast<int>(rng() % 3);
            std::vector<std::vector<int>> rows(m);
            bool ok = true;
            for (int x = 0; x < m && ok; ++x) {
                std::vector<int> p(m);
                for (int i = 0; i < m; ++i) p[i] = i;
                std::shuffle(p.begin(), p.end(), rng);
                // order of p must divide n
                auto q = p;
                int ord = 1;
                std::vector<int> idp(m);
                for (int i = 0; i < m; ++i) idp[i] = i;
                while (q != idp) {
                    q = [&] {
                        std::vector<int> c(m);
                        for (int i = 0; i < m; ++i) c[i] = p[q[i]];
                        return c;
                    }();
                    ++ord;
                }
                if (n % ord != 0)
                    ok = false;
                else
                    rows[x] = p;
            }
            if (!ok) continue;
            std::vector<std::vector<std::vector<int>>> table(n, std::vector<std::vector<int>>(m, std::vector<int>(m)));
            for (int x = 0; x < m; ++x) {
                std::vector<int> cur(m);
                for (int i = 0; i < m; ++i) cur[i] = i;
                for (int k = 0; k < n; ++k) {
                    for (int y = 0; y < m; ++y) table[k][x][y] = cur[y];
                    std::vector<int> nxt(m);
                    for (int i = 0; i < m; ++i) nxt[i] = rows[x][cur[i]];
                    cur = nxt;
                }
            }
            fixtures_list.push_back(make_action(make_cyclic(n), m, std::move(table)));
            ++random_built;
        }

        for (const auto& a : fixtures_list) {
            auto r = distributivity_report(a);  // throws on route disagreement
            if (r.direct != r.via_biequivariance || r.direct != r.via_commutation) {
                detail = "routes disagree";
                return false;
            }
        }
        detail = std::to_string(fixtures_list.size()) + " actions (incl. 1000 random), three routes agree on all";
        return true;
    });

    criterion(9, "transitive classification", [](std::string& detail) {
        for (int n : {2, 3}) {
            auto rep = classify_transitive(make_cyclic(n));
            if (!rep.all_biequimorphic_to_translation || rep.count < 1) {
                detail = "Z/" + std::to_string(n) + " failed";
                return false;
            }
        }
        detail = "Z/2 and Z/3: every effective transitive distributive action is the conjugate left translation";
        return true;
    });

    criterion(10, "H2 structure", [](std::string& detail) {
        for (int m = 1; m <= 3; ++m) {
            std::int64_t expect = 1;
            std::int64_t fact = 1;
            for (int i = 2; i <= m; ++i) fact *= i;
            for (int i = 0; i < m; ++i) expect *= fact;
            H2Enumerator en(m);
            std::int64_t got = 0;
            while (en.next()) ++got;
            if (got != expect) {
                detail = "|H2(" + std::to_string(m) + ")| = " + std::to_string(got);
                return false;
            }
        }
        // star: right products -> left products, exhaustive at m=2
        for (int fc = 0; fc < 16; ++fc)
            for (int gc = 0; gc < 16; ++gc) {
                auto decode = [](int code) {
                    BinaryOp f{2, {{0, 0}, {0, 0}}};
                    for (int x = 0; x < 2; ++x)
                        for (int y = 0; y < 2; ++y) {
                            f.table[x][y] = code & 1;
                            code >>= 1;
                        }
                    return f;
                };
                auto f = decode(fc), g = decode(gc);
                if (!(star(compose_right(f, g)) == compose_left(star(f), star(g)))) {
                    detail = "star failed to carry a right product to a left product";
                    return false;
                }
            }
        // embed_unary: injective homomorphism at m=3
        std::vector<std::vector<int>> perms{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        for (size_t i = 0; i < perms.size(); ++i)
            for (size_t j = 0; j < perms.size(); ++j) {
                std::vector<int> comp(3);
                for (int k = 0; k < 3; ++k) comp[k] = perms[i][perms[j][k]];
                if (!(compose_right(embed_unary(perms[i]), embed_unary(perms[j])) == embed_unary(comp))) {
                    detail = "embed_unary is not a homomorphism";
                    return false;
                }
                if (i != j && embed_unary(perms[i]) == embed_unary(perms[j])) {
                    detail = "embed_unary is not injective";
                    return false;
                }
            }
        detail = "counts (m!)^m for m in {1,2,3}; star anti-transport exhaustive at m=2; embedding injective at m=3";
        return true;
    });

    criterion(11, "multiplicative-group characterization", [](std::string& detail) {
        for (int n : {1, 2, 3, 4, 6}) {
            auto r = realizable_as_mult_group(make_cyclic(n));
            if (!r.realizable || !r.witness || !r.induced_field ||
                !verify_field(r.induced_field->add, r.induced_field->mul, n + 1).ok()) {
                detail = "Z/" + std::to_string(n) + " should be realizable";
                return false;
            }
        }
        if (realizable_as_mult_group(make_cyclic(5)).realizable) {
            detail = "Z/5 wrongly realizable";
            return false;
        }
        if (realizable_as_mult_group(fixtures::klein()).realizable) {
            detail = "Klein four-group wrongly realizable";
            return false;
        }
        detail = "true for Z/1,Z/2,Z/3,Z/4,Z/6 with verified fields; false for Z/5 and Klein";
        return true;
    });

    criterion(12, "format and CLI", [&cli](std::string& detail) {
        // format round trip on fixtures
        std::vector<BgsDocument> docs;
        docs.push_back(document_for(fixtures::act3(), "z2"));
        docs.push_back(document_for(make_symmetric(3), "s3"));
        docs.push_back(document_for(gf(4)));
        docs.push_back(document_for(gf(9)));
        docs.push_back(document_for(identity_op(3)));
        for (const auto& d : docs) {
            auto s1 = serialize_bgs(d);
            if (serialize_bgs(parse_bgs(s1)) != s1) {
                detail = "parse/serialize round trip not the identity";
                return false;
            }
        }
        if (cli.empty()) {
            detail = "no CLI path given";
            return false;
        }
        std::ofstream("acceptance_act3.bgs") << serialize_bgs(document_for(fixtures::act3(), "z2"));

        auto v1 = run_cli(cli, "verify acceptance_act3.bgs --identities");
        if (v1.exit_code != 0) {
            detail = "verify on the canonical action exited " + std::to_string(v1.exit_code);
            return false;
        }
        if (v1.output.find("semitransitive=true") == std::string::npos ||
            v1.output.find("distributive=true") == std::string::npos) {
            detail = "verify output missing property flags";
            return false;
        }
        auto v2 = run_cli(cli, "verify acceptance_act3.bgs --identities");
        if (v2.output != v1.output) {
            detail = "verify output not byte-identical across runs";
            return false;
        }

        auto s1 = run_cli(cli, "search --group cyclic:5 --space 6");
        if (s1.exit_code != 1) {
            detail = "search cyclic:5/6 exited " + std::to_string(s1.exit_code) + ", want 1";
            return false;
        }
        if (s1.output.find("0 actions found") == std::string::npos) {
            detail = "search output missing '0 actions found'";
            return false;
        }
        auto s2 = run_cli(cli, "search --group cyclic:5 --space 6");
        if (s2.output != s1.output) {
            detail = "search output not byte-identical across runs";
            return false;
        }

        auto usage = run_cli(cli, "build-field acceptance_act3.bgs --x0 0 --x1 0 --s 1");
        if (usage.exit_code != 2) {
            detail = "degenerate build-field exited " + std::to_string(usage.exit_code) + ", want 2";
            return false;
        }
        std::remove("acceptance_cli_out.tmp");
        std::remove("acceptance_act3.bgs");
        detail = "round trips exact; verify exits 0, search exits 1, degenerate params exit 2; output reproducible";
        return true;
    });

    std::cout << (failures == 0 ? "ALL CRITERIA PASS" : std::to_string(failures) + " CRITERIA FAILED") << std::endl;
    return failures == 0 ? 0 : 1;
}
