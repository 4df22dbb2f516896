#include <algorithm>
#include <cctype>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "invwords/braid.hpp"
#include "invwords/coxeter_core.hpp"
#include "invwords/orders.hpp"
#include "invwords/twisted.hpp"
#include "invwords/type_a.hpp"

using namespace invwords;
using nlohmann::json;

namespace {

constexpr int kOk = 0, kFailed = 1, kUsage = 2;

struct Options {
    std::string system = "A3";
    std::string twist = "id";
    std::string x, y;
    bool fpf = false, as_json = false, dot = false;
    unsigned jobs = 1;
    int n = -1;
    std::string check, kind = "general";
};

std::vector<int> parse_ints(std::string_view text) {
    std::vector<int> out;
    std::string cur;
    for (char c : text) {
        if (std::isdigit(static_cast<unsigned char>(c))) {
            cur += c;
        } else if (c == ',' || c == ' ' || c == '[' || c == ']') {
            if (!cur.empty()) out.push_back(std::stoi(cur));
            cur.clear();
        } else {
            throw Error("unexpected character '" + std::string(1, c) + "'");
        }
    }
    if (!cur.empty()) out.push_back(std::stoi(cur));
    return out;
}

TwistedSystem<CoxeterSystem> make_system(const Options& o) {
    auto g = build_system(o.system);
    if (o.twist == "id") return TwistedSystem(g);
    if (o.twist == "auto") {
        auto autos = diagram_automorphisms(g.matrix());
        if (autos.size() < 2) throw Error("system " + o.system + " has no nontrivial diagram involution");
        return TwistedSystem(g, autos[1]);
    }
    if (o.twist.rfind("perm:", 0) == 0) return TwistedSystem(g, DiagramInvolution(parse_ints(o.twist.substr(5))));
    throw Error("unknown twist '" + o.twist + "' (expected id, auto or perm:...)");
}

bool type_a(const CoxeterSystem& g) {
    for (int s = 1; s <= g.rank(); ++s)
        for (int t = s + 1; t <= g.rank(); ++t)
            if (g.m(s, t) != (t == s + 1 ? 3 : 2)) return false;
    return true;
}

// "w:1,2,1" is a word, "w0" the longest element, "1" the identity; otherwise a permutation (type A only).
GroupElement parse_element(const CoxeterSystem& g, const std::string& text) {
    if (text.empty() || text == "1" || text == "e") return g.identity();
    if (text == "w0") return longest_element(g);
    if (text.rfind("w:", 0) == 0) {
        Word w = parse_ints(text.substr(2));
        for (int s : w)
            if (s < 1 || s > g.rank()) throw Error("generator " + std::to_string(s) + " out of range");
        return element_from_word(g, w);
    }
    if (!type_a(g)) throw Error("permutation input needs a type A system; use w:<word>");
    return to_root_element(g, parse_permutation(text, g.rank() + 1));
}

Permutation parse_involution(const Options& o) {
    if (o.x.empty()) throw Error("--x is required");
    int n = o.n;
    if (n < 0) {
        std::string spaced = o.x;
        std::replace_if(spaced.begin(), spaced.end(), [](char c) { return c == '(' || c == ')'; }, ' ');
        auto v = parse_ints(spaced);
        n = o.x.front() == '(' ? (v.empty() ? 0 : *std::max_element(v.begin(), v.end())) : static_cast<int>(v.size());
    }
    return parse_permutation(o.x, n);
}

json words_json(const CoxeterSystem& g, const ElementList<CoxeterSystem>& elems) {
    return words_of(g, sorted_by_word(g, elems));
}

void print(const json& j) { std::cout << j.dump() << "\n"; }

int emit_report(const Report& r, const Options& o) {
    if (o.as_json) {
        print(r);
    } else {
        std::cout << r.system << ": " << r.summary() << "\n";
        for (const auto& f : r.failures)
            std::cout << "  " << f.check << " x=" << to_string(f.x) << " y=" << to_string(f.y) << "\n";
    }
    return r.ok() ? kOk : kFailed;
}

struct Pair {
    TwistedSystem<CoxeterSystem> ts;
    GroupElement x, y;
};

Pair element_pair(const Options& o) {
    auto ts = make_system(o);
    const auto& g = ts.group();
    if (o.y.empty()) throw Error("--y is required");
    GroupElement x = g.identity();
    if (!o.x.empty()) x = parse_element(g, o.x);
    else if (o.fpf) x = to_root_element(g, fpf_base(g.rank() + 1));
    GroupElement y = parse_element(g, o.y);
    for (const auto* e : {&x, &y})
        if (!ts.is_twisted_involution(*e)) throw Error("not a twisted involution: " + to_string(reduced_word(g, *e)));
    return {std::move(ts), std::move(x), std::move(y)};
}

int run_atoms(const Options& o, bool with_atoms, bool with_hecke) {
    auto p = element_pair(o);
    const auto& g = p.ts.group();
    json out = json::object();
    if (with_atoms) out["atoms"] = words_json(g, atoms(p.ts, p.x, p.y));
    if (with_hecke) out["hecke_atoms"] = words_json(g, hecke_atoms(p.ts, p.x, p.y));
    print(out);
    return kOk;
}

int run_words(const Options& o) {
    auto p = element_pair(o);
    json out;
    out["words"] = involution_words(p.ts, p.x, p.y);
    print(out);
    return kOk;
}

int run_poset(const Options& o) {
    const Permutation x = parse_involution(o);
    AtomPoset p = o.fpf ? atom_poset_fpf(x) : atom_poset(x);
    if (o.dot) std::cout << to_dot(p);
    else print(p);
    return kOk;
}

int run_classes(const Options& o) {
    if (o.n < 0) throw Error("--n is required");
    auto classes = o.fpf ? fpf_classes(o.n) : chinese_classes(o.n);
    if (o.as_json) {
        json out = json::array();
        for (const auto& c : classes) {
            json row = json::array();
            for (const auto& u : c) row.push_back(compact(Permutation(u)));
            out.push_back(row);
        }
        print(out);
        return kOk;
    }
    for (const auto& c : classes) {
        std::string line;
        for (const auto& u : c) line += (line.empty() ? "" : " ") + compact(Permutation(u));
        std::cout << line << "\n";
    }
    return kOk;
}

int run_verify(const Options& o) {
    const std::string& c = o.check;
    if (c == "chinese" || c == "fpf") {
        if (o.n < 0) throw Error("--n is required");
        return emit_report(c == "chinese" ? verify_chinese(o.n, o.jobs) : verify_fpf(o.n, o.jobs), o);
    }
    auto ts = make_system(o);
    if (c == "conjecture") return emit_report(check_conjecture(ts, o.jobs), o);
    if (c == "b-prime") return emit_report(check_bruhat_characterization(ts), o);
    if (c == "braid") return emit_report(check_involution_braid(ts), o);
    if (c == "duality") return emit_report(check_duality(ts), o);
    if (c == "fc") return emit_report(check_fc_atoms(ts), o);
    throw Error("unknown check '" + c + "'");
}

int run_sweep(const Options& o) {
    if (o.n < 0) throw Error("--n is required");
    if (o.kind == "general") return emit_report(check_classifier(o.n, is_atom_general, o.jobs, "general"), o);
    if (o.kind == "colored") return emit_report(check_classifier(o.n, is_atom_colored, o.jobs, "colored"), o);
    if (o.kind == "sigma") return emit_report(check_sigma_conjecture(o.n, o.jobs), o);
    throw Error("unknown sweep kind '" + o.kind + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Atoms, Hecke atoms and involution words of twisted involutions"};
    app.require_subcommand(1);
    Options o;

    auto add_system = [&](CLI::App* sub) {
        sub->add_option("--system", o.system, "Coxeter system, e.g. A4, B3, H3, I2(5), A1xA2")->capture_default_str();
        sub->add_option("--twist", o.twist, "id, auto, or perm:<images of 1..r>")->capture_default_str();
    };
    auto add_pair = [&](CLI::App* sub) {
        add_system(sub);
        sub->add_option("--x", o.x, "lower involution (cycles, one-line, w:<word>, w0); default identity");
        sub->add_option("--y", o.y, "upper involution")->required();
        sub->add_flag("--fpf", o.fpf, "default x is s1 s3 s5 ...");
        sub->add_flag("--json", o.as_json, "JSON output (default)");
    };

    auto* atoms_cmd = app.add_subcommand("atoms", "atoms A(x,y) and Hecke atoms B(x,y)");
    add_pair(atoms_cmd);
    auto* hecke_cmd = app.add_subcommand("hecke", "Hecke atoms B(x,y)");
    add_pair(hecke_cmd);
    auto* words_cmd = app.add_subcommand("words", "involution words from x to y");
    add_pair(words_cmd);

    auto* poset_cmd = app.add_subcommand("poset", "atom poset of a type A involution");
    poset_cmd->add_option("--x", o.x, "involution, cycle or one-line notation")->required();
    poset_cmd->add_option("--n", o.n, "size (defaults to the largest entry or the one-line length)");
    poset_cmd->add_flag("--fpf", o.fpf, "fixed-point-free atoms");
    poset_cmd->add_flag("--json", o.as_json, "JSON output (default)");
    poset_cmd->add_flag("--dot", o.dot, "Graphviz output");

    auto* classes_cmd = app.add_subcommand("classes", "equivalence classes of S_n");
    classes_cmd->add_option("--n", o.n)->required();
    classes_cmd->add_flag("--fpf", o.fpf, "fixed-point-free relation");
    classes_cmd->add_flag("--json", o.as_json);

    auto* verify_cmd = app.add_subcommand("verify", "run an exhaustive check");
    verify_cmd->add_option("check", o.check)
        ->required()
        ->check(CLI::IsMember({"conjecture", "chinese", "fpf", "braid", "duality", "b-prime", "fc"}));
    add_system(verify_cmd);
    verify_cmd->add_option("--n", o.n, "size for chinese/fpf");
    verify_cmd->add_option("--jobs", o.jobs)->check(CLI::PositiveNumber);
    verify_cmd->add_flag("--json", o.as_json);

    auto* sweep_cmd = app.add_subcommand("sweep", "compare a type A classifier with brute-force atoms");
    sweep_cmd->add_option("--n", o.n)->required();
    sweep_cmd->add_option("--kind", o.kind)->check(CLI::IsMember({"general", "colored", "sigma"}))->capture_default_str();
    sweep_cmd->add_option("--jobs", o.jobs)->check(CLI::PositiveNumber);
    sweep_cmd->add_flag("--json", o.as_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*atoms_cmd) return run_atoms(o, true, true);
        if (*hecke_cmd) return run_atoms(o, false, true);
        if (*words_cmd) return run_words(o);
        if (*poset_cmd) return run_poset(o);
        if (*classes_cmd) return run_classes(o);
        if (*verify_cmd) return run_verify(o);
        if (*sweep_cmd) return run_sweep(o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
