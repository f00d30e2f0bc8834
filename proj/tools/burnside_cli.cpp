// Command line surface for Burnside rings of fusion systems: table of
// marks, subgroup lattices, fusion classes, the alpha basis and prime
// ideal listings, as text tables or JSON.

#include <filesystem>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "burnside/burnside.hpp"

namespace {

using namespace burnside;

struct FusionInput {
    std::string spec_path;
    std::string ambient_path;
    int p = 2;
    std::string sylow_csv;
    std::string labels_path;

    void attach(CLI::App* cmd, bool spec_positional = true) {
        if (spec_positional)
            cmd->add_option("spec", spec_path, "fusion spec JSON file");
        cmd->add_option("--ambient", ambient_path, "ambient group JSON file");
        cmd->add_option("--p", p, "the prime p");
        cmd->add_option("--sylow", sylow_csv, "explicit Sylow copy as comma-separated members");
        cmd->add_option("--labels", labels_path,
                        "JSON file [[index,\"label\"],...] pinning S's element order");
    }

    FusionSpec resolve() const {
        FusionSpec spec;
        if (!spec_path.empty()) {
            spec = load_fusion_spec(spec_path);
        } else if (!ambient_path.empty()) {
            spec.ambient = load_group(ambient_path);
            spec.p = p;
        } else {
            throw InvalidInput("need either a fusion spec file or --ambient");
        }
        if (!sylow_csv.empty()) {
            std::vector<int> members;
            std::stringstream ss(sylow_csv);
            std::string tok;
            while (std::getline(ss, tok, ',')) members.push_back(std::stoi(tok));
            spec.sylow_members = members;
        }
        if (!labels_path.empty()) spec.labels = labels_from_json(load_json(labels_path));
        return spec;
    }
};

std::set<int> parse_primes(const std::string& csv) {
    std::set<int> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.insert(std::stoi(tok));
    return out;
}

void run_check(const FusionSpec& spec, const std::string& name) {
    FusionSystem f = build_fusion(spec);
    AlphaBasis b = compute_alpha_basis(f);  // asserts properties (i)-(iv)
    const int k = f.cls.size();

    // table of marks shape
    for (int q = 0; q < k; ++q) {
        const Subgroup& rep = f.cls.rep(q);
        if (b.tom.at(q, q) != Int(normalizer(f.S, rep).order() / rep.order()))
            throw NoSolution("table of marks diagonal is wrong");
        for (int p = q + 1; p < k; ++p)
            if (b.tom.at(q, p) != 0) throw NoSolution("table of marks is not triangular");
    }

    // double-coset products match pointwise ghost products
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            ZElement x = ZElement::basis_vector(Basis::Transitive, i);
            ZElement y = ZElement::basis_vector(Basis::Transitive, j);
            std::vector<Int> gx = ghost(b.tom, x), gy = ghost(b.tom, y);
            std::vector<Int> gp(k);
            for (int c = 0; c < k; ++c) gp[c] = gx[c] * gy[c];
            UnghostResult u = unghost(b.tom, gp);
            if (!u.in_image() || !(*u.element == product(f.S, f.cls, x, y)))
                throw NoSolution("product / ghost cross-check failed");
        }
    }

    // two routes to F-stability agree on all transitive sets
    for (int i = 0; i < k; ++i) {
        ZElement x = ZElement::basis_vector(Basis::Transitive, i);
        if (is_f_stable(f, b.tom, x) != is_f_stable_by_restriction(f, x))
            throw NoSolution("stability routes disagree");
    }

    // generator soundness and the inclusion closed form
    std::vector<IdealDescriptor> descs = enumerate_primes(f, Ring::Integral, {2, 3});
    for (const IdealDescriptor& d : descs)
        for (const ZElement& g : generators(f, b, d).gens)
            if (!membership(f, b, d, g)) throw NoSolution("generator outside its ideal");
    for (const IdealDescriptor& d1 : descs) {
        for (const IdealDescriptor& d2 : descs) {
            bool gens_inside = true;
            for (const ZElement& g : generators(f, b, d1).gens)
                gens_inside = gens_inside && membership(f, b, d2, g);
            if (gens_inside != included(f, d1, d2))
                throw NoSolution("inclusion closed form mismatch");
        }
    }
    std::cout << "ok " << name << ": |Cl(S)| = " << k << ", |Cl(F)| = " << f.class_count()
              << ", invariants hold\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Burnside rings of saturated fusion systems"};
    app.require_subcommand(1);

    std::string format_name = "table";
    std::string group_path;
    FusionInput fusion_in;
    std::string primes_csv = "";
    bool localized = false;
    std::vector<std::string> check_specs;
    std::string check_all_dir;

    CLI::App* marks = app.add_subcommand("marks", "table of marks of a group");
    marks->add_option("group", group_path, "group JSON file")->required();
    marks->add_option("--format", format_name, "table or json");

    CLI::App* subgroups = app.add_subcommand("subgroups", "conjugacy classes of subgroups");
    subgroups->add_option("group", group_path, "group JSON file")->required();
    subgroups->add_option("--format", format_name, "table or json");

    CLI::App* fusion = app.add_subcommand("fusion", "fusion classes of F_S(G)");
    fusion_in.attach(fusion);
    fusion->add_option("--format", format_name, "table or json");

    CLI::App* alpha = app.add_subcommand("alpha", "the alpha basis of A(F)");
    FusionInput alpha_in;
    alpha_in.attach(alpha);
    alpha->add_option("--format", format_name, "table or json");

    CLI::App* ideals = app.add_subcommand("ideals", "prime ideals of A(F) or A(F)_(p)");
    FusionInput ideals_in;
    ideals_in.attach(ideals);
    ideals->add_option("--primes", primes_csv, "extra primes for type-q enumeration, e.g. 2,3,5");
    ideals->add_flag("--localized", localized, "work in the p-localized ring A(F)_(p)");
    ideals->add_option("--format", format_name, "table or json");

    CLI::App* check = app.add_subcommand("check", "run the invariant suite on fusion specs");
    check->add_option("specs", check_specs, "fusion spec JSON files");
    check->add_option("--all", check_all_dir, "directory of fusion spec JSON files");

    CLI11_PARSE(app, argc, argv);

    try {
        const Format format = parse_format(format_name);
        if (marks->parsed() || subgroups->parsed()) {
            FiniteGroup g = load_group(group_path);
            SubgroupClassTable cls = enumerate_subgroups(g);
            if (marks->parsed())
                std::cout << marks_report(g, cls, table_of_marks(g, cls), format);
            else
                std::cout << subgroups_report(g, cls, format);
        } else if (fusion->parsed()) {
            std::cout << fusion_report(build_fusion(fusion_in.resolve()), format);
        } else if (alpha->parsed()) {
            FusionSystem f = build_fusion(alpha_in.resolve());
            std::cout << alpha_report(f, compute_alpha_basis(f), format);
        } else if (ideals->parsed()) {
            FusionSystem f = build_fusion(ideals_in.resolve());
            AlphaBasis b = compute_alpha_basis(f);
            std::set<int> primes = primes_csv.empty() ? std::set<int>{} : parse_primes(primes_csv);
            std::cout << ideals_report(f, b, localized ? Ring::PLocal : Ring::Integral, primes,
                                       format);
        } else if (check->parsed()) {
            std::vector<std::string> specs = check_specs;
            if (!check_all_dir.empty()) {
                std::vector<std::string> found;
                for (const auto& e : std::filesystem::directory_iterator(check_all_dir))
                    if (e.path().extension() == ".json") found.push_back(e.path().string());
                std::sort(found.begin(), found.end());
                specs.insert(specs.end(), found.begin(), found.end());
            }
            if (specs.empty()) throw InvalidInput("check needs fusion specs or --all <dir>");
            for (const std::string& path : specs) run_check(load_fusion_spec(path), path);
        }
    } catch (const NoSolution& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
