#include "racah/json_io.hpp"
#include "racah/lattice.hpp"
#include "racah/sweep.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

// Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
// 3 precondition refusal (reducible spec), 4 internal invariant breach.
constexpr int kOk = 0;
constexpr int kVerifyFail = 1;
constexpr int kUsage = 2;
constexpr int kRefused = 3;
constexpr int kInternal = 4;

void emit(const racah::json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw std::invalid_argument("cannot open output file '" + out_path + "'");
    f << j.dump(2) << "\n";
}

int cmd_build(const std::string& spec_str, const std::string& out_path) {
    const racah::ModuleSpec spec = racah::parse_module_spec(spec_str);
    racah::json doc;
    if (spec.family == racah::Family::R)
        doc = racah::racahrep_to_json(racah::build_R(spec.d, spec.a, spec.b, spec.c));
    else
        doc = racah::hrep_to_json(racah::build_h_module(spec));
    emit(doc, out_path);
    return kOk;
}

int cmd_verify(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open '" + path + "'");
    racah::json doc;
    try {
        f >> doc;
    } catch (const racah::json::exception& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
    racah::json out;
    bool ok = false;
    if (racah::json_is_hrep(doc)) {
        const racah::HRep h = racah::hrep_from_json(doc);
        const racah::RelationReport hr = racah::check_h_relations(h);
        const racah::RelationReport rr = racah::check_racah_relations(racah::zeta_pullback(h));
        const bool centralizer = racah::check_t0_centralizes(h);
        const bool anticommutators = racah::check_anticommutator_identities(h);
        ok = hr.ok && rr.ok && centralizer && anticommutators;
        out = racah::json{{"kind", "h_module"},
                          {"ok", ok},
                          {"h_relations", racah::relation_report_to_json(hr)},
                          {"racah_relations", racah::relation_report_to_json(rr)},
                          {"t0_centralizes", centralizer},
                          {"anticommutator_identities", anticommutators}};
    } else {
        const racah::RacahRep r = racah::racahrep_from_json(doc);
        const racah::RelationReport rr = racah::check_racah_relations(r);
        ok = rr.ok;
        out = racah::json{{"kind", "racah_module"}, {"ok", ok},
                          {"racah_relations", racah::relation_report_to_json(rr)}};
    }
    std::cout << out.dump(2) << "\n";
    return ok ? kOk : kVerifyFail;
}

int cmd_lattice(const std::string& spec_str, bool as_json, bool expect) {
    const racah::ModuleSpec spec = racah::parse_module_spec(spec_str);
    if (spec.family == racah::Family::R)
        throw std::invalid_argument("lattice requires a four-generator family (E or O)");
    if (!racah::irreducibility_criterion(spec)) {
        std::cerr << "refused: " << racah::to_string(spec) << " is reducible\n";
        return kRefused;
    }
    const racah::HRep h = racah::build_h_module(spec);
    const racah::LatticeReport rep = racah::submodule_lattice(h);
    if (as_json) {
        std::cout << racah::lattice_report_to_json(rep).dump(2) << "\n";
    } else {
        std::cout << "spec: " << racah::to_string(spec) << "\n";
        std::cout << "shape: " << racah::to_string(rep.shape) << "\n";
        std::cout << "t0 diagonalizable: " << (rep.t0_diagonalizable ? "yes" : "no") << "\n";
        std::cout << "node dims:";
        for (const auto& nd : rep.nodes) std::cout << " " << nd.dim();
        std::cout << "\neigenvalues:";
        for (const auto& [theta, info] : rep.eigen)
            std::cout << " " << theta.str() << " (geo " << info.geometric << ", alg " << info.algebraic
                      << ")";
        std::cout << "\nfactors:";
        for (int f : rep.factor_dims) std::cout << " " << f;
        std::cout << "\n";
        for (const auto& et : rep.subquotients) {
            const auto& t = et.tag;
            std::cout << "factor " << et.lower << " -> " << et.upper << ": R_" << t.d_prime << "("
                      << t.a_prime.str() << ", " << t.b_prime.str() << ", " << t.c_prime.str() << ")"
                      << (t.verified ? " [verified]" : " [unverified: " + t.note + "]") << "\n";
        }
    }
    if (expect) {
        const racah::PredictedLattice pred = racah::predicted_lattice(spec);
        std::string why;
        if (!racah::lattice_matches_prediction(rep, pred, &why)) {
            std::cerr << "prediction mismatch: " << why << "\n";
            return kVerifyFail;
        }
        std::cerr << "prediction matched\n";
    }
    return kOk;
}

int cmd_sweep(const racah::SweepConfig& cfg) {
    const racah::SweepSummary s = racah::run_sweep(cfg);
    std::cout << racah::sweep_summary_to_json(s).dump(2) << "\n";
    return s.failures.empty() ? kOk : kVerifyFail;
}

racah::SweepConfig parse_sweep_flags(const std::string& families, const std::string& twists, int dmax,
                                     int trials, std::uint64_t seed, long den_bound) {
    racah::SweepConfig cfg;
    cfg.family_E = families.find('E') != std::string::npos;
    cfg.family_O = families.find('O') != std::string::npos;
    if (!cfg.family_E && !cfg.family_O)
        throw std::invalid_argument("--families must mention E or O");
    cfg.twists.clear();
    std::stringstream ss(twists);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.size() != 2 || (item[0] != '+' && item[0] != '-') || (item[1] != '+' && item[1] != '-'))
            throw std::invalid_argument("--twists entries must be ++, +-, -+ or --");
        cfg.twists.emplace_back(item[0] == '+' ? 1 : -1, item[1] == '+' ? 1 : -1);
    }
    if (cfg.twists.empty()) throw std::invalid_argument("--twists must not be empty");
    cfg.d_max = dmax;
    cfg.trials = trials;
    cfg.seed = seed;
    cfg.denominator_bound = den_bound;
    return cfg;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact module builder, relation verifier and submodule-lattice engine "
                 "for the universal Racah algebra inside the universal additive DAHA"};
    app.require_subcommand(1);

    std::string build_spec, build_out;
    auto* build = app.add_subcommand("build", "build a catalog module and write its JSON form");
    build->add_option("spec", build_spec, "module spec, e.g. E:d=3,a=2,b=3,c=7,eps=+-")->required();
    build->add_option("-o,--out", build_out, "output file (stdout when omitted)");

    std::string verify_path;
    auto* verify = app.add_subcommand("verify", "check the defining relations of a module file");
    verify->add_option("file", verify_path, "module JSON file")->required();

    std::string lattice_spec;
    bool lattice_json = false, lattice_expect = false;
    auto* lattice = app.add_subcommand("lattice", "compute the invariant-subspace lattice of a spec");
    lattice->add_option("spec", lattice_spec, "module spec (family E or O)")->required();
    lattice->add_flag("--json", lattice_json, "emit the full JSON report");
    lattice->add_flag("--expect", lattice_expect, "compare against the predicted lattice");

    std::string sweep_families = "E,O", sweep_twists = "++,+-,-+,--";
    int sweep_dmax = 9, sweep_trials = 100;
    std::uint64_t sweep_seed = 0;
    long sweep_den = 4;
    auto* sweep = app.add_subcommand("sweep", "randomized verification sweep over catalog modules");
    sweep->add_option("--families", sweep_families, "comma list from {E,O} (default E,O)");
    sweep->add_option("--twists", sweep_twists, "comma list from {++,+-,-+,--} (default all)");
    sweep->add_option("--dmax", sweep_dmax, "largest d to sample (default 9)");
    sweep->add_option("--trials", sweep_trials, "number of trials (default 100)");
    sweep->add_option("--seed", sweep_seed, "RNG seed (default 0)");
    sweep->add_option("--denominator-bound", sweep_den, "largest denominator of random rationals");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    }

    try {
        if (build->parsed()) return cmd_build(build_spec, build_out);
        if (verify->parsed()) return cmd_verify(verify_path);
        if (lattice->parsed()) return cmd_lattice(lattice_spec, lattice_json, lattice_expect);
        if (sweep->parsed())
            return cmd_sweep(parse_sweep_flags(sweep_families, sweep_twists, sweep_dmax, sweep_trials,
                                               sweep_seed, sweep_den));
    } catch (const racah::spectrum_error& e) {
        std::cerr << "internal: " << e.what() << "\n";
        return kInternal;
    } catch (const racah::internal_error& e) {
        std::cerr << "internal: " << e.what() << "\n";
        return kInternal;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal: " << e.what() << "\n";
        return kInternal;
    }
    return kUsage;
}
