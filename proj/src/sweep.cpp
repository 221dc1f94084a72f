#include "racah/sweep.hpp"

#include "racah/lattice.hpp"
#include "racah/rng.hpp"

#include <stdexcept>

namespace racah {

namespace {

enum class Constraint { none, zero_twist_param, chain_condition };

struct Plan {
    Family family;
    std::pair<int, int> eps;
    int d = -1; // -1: draw at sampling time
    Constraint constraint = Constraint::none;
};

int random_odd(Rng& rng, int d_max) { return 1 + 2 * static_cast<int>(rng.int_in(0, (d_max - 1) / 2)); }
int random_even(Rng& rng, int d_max) { return 2 * static_cast<int>(rng.int_in(0, d_max / 2)); }

// Sum of the twist-transformed parameters for family O; the chain branch is
// the locus where this equals (d+1)/2.
Rat o_effective_sum(std::pair<int, int> eps, const Rat& a, const Rat& b, const Rat& c) {
    if (eps == std::pair<int, int>{1, -1}) return a - b - c;
    if (eps == std::pair<int, int>{-1, 1}) return -a + b - c;
    if (eps == std::pair<int, int>{-1, -1}) return -a - b + c;
    return a + b + c;
}

std::optional<ModuleSpec> sample_spec(const Plan& plan, const SweepConfig& cfg, Rng& rng) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        ModuleSpec spec;
        spec.family = plan.family;
        spec.eps = plan.eps;
        spec.d = plan.d >= 0 ? plan.d
                             : (plan.family == Family::E ? random_odd(rng, cfg.d_max)
                                                         : random_even(rng, cfg.d_max));
        spec.a = rng.rational(50, cfg.denominator_bound);
        spec.b = rng.rational(50, cfg.denominator_bound);
        spec.c = rng.rational(50, cfg.denominator_bound);
        if (plan.constraint == Constraint::zero_twist_param) {
            if (plan.eps == std::pair<int, int>{1, -1}) spec.a = 0;
            else if (plan.eps == std::pair<int, int>{-1, 1}) spec.b = 0;
            else spec.c = 0;
        } else if (plan.constraint == Constraint::chain_condition) {
            // Solve for c so the effective parameter sum hits (d+1)/2.
            const Rat target = Rat(spec.d + 1, 2);
            const Rat partial = o_effective_sum(plan.eps, spec.a, spec.b, Rat(0));
            const int c_sign = (plan.eps == std::pair<int, int>{1, 1} || plan.eps == std::pair<int, int>{-1, -1}) ? 1 : -1;
            spec.c = c_sign == 1 ? target - partial : partial - target;
        }
        if (irreducibility_criterion(spec)) return spec;
    }
    return std::nullopt;
}

std::vector<std::string> run_trial(const ModuleSpec& spec) {
    std::vector<std::string> problems;
    auto flag = [&](const std::string& m) { problems.push_back(m); };
    try {
        const HRep h = build_h_module(spec);
        const RelationReport hr = check_h_relations(h);
        if (!hr.ok) flag("four-generator relations failed");
        if (!hr.central_squares) {
            flag("central squares are not scalar");
        } else {
            const auto expect = central_scalars(spec);
            for (int i = 0; i < 4; ++i)
                if ((*hr.central_squares)[static_cast<std::size_t>(i)] != expect[static_cast<std::size_t>(i)]) {
                    flag("central square mismatch against closed form");
                    break;
                }
        }
        const RacahRep r = zeta_pullback(h);
        if (!check_racah_relations(r).ok) flag("pulled-back Racah relations failed");
        if (!check_t0_centralizes(h)) flag("t0 does not centralize the pullback");
        if (!check_anticommutator_identities(h)) flag("anticommutator identities failed");

        const LatticeReport lat = submodule_lattice(h);
        const PredictedLattice pred = predicted_lattice(spec);
        std::string why;
        if (!lattice_matches_prediction(lat, pred, &why)) flag("lattice mismatch: " + why);

        const bool cr = is_completely_reducible(lat);
        const bool diag_shape =
            lat.shape == LatticeShape::simple || lat.shape == LatticeShape::diamond;
        if (cr != diag_shape) flag("complete reducibility disagrees with lattice shape");
    } catch (const std::exception& e) {
        flag(std::string("exception: ") + e.what());
    }
    return problems;
}

} // namespace

SweepSummary run_sweep(const SweepConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("sweep: trials must be >= 1");
    if (cfg.d_max < 1) throw std::invalid_argument("sweep: d_max must be >= 1");
    if (!cfg.family_E && !cfg.family_O) throw std::invalid_argument("sweep: no family enabled");
    if (cfg.twists.empty()) throw std::invalid_argument("sweep: no twist enabled");

    Rng rng(cfg.seed);

    // Forced coverage of the measure-zero branches, then random fill.
    std::vector<Plan> plans;
    if (cfg.family_E) {
        for (const auto& eps : cfg.twists) plans.push_back({Family::E, eps, 1, Constraint::none});
        for (const auto& eps : cfg.twists)
            if (eps != std::pair<int, int>{1, 1})
                plans.push_back({Family::E, eps, -1, Constraint::zero_twist_param});
    }
    if (cfg.family_O) {
        for (const auto& eps : cfg.twists) plans.push_back({Family::O, eps, 0, Constraint::none});
        if (cfg.d_max >= 2)
            for (const auto& eps : cfg.twists) {
                const int d = 2 * static_cast<int>(rng.int_in(1, cfg.d_max / 2));
                plans.push_back({Family::O, eps, d, Constraint::chain_condition});
            }
    }
    if (static_cast<int>(plans.size()) > cfg.trials) plans.resize(static_cast<std::size_t>(cfg.trials));
    while (static_cast<int>(plans.size()) < cfg.trials) {
        Family fam = Family::E;
        if (cfg.family_E && cfg.family_O)
            fam = rng.int_in(0, 1) == 0 ? Family::E : Family::O;
        else if (cfg.family_O)
            fam = Family::O;
        const auto eps = cfg.twists[static_cast<std::size_t>(rng.int_in(0, static_cast<long>(cfg.twists.size()) - 1))];
        plans.push_back({fam, eps, -1, Constraint::none});
    }

    SweepSummary out;
    out.trials = cfg.trials;
    for (int i = 0; i < cfg.trials; ++i) {
        TrialRecord rec;
        rec.index = i;
        const auto spec = sample_spec(plans[static_cast<std::size_t>(i)], cfg, rng);
        if (!spec) {
            rec.skipped = true;
            rec.spec = "(no irreducible point found)";
            ++out.skipped;
            continue;
        }
        rec.spec = to_string(*spec);
        rec.problems = run_trial(*spec);
        if (rec.problems.empty())
            ++out.passed;
        else
            out.failures.push_back(std::move(rec));
    }
    return out;
}

json sweep_summary_to_json(const SweepSummary& s) {
    json failures = json::array();
    for (const auto& f : s.failures)
        failures.push_back(json{{"trial", f.index}, {"spec", f.spec}, {"problems", f.problems}});
    return json{{"trials", s.trials}, {"passed", s.passed}, {"skipped", s.skipped}, {"failures", failures}};
}

} // namespace racah
