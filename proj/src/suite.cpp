#include "howe/suite.hpp"

#include <functional>
#include <set>
#include <sstream>

#include "howe/branching.hpp"
#include "howe/dualpair.hpp"
#include "howe/parallel.hpp"
#include "howe/singular.hpp"

namespace howe {

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) {
            detail = why;
        }
        pass = false;
    }
};

using CheckFn = std::function<Outcome(const SuiteConfig&, const DualPairGens&, Rng&)>;

struct Registered {
    std::string module;
    std::string name;
    CheckFn fn;
};

std::vector<WeightVector> sample_vectors(const SuiteConfig& cfg, Rng& rng, int count) {
    std::vector<WeightVector> out;
    for (int s = 0; s < count; ++s) {
        out.push_back(WeightVector::basis(random_admissible_index(cfg.params.n(), cfg.box, rng)));
    }
    return out;
}

bool agree_on(const ModuleParams& params, const Operator& a, const Operator& b, const std::vector<WeightVector>& vs,
              std::string* where = nullptr) {
    for (const auto& v : vs) {
        if (!(op_apply(params, a, v) == op_apply(params, b, v))) {
            if (where) {
                *where = v.to_string();
            }
            return false;
        }
    }
    return true;
}

std::string grid_text(const SuiteConfig& c) {
    return "b in [" + std::to_string(c.b_min) + "," + std::to_string(c.b_max) + "], c in [0," +
           std::to_string(c.c_max) + "]";
}

template <class F>
void for_grid(const SuiteConfig& cfg, F&& f) {
    for (std::int64_t b = cfg.b_min; b <= cfg.b_max; ++b) {
        for (std::int64_t c = 0; c <= cfg.c_max; ++c) {
            f(HwvLabel{b, c});
        }
    }
}

Scalar random_scalar(Rng& rng) { return scalar(rng.uniform(-50, 50), rng.uniform(1, 50)); }

// exactnum

Outcome field_axioms(const SuiteConfig& cfg, const DualPairGens&, Rng& rng) {
    Outcome o;
    for (int s = 0; s < cfg.samples; ++s) {
        const Scalar x = random_scalar(rng), y = random_scalar(rng), z = random_scalar(rng);
        if (!((x + y) + z == x + (y + z) && (x * y) * z == x * (y * z) && x * (y + z) == x * y + x * z &&
              x + y == y + x && x * y == y * x && x - x == Scalar(0))) {
            o.fail("axiom violated at " + x.to_string() + ", " + y.to_string() + ", " + z.to_string());
        }
        if (!x.is_zero() && !(x * (Scalar(1) / x) == Scalar(1))) {
            o.fail("inverse failed at " + x.to_string());
        }
    }
    if (o.pass) {
        o.detail = std::to_string(cfg.samples) + " random triples";
    }
    return o;
}

Outcome falling_split(const SuiteConfig& cfg, const DualPairGens&, Rng& rng) {
    Outcome o;
    for (int s = 0; s < cfg.samples; ++s) {
        const Scalar x = random_scalar(rng);
        const auto a = rng.uniform(0, 8), b = rng.uniform(0, 8);
        if (!(falling_product(x, a + b) == falling_product(x, a) * falling_product(x - Scalar(a), b))) {
            o.fail("split failed at s=" + x.to_string());
        }
    }
    if (o.pass) {
        o.detail = "falling_product(s,a+b) = falling_product(s,a) falling_product(s-a,b) on " +
                   std::to_string(cfg.samples) + " samples";
    }
    return o;
}

// weylmodule

Outcome weyl_relations(const SuiteConfig& cfg, const DualPairGens&, Rng& rng) {
    Outcome o;
    const auto& p = cfg.params;
    const auto vs = sample_vectors(cfg, rng, 20);
    for (int s = 0; s < cfg.samples; ++s) {
        const int i = static_cast<int>(rng.uniform(1, p.m()));
        const int j = static_cast<int>(rng.uniform(1, p.m()));
        const Operator delta = i == j ? Operator::identity() : Operator::zero();
        std::string where;
        if (!agree_on(p, op_commutator(Operator::p(j), Operator::q(i)), delta, vs, &where)) {
            o.fail("[p_" + std::to_string(j) + ",q_" + std::to_string(i) + "] wrong on " + where);
        }
        if (!agree_on(p, op_commutator(Operator::q(i), Operator::q(j)), Operator::zero(), vs) ||
            !agree_on(p, op_commutator(Operator::p(i), Operator::p(j)), Operator::zero(), vs)) {
            o.fail("q or p generators fail to commute");
        }
    }
    if (o.pass) {
        o.detail = std::to_string(cfg.samples) + " generator pairs x 20 vectors";
    }
    return o;
}

Outcome gl_relations(const SuiteConfig& cfg, const DualPairGens&, Rng& rng) {
    Outcome o;
    const auto& p = cfg.params;
    for (int s = 0; s < cfg.samples; ++s) {
        int idx[4];
        for (int& v : idx) {
            v = static_cast<int>(rng.uniform(1, p.m()));
        }
        const auto [i, j, k, l] = idx;
        Operator expected;
        if (j == k) {
            expected += Operator::E(i, l);
        }
        if (l == i) {
            expected -= Operator::E(k, j);
        }
        const auto vs = sample_vectors(cfg, rng, 20);
        if (!agree_on(p, op_commutator(Operator::E(i, j), Operator::E(k, l)), expected, vs)) {
            std::ostringstream why;
            why << "[E_" << i << j << ",E_" << k << l << "] mismatch";
            o.fail(why.str());
        }
    }
    if (o.pass) {
        o.detail = std::to_string(cfg.samples) + " pairs x 20 vectors";
    }
    return o;
}

Outcome degree_one(const SuiteConfig& cfg, const DualPairGens&, Rng&) {
    Outcome o;
    std::set<std::vector<Scalar>> seen;
    const auto all = admissible_in_box(cfg.params.n(), cfg.box);
    for (const auto& idx : all) {
        if (!seen.insert(h_weight(cfg.params, WeightVector::basis(idx))).second) {
            o.fail("two basis vectors share a weight at " + idx.to_string());
        }
    }
    if (o.pass) {
        o.detail = std::to_string(all.size()) + " admissible indices in box " + std::to_string(cfg.box) +
                   ", all weights distinct";
    }
    return o;
}

Outcome root_injectivity(const SuiteConfig& cfg, const DualPairGens&, Rng& rng) {
    Outcome o;
    const auto& p = cfg.params;
    const int n = p.n();
    const int count = std::max(cfg.samples, 50);
    for (const auto& v : sample_vectors(cfg, rng, count)) {
        if (apply_E(p, n, n + 1, v).is_zero() || apply_E(p, n + 1, n, v).is_zero()) {
            o.fail("E_{n,n+1} or E_{n+1,n} kills " + v.to_string());
        }
    }
    if (o.pass) {
        o.detail = "nonzero on " + std::to_string(count) + " random basis vectors";
    }
    return o;
}

Outcome admissibility_preserved(const SuiteConfig& cfg, const DualPairGens&, Rng& rng) {
    Outcome o;
    const auto& p = cfg.params;
    for (const auto& v : sample_vectors(cfg, rng, cfg.samples)) {
        for (int i = 1; i <= p.m(); ++i) {
            for (int j = 1; j <= p.m(); ++j) {
                for (const auto& [idx, c] : apply_E(p, i, j, v)) {
                    if (!is_admissible(idx)) {
                        o.fail("E_" + std::to_string(i) + "," + std::to_string(j) + " leaves P_a at " +
                               idx.to_string());
                    }
                }
            }
        }
    }
    if (o.pass) {
        o.detail = "all E_{i,j} on " + std::to_string(cfg.samples) + " vectors";
    }
    return o;
}

// dualpair

Outcome commutant(const SuiteConfig& cfg, const DualPairGens& g, Rng& rng) {
    Outcome o;
    const auto vs = sample_vectors(cfg, rng, cfg.samples);
    for (const auto& [an, a] : g.a_generators()) {
        for (const auto& [bn, b] : g.b_generators()) {
            if (!agree_on(cfg.params, op_commutator(a, b), Operator::zero(), vs)) {
                o.fail("[" + an + "," + bn + "] != 0");
            }
        }
    }
    if (o.pass) {
        o.detail = "[a, b] = 0 on " + std::to_string(cfg.samples) + " vectors";
    }
    return o;
}

Outcome sl2_triple(const SuiteConfig& cfg, const DualPairGens& g, Rng& rng) {
    Outcome o;
    const auto vs = sample_vectors(cfg, rng, cfg.samples);
    const auto& p = cfg.params;
    if (!agree_on(p, op_commutator(g.H, g.Y), Scalar(2) * g.Y, vs)) {
        o.fail("[H,Y] != 2Y");
    }
    if (!agree_on(p, op_commutator(g.H, g.X), Scalar(-2) * g.X, vs)) {
        o.fail("[H,X] != -2X");
    }
    if (!agree_on(p, op_commutator(g.Y, g.X), g.H, vs)) {
        o.fail("[Y,X] != H");
    }
    if (!agree_on(p, g.H, h_from_simple_coroots(p.n()), vs)) {
        o.fail("H differs from its simple-coroot expansion");
    }
    if (o.pass) {
        o.detail = "[H,Y]=2Y, [H,X]=-2X, [Y,X]=H, H = sum min(j,2n-j) H_alpha_j on " +
                   std::to_string(cfg.samples) + " vectors";
    }
    return o;
}

Outcome chevalley(const SuiteConfig& cfg, const DualPairGens& g, Rng& rng) {
    Outcome o;
    const auto vs = sample_vectors(cfg, rng, cfg.samples);
    const auto& p = cfg.params;
    const int r = p.n() - 1;
    for (int i = 0; i < r; ++i) {
        if (!agree_on(p, g.cartan_b[i], op_commutator(g.raise_b[i], g.lower_b[i]), vs)) {
            o.fail("H_i != [X_i, X_-i]");
        }
        for (int j = 0; j < r; ++j) {
            const int cartan = i == j ? 2 : (std::abs(i - j) == 1 ? -1 : 0);
            if (!agree_on(p, op_commutator(g.cartan_b[i], g.raise_b[j]), Scalar(cartan) * g.raise_b[j], vs) ||
                !agree_on(p, op_commutator(g.cartan_b[i], g.lower_b[j]), Scalar(-cartan) * g.lower_b[j], vs)) {
                o.fail("[H_i, X_+-j] wrong");
            }
            const Operator delta = i == j ? g.cartan_b[i] : Operator::zero();
            if (!agree_on(p, op_commutator(g.raise_b[i], g.lower_b[j]), delta, vs)) {
                o.fail("[X_i, X_-j] wrong");
            }
            if (i == j) {
                continue;
            }
            if (cartan == -1) {
                const Operator up = op_commutator(g.raise_b[i], op_commutator(g.raise_b[i], g.raise_b[j]));
                const Operator down = op_commutator(g.lower_b[i], op_commutator(g.lower_b[i], g.lower_b[j]));
                if (!agree_on(p, up, Operator::zero(), vs) || !agree_on(p, down, Operator::zero(), vs)) {
                    o.fail("Serre relation fails");
                }
            } else if (!agree_on(p, op_commutator(g.raise_b[i], g.raise_b[j]), Operator::zero(), vs)) {
                o.fail("distant generators fail to commute");
            }
        }
    }
    if (o.pass) {
        o.detail = "Chevalley and Serre relations of sl_" + std::to_string(p.n()) + " on " +
                   std::to_string(cfg.samples) + " vectors";
    }
    return o;
}

Outcome levi(const SuiteConfig& cfg, const DualPairGens& g, Rng&) {
    Outcome o;
    const int n = cfg.params.n();
    std::vector<BasisIndex> expected;
    for (std::int64_t b = -cfg.box; b <= cfg.box; ++b) {
        BasisIndex idx = BasisIndex::anchor(n);
        idx.at(n) = b;
        idx.at(n + 1) = -b;
        expected.push_back(idx);
    }
    std::sort(expected.begin(), expected.end());
    if (levi_singulars(cfg.params, g, cfg.box) != expected) {
        o.fail("levi singular set differs from {(0,..,b,-b,..,0)}");
    } else {
        o.detail = std::to_string(expected.size()) + " singular indices in box " + std::to_string(cfg.box);
    }
    return o;
}

Outcome z_commute(const SuiteConfig& cfg, const DualPairGens& g, Rng& rng) {
    Outcome o;
    const auto vs = sample_vectors(cfg, rng, std::max(cfg.samples, 20));
    if (!agree_on(cfg.params, op_commutator(g.zprime, g.zdoubleprime), Operator::zero(), vs)) {
        o.fail("[Z', Z''] != 0");
    }
    const Scalar l1 = random_scalar(rng), l2 = random_scalar(rng);
    if (!agree_on(cfg.params, op_commutator(z_lambda(g, l1), z_lambda(g, l2)), Operator::zero(), vs)) {
        o.fail("[Z_l, Z_l'] != 0");
    }
    if (o.pass) {
        o.detail = "[Z',Z''] = 0 and [Z_l,Z_l'] = 0 on " + std::to_string(vs.size()) + " vectors";
    }
    return o;
}

// singular

Outcome oracle_equivalence(const SuiteConfig& cfg, const DualPairGens& g, Rng&) {
    Outcome o;
    const auto& p = cfg.params;
    for_grid(cfg, [&](const HwvLabel& l) {
        const auto k = singular_kernel(p, g, l);
        const auto expected_dim = binomial(l.c + p.n() - 1, p.n() - 1);
        if (k.kernel_dimension != 1 || Integer(static_cast<unsigned long>(k.weight_space_dimension)) != expected_dim) {
            o.fail("dimension mismatch at (" + std::to_string(l.b) + "," + std::to_string(l.c) + ")");
        } else if (!(k.basis.front() == hwv_closed_form(p, l))) {
            o.fail("closed form differs from kernel at (" + std::to_string(l.b) + "," + std::to_string(l.c) + ")");
        }
    });
    if (o.pass) {
        o.detail = "closed form = kernel oracle, kernel dimension 1, " + grid_text(cfg);
    }
    return o;
}

Outcome hwv_structure(const SuiteConfig& cfg, const DualPairGens& g, Rng&) {
    Outcome o;
    const auto& p = cfg.params;
    const int n = p.n();
    for_grid(cfg, [&](const HwvLabel& l) {
        const WeightVector x = hwv_closed_form(p, l);
        for (const auto& r : g.raise_b) {
            if (!op_apply(p, r, x).is_zero()) {
                o.fail("raise_b does not kill x(" + std::to_string(l.b) + "," + std::to_string(l.c) + ")");
            }
        }
        const SubWeight w = sub_weight(p, g, x);
        if (!(w.theta_weight == theta_weight(p, l.b)) || w.b_weight != sln_weight(p, l.b, l.c)) {
            o.fail("weight mismatch at (" + std::to_string(l.b) + "," + std::to_string(l.c) + ")");
        }
        KTuple last(n - 1, 0);
        last[0] = l.c;
        if (x.coefficient(k_index(n, l, KTuple(n - 1, 0))).is_zero() || x.coefficient(k_index(n, l, last)).is_zero()) {
            o.fail("support misses the k0/k1 indices");
        }
        if (!check_lower_annihilation(p, g, l)) {
            o.fail("X_-i x(b,c) != 0 for some 2 <= i <= n-2");
        }
    });
    if (o.pass) {
        o.detail = "annihilation, weights, k0/k1 support, lower annihilation on " + grid_text(cfg);
    }
    return o;
}

// branching

Outcome sl2_coefficients(const SuiteConfig& cfg, const DualPairGens& g, Rng&) {
    Outcome o;
    const auto& p = cfg.params;
    const std::pair<Sl2Gen, const Operator*> gens[] = {{Sl2Gen::X, &g.X}, {Sl2Gen::Y, &g.Y}, {Sl2Gen::H, &g.H}};
    for_grid(cfg, [&](const HwvLabel& l) {
        const WeightVector x = hwv_closed_form(p, l);
        for (const auto& [gen, op] : gens) {
            const Sl2Action act = sl2_on_hwv(p, gen, l);
            const WeightVector image = op_apply(p, *op, x);
            const WeightVector expected = act.target ? act.coeff * hwv_closed_form(p, *act.target) : WeightVector{};
            if (!(image == expected)) {
                o.fail("a-action mismatch at (" + std::to_string(l.b) + "," + std::to_string(l.c) + ")");
            }
        }
        const Scalar crit = p.a1() - p.a2() + Scalar(2 * l.b + l.c - (p.n() - 2));
        const bool killed = op_apply(p, g.Y, x).is_zero();
        if (killed != (l.c == 0 || crit.is_zero())) {
            o.fail("Y-kill criterion violated");
        }
        if ((p.a1() + Scalar(l.b)).is_zero()) {
            o.fail("X coefficient vanished");
        }
    });
    if (o.pass) {
        o.detail = "X, Y, H on x(b,c) match closed coefficients; Y-kill criterion; " + grid_text(cfg);
    }
    return o;
}

Outcome z_intertwining(const SuiteConfig& cfg, const DualPairGens& g, Rng&) {
    Outcome o;
    const auto& p = cfg.params;
    int count = 0;
    if (!p.generic()) {
        for (std::int64_t b = cfg.b_min; b <= cfg.b_max; ++b) {
            const Scalar crit = critical_value(p, b);
            if (crit.sign() >= 0) {
                continue;
            }
            const std::int64_t c = -crit.numerator().get_si();
            if (c > cfg.c_max) {
                continue;
            }
            try {
                apply_Z_check(p, g, b, c);
                ++count;
            } catch (const StructuralError& e) {
                o.fail(e.what());
            }
        }
    }
    if (o.pass) {
        o.detail = std::to_string(count) + " intertwiner identities Z x(b,0) = gamma x(b,c)";
    }
    return o;
}

Outcome weight_separation(const SuiteConfig& cfg, const DualPairGens& g, Rng&) {
    Outcome o;
    const auto& p = cfg.params;
    std::map<std::pair<Scalar, std::vector<Scalar>>, HwvLabel> seen;
    for_grid(cfg, [&](const HwvLabel& l) {
        const SubWeight w = sub_weight(p, g, hwv_closed_form(p, l));
        auto [it, fresh] = seen.emplace(std::make_pair(w.theta_weight, w.b_weight), l);
        if (!fresh) {
            o.fail("labels share a joint weight");
        }
        for (const auto& [key, other] : seen) {
            if (other.b != l.b && key.first == w.theta_weight) {
                o.fail("distinct b with equal h_theta-weight");
            }
        }
    });
    if (o.pass) {
        o.detail = "joint weights of x(b,c) pairwise distinct; h_theta-weight determines b";
    }
    return o;
}

Outcome table(const SuiteConfig& cfg, const DualPairGens&, Rng&) {
    Outcome o;
    const auto report = build_table(cfg.params, cfg.b_min, cfg.b_max, cfg.c_max, TableVariant::bi_semisimplified,
                                    cfg.depth, 1, cfg.seed);
    for (const auto& e : report.entries) {
        for (const auto& c : e.checks) {
            if (!c.pass) {
                o.fail("b=" + std::to_string(e.b) + " " + c.name + ": " + c.detail);
            }
        }
    }
    if (o.pass) {
        o.detail = std::to_string(report.entries.size()) + " entries verified at depth " + std::to_string(cfg.depth);
    }
    return o;
}

Outcome exhaustive(const SuiteConfig& cfg, const DualPairGens& g, Rng&) {
    const auto scan = exhaustiveness_scan(cfg.params, g, cfg.box);
    return {scan.pass, scan.detail};
}

const std::vector<Registered>& registry() {
    static const std::vector<Registered> checks = {
        {"exactnum", "field_axioms", field_axioms},
        {"exactnum", "falling_product_split", falling_split},
        {"weylmodule", "weyl_relations", weyl_relations},
        {"weylmodule", "gl_relations", gl_relations},
        {"weylmodule", "degree_one", degree_one},
        {"weylmodule", "root_injectivity", root_injectivity},
        {"weylmodule", "admissibility_preserved", admissibility_preserved},
        {"dualpair", "commutant", commutant},
        {"dualpair", "sl2_triple", sl2_triple},
        {"dualpair", "chevalley_relations", chevalley},
        {"dualpair", "levi_singulars", levi},
        {"dualpair", "z_commute", z_commute},
        {"singular", "oracle_equivalence", oracle_equivalence},
        {"singular", "hwv_structure", hwv_structure},
        {"branching", "sl2_coefficients", sl2_coefficients},
        {"branching", "z_intertwining", z_intertwining},
        {"branching", "weight_separation", weight_separation},
        {"branching", "table", table},
        {"branching", "exhaustiveness", exhaustive},
    };
    return checks;
}

}  // namespace

std::vector<SuiteCheck> run_suite(const SuiteConfig& config) {
    const DualPairGens gens = build_dual_pair(config.params);
    const auto& checks = registry();
    return parallel_map(checks.size(), config.jobs, [&](std::size_t i) {
        Rng rng = Rng::derive(config.seed, i);
        SuiteCheck out{checks[i].module, checks[i].name, false, ""};
        try {
            const Outcome o = checks[i].fn(config, gens, rng);
            out.pass = o.pass;
            out.detail = o.detail;
        } catch (const std::exception& e) {
            out.detail = std::string("exception: ") + e.what();
        }
        return out;
    });
}

Json suite_json(const SuiteConfig& config, const std::vector<SuiteCheck>& checks) {
    Json list = Json::array();
    bool passed = true;
    for (const auto& c : checks) {
        list.push_back({{"module", c.module}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        passed = passed && c.pass;
    }
    return {{"params", params_json(config.params)},
            {"seed", config.seed},
            {"config",
             {{"b_min", config.b_min},
              {"b_max", config.b_max},
              {"c_max", config.c_max},
              {"depth", config.depth},
              {"box", config.box},
              {"samples", config.samples}}},
            {"checks", list},
            {"passed", passed}};
}

std::string suite_markdown(const SuiteConfig& config, const std::vector<SuiteCheck>& checks) {
    std::ostringstream out;
    const auto& p = config.params;
    out << "# Verification suite\n\nn = " << p.n() << ", a1 = " << p.a1().to_string() << ", a2 = "
        << p.a2().to_string() << ", seed = " << config.seed << "\n\n| module | check | status | detail |\n"
        << "|---|---|---|---|\n";
    for (const auto& c : checks) {
        out << "| " << c.module << " | " << c.name << " | " << (c.pass ? "pass" : "FAIL") << " | " << c.detail
            << " |\n";
    }
    return out.str();
}

}  // namespace howe
