// Acceptance suite: one PASS/FAIL line per criterion, exact comparisons only.
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "howe/branching.hpp"
#include "howe/cli.hpp"
#include "howe/dualpair.hpp"
#include "howe/singular.hpp"

using namespace howe;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) {
            detail = why;
        }
        pass = false;
    }
};

ModuleParams generic_pair(int n) { return ModuleParams::make(n, scalar(1, 2), scalar(1, 3)); }
ModuleParams nongeneric_pair(int n) { return ModuleParams::make(n, scalar(3, 2), scalar(1, 2)); }
ModuleParams equal_pair(int n) { return ModuleParams::make(n, scalar(1, 2), scalar(1, 2)); }

WeightVector random_vector(int n, Rng& rng) { return WeightVector::basis(random_admissible_index(n, 3, rng)); }

std::string lbl(int n, std::int64_t b, std::int64_t c) {
    return "n=" + std::to_string(n) + " (" + std::to_string(b) + "," + std::to_string(c) + ")";
}

Verdict weyl_gl_relations() {
    Verdict v;
    std::size_t checked = 0;
    for (int n : {2, 3}) {
        const auto p = generic_pair(n);
        Rng rng = Rng::derive(1, static_cast<std::uint64_t>(n));
        const int m = 2 * n;
        for (int pair = 0; pair < 40; ++pair) {
            const int i = static_cast<int>(rng.uniform(1, m));
            const int j = static_cast<int>(rng.uniform(1, m));
            const int k = static_cast<int>(rng.uniform(1, m));
            const int l = static_cast<int>(rng.uniform(1, m));
            const Operator weyl = op_commutator(Operator::p(j), Operator::q(i));
            Operator rhs;
            if (j == k) {
                rhs += Operator::E(i, l);
            }
            if (l == i) {
                rhs -= Operator::E(k, j);
            }
            const Operator gl = op_commutator(Operator::E(i, j), Operator::E(k, l));
            for (int s = 0; s < 20; ++s) {
                const WeightVector x = random_vector(n, rng);
                if (!(op_apply(p, weyl, x) == (i == j ? x : WeightVector{}))) {
                    v.fail("[p_" + std::to_string(j) + ",q_" + std::to_string(i) + "] on " + x.to_string());
                }
                if (!(op_apply(p, gl, x) == op_apply(p, rhs, x))) {
                    v.fail("gl relation for E_" + std::to_string(i) + std::to_string(j) + ", E_" +
                           std::to_string(k) + std::to_string(l));
                }
                checked += 2;
            }
        }
    }
    if (v.pass) {
        v.detail = std::to_string(checked) + " relation instances, n in {2,3}";
    }
    return v;
}

Verdict dual_pair_axioms() {
    Verdict v;
    for (int n : {2, 3, 4}) {
        const auto p = generic_pair(n);
        const auto g = build_dual_pair(n);
        Rng rng = Rng::derive(2, static_cast<std::uint64_t>(n));
        for (int s = 0; s < 30; ++s) {
            const WeightVector x = random_vector(n, rng);
            for (const auto& [an, a] : g.a_generators()) {
                for (const auto& [bn, b] : g.b_generators()) {
                    if (!op_apply(p, op_commutator(a, b), x).is_zero()) {
                        v.fail("[" + an + "," + bn + "] != 0, n=" + std::to_string(n));
                    }
                }
            }
            if (!(op_apply(p, op_commutator(g.H, g.Y), x) == Scalar(2) * op_apply(p, g.Y, x)) ||
                !(op_apply(p, op_commutator(g.H, g.X), x) == Scalar(-2) * op_apply(p, g.X, x)) ||
                !(op_apply(p, op_commutator(g.Y, g.X), x) == op_apply(p, g.H, x))) {
                v.fail("sl2 triple relation, n=" + std::to_string(n));
            }
        }
    }
    if (v.pass) {
        v.detail = "30 samples each for n in {2,3,4}";
    }
    return v;
}

Verdict levi_decomposition() {
    Verdict v;
    for (int n : {2, 3}) {
        std::vector<BasisIndex> expected;
        for (std::int64_t b = -3; b <= 3; ++b) {
            BasisIndex idx = BasisIndex::anchor(n);
            idx.at(n) = b;
            idx.at(n + 1) = -b;
            expected.push_back(idx);
        }
        for (const auto& p : {generic_pair(n), nongeneric_pair(n)}) {
            if (levi_singulars(p, build_dual_pair(n), 3) != expected) {
                v.fail("levi singular set differs for n=" + std::to_string(n));
            }
        }
    }
    if (v.pass) {
        v.detail = "exactly 7 indices (0,..,b,-b,..,0) for n in {2,3}";
    }
    return v;
}

Verdict oracle_equivalence() {
    Verdict v;
    std::size_t cells = 0;
    for (int n : {2, 3, 4}) {
        for (const auto& p : {generic_pair(n), nongeneric_pair(n)}) {
            const auto g = build_dual_pair(n);
            for (std::int64_t b = -3; b <= 3; ++b) {
                for (std::int64_t c = 0; c <= 4; ++c) {
                    ++cells;
                    const auto k = singular_kernel(p, g, {b, c});
                    if (k.kernel_dimension != 1) {
                        v.fail("kernel dimension " + std::to_string(k.kernel_dimension) + " at " + lbl(n, b, c));
                        continue;
                    }
                    if (Integer(static_cast<unsigned long>(k.weight_space_dimension)) != binomial(c + n - 1, n - 1)) {
                        v.fail("weight space dimension at " + lbl(n, b, c));
                    }
                    if (!(k.basis.front() == hwv_closed_form(p, {b, c}))) {
                        v.fail("closed form differs from kernel at " + lbl(n, b, c));
                    }
                }
            }
        }
    }
    if (v.pass) {
        v.detail = std::to_string(cells) + " cells, n in {2,3,4}, both parameter pairs";
    }
    return v;
}

Verdict sl2_coefficients() {
    Verdict v;
    std::size_t cells = 0;
    for (int n : {2, 3, 4}) {
        for (const auto& p : {generic_pair(n), nongeneric_pair(n)}) {
            const auto g = build_dual_pair(n);
            for (std::int64_t b = -3; b <= 3; ++b) {
                for (std::int64_t c = 0; c <= 4; ++c) {
                    ++cells;
                    const WeightVector x = hwv_closed_form(p, {b, c});
                    const Scalar xc = p.a1() + Scalar(b);
                    if (!(op_apply(p, g.X, x) == xc * hwv_closed_form(p, {b - 1, c + 1}))) {
                        v.fail("X coefficient at " + lbl(n, b, c));
                    }
                    const Scalar yc = Scalar(c) * (p.a1() - p.a2() + Scalar(2 * b + c - (n - 2))) /
                                      (p.a1() + Scalar(b + 1));
                    const WeightVector y = op_apply(p, g.Y, x);
                    const bool ok = yc.is_zero() ? y.is_zero() : y == yc * hwv_closed_form(p, {b + 1, c - 1});
                    if (!ok) {
                        v.fail("Y coefficient at " + lbl(n, b, c));
                    }
                }
            }
        }
    }
    if (v.pass) {
        v.detail = std::to_string(cells) + " cells, X and Y, both parameter pairs";
    }
    return v;
}

Verdict lower_annihilation() {
    Verdict v;
    for (int n : {4, 5}) {
        const auto g = build_dual_pair(n);
        for (const auto& p : {generic_pair(n), nongeneric_pair(n)}) {
            for (std::int64_t b = -2; b <= 2; ++b) {
                for (std::int64_t c = 0; c <= 3; ++c) {
                    const WeightVector x = hwv_closed_form(p, {b, c});
                    for (int i = 2; i <= n - 2; ++i) {
                        if (!op_apply(p, g.lower_b[i - 1], x).is_zero()) {
                            v.fail("X_-" + std::to_string(i) + " x" + lbl(n, b, c) + " != 0");
                        }
                    }
                }
            }
        }
    }
    if (v.pass) {
        v.detail = "X_-i x(b,c) = 0, 2 <= i <= n-2, n in {4,5}";
    }
    return v;
}

Verdict z_intertwiner() {
    Verdict v;
    std::size_t cases = 0;
    for (int n : {2, 3}) {
        const auto p = nongeneric_pair(n);
        const auto g = build_dual_pair(n);
        Rng rng = Rng::derive(7, static_cast<std::uint64_t>(n));
        for (std::int64_t b = -10; b <= 10; ++b) {
            const Scalar crit = critical_value(p, b);
            if (crit.sign() >= 0 || -crit > Scalar(4)) {
                continue;
            }
            const std::int64_t c = (-crit).numerator().get_si();
            ++cases;
            const auto lambdas = z_lambdas(p, b, c);
            for (std::size_t i = 0; i < lambdas.size(); ++i) {
                for (std::size_t j = i + 1; j < lambdas.size(); ++j) {
                    const Operator br = op_commutator(z_lambda(g, lambdas[i]), z_lambda(g, lambdas[j]));
                    for (int s = 0; s < 20; ++s) {
                        if (!op_apply(p, br, random_vector(n, rng)).is_zero()) {
                            v.fail("[Z_l, Z_l'] != 0 at " + lbl(n, b, c));
                        }
                    }
                }
            }
            const WeightVector image = op_apply(p, build_Z(p, g, b, c), hwv_closed_form(p, {b, 0}));
            const Scalar gamma = falling_product(p.a2() - Scalar(b), c);
            if (!(image == gamma * hwv_closed_form(p, {b, c})) || gamma.is_zero()) {
                v.fail("Z x(b,0) != gamma x(b,c) at " + lbl(n, b, c));
            }
            for (const auto& r : g.raise_b) {
                if (!op_apply(p, r, image).is_zero()) {
                    v.fail("Z x(b,0) not b-singular at " + lbl(n, b, c));
                }
            }
        }
    }
    if (cases == 0) {
        v.fail("no critical b found");
    }
    if (v.pass) {
        v.detail = std::to_string(cases) + " critical cases, n in {2,3}";
    }
    return v;
}

// Labels read off the case analysis of the correspondence theorems.
bool labels_as_stated(const ModuleParams& p, const CorrespondenceEntry& e, std::string& why) {
    const int n = p.n();
    const std::int64_t b = e.b;
    const Scalar diff = p.a1() - p.a2();
    const Scalar crit = diff + Scalar(2 * b - (n - 2));
    const Scalar theta = diff + Scalar(2 * b - (n - 1));
    auto sln = [&](std::int64_t c) {
        if (n == 2) {
            return std::vector<Scalar>{Scalar(-1) - diff - Scalar(2 * (b + c))};
        }
        std::vector<Scalar> w(n - 1, Scalar(0));
        w.front() = p.a2() - Scalar(b + c);
        w.back() = Scalar(-1) - p.a1() - Scalar(b + c);
        return w;
    };
    ModuleLabel slN{ModuleKind::SimpleHW_slN, sln(0), {}, {}};
    ModuleLabel sl2{ModuleKind::SimpleHW_sl2, {theta}, {}, {}};
    Regime regime = Regime::generic;
    if (!diff.is_integer()) {
        regime = Regime::generic;
    } else if (crit.is_zero()) {
        regime = Regime::crit_zero;
        sl2.hw = {Scalar(-1)};
    } else if (crit.sign() > 0) {
        regime = Regime::crit_pos;
        sl2 = {ModuleKind::Verma_sl2, {theta}, {-theta - Scalar(2)}, {}};
    } else {
        regime = Regime::crit_neg;
        const std::int64_t c = (-crit).numerator().get_si();
        if (n == 2) {
            slN = {ModuleKind::Verma_sl2, {-diff - Scalar(2 * b + 1)}, sln(c), {}};
        } else {
            slN = {ModuleKind::Indecomposable_len2, sln(0), sln(c), {}};
        }
    }
    if (e.regime != regime) {
        why = "regime at b=" + std::to_string(b);
        return false;
    }
    if (!(e.slN_side == slN) || !(e.sl2_side == sl2)) {
        why = "labels at b=" + std::to_string(b);
        return false;
    }
    return true;
}

Verdict theorem_tables() {
    Verdict v;
    std::size_t rows = 0;
    bool crit_zero_n2 = false;
    bool crit_zero_n3 = false;
    for (int n : {2, 3}) {
        for (const auto& p : {generic_pair(n), nongeneric_pair(n), equal_pair(n)}) {
            const auto report = build_table(p, -3, 3, 4, TableVariant::plain, 5);
            for (const auto& e : report.entries) {
                ++rows;
                std::string why;
                if (!labels_as_stated(p, e, why)) {
                    v.fail(why + ", n=" + std::to_string(n) + ", a1-a2=" + (p.a1() - p.a2()).to_string());
                }
                if (!e.passed()) {
                    v.fail("verify_entry failed at b=" + std::to_string(e.b) + ", n=" + std::to_string(n));
                }
                if (e.regime == Regime::crit_zero) {
                    const bool l1 = e.sl2_side.hw == std::vector<Scalar>{Scalar(-1)};
                    if (n == 2) {
                        crit_zero_n2 = l1 && e.slN_side.hw == std::vector<Scalar>{Scalar(-1)};
                    } else {
                        crit_zero_n3 = l1;
                    }
                }
            }
        }
    }
    if (!crit_zero_n2 || !crit_zero_n3) {
        v.fail("missing crit_zero row L(-1) <-> L(-1)");
    }
    if (v.pass) {
        v.detail = std::to_string(rows) + " rows verified at depth 5, crit_zero rows present";
    }
    return v;
}

Verdict exhaustiveness() {
    Verdict v;
    std::size_t vectors = 0;
    for (int n : {2, 3}) {
        for (const auto& p : {generic_pair(n), nongeneric_pair(n)}) {
            const ScanResult r = exhaustiveness_scan(p, build_dual_pair(n), 3);
            vectors += r.vectors;
            if (!r.pass) {
                v.fail(r.detail);
            }
        }
    }
    if (v.pass) {
        v.detail = std::to_string(vectors) + " basis vectors raised into the span of the x(b,c)";
    }
    return v;
}

std::string verify_json(int n, const char* a1, const char* a2, const char* jobs, int& code) {
    std::ostringstream out, err;
    code = cli::main_entry({"howe", "verify", "--n", std::to_string(n), "--a1", a1, "--a2", a2, "--seed", "20",
                            "--jobs", jobs},
                           out, err);
    return out.str();
}

Verdict determinism() {
    Verdict v;
    for (int n : {2, 3}) {
        for (auto [a1, a2] : {std::pair{"1/2", "1/3"}, std::pair{"3/2", "1/2"}}) {
            int c1 = 0, c2 = 0, c3 = 0;
            const std::string first = verify_json(n, a1, a2, "1", c1);
            const std::string second = verify_json(n, a1, a2, "1", c2);
            const std::string parallel = verify_json(n, a1, a2, "4", c3);
            if (c1 != 0 || c2 != 0 || c3 != 0) {
                v.fail("verify exited nonzero for n=" + std::to_string(n));
            }
            if (first.empty() || first != second || first != parallel) {
                v.fail("verify output differs for n=" + std::to_string(n) + ", a1=" + a1);
            }
        }
    }
    if (v.pass) {
        v.detail = "byte-identical verify JSON for repeated runs and jobs 1 vs 4";
    }
    return v;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
        {"weyl_gl_relations", weyl_gl_relations},
        {"dual_pair_axioms", dual_pair_axioms},
        {"levi_decomposition", levi_decomposition},
        {"oracle_equivalence", oracle_equivalence},
        {"sl2_coefficients", sl2_coefficients},
        {"lower_annihilation", lower_annihilation},
        {"z_intertwiner", z_intertwiner},
        {"theorem_tables", theorem_tables},
        {"exhaustiveness", exhaustiveness},
        {"determinism", determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception& e) {
            v.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %2zu %-20s %7.2fs  %s\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs,
                    v.detail.c_str());
        failed += v.pass ? 0 : 1;
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
