#include "howe/dualpair.hpp"

#include <algorithm>

namespace howe {

DualPairGens build_dual_pair(int n) {
    if (n < 2) {
        throw InvalidParams("n must be at least 2");
    }
    DualPairGens g;
    g.n = n;
    for (int i = 1; i <= n; ++i) {
        g.X += Operator::E(n + i, i);
        g.Y += Operator::E(i, n + i);
        g.H += Operator::E(i, i) - Operator::E(n + i, n + i);
    }
    for (int i = 1; i < n; ++i) {
        g.raise_b.push_back(Operator::E(i, i + 1) + Operator::E(n + i, n + i + 1));
        g.lower_b.push_back(Operator::E(i + 1, i) + Operator::E(n + i + 1, n + i));
        g.cartan_b.push_back(Operator::E(i, i) - Operator::E(i + 1, i + 1) + Operator::E(n + i, n + i) -
                             Operator::E(n + i + 1, n + i + 1));
    }
    for (int block = 0; block < 2; ++block) {
        const int base = block * n;
        for (int i = 1; i <= n; ++i) {
            for (int j = i + 1; j <= n; ++j) {
                g.levi_raise.push_back(Operator::E(base + i, base + j));
            }
        }
    }
    g.zprime = Operator::E(n, 1) + Operator::E(2 * n, n + 1);
    for (int i = 1; i <= n - 2; ++i) {
        g.zdoubleprime += (Operator::E(i + 1, 1) + Operator::E(n + i + 1, n + 1)) *
                          (Operator::E(n, i + 1) + Operator::E(2 * n, n + i + 1));
    }
    return g;
}

std::vector<std::pair<std::string, Operator>> DualPairGens::a_generators() const {
    return {{"X", X}, {"Y", Y}, {"H", H}};
}

std::vector<std::pair<std::string, Operator>> DualPairGens::b_generators() const {
    std::vector<std::pair<std::string, Operator>> out;
    for (std::size_t i = 0; i < raise_b.size(); ++i) {
        const std::string k = std::to_string(i + 1);
        out.emplace_back("X_" + k, raise_b[i]);
        out.emplace_back("X_-" + k, lower_b[i]);
        out.emplace_back("H_" + k, cartan_b[i]);
    }
    return out;
}

Operator h_from_simple_coroots(int n) {
    Operator h;
    for (int j = 1; j < 2 * n; ++j) {
        const Operator coroot = Operator::E(j, j) - Operator::E(j + 1, j + 1);
        h += Scalar(std::min(j, 2 * n - j)) * coroot;
    }
    return h;
}

Scalar eigenvalue(const ModuleParams& params, const Operator& op, const WeightVector& v) {
    if (v.is_zero()) {
        throw NotWeightVector("not an (h_theta + h_n)-weight vector: zero vector");
    }
    const WeightVector image = op_apply(params, op, v);
    const auto& [idx, c] = *v.begin();
    const Scalar lambda = image.coefficient(idx) / c;
    if (!(image == lambda * v)) {
        throw NotWeightVector("not an (h_theta + h_n)-weight vector");
    }
    return lambda;
}

SubWeight sub_weight(const ModuleParams& params, const DualPairGens& gens, const WeightVector& v) {
    SubWeight w;
    w.theta_weight = eigenvalue(params, gens.H, v);
    for (const auto& h : gens.cartan_b) {
        w.b_weight.push_back(eigenvalue(params, h, v));
    }
    return w;
}

std::vector<BasisIndex> levi_singulars(const ModuleParams& params, const DualPairGens& gens, int box) {
    std::vector<BasisIndex> out;
    for (const auto& idx : admissible_in_box(params.n(), box)) {
        const auto v = WeightVector::basis(idx);
        const bool killed = std::all_of(gens.levi_raise.begin(), gens.levi_raise.end(),
                                        [&](const Operator& e) { return op_apply(params, e, v).is_zero(); });
        if (killed) {
            out.push_back(idx);
        }
    }
    return out;
}

}  // namespace howe
