#include "howe/singular.hpp"

#include <map>
#include <numeric>

#include "howe/linalg.hpp"

namespace howe {

std::int64_t total(const KTuple& k) { return std::accumulate(k.begin(), k.end(), std::int64_t{0}); }

std::vector<KTuple> k_tuples(int n, std::int64_t c) {
    if (c < 0) {
        throw std::invalid_argument("c must be nonnegative");
    }
    std::vector<KTuple> out;
    KTuple cur(n - 1, 0);
    // Depth-first in lexicographic order.
    auto rec = [&](auto&& self, int pos, std::int64_t budget) -> void {
        if (pos == n - 1) {
            out.push_back(cur);
            return;
        }
        for (std::int64_t v = 0; v <= budget; ++v) {
            cur[pos] = v;
            self(self, pos + 1, budget - v);
        }
        cur[pos] = 0;
    };
    rec(rec, 0, c);
    return out;
}

BasisIndex k_index(int n, const HwvLabel& label, const KTuple& k) {
    const std::int64_t s = total(k);
    BasisIndex idx = BasisIndex::anchor(n);
    for (int i = 1; i <= n - 1; ++i) {
        idx.at(i) = -k[i - 1];
    }
    idx.at(n) = label.b + s;
    idx.at(n + 1) = -label.b - label.c + k[0];
    for (int i = 2; i <= n - 1; ++i) {
        idx.at(n + i) = k[i - 1];
    }
    idx.at(2 * n) = label.c - s;
    return idx;
}

KTuple k_of_index(int n, const HwvLabel& label, const BasisIndex& idx) {
    if (idx.size() != 2 * n) {
        return {};
    }
    KTuple k(n - 1);
    for (int i = 1; i <= n - 1; ++i) {
        k[i - 1] = -idx.at(i);
        if (k[i - 1] < 0) {
            return {};
        }
    }
    if (total(k) > label.c || k_index(n, label, k) != idx) {
        return {};
    }
    return k;
}

std::vector<BasisIndex> weight_space_basis(const ModuleParams& params, const HwvLabel& label) {
    std::vector<BasisIndex> out;
    for (const auto& k : k_tuples(params.n(), label.c)) {
        out.push_back(k_index(params.n(), label, k));
    }
    return out;
}

Scalar kappa(const ModuleParams& params, const HwvLabel& label, const KTuple& k) {
    const std::int64_t s = total(k);
    if (s > label.c) {
        throw std::invalid_argument("kappa: |k| exceeds c");
    }
    Integer binomials = 1;
    std::int64_t prefix = k.empty() ? 0 : k[0];
    for (std::size_t t = 1; t < k.size(); ++t) {
        binomials *= binomial(prefix + k[t], prefix);
        prefix += k[t];
    }
    Scalar out(binomials, factorial(s));
    const Scalar shift = params.a1() + Scalar(label.b);
    for (std::int64_t j = 1; j <= s; ++j) {
        out *= Scalar(label.c + 1 - j);
        out /= shift + Scalar(j);
    }
    return out;
}

WeightVector hwv_closed_form(const ModuleParams& params, const HwvLabel& label) {
    WeightVector v;
    for (const auto& k : k_tuples(params.n(), label.c)) {
        v.add(k_index(params.n(), label, k), kappa(params, label, k));
    }
    return v;
}

KernelResult singular_kernel(const ModuleParams& params, const DualPairGens& gens, const HwvLabel& label) {
    const auto basis = weight_space_basis(params, label);
    KernelResult result;
    result.weight_space_dimension = basis.size();

    // Images of each basis vector under each raising generator; rows are
    // (generator, target index) pairs in canonical order.
    std::vector<std::vector<WeightVector>> images(gens.raise_b.size());
    std::map<std::pair<std::size_t, BasisIndex>, std::size_t> row_of;
    for (std::size_t g = 0; g < gens.raise_b.size(); ++g) {
        for (const auto& idx : basis) {
            images[g].push_back(op_apply(params, gens.raise_b[g], WeightVector::basis(idx)));
            for (const auto& [target, c] : images[g].back()) {
                row_of.try_emplace({g, target}, 0);
            }
        }
    }
    std::size_t row = 0;
    for (auto& [key, r] : row_of) {
        r = row++;
    }
    Matrix m(row_of.size(), basis.size());
    for (std::size_t g = 0; g < images.size(); ++g) {
        for (std::size_t col = 0; col < basis.size(); ++col) {
            for (const auto& [target, c] : images[g][col]) {
                m(row_of.at({g, target}), col) = c;
            }
        }
    }

    const BasisIndex x0 = k_index(params.n(), label, KTuple(params.n() - 1, 0));
    for (const auto& kv : kernel_basis(m)) {
        WeightVector v;
        for (std::size_t col = 0; col < basis.size(); ++col) {
            v.add(basis[col], kv[col]);
        }
        const Scalar lead = v.coefficient(x0);
        if (!lead.is_zero()) {
            v *= Scalar(1) / lead;
        }
        result.basis.push_back(std::move(v));
    }
    result.kernel_dimension = result.basis.size();
    return result;
}

WeightVector hwv_bruteforce(const ModuleParams& params, const HwvLabel& label) {
    if (label.c < 0) {
        throw std::invalid_argument("c must be nonnegative");
    }
    const auto result = singular_kernel(params, build_dual_pair(params), label);
    if (result.kernel_dimension != 1) {
        throw StructuralError("singular kernel at (b=" + std::to_string(label.b) + ", c=" +
                              std::to_string(label.c) + ") has dimension " +
                              std::to_string(result.kernel_dimension) + ", expected 1");
    }
    const BasisIndex x0 = k_index(params.n(), label, KTuple(params.n() - 1, 0));
    if (result.basis.front().coefficient(x0).is_zero()) {
        throw StructuralError("singular vector has zero x_0 coefficient");
    }
    return result.basis.front();
}

bool check_lower_annihilation(const ModuleParams& params, const DualPairGens& gens, const HwvLabel& label) {
    const WeightVector x = hwv_closed_form(params, label);
    for (int i = 2; i <= params.n() - 2; ++i) {
        if (!op_apply(params, gens.lower_b[i - 1], x).is_zero()) {
            return false;
        }
    }
    return true;
}

}  // namespace howe
