#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "howe/dualpair.hpp"
#include "howe/weylmodule.hpp"

namespace howe {

/// A computed identity that must hold did not.
class StructuralError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Label (b, c) of the b^+-singular vector x(b, c), c >= 0.
struct HwvLabel {
    std::int64_t b = 0;
    std::int64_t c = 0;

    auto operator<=>(const HwvLabel&) const = default;
};

/// k = (k_1, ..., k_{n-1}) with nonnegative entries.
using KTuple = std::vector<std::int64_t>;

std::int64_t total(const KTuple& k);

/// All k in N^{n-1} with |k| <= c, lexicographic.
std::vector<KTuple> k_tuples(int n, std::int64_t c);

/// Offsets of x_k(b, c):
/// (-k_1, .., -k_{n-1}, b + |k|, -b - c + k_1, k_2, .., k_{n-1}, c - |k|).
BasisIndex k_index(int n, const HwvLabel& label, const KTuple& k);

/// Recovers k from an index of the form x_k(b, c); empty optional-like
/// result (size 0) when the index is not of that form for `label`.
KTuple k_of_index(int n, const HwvLabel& label, const BasisIndex& idx);

/// The (h_theta + h_n)-weight space containing x(b, c); size C(c+n-1, n-1).
std::vector<BasisIndex> weight_space_basis(const ModuleParams& params, const HwvLabel& label);

/// Closed-form ratio lambda_k / lambda_0.
Scalar kappa(const ModuleParams& params, const HwvLabel& label, const KTuple& k);

/// x(b, c) = sum_k kappa(k) x_k(b, c).
WeightVector hwv_closed_form(const ModuleParams& params, const HwvLabel& label);

/// Joint kernel of X_1..X_{n-1} on one weight space.
struct KernelResult {
    std::size_t weight_space_dimension = 0;
    std::size_t kernel_dimension = 0;
    /// Kernel basis vectors, each normalized so its x_0(b, c) coefficient is
    /// 1 when that coefficient is nonzero.
    std::vector<WeightVector> basis;
};

/// Builds the exact matrices of the raising generators from the weight space
/// into the union of their images and solves for the joint kernel.
KernelResult singular_kernel(const ModuleParams& params, const DualPairGens& gens, const HwvLabel& label);

/// Independent oracle for hwv_closed_form. Throws StructuralError unless the
/// kernel is one-dimensional with a nonzero x_0 coefficient.
WeightVector hwv_bruteforce(const ModuleParams& params, const HwvLabel& label);

/// X_{-i} x(b, c) == 0 for 2 <= i <= n-2 (vacuous for n <= 3).
bool check_lower_annihilation(const ModuleParams& params, const DualPairGens& gens, const HwvLabel& label);

}  // namespace howe
