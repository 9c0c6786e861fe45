#pragma once

#include <string>
#include <utility>
#include <vector>

#include "howe/weylmodule.hpp"

namespace howe {

/// Generators of the dual pair (a, b) = (sl_2, sl_n) inside sl_{2n}, all
/// expressed as Weyl-algebra words through E_{i,j} = q_i p_j.
///
/// b is the diagonal copy {diag(A, A) : A in sl_n}; a = <X, H, Y> is its
/// commutant with raising element Y.
struct DualPairGens {
    int n = 0;
    Operator X;  ///< sum_i E_{n+i,i}
    Operator Y;  ///< sum_i E_{i,n+i}
    Operator H;  ///< sum_i (E_{ii} - E_{n+i,n+i})
    std::vector<Operator> raise_b;    ///< X_i = E_{i,i+1} + E_{n+i,n+i+1}, i = 1..n-1
    std::vector<Operator> lower_b;    ///< X_{-i} = E_{i+1,i} + E_{n+i+1,n+i}
    std::vector<Operator> cartan_b;   ///< H_i = [X_i, X_{-i}]
    std::vector<Operator> levi_raise; ///< E_{i,j}, i < j, inside each n x n diagonal block
    Operator zprime;        ///< Z' = E_{n,1} + E_{2n,n+1}
    Operator zdoubleprime;  ///< Z'' (zero for n = 2)

    /// Generators of a paired with their report names ("X", "Y", "H").
    std::vector<std::pair<std::string, Operator>> a_generators() const;
    /// Generators of b with names "X_i", "X_-i", "H_i".
    std::vector<std::pair<std::string, Operator>> b_generators() const;
};

/// Throws InvalidParams for n < 2.
DualPairGens build_dual_pair(int n);
inline DualPairGens build_dual_pair(const ModuleParams& params) { return build_dual_pair(params.n()); }

/// H written in simple coroots: sum_j min(j, 2n - j) H_{alpha_j}.
Operator h_from_simple_coroots(int n);

/// Eigenvalues of H and H_1..H_{n-1} on a joint eigenvector.
struct SubWeight {
    Scalar theta_weight;
    std::vector<Scalar> b_weight;

    bool operator==(const SubWeight&) const = default;
};

/// Returns the eigenvalue of `op` on v, or throws NotWeightVector.
Scalar eigenvalue(const ModuleParams& params, const Operator& op, const WeightVector& v);

/// Throws NotWeightVector when v is zero or not a joint eigenvector.
SubWeight sub_weight(const ModuleParams& params, const DualPairGens& gens, const WeightVector& v);

/// Admissible indices in the offset box killed by every levi_raise generator.
std::vector<BasisIndex> levi_singulars(const ModuleParams& params, const DualPairGens& gens, int box);

}  // namespace howe
