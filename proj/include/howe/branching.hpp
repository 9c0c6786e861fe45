#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "howe/dualpair.hpp"
#include "howe/singular.hpp"

namespace howe {

enum class ModuleKind { SimpleHW_slN, SimpleHW_sl2, Verma_sl2, Indecomposable_len2 };
enum class Regime { generic, crit_zero, crit_pos, crit_neg };
enum class TableVariant { plain, semisimplified, bi_semisimplified };

std::string to_string(ModuleKind kind);
std::string to_string(Regime regime);
/// "plain", "s", "ss".
std::string to_string(TableVariant variant);
/// Accepts "plain", "s", "ss" and the long names.
TableVariant parse_variant(const std::string& text);

/// A module named by highest weight.
///
/// For length-2 objects `submodule_hw` is the highest weight of the simple
/// submodule. `direct_sum_with` is only used by the bi-semisimplified table,
/// where a Verma module is replaced by the sum of its two factors.
struct ModuleLabel {
    ModuleKind kind = ModuleKind::SimpleHW_slN;
    std::vector<Scalar> hw;
    std::vector<Scalar> submodule_hw;
    std::vector<Scalar> direct_sum_with;

    bool operator==(const ModuleLabel&) const = default;
};

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// One simple b-module of the semisimplification: L(hw) generated by x(b, c).
struct SlnFactor {
    std::int64_t c = 0;
    std::vector<Scalar> hw;
};

struct CorrespondenceEntry {
    std::int64_t b = 0;
    Regime regime = Regime::generic;
    Scalar critical_value;
    ModuleLabel slN_side;
    ModuleLabel sl2_side;
    std::vector<SlnFactor> slN_factors;
    std::vector<CheckResult> checks;

    bool passed() const;
};

struct BranchingReport {
    explicit BranchingReport(ModuleParams p) : params(std::move(p)) {}

    ModuleParams params;
    TableVariant variant = TableVariant::plain;
    std::uint64_t seed = 0;
    int depth = 0;
    std::int64_t c_max = 0;
    bool one_to_one = true;
    std::vector<CorrespondenceEntry> entries;

    bool passed() const;
};

/// a1 - a2 + 2b - (n - 2). Its sign selects the non-generic regime.
Scalar critical_value(const ModuleParams& params, std::int64_t b);

/// H-eigenvalue of x(b, c): a1 - a2 + 2b - (n - 1).
Scalar theta_weight(const ModuleParams& params, std::int64_t b);

/// h_n-weight of x(b, c): (a2-b-c, 0, .., 0, -1-a1-b-c) for n > 2 and
/// (-1-a1+a2-2(b+c)) for n = 2.
std::vector<Scalar> sln_weight(const ModuleParams& params, std::int64_t b, std::int64_t c);

enum class Sl2Gen { X, Y, H };

/// Predicted action of an a-generator on x(b, c): gen x(b,c) = coeff x(target).
/// `target` is empty exactly when the coefficient is zero.
struct Sl2Action {
    Scalar coeff;
    std::optional<HwvLabel> target;
};

Sl2Action sl2_on_hwv(const ModuleParams& params, Sl2Gen gen, const HwvLabel& label);

/// Z_lambda = Z' + lambda Z''.
Operator z_lambda(const DualPairGens& gens, const Scalar& lambda);

/// The factor lambdas 1/(a1+b+i), i = 1..c.
std::vector<Scalar> z_lambdas(const ModuleParams& params, std::int64_t b, std::int64_t c);

/// Z = Z_1 ... Z_c with Z_i = Z_{1/(a1+b+i)}; the identity for c = 0.
Operator build_Z(const ModuleParams& params, const DualPairGens& gens, std::int64_t b, std::int64_t c);

/// Checks Z x(b,0) == gamma x(b,c) with gamma = (a2-b)(a2-b-1)..(a2-b-c+1)
/// and returns gamma. Throws StructuralError on mismatch.
Scalar apply_Z_check(const ModuleParams& params, const DualPairGens& gens, std::int64_t b, std::int64_t c);

/// Plain correspondence entry for b; checks are left empty.
CorrespondenceEntry classify(const ModuleParams& params, std::int64_t b);

/// Rewrites an entry's labels for a semisimplified table and fills the
/// semisimplification column for c in [0, c_max].
CorrespondenceEntry apply_variant(const ModuleParams& params, CorrespondenceEntry entry, TableVariant variant,
                                  std::int64_t c_max);

/// Runs the finite certificates attached to the entry's regime. `depth` is
/// the number of sl_2-string / lowering steps examined (at least 1).
std::vector<CheckResult> verify_entry(const ModuleParams& params, const DualPairGens& gens,
                                      const CorrespondenceEntry& entry, int depth);

BranchingReport build_table(const ModuleParams& params, std::int64_t b_min, std::int64_t b_max,
                            std::int64_t c_max, TableVariant variant, int depth, unsigned jobs = 1,
                            std::uint64_t seed = 0);

/// Composition structure of U(a) x(b,0) and U(b) x(b,0).
struct SeriesDetail {
    std::int64_t b = 0;
    Regime regime = Regime::generic;
    Scalar critical_value;
    int a_length = 1;
    Scalar a_hw;
    std::optional<HwvLabel> a_submodule_generator;
    std::optional<Scalar> a_submodule_hw;
    int b_length = 1;
    std::vector<Scalar> b_hw;
    std::optional<HwvLabel> b_submodule_generator;
    std::vector<Scalar> b_submodule_hw;
    std::optional<Scalar> gamma;
    std::vector<CheckResult> checks;
};

SeriesDetail composition_series(const ModuleParams& params, std::int64_t b, int depth);

/// Writes v as a combination of closed-form x(b, c) by peeling off x_0(b, c)
/// terms. Empty when v is not in their span.
std::optional<std::map<HwvLabel, Scalar>> decompose_over_hwv(const ModuleParams& params, const WeightVector& v);

struct ScanResult {
    bool pass = true;
    std::size_t vectors = 0;
    std::size_t max_steps = 0;
    std::string detail;
};

/// Raises every admissible basis vector in the box with b^+ until it is
/// singular and decomposes the result over the closed-form x(b, c).
ScanResult exhaustiveness_scan(const ModuleParams& params, const DualPairGens& gens, int box,
                               std::size_t step_budget = 10000);

}  // namespace howe
