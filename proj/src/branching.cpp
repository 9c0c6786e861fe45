#include "howe/branching.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "howe/parallel.hpp"

namespace howe {

std::string to_string(ModuleKind kind) {
    switch (kind) {
        case ModuleKind::SimpleHW_slN: return "SimpleHW_slN";
        case ModuleKind::SimpleHW_sl2: return "SimpleHW_sl2";
        case ModuleKind::Verma_sl2: return "Verma_sl2";
        case ModuleKind::Indecomposable_len2: return "Indecomposable_len2";
    }
    return "?";
}

std::string to_string(Regime regime) {
    switch (regime) {
        case Regime::generic: return "generic";
        case Regime::crit_zero: return "crit_zero";
        case Regime::crit_pos: return "crit_pos";
        case Regime::crit_neg: return "crit_neg";
    }
    return "?";
}

std::string to_string(TableVariant variant) {
    switch (variant) {
        case TableVariant::plain: return "plain";
        case TableVariant::semisimplified: return "s";
        case TableVariant::bi_semisimplified: return "ss";
    }
    return "?";
}

TableVariant parse_variant(const std::string& text) {
    if (text == "plain") {
        return TableVariant::plain;
    }
    if (text == "s" || text == "semisimplified") {
        return TableVariant::semisimplified;
    }
    if (text == "ss" || text == "bi_semisimplified") {
        return TableVariant::bi_semisimplified;
    }
    throw std::invalid_argument("unknown table variant '" + text + "'");
}

bool CorrespondenceEntry::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

bool BranchingReport::passed() const {
    return std::all_of(entries.begin(), entries.end(), [](const CorrespondenceEntry& e) { return e.passed(); });
}

Scalar critical_value(const ModuleParams& params, std::int64_t b) {
    return params.a1() - params.a2() + Scalar(2 * b - (params.n() - 2));
}

Scalar theta_weight(const ModuleParams& params, std::int64_t b) {
    return params.a1() - params.a2() + Scalar(2 * b - (params.n() - 1));
}

std::vector<Scalar> sln_weight(const ModuleParams& params, std::int64_t b, std::int64_t c) {
    const int n = params.n();
    if (n == 2) {
        return {Scalar(-1) - params.a1() + params.a2() - Scalar(2 * (b + c))};
    }
    std::vector<Scalar> w(n - 1, Scalar(0));
    w.front() = params.a2() - Scalar(b + c);
    w.back() = Scalar(-1) - params.a1() - Scalar(b + c);
    return w;
}

Sl2Action sl2_on_hwv(const ModuleParams& params, Sl2Gen gen, const HwvLabel& label) {
    switch (gen) {
        case Sl2Gen::X:
            return {params.a1() + Scalar(label.b), HwvLabel{label.b - 1, label.c + 1}};
        case Sl2Gen::H:
            return {theta_weight(params, label.b), label};
        case Sl2Gen::Y: {
            const Scalar crit = params.a1() - params.a2() + Scalar(2 * label.b + label.c - (params.n() - 2));
            const Scalar coeff = Scalar(label.c) * crit / (params.a1() + Scalar(label.b + 1));
            if (coeff.is_zero()) {
                return {coeff, std::nullopt};
            }
            return {coeff, HwvLabel{label.b + 1, label.c - 1}};
        }
    }
    throw std::logic_error("unreachable");
}

Operator z_lambda(const DualPairGens& gens, const Scalar& lambda) {
    return gens.zprime + lambda * gens.zdoubleprime;
}

std::vector<Scalar> z_lambdas(const ModuleParams& params, std::int64_t b, std::int64_t c) {
    std::vector<Scalar> out;
    for (std::int64_t i = 1; i <= c; ++i) {
        out.push_back(Scalar(1) / (params.a1() + Scalar(b + i)));
    }
    return out;
}

Operator build_Z(const ModuleParams& params, const DualPairGens& gens, std::int64_t b, std::int64_t c) {
    Operator z = Operator::identity();
    for (const auto& lambda : z_lambdas(params, b, c)) {
        z = z * z_lambda(gens, lambda);
    }
    return z;
}

Scalar apply_Z_check(const ModuleParams& params, const DualPairGens& gens, std::int64_t b, std::int64_t c) {
    if (c < 0) {
        throw std::invalid_argument("c must be nonnegative");
    }
    const Scalar gamma = falling_product(params.a2() - Scalar(b), c);
    // Factors commute, so apply them one at a time instead of expanding Z.
    WeightVector image = hwv_closed_form(params, HwvLabel{b, 0});
    for (const auto& lambda : z_lambdas(params, b, c)) {
        image = op_apply(params, z_lambda(gens, lambda), image);
    }
    if (!(image == gamma * hwv_closed_form(params, HwvLabel{b, c}))) {
        throw StructuralError("Z x(" + std::to_string(b) + ",0) is not " + gamma.to_string() + " x(" +
                              std::to_string(b) + "," + std::to_string(c) + ")");
    }
    return gamma;
}

CorrespondenceEntry classify(const ModuleParams& params, std::int64_t b) {
    CorrespondenceEntry e;
    e.b = b;
    e.critical_value = critical_value(params, b);
    const Scalar lambda = theta_weight(params, b);
    e.slN_side = {ModuleKind::SimpleHW_slN, sln_weight(params, b, 0), {}, {}};
    e.sl2_side = {ModuleKind::SimpleHW_sl2, {lambda}, {}, {}};
    if (params.generic()) {
        e.regime = Regime::generic;
        return e;
    }
    const int sign = e.critical_value.sign();
    if (sign == 0) {
        e.regime = Regime::crit_zero;
        e.sl2_side.hw = {Scalar(-1)};
    } else if (sign > 0) {
        e.regime = Regime::crit_pos;
        e.sl2_side = {ModuleKind::Verma_sl2, {lambda}, {-lambda - Scalar(2)}, {}};
    } else {
        e.regime = Regime::crit_neg;
        const std::int64_t c = -e.critical_value.numerator().get_si();
        if (params.n() == 2) {
            const Scalar hw = params.a2() - params.a1() - Scalar(2 * b + 1);
            e.slN_side = {ModuleKind::Verma_sl2, {hw}, sln_weight(params, b, c), {}};
        } else {
            e.slN_side = {ModuleKind::Indecomposable_len2, sln_weight(params, b, 0), sln_weight(params, b, c), {}};
        }
    }
    return e;
}

CorrespondenceEntry apply_variant(const ModuleParams& params, CorrespondenceEntry entry, TableVariant variant,
                                  std::int64_t c_max) {
    if (variant == TableVariant::plain) {
        return entry;
    }
    if (entry.regime == Regime::crit_neg) {
        entry.slN_side = {ModuleKind::SimpleHW_slN, sln_weight(params, entry.b, 0), {}, {}};
    }
    if (variant == TableVariant::bi_semisimplified && entry.regime == Regime::crit_pos) {
        const Scalar quotient_partner =
            -(params.a1() - params.a2() + Scalar(2 * entry.b - (params.n() - 3)));
        entry.sl2_side = {ModuleKind::SimpleHW_sl2, {theta_weight(params, entry.b)}, {}, {quotient_partner}};
    }
    for (std::int64_t c = 0; c <= c_max; ++c) {
        entry.slN_factors.push_back({c, sln_weight(params, entry.b, c)});
    }
    return entry;
}

namespace {

class HwvCache {
public:
    explicit HwvCache(const ModuleParams& params) : params_(params) {}

    const WeightVector& get(const HwvLabel& label) {
        auto it = cache_.find(label);
        if (it == cache_.end()) {
            it = cache_.emplace(label, hwv_closed_form(params_, label)).first;
        }
        return it->second;
    }

private:
    const ModuleParams& params_;
    std::map<HwvLabel, WeightVector> cache_;
};

std::string label_str(const HwvLabel& l) {
    return "(" + std::to_string(l.b) + "," + std::to_string(l.c) + ")";
}

std::string weights_str(const std::vector<Scalar>& w) {
    std::string out = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        out += (i ? "," : "") + w[i].to_string();
    }
    return out + ")";
}

std::string positions_str(const std::vector<std::int64_t>& v) {
    std::string out = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i ? "," : "") + std::to_string(v[i]);
    }
    return out + "}";
}

bool is_b_singular(const ModuleParams& params, const DualPairGens& gens, const WeightVector& v) {
    return std::all_of(gens.raise_b.begin(), gens.raise_b.end(),
                       [&](const Operator& x) { return op_apply(params, x, v).is_zero(); });
}

// Compares one a-generator against its predicted action on x(label).
bool matches_prediction(const ModuleParams& params, const Operator& op, Sl2Gen gen, const HwvLabel& label,
                        HwvCache& cache, std::string& why) {
    const WeightVector image = op_apply(params, op, cache.get(label));
    const Sl2Action predicted = sl2_on_hwv(params, gen, label);
    const WeightVector expected =
        predicted.target ? predicted.coeff * cache.get(*predicted.target) : WeightVector{};
    if (!(image == expected)) {
        why = "mismatch at " + label_str(label) + ", predicted coefficient " + predicted.coeff.to_string();
        return false;
    }
    return true;
}

}  // namespace

std::vector<CheckResult> verify_entry(const ModuleParams& params, const DualPairGens& gens,
                                      const CorrespondenceEntry& entry, int depth) {
    if (depth < 1) {
        throw std::invalid_argument("depth must be at least 1");
    }
    std::vector<CheckResult> checks;
    HwvCache cache(params);
    const std::int64_t b = entry.b;
    const Scalar lambda = theta_weight(params, b);
    const std::int64_t cstar =
        (entry.regime == Regime::crit_pos || entry.regime == Regime::crit_neg)
            ? std::abs(entry.critical_value.numerator().get_si())
            : 0;
    // Strings must reach the distinguished label to certify it.
    const std::int64_t reach = std::max<std::int64_t>(depth, cstar + 1);
    const std::string cert = "finite certificate (depth " + std::to_string(reach) + ")";

    const WeightVector& top = cache.get({b, 0});
    checks.push_back({"b_singular", is_b_singular(params, gens, top), "raise_b kills x" + label_str({b, 0})});

    {
        const SubWeight w = sub_weight(params, gens, top);
        bool ok = w.b_weight == entry.slN_side.hw && w.theta_weight == lambda;
        std::string detail = "h_n-weight " + weights_str(w.b_weight) + ", h_theta-weight " + w.theta_weight.to_string();
        if (!entry.slN_side.submodule_hw.empty()) {
            const SubWeight sub = sub_weight(params, gens, cache.get({b, cstar}));
            ok = ok && sub.b_weight == entry.slN_side.submodule_hw;
            detail += "; submodule x" + label_str({b, cstar}) + " h_n-weight " + weights_str(sub.b_weight);
        }
        checks.push_back({"slN_label", ok, detail});
    }

    {
        bool ok = entry.sl2_side.hw.size() == 1 && entry.sl2_side.hw.front() == eigenvalue(params, gens.H, top);
        std::string detail = "H x" + label_str({b, 0}) + " = " + lambda.to_string();
        const auto& partner = !entry.sl2_side.submodule_hw.empty() ? entry.sl2_side.submodule_hw
                                                                    : entry.sl2_side.direct_sum_with;
        if (!partner.empty()) {
            const HwvLabel singular{b - cstar, cstar};
            const Scalar h = eigenvalue(params, gens.H, cache.get(singular));
            ok = ok && partner.front() == h && h == -entry.sl2_side.hw.front() - Scalar(2);
            detail += "; H x" + label_str(singular) + " = " + h.to_string() + " = -hw-2";
        }
        checks.push_back({"sl2_label", ok, detail});
    }

    {
        bool ok = true;
        std::string why = cert;
        for (std::int64_t k = 0; k < reach && ok; ++k) {
            const HwvLabel label{b - k, k};
            ok = matches_prediction(params, gens.X, Sl2Gen::X, label, cache, why) &&
                 !sl2_on_hwv(params, Sl2Gen::X, label).coeff.is_zero();
        }
        checks.push_back({"x_string", ok, ok ? cert + ", X never kills" : why});
    }

    {
        bool ok = true;
        std::string why;
        std::vector<std::int64_t> zeros;
        for (std::int64_t k = 0; k <= reach && ok; ++k) {
            const HwvLabel label{b - k, k};
            ok = matches_prediction(params, gens.Y, Sl2Gen::Y, label, cache, why);
            if (op_apply(params, gens.Y, cache.get(label)).is_zero()) {
                zeros.push_back(k);
            }
        }
        std::vector<std::int64_t> expected{0};
        if (entry.regime == Regime::crit_pos) {
            expected.push_back(cstar);
        }
        const bool zeros_ok = zeros == expected;
        checks.push_back({"y_string", ok && zeros_ok,
                          ok ? cert + ", Y kills x(b-k,k) exactly for k in " + positions_str(zeros) : why});
    }

    {
        std::vector<std::int64_t> zeros;
        for (std::int64_t c = 1; c <= reach; ++c) {
            if (op_apply(params, gens.Y, cache.get({b, c})).is_zero()) {
                zeros.push_back(c);
            }
        }
        std::vector<std::int64_t> expected;
        if (entry.regime == Regime::crit_neg) {
            expected.push_back(cstar);
        }
        checks.push_back({"b_chain", zeros == expected,
                          cert + ", Y kills x(b,c), c >= 1, exactly for c in " + positions_str(zeros)});
    }

    if (entry.regime == Regime::crit_neg) {
        CheckResult z{"z_intertwiner", false, ""};
        try {
            const Scalar gamma = apply_Z_check(params, gens, b, cstar);
            WeightVector image = top;
            for (const auto& l : z_lambdas(params, b, cstar)) {
                image = op_apply(params, z_lambda(gens, l), image);
            }
            z.pass = is_b_singular(params, gens, image) && !image.is_zero();
            z.detail = "Z x" + label_str({b, 0}) + " = " + gamma.to_string() + " x" + label_str({b, cstar});
        } catch (const StructuralError& err) {
            z.detail = err.what();
        }
        checks.push_back(z);

        const auto lambdas = z_lambdas(params, b, cstar);
        bool commute = true;
        for (std::size_t i = 0; i < lambdas.size() && commute; ++i) {
            for (std::size_t j = i + 1; j < lambdas.size() && commute; ++j) {
                const Operator bracket = op_commutator(z_lambda(gens, lambdas[i]), z_lambda(gens, lambdas[j]));
                commute = op_apply(params, bracket, top).is_zero();
            }
        }
        checks.push_back({"z_factors_commute", commute, "[Z_i, Z_j] x" + label_str({b, 0}) + " = 0"});
    }

    if (!entry.slN_factors.empty()) {
        bool ok = true;
        std::string detail = "semisimplification column c in [0," +
                             std::to_string(entry.slN_factors.back().c) + "]";
        for (const auto& f : entry.slN_factors) {
            const WeightVector& v = cache.get({b, f.c});
            if (!is_b_singular(params, gens, v) || sub_weight(params, gens, v).b_weight != f.hw) {
                ok = false;
                detail = "factor at c=" + std::to_string(f.c) + " does not match";
                break;
            }
        }
        checks.push_back({"semisimplification_factors", ok, detail});
    }
    return checks;
}

BranchingReport build_table(const ModuleParams& params, std::int64_t b_min, std::int64_t b_max,
                            std::int64_t c_max, TableVariant variant, int depth, unsigned jobs,
                            std::uint64_t seed) {
    if (b_min > b_max) {
        throw std::invalid_argument("b_min must not exceed b_max");
    }
    if (c_max < 0) {
        throw std::invalid_argument("c_max must be nonnegative");
    }
    const DualPairGens gens = build_dual_pair(params);
    const auto count = static_cast<std::size_t>(b_max - b_min + 1);
    BranchingReport report(params);
    report.variant = variant;
    report.seed = seed;
    report.depth = depth;
    report.c_max = c_max;
    report.one_to_one = !(variant == TableVariant::bi_semisimplified && !params.generic());
    report.entries = parallel_map(count, jobs, [&](std::size_t i) {
        const std::int64_t b = b_min + static_cast<std::int64_t>(i);
        CorrespondenceEntry e = apply_variant(params, classify(params, b), variant, c_max);
        try {
            e.checks = verify_entry(params, gens, e, depth);
        } catch (const std::exception& err) {
            e.checks.push_back({"verify_entry", false, err.what()});
        }
        return e;
    });
    return report;
}

SeriesDetail composition_series(const ModuleParams& params, std::int64_t b, int depth) {
    const CorrespondenceEntry entry = classify(params, b);
    const DualPairGens gens = build_dual_pair(params);
    SeriesDetail s;
    s.b = b;
    s.regime = entry.regime;
    s.critical_value = entry.critical_value;
    s.a_hw = theta_weight(params, b);
    s.b_hw = sln_weight(params, b, 0);
    if (entry.regime == Regime::crit_pos) {
        const std::int64_t c = entry.critical_value.numerator().get_si();
        s.a_length = 2;
        s.a_submodule_generator = HwvLabel{b - c, c};
        s.a_submodule_hw = -s.a_hw - Scalar(2);
    } else if (entry.regime == Regime::crit_neg) {
        const std::int64_t c = -entry.critical_value.numerator().get_si();
        s.b_length = 2;
        s.b_submodule_generator = HwvLabel{b, c};
        s.b_submodule_hw = sln_weight(params, b, c);
        try {
            s.gamma = apply_Z_check(params, gens, b, c);
        } catch (const StructuralError&) {
        }
    }
    s.checks = verify_entry(params, gens, entry, depth);
    return s;
}

std::optional<std::map<HwvLabel, Scalar>> decompose_over_hwv(const ModuleParams& params, const WeightVector& v) {
    const int n = params.n();
    std::map<HwvLabel, Scalar> out;
    WeightVector rest = v;
    while (!rest.is_zero()) {
        std::optional<HwvLabel> label;
        for (const auto& [t, c] : rest) {
            bool lead = t.at(2 * n) >= 0;
            for (int pos = 1; pos <= 2 * n - 1 && lead; ++pos) {
                if (pos != n && pos != n + 1) {
                    lead = t.at(pos) == 0;
                }
            }
            if (lead) {
                label = HwvLabel{t.at(n), t.at(2 * n)};
                break;
            }
        }
        if (!label) {
            return std::nullopt;
        }
        const Scalar coeff = rest.coefficient(k_index(n, *label, KTuple(n - 1, 0)));
        rest -= coeff * hwv_closed_form(params, *label);
        out[*label] += coeff;
    }
    return out;
}

ScanResult exhaustiveness_scan(const ModuleParams& params, const DualPairGens& gens, int box,
                               std::size_t step_budget) {
    ScanResult result;
    for (const auto& idx : admissible_in_box(params.n(), box)) {
        ++result.vectors;
        WeightVector v = WeightVector::basis(idx);
        std::size_t steps = 0;
        for (;;) {
            bool raised = false;
            for (const auto& x : gens.raise_b) {
                WeightVector next = op_apply(params, x, v);
                if (!next.is_zero()) {
                    v = std::move(next);
                    raised = true;
                    break;
                }
            }
            if (!raised) {
                break;
            }
            if (++steps > step_budget) {
                result.pass = false;
                result.detail = "step budget exceeded from x" + idx.to_string();
                return result;
            }
        }
        result.max_steps = std::max(result.max_steps, steps);

        if (!decompose_over_hwv(params, v)) {
            result.pass = false;
            result.detail = "terminal vector from x" + idx.to_string() + " is not in the span of the x(b,c)";
            return result;
        }
    }
    std::ostringstream out;
    out << result.vectors << " basis vectors raised to the span of x(b,c); max steps " << result.max_steps;
    result.detail = out.str();
    return result;
}

}  // namespace howe
