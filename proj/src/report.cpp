#include "howe/report.hpp"

#include <sstream>

namespace howe {

namespace {

Json scalars_json(const std::vector<Scalar>& v) {
    Json out = Json::array();
    for (const auto& s : v) {
        out.push_back(s.to_string());
    }
    return out;
}

std::string tuple_text(const std::vector<Scalar>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i ? "," : "") + v[i].to_string();
    }
    return out;
}

Json checks_json(const std::vector<CheckResult>& checks) {
    Json out = Json::array();
    for (const auto& c : checks) {
        out.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    }
    return out;
}

Json label_pair(const HwvLabel& l) { return Json::array({l.b, l.c}); }

}  // namespace

Json params_json(const ModuleParams& params) {
    return {{"n", params.n()},
            {"a1", params.a1().to_string()},
            {"a2", params.a2().to_string()},
            {"generic", params.generic()}};
}

Json weight_vector_json(const WeightVector& v) {
    Json out = Json::array();
    for (const auto& [idx, c] : v) {
        Json offsets = Json::array();
        for (auto o : idx.offsets()) {
            offsets.push_back(o);
        }
        out.push_back({{"offsets", offsets}, {"coeff", c.to_string()}});
    }
    return out;
}

Json hwv_json(const ModuleParams& params, const HwvLabel& label, const WeightVector& v) {
    Json terms = Json::array();
    for (const auto& k : k_tuples(params.n(), label.c)) {
        const Scalar c = v.coefficient(k_index(params.n(), label, k));
        if (!c.is_zero()) {
            terms.push_back({{"k", k}, {"coeff", c.to_string()}});
        }
    }
    return {{"b", label.b}, {"c", label.c}, {"terms", terms}};
}

Json module_label_json(const ModuleLabel& label) {
    Json out = {{"kind", to_string(label.kind)}, {"hw", scalars_json(label.hw)}};
    if (!label.submodule_hw.empty()) {
        out["submodule_hw"] = scalars_json(label.submodule_hw);
    }
    if (!label.direct_sum_with.empty()) {
        out["direct_sum_with"] = scalars_json(label.direct_sum_with);
    }
    return out;
}

std::string module_label_text(const ModuleLabel& label) {
    std::string out;
    switch (label.kind) {
        case ModuleKind::SimpleHW_slN:
        case ModuleKind::SimpleHW_sl2:
            out = "L(" + tuple_text(label.hw) + ")";
            break;
        case ModuleKind::Verma_sl2:
            out = "V(" + tuple_text(label.hw) + ")";
            break;
        case ModuleKind::Indecomposable_len2:
            out = "[L(" + tuple_text(label.hw) + ") / L(" + tuple_text(label.submodule_hw) + ")]";
            return out;
    }
    if (!label.direct_sum_with.empty()) {
        out += " + L(" + tuple_text(label.direct_sum_with) + ")";
    }
    return out;
}

Json report_json(const BranchingReport& report) {
    Json entries = Json::array();
    for (const auto& e : report.entries) {
        Json entry = {{"b", e.b},
                      {"regime", to_string(e.regime)},
                      {"critical_value", e.critical_value.to_string()},
                      {"slN", module_label_json(e.slN_side)},
                      {"sl2", module_label_json(e.sl2_side)}};
        if (!e.slN_factors.empty()) {
            Json factors = Json::array();
            for (const auto& f : e.slN_factors) {
                factors.push_back({{"c", f.c}, {"hw", scalars_json(f.hw)}});
            }
            entry["slN_factors"] = factors;
        }
        entry["checks"] = checks_json(e.checks);
        entries.push_back(std::move(entry));
    }
    return {{"params", params_json(report.params)},
            {"seed", report.seed},
            {"variant", to_string(report.variant)},
            {"depth", report.depth},
            {"c_max", report.c_max},
            {"one_to_one", report.one_to_one},
            {"entries", entries},
            {"passed", report.passed()}};
}

std::string report_markdown(const BranchingReport& report) {
    std::ostringstream out;
    const auto& p = report.params;
    out << "# Branching table (variant " << to_string(report.variant) << ")\n\n";
    out << "n = " << p.n() << ", a1 = " << p.a1().to_string() << ", a2 = " << p.a2().to_string()
        << ", generic = " << (p.generic() ? "true" : "false") << ", seed = " << report.seed << "\n";
    if (!report.one_to_one) {
        out << "\nnot one-to-one\n";
    }
    out << "\n| b | regime | critical value | sl_n side | sl_2 side | checks |\n";
    out << "|---|---|---|---|---|---|\n";
    for (const auto& e : report.entries) {
        std::size_t passed = 0;
        for (const auto& c : e.checks) {
            passed += c.pass ? 1 : 0;
        }
        out << "| " << e.b << " | " << to_string(e.regime) << " | " << e.critical_value.to_string() << " | "
            << module_label_text(e.slN_side) << " | " << module_label_text(e.sl2_side) << " | "
            << (e.passed() ? "pass" : "FAIL") << " (" << passed << "/" << e.checks.size() << ") |\n";
    }
    bool any_factors = false;
    for (const auto& e : report.entries) {
        any_factors = any_factors || !e.slN_factors.empty();
    }
    if (any_factors) {
        out << "\n## Semisimplification, sl_n factors\n\n| b | c | factor |\n|---|---|---|\n";
        for (const auto& e : report.entries) {
            for (const auto& f : e.slN_factors) {
                out << "| " << e.b << " | " << f.c << " | L(" << tuple_text(f.hw) << ") |\n";
            }
        }
    }
    return out.str();
}

Json series_json(const ModuleParams& params, const SeriesDetail& d, std::uint64_t seed) {
    Json a = {{"generator", label_pair({d.b, 0})}, {"length", d.a_length}, {"hw", d.a_hw.to_string()}};
    if (d.a_submodule_generator) {
        a["submodule_generator"] = label_pair(*d.a_submodule_generator);
        a["submodule_hw"] = d.a_submodule_hw->to_string();
    }
    Json b = {{"generator", label_pair({d.b, 0})}, {"length", d.b_length}, {"hw", scalars_json(d.b_hw)}};
    if (d.b_submodule_generator) {
        b["submodule_generator"] = label_pair(*d.b_submodule_generator);
        b["submodule_hw"] = scalars_json(d.b_submodule_hw);
    }
    if (d.gamma) {
        b["gamma"] = d.gamma->to_string();
    }
    bool passed = true;
    for (const auto& c : d.checks) {
        passed = passed && c.pass;
    }
    return {{"params", params_json(params)},
            {"seed", seed},
            {"b", d.b},
            {"regime", to_string(d.regime)},
            {"critical_value", d.critical_value.to_string()},
            {"a_module", a},
            {"b_module", b},
            {"checks", checks_json(d.checks)},
            {"passed", passed}};
}

std::string series_markdown(const ModuleParams& params, const SeriesDetail& d) {
    std::ostringstream out;
    out << "# Composition series at b = " << d.b << "\n\n";
    out << "n = " << params.n() << ", a1 = " << params.a1().to_string() << ", a2 = " << params.a2().to_string()
        << ", regime " << to_string(d.regime) << ", critical value " << d.critical_value.to_string() << "\n\n";
    out << "- U(a) x(" << d.b << ",0): length " << d.a_length << ", highest weight " << d.a_hw.to_string();
    if (d.a_submodule_generator) {
        out << ", submodule U(a) x(" << d.a_submodule_generator->b << "," << d.a_submodule_generator->c
            << ") of highest weight " << d.a_submodule_hw->to_string();
    }
    out << "\n- U(b) x(" << d.b << ",0): length " << d.b_length << ", highest weight (" << tuple_text(d.b_hw) << ")";
    if (d.b_submodule_generator) {
        out << ", submodule U(b) x(" << d.b_submodule_generator->b << "," << d.b_submodule_generator->c
            << ") of highest weight (" << tuple_text(d.b_submodule_hw) << ")";
    }
    if (d.gamma) {
        out << ", Z x(" << d.b << ",0) = " << d.gamma->to_string() << " x(" << d.b << ","
            << d.b_submodule_generator->c << ")";
    }
    out << "\n\n| check | status | detail |\n|---|---|---|\n";
    for (const auto& c : d.checks) {
        out << "| " << c.name << " | " << (c.pass ? "pass" : "FAIL") << " | " << c.detail << " |\n";
    }
    return out.str();
}

}  // namespace howe
