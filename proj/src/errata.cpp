#include "hh/errata.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "hh/moments.hpp"
#include "hh/presets.hpp"

namespace hh {

namespace {

ErratumItem classify(ErratumItem item) {
    item.classification = item.max_deviation > kErratumThreshold ? ErratumClass::ErratumConfirmed
                                                                 : ErratumClass::Consistent;
    return item;
}

template <class Fn>
ErratumItem moment_item(std::string id, MomentCase c, Fn printed) {
    ErratumItem item;
    item.id = std::move(id);
    item.reference = "moment_general";
    item.relation = "equal";
    constexpr int n = 50;
    for (int i = 0; i < n; ++i) {
        const double xi = static_cast<double>(i) / (n - 1);
        for (int j = 0; j < n; ++j) {
            const double s = -0.9 + 1.9 * static_cast<double>(j) / (n - 1);
            const double ref = moment_general(
                MomentSpec{xi, moment_case_omega(c), moment_case_eta(c), s});
            const double dev = std::fabs(printed(xi, s) - ref) / std::max(std::fabs(ref), 1e-300);
            ++item.points;
            if (item.worst.is_null() || dev > item.max_deviation) {
                item.max_deviation = dev;
                item.worst = {{"xi", xi}, {"s", s}};
            }
        }
    }
    return classify(std::move(item));
}

struct FamilyMember {
    const char* id;
    double lo;
    double hi;
};

constexpr std::array<FamilyMember, 3> kFamily{{{"pow:2", 0.0, 1.0}, {"pow:3", 0.5, 2.0}, {"exp", -1.0, 1.5}}};

std::vector<BoundParams> canonical_grid(double a, double b) {
    const std::array<double, 7> weights{0.0, 0.2, 1.0 / 3.0, 0.5, 2.0 / 3.0, 0.9, 1.0};
    const std::array<double, 4> ss{-0.5, 0.25, 0.5, 1.0};
    const std::array<double, 4> qs{1.0, 1.5, 2.0, 3.0};
    std::vector<BoundParams> grid;
    grid.reserve(weights.size() * weights.size() * ss.size() * qs.size());
    for (double l : weights) {
        for (double u : weights) {
            for (double s : ss) {
                for (double q : qs) {
                    grid.push_back(BoundParams{a, b, l, u, s, q});
                }
            }
        }
    }
    return grid;
}

nlohmann::json params_json(const BoundParams& p, const std::string& fn) {
    return {{"function", fn}, {"a", p.a}, {"b", p.b}, {"lambda", p.lambda},
            {"mu", p.mu},     {"s", p.s}, {"q", p.q}};
}

ErratumItem preset_item(const PresetInfo& preset) {
    ErratumItem item;
    item.id = preset.id;
    item.reference = preset.reference;
    item.relation = std::string(to_string(preset.relation));
    for (const FamilyMember& m : kFamily) {
        const FunctionSpec f = make_function(m.id, m.lo, m.hi);
        const std::vector<BoundParams> grid = canonical_grid(m.lo, m.hi);
        const SpecializationResult r = check_specialization(preset, grid, std::span(&f, 1));
        item.points += r.points;
        if (r.worst && (item.worst.is_null() || r.max_deviation > item.max_deviation)) {
            item.max_deviation = r.max_deviation;
            item.worst = params_json(*r.worst, f.id());
        }
    }
    return classify(std::move(item));
}

}  // namespace

std::string_view to_string(ErratumClass c) noexcept {
    return c == ErratumClass::Consistent ? "consistent" : "erratum-confirmed";
}

nlohmann::json to_json(const ErratumItem& item) {
    return {{"id", item.id},
            {"reference", item.reference},
            {"relation", item.relation},
            {"max_deviation", item.max_deviation},
            {"points", item.points},
            {"classification", std::string(to_string(item.classification))},
            {"worst", item.worst}};
}

std::vector<ErratumItem> scan_errata() {
    std::vector<ErratumItem> items;
    for (MomentCase c : {MomentCase::Omega1Eta0, MomentCase::Omega1Eta1, MomentCase::OmegaM1Eta1,
                         MomentCase::OmegaM1Eta2}) {
        items.push_back(moment_item("moment_case" + std::string(to_string(c)), c,
                                    [c](double xi, double s) { return moment_case(c, xi, s); }));
    }
    items.push_back(moment_item("moment_case(-1,2)_verbatim", MomentCase::OmegaM1Eta2,
                                moment_case_m1_2_verbatim));
    for (const PresetInfo& p : all_presets()) {
        items.push_back(preset_item(p));
    }
    std::sort(items.begin(), items.end(),
              [](const ErratumItem& x, const ErratumItem& y) { return x.id < y.id; });
    return items;
}

}  // namespace hh
