#include <algorithm>
#include <map>

#include <json.hpp>

#include "einject/family.hpp"
#include "einject/graph_io.hpp"

namespace einject {

namespace {

struct RawFixture {
    const char* name;
    const char* json;
};

constexpr RawFixture kRaw[] = {
#include "fixture_data.inc"
};

std::map<std::string, FixtureData, std::less<>> load_all() {
    std::map<std::string, FixtureData, std::less<>> out;
    for (const auto& raw : kRaw) {
        auto j = nlohmann::json::parse(raw.json);
        FixtureData d{j.at("name").get<std::string>(), j.at("note").get<std::string>(),
                      graph_from_json(j), j.at("figure_coloring").get<std::vector<int>>()};
        if (d.name != raw.name || d.figure_coloring.size() != d.graph.order())
            throw FormatError(std::string("fixture data for ") + raw.name + " is inconsistent");
        out.emplace(d.name, std::move(d));
    }
    return out;
}

const std::map<std::string, FixtureData, std::less<>>& all() {
    static const auto data = load_all();
    return data;
}

}  // namespace

const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& raw : kRaw) v.emplace_back(raw.name);
        return v;
    }();
    return names;
}

const FixtureData& fixture(std::string_view name) {
    auto it = all().find(name);
    if (it == all().end()) throw SpecError("unknown fixture '" + std::string(name) + "'");
    return it->second;
}

}  // namespace einject
