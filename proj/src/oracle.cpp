#include <algorithm>
#include <map>
#include <numeric>

#include "einject/harness.hpp"

namespace einject {

namespace {

using namespace family;

bool even(int x) { return x % 2 == 0; }

std::optional<int> bipartite_value(int a, int b) {
    if (a >= 2 && b >= 2) return 2;
    return 1;  // a star K_{1,n}: a tree of diameter at most 2
}

std::optional<int> torus_value(int m, int n) {
    int a = std::min(m, n), b = std::max(m, n);
    if (a == 3) {
        if (b == 3) return 9;
        if (b == 5) return 15;
        if (b == 7) return 12;
        return even(b) ? 6 : 9;
    }
    if (a == 5 || b == 5) return 5;  // the other side is >= 4 here
    if (a == 7 || b == 7) return 4;
    if (even(m) && even(n)) return 2;
    return 3;  // an odd side >= 9 and the other side >= 4, not 5 or 7
}

struct Oracle {
    std::optional<int> operator()(const Path& s) const { return s.n <= 3 ? 1 : 2; }
    std::optional<int> operator()(const Cycle& s) const {
        if (s.n == 3) return 1;
        return even(s.n) ? 2 : 3;
    }
    std::optional<int> operator()(const Complete& s) const { return s.n <= 3 ? 1 : s.n; }
    std::optional<int> operator()(const Star&) const { return 1; }
    std::optional<int> operator()(const DoubleStar&) const { return 2; }
    std::optional<int> operator()(const Wheel& s) const { return s.n + 1; }
    std::optional<int> operator()(const CompleteBipartite& s) const { return bipartite_value(s.m, s.n); }
    std::optional<int> operator()(const CompleteMultipartite& s) const {
        const auto& p = s.parts;
        if (p.size() == 2) return bipartite_value(p[0], p[1]);
        int n = std::accumulate(p.begin(), p.end(), 0);
        if (p.size() == 3) {
            auto ones = std::count(p.begin(), p.end(), 1);
            if (ones == 3) return 1;
            if (ones == 2) return n - 1;  // K_{n-2,1,1} in any order, n >= 4
        }
        return n;
    }
    std::optional<int> operator()(const Fan& s) const {
        if (s.m == 1 && s.n == 2) return 1;
        if (s.m >= 2 && s.n == 2) return s.m + 1;
        if ((s.m == 1 && s.n >= 4) || (s.m >= 2 && s.n >= 3)) return s.m + s.n;
        if (s.m == 1 && s.n == 3) return 3;  // isomorphic to Fan(2,2)
        return std::nullopt;
    }
    std::optional<int> operator()(const Ladder& s) const {
        return s.n >= 2 ? std::optional<int>(2) : std::nullopt;
    }
    std::optional<int> operator()(const Prism& s) const { return cylinder(2, s.n); }
    std::optional<int> operator()(const Grid& s) const {
        return s.m >= 2 && s.n >= 2 ? std::optional<int>(2) : std::nullopt;
    }
    std::optional<int> operator()(const Cylinder& s) const { return cylinder(s.m, s.n); }
    std::optional<int> operator()(const Torus& s) const { return torus_value(s.m, s.n); }
    std::optional<int> operator()(const CliqueBridge& s) const {
        int a = std::max(s.m, s.n), b = std::min(s.m, s.n);
        if (b >= 4) return a + b - 1;
        if (b == 1 && a >= 4) return a;
        return std::nullopt;
    }
    std::optional<int> operator()(const Fixture& s) const {
        static const std::map<std::string, int, std::less<>> claimed{
            {"M3", 6}, {"M4", 12}, {"M5", 13}, {"M6", 16}, {"M7", 16}, {"M8", 16}};
        auto it = claimed.find(s.name);
        return it == claimed.end() ? std::nullopt : std::optional<int>(it->second);
    }
    std::optional<int> operator()(const Hypercube&) const { return std::nullopt; }

    static std::optional<int> cylinder(int m, int n) {
        if (m < 2) return std::nullopt;
        if (n == 3) return 6;
        if (n == 5) return 5;
        if (n == 7) return 4;
        return even(n) ? 2 : 3;
    }
};

}  // namespace

std::optional<int> oracle_chi_ei(const FamilySpec& spec) {
    try {
        validate(spec);
    } catch (const SpecError&) {
        return std::nullopt;
    }
    return std::visit(Oracle{}, spec);
}

int planar_problem_bound(int max_degree) {
    if (max_degree <= 3) return 5;
    if (max_degree <= 7) return max_degree + 5;
    return 3 * max_degree / 2 + 1;
}

}  // namespace einject
