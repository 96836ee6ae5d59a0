#pragma once

// The arrangements every property test runs over: the named small examples
// plus seeded random arrangements with dim <= 3 and at most 6 hyperplanes.

#include <arrspec/arrspec.hpp>

#include <string>
#include <vector>

namespace suite {

struct Case {
    std::string name;
    arrspec::Arrangement arrangement;
};

inline std::vector<Case> arrangements() {
    using namespace arrspec;
    std::vector<Case> out{{"three-lines", gen::three_lines()},
                          {"point-on-line", gen::point_on_line()},
                          {"boolean-2", gen::boolean(2)},
                          {"boolean-3", gen::boolean(3)},
                          {"braid-3", gen::braid(3)},
                          {"braid-4", gen::braid(4)}};
    const std::pair<std::size_t, std::size_t> shapes[] = {{2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6},
                                                          {3, 3}, {3, 4}, {3, 5}, {3, 6}};
    std::uint64_t seed = 1;
    for (int round = 0; round < 3; ++round)
        for (auto [dim, n] : shapes) {
            out.push_back({"random-" + std::to_string(dim) + "x" + std::to_string(n) + "-s" + std::to_string(seed),
                           gen::random(dim, n, seed)});
            ++seed;
        }
    return out;
}

inline std::vector<Case> small_arrangements(std::size_t max_hyperplanes) {
    std::vector<Case> out;
    for (auto& c : arrangements())
        if (c.arrangement.size() <= max_hyperplanes) out.push_back(std::move(c));
    return out;
}

} // namespace suite
