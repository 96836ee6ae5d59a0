#include <arrspec/arrspec.hpp>
#include <support/suite.hpp>
#include <support/three_lines.hpp>

#include <gtest/gtest.h>

using namespace arrspec;
using io::json;

TEST(Json, ArrangementRoundTrip) {
    for (const auto& c : suite::arrangements()) {
        const auto text = io::to_json(c.arrangement).dump();
        const auto back = io::arrangement_from_json(io::parse_json(text, "mem"));
        EXPECT_EQ(back, c.arrangement) << c.name;
        Skeleton a(c.arrangement), b(back);
        EXPECT_EQ(io::faces_to_json(a), io::faces_to_json(b));
        EXPECT_EQ(io::lattice_to_json(a), io::lattice_to_json(b));
        if (c.arrangement.size() <= 4) {
            auto w = WeightAssignment::random(a, 1);
            EXPECT_EQ(io::spectrum_to_json(a, full_spectrum(a, w, OrientationData::standard(a))),
                      io::spectrum_to_json(b, full_spectrum(b, w, OrientationData::standard(b))));
        }
    }
}

TEST(Json, ArrangementFormat) {
    auto j = io::to_json(gen::three_lines());
    EXPECT_EQ(j.dump(), R"({"dim":2,"hyperplanes":[["1","0"],["0","1"],["1","-1"]]})");
    auto a = io::arrangement_from_json(json::parse(R"({"dim":2,"hyperplanes":[["1/2","0"],[0,3]]})"));
    EXPECT_EQ(a.normal(0)[0], ratio(1, 2));
    EXPECT_EQ(a.normal(1)[1], 3);
}

TEST(Json, NonEssentialNeedsOptIn) {
    const auto j = json::parse(R"({"dim":3,"hyperplanes":[["1","-1","0"],["1","0","-1"],["0","1","-1"]]})");
    EXPECT_THROW(io::arrangement_from_json(j), Error);
    EXPECT_EQ(io::arrangement_from_json(j, true).dim(), 2U);
}

TEST(Json, ParseErrorsCarryLineAndColumn) {
    try {
        io::parse_json("{\n  \"dim\": 2,\n  \"hyperplanes\": [[\"1\", ]]\n}", "in.json");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ParseError);
        EXPECT_NE(std::string(e.what()).find("in.json:3:"), std::string::npos) << e.what();
    }
    EXPECT_THROW(io::arrangement_from_json(json::parse(R"({"dim":2})")), Error);
    EXPECT_THROW(io::arrangement_from_json(json::parse(R"({"dim":2,"hyperplanes":[["1","x"],["0","1"]]})")), Error);
    EXPECT_THROW(io::read_json_file("/nonexistent/file.json"), Error);
}

TEST(Json, Weights) {
    auto sk = fixture::skeleton();
    auto w = WeightAssignment::random(sk, 3);
    EXPECT_EQ(io::weights_from_json(sk, io::weights_to_json(sk, w)).weights, w.weights);
    EXPECT_EQ(io::weights_from_json(sk, json::parse(R"({"mode":"uniform"})")).weights,
              WeightAssignment::uniform(sk).weights);
    EXPECT_EQ(io::weights_from_json(sk, json::parse(R"({"mode":"random","seed":3})")).weights, w.weights);
    EXPECT_THROW(io::weights_from_json(sk, json::parse(R"({"mode":"random"})")), Error);
    EXPECT_THROW(io::weights_from_json(sk, json::parse(R"({"+++":"1"})")), Error);

    Skeleton p(gen::point_on_line());
    EXPECT_EQ(io::weights_from_list(p, "1/2,1/4,1/4").weights, (RationalVector{ratio(1, 2), ratio(1, 4), ratio(1, 4)}));
    EXPECT_THROW(io::weights_from_list(p, "1/2,1/2"), Error);
}

TEST(Json, SpectrumShape) {
    auto sk = fixture::skeleton();
    auto rep = full_spectrum(sk, WeightAssignment::random(sk, 7), fixture::orientation(sk));
    auto j = io::spectrum_to_json(sk, rep);
    ASSERT_EQ(j.size(), 5U);
    std::vector<int> mult;
    for (const auto& e : j) {
        mult.push_back(e["multiplicity"].get<int>());
        EXPECT_EQ(e["eigenvectors"].size(), e["multiplicity"].get<std::size_t>());
        EXPECT_TRUE(e["lambda"].is_string());
    }
    EXPECT_EQ(mult, (std::vector<int>{1, 1, 1, 1, 2}));
}
