#include <string>

#include <gtest/gtest.h>

#include "ohara/serialize.hpp"

using namespace ohara;

TEST(Json, BigIntEncoding) {
    EXPECT_EQ(to_json(BigInt(42)), json(42));
    EXPECT_EQ(to_json(BigInt("123456789012345678901234567890")), json("123456789012345678901234567890"));
}

TEST(Json, QPolyIsCoefficientList) {
    EXPECT_EQ(to_json(q_binomial(2, 2)).dump(), "[1,1,2,1,1]");
}

TEST(Json, PartitionRoundTrip) {
    const Partition mu{4, 3, 1, 1};
    EXPECT_EQ(partition_from_json(to_json(mu)), mu);
    EXPECT_THROW(partition_from_json(json("x")), Error);
    EXPECT_THROW(partition_from_json(json::parse("[1,2]")), Error);
}

TEST(Json, KohRoundTrip) {
    for (int n = 0; n <= 6; ++n)
        for (int k = 1; k <= 6; ++k)
            for (const auto& t : enumerate_koh_trees(n, k)) {
                const auto text = to_json(*t).dump();
                EXPECT_EQ(*koh_from_json(json::parse(text)), *t);
            }
}

TEST(Json, GohRoundTrip) {
    for (const auto& mu : enumerate_partitions(4))
        for (const auto& t : enumerate_goh_trees(mu, 3)) EXPECT_TRUE(goh_from_json(json::parse(to_json(t).dump())) == t);
}

TEST(Json, MarkedTreeKeepsTreeShape) {
    const auto t = enumerate_koh_trees(2, 2).front();
    const auto j = with_marks(to_json(*t), leaves(*t), {0, 1}, 1);
    EXPECT_EQ(j.at("r"), 1);
    EXPECT_EQ(j.at("marks"), json::parse("[0,1]"));
    EXPECT_EQ(*koh_from_json(j), *t);
}

TEST(Json, MalformedInput) {
    try {
        koh_from_json(json::parse(R"({"mu":[1],"a":3})"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::parse_error);
    }
    EXPECT_THROW(goh_from_json(json::parse("{}")), Error);
}

TEST(Dot, NodeLabels) {
    const auto trees = enumerate_koh_trees(8, 9);
    const auto dot = koh_dot(trees);
    EXPECT_EQ(dot.rfind("digraph koh {", 0), 0u);
    EXPECT_NE(dot.find("\"([4,3,1,1], 8, 9)\""), std::string::npos);
    EXPECT_NE(dot.find("\"([1,1], 2, 2)\""), std::string::npos);
    EXPECT_NE(dot.find("label=\"22\", shape=plaintext"), std::string::npos);
    EXPECT_EQ(dot.substr(dot.size() - 2), "}\n");
}

TEST(Dot, MarksAndGohEdges) {
    const auto trees = enumerate_goh_trees({2, 1}, 2);
    std::vector<std::vector<int>> marks;
    for (const auto& t : trees) marks.emplace_back(goh_leaves(t).size(), 0);
    const auto dot = goh_dot(trees, marks, "test");
    EXPECT_NE(dot.find("shape=circle"), std::string::npos);
    EXPECT_NE(dot.find("style=dotted"), std::string::npos);
    EXPECT_NE(dot.find("label=\"1,1\""), std::string::npos);
    EXPECT_NE(dot.find("cluster_0"), std::string::npos);
}
