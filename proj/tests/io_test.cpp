#include <gtest/gtest.h>

#include "rrcomb/diagram.hpp"
#include "rrcomb/errors.hpp"
#include "rrcomb/io.hpp"

using namespace rrcomb;

TEST(Io, ParsePartitionList) {
  EXPECT_EQ(parse_partition_list("5,5,4,1"), Partition({5, 5, 4, 1}));
  EXPECT_EQ(parse_partition_list(" 3, 2 ,2 "), Partition({3, 2, 2}));
  EXPECT_EQ(parse_partition_list(""), Partition());
  EXPECT_THROW(parse_partition_list("3,,1"), ValidationError);
  EXPECT_THROW(parse_partition_list("3,x"), ValidationError);
  EXPECT_THROW(parse_partition_list("1,3"), ValidationError);
  try {
    parse_partition_list("4,4,abc");
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.index(), 2);
  }
}

TEST(Io, PartitionRoundTrip) {
  const Partition p({7, 6, 4, 4, 3, 3, 1});
  EXPECT_EQ(partition_to_json(p).dump(), "[7,6,4,4,3,3,1]");
  EXPECT_EQ(partition_from_json(partition_to_json(p)), p);
  EXPECT_THROW(partition_from_json(json::parse(R"({"a":1})")), ValidationError);
  EXPECT_THROW(partition_from_json(json::parse(R"([3,"2"])")), ValidationError);
}

TEST(Io, DecompositionRoundTrip) {
  const auto d = *decompose(Partition({10, 10, 9, 9, 7, 6, 5, 4, 4, 2, 2, 1, 1, 1}), 0);
  const auto j = decomposition_to_json(d);
  EXPECT_EQ(j.at("s"), 6);
  EXPECT_EQ(j.at("beta").dump(), "[2,1,1]");
  EXPECT_EQ(decomposition_from_json(j), d);
  EXPECT_THROW(decomposition_from_json(json::parse(R"({"m":0})")), ValidationError);
}

TEST(Io, DescribeWithoutSecondRectangle) {
  const auto j = describe_to_json(Partition({4, 4, 3}), 0);
  EXPECT_EQ(j.at("s"), 3);
  EXPECT_TRUE(j.at("t").is_null());
  EXPECT_EQ(j.at("alpha").dump(), "[1,1]");
  EXPECT_THROW(decomposition_from_json(j), ValidationError);
}

TEST(Io, SeriesRoundTrip) {
  TruncatedSeries f(4);
  f.set_coefficient(1, BigInt("123456789012345678901234567890"));
  f.set_coefficient(3, -2);
  const auto j = series_to_json(f);
  EXPECT_EQ(j.dump(), R"({"N":4,"coeffs":["0","123456789012345678901234567890","0","-2","0"]})");
  EXPECT_EQ(series_from_json(j), f);
  EXPECT_THROW(series_from_json(json::parse(R"({"N":2,"coeffs":["1"]})")), ValidationError);
  EXPECT_THROW(series_from_json(json::parse(R"({"N":0,"coeffs":["x"]})")), ValidationError);
}

TEST(Diagram, MarksBothRectangles) {
  const Partition lambda({5, 5, 4, 1});
  const auto text = render_diagram(lambda, decompose(lambda, 0));
  EXPECT_EQ(text, "###|oo\n###|oo\n###|o\n------\n=|\n------\n");
  EXPECT_EQ(render_diagram(Partition({2, 1})), "oo\no\n");
}
