#include <gtest/gtest.h>

#include <algorithm>

#include "schur/io.hpp"

using namespace schur;
using namespace schur::io;

TEST(SchemeIo, TwoPoints) {
  auto X = parse_scheme_text("0 1\n1 0\n");
  EXPECT_EQ(X.size(), 2u);
  EXPECT_EQ(X.rank(), 2u);
}

TEST(SchemeIo, HeaderAndBareAgree) {
  auto X = class_scheme(dihedral(8));
  auto text = emit_scheme(X);
  EXPECT_EQ(parse_scheme_text(text), X);
  // drop the size line
  auto bare = text.substr(text.find('\n') + 1);
  EXPECT_EQ(parse_scheme_text(bare), X);
  // comments and blank lines are ignored
  EXPECT_EQ(parse_scheme_text("# a comment\n\n" + text + "\n# tail\n"), X);
}

TEST(SchemeIo, RoundTripAfterRelabel) {
  auto X = orbital_scheme(regular_representation(cyclic(6)));
  auto Y = parse_scheme_text(emit_scheme(X));
  EXPECT_EQ(emit_scheme(Y), emit_scheme(X));
}

TEST(SchemeIo, Rejections) {
  EXPECT_THROW(parse_scheme_text(""), ParseError);
  EXPECT_THROW(parse_scheme_text("0 1\n1\n"), ParseError);        // ragged
  EXPECT_THROW(parse_scheme_text("0 1 1\n1 0 1\n"), ParseError);  // too few rows
  EXPECT_THROW(parse_scheme_text("0 1\n1 2\n"), ParseError);      // diagonal not monochrome
  EXPECT_THROW(parse_scheme_text("0 x\n1 0\n"), ParseError);
  // path on three points: not a scheme
  try {
    parse_scheme_text("0 1 2\n1 0 1\n2 1 0\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("not an association scheme"), std::string::npos);
  }
}

TEST(PermGroupIo, Examples) {
  auto C3 = parse_permgroup_text("3\n(1,2,3)\n");
  EXPECT_EQ(C3.degree(), 3u);
  EXPECT_EQ(C3.order(), 3u);
  auto S4 = parse_permgroup_text("4\n(1,2)\n(1,2,3,4)\n");
  EXPECT_EQ(S4.order(), 24u);
  auto S4b = parse_permgroup_text("4\n2 3 4 1\n(1,2)\n");
  EXPECT_EQ(S4b.order(), 24u);
  // identity generator written as "()"
  EXPECT_EQ(parse_permgroup_text("2\n()\n").order(), 1u);
}

TEST(PermGroupIo, OrderStableUnderGeneratorShuffle) {
  auto G = regular_representation(dihedral(12));
  auto text = emit_permgroup(G);
  auto gens = G.generators();
  std::reverse(gens.begin(), gens.end());
  auto H = parse_permgroup_text(emit_permgroup(PermGroup(G.degree(), gens)));
  EXPECT_EQ(parse_permgroup_text(text).order(), 12u);
  EXPECT_EQ(H.order(), 12u);
}

TEST(PermGroupIo, Malformed) {
  EXPECT_THROW(parse_permgroup_text(""), ParseError);
  EXPECT_THROW(parse_permgroup_text("x\n"), ParseError);
  EXPECT_THROW(parse_permgroup_text("3\n(1,2,4)\n"), ParseError);
  EXPECT_THROW(parse_permgroup_text("3\n(1,2\n"), ParseError);
  EXPECT_THROW(parse_permgroup_text("3\n(1,2)(2,3)\n"), ParseError);
  EXPECT_THROW(parse_permgroup_text("3\n1 1 2\n"), ParseError);
  EXPECT_THROW(parse_permgroup_text("3\n1 2\n"), ParseError);
  EXPECT_THROW(parse_permgroup_text("3\n0 1 2\n"), ParseError);
}

TEST(GroupSpec, Constructors) {
  EXPECT_EQ(parse_group_spec("cyclic:12").order(), 12u);
  EXPECT_EQ(parse_group_spec("c12").order(), 12u);
  EXPECT_EQ(parse_group_spec("dihedral:38").order(), 38u);
  EXPECT_EQ(parse_group_spec("D8").order(), 8u);
  EXPECT_EQ(parse_group_spec("gdihedral:E9").order(), 18u);
  EXPECT_EQ(parse_group_spec("frobenius:2,3,7").order(), 56u);
  EXPECT_EQ(parse_group_spec("psl2:7").order(), 168u);
  EXPECT_EQ(parse_group_spec("g16").order(), 16u);
  EXPECT_EQ(parse_group_spec("m:3,3").order(), 27u);
  EXPECT_EQ(parse_group_spec("sd:16").order(), 16u);
  EXPECT_EQ(parse_group_spec("q:16").order(), 16u);
  EXPECT_EQ(parse_group_spec("ea:2,3").order(), 8u);
  EXPECT_EQ(parse_group_spec("sym:4").order(), 24u);
  EXPECT_EQ(parse_group_spec("c2*d8").order(), 16u);
  EXPECT_EQ(parse_group_spec("(c2*c2)*c3").order(), 12u);
  EXPECT_TRUE(is_isomorphic(parse_group_spec("c2*c3"), cyclic(6)).has_value());
}

TEST(GroupSpec, Errors) {
  EXPECT_THROW(parse_group_spec(""), ParseError);
  EXPECT_THROW(parse_group_spec("foo:3"), ParseError);
  EXPECT_THROW(parse_group_spec("e6"), ParseError);
  EXPECT_THROW(parse_group_spec("frobenius:2,3,5"), ParseError);
  EXPECT_THROW(parse_group_spec("cyclic:x"), ParseError);
  EXPECT_THROW(parse_group_spec("perm:/nonexistent/file"), ParseError);
}

TEST(DifferenceSetIo, Paley7) {
  auto S = parse_difference_set_text("c7\n1 2 4\n");
  EXPECT_EQ(S.k, 3u);
  EXPECT_EQ(S.lambda, 1u);
  EXPECT_THROW(parse_difference_set_text("c7\n1 2 3\n"), ParseError);
  EXPECT_THROW(parse_difference_set_text("c7\n1 2 9\n"), ParseError);
  EXPECT_THROW(parse_difference_set_text("s3\n1 2\n"), ParseError);
}

TEST(PartitionIo, Basic) {
  auto P = parse_partition_text("0\n1 3\n2\n", 4);
  ASSERT_EQ(P.size(), 3u);
  EXPECT_EQ(P[1], (std::vector<elem_t>{1, 3}));
  EXPECT_THROW(parse_partition_text("0\n4\n", 4), ParseError);
}

TEST(TableIo, EmptyAndJson) {
  Table t{{"G", "id", "rk"}, {}};
  EXPECT_EQ(emit_table(t, TableFormat::tsv), "G\tid\trk\n");
  EXPECT_EQ(nlohmann::json::parse(emit_table(t, TableFormat::json))["rows"].size(), 0u);
  t.add({"C4", "x", "3"});
  EXPECT_EQ(emit_table(t, TableFormat::tsv), "G\tid\trk\nC4\tx\t3\n");
  auto j = nlohmann::json::parse(emit_table(t, TableFormat::json));
  EXPECT_EQ(j["columns"][0], "G");
  EXPECT_EQ(j["rows"][0]["rk"], 3);
  EXPECT_EQ(j["rows"][0]["G"], "C4");
  EXPECT_THROW(t.add({"a"}), Error);
  EXPECT_THROW(parse_table_format("xml"), ParseError);
}
