#include <wsym/catalog.hpp>
#include <wsym/io.hpp>

#include <gtest/gtest.h>

using namespace wsym;

TEST(Io, RationalFromJson) {
  EXPECT_EQ(io::rational_from_json(json("-3/4")), make_rational(-3, 4));
  EXPECT_EQ(io::rational_from_json(json(5)), Rational(5));
  EXPECT_THROW(io::rational_from_json(json(0.5)), std::invalid_argument);
  EXPECT_THROW(io::rational_from_json(json("x")), std::invalid_argument);
}

TEST(Io, AlgebraRoundTrip) {
  for (const LieAlgebra& g : {kath_olbrich_algebra(3), sl3_algebra(), heisenberg_space(1, 1, 1, 1).space.algebra()}) {
    LieAlgebra back = io::algebra_from_json(json::parse(io::algebra_to_json(g).dump()));
    EXPECT_EQ(back.names(), g.names());
    for (std::size_t i = 0; i < g.dim(); ++i)
      for (std::size_t j = 0; j < g.dim(); ++j) EXPECT_EQ(bracket(back, back.basis_vector(i), back.basis_vector(j)), bracket(g, g.basis_vector(i), g.basis_vector(j)));
  }
}

TEST(Io, FormRoundTrip) {
  BilinearForm f = killing_form(sl3_algebra());
  EXPECT_EQ(io::form_from_json(io::form_to_json(f)), f);
  BilinearForm r = BilinearForm::diagonal({make_rational(1, 3), -2});
  EXPECT_EQ(io::form_from_json(json::parse(io::form_to_json(r).dump())), r);
}

TEST(Io, SpaceRoundTrip) {
  for (const auto& id : catalog_ids()) {
    CatalogEntry e = make_catalog_entry(id, {{"n", 2}, {"p", 1}, {"q", 1}, {"a", 2}, {"b", -1}});
    json j = io::catalog_entry_to_json(e);
    io::SpaceBundle b = io::space_from_json(json::parse(j.dump()));
    EXPECT_EQ(b.id, id);
    EXPECT_EQ(b.space.metric(), e.space.metric());
    EXPECT_EQ(b.space.m(), e.space.m());
    EXPECT_EQ(b.space.h(), e.space.h());
    EXPECT_EQ(b.nilradical.has_value(), e.nilradical.has_value());
    if (b.nilradical) {
      EXPECT_EQ(*b.nilradical, *e.nilradical);
    }
    EXPECT_EQ(io::space_to_json(b.space, b.nilradical, b.id).dump(), io::space_to_json(e.space, e.nilradical, e.id).dump());
  }
}

TEST(Io, FrameEntriesByNameOrArray) {
  LieAlgebra g = heisenberg_algebra(1, 0);
  auto frame = io::detail::frame_from_json(g, json::parse(R"(["z", ["0", "1", "1"]])"));
  ASSERT_EQ(frame.size(), 2u);
  EXPECT_EQ(frame[0], g.basis_vector("z"));
  EXPECT_EQ(frame[1], (Vector{0, 1, 1}));
  EXPECT_THROW(io::detail::frame_from_json(g, json::parse(R"(["w"])")), std::invalid_argument);
  EXPECT_THROW(io::detail::frame_from_json(g, json::parse(R"([["1"]])")), std::invalid_argument);
  EXPECT_THROW(io::detail::frame_from_json(g, json::parse(R"([3])")), std::invalid_argument);
}

TEST(Io, MalformedInput) {
  EXPECT_THROW(io::algebra_from_json(json::parse(R"({"dim": 2, "basis": ["a"]})")), std::invalid_argument);
  EXPECT_THROW(io::algebra_from_json(json::parse(R"({"dim": 2, "basis": ["a", "b"], "brackets": [{"i": "b", "j": "a", "terms": []}]})")),
               std::invalid_argument);
  EXPECT_THROW(io::algebra_from_json(json::parse(R"({"basis": ["a"]})")), json::exception);
  EXPECT_THROW(io::form_from_json(json::parse(R"({"dim": 2, "gram": [["1", "2"], ["3", "4"]]})")), std::invalid_argument);
  EXPECT_THROW(io::form_from_json(json::parse(R"({"dim": 2, "gram": [["1", "0"]]})")), std::invalid_argument);
  EXPECT_THROW(io::read_json_file("/nonexistent/wsym.json"), std::invalid_argument);
}
