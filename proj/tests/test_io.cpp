#include <ckhopf/corpus.hpp>
#include <ckhopf/enumerate.hpp>
#include <ckhopf/hopf.hpp>
#include <ckhopf/io.hpp>
#include <ckhopf/tensor.hpp>

#include <gtest/gtest.h>

using namespace ckhopf;
using io::json;

namespace {

ErrorCode code_of(const std::function<void()>& f)
{
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::NonPairEdge;
}

} // namespace

TEST(Rational, TextForm)
{
  EXPECT_EQ(to_string(Rational(3, 6)), "1/2");
  EXPECT_EQ(to_string(Rational(-4)), "-4");
  EXPECT_EQ(parse_rational("-2/4"), Rational(-1, 2));
  EXPECT_EQ(parse_rational("7"), 7);
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
}

TEST(GraphJson, RoundTripCorpus)
{
  for (int n = 0; n <= 3; ++n)
    for (const CanonicalForm& cf : enumerate_graphs(n, GraphFilter::All)) {
      const json j = io::to_json(cf.graph);
      EXPECT_EQ(io::graph_from_json(j), cf.graph);
      EXPECT_EQ(io::graph_from_json(json::parse(j.dump())), cf.graph);
    }
}

TEST(GraphJson, KeysAreSortedAndCompact)
{
  const std::string s = io::to_json(corpus::loop1()).dump();
  EXPECT_EQ(s, R"({"edges":[[0,1]],"external":[],"half_edges":[0,1],"vertices":[[0,1]]})");
  EXPECT_EQ(graph_json_string(corpus::loop1()), s);
}

TEST(GraphJson, Errors)
{
  EXPECT_EQ(code_of([] { io::graph_from_json(json::parse(R"({"edges":[]})")); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { io::graph_from_json(json::parse(R"({"edges":"x","external":[],"half_edges":[],"vertices":[]})")); }),
            ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { io::graph_from_json(json::parse(R"({"edges":[[0,1,2]],"external":[],"half_edges":[0,1,2],"vertices":[[0,1,2]]})")); }),
            ErrorCode::NonPairEdge);
  EXPECT_EQ(code_of([] { io::detail::parse_text("{"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { io::read_file("/nonexistent/file.json"); }), ErrorCode::ParseError);
}

TEST(PolyJson, RoundTrip)
{
  const GraphPoly p = GraphPoly::basis(corpus::bubble(), Rational(-3, 7)) + GraphPoly::basis(corpus::twoleg(), 2);
  EXPECT_EQ(io::graph_poly_from_json(io::to_json(p)), p);
  EXPECT_EQ(io::graph_poly_from_json(json::array()), GraphPoly());
  EXPECT_EQ(code_of([] { io::graph_poly_from_json(json::object()); }), ErrorCode::ParseError);
  json bad = io::to_json(p);
  bad[0]["coefficient"] = "1/0";
  EXPECT_EQ(code_of([&] { io::graph_poly_from_json(bad); }), ErrorCode::ParseError);
}

TEST(TensorPolyJson, RoundTrip)
{
  const GraphTensorPoly d = coproduct(corpus::bubble());
  EXPECT_EQ(io::graph_tensor_poly_from_json(io::to_json(d)), d);
  EXPECT_EQ(code_of([] { io::graph_tensor_poly_from_json(json::parse(R"([{"coefficient":"1"}])")); }),
            ErrorCode::ParseError);
}

TEST(InvariantJson, RoundTrip)
{
  const InvariantTensor t = phi(corpus::twoleg(), 3);
  EXPECT_EQ(io::invariant_tensor_from_json(io::to_json(t)), t);
  const InvariantTensorPair p = tensor_delta(phi(corpus::bubble(), 3), 2, 1);
  EXPECT_EQ(io::invariant_tensor_pair_from_json(io::to_json(p)), p);
  EXPECT_EQ(code_of([] { io::invariant_tensor_from_json(json::parse(R"({"terms":[]})")); }), ErrorCode::ParseError);
}

TEST(InvariantJson, ByteStable)
{
  const std::string a = io::to_json(phi(corpus::bubble(), 2)).dump();
  const std::string b = io::to_json(phi(corpus::bubble(), 2)).dump();
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, R"({"dimension":2,"terms":[{"blocks":[[1,1],[1,1]],"coeff":"1","external":[]},)"
               R"({"blocks":[[1,2],[1,2]],"coeff":"2","external":[]},)"
               R"({"blocks":[[2,2],[2,2]],"coeff":"1","external":[]}]})");
}

TEST(Text, GraphPoly)
{
  EXPECT_EQ(io::to_text(GraphPoly::basis(corpus::bubble(), 2)), "2 * bubble");
  EXPECT_EQ(io::to_text(GraphPoly()), "0");
  const GraphPoly s = antipode(GraphPoly::basis(corpus::bubble()));
  const std::string text = io::to_text(s);
  EXPECT_NE(text.find("-1 * bubble"), std::string::npos);
  EXPECT_NE(text.find("2 * (twoleg ⊔ loop1)"), std::string::npos);
}

TEST(Text, Coproduct)
{
  const std::string text = io::to_text(coproduct(corpus::loop1()));
  EXPECT_NE(text.find("1 * 1 (x) loop1"), std::string::npos);
  EXPECT_NE(text.find("loop1 (x) 1"), std::string::npos);
}

TEST(Text, Tensor)
{
  EXPECT_EQ(io::to_text(phi(corpus::loop1(), 2)), "1 * [x1*x1; 1] + 1 * [x2*x2; 1]");
}

TEST(Corpus, Lookup)
{
  EXPECT_TRUE(corpus::lookup("bubble").has_value());
  EXPECT_FALSE(corpus::lookup("nope").has_value());
  EXPECT_EQ(corpus::name_of(canonical_key(corpus::twoleg())), "twoleg");
  EXPECT_EQ(corpus::find("dot_2")->graph.grade().external, 2);
  EXPECT_FALSE(corpus::name_of(canonical_key(disjoint_union(corpus::loop1(), corpus::loop1()))).has_value());
}
