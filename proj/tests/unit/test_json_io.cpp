#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "vngeom/json_io.hpp"
#include "vngeom/group_algebra.hpp"
#include "vngeom/sampling.hpp"

using namespace vngeom;
using Json = nlohmann::json;
namespace io = vngeom::json;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::FitFailure;  // sentinel: no error
}

}  // namespace

TEST(JsonGroup, RoundTrip) {
  for (const char* kind : {"cyclic:5", "quaternion8", "symmetric:4", "dihedral:3*cyclic:2"}) {
    const FiniteGroup g = build_named(GroupKind::parse(kind));
    const FiniteGroup back = io::group_from_json(io::parse(io::to_json(g).dump()));
    EXPECT_EQ(back.cayley_rows(), g.cayley_rows());
    EXPECT_EQ(back.labels(), g.labels());
  }
}

TEST(JsonGroup, Malformed) {
  EXPECT_EQ(kind_of([] { io::parse("{\"cayley\": [[0, 1], [1, 0]"); }), ErrorKind::MalformedInput);
  EXPECT_EQ(kind_of([] { io::group_from_json(io::parse("{}")); }), ErrorKind::MalformedInput);
  EXPECT_EQ(kind_of([] { io::group_from_json(io::parse(R"({"cayley": [[0, "a"], [1, 0]]})")); }), ErrorKind::MalformedInput);
  EXPECT_EQ(kind_of([] { io::group_from_json(io::parse(R"({"order": 3, "cayley": [[0, 1], [1, 0]]})")); }),
            ErrorKind::MalformedInput);
  EXPECT_EQ(kind_of([] { io::group_from_json(io::parse(R"({"cayley": [[0, 1], [0, 1]]})")); }), ErrorKind::NotLatinSquare);
  EXPECT_EQ(kind_of([] { io::resolve_group(Json(42)); }), ErrorKind::MalformedInput);
  EXPECT_EQ(kind_of([] { io::resolve_group(Json("no-such-kind:3")); }), ErrorKind::MalformedInput);
}

TEST(JsonGroup, ResolveForms) {
  EXPECT_EQ(io::resolve_group(Json("cyclic:7")).order(), 7u);
  const auto dir = std::filesystem::temp_directory_path() / "vngeom_json_io";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "s3.json") << io::to_json(build_named(GroupKind::symmetric(3))).dump();
  EXPECT_EQ(io::resolve_group(Json("s3.json"), dir).order(), 6u);
  const GroupFunction phi = io::function_from_json(io::parse(R"({"group": "s3.json", "re": [1, 0, 0, 0, 0, 0]})"), dir);
  EXPECT_EQ(phi.values(0), Complex(1.0, 0.0));
}

TEST(JsonFunction, RoundTripAndCounts) {
  const FiniteGroup g = build_named(GroupKind::quaternion8());
  Rng rng(2);
  const GroupFunction phi{g, algebra::random_element(g, rng)};
  const GroupFunction back = io::function_from_json(io::parse(io::to_json(phi).dump()));
  EXPECT_EQ(back.values, phi.values);
  EXPECT_EQ(kind_of([] { io::function_from_json(io::parse(R"({"group": "cyclic:3", "re": [1, 0]})")); }),
            ErrorKind::MalformedInput);
  EXPECT_EQ(kind_of([] { io::function_from_json(io::parse(R"({"group": "cyclic:2", "re": [1, 0], "im": [0]})")); }),
            ErrorKind::MalformedInput);
  EXPECT_EQ(kind_of([] { io::function_from_json(io::parse(R"({"re": [1]})")); }), ErrorKind::MalformedInput);
}

TEST(JsonMatrix, RoundTrip) {
  Rng rng(3);
  const CMatrix m = random_unitary(3, rng).leftCols(2);
  EXPECT_EQ(io::matrix_from_json(io::parse(io::to_json(m).dump())), m);
  EXPECT_EQ(kind_of([] { io::matrix_from_json(io::parse(R"({"rows": 2, "cols": 2, "re": [1, 2, 3]})")); }),
            ErrorKind::MalformedInput);
}

TEST(JsonDescriptor, RoundTrip) {
  Rng rng(4);
  const AffineHomeoDescriptor d = random_descriptor({1, 1, 2, 3, 3}, rng);
  const AffineHomeoDescriptor back = io::descriptor_from_json(io::parse(io::to_json(d).dump()));
  EXPECT_EQ(back.sigma, d.sigma);
  EXPECT_EQ(back.transpose, d.transpose);
  EXPECT_LT(descriptor_distance(back, d), 1e-15);
}

TEST(JsonChannel, RoundTrip) {
  const FiniteGroup g = build_named(GroupKind::cyclic(4));
  const FourierMultiplierChannel ch = build_channel(GroupFunction::delta_e(g));
  const FourierMultiplierChannel back = io::channel_from_json(io::parse(io::to_json(ch).dump()));
  EXPECT_EQ(back.symbol.values, ch.symbol.values);
}

TEST(JsonError, Shape) {
  const Error e(ErrorKind::NotAssociative, "x(yz) differs", {{"triple", {1, 2, 3}}});
  const Json j = io::to_json(e);
  EXPECT_EQ(j.at("error"), "NotAssociative");
  EXPECT_EQ(j.at("witness").at("triple"), Json({1, 2, 3}));
}
