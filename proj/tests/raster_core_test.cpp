#include <cmath>
#include <cstdint>
#include <fstream>
#include <string>

#include <doctest.h>

#include "core/error.hpp"
#include "core/geo.hpp"
#include "core/network.hpp"
#include "core/raster.hpp"
#include "core/rng.hpp"
#include "io/geojson_io.hpp"
#include "io/probfield_io.hpp"
#include "io/raster_io.hpp"
#include "support.hpp"

using namespace roadvec;
using testsupport::scratchDir;

TEST_SUITE("raster-core") {

TEST_CASE("pixel centers follow the corner-origin convention") {
  GeoTransform t{600000.0, 200000.0, 1.25};
  CHECK(t.pixelCenterX(0) == doctest::Approx(600000.625).epsilon(1e-12));
  CHECK(t.pixelCenterY(0) == doctest::Approx(199999.375).epsilon(1e-12));
  CHECK(t.pixelCenterX(3) == doctest::Approx(600000.0 + 3.5 * 1.25));
  CHECK(t.colOf(600000.625) == 0);
  CHECK(t.rowOf(199999.375) == 0);
  CHECK(t.colOf(600001.26) == 1);
}

TEST_CASE("center snapping moves a point at most pixel_size/sqrt(2)") {
  GeoTransform t{600000.0, 200000.0, 1.25};
  Rng rng(7);
  for (int i = 0; i < 1000; ++i) {
    double x = 600000.0 + rng.uniformReal() * 500.0;
    double y = 200000.0 - rng.uniformReal() * 500.0;
    double cx = t.pixelCenterX(t.colOf(x));
    double cy = t.pixelCenterY(t.rowOf(y));
    CHECK(distance({x, y}, {cx, cy}) <= 1.25 / std::sqrt(2.0) + 1e-9);
  }
}

TEST_CASE("raster construction and semantics validation") {
  CHECK_THROWS_AS(ByteRaster(0, 4, 1, BandSemantics::gray), DataError);
  CHECK_THROWS_AS(ByteRaster(4, -1, 1, BandSemantics::gray), DataError);

  ByteRaster mask(4, 4, 1, BandSemantics::binaryMask);
  validateSemantics(mask);
  mask.at(0, 1, 2) = 2;
  CHECK_THROWS_AS(validateSemantics(mask), DataError);

  ByteRaster labels(4, 4, 1, BandSemantics::classLabel);
  labels.at(0, 0, 0) = 5;
  validateSemantics(labels);
  labels.at(0, 0, 1) = 6;
  CHECK_THROWS_AS(validateSemantics(labels), DataError);
}

TEST_CASE("world file round trip and the center-to-corner shift") {
  auto dir = scratchDir("worldfile");
  std::string path = (dir / "sheet.pgw").string();

  SUBCASE("hand-written center-convention lines produce the corner origin") {
    std::ofstream out(path);
    out << "1.25\n0\n0\n-1.25\n600000.625\n199999.375\n";
    out.close();
    GeoTransform t = readWorldFile(path);
    CHECK(t.originX == doctest::Approx(600000.0).epsilon(1e-12));
    CHECK(t.originY == doctest::Approx(200000.0).epsilon(1e-12));
    CHECK(t.pixelSize == doctest::Approx(1.25));
  }

  SUBCASE("write then read is the identity") {
    GeoTransform t{601234.5, 198765.25, 2.5};
    writeWorldFile(path, t);
    GeoTransform back = readWorldFile(path);
    CHECK(back.almostEqual(t, 1e-9));
  }

  SUBCASE("rotation terms are rejected") {
    std::ofstream out(path);
    out << "1.25\n0.01\n0\n-1.25\n600000.625\n199999.375\n";
    out.close();
    CHECK_THROWS_AS(readWorldFile(path), DataError);
  }

  SUBCASE("missing world file is a data error") {
    CHECK_THROWS_AS(readWorldFile((dir / "absent.pgw").string()), DataError);
  }
}

TEST_CASE("png raster round trips preserve pixels and transform") {
  auto dir = scratchDir("pngio");
  Rng rng(11);

  SUBCASE("4x4 mask") {
    ByteRaster mask(4, 4, 1, BandSemantics::binaryMask, {600000.0, 200000.0, 1.25});
    for (auto& v : mask.band(0)) v = rng.uniformInt(2) ? 1 : 0;
    std::string path = (dir / "mask.png").string();
    writeRaster(path, mask);
    ByteRaster back = readRaster(path, BandSemantics::binaryMask);
    CHECK(back == mask);
  }

  SUBCASE("rgb imagery") {
    ByteRaster rgb(17, 9, 3, BandSemantics::rgb, {610000.0, 190000.0, 1.25});
    for (int b = 0; b < 3; ++b)
      for (auto& v : rgb.band(b)) v = static_cast<std::uint8_t>(rng.uniformInt(256));
    std::string path = (dir / "rgb.png").string();
    writeRaster(path, rgb);
    ByteRaster back = readRaster(path, BandSemantics::rgb);
    CHECK(back == rgb);
  }

  SUBCASE("reading without a world file fails") {
    ByteRaster gray(3, 3, 1, BandSemantics::gray);
    std::string path = (dir / "bare.png").string();
    writeRaster(path, gray);
    std::filesystem::remove(worldFilePathFor(path));
    CHECK_THROWS_AS(readRaster(path, BandSemantics::gray), DataError);
  }
}

TEST_CASE("probability field io") {
  auto dir = scratchDir("probf");
  GeoTransform t{600000.0, 200000.0, 1.25};

  SUBCASE("uniform field round trips bit-exact") {
    ProbabilityField field(6, 5, t);
    for (int b = 0; b < kProbabilityBands; ++b)
      for (auto& v : field.band(b)) v = 1.0f / 6.0f;
    std::string path = (dir / "uniform.probf").string();
    writeProbabilityField(path, field);
    ProbabilityField back = readProbabilityField(path);
    CHECK(back.raster() == field.raster());
  }

  SUBCASE("random field round trips bit-exact") {
    Rng rng(3);
    ProbabilityField field = testsupport::randomField(9, 7, t, rng);
    std::string path = (dir / "random.probf").string();
    writeProbabilityField(path, field);
    ProbabilityField back = readProbabilityField(path);
    CHECK(back.raster() == field.raster());
  }

  SUBCASE("a pixel summing to 0.9 is rejected with its index") {
    ProbabilityField field(4, 4, t);
    for (std::size_t p = 0; p < field.pixelCount(); ++p) field.band(5)[p] = 1.0f;
    field.band(5)[9] = 0.9f;
    std::string path = (dir / "bad.probf").string();
    // Write the raw bytes directly; writeProbabilityField would refuse.
    ProbabilityField good(4, 4, t);
    for (std::size_t p = 0; p < good.pixelCount(); ++p) good.band(5)[p] = 1.0f;
    writeProbabilityField(path, good);
    // Patch one float in band 5 (offset: header line + 5 bands + 9 pixels).
    std::fstream f(path, std::ios::in | std::ios::out | std::ios::binary);
    std::string header;
    std::getline(f, header);
    std::streamoff payload = f.tellg();
    float v = 0.9f;
    f.seekp(payload + static_cast<std::streamoff>((5 * 16 + 9) * sizeof(float)));
    f.write(reinterpret_cast<const char*>(&v), sizeof(v));
    f.close();
    CHECK_THROWS_WITH_AS(readProbabilityField(path).validate(),
                         doctest::Contains("9"), DataError);
  }

  SUBCASE("one-hot field built from labels argmaxes back to the labels") {
    Rng rng(5);
    ByteRaster labels(12, 10, 1, BandSemantics::classLabel, t);
    for (auto& v : labels.band(0)) v = static_cast<std::uint8_t>(rng.uniformInt(6));
    ProbabilityField field = testsupport::oneHotField(
        12, 10, t, [&](std::size_t p) {
          std::uint8_t label = labels.band(0)[p];
          return label == 0 ? 5 : label - 1;
        });
    std::string path = (dir / "onehot.probf").string();
    writeProbabilityField(path, field);
    ProbabilityField back = readProbabilityField(path);
    for (std::size_t p = 0; p < back.pixelCount(); ++p) {
      int expected = labels.band(0)[p] == 0 ? 5 : labels.band(0)[p] - 1;
      CHECK(back.argmaxAt(p) == expected);
    }
  }

  SUBCASE("wrong band count in the header is rejected") {
    std::string path = (dir / "bands.probf").string();
    std::ofstream out(path, std::ios::binary);
    out << "{\"width\": 2, \"height\": 2, \"bands\": 4, \"band_order\": [\"a\"], "
           "\"pixel_size\": 1.25, \"origin_x\": 0, \"origin_y\": 0}\n";
    out.close();
    CHECK_THROWS_AS(readProbabilityField(path), DataError);
  }
}

TEST_CASE("geojson network io") {
  auto dir = scratchDir("geojson");

  SUBCASE("two segments sharing an endpoint rebuild a degree-2 node") {
    RoadNetwork network;
    int a = network.addNode({0.0, 0.0});
    int b = network.addNode({100.0, 0.0});
    int c = network.addNode({100.0, 80.0});
    network.addSegment("s1", {{{0.0, 0.0}, {100.0, 0.0}}, a, b});
    network.addSegment("s2", {{{100.0, 0.0}, {100.0, 80.0}}, b, c});
    std::string path = (dir / "pair.geojson").string();
    writeNetwork(path, network, 21781);
    RoadNetwork back = readNetwork(path);
    CHECK(back.nodes().size() == 3);
    CHECK(back.segments().size() == 2);
    int shared = back.nodeAt({100.0, 0.0});
    REQUIRE(shared >= 0);
    CHECK(back.nodeDegree(shared) == 2);
  }

  SUBCASE("a T junction rebuilds one degree-3 node out of four") {
    RoadNetwork network;
    int center = network.addNode({50.0, 50.0});
    int left = network.addNode({0.0, 50.0});
    int right = network.addNode({100.0, 50.0});
    int top = network.addNode({50.0, 120.0});
    network.addSegment("w", {{{0.0, 50.0}, {50.0, 50.0}}, left, center});
    network.addSegment("e", {{{50.0, 50.0}, {100.0, 50.0}}, center, right});
    network.addSegment("n", {{{50.0, 50.0}, {50.0, 120.0}}, center, top});
    std::string path = (dir / "tee.geojson").string();
    writeNetwork(path, network, 21781);
    RoadNetwork back = readNetwork(path);
    CHECK(back.nodes().size() == 4);
    int junction = back.nodeAt({50.0, 50.0});
    REQUIRE(junction >= 0);
    CHECK(back.nodeDegree(junction) == 3);
    int leaves = 0;
    for (const auto& [id, xy] : back.nodes())
      if (back.nodeDegree(id) == 1) ++leaves;
    CHECK(leaves == 3);
  }

  SUBCASE("vertex coordinates survive to 1e-9") {
    RoadNetwork network;
    Polyline line{{600000.123456789, 200000.987654321},
                  {600050.5, 200010.25},
                  {600100.000000001, 199990.375}};
    int a = network.addNode(line.front());
    int b = network.addNode(line.back());
    network.addSegment("s", {line, a, b});
    std::string path = (dir / "precise.geojson").string();
    writeNetwork(path, network, 21781);
    RoadNetwork back = readNetwork(path);
    const Polyline& got = back.segments().at("s").line;
    REQUIRE(got.size() == line.size());
    for (std::size_t i = 0; i < line.size(); ++i) {
      CHECK(got[i].x == doctest::Approx(line[i].x).epsilon(0).scale(1e-9));
      CHECK(got[i].y == doctest::Approx(line[i].y).epsilon(0).scale(1e-9));
    }
  }

  SUBCASE("classified sections round trip class and parent") {
    ClassifiedNetwork network;
    Section section;
    section.line = {{0.0, 0.0}, {200.0, 10.0}};
    section.roadClass = RoadClass(3);
    section.parentSegment = "seg9";
    section.meanProbs = {{0.05, 0.1, 0.7, 0.1, 0.05}};
    network.sections()["seg9#0"] = section;
    std::string path = (dir / "classified.geojson").string();
    writeClassifiedNetwork(path, network, 21781);
    ClassifiedNetwork back = readClassifiedNetwork(path);
    REQUIRE(back.sections().count("seg9#0") == 1);
    const Section& got = back.sections().at("seg9#0");
    CHECK(got.roadClass.value() == 3);
    CHECK(got.parentSegment == "seg9");
    REQUIRE(got.meanProbs.has_value());
    CHECK((*got.meanProbs)[2] == doctest::Approx(0.7));
  }

  SUBCASE("road_class outside 1..5 is rejected") {
    std::string path = (dir / "badclass.geojson").string();
    std::ofstream out(path);
    out << R"({"type": "FeatureCollection", "features": [{"type": "Feature",)"
        << R"( "geometry": {"type": "LineString", "coordinates": [[0,0],[10,0]]},)"
        << R"( "properties": {"segment_id": "x", "road_class": 7}}]})";
    out.close();
    CHECK_THROWS_AS(readClassifiedNetwork(path), DataError);
  }

  SUBCASE("non-LineString geometry is rejected") {
    std::string path = (dir / "point.geojson").string();
    std::ofstream out(path);
    out << R"({"type": "FeatureCollection", "features": [{"type": "Feature",)"
        << R"( "geometry": {"type": "Point", "coordinates": [0,0]},)"
        << R"( "properties": {"segment_id": "x"}}]})";
    out.close();
    CHECK_THROWS_AS(readNetwork(path), DataError);
  }
}

TEST_CASE("road class bounds") {
  CHECK_THROWS_AS(RoadClass(0), DataError);
  CHECK_THROWS_AS(RoadClass(6), DataError);
  CHECK(RoadClass(4).index() == 3);
}

}  // TEST_SUITE
