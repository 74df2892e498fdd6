#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "core/error.hpp"
#include "core/geometry.hpp"

namespace roadvec {

// Road classes 1..5, from walking path (1) to reinforced road wider than
// 5 m (5). Stored 1-based to match the map legend; index() is 0-based for
// probability band lookups.
class RoadClass {
 public:
  RoadClass() = default;
  explicit RoadClass(int value) : value_(value) {
    if (value < 1 || value > 5)
      throw DataError("road class must be in 1..5, got " + std::to_string(value));
  }
  int value() const { return value_; }
  int index() const { return value_ - 1; }
  friend auto operator<=>(RoadClass, RoadClass) = default;

 private:
  int value_ = 1;
};

struct Segment {
  Polyline line;
  int startNode = -1;
  int endNode = -1;
};

// Polyline segments joined at junction nodes. Segment endpoints carry the
// node ids; interior vertices are never nodes.
class RoadNetwork {
 public:
  std::map<int, Point2>& nodes() { return nodes_; }
  const std::map<int, Point2>& nodes() const { return nodes_; }
  std::map<std::string, Segment>& segments() { return segments_; }
  const std::map<std::string, Segment>& segments() const { return segments_; }

  int addNode(Point2 p);
  // Returns the id of an existing node within tol of p, creating one if none.
  int nodeAt(Point2 p, double tol = 1e-9);
  void addSegment(const std::string& id, Polyline line);

  int nodeDegree(int nodeId) const;
  double totalLength() const;

  // Checks polyline validity and that endpoints sit on their nodes (1e-6 m).
  void validate() const;

 private:
  std::map<int, Point2> nodes_;
  std::map<std::string, Segment> segments_;
  int nextNodeId_ = 0;
};

struct Section {
  Polyline line;
  RoadClass roadClass;
  std::string parentSegment;            // id in the unclassified network
  std::optional<std::array<double, 5>> meanProbs;
};

// Output of class assignment: constant-class sections, each derived from one
// network segment. Section ids are "<segment_id>#<k>" for split segments.
class ClassifiedNetwork {
 public:
  std::map<std::string, Section>& sections() { return sections_; }
  const std::map<std::string, Section>& sections() const { return sections_; }
  double totalLength() const;

 private:
  std::map<std::string, Section> sections_;
};

}  // namespace roadvec
