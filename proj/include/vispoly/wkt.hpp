#pragma once

#include "vispoly/polygon.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace vispoly {

enum class WktErrorKind { Syntax, TooFewVertices, Validation };

class WktError : public std::runtime_error {
  public:
    WktError(WktErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    WktErrorKind kind() const { return kind_; }

  private:
    WktErrorKind kind_;
};

// Parses POLYGON text with decimal or rational (p/q) coordinates. The first
// ring is the outer boundary, the rest are holes. Leading lines starting
// with '#' are skipped; whitespace and newlines are insignificant. Rings
// with wrong orientation are flipped and reported through warnings.
PolygonWithHoles parse_wkt(const std::string& text, std::vector<std::string>* warnings = nullptr);

std::string emit_wkt(const PolygonWithHoles& p);

// Ring-only emission, used for visibility polygon output.
std::string emit_wkt_ring(const std::vector<Point>& ring);

}  // namespace vispoly
