#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace dichro {

enum class Relation { Equal, AtMost };

/// Gate entries fail a run on mismatch; Note entries only record the
/// difference in the report.
enum class Severity { Gate, Note };

struct ExpectedCount {
  std::string_view pipeline;
  std::string_view key;
  std::int64_t value;
  Relation relation;
  Severity severity;
  std::string_view source;
};

// clang-format off
inline constexpr std::array kExpectedCounts = {
    ExpectedCount{"census7", "tournaments", 456, Relation::Equal, Severity::Gate, "independent brute-force enumeration"},
    ExpectedCount{"census7", "chi3_tournaments", 4, Relation::Equal, Severity::Gate, "the four 7-vertex 3-dichromatic tournaments"},
    ExpectedCount{"census7", "dicritical_20_arcs", 1, Relation::Equal, Severity::Gate, "unique 20-arc 3-dicritical oriented graph"},
    ExpectedCount{"census8", "tournaments", 6880, Relation::Equal, Severity::Gate, "independent extend-and-dedupe enumeration"},
    ExpectedCount{"census8", "tournaments", 6440, Relation::Equal, Severity::Note, "published count of 8-vertex tournaments"},
    ExpectedCount{"census8", "chi3_free_tournaments", 64, Relation::Equal, Severity::Gate, "published count of 8-vertex 3-dichromatic tournaments free of the 7-vertex ones"},
    ExpectedCount{"descend", "dicritical", 159, Relation::Equal, Severity::Gate, "published count of 8-vertex 3-dicritical oriented graphs"},
    ExpectedCount{"descend", "arcs_21", 1, Relation::Equal, Severity::Gate, "published arc histogram"},
    ExpectedCount{"descend", "arcs_22", 11, Relation::Equal, Severity::Gate, "published arc histogram"},
    ExpectedCount{"descend", "arcs_23", 84, Relation::Equal, Severity::Gate, "published arc histogram"},
    ExpectedCount{"descend", "arcs_24", 51, Relation::Equal, Severity::Gate, "published arc histogram"},
    ExpectedCount{"descend", "arcs_25", 12, Relation::Equal, Severity::Gate, "published arc histogram"},
    ExpectedCount{"cover", "cover_size", 9, Relation::AtMost, Severity::Gate, "published covering set of 9 graphs"},
    ExpectedCount{"cover", "min_containment", 2, Relation::Equal, Severity::Note, "published least containment count"},
    ExpectedCount{"cover", "max_containment", 34, Relation::Equal, Severity::Note, "published largest containment count"},
    ExpectedCount{"minarcs9-19", "orientations", 33700, Relation::Equal, Severity::Gate, "published count of 9-vertex 19-arc candidates"},
    ExpectedCount{"minarcs9-19", "failures", 0, Relation::Equal, Severity::Gate, "every candidate is 2-dicolourable"},
    ExpectedCount{"minarcs9-20", "orientations", 721603, Relation::Equal, Severity::Gate, "published count of 9-vertex 20-arc candidates"},
    ExpectedCount{"minarcs9-20", "failures", 0, Relation::Equal, Severity::Gate, "every candidate is 2-dicolourable"},
    ExpectedCount{"saturate", "saturated", 0, Relation::Equal, Severity::Gate, "no saturated 2-dichromatic oriented graph"},
};
// clang-format on

}  // namespace dichro
