#pragma once

#include <cstdint>
#include <vector>

#include "trireduce/handles.hpp"

namespace trireduce {

struct ReductionStats {
    std::uint64_t link_tests = 0;      // full contractibility tests executed
    std::uint64_t link_test_ops = 0;   // elementary membership steps inside those tests
    std::uint64_t retested_edges = 0;  // tests beyond the first per edge identity
    std::uint64_t contractions = 0;
    std::uint64_t final_timestamp = 0;
    std::uint64_t init_ns = 0;
    std::uint64_t run_ns = 0;
};

// one contraction: [kept, removed] plus the elements deleted with it
struct ContractionRecord {
    VertexId kept_vertex;
    VertexId removed_vertex;
    EdgeId removed_edges[3];  // [kept,removed], [removed,x], [removed,y]
    FaceId removed_faces[2];
};

struct ReductionOutcome {
    ReductionStats stats;
    std::vector<ContractionRecord> log;
};

}  // namespace trireduce
