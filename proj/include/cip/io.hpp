#ifndef CIP_IO_HPP
#define CIP_IO_HPP

#include <iosfwd>
#include <string>

#include "cip/graph.hpp"
#include "cip/solver.hpp"

namespace cip {

enum class GraphFormat { auto_detect, edge_list, dimacs };

// Edge list: one "u v" pair per line, '#' or '%' starts a comment, indexing
// base detected from the smallest id (0 keeps ids, otherwise shift to 0).
// DIMACS: "p edge <n> <m>" header, "e u v" lines, 1-indexed, 'c' comments.
// A header/edge-count mismatch warns on stderr and keeps the actual edges.
// Malformed input throws InputError carrying file name and line number.
Graph parse_graph(const std::string& path, GraphFormat format = GraphFormat::auto_detect,
                  int bitset_threshold = Graph::kDefaultBitsetThreshold);

Graph parse_graph_stream(std::istream& in, const std::string& name, GraphFormat format,
                         int bitset_threshold = Graph::kDefaultBitsetThreshold);

struct SolveReport {
    std::string name; // instance label, usually the file stem
    int n = 0;
    long long m = 0;
    int k = 0;
    double k_fraction = -1.0; // < 0 when k was given absolutely
    SolveResult result;
};

std::string report_json(const SolveReport& rep);
std::string report_text(const SolveReport& rep);

// One row per solved instance; stage columns aggregate what each reduction
// removed. theta equals ub on timeout rows.
std::string bench_csv_header();
std::string bench_csv_row(const SolveReport& rep);

} // namespace cip

#endif
