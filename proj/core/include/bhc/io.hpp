#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "bhc/constructor.hpp"
#include "bhc/fault_model.hpp"
#include "bhc/oracles.hpp"
#include "bhc/topology.hpp"

namespace bhc {

/// Malformed input file; `position` is the index of the offending entry, or -1.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, long position) : std::runtime_error(what), position_(position) {}
    long position() const { return position_; }

private:
    long position_;
};

/// Vertices are written as digit arrays [a0, a1, ..., a_{n-1}].
std::vector<int> to_digits(Vertex v, int n);
Vertex from_digits(const std::vector<int>& digits);

/// Fault file: a JSON array of edges, each an array of two digit arrays.
std::string faults_to_json(const Topology& t, const std::vector<Edge>& faults);
/// Canonicalizes and sorts; rejects non-edges and wrong label lengths with the entry index.
std::vector<Edge> parse_faults(const Topology& t, const std::string& text);

/// Cycle file: {"n": n, "cycle": [digit arrays]}.
std::string cycle_to_json(const Topology& t, const HamCycle& c);
HamCycle parse_cycle(const Topology& t, const std::string& text);

std::string trace_to_json(const Topology& t, const CaseTrace& trace);
CaseTrace parse_trace(const std::string& text);

std::string topology_to_json(const Topology& t);
/// Edges colored by dimension; faulty edges dashed, cycle edges bold.
std::string topology_to_dot(const Topology& t, const std::vector<Edge>& faults = {}, const HamCycle* cycle = nullptr);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace bhc
