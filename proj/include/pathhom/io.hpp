#pragma once

#include "pathhom/digraph.hpp"
#include "pathhom/graph.hpp"
#include "pathhom/homology.hpp"
#include "pathhom/homotopy.hpp"
#include "pathhom/loops.hpp"
#include "pathhom/sperner.hpp"

#include <optional>
#include <string>

namespace pathhom {

enum class DocumentMode { Digraph, Graph };

// A parsed .dg file. In graph mode `digraph` is the double digraph of `graph`.
struct Document {
  DocumentMode mode = DocumentMode::Digraph;
  Digraph digraph;
  std::optional<UGraph> graph;
};

// Lines: "v NAME", "e A B" (directed), "u A B" (undirected); '#' starts a
// comment. Errors are ParseError with "source:line:column: message".
Document parse_document(const std::string& text, const std::string& source = "<input>");
Document read_document(const std::string& path);
std::string read_file(const std::string& path);

std::string dump_digraph(const Digraph& g);
std::string dump_graph(const UGraph& g);
std::string dump_document(const Document& d);

std::string homology_text(const HomologyResult& r, const Digraph& g);
std::string homology_json(const HomologyResult& r, const Digraph& g);

std::string reduction_text(const ReductionTrace& t);
std::string reduction_json(const ReductionTrace& t);

struct Pi1Report {
  std::vector<LoopWord> loops;
  std::vector<Reduction> reductions;
  std::vector<bool> hurewicz_trivial;
  std::optional<EquivalenceResult> equivalence;
};

Pi1Report pi1_report(const std::vector<LoopWord>& loops, const EquivalenceOptions& options);
std::string pi1_text(const Pi1Report& r);
std::string pi1_json(const Pi1Report& r);

struct SpernerRun {
  Triangulation input;
  Triangulation perturbed;
  std::size_t side_vertices = 0;
  SpernerReport report;
};

SpernerRun sperner_run(const Triangulation& t);
std::string sperner_text(const SpernerRun& r);
std::string sperner_json(const SpernerRun& r);

}  // namespace pathhom
