#pragma once

#include <map>
#include <string>
#include <vector>

#include "textiles/moves.hpp"
#include "textiles/twograph.hpp"

namespace textiles {

struct ParseIssue {
  int line = 0;
  std::string message;
};

class ParseError : public Error {
 public:
  explicit ParseError(std::vector<ParseIssue> issues);
  const std::vector<ParseIssue>& issues() const { return issues_; }

 private:
  static std::string render(const std::vector<ParseIssue>& issues);
  std::vector<ParseIssue> issues_;
};

// A document in the line-oriented fixture format: named graphs, graph
// homomorphisms, textile systems (by reference), 2-graphs and partitions.
// Parsing resolves every cross-reference; theory-level validation happens
// when a structure is instantiated.
struct SpecDocument {
  struct HomDecl {
    std::string domain, codomain;
    GraphHom hom;
  };
  struct TextileDecl {
    std::string f, e, p, q;
  };
  struct TwoGraphDecl {
    std::string graph;
    std::map<std::string, int> colors;
    std::vector<CommutingSquare> squares;
  };
  struct PartitionDecl {
    enum Kind { Graph, TwoGraph } kind = Graph;
    std::string target;
    PartitionClasses classes;  // vertices omitted here get one class with everything
  };

  int format_version = 1;
  std::map<std::string, DirectedGraph> graphs;
  std::map<std::string, HomDecl> homs;
  std::map<std::string, TextileDecl> textiles;
  std::map<std::string, TwoGraphDecl> twographs;
  std::map<std::string, PartitionDecl> partitions;

  TextileSystem textile(const std::string& name) const;
  textiles::TwoGraph twograph(const std::string& name) const;
  GraphInsplitPartition graph_partition(const std::string& name) const;
  TwoGraphInsplitPartition twograph_partition(const std::string& name) const;
  const PartitionDecl& partition_decl(const std::string& name) const;
};

SpecDocument parse_spec(const std::string& text);
std::string serialize(const SpecDocument& doc);

}  // namespace textiles
