#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "concentra/catalg.hpp"
#include "concentra/concentration.hpp"
#include "concentra/core.hpp"
#include "concentra/dirlim.hpp"
#include "concentra/monoid.hpp"

namespace concentra {

/// Schema or cross-reference violation in a workspace file; the message
/// carries the JSON field path.
class workspace_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct NamedPartition {
  std::string category;
  MorphismPartition partition;
};

struct NamedFunctor {
  std::string source;
  std::string target;
  FunctorData functor;
};

struct NamedDiagram {
  std::string poset;
  std::vector<std::string> groups;  // monoid names, repeated names share one entry
  GroupDiagram diagram;
};

struct NamedAction {
  std::string poset;
  std::string group;
  PosetAction action;
};

/// Named collections of the objects a command can refer to. Loading resolves
/// every cross-reference and enforces structural well-formedness; semantic
/// checks (category axioms, concentration axioms, ...) are left to the
/// commands that need them.
struct WorkspaceDocument {
  int version = 1;
  std::map<std::string, CatRef> categories;
  std::map<std::string, NamedPartition> partitions;
  std::map<std::string, NamedFunctor> functors;
  std::map<std::string, MonoidRef> monoids;
  std::map<std::string, DirectedPoset> posets;
  std::map<std::string, NamedDiagram> diagrams;
  std::map<std::string, NamedAction> actions;
};

WorkspaceDocument load_workspace(const std::string& path);
WorkspaceDocument parse_workspace(const std::string& json_text);
std::string serialize_workspace(const WorkspaceDocument& doc);
void save_workspace(const WorkspaceDocument& doc, const std::string& path);

}  // namespace concentra
