#pragma once

#include <map>
#include <string>
#include <vector>

#include "catcore/errors.hpp"
#include "catcore/gaction.hpp"

namespace catcore {

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(what), line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_, column_;
};

// A well-formed document whose content breaks the schema; path names the field.
class SchemaError : public Error {
 public:
  SchemaError(const std::string& what, std::string path) : Error(what), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// Loaded data that fails an axiom check.
class ValidationError : public WitnessError {
 public:
  ValidationError(const std::string& what, std::string tag, std::vector<int> witness)
      : WitnessError(what, std::move(witness)), tag_(std::move(tag)) {}
  const std::string& tag() const { return tag_; }

 private:
  std::string tag_;
};

struct Workspace {
  std::map<std::string, FinGroup> groups;
  std::map<std::string, Fin2CatPtr> cats;
  std::map<std::string, ActionPtr> actions;
  // name → origin (file path or "<text>").
  std::map<std::string, std::string> origin;

  bool empty() const { return groups.empty() && cats.empty() && actions.empty(); }
  bool has(const std::string& name) const { return origin.count(name) > 0; }
};

// Document grammar, one statement per line, '#' starts a comment:
//
//   group NAME
//     elements e a b ...
//     unit e
//     row x  x·e x·a x·b ...
//   end
//   2cat NAME
//     objects A B ...
//     1cell x A B
//     2cell alpha x y
//     unit A x          id x alpha
//     h1 x y z          (z = x∘y)
//     v b a c           (c = b·a)
//     h2 b a c
//   end
//   action NAME
//     group G
//     base B
//     F g obj A B       F g map1 x y      F g map2 a b
//     F g comp x y a    F g unit A a
//     chi g h c0 A x    chi g h c2 x a
//     omega g h f A a
//   end
//
// Names are resolved against `ws` and earlier blocks. Compositors, unit
// constraints, χ pairs and ω triples may be omitted where the identity fits.
// Loaded objects are validated before they are registered.
void parse_document(const std::string& text, Workspace& ws, const std::string& origin = "<text>");
Workspace parse_document(const std::string& text);

std::string serialize_group(const FinGroup& g, const std::string& name);
std::string serialize_2cat(const Fin2Cat& b, const std::string& name);
std::string serialize_action(const GroupAction2& a, const std::string& name,
                             const std::string& group_name, const std::string& base_name);

// Reads every *.grp, *.2cat and *.act file in a directory, in that order.
void load_directory(const std::string& dir, Workspace& ws);
void load_file(const std::string& path, Workspace& ws);

}  // namespace catcore
