#pragma once

#include "homnambu/multilinear.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace homnambu {

class IoError : public std::runtime_error {
public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/* On-disk description of an algebra and its companions, format
 * "homnambu/1".  UTF-8 JSON; every scalar is carried as a grammar
 * string, never as a JSON number, so nothing is rounded; index keys are
 * 1-based, comma-joined, strictly increasing.  write() emits the
 * canonical form (sorted keys, no zero entries), and reading canonical
 * text back reproduces it byte for byte. */
struct AlgebraFile {
  ParameterContext params;  // empty = rational mode
  VectorSpaceDecl space;
  std::optional<SkewMap> bracket;
  std::vector<std::pair<std::string, LinearMap>> twists;  // ordered
  std::map<std::string, LinearMap> maps;
  std::map<std::string, TraceFunctional> traces;
  std::map<std::string, PForm> pforms;
  std::vector<std::string> notes;

  bool rational_mode() const { return params.empty(); }

  /* Bracket plus the ordered twist list. */
  HomNambuAlgebra algebra() const;

  const LinearMap& map_or_throw(const std::string& name) const;
  const TraceFunctional& trace_or_throw(const std::string& name) const;
  const PForm& pform_or_throw(const std::string& name) const;
};

AlgebraFile read_algebra_file(const std::string& path);
AlgebraFile parse_algebra_text(const std::string& text);
std::string write_algebra_text(const AlgebraFile& f);
void write_algebra_file(const AlgebraFile& f, const std::string& path);

}  // namespace homnambu
