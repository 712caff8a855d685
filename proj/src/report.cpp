#include "homnambu/report.hpp"

#include <sstream>

namespace homnambu {

namespace {

void print_tuple(std::ostream& os, const std::vector<int>& t,
                 const VectorSpaceDecl& space) {
  os << "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) os << ",";
    os << space.basis[t[i]];
  }
  os << ")";
}

}  // namespace

std::string to_string(const Violation& v, const VectorSpaceDecl& space,
                      const ParameterContext& ctx) {
  std::ostringstream os;
  os << "at ";
  for (std::size_t b = 0; b < v.blocks.size(); ++b) {
    if (b) os << ", ";
    print_tuple(os, v.blocks[b], space);
  }
  if (!v.where.empty()) os << " [" << v.where << "]";
  os << ": ";
  if (std::holds_alternative<Scalar>(v.defect))
    os << to_string(std::get<Scalar>(v.defect), ctx);
  else
    os << to_string(std::get<Vector>(v.defect), space, ctx);
  return os.str();
}

std::string to_string(const CheckReport& r, const VectorSpaceDecl& space,
                      const ParameterContext& ctx) {
  std::ostringstream os;
  os << r.identity << ": " << (r.pass() ? "pass" : "FAIL");
  if (r.vacuous) os << " (vacuous)";
  os << ", " << r.tuples_checked << " tuples";
  if (!r.note.empty()) os << "; " << r.note;
  for (const auto& v : r.violations) os << "\n  defect " << to_string(v, space, ctx);
  return os.str();
}

}  // namespace homnambu
