#include "nsym/expr/value.hpp"

#include "nsym/format.hpp"

namespace nsym::expr {

namespace {

struct KindName {
  std::string operator()(double) const { return "scalar"; }
  std::string operator()(const tif::Triple&) const { return "triple"; }
  std::string operator()(const tif::IntervalTriple&) const { return "interval_triple"; }
  std::string operator()(const tif::TfPair&) const { return "pair"; }
  std::string operator()(const tif::Weighted&) const { return "weighted_triple"; }
  std::string operator()(const lit::Formula&) const { return "formula"; }
  std::string operator()(const ind::NeutroNumber&) const { return "neutro_number"; }
  std::string operator()(const ind::RefinedNumber&) const { return "refined_number"; }
  std::string operator()(const ind::Decomposition&) const { return "decomposition"; }
  std::string operator()(const ind::VennRegions&) const { return "venn_regions"; }
  std::string operator()(const quad::QuadNumber&) const { return "quadruple"; }
  std::string operator()(const quad::RefinedQuad&) const { return "refined_quadruple"; }
  std::string operator()(const hyper::NComplex&) const { return "hypercomplex"; }
  std::string operator()(const hyper::Dual&) const { return "dual"; }
  std::string operator()(const hyper::Quaternion&) const { return "quaternion"; }
};

struct Printer {
  std::string operator()(double v) const { return fmt_real(v); }
  std::string operator()(const tif::Triple& v) const { return v.str(); }
  std::string operator()(const tif::IntervalTriple& v) const { return v.str(); }
  std::string operator()(const tif::TfPair& v) const { return v.str(); }
  std::string operator()(const tif::Weighted& v) const { return v.str(); }
  std::string operator()(const lit::Formula& v) const { return v.str(); }
  std::string operator()(const ind::NeutroNumber& v) const { return ind::to_string(v); }
  std::string operator()(const ind::RefinedNumber& v) const { return ind::to_string(v); }
  std::string operator()(const ind::Decomposition& v) const { return v.str(); }
  std::string operator()(const ind::VennRegions& v) const { return v.str(); }
  std::string operator()(const quad::QuadNumber& v) const { return v.str(); }
  std::string operator()(const quad::RefinedQuad& v) const { return v.str(); }
  std::string operator()(const hyper::NComplex& v) const { return v.str(); }
  std::string operator()(const hyper::Dual& v) const { return v.str(); }
  std::string operator()(const hyper::Quaternion& v) const { return v.str(); }
};

}  // namespace

std::string kind_name(const Value& v) { return std::visit(KindName{}, v); }
std::string to_string(const Value& v) { return std::visit(Printer{}, v); }

}  // namespace nsym::expr
