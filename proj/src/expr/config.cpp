#include "nsym/expr/config.hpp"

#include <algorithm>

namespace nsym::expr {

bool EvalConfig::order_is_refined() const {
  return std::any_of(order.chain().begin(), order.chain().end(),
                     [](lit::Lit l) { return l.refined(); });
}

lit::PrevOrder EvalConfig::coarse_order() const {
  if (!order_is_refined()) return order;
  std::vector<lit::Lit> classes;
  for (lit::Lit l : order.chain()) {
    lit::Lit c{l.kind, 0};
    if (std::find(classes.begin(), classes.end(), c) == classes.end()) classes.push_back(c);
  }
  return lit::PrevOrder(std::move(classes));
}

lit::PrevOrder EvalConfig::refined_order() const {
  if (order_is_refined()) return quad::normalize_order(order, alphabet);
  return quad::default_refined_order(alphabet, order);
}

std::string neg_variant_name(tif::NegVariant v) {
  switch (v) {
    case tif::NegVariant::swap_tf: return "swap_tf";
    case tif::NegVariant::swap_tf_flip_i: return "swap_tf_flip_i";
    case tif::NegVariant::complement_all: return "complement_all";
    case tif::NegVariant::complement_tf: return "complement_tf";
  }
  return "?";
}

std::string norm_name(tif::Norm n) {
  switch (n) {
    case tif::Norm::min: return "min";
    case tif::Norm::product: return "product";
    case tif::Norm::lukasiewicz: return "lukasiewicz";
  }
  return "?";
}

std::string conorm_name(tif::Conorm c) {
  switch (c) {
    case tif::Conorm::max: return "max";
    case tif::Conorm::prob_sum: return "probsum";
    case tif::Conorm::bounded_sum: return "boundedsum";
  }
  return "?";
}

std::string impl_kind_name(tif::Impl k) {
  switch (k) {
    case tif::Impl::fodor: return "fodor";
    case tif::Impl::weber: return "weber";
    case tif::Impl::yager: return "yager";
    case tif::Impl::goguen: return "goguen";
    case tif::Impl::rescher: return "rescher";
    case tif::Impl::kleene_dienes: return "kleene";
    case tif::Impl::reichenbach: return "reichenbach";
    case tif::Impl::goedel: return "goedel";
    case tif::Impl::lukasiewicz: return "lukasiewicz";
  }
  return "?";
}

std::string conj_desc(const tif::ConjVariant& v) {
  return "form" + std::to_string(v.form) + "(" + norm_name(v.norm) + "," +
         conorm_name(v.conorm) + ")";
}

std::string disj_desc(const tif::DisjVariant& v) {
  return "form" + std::to_string(v.form) + "(" + conorm_name(v.conorm) + "," +
         norm_name(v.norm) + ")";
}

std::string impl_desc(const tif::ImplClass& c) {
  using Kind = tif::ImplClass::Kind;
  switch (c.kind) {
    case Kind::neg_or:
      return "negor(" + neg_variant_name(c.neg) + "," + disj_desc(c.disj) + ")";
    case Kind::in1:
    case Kind::in2:
    case Kind::in3:
    case Kind::in4: {
      int n = static_cast<int>(c.kind) - static_cast<int>(Kind::in1) + 1;
      return "in" + std::to_string(n) + "(" + impl_kind_name(c.impl) + ")";
    }
  }
  return "?";
}

namespace {

std::string table_cells(const lit::Table& t) {
  std::string s;
  for (lit::Lit c : t.cells()) s += c.str();
  return s;
}

}  // namespace

std::string EvalConfig::dump() const {
  std::string s;
  s += "order: " + order.str() + "\n";
  s += "alphabet: " + alphabet.str() + "\n";
  s += "neg: " + neg_variant_name(neg) + "\n";
  s += "conj: " + conj_desc(conj) + "\n";
  s += "disj: " + disj_desc(disj) + "\n";
  s += "impl: " + impl_desc(impl) + "\n";
  s += "subind: r=" + std::to_string(subind->arity());
  s += " cells=";
  for (int j = 1; j <= subind->arity(); ++j)
    for (int k = 1; k <= subind->arity(); ++k) s += std::to_string(subind->mul(j, k));
  s += "\n";
  s += "littable.neg: " + table_cells(neg_table) + "\n";
  s += "littable.and: " + table_cells(and_table) + "\n";
  s += "littable.or: " + table_cells(or_table) + "\n";
  s += "littable.xor: " + table_cells(xor_table) + "\n";
  s += "littable.sheffer: " + table_cells(sheffer_table) + "\n";
  s += "littable.implies: " + table_cells(implies_table) + "\n";
  s += "littable.equiv: " + table_cells(equiv_table) + "\n";
  s += "hc_dim: " + (hc_dim > 0 ? std::to_string(hc_dim) : std::string("unset")) + "\n";
  s += "dual: " + hyper::family_name(dual_family) + "\n";
  return s;
}

std::string EvalConfig::fingerprint() const {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : dump()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  static const char* hex = "0123456789abcdef";
  for (int k = 15; k >= 0; --k) {
    buf[k] = hex[h & 0xF];
    h >>= 4;
  }
  buf[16] = 0;
  return buf;
}

}  // namespace nsym::expr
