#pragma once

#include <memory>
#include <string>

#include "nsym/hyper.hpp"
#include "nsym/indeterminacy.hpp"
#include "nsym/literal.hpp"
#include "nsym/quadruple.hpp"
#include "nsym/tif.hpp"

namespace nsym::expr {

/// Everything evaluation depends on besides the expression itself.
struct EvalConfig {
  // absorbance order for quadruples; may be coarse (T>I>F) or refined
  lit::PrevOrder order = lit::PrevOrder::parse("T>I>F");
  quad::Alphabet alphabet{2, 2, 2};

  tif::NegVariant neg = tif::NegVariant::swap_tf;
  tif::ConjVariant conj = tif::ConjVariant::min_max_max();
  tif::DisjVariant disj = tif::DisjVariant::max_min_min();
  tif::ImplClass impl{};

  std::shared_ptr<const ind::SubIndTable> subind = ind::SubIndTable::venn6();

  lit::Table neg_table = lit::Table::negation();
  lit::Table and_table = lit::Table::generate(lit::OpKind::conj, lit::PrevOrder::parse("I>F>T"));
  lit::Table or_table = lit::Table::generate(lit::OpKind::disj, lit::PrevOrder::parse("T>F>I"));
  lit::Table xor_table = lit::Table::generate(lit::OpKind::xor_, lit::PrevOrder::parse("T>F>I"));
  lit::Table sheffer_table =
      lit::Table::generate(lit::OpKind::sheffer, lit::PrevOrder::parse("T>I>F"));
  lit::Table implies_table = lit::Table::implies_preset();
  lit::Table equiv_table = lit::Table::equiv_preset();

  int hc_dim = 0;  // 0 = not configured
  hyper::DualFamily dual_family = hyper::DualFamily::nilpotent;

  /// True when `order` names refined literals.
  bool order_is_refined() const;
  /// The class-level order induced by `order` (identity for coarse orders).
  lit::PrevOrder coarse_order() const;
  /// `order` itself when refined (normalized against the alphabet), else the
  /// index-order expansion of the coarse chain.
  lit::PrevOrder refined_order() const;

  /// Stable multi-line description; also the fingerprint input.
  std::string dump() const;
  /// 64-bit FNV-1a of dump(), hex.
  std::string fingerprint() const;
};

std::string neg_variant_name(tif::NegVariant v);
std::string norm_name(tif::Norm n);
std::string conorm_name(tif::Conorm c);
std::string impl_kind_name(tif::Impl k);
std::string conj_desc(const tif::ConjVariant& v);
std::string disj_desc(const tif::DisjVariant& v);
std::string impl_desc(const tif::ImplClass& c);

}  // namespace nsym::expr
