#include "starter_forge/products.hpp"

#include <algorithm>
#include <map>

namespace starter_forge {

std::string_view to_string(PairType t) noexcept {
  switch (t) {
    case PairType::TypeI: return "i";
    case PairType::TypeII: return "ii";
    case PairType::TypeIStar: return "i*";
    case PairType::TypeIIStar: return "ii*";
    case PairType::TypeIX: return "iX";
    case PairType::TypeIIX: return "iiX";
  }
  return "?";
}

namespace {

void require_source(const OrientedList& list, const TwoPartition& p, std::string_view role) {
  if (list.source() != p) {
    throw Error(ErrorKind::OrderMismatch,
                std::string(role) + " (order " + std::to_string(list.order()) +
                    ") does not orient the given partition of order " + std::to_string(p.order()));
  }
}

class Assembler {
 public:
  Assembler(std::int64_t n, std::int64_t m) : n_(n), m_(m) {}

  void add(PairType type, OrientedPair rt, OrientedPair xy) {
    const Residue u = mod(n_ * rt.first + xy.first, n_ * m_);
    const Residue v = mod(n_ * rt.second + xy.second, n_ * m_);
    out_.push_back({type, rt, xy, UnorderedPair::of(u, v)});
  }

  ProductResult finish() && {
    std::vector<UnorderedPair> pairs;
    pairs.reserve(out_.size());
    for (const auto& p : out_) pairs.push_back(p.pair);
    return ProductResult{make_two_partition(n_ * m_, pairs), n_, m_, std::move(out_)};
  }

 private:
  std::int64_t n_;
  std::int64_t m_;
  std::vector<Provenance> out_;
};

}  // namespace

ProductResult product(const TwoPartition& s, const TwoPartition& t, const OrientedList& tilde_s,
                      const OrientedList& bar_t) {
  require_source(tilde_s, s, "tildeS");
  require_source(bar_t, t, "barT");
  const OrderedCover cover(bar_t);
  const OrientedList bar_t_neg = negate_list(bar_t);

  Assembler a(s.order(), t.order());
  std::vector<OrientedPair> rts{{0, 0}};
  rts.insert(rts.end(), bar_t.entries().begin(), bar_t.entries().end());
  rts.insert(rts.end(), bar_t_neg.entries().begin(), bar_t_neg.entries().end());
  for (const auto& rt : rts) {
    for (const auto& xy : tilde_s.entries()) a.add(PairType::TypeI, rt, xy);
  }
  for (const auto& rt : bar_t.entries()) a.add(PairType::TypeII, rt, {0, 0});
  return std::move(a).finish();
}

ProductResult product(const TwoPartition& s, const TwoPartition& t, OrientationPolicy policy) {
  return product(s, t, orient(s, policy), build_ordered_cover(t).list());
}

ProductResult product_starred(const TwoPartition& s, const TwoPartition& t, const OrientedList& bar_s,
                              const OrientedList& tilde_t) {
  require_source(bar_s, s, "barS");
  require_source(tilde_t, t, "tildeT");
  const OrderedCover cover(bar_s);
  const OrientedList bar_s_neg = negate_list(bar_s);

  Assembler a(s.order(), t.order());
  for (const auto& xy : bar_s.entries()) a.add(PairType::TypeIStar, {0, 0}, xy);
  for (const auto* list : {&bar_s, &bar_s_neg}) {
    for (const auto& xy : list->entries()) {
      for (const auto& rt : tilde_t.entries()) a.add(PairType::TypeIStar, rt, xy);
    }
  }
  for (const auto& rt : tilde_t.entries()) a.add(PairType::TypeIIStar, rt, {0, 0});
  return std::move(a).finish();
}

ProductResult product_with_nucleus(const TwoPartition& s, const TwoPartition& t, const OrientedList& tilde_s,
                                   const Nucleus& x, const std::optional<OrientedList>& tilde_t) {
  require_source(tilde_s, s, "tildeS");
  if (x.order() != t.order()) {
    throw Error(ErrorKind::OrderMismatch, "nucleus order " + std::to_string(x.order()) +
                                              " differs from right factor order " + std::to_string(t.order()));
  }
  const OrientedList type_ii = tilde_t ? *tilde_t : orient(t);
  require_source(type_ii, t, "tildeT");

  Assembler a(s.order(), t.order());
  for (const auto& xy : tilde_s.entries()) a.add(PairType::TypeIX, {0, 0}, xy);
  for (const auto& rt : x.entries()) {
    for (const auto& xy : tilde_s.entries()) a.add(PairType::TypeIX, rt, xy);
  }
  for (const auto& rt : type_ii.entries()) a.add(PairType::TypeIIX, rt, {0, 0});
  return std::move(a).finish();
}

ProductResult cardioidal_product(const TwoPartition& s, const TwoPartition& t, const OrientedList& tilde_s) {
  return product_with_nucleus(s, t, tilde_s, cardioidal_nucleus(t.order()));
}

std::optional<Decomposition> decompose_product(const TwoPartition& w, std::int64_t n) {
  const std::int64_t total = w.order();
  if (n < 3 || n % 2 == 0 || total % n != 0) return std::nullopt;
  const std::int64_t m = total / n;
  if (m < 3) return std::nullopt;

  std::vector<UnorderedPair> left;
  std::vector<UnorderedPair> right;
  // Keyed by the left pair (lo, hi) with first coordinate congruent to lo.
  std::map<UnorderedPair, std::vector<OrientedPair>> lifted;

  for (const auto& p : w.pairs()) {
    const bool lo_small = p.lo < n;
    const bool hi_small = p.hi < n;
    const bool lo_mult = p.lo % n == 0;
    const bool hi_mult = p.hi % n == 0;
    if (lo_small || hi_small) {
      if (!(lo_small && hi_small)) return std::nullopt;
      left.push_back(p);
    } else if (lo_mult || hi_mult) {
      if (!(lo_mult && hi_mult)) return std::nullopt;
      right.push_back({p.lo / n, p.hi / n});
    } else {
      const Residue a = p.lo % n;
      const Residue b = p.hi % n;
      if (a == b) return std::nullopt;
      const auto key = UnorderedPair::of(a, b);
      auto rt = a < b ? OrientedPair{p.lo / n, p.hi / n} : OrientedPair{p.hi / n, p.lo / n};
      lifted[key].push_back(rt);
    }
  }

  std::optional<TwoPartition> s;
  std::optional<TwoPartition> t;
  try {
    s = make_two_partition(n, left);
    t = make_two_partition(m, right);
  } catch (const Error&) {
    return std::nullopt;
  }

  auto swapped = [](std::vector<OrientedPair> v) {
    for (auto& e : v) std::swap(e.first, e.second);
    std::sort(v.begin(), v.end());
    return v;
  };

  std::vector<OrientedPair> reference;
  std::vector<OrientedPair> orientation;
  for (const auto& sp : s->pairs()) {
    auto it = lifted.find(sp);
    if (it == lifted.end()) return std::nullopt;
    auto rts = it->second;
    std::sort(rts.begin(), rts.end());
    if (reference.empty()) {
      reference = rts;
      orientation.push_back({sp.lo, sp.hi});
    } else if (rts == reference) {
      orientation.push_back({sp.lo, sp.hi});
    } else if (swapped(rts) == reference) {
      orientation.push_back({sp.hi, sp.lo});
    } else {
      return std::nullopt;
    }
  }
  if (lifted.size() != s->pairs().size()) return std::nullopt;

  try {
    Nucleus x(m, reference);
    OrientedList tilde_s(*s, orientation);
    if (product_with_nucleus(*s, *t, tilde_s, x).partition != w) return std::nullopt;
    return Decomposition{*s, *t, tilde_s, x};
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace starter_forge
