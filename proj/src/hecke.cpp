#include "affpav/hecke.hpp"

#include <algorithm>

#include "affpav/errors.hpp"

namespace affpav::hecke {

using weyl::bruhat_interval_below;
using weyl::is_right_descent;
using weyl::multiply;
using weyl::reduced_word;
using weyl::simple_affine;

HeckeElement HeckeElement::unit(const RootDatum& rd) {
  HeckeElement h(rd);
  h.add_term(WeylElement::identity(rd), PolyQ(1));
  return h;
}

HeckeElement HeckeElement::basis(const WeylElement& w) {
  HeckeElement h(*w.rd);
  h.add_term(w, PolyQ(1));
  return h;
}

PolyQ HeckeElement::coefficient(const WeylElement& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? PolyQ() : it->second;
}

std::vector<WeylElement> HeckeElement::sorted_support() const {
  std::vector<WeylElement> out;
  out.reserve(terms_.size());
  for (const auto& [w, c] : terms_) out.push_back(w);
  std::sort(out.begin(), out.end(), [](const WeylElement& a, const WeylElement& b) {
    long long la = weyl::length(a), lb = weyl::length(b);
    if (la != lb) return la < lb;
    return a < b;
  });
  return out;
}

void HeckeElement::add_term(const WeylElement& w, const PolyQ& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

HeckeElement HeckeElement::scaled(const PolyQ& c) const {
  HeckeElement r(*rd_);
  if (c.is_zero()) return r;
  for (const auto& [w, v] : terms_) r.terms_.emplace(w, v * c);
  return r;
}

HeckeElement HeckeElement::divided_exact_monic(const PolyQ& divisor) const {
  HeckeElement r(*rd_);
  for (const auto& [w, v] : terms_) r.terms_.emplace(w, v.divided_exact_monic(divisor));
  return r;
}

bool operator==(const HeckeElement& a, const HeckeElement& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (const auto& [w, c] : a.terms_) {
    auto it = b.terms_.find(w);
    if (it == b.terms_.end() || !(it->second == c)) return false;
  }
  return true;
}

namespace {

// h * T_s in place
HeckeElement mul_letter(const HeckeElement& h, int i) {
  const RootDatum& rd = h.datum();
  WeylElement s = simple_affine(rd, i);
  HeckeElement out(rd);
  PolyQ q = PolyQ::monomial(1);
  PolyQ qm1 = PolyQ::q_pow_times_qm1_pow(0, 1);
  for (const auto& [x, c] : h.terms()) {
    WeylElement xs = multiply(x, s);
    if (is_right_descent(x, i)) {
      out.add_term(xs, c * q);
      out.add_term(x, c * qm1);
    } else {
      out.add_term(xs, c);
    }
  }
  return out;
}

HeckeElement mul_omega(const HeckeElement& h, const WeylElement& tau) {
  if (tau.is_identity()) return h;
  HeckeElement out(h.datum());
  for (const auto& [x, c] : h.terms()) out.add_term(multiply(x, tau), c);
  return out;
}

}  // namespace

HeckeElement mul_basis_right(const HeckeElement& h, const WeylElement& w) {
  weyl::ReducedWord rw = reduced_word(w);
  HeckeElement cur = mul_omega(h, rw.omega_part);
  for (int i : rw.letters) cur = mul_letter(cur, i);
  return cur;
}

HeckeElement hecke_product(const HeckeElement& a, const HeckeElement& b) {
  if (!(a.datum() == b.datum()))
    throw UserError("hecke_product: operands over different root data");
  HeckeElement out(a.datum());
  for (const auto& [y, c] : b.terms()) {
    HeckeElement part = mul_basis_right(a, y);
    out += part.scaled(c);
  }
  return out;
}

HeckeElement parahoric_element(const WeylElement& w, const ParabolicData& pd, bool closed) {
  const RootDatum& rd = *w.rd;
  HeckeElement out(rd);
  if (!closed) {
    weyl::CosetNormalForms nf = weyl::coset_normal_forms(w, pd);
    for (const WeylElement& eta : nf.eta_list)
      for (const WeylElement& u : pd.elements)
        out.add_term(multiply(eta, u), PolyQ(1));
  } else {
    WeylElement top = weyl::double_coset_max(w, pd);
    for (const WeylElement& x : bruhat_interval_below(top)) out.add_term(x, PolyQ(1));
  }
  return out;
}

PolyQ poincare(const ParabolicData& pd) {
  PolyQ r;
  for (long long l : pd.length_multiset) r += PolyQ::monomial(static_cast<int>(l));
  return r;
}

const PolyQ* StructureConstantTable::find(const WeylElement& max_rep) const {
  for (const auto& [w, c] : constants)
    if (w == max_rep) return &c;
  return nullptr;
}

namespace {

// Collapse an Iwahori-level element with coefficients constant on W_P double
// cosets into a table keyed by maximal representatives.
StructureConstantTable collapse_to_table(const HeckeElement& h, const WeylElement& w1,
                                         const WeylElement& w2, const ParabolicData& pd) {
  StructureConstantTable table;
  table.w1 = w1;
  table.w2 = w2;
  table.generators = pd.generators;
  std::vector<std::pair<WeylElement, PolyQ>> out;
  std::unordered_map<WeylElement, PolyQ, weyl::WeylHash> by_max;
  std::unordered_map<WeylElement, size_t, weyl::WeylHash> coset_sizes;
  for (const auto& [x, c] : h.terms()) {
    WeylElement top = weyl::double_coset_max(x, pd);
    auto [it, fresh] = by_max.emplace(top, c);
    if (!fresh && !(it->second == c))
      throw InternalCheckError(
          "structure constants: coefficient not constant on a double coset");
    ++coset_sizes[top];
  }
  // every element of each touched double coset must actually be present
  for (const auto& [top, c] : by_max) {
    weyl::CosetNormalForms nf = weyl::coset_normal_forms(top, pd);
    size_t full = nf.eta_list.size() * pd.elements.size();
    if (coset_sizes[top] != full)
      throw InternalCheckError("structure constants: double coset only partially covered");
  }
  out.assign(by_max.begin(), by_max.end());
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) {
              long long la = weyl::length(a.first), lb = weyl::length(b.first);
              if (la != lb) return la < lb;
              return a.first < b.first;
            });
  table.constants = std::move(out);
  return table;
}

}  // namespace

StructureConstantTable structure_constants(const WeylElement& w1, const WeylElement& w2,
                                           const ParabolicData& pd) {
  HeckeElement f1 = parahoric_element(w1, pd, false);
  HeckeElement f2 = parahoric_element(w2, pd, false);
  HeckeElement prod = hecke_product(f1, f2);
  HeckeElement h = prod.divided_exact_monic(poincare(pd));
  return collapse_to_table(h, w1, w2, pd);
}

PolyQ convolution_value(const std::vector<WeylElement>& tuple, const ParabolicData& pd,
                        const WeylElement& x, const std::vector<bool>& closed_flags) {
  if (tuple.empty()) throw UserError("convolution_value: empty tuple");
  if (!closed_flags.empty() && closed_flags.size() != tuple.size())
    throw UserError("convolution_value: closed flag count mismatch");
  HeckeElement acc = parahoric_element(tuple[0], pd, !closed_flags.empty() && closed_flags[0]);
  PolyQ pi = poincare(pd);
  for (size_t i = 1; i < tuple.size(); ++i) {
    HeckeElement fi =
        parahoric_element(tuple[i], pd, !closed_flags.empty() && closed_flags[i]);
    acc = hecke_product(acc, fi).divided_exact_monic(pi);
  }
  // the normalized convolution is constant on W_P x W_P; check and read off
  weyl::CosetNormalForms nf = weyl::coset_normal_forms(x, pd);
  PolyQ value = acc.coefficient(x);
  for (const WeylElement& eta : nf.eta_list)
    for (const WeylElement& u : pd.elements)
      if (!(acc.coefficient(multiply(eta, u)) == value))
        throw InternalCheckError("convolution value not constant on the double coset");
  return value;
}

}  // namespace affpav::hecke
