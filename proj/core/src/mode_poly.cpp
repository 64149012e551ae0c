#include "wnk/mode_poly.hpp"

#include <fmt/format.h>

#include <algorithm>

namespace wnk {

namespace {

// normal order: negatives before positives, each group ascending
void normalize_modes(std::vector<int>& modes) {
  std::sort(modes.begin(), modes.end(), [](int a, int b) {
    bool na = a < 0, nb = b < 0;
    if (na != nb) return na;
    return a < b;
  });
}

bool term_less(const ModeTerm& a, const ModeTerm& b) { return term_key(a) < term_key(b); }

}  // namespace

ModePolynomial ModePolynomial::scalar(const Rational& c, int eps_pow, int lambda_pow) {
  ModePolynomial p;
  p.add_term(ModeTerm{c, {}, eps_pow, lambda_pow});
  return p;
}

ModePolynomial ModePolynomial::mode(int m, const Rational& c) {
  ModePolynomial p;
  p.add_term(ModeTerm{c, {m}, 0, 0});
  return p;
}

void ModePolynomial::add_term(ModeTerm t) {
  if (is_zero(t.coeff)) return;
  normalize_modes(t.modes);
  auto it = std::lower_bound(terms_.begin(), terms_.end(), t, term_less);
  if (it != terms_.end() && term_key(*it) == term_key(t)) {
    it->coeff += t.coeff;
    if (is_zero(it->coeff)) terms_.erase(it);
  } else {
    terms_.insert(it, std::move(t));
  }
}

ModePolynomial& ModePolynomial::operator+=(const ModePolynomial& o) {
  for (const auto& t : o.terms_) add_term(t);
  return *this;
}

ModePolynomial& ModePolynomial::operator-=(const ModePolynomial& o) {
  for (auto t : o.terms_) {
    t.coeff = -t.coeff;
    add_term(std::move(t));
  }
  return *this;
}

ModePolynomial& ModePolynomial::scale(const Rational& s) {
  if (is_zero(s)) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= s;
  return *this;
}

ModePolynomial concat_product(const ModePolynomial& a, const ModePolynomial& b) {
  ModePolynomial r;
  for (const auto& ta : a.terms_) {
    bool a_has_deriv = !ta.modes.empty() && ta.modes.back() > 0;
    for (const auto& tb : b.terms_) {
      bool b_has_mult = !tb.modes.empty() && tb.modes.front() < 0;
      if (a_has_deriv && b_has_mult)
        throw internal_error("concat_product: product is not normal-ordered");
      ModeTerm t;
      t.coeff = ta.coeff * tb.coeff;
      t.modes = ta.modes;
      t.modes.insert(t.modes.end(), tb.modes.begin(), tb.modes.end());
      t.eps_pow = ta.eps_pow + tb.eps_pow;
      t.lambda_pow = ta.lambda_pow + tb.lambda_pow;
      r.add_term(std::move(t));
    }
  }
  return r;
}

bool mode_term_within_cap(const ModeTerm& t, int cap) {
  int mult = 0, deriv = 0;
  for (int m : t.modes) {
    if (m < 0)
      mult -= m;
    else
      deriv += m;
  }
  return mult <= cap && deriv <= cap;
}

ModePolynomial ModePolynomial::truncated_to_cap(int cap) const {
  ModePolynomial r;
  for (const auto& t : terms_)
    if (mode_term_within_cap(t, cap)) r.add_term(t);
  return r;
}

ModePolynomial ModePolynomial::dilaton_shifted(int h) const {
  const int target = -(h + 1);
  ModePolynomial r;
  for (const auto& t : terms_) {
    int count = (int)std::count(t.modes.begin(), t.modes.end(), target);
    if (count == 0) {
      r.add_term(t);
      continue;
    }
    std::vector<int> rest;
    rest.reserve(t.modes.size() - count);
    for (int m : t.modes)
      if (m != target) rest.push_back(m);
    // (J - eps^{-1})^count expanded binomially
    for (int j = 0; j <= count; ++j) {
      ModeTerm nt;
      nt.coeff = t.coeff * binomial(Rational(count), j);
      if (j % 2 == 1) nt.coeff = -nt.coeff;
      nt.modes = rest;
      for (int l = 0; l < count - j; ++l) nt.modes.push_back(target);
      nt.eps_pow = t.eps_pow - j;
      nt.lambda_pow = t.lambda_pow;
      r.add_term(std::move(nt));
    }
  }
  return r;
}

std::string ModePolynomial::render() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    out += to_string(t.coeff);
    for (int m : t.modes) out += fmt::format(" J[{}]", m);
    if (t.eps_pow != 0) out += fmt::format(" eps^{}", t.eps_pow);
    if (t.lambda_pow != 0) out += fmt::format(" lam^{}", t.lambda_pow);
  }
  return out;
}

}  // namespace wnk
