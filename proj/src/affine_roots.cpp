#include "stablekac/affine_roots.hpp"

#include <sstream>

#include "stablekac/errors.hpp"

namespace stablekac {

std::string case_name(CaseTag kind) {
  switch (kind) {
    case CaseTag::GL: return "GL";
    case CaseTag::O: return "O";
    case CaseTag::Sp: return "Sp";
  }
  return "?";
}

Weight Weight::lambda0_weight(CaseTag kind) { return Weight(kind).add_lambda0(1); }
Weight Weight::delta_weight(CaseTag kind) { return Weight(kind).add_delta(1); }
Weight Weight::epsilon(CaseTag kind, Index i, Index coeff) { return Weight(kind).add_eps(i, coeff); }

Index Weight::eps(Index i) const {
  auto it = eps_.find(i);
  return it == eps_.end() ? 0 : it->second;
}

Weight& Weight::add_eps(Index i, Index v) {
  if (kind_ != CaseTag::GL && i < 1)
    throw InvalidInput("ε index " + std::to_string(i) + " is outside the index set of case " + case_name(kind_));
  if (v == 0) return *this;
  auto [it, inserted] = eps_.try_emplace(i, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) eps_.erase(it);
  }
  return *this;
}

Weight& Weight::operator+=(const Weight& o) {
  for (const auto& [i, v] : o.eps_) add_eps(i, v);
  lambda0_ += o.lambda0_;
  delta_ += o.delta_;
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  for (const auto& [i, v] : o.eps_) add_eps(i, -v);
  lambda0_ -= o.lambda0_;
  delta_ -= o.delta_;
  return *this;
}

Weight& Weight::operator*=(Index s) {
  if (s == 0) {
    eps_.clear();
  } else {
    for (auto& [i, v] : eps_) v *= s;
  }
  lambda0_ *= s;
  delta_ *= s;
  return *this;
}

std::string weight_text(const Weight& w) {
  std::ostringstream os;
  bool first = true;
  auto term = [&](Index c, const std::string& symbol) {
    if (c == 0) return;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    const Index a = c < 0 ? -c : c;
    if (a != 1) os << a;
    os << symbol;
    first = false;
  };
  for (auto it = w.eps().rbegin(); it != w.eps().rend(); ++it) term(it->second, "ε" + std::to_string(it->first));
  term(w.level(), "Λ0");
  term(w.delta(), "δ");
  return first ? "0" : os.str();
}

void check_root_index(CaseTag kind, Index x) {
  if (kind != CaseTag::GL && x < 0)
    throw InvalidInput("simple root index " + std::to_string(x) + " is not a vertex of the " + case_name(kind) +
                       " diagram");
}

Weight simple_root(CaseTag kind, Index x) {
  check_root_index(kind, x);
  Weight a(kind);
  if (x != 0) return a.add_eps(x, 1).add_eps(x + 1, -1);
  switch (kind) {
    case CaseTag::GL: return a.add_eps(0, 1).add_eps(1, -1).add_delta(1);
    case CaseTag::O: return a.add_delta(1).add_eps(1, -1).add_eps(2, -1);
    case CaseTag::Sp: return a.add_delta(1).add_eps(1, -2);
  }
  return a;
}

Index pair_coroot(CaseTag kind, const Weight& phi, Index x) {
  check_root_index(kind, x);
  if (phi.kind() != kind) throw InvalidInput("weight and coroot belong to different cases");
  if (x != 0) return phi.eps(x) - phi.eps(x + 1);
  // c(Λ₀) is 2 for Sp but the coroot uses c/2, so every case reads the level once.
  switch (kind) {
    case CaseTag::GL: return phi.eps(0) - phi.eps(1) + phi.level();
    case CaseTag::O: return phi.level() - phi.eps(1) - phi.eps(2);
    case CaseTag::Sp: return phi.level() - phi.eps(1);
  }
  return 0;
}

Weight bipartition_to_weight(const Bipartition& b, Index k, Index a) {
  Weight w(CaseTag::GL);
  for (std::size_t i = 1; i <= b.left.length(); ++i) w.add_eps(static_cast<Index>(i), b.left.part(i));
  for (std::size_t j = 1; j <= b.right.length(); ++j) w.add_eps(1 - static_cast<Index>(j), -b.right.part(j));
  return w.add_lambda0(k).add_delta(a);
}

WeightLabel weight_to_bipartition(const Weight& w) {
  if (w.kind() != CaseTag::GL) throw InvalidInput("bipartition labels exist only in case GL");
  std::vector<Partition::Part> left, right;
  for (const auto& [i, v] : w.eps()) {
    if (i >= 1 && v < 0) throw NonDominantWeight("negative ε" + std::to_string(i) + " coefficient: " + weight_text(w));
    if (i <= 0 && v > 0) throw NonDominantWeight("positive ε" + std::to_string(i) + " coefficient: " + weight_text(w));
  }
  // Coefficients of ε_1, ε_2, ... and -ε_0, -ε_{-1}, ... must each be
  // partitions: weakly decreasing with no gaps before the tail of zeros.
  auto collect = [&](Index start, Index step, Index sign, std::vector<Partition::Part>& out) {
    std::size_t remaining = 0;
    for (const auto& [i, v] : w.eps())
      if ((step > 0) == (i >= 1)) ++remaining;
    for (Index i = start; remaining > 0; i += step) {
      const Index v = sign * w.eps(i);
      if (v == 0 || (!out.empty() && v > out.back()))
        throw NonDominantWeight("ε-profile is not a bipartition: " + weight_text(w));
      out.push_back(v);
      --remaining;
    }
  };
  collect(1, 1, 1, left);
  collect(0, -1, -1, right);
  return {{Partition(std::move(left)), Partition(std::move(right))}, w.level(), w.delta()};
}

bool is_dominant(const Bipartition& b, Index k) { return b.left.part(1) + b.right.part(1) <= k; }

}  // namespace stablekac
