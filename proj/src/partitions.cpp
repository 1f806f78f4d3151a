#include "stablekac/partitions.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "stablekac/errors.hpp"

namespace stablekac {

Partition::Partition(std::vector<Part> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw InvalidInput("partition has a negative part");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw InvalidInput("partition parts must be weakly decreasing");
  }
}

Partition::Part Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), Part{0}); }

std::strong_ordering Bipartition::operator<=>(const Bipartition& other) const {
  if (auto c = size() <=> other.size(); c != 0) return c;
  if (auto c = left <=> other.left; c != 0) return c;
  return right <=> other.right;
}

Partition conjugate(const Partition& lambda) {
  std::vector<Partition::Part> cols(lambda.empty() ? 0 : static_cast<std::size_t>(lambda.part(1)), 0);
  for (auto row : lambda.parts())
    for (Partition::Part j = 0; j < row; ++j) ++cols[static_cast<std::size_t>(j)];
  return Partition(std::move(cols));
}

FrobeniusCoords frobenius(const Partition& lambda) {
  const Partition t = conjugate(lambda);
  FrobeniusCoords out;
  for (std::size_t i = 1; lambda.part(i) >= static_cast<Partition::Part>(i) && i <= lambda.length(); ++i) {
    out.arms.push_back(lambda.part(i) - static_cast<Partition::Part>(i));
    out.legs.push_back(t.part(i) - static_cast<Partition::Part>(i));
  }
  return out;
}

namespace {

void require_strictly_decreasing(const std::vector<Partition::Part>& xs, const char* what) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] < 0) throw InvalidInput(std::string("Frobenius ") + what + " must be nonnegative");
    if (i > 0 && xs[i] >= xs[i - 1]) throw InvalidInput(std::string("Frobenius ") + what + " must be strictly decreasing");
  }
}

}  // namespace

Partition from_frobenius(const FrobeniusCoords& coords) {
  if (coords.arms.size() != coords.legs.size()) throw InvalidInput("Frobenius arms and legs differ in length");
  require_strictly_decreasing(coords.arms, "arms");
  require_strictly_decreasing(coords.legs, "legs");
  const std::size_t b = coords.arms.size();
  if (b == 0) return {};
  // Rows 1..b are arm + i; row r > b counts the legs reaching it.
  std::vector<Partition::Part> rows;
  for (std::size_t i = 0; i < b; ++i) rows.push_back(coords.arms[i] + static_cast<Partition::Part>(i) + 1);
  const auto depth = coords.legs[0] + 1;
  for (Partition::Part r = static_cast<Partition::Part>(b) + 1; r <= depth; ++r) {
    Partition::Part count = 0;
    for (std::size_t i = 0; i < b; ++i)
      if (coords.legs[i] + static_cast<Partition::Part>(i) + 1 >= r) ++count;
    rows.push_back(count);
  }
  return Partition(std::move(rows));
}

std::vector<Partition::Part> hook_lengths(const Partition& lambda) {
  const Partition t = conjugate(lambda);
  std::vector<Partition::Part> hooks;
  hooks.reserve(static_cast<std::size_t>(lambda.size()));
  for (std::size_t i = 1; i <= lambda.length(); ++i)
    for (Partition::Part j = 1; j <= lambda.part(i); ++j)
      hooks.push_back((lambda.part(i) - j) + (t.part(static_cast<std::size_t>(j)) - static_cast<Partition::Part>(i)) + 1);
  return hooks;
}

Integer hook_product(const Partition& lambda) {
  Integer p = 1;
  for (auto h : hook_lengths(lambda)) p *= h;
  return p;
}

namespace {

void partitions_rec(Partition::Part remaining, Partition::Part max_part, std::vector<Partition::Part>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (Partition::Part p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    partitions_rec(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(Partition::Part n) {
  if (n < 0) throw InvalidInput("cannot enumerate partitions of a negative number");
  std::vector<Partition> out;
  std::vector<Partition::Part> prefix;
  partitions_rec(n, n, prefix, out);
  return out;
}

std::vector<Partition> enumerate_partitions_up_to(Partition::Part n) {
  std::vector<Partition> out;
  for (Partition::Part m = 0; m <= n; ++m) {
    auto level = enumerate_partitions(m);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

Partition parse_partition(std::string_view text) {
  const std::string original(text);
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) return {};
  std::vector<Partition::Part> parts;
  while (true) {
    const auto comma = text.find(',');
    const auto token = trim(text.substr(0, comma));
    Partition::Part value = 0;
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (token.empty() || ec != std::errc{} || ptr != end || value <= 0)
      throw InvalidInput("malformed partition \"" + original + "\": parts must be positive integers");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Partition(std::move(parts));
}

std::string partition_text(const Partition& lambda) {
  std::string s;
  for (std::size_t i = 0; i < lambda.length(); ++i) {
    if (i) s += ',';
    s += std::to_string(lambda.vec()[i]);
  }
  return s;
}

}  // namespace stablekac
