#include "lspec/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "lspec/errors.hpp"

namespace lspec {

namespace {

std::vector<long> parse_integer_list(std::string_view text, const char* what) {
  std::vector<long> values;
  std::size_t pos = 0;
  int index = 0;
  while (true) {
    ++index;
    const std::size_t comma = text.find(',', pos);
    std::string_view field = text.substr(pos, comma == std::string_view::npos
                                                  ? std::string_view::npos
                                                  : comma - pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    if (field.empty()) {
      if (comma == std::string_view::npos && values.empty() && index == 1)
        throw UsageError(std::string("empty ") + what);
      throw UsageError(std::string("empty entry in ") + what + " at index " +
                       std::to_string(index));
    }
    long value = 0;
    const auto [end, ec] =
        std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || end != field.data() + field.size())
      throw UsageError(std::string("not an integer in ") + what +
                       " at index " + std::to_string(index) + ": '" +
                       std::string(field) + "'");
    values.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return values;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw UsageError("empty partition");
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw UsageError("non-positive part at index " + std::to_string(i + 1));
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw UsageError("increasing at index " + std::to_string(i + 1));
  }
  block_map_.reserve(parts_.size());
  for (int part : parts_) {
    size_ += part;
    if (bases_.empty() || bases_.back() != part) {
      bases_.push_back(part);
      heights_.push_back(0);
    }
    ++heights_.back();
    block_map_.push_back(static_cast<int>(bases_.size()));
  }
  // Self-conjugacy by full conjugation: λ'_j = #{i : λ_i >= j}.
  self_conjugate_ = parts_.front() == length();
  for (int j = 1; self_conjugate_ && j <= parts_.front(); ++j) {
    const auto count = std::count_if(parts_.begin(), parts_.end(),
                                     [j](int v) { return v >= j; });
    self_conjugate_ = count == parts_[j - 1];
  }
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Partition parse_partition(std::string_view text) {
  const auto values = parse_integer_list(text, "partition");
  std::vector<int> parts;
  parts.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] <= 0)
      throw UsageError("non-positive part at index " + std::to_string(i + 1));
    parts.push_back(static_cast<int>(values[i]));
  }
  return Partition(std::move(parts));
}

std::vector<int> parse_heights(std::string_view text) {
  const auto values = parse_integer_list(text, "height vector");
  std::vector<int> heights;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] <= 0)
      throw UsageError("non-positive height at index " + std::to_string(i + 1));
    heights.push_back(static_cast<int>(values[i]));
  }
  return heights;
}

Partition conjugate(const Partition& p) {
  std::vector<int> parts(p.parts().front());
  for (int j = 1; j <= p.parts().front(); ++j)
    parts[j - 1] = static_cast<int>(std::count_if(
        p.parts().begin(), p.parts().end(), [j](int v) { return v >= j; }));
  return Partition(std::move(parts));
}

Partition self_conjugate_from_heights(std::span<const int> heights) {
  if (heights.empty()) throw UsageError("empty height vector");
  const int r = static_cast<int>(heights.size());
  std::vector<int> parts;
  for (int block = 1; block <= r; ++block) {
    const int a = heights[block - 1];
    if (a <= 0)
      throw UsageError("non-positive height at index " + std::to_string(block));
    const int base = std::accumulate(heights.begin(),
                                     heights.begin() + (r - block + 1), 0);
    parts.insert(parts.end(), a, base);
  }
  return Partition(std::move(parts));
}

void require_self_conjugate(const Partition& p) {
  if (!p.is_self_conjugate())
    throw UsageError("partition is not self-conjugate: (" + p.to_string() +
                     ")' = (" + conjugate(p).to_string() + ")");
}

bool contains_cell(const Partition& p, int i, int j) {
  const int ell = p.length();
  if (i < 1 || i > ell || j < 1 || j > ell)
    throw std::out_of_range("cell (" + std::to_string(i) + "," +
                            std::to_string(j) + ") outside [1," +
                            std::to_string(ell) + "]^2");
  require_self_conjugate(p);
  const bool by_part = j <= p.part(i);
  const bool by_blocks = p.block_of(i) + p.block_of(j) <= p.blocks() + 1;
  if (by_part != by_blocks)
    throw std::logic_error("block-map criterion disagrees with cell test");
  return by_part;
}

Partition dilate(const Partition& p, int factor) {
  if (factor < 1) throw UsageError("dilation factor must be >= 1");
  std::vector<int> parts;
  parts.reserve(static_cast<std::size_t>(p.length()) * factor);
  for (int part : p.parts()) parts.insert(parts.end(), factor, part * factor);
  return Partition(std::move(parts));
}

bool is_minimal(const Partition& p) {
  int g = 0;
  for (int a : p.heights()) g = std::gcd(g, a);
  for (int b : p.bases()) g = std::gcd(g, b);
  return g == 1;
}

int null_space_dim_by_rows(const Partition& p) {
  const int ell = p.length();
  int count = 0;
  for (int i = 1; i <= ell; ++i)
    if (p.part(i) < ell - i + 1) ++count;
  return count;
}

int null_space_dim_by_blocks(const Partition& p) {
  require_self_conjugate(p);
  const auto& a = p.heights();
  const int r = p.blocks();
  // a_{<=n} and a_{>=n} with 1-based n.
  auto at_most = [&](int n) { return std::accumulate(a.begin(), a.begin() + n, 0); };
  auto at_least = [&](int n) { return std::accumulate(a.begin() + (n - 1), a.end(), 0); };
  int total = 0;
  for (int j = 2; j <= r; ++j)
    total += std::max(0, std::min(at_least(j) - at_most(r - j + 1), a[j - 1]));
  return total;
}

int null_space_dim(const Partition& p) {
  const int by_blocks = null_space_dim_by_blocks(p);
  const int by_rows = null_space_dim_by_rows(p);
  if (by_rows != by_blocks)
    throw std::logic_error("null-space formulas disagree");
  return by_rows;
}

int generic_null_space_dim(const Partition& p) {
  const int ell = p.length();
  int rank = 0;
  for (int i = ell; i >= 1; --i)
    if (p.part(i) > rank) ++rank;
  return std::max(ell, p.part(1)) - rank;
}

}  // namespace lspec
