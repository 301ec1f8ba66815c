#include "grass/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace grass {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("partition parts must be nonnegative");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Box::Box(int r, int c) : rows(r), cols(c) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("box dimensions must be positive");
}

bool fits_box(const Partition& lambda, const Box& box) {
  return lambda.length() <= box.rows && lambda.part(0) <= box.cols;
}

bool graded_less(const Partition& a, const Partition& b) {
  int sa = a.size(), sb = b.size();
  if (sa != sb) return sa < sb;
  return std::lexicographical_compare(b.parts().begin(), b.parts().end(), a.parts().begin(),
                                      a.parts().end());
}

namespace {

// Fills rows [row, rows) with parts <= bound, descending lexicographically.
void fill_rows(const Box& box, int row, int bound, int remaining, std::vector<int>& current,
               std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  if (row == box.rows) return;
  int rows_left = box.rows - row;
  for (int part = std::min(bound, remaining); part >= 1; --part) {
    if (part * rows_left < remaining) break;
    current.push_back(part);
    fill_rows(box, row + 1, part, remaining - part, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_box(const Box& box, std::optional<int> size) {
  if (size && (*size < 0 || *size > box.area())) {
    throw std::invalid_argument("requested size outside [0, rows*cols]");
  }
  std::vector<Partition> out;
  std::vector<int> current;
  int lo = size ? *size : 0;
  int hi = size ? *size : box.area();
  for (int s = lo; s <= hi; ++s) fill_rows(box, 0, box.cols, s, current, out);
  return out;
}

std::vector<Partition> add_box_moves(const Partition& lambda, const Box& box) {
  std::vector<Partition> out;
  for (int row = 0; row < box.rows && row <= lambda.length(); ++row) {
    int current = lambda.part(row);
    if (current + 1 > box.cols) continue;
    if (row > 0 && lambda.part(row - 1) < current + 1) continue;
    std::vector<int> parts(lambda.parts().begin(), lambda.parts().end());
    if (row == lambda.length()) parts.push_back(1);
    else ++parts[row];
    out.emplace_back(std::move(parts));
  }
  return out;
}

std::vector<RemovedBox> remove_box_moves(const Partition& lambda, const Box& box) {
  std::vector<RemovedBox> out;
  int len = std::min(lambda.length(), box.rows);
  for (int row = 0; row < len; ++row) {
    if (lambda.part(row) - 1 < lambda.part(row + 1)) continue;
    std::vector<int> parts(lambda.parts().begin(), lambda.parts().end());
    --parts[row];
    out.push_back({row + 1, Partition(std::move(parts))});
  }
  return out;
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> parts(lambda.part(0), 0);
  for (int p : lambda.parts()) {
    for (int c = 0; c < p; ++c) ++parts[c];
  }
  return Partition(std::move(parts));
}

std::string to_text(const Partition& lambda) {
  if (lambda.empty()) return "[]";
  std::string out;
  for (std::size_t i = 0; i < lambda.parts().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(lambda.parts()[i]);
  }
  return out;
}

Partition parse_partition(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (!text.empty() && text.front() == '[') {
    if (text.back() != ']') throw std::invalid_argument("unbalanced brackets in partition");
    text = trim(text.substr(1, text.size() - 2));
  }
  std::vector<int> parts;
  while (!text.empty()) {
    auto comma = text.find(',');
    std::string_view item = trim(text.substr(0, comma));
    int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc() || ptr != item.data() + item.size() || item.empty()) {
      throw std::invalid_argument("malformed partition part: '" + std::string(item) + "'");
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Partition(std::move(parts));
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

}  // namespace grass
