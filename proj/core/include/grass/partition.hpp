#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace grass {

/// A weakly decreasing sequence of positive parts. Trailing zeros are
/// stripped on construction, so (2,1,0) and (2,1) are the same key.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument if parts are negative or increase.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  std::span<const int> parts() const { return parts_; }
  /// Part i (0-based); zero past the length.
  int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/// The k x (n-k) rectangle bounding the Schubert index set.
struct Box {
  Box(int rows, int cols);
  int rows;
  int cols;
  int area() const { return rows * cols; }
};

bool fits_box(const Partition& lambda, const Box& box);

/// Graded order (by size), then lexicographically descending on parts.
bool graded_less(const Partition& a, const Partition& b);

/// All partitions in the box (of the given size if set), in graded order.
std::vector<Partition> enumerate_box(const Box& box, std::optional<int> size = std::nullopt);

/// Partitions obtained by adding one box, ordered by the row that grew.
std::vector<Partition> add_box_moves(const Partition& lambda, const Box& box);

struct RemovedBox {
  int row;  // 1-based row index l
  Partition result;
  bool operator==(const RemovedBox&) const = default;
};

/// Every row l whose decrement leaves a partition, in increasing l.
std::vector<RemovedBox> remove_box_moves(const Partition& lambda, const Box& box);

Partition conjugate(const Partition& lambda);

/// "2,1" for nonempty partitions and "[]" for the empty one.
std::string to_text(const Partition& lambda);
/// Accepts "2,1", "[2,1]", "[]" and "".
Partition parse_partition(std::string_view text);

std::int64_t binomial(int n, int k);

}  // namespace grass
