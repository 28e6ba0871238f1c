#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ordsgp/structure.hpp"

namespace ordsgp {

/// Restricts a stream to the tables whose first row, read as a base-n
/// number, is congruent to `worker` modulo `workers`.
struct WorkerSlice {
  std::size_t worker = 0;
  std::size_t workers = 1;
};

/// All associative tables on n labelled elements, in lexicographic order of
/// the row-major cell sequence. Found by backtracking over cells with
/// associativity checked on every fully defined triple.
///
/// token() after a yield names that table; a stream constructed from the
/// token continues with the next one.
class SemigroupStream {
 public:
  /// Throws SizeLimitError above limits().semigroup_order.
  explicit SemigroupStream(std::size_t n, WorkerSlice slice = {});
  SemigroupStream(std::size_t n, std::string_view resume_token,
                  WorkerSlice slice = {});

  std::optional<FiniteSemigroup> next();
  /// Empty until the first yield.
  std::string token() const;
  std::size_t order() const noexcept { return n_; }
  std::size_t yielded() const noexcept { return yielded_; }

 private:
  bool consistent() const;
  bool first_row_in_slice() const;

  std::size_t n_;
  WorkerSlice slice_;
  std::vector<int> cells_;
  bool started_ = false;
  bool finished_ = false;
  std::size_t yielded_ = 0;
};

std::vector<FiniteSemigroup> enumerate_semigroups(std::size_t n);

/// All partial orders on n labelled points, each as a row-major n*n matrix,
/// in ascending order of the off-diagonal bitmask (bit k is the k-th
/// off-diagonal pair in row-major order).
std::vector<std::vector<bool>> partial_orders(std::size_t n);

/// Partial orders compatible with F, in the partial_orders() sequence. The
/// discrete order always comes first. Throws SizeLimitError above
/// limits().order_scan.
std::vector<std::vector<bool>> enumerate_compatible_orders(
    const FiniteSemigroup& f);

/// Cross product of SemigroupStream with the compatible orders of each table.
/// Token format: "<semigroup token>/<order index>".
class OrderedSemigroupStream {
 public:
  explicit OrderedSemigroupStream(std::size_t n, WorkerSlice slice = {});
  OrderedSemigroupStream(std::size_t n, std::string_view resume_token,
                         WorkerSlice slice = {});

  std::optional<OrderedSemigroup> next();
  std::string token() const;
  std::size_t yielded() const noexcept { return yielded_; }

 private:
  SemigroupStream tables_;
  std::vector<std::vector<bool>> posets_;
  std::optional<FiniteSemigroup> current_;
  std::string table_token_;
  std::vector<std::size_t> compatible_;
  std::size_t next_order_ = 0;
  std::size_t yielded_ = 0;
};

std::vector<OrderedSemigroup> enumerate_ordered_semigroups(std::size_t n);

/// Compact one-line encoding of a structure: cells, '/', relation bits.
std::string transcript_line(const OrderedSemigroup& s);

/// FNV-1a 64 over the transcript lines, each terminated by '\n'.
class TranscriptHash {
 public:
  void add(std::string_view line);
  std::uint64_t value() const noexcept { return hash_; }
  std::string hex() const;

 private:
  std::uint64_t hash_ = 0xcbf29ce484222325ULL;
};

/// Lexicographically least transcript_line over all relabellings of the
/// carrier. Equal for isomorphic ordered semigroups.
std::string canonical_form(const OrderedSemigroup& s);

}  // namespace ordsgp
