#include "ordsgp/enumeration.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "ordsgp/limits.hpp"

namespace ordsgp {

namespace {

constexpr std::string_view kDigits = "0123456789abcdefghijklmnopqrstuvwxyz";

char digit(std::size_t v) { return kDigits.at(v); }

std::size_t check_order(std::size_t n) {
  if (n == 0) throw Error("enumeration order must be positive");
  if (n > limits().semigroup_order)
    throw SizeLimitError("semigroup enumeration", n, limits().semigroup_order);
  return n;
}

std::vector<int> parse_cells(std::size_t n, std::string_view token) {
  if (token.size() != n * n) throw Error("malformed resume token '" + std::string(token) + "'");
  std::vector<int> cells;
  for (char c : token) {
    const auto v = kDigits.find(c);
    if (v == std::string_view::npos || v >= n)
      throw Error("malformed resume token '" + std::string(token) + "'");
    cells.push_back(static_cast<int>(v));
  }
  return cells;
}

bool compatible(const FiniteSemigroup& f, const std::vector<bool>& leq) {
  const std::size_t n = f.size();
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      if (a == b || !leq[a * n + b]) continue;
      for (Element c = 0; c < n; ++c)
        if (!leq[f.mul(c, a) * n + f.mul(c, b)] || !leq[f.mul(a, c) * n + f.mul(b, c)])
          return false;
    }
  return true;
}

}  // namespace

SemigroupStream::SemigroupStream(std::size_t n, WorkerSlice slice)
    : n_(check_order(n)), slice_(slice), cells_(n * n, -1) {
  if (slice_.workers == 0 || slice_.worker >= slice_.workers)
    throw Error("invalid worker slice");
}

SemigroupStream::SemigroupStream(std::size_t n, std::string_view resume_token,
                                 WorkerSlice slice)
    : SemigroupStream(n, slice) {
  cells_ = parse_cells(n_, resume_token);
  started_ = true;
}

// Checks every triple whose four cells are defined. At n <= 4 that is cheaper
// than tracking which triples the newest cell completes.
bool SemigroupStream::consistent() const {
  const std::size_t n = n_;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const int xy = cells_[x * n + y];
      if (xy < 0) continue;
      for (std::size_t z = 0; z < n; ++z) {
        const int yz = cells_[y * n + z];
        if (yz < 0) continue;
        const int left = cells_[static_cast<std::size_t>(xy) * n + z];
        const int right = cells_[x * n + static_cast<std::size_t>(yz)];
        if (left >= 0 && right >= 0 && left != right) return false;
      }
    }
  return true;
}

bool SemigroupStream::first_row_in_slice() const {
  std::size_t rank = 0;
  for (std::size_t j = 0; j < n_; ++j) rank = rank * n_ + static_cast<std::size_t>(cells_[j]);
  return rank % slice_.workers == slice_.worker;
}

std::optional<FiniteSemigroup> SemigroupStream::next() {
  if (finished_) return std::nullopt;
  const std::size_t total = n_ * n_;
  std::size_t pos = 0;
  if (started_) {
    pos = total - 1;
  } else {
    started_ = true;
  }
  for (;;) {
    if (++cells_[pos] >= static_cast<int>(n_)) {
      cells_[pos] = -1;
      if (pos == 0) {
        finished_ = true;
        return std::nullopt;
      }
      --pos;
      continue;
    }
    if (!consistent()) continue;
    if (pos == n_ - 1 && !first_row_in_slice()) continue;
    if (pos + 1 == total) break;
    ++pos;
  }
  ++yielded_;
  std::vector<Element> cells(cells_.begin(), cells_.end());
  return FiniteSemigroup::from_cells(n_, std::move(cells));
}

std::string SemigroupStream::token() const {
  if (std::any_of(cells_.begin(), cells_.end(), [](int c) { return c < 0; })) return {};
  std::string out;
  for (int c : cells_) out += digit(static_cast<std::size_t>(c));
  return out;
}

std::vector<FiniteSemigroup> enumerate_semigroups(std::size_t n) {
  std::vector<FiniteSemigroup> out;
  SemigroupStream stream(n);
  while (auto f = stream.next()) out.push_back(std::move(*f));
  return out;
}

std::vector<std::vector<bool>> partial_orders(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, std::vector<std::vector<bool>>> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(n); it != cache.end()) return it->second;

  std::vector<std::pair<std::size_t, std::size_t>> off;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b) off.emplace_back(a, b);

  std::vector<std::vector<bool>> out;
  const std::uint64_t count = std::uint64_t{1} << off.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    std::vector<bool> leq(n * n, false);
    for (std::size_t a = 0; a < n; ++a) leq[a * n + a] = true;
    for (std::size_t k = 0; k < off.size(); ++k)
      if (mask >> k & 1) leq[off[k].first * n + off[k].second] = true;
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = 0; b < n && ok; ++b) {
        if (a != b && leq[a * n + b] && leq[b * n + a]) ok = false;
        for (std::size_t c = 0; c < n && ok; ++c)
          if (leq[a * n + b] && leq[b * n + c] && !leq[a * n + c]) ok = false;
      }
    if (ok) out.push_back(std::move(leq));
  }
  cache.emplace(n, out);
  return out;
}

std::vector<std::vector<bool>> enumerate_compatible_orders(const FiniteSemigroup& f) {
  if (f.size() > limits().order_scan)
    throw SizeLimitError("compatible order scan", f.size(), limits().order_scan);
  std::vector<std::vector<bool>> out;
  for (auto& leq : partial_orders(f.size()))
    if (compatible(f, leq)) out.push_back(std::move(leq));
  return out;
}

OrderedSemigroupStream::OrderedSemigroupStream(std::size_t n, WorkerSlice slice)
    : tables_(n, slice), posets_(partial_orders(n)) {}

OrderedSemigroupStream::OrderedSemigroupStream(std::size_t n, std::string_view resume_token,
                                               WorkerSlice slice)
    : tables_(n, slice), posets_(partial_orders(n)) {
  const auto slash = resume_token.find('/');
  if (slash == std::string_view::npos)
    throw Error("malformed resume token '" + std::string(resume_token) + "'");
  const auto table_token = resume_token.substr(0, slash);
  std::size_t index = 0;
  try {
    std::size_t used = 0;
    index = std::stoul(std::string(resume_token.substr(slash + 1)), &used);
    if (used != resume_token.size() - slash - 1) throw Error("");
  } catch (const std::exception&) {
    throw Error("malformed resume token '" + std::string(resume_token) + "'");
  }
  const auto cells = parse_cells(n, table_token);
  tables_ = SemigroupStream(n, table_token, slice);
  current_ = FiniteSemigroup::from_cells(n, std::vector<Element>(cells.begin(), cells.end()));
  table_token_ = std::string(table_token);
  for (std::size_t k = 0; k < posets_.size(); ++k)
    if (compatible(*current_, posets_[k])) compatible_.push_back(k);
  next_order_ = index + 1;
}

std::optional<OrderedSemigroup> OrderedSemigroupStream::next() {
  for (;;) {
    if (current_ && next_order_ < compatible_.size()) {
      const auto& leq = posets_[compatible_[next_order_++]];
      ++yielded_;
      return OrderedSemigroup::from_relation(*current_, leq);
    }
    current_ = tables_.next();
    if (!current_) return std::nullopt;
    table_token_ = tables_.token();
    compatible_.clear();
    for (std::size_t k = 0; k < posets_.size(); ++k)
      if (compatible(*current_, posets_[k])) compatible_.push_back(k);
    next_order_ = 0;
  }
}

std::string OrderedSemigroupStream::token() const {
  if (!current_ || next_order_ == 0) return {};
  return table_token_ + "/" + std::to_string(next_order_ - 1);
}

std::vector<OrderedSemigroup> enumerate_ordered_semigroups(std::size_t n) {
  std::vector<OrderedSemigroup> out;
  OrderedSemigroupStream stream(n);
  while (auto s = stream.next()) out.push_back(std::move(*s));
  return out;
}

std::string transcript_line(const OrderedSemigroup& s) {
  const std::size_t n = s.size();
  std::string out;
  out.reserve(2 * n * n + 1);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) out += digit(s.mul(a, b));
  out += '/';
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) out += s.leq(a, b) ? '1' : '0';
  return out;
}

void TranscriptHash::add(std::string_view line) {
  auto feed = [this](unsigned char byte) {
    hash_ ^= byte;
    hash_ *= 0x100000001b3ULL;
  };
  for (char c : line) feed(static_cast<unsigned char>(c));
  feed('\n');
}

std::string TranscriptHash::hex() const {
  std::string out(16, '0');
  std::uint64_t v = hash_;
  for (std::size_t i = 16; i-- > 0; v >>= 4) out[i] = kDigits[v & 0xf];
  return out;
}

std::string canonical_form(const OrderedSemigroup& s) {
  constexpr std::size_t kMaxPermuted = 8;
  const std::size_t n = s.size();
  if (n > kMaxPermuted) throw SizeLimitError("canonical form", n, kMaxPermuted);
  // perm[i] = old label of new element i
  std::vector<Element> perm(n);
  std::iota(perm.begin(), perm.end(), Element{0});
  std::vector<Element> inverse(n);
  std::string best;
  std::string line(2 * n * n + 1, '/');
  do {
    for (Element i = 0; i < n; ++i) inverse[perm[i]] = i;
    std::size_t k = 0;
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) line[k++] = digit(inverse[s.mul(perm[a], perm[b])]);
    ++k;
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) line[k++] = s.leq(perm[a], perm[b]) ? '1' : '0';
    if (best.empty() || line < best) best = line;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace ordsgp
