#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace rochart {

// Weakly increasing parts, leading zeros kept; the part count is the row
// count k of the ambient box.
using Partition = std::vector<int>;

// Strictly increasing positions j_i = lambda_i + i inside [1, n].
struct JumpSequence {
  std::vector<int> jumps;
  int n = 0;

  friend bool operator==(const JumpSequence&, const JumpSequence&) = default;
  friend auto operator<=>(const JumpSequence&, const JumpSequence&) = default;
};

using JumpComplement = std::vector<int>;

// Sentinel for part(): no upper bound on part values.
inline constexpr int unbounded = -1;

namespace detail {

inline void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

inline bool weakly_increasing(const Partition& parts) {
  return std::is_sorted(parts.begin(), parts.end());
}

inline void check_in_box(const Partition& lambda, int k, int n, const char* who) {
  require(static_cast<int>(lambda.size()) == k, who);
  require(n >= k, who);
  require(weakly_increasing(lambda), who);
  require(lambda.empty() || (lambda.front() >= 0 && lambda.back() <= n - k), who);
}

}  // namespace detail

inline int box_count(const Partition& lambda) {
  return std::accumulate(lambda.begin(), lambda.end(), 0);
}

// Every partition in the k-by-m box, ordered by box count and then by
// ascending part tuple.
inline std::vector<Partition> enumerate_partitions(int k, int m) {
  detail::require(k >= 0 && m >= 0, "enumerate_partitions: box must be nonnegative");
  std::vector<Partition> out;
  Partition cur(static_cast<std::size_t>(k), 0);
  auto fill = [&](auto&& self, int idx, int minval) -> void {
    if (idx == k) {
      out.push_back(cur);
      return;
    }
    for (int v = minval; v <= m; ++v) {
      cur[static_cast<std::size_t>(idx)] = v;
      self(self, idx + 1, v);
    }
  };
  fill(fill, 0, 0);
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    const int ba = box_count(a), bb = box_count(b);
    if (ba != bb) return ba < bb;
    return a < b;
  });
  return out;
}

inline JumpSequence to_jumps(const Partition& lambda, int n) {
  detail::require(detail::weakly_increasing(lambda), "to_jumps: parts must be weakly increasing");
  detail::require(lambda.empty() || lambda.front() >= 0, "to_jumps: parts must be nonnegative");
  const int k = static_cast<int>(lambda.size());
  detail::require(k <= n, "to_jumps: more parts than ambient dimension");
  detail::require(k == 0 || lambda.back() + k <= n, "to_jumps: partition does not fit inside [1, n]");
  JumpSequence js{{}, n};
  js.jumps.reserve(lambda.size());
  for (int i = 0; i < k; ++i) js.jumps.push_back(lambda[static_cast<std::size_t>(i)] + i + 1);
  return js;
}

inline Partition from_jumps(const JumpSequence& js) {
  detail::require(js.jumps.empty() || js.jumps.front() >= 1, "from_jumps: jumps start at 1");
  detail::require(js.jumps.empty() || js.jumps.back() <= js.n, "from_jumps: jump beyond n");
  Partition lambda;
  lambda.reserve(js.jumps.size());
  for (std::size_t i = 0; i < js.jumps.size(); ++i) {
    const int v = js.jumps[i] - static_cast<int>(i) - 1;
    detail::require(v >= 0, "from_jumps: jump below its index");
    lambda.push_back(v);
  }
  detail::require(detail::weakly_increasing(lambda), "from_jumps: jumps must be strictly increasing");
  return lambda;
}

inline int trace(const Partition& lambda) {
  const int k = static_cast<int>(lambda.size());
  int t = 0;
  for (int i = 1; i <= k; ++i)
    if (lambda[static_cast<std::size_t>(i - 1)] >= k - i + 1) ++t;
  return t;
}

inline int trace(const JumpSequence& js) {
  const int k = static_cast<int>(js.jumps.size());
  return static_cast<int>(
      std::count_if(js.jumps.begin(), js.jumps.end(), [&](int j) { return j >= k + 1; }));
}

// True iff mu fits inside lambda after padding the shorter tuple with
// leading zeros; equivalent to componentwise dominance of jump sequences.
inline bool contains(const Partition& mu, const Partition& lambda) {
  const std::size_t k = std::max(mu.size(), lambda.size());
  const std::size_t pad_mu = k - mu.size();
  const std::size_t pad_lambda = k - lambda.size();
  for (std::size_t i = 0; i < k; ++i) {
    const int a = i < pad_mu ? 0 : mu[i - pad_mu];
    const int b = i < pad_lambda ? 0 : lambda[i - pad_lambda];
    if (a > b) return false;
  }
  return true;
}

// Column counts of the diagram, read so the result is again weakly
// increasing with n-k parts: transpose(lambda)_i = #{j : lambda_j > n-k-i}.
inline Partition transpose(const Partition& lambda, int k, int n) {
  detail::check_in_box(lambda, k, n, "transpose: partition outside the k-by-(n-k) box");
  const int m = n - k;
  Partition out(static_cast<std::size_t>(m), 0);
  for (int i = 1; i <= m; ++i)
    out[static_cast<std::size_t>(i - 1)] = static_cast<int>(std::count_if(
        lambda.begin(), lambda.end(), [&](int part) { return part > m - i; }));
  return out;
}

inline JumpComplement jump_complement(const Partition& lambda, int n) {
  const JumpSequence js = to_jumps(lambda, n);
  JumpComplement h;
  h.reserve(static_cast<std::size_t>(n) - js.jumps.size());
  std::size_t pos = 0;
  for (int v = 1; v <= n; ++v) {
    if (pos < js.jumps.size() && js.jumps[pos] == v) {
      ++pos;
      continue;
    }
    h.push_back(v);
  }
  return h;
}

// Number of partitions of p into k parts, each at most m, with trace
// exactly t. Pass m = unbounded for no cap on part size (parts never
// exceed p in that case).
inline long long part(int p, int k, int m, int t) {
  detail::require(p >= 0 && k >= 0 && t >= 0, "part: arguments must be nonnegative");
  detail::require(m >= 0 || m == unbounded, "part: bound must be nonnegative or unbounded");
  const int cap = m == unbounded ? p : m;
  if (t > k) return 0;
  Partition cur(static_cast<std::size_t>(k), 0);
  long long count = 0;
  auto fill = [&](auto&& self, int idx, int minval, int remaining) -> void {
    const int slots = k - idx;
    if (remaining < minval * slots || remaining > cap * slots) return;
    if (idx == k) {
      if (trace(cur) == t) ++count;
      return;
    }
    for (int v = minval; v <= cap && v * slots <= remaining; ++v) {
      cur[static_cast<std::size_t>(idx)] = v;
      self(self, idx + 1, v, remaining - v);
    }
  };
  fill(fill, 0, 0, p);
  return count;
}

inline long long betti(int k, int n, int d) {
  detail::require(k >= 0 && n >= k, "betti: need 0 <= k <= n");
  detail::require(d >= 0, "betti: degree must be nonnegative");
  long long total = 0;
  for (int t = 0; t <= std::min(k, n - k); ++t) total += part(d, k, n - k, t);
  return total;
}

// Complement-and-rotate image from the rank duality: the rows above the
// trace square flip inside a (k-t)-by-t box, the rows through it flip
// inside a t-by-(n-k-t) box east of the square. Preserves trace, sends
// box count b to n*t - b, and is an involution.
inline Partition duality_partner(const Partition& lambda, int k, int n) {
  detail::check_in_box(lambda, k, n, "duality_partner: partition outside the k-by-(n-k) box");
  const int m = n - k;
  const int t = trace(lambda);
  Partition out;
  out.reserve(lambda.size());
  for (int i = k - t; i >= 1; --i) out.push_back(t - lambda[static_cast<std::size_t>(i - 1)]);
  for (int i = k; i >= k - t + 1; --i)
    out.push_back(t + (m - t) - (lambda[static_cast<std::size_t>(i - 1)] - t));
  return out;
}

}  // namespace rochart
