#include "patgen/tandem.hpp"

#include <algorithm>

namespace patgen {
namespace {

bool is_primitive(std::span<const Label> alpha) {
  const std::size_t n = alpha.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (std::size_t j = p; j < n && periodic; ++j) periodic = alpha[j] == alpha[j - p];
    if (periodic) return false;
  }
  return true;
}

}  // namespace

std::vector<TandemRepeat> detect_tandem_repeats(std::span<const Label> t) {
  std::vector<TandemRepeat> out;
  const std::size_t n = t.size();
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t len = 1; s + 2 * len <= n; ++len) {
      // A repeat that also fits one position further left is either not
      // maximal or a right shift of that one.
      if (s > 0 && t[s - 1] == t[s - 1 + len]) continue;
      std::size_t k = 1;
      while (s + (k + 1) * len <= n &&
             std::equal(t.begin() + s, t.begin() + s + len, t.begin() + s + k * len)) {
        ++k;
      }
      if (k < 2) continue;
      const auto alpha = t.subspan(s, len);
      if (!is_primitive(alpha)) continue;
      out.push_back({s + 1, Trace(alpha.begin(), alpha.end()), k});
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const TandemRepeat& a, const TandemRepeat& b) {
    if (a.start != b.start) return a.start < b.start;
    if (a.length() != b.length()) return a.length() > b.length();
    return a.repeat_type < b.repeat_type;
  });
  return out;
}

const TandemRepeat* longest_at(std::span<const TandemRepeat> repeats, std::size_t start) {
  // Sorted order puts the preferred repeat first among those with this start.
  for (const auto& r : repeats) {
    if (r.start == start) return &r;
  }
  return nullptr;
}

Trace reduce_trace(std::span<const Label> t) {
  const auto repeats = detect_tandem_repeats(t);
  Trace out;
  std::size_t pos = 1;
  while (pos <= t.size()) {
    if (const auto* r = longest_at(repeats, pos)) {
      for (int copy = 0; copy < 2; ++copy) {
        out.insert(out.end(), r->repeat_type.begin(), r->repeat_type.end());
      }
      pos += r->length();
    } else {
      out.push_back(t[pos - 1]);
      ++pos;
    }
  }
  return out;
}

EventLog reduce_log(const EventLog& log) {
  EventLog out;
  for (const auto& [trace, count] : log.entries()) {
    if (detect_tandem_repeats(trace).empty()) continue;
    out.add(reduce_trace(trace), count);
  }
  return out;
}

Trace extend_trace(std::span<const Label> rt) {
  const auto repeats = detect_tandem_repeats(rt);
  Trace out;
  std::size_t pos = 1;
  while (pos <= rt.size()) {
    if (const auto* r = longest_at(repeats, pos)) {
      for (std::size_t copy = 0; copy < rt.size(); ++copy) {
        out.insert(out.end(), r->repeat_type.begin(), r->repeat_type.end());
      }
      pos += r->length();
    } else {
      out.push_back(rt[pos - 1]);
      ++pos;
    }
  }
  return out;
}

EventLog extend_log(const EventLog& reduced) {
  EventLog out;
  for (const auto& [trace, count] : reduced.entries()) out.add(extend_trace(trace), count);
  return out;
}

}  // namespace patgen
