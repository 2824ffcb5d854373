#include "unimodal/enumerators.hpp"

#include <algorithm>
#include <sstream>

#include "unimodal/error.hpp"

namespace unimodal {

namespace {

constexpr std::string_view kFamilyNames[] = {
    "partition",           "partition-with-rank",     "overpartition", "strongly-unimodal",
    "left-heavy-overlined", "m2-left-heavy-overlined", "m2-left-heavy",
};

void guard(int n) {
  if (n < 0) throw Error(ErrorKind::domain, "negative size");
  if (n > kEnumerationLimit)
    throw Error(ErrorKind::size_limit,
                "size " + std::to_string(n) + " exceeds enumeration limit " + std::to_string(kEnumerationLimit));
}

// ---------------------------------------------------------------------------
// Partitions and overpartitions: parts chosen by decreasing distinct value.

class PartitionWalker {
 public:
  PartitionWalker(bool allow_bars, const ObjectVisitor& visit) : bars_(allow_bars), visit_(visit) {}

  void run(int n) {
    obj_ = {};
    rec(n, n);
  }

 private:
  void rec(int max_value, int rest) {
    if (rest == 0) {
      visit_(obj_);
      return;
    }
    for (int j = std::min(max_value, rest); j >= 1; --j) {
      for (int bar = 0; bar <= (bars_ ? 1 : 0); ++bar) {
        if (bar) push(j, true);
        int used = bar;
        // At least one copy of j overall.
        if (used == 0) {
          push(j, false);
          used = 1;
        }
        while (used * j <= rest) {
          rec(j - 1, rest - used * j);
          push(j, false);
          ++used;
        }
        for (int k = 0; k < used; ++k) pop();
      }
    }
  }
  void push(int v, bool bar) {
    obj_.parts.push_back(v);
    obj_.overlined.push_back(bar);
  }
  void pop() {
    obj_.parts.pop_back();
    obj_.overlined.pop_back();
  }

  bool bars_;
  const ObjectVisitor& visit_;
  UnimodalObject obj_;
};

// ---------------------------------------------------------------------------
// Unimodal families: a peak value P plus, for every value j < P, a choice
// of copies on each side of the peak.

struct Choice {
  int left_plain = 0;
  bool left_bar = false;
  bool right_bar = false;
  int right_plain = 0;

  int copies() const { return left_plain + left_bar + right_bar + right_plain; }
};

class UnimodalWalker {
 public:
  UnimodalWalker(Family family, const ObjectVisitor& visit) : family_(family), visit_(visit) {}

  void run(int n) {
    const bool even_peak = family_ == Family::m2_left_heavy_overlined || family_ == Family::m2_left_heavy;
    for (int p = even_peak ? 2 : 1; p <= n; p += even_peak ? 2 : 1) {
      peak_ = p;
      const int rest = n - p;
      // Plain copies of the peak value itself.
      switch (family_) {
        case Family::left_heavy_overlined:
          for (int c = 0; c * p <= rest; ++c) {
            peak_extra_ = {c, false, false, 0};
            rec(p - 1, rest - c * p);
          }
          break;
        case Family::m2_left_heavy_overlined:
          for (int c = 0; 2 * c * p <= rest; ++c) {
            peak_extra_ = {c, false, false, c};
            rec(p - 1, rest - 2 * c * p);
          }
          break;
        default:
          peak_extra_ = {};
          rec(p - 1, rest);
      }
    }
  }

 private:
  template <class F>
  void for_each_choice(int j, int rest, F&& f) {
    const int cap = rest / j;
    auto flags = [&](bool allow_left_bar, bool allow_right_bar, int left_plain, int right_plain) {
      for (int lb = 0; lb <= (allow_left_bar ? 1 : 0); ++lb)
        for (int rb = 0; rb <= (allow_right_bar ? 1 : 0); ++rb) {
          Choice c{left_plain, lb != 0, rb != 0, right_plain};
          if (c.copies() > 0 && c.copies() <= cap) f(c);
        }
    };
    switch (family_) {
      case Family::strongly_unimodal:
        for (int l = 0; l <= 1; ++l)
          for (int r = 0; r <= 1; ++r) flags(false, false, l, r);
        break;
      case Family::left_heavy_overlined:
        for (int l = 0; l <= cap; ++l) flags(true, true, l, 0);
        break;
      case Family::m2_left_heavy_overlined: {
        const int half = peak_ / 2;
        const bool even = j % 2 == 0;
        for (int c = 0; 2 * c <= cap; ++c) {
          if (c > 0 && j < half + 1) break;
          flags(true, even, c, c);
        }
        break;
      }
      case Family::m2_left_heavy:
        if (j % 2 == 0) {
          for (int l = 0; l <= 1; ++l)
            for (int r = 0; r <= 1; ++r) flags(false, false, l, r);
        } else {
          for (int l = 0; l <= cap; ++l) flags(false, false, l, 0);
        }
        break;
      default:
        throw Error(ErrorKind::domain, "not a unimodal family");
    }
  }

  void rec(int max_value, int rest) {
    if (rest == 0) {
      emit();
      return;
    }
    for (int j = std::min(max_value, rest); j >= 1; --j) {
      for_each_choice(j, rest, [&](const Choice& c) {
        stack_.emplace_back(j, c);
        rec(j - 1, rest - c.copies() * j);
        stack_.pop_back();
      });
    }
  }

  void emit() {
    obj_.parts.clear();
    obj_.overlined.clear();
    auto put = [&](int v, bool bar, int times) {
      for (int k = 0; k < times; ++k) {
        obj_.parts.push_back(v);
        obj_.overlined.push_back(bar);
      }
    };
    // stack_ holds values in decreasing order.
    for (auto it = stack_.rbegin(); it != stack_.rend(); ++it) {
      put(it->first, false, it->second.left_plain);
      put(it->first, true, it->second.left_bar ? 1 : 0);
    }
    put(peak_, false, peak_extra_.left_plain);
    obj_.peak_index = static_cast<int>(obj_.parts.size());
    const bool peak_bar = family_ == Family::left_heavy_overlined || family_ == Family::m2_left_heavy_overlined;
    put(peak_, peak_bar, 1);
    put(peak_, false, peak_extra_.right_plain);
    for (const auto& [v, c] : stack_) {
      put(v, true, c.right_bar ? 1 : 0);
      put(v, false, c.right_plain);
    }
    visit_(obj_);
  }

  Family family_;
  const ObjectVisitor& visit_;
  int peak_ = 0;
  Choice peak_extra_;
  std::vector<std::pair<int, Choice>> stack_;
  UnimodalObject obj_;
};

// ---------------------------------------------------------------------------
// Validation helpers.

bool weakly_unimodal(const UnimodalObject& o) {
  const int len = static_cast<int>(o.parts.size());
  for (int i = 0; i < o.peak_index; ++i)
    if (o.parts[i] > o.parts[i + 1]) return false;
  for (int i = o.peak_index; i + 1 < len; ++i)
    if (o.parts[i] < o.parts[i + 1]) return false;
  return true;
}

bool well_formed(const UnimodalObject& o) {
  if (o.parts.size() != o.overlined.size()) return false;
  if (std::any_of(o.parts.begin(), o.parts.end(), [](int p) { return p <= 0; })) return false;
  if (o.parts.empty()) return o.peak_index == 0;
  return o.peak_index >= 0 && o.peak_index < static_cast<int>(o.parts.size());
}

bool no_bars(const UnimodalObject& o) {
  return std::none_of(o.overlined.begin(), o.overlined.end(), [](bool b) { return b; });
}

// At most one overlined copy of each value inside [lo, hi).
bool bars_distinct(const UnimodalObject& o, int lo, int hi) {
  std::vector<int> seen;
  for (int i = lo; i < hi; ++i) {
    if (!o.overlined[i]) continue;
    if (std::find(seen.begin(), seen.end(), o.parts[i]) != seen.end()) return false;
    seen.push_back(o.parts[i]);
  }
  return true;
}

bool validate_impl(Family family, const UnimodalObject& o) {
  if (!well_formed(o)) return false;
  const int len = static_cast<int>(o.parts.size());
  switch (family) {
    case Family::partition:
    case Family::partition_with_rank:
      return no_bars(o) && o.peak_index == 0 && std::is_sorted(o.parts.rbegin(), o.parts.rend());
    case Family::overpartition:
      if (o.peak_index != 0 || !std::is_sorted(o.parts.rbegin(), o.parts.rend())) return false;
      for (int i = 1; i < len; ++i)
        if (o.overlined[i] && o.parts[i - 1] == o.parts[i]) return false;
      return true;
    case Family::strongly_unimodal:
      if (len == 0 || !no_bars(o)) return false;
      for (int i = 0; i < o.peak_index; ++i)
        if (o.parts[i] >= o.parts[i + 1]) return false;
      for (int i = o.peak_index; i + 1 < len; ++i)
        if (o.parts[i] <= o.parts[i + 1]) return false;
      return true;
    case Family::left_heavy_overlined: {
      if (len == 0 || !weakly_unimodal(o)) return false;
      const int p = o.parts[o.peak_index];
      if (!o.overlined[o.peak_index]) return false;
      // Left of and including the peak: an overpartition whose largest part
      // is overlined; in increasing order the overlined copy is the last.
      for (int i = 0; i < o.peak_index; ++i)
        if (o.overlined[i] && o.parts[i + 1] == o.parts[i]) return false;
      // After the peak: distinct overlined parts below the peak.
      for (int i = o.peak_index + 1; i < len; ++i) {
        if (!o.overlined[i] || o.parts[i] >= p) return false;
        if (i + 1 < len && o.parts[i + 1] == o.parts[i]) return false;
      }
      return true;
    }
    case Family::m2_left_heavy_overlined: {
      if (len == 0 || !weakly_unimodal(o)) return false;
      const int p = o.parts[o.peak_index];
      if (p % 2 != 0 || !o.overlined[o.peak_index]) return false;
      const int n_half = p / 2;
      std::vector<int> left_plain, right_plain;
      for (int i = 0; i < len; ++i) {
        if (o.parts[i] > p) return false;
        if (i == o.peak_index) continue;
        if (o.overlined[i]) {
          if (o.parts[i] == p) return false;
          if (o.parts[i] % 2 != 0 && i > o.peak_index) return false;
        } else {
          if (o.parts[i] < n_half + 1) return false;
          (i < o.peak_index ? left_plain : right_plain).push_back(o.parts[i]);
        }
      }
      std::sort(left_plain.begin(), left_plain.end());
      std::sort(right_plain.begin(), right_plain.end());
      return left_plain == right_plain && bars_distinct(o, 0, o.peak_index) &&
             bars_distinct(o, o.peak_index + 1, len);
    }
    case Family::m2_left_heavy: {
      if (len == 0 || !no_bars(o) || !weakly_unimodal(o)) return false;
      const int p = o.parts[o.peak_index];
      if (p % 2 != 0) return false;
      std::vector<int> evens_before, evens_after;
      for (int i = 0; i < len; ++i) {
        if (o.parts[i] % 2 != 0) {
          if (i > o.peak_index) return false;
        } else if (i < o.peak_index) {
          evens_before.push_back(o.parts[i]);
        } else if (i > o.peak_index) {
          evens_after.push_back(o.parts[i]);
        }
      }
      evens_before.push_back(p);
      for (std::size_t i = 0; i + 1 < evens_before.size(); ++i)
        if (evens_before[i] >= evens_before[i + 1]) return false;
      int prev = p;
      for (int e : evens_after) {
        if (e >= prev) return false;
        prev = e;
      }
      return true;
    }
  }
  return false;
}

}  // namespace

std::string_view to_string(Family f) { return kFamilyNames[static_cast<int>(f)]; }

std::optional<Family> family_from_string(std::string_view s) {
  for (Family f : kAllFamilies)
    if (to_string(f) == s) return f;
  return std::nullopt;
}

int UnimodalObject::size() const {
  int s = 0;
  for (int p : parts) s += p;
  return s;
}

std::string UnimodalObject::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) os << ",";
    os << parts[i];
    if (overlined[i]) os << "̅";
  }
  os << ")";
  return os.str();
}

void visit_objects(Family family, int n, const ObjectVisitor& visit) {
  guard(n);
  switch (family) {
    case Family::partition:
    case Family::partition_with_rank:
      PartitionWalker(false, visit).run(n);
      return;
    case Family::overpartition:
      PartitionWalker(true, visit).run(n);
      return;
    default:
      UnimodalWalker(family, visit).run(n);
  }
}

std::vector<UnimodalObject> enumerate(Family family, int n) {
  std::vector<UnimodalObject> out;
  visit_objects(family, n, [&](const UnimodalObject& o) { out.push_back(o); });
  return out;
}

bool validate(Family family, const UnimodalObject& obj) { return validate_impl(family, obj); }

int rank_of(Family family, const UnimodalObject& o) {
  const int len = static_cast<int>(o.parts.size());
  auto after_minus_before = [&](auto pred) {
    int r = 0;
    for (int i = 0; i < len; ++i) {
      if (i == o.peak_index || !pred(i)) continue;
      r += i > o.peak_index ? 1 : -1;
    }
    return r;
  };
  switch (family) {
    case Family::partition:
      return 0;
    case Family::partition_with_rank:
    case Family::overpartition:
      return len == 0 ? 0 : o.parts[0] - len;
    case Family::strongly_unimodal:
      return after_minus_before([](int) { return true; });
    case Family::left_heavy_overlined:
      return after_minus_before([&](int i) { return static_cast<bool>(o.overlined[i]); });
    case Family::m2_left_heavy_overlined:
      return after_minus_before([&](int i) { return o.overlined[i] && o.parts[i] % 2 == 0; });
    case Family::m2_left_heavy:
      return after_minus_before([&](int i) { return o.parts[i] % 2 == 0; });
  }
  return 0;
}

int sign_of(Family family, const UnimodalObject& o) {
  if (family != Family::left_heavy_overlined) return 1;
  const auto plain = std::count(o.overlined.begin(), o.overlined.end(), false);
  return plain % 2 == 0 ? 1 : -1;
}

std::int64_t count(Family family, int n) {
  std::int64_t total = 0;
  visit_objects(family, n, [&](const UnimodalObject& o) { total += sign_of(family, o); });
  return total;
}

std::map<int, std::int64_t> count_by_rank(Family family, int n) {
  std::map<int, std::int64_t> out;
  visit_objects(family, n, [&](const UnimodalObject& o) { out[rank_of(family, o)] += sign_of(family, o); });
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

std::int64_t partition_rank_count(int m, int n) {
  const auto by_rank = count_by_rank(Family::partition_with_rank, n);
  auto it = by_rank.find(m);
  return it == by_rank.end() ? 0 : it->second;
}

std::int64_t strongly_unimodal_rank_count(int m, int n) {
  const auto by_rank = count_by_rank(Family::strongly_unimodal, n);
  auto it = by_rank.find(m);
  return it == by_rank.end() ? 0 : it->second;
}

std::map<int, std::int64_t> overpartition_rank_counts(int n) {
  return count_by_rank(Family::overpartition, n);
}

std::map<int, std::int64_t> overpartition_m2_rank_counts(int n) {
  std::map<int, std::int64_t> out;
  visit_objects(Family::overpartition, n, [&](const UnimodalObject& o) {
    const int len = static_cast<int>(o.parts.size());
    if (len == 0) {
      ++out[0];
      return;
    }
    const int l = o.parts[0];
    int odd_plain = 0;
    for (int i = 0; i < len; ++i)
      if (!o.overlined[i] && o.parts[i] % 2 != 0) ++odd_plain;
    const int chi = (l % 2 != 0 && !o.overlined[0]) ? 1 : 0;
    ++out[(l + 1) / 2 - len + odd_plain - chi];
  });
  return out;
}

std::map<int, std::int64_t> odd_distinct_m2_rank_counts(int n) {
  std::map<int, std::int64_t> out;
  visit_objects(Family::partition, n, [&](const UnimodalObject& o) {
    const int len = static_cast<int>(o.parts.size());
    for (int i = 0; i + 1 < len; ++i)
      if (o.parts[i] % 2 != 0 && o.parts[i] == o.parts[i + 1]) return;
    const int l = len == 0 ? 0 : o.parts[0];
    ++out[(l + 1) / 2 - len];
  });
  return out;
}

}  // namespace unimodal
