#include "burst/channel.hpp"

#include <algorithm>
#include <string>

namespace burst {

std::int64_t last_burst_position(std::size_t n, int t) {
  if (t < 0) throw std::invalid_argument("burst length must be nonnegative");
  if (static_cast<std::size_t>(t) > n) throw std::invalid_argument("burst length " + std::to_string(t) + " exceeds word length " + std::to_string(n));
  // pure insertion may also append after x_n
  return t == 0 ? static_cast<std::int64_t>(n) + 1 : static_cast<std::int64_t>(n) - t + 1;
}

Word apply_burst(const Word& x, const BurstEvent& e) {
  const std::int64_t last = last_burst_position(x.size(), e.t);
  if (e.pos < 1 || e.pos > last) throw std::invalid_argument("burst position " + std::to_string(e.pos) + " outside [1, " + std::to_string(last) + "]");
  std::vector<Symbol> out(x.data().begin(), x.data().begin() + (e.pos - 1));
  for (Symbol v : e.inserted) {
    if (v < 0 || v >= x.q()) throw std::invalid_argument("inserted symbol outside alphabet");
    out.push_back(v);
  }
  out.insert(out.end(), x.data().begin() + std::min<std::int64_t>(e.pos - 1 + e.t, static_cast<std::int64_t>(x.size())), x.data().end());
  return Word(x.q(), std::move(out));
}

bool is_exact_burst(const Word& x, const BurstEvent& e) {
  if (e.t < 1 || e.s() < 1) return false;
  return e.inserted.front() != x.at(e.pos) && e.inserted.back() != x.at(e.pos + e.t - 1);
}

void for_each_burst_event(std::size_t n, Symbol q, int t, int s, const std::function<void(const BurstEvent&)>& f) {
  const std::int64_t last = last_burst_position(n, t);
  const Symbol blocks = ipow(q, s);
  BurstEvent e;
  e.t = t;
  e.inserted.assign(static_cast<std::size_t>(s), 0);
  for (std::int64_t i = 1; i <= last; ++i) {
    e.pos = i;
    for (Symbol b = 0; b < blocks; ++b) {
      Symbol v = b;
      for (int k = s - 1; k >= 0; --k) {
        e.inserted[static_cast<std::size_t>(k)] = v % q;
        v /= q;
      }
      f(e);
    }
  }
}

std::vector<Word> ball(const Word& x, int t, int s) {
  std::vector<Word> out;
  for_each_burst_event(x.size(), x.q(), t, s, [&](const BurstEvent& e) { out.push_back(apply_burst(x, e)); });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool in_ball(const Word& x, const Word& z, int t, int s) {
  const auto n = static_cast<std::int64_t>(x.size());
  if (z.q() != x.q()) return false;
  const std::int64_t last = last_burst_position(x.size(), t);
  if (static_cast<std::int64_t>(z.size()) != n - t + s) return false;
  std::int64_t common_prefix = 0;
  while (common_prefix < std::min<std::int64_t>(n, static_cast<std::int64_t>(z.size())) && x.at(common_prefix + 1) == z.at(common_prefix + 1)) ++common_prefix;
  std::int64_t common_suffix = 0;
  const auto m = static_cast<std::int64_t>(z.size());
  while (common_suffix < std::min(n, m) && x.at(n - common_suffix) == z.at(m - common_suffix)) ++common_suffix;
  // need i-1 <= common_prefix and n-(i+t)+1 <= common_suffix
  const std::int64_t lo = std::max<std::int64_t>(1, n - t + 1 - common_suffix);
  const std::int64_t hi = std::min(last, common_prefix + 1);
  return lo <= hi;
}

std::vector<std::vector<Word>> ball_partition(const Word& x, int t, int s) {
  if (s < 1 || t < 1) throw std::invalid_argument("ball_partition requires t >= 1 and s >= 1");
  const auto n = static_cast<std::int64_t>(x.size());
  const std::int64_t cells = last_burst_position(x.size(), t) + 1;
  const Symbol q = x.q();
  const Symbol free_blocks = ipow(q, s - 1);
  std::vector<std::vector<Word>> out(static_cast<std::size_t>(cells));
  auto free_block = [&](Symbol b) {
    std::vector<Symbol> blk(static_cast<std::size_t>(s - 1));
    for (int k = s - 2; k >= 0; --k) {
      blk[static_cast<std::size_t>(k)] = b % q;
      b /= q;
    }
    return blk;
  };
  for (std::int64_t i = 1; i < cells; ++i) {
    // y_i != x_i, y_[i+1, i+s-1] free, everything else copied from x outside [i, i+t-1]
    for (Symbol first = 0; first < q; ++first) {
      if (first == x.at(i)) continue;
      for (Symbol b = 0; b < free_blocks; ++b) {
        std::vector<Symbol> y(x.data().begin(), x.data().begin() + (i - 1));
        y.push_back(first);
        for (Symbol v : free_block(b)) y.push_back(v);
        y.insert(y.end(), x.data().begin() + std::min(i - 1 + t, n), x.data().end());
        out[static_cast<std::size_t>(i - 1)].emplace_back(q, std::move(y));
      }
    }
  }
  // final cell: y_[1, n-t+1] = x_[1, n-t+1], the remaining s-1 symbols free
  for (Symbol b = 0; b < free_blocks; ++b) {
    std::vector<Symbol> y(x.data().begin(), x.data().begin() + (n - t + 1));
    for (Symbol v : free_block(b)) y.push_back(v);
    out.back().emplace_back(q, std::move(y));
  }
  for (auto& cell : out) std::sort(cell.begin(), cell.end());
  return out;
}

std::int64_t partition_cell_of(const Word& x, const Word& y, int t, int s) {
  if (!in_ball(x, y, t, s)) return 0;
  const std::int64_t span = static_cast<std::int64_t>(x.size()) - t + 1;
  for (std::int64_t j = 1; j <= span; ++j)
    if (x.at(j) != y.at(j)) return j;
  return span + 1;
}

Word apply_inversion(const Word& x, std::int64_t i, std::int64_t len) {
  if (len < 1 || i < 1 || i + len - 1 > static_cast<std::int64_t>(x.size())) throw std::invalid_argument("inversion range outside the word");
  std::vector<Symbol> out = x.data();
  std::reverse(out.begin() + (i - 1), out.begin() + (i - 1 + len));
  return Word(x.q(), std::move(out));
}

Word apply_absorption_A(const Word& x, std::int64_t i) {
  const auto n = static_cast<std::int64_t>(x.size());
  if (i < 1 || i > n) throw std::invalid_argument("absorption position outside the word");
  std::vector<Symbol> out = x.data();
  if (i < n) out[static_cast<std::size_t>(i)] = std::min(out[static_cast<std::size_t>(i - 1)] + out[static_cast<std::size_t>(i)], x.q() - 1);
  out.erase(out.begin() + (i - 1));
  return Word(x.q(), std::move(out));
}

Word apply_absorption_B(const Word& x, std::int64_t i, Symbol new_val) {
  const auto n = static_cast<std::int64_t>(x.size());
  if (i < 1 || i > n) throw std::invalid_argument("absorption position outside the word");
  if (new_val < 0 || new_val >= x.at(i)) throw std::invalid_argument("absorption B needs 0 <= new_val < x_i");
  std::vector<Symbol> out = x.data();
  const Symbol moved = out[static_cast<std::size_t>(i - 1)] - new_val;
  out[static_cast<std::size_t>(i - 1)] = new_val;
  if (i < n) out[static_cast<std::size_t>(i)] = std::min(out[static_cast<std::size_t>(i)] + moved, x.q() - 1);
  return Word(x.q(), std::move(out));
}

Word apply_localized_deletions(const Word& x, std::int64_t window_start, int t, const std::vector<int>& offsets) {
  const auto n = static_cast<std::int64_t>(x.size());
  if (offsets.empty()) throw std::invalid_argument("localized deletion needs at least one offset");
  if (t < 1 || window_start < 1 || window_start + t - 1 > n) throw std::invalid_argument("localized window outside the word");
  std::vector<bool> drop(static_cast<std::size_t>(n), false);
  for (int o : offsets) {
    if (o < 0 || o >= t) throw std::invalid_argument("localized offset outside the window");
    drop[static_cast<std::size_t>(window_start - 1 + o)] = true;
  }
  std::vector<Symbol> out;
  for (std::int64_t k = 0; k < n; ++k)
    if (!drop[static_cast<std::size_t>(k)]) out.push_back(x.data()[static_cast<std::size_t>(k)]);
  return Word(x.q(), std::move(out));
}

}  // namespace burst
