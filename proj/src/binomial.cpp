#include "qeuler/binomial.hpp"

#include <mutex>
#include <vector>

namespace qeuler {

namespace {

struct PascalTable {
  std::mutex mutex;
  std::vector<std::vector<BigInt>> rows{{BigInt(1)}};
};

PascalTable& table() {
  static PascalTable t;
  return t;
}

}  // namespace

BigInt binomial(long n, long r) {
  if (n < 0 || r < 0 || r > n) return 0;
  auto& t = table();
  std::lock_guard lock(t.mutex);
  while (static_cast<long>(t.rows.size()) <= n) {
    const auto& prev = t.rows.back();
    std::vector<BigInt> row(prev.size() + 1);
    row.front() = 1;
    row.back() = 1;
    for (std::size_t i = 1; i + 1 < row.size(); ++i) row[i] = prev[i - 1] + prev[i];
    t.rows.push_back(std::move(row));
  }
  return t.rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(r)];
}

}  // namespace qeuler
