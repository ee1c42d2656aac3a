#include "chainmon/counting.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace chainmon {

namespace {

using int128 = __int128;

void require_positive(int n) {
  if (n < 1) {
    throw std::invalid_argument("n must be >= 1, got " + std::to_string(n));
  }
}

int128 pow2(int e) {
  if (e < 0 || e > 120) {
    throw std::invalid_argument("2^" + std::to_string(e) +
                                " outside the supported range");
  }
  return int128(1) << e;
}

std::int64_t narrow(int128 v) {
  if (v > int128(std::numeric_limits<std::int64_t>::max()) ||
      v < int128(std::numeric_limits<std::int64_t>::min())) {
    throw std::overflow_error("count does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

int128 binom128(int a, int b) {
  if (b < 0 || b > a) {
    return 0;
  }
  b = std::min(b, a - b);
  int128 acc = 1;
  for (int i = 1; i <= b; ++i) {
    acc = acc * (a - b + i) / i;  // exact at every step
  }
  return acc;
}

int128 exact_half(int128 v) {
  if (v % 2 != 0) {
    throw std::logic_error("expected an even value before halving");
  }
  return v / 2;
}

}  // namespace

std::int64_t binomial(int a, int b) { return narrow(binom128(a, b)); }

std::int64_t card_pim(int n) {
  require_positive(n);
  int128 nn = n;
  int128 poly = nn * nn * nn + 5 * nn * nn + 12 * nn + 10;
  return narrow((nn + 3) * pow2(n + 1) - exact_half(poly));
}

std::int64_t card_im(int n) {
  require_positive(n);
  int128 nn = n;
  if (n == 1) {
    return 1;  // (n+1)*2^(n-1) - n = 2*1 - 1
  }
  return narrow((nn + 1) * pow2(n - 1) - nn);
}

std::int64_t card_pio(int n) {
  require_positive(n);
  int128 nn = n;
  return narrow((nn + 3) * pow2(n) - nn * nn - 3 * nn - 2);
}

std::int64_t card_io(int n) {
  require_positive(n);
  // (n+1)*2^(n-2) is non-integral at n = 1; |IO_1| = |T_1| = 1 by
  // convention, verified against the filter oracle.
  if (n == 1) {
    return 1;
  }
  return narrow(int128(n + 1) * pow2(n - 2));
}

std::int64_t card_n_pio(int n) {
  require_positive(n);
  int128 nn = n;
  return narrow(pow2(n + 2) - nn * nn - 3 * nn - 3);
}

std::int64_t nilpotent_triple_sum(int n) {
  require_positive(n);
  int128 total = 0;
  for (int r = 2; r <= n - 2; ++r) {
    for (int j = 1; j <= n - r + 1; ++j) {
      for (int k = 2; k <= j - 1; ++k) {
        total += int128(j - k) * binom128(r - 1, k - 1);
      }
    }
  }
  return narrow(total);
}

std::int64_t nilpotent_triple_sum_mirror(int n) {
  require_positive(n);
  int128 total = 0;
  for (int r = 2; r <= n - 2; ++r) {
    for (int j = 1; j <= n - r + 1; ++j) {
      for (int k = 2; k <= n - j - r + 1; ++k) {
        total += int128(n - j - r - k + 2) * binom128(r - 1, k - 1);
      }
    }
  }
  return narrow(total);
}

std::int64_t card_n_pim(int n) {
  return narrow(int128(card_n_pio(n)) + 2 * int128(nilpotent_triple_sum(n)));
}

std::int64_t reversing_intersection_card(int n) {
  require_positive(n);
  int128 nn = n;
  return narrow(exact_half(nn * nn * (nn + 1)) + 1);
}

std::int64_t interval_count(int n) {
  require_positive(n);
  int128 nn = n;
  return narrow(exact_half(nn * (nn + 1)));
}

std::int64_t nilpotent_count_for_domain(int n, int j, int r) {
  require_positive(n);
  if (r < 1 || r > n - 1 || j < 1 || j > n - r + 1) {
    throw std::invalid_argument(
        "domain parameters (j, r) = (" + std::to_string(j) + ", " +
        std::to_string(r) + ") outside 1 <= r <= n-1, 1 <= j <= n-r+1");
  }
  int128 below = 0;
  for (int k = 1; k <= j - 1; ++k) {
    below += int128(j - k) * binom128(r - 1, k - 1);
  }
  int128 above = 0;
  for (int k = 1; k <= n - j - r + 1; ++k) {
    above += int128(n - j - r - k + 2) * binom128(r - 1, k - 1);
  }
  return narrow(below + above);
}

bool CountReport::agree() const {
  if (enumerated && *enumerated != formula) {
    return false;
  }
  if (oracle && *oracle != formula) {
    return false;
  }
  return true;
}

std::string count_reports_csv(const std::vector<CountReport>& rows) {
  std::ostringstream os;
  os << "n,family,formula,enumerated,oracle,agree\n";
  for (const auto& row : rows) {
    os << row.n << ',' << row.family << ',' << row.formula << ',';
    if (row.enumerated) {
      os << *row.enumerated;
    }
    os << ',';
    if (row.oracle) {
      os << *row.oracle;
    }
    os << ',' << (row.agree() ? "true" : "false") << '\n';
  }
  return os.str();
}

std::string count_reports_json(const std::vector<CountReport>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json obj;
    obj["n"] = row.n;
    obj["family"] = row.family;
    obj["formula"] = row.formula;
    if (row.enumerated) {
      obj["enumerated"] = *row.enumerated;
    } else {
      obj["enumerated"] = nullptr;
    }
    if (row.oracle) {
      obj["oracle"] = *row.oracle;
    } else {
      obj["oracle"] = nullptr;
    }
    obj["agree"] = row.agree();
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

}  // namespace chainmon
