#include "chainmon/transformation.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace chainmon {

void validate_chain_size(int n) {
  if (n < 1 || n > kMaxChainSize) {
    throw std::invalid_argument("chain size must be in [1, " +
                                std::to_string(kMaxChainSize) + "], got " +
                                std::to_string(n));
  }
}

std::string family_name(Family f) {
  switch (f) {
    case Family::PT: return "PT";
    case Family::T: return "T";
    case Family::PO: return "PO";
    case Family::O: return "O";
    case Family::PM: return "PM";
    case Family::M: return "M";
    case Family::PIO: return "PIO";
    case Family::IO: return "IO";
    case Family::PIM: return "PIM";
    case Family::IM: return "IM";
    case Family::PIM_R: return "PIM_r";
    case Family::IM_R: return "IM_r";
  }
  return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
  for (Family f : kAllFamilies) {
    if (family_name(f) == name) {
      return f;
    }
  }
  // Accept lowercase spellings as well.
  std::string upper = name;
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  for (Family f : kAllFamilies) {
    std::string fn = family_name(f);
    std::transform(fn.begin(), fn.end(), fn.begin(),
                   [](unsigned char c) { return std::toupper(c); });
    if (fn == upper) {
      return f;
    }
  }
  return std::nullopt;
}

bool family_is_full(Family f) {
  switch (f) {
    case Family::T:
    case Family::O:
    case Family::M:
    case Family::IO:
    case Family::IM:
    case Family::IM_R:
      return true;
    default:
      return false;
  }
}

PartialTransformation::PartialTransformation(int n) : n_(n), img_(n, 0) {
  validate_chain_size(n);
}

PartialTransformation::PartialTransformation(int n,
                                             const std::vector<int>& images)
    : n_(n), img_(n, 0) {
  validate_chain_size(n);
  if (images.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("image list has length " +
                                std::to_string(images.size()) +
                                ", expected " + std::to_string(n));
  }
  for (int i = 0; i < n; ++i) {
    int y = images[i];
    if (y < 0 || y > n) {
      throw std::invalid_argument("image " + std::to_string(y) +
                                  " of point " + std::to_string(i + 1) +
                                  " outside {1.." + std::to_string(n) + "}");
    }
    img_[i] = static_cast<std::uint8_t>(y);
  }
}

PartialTransformation PartialTransformation::identity(int n) {
  PartialTransformation t(n);
  for (int i = 0; i < n; ++i) {
    t.img_[i] = static_cast<std::uint8_t>(i + 1);
  }
  return t;
}

PartialTransformation PartialTransformation::zero(int n) {
  return PartialTransformation(n);
}

PartialTransformation PartialTransformation::reversal(int n) {
  PartialTransformation t(n);
  for (int i = 0; i < n; ++i) {
    t.img_[i] = static_cast<std::uint8_t>(n - i);
  }
  return t;
}

std::vector<ChainPoint> PartialTransformation::domain() const {
  std::vector<ChainPoint> dom;
  for (int i = 0; i < n_; ++i) {
    if (img_[i] != 0) {
      dom.push_back(i + 1);
    }
  }
  return dom;
}

std::vector<ChainPoint> PartialTransformation::image() const {
  std::vector<ChainPoint> im;
  for (int i = 0; i < n_; ++i) {
    if (img_[i] != 0) {
      im.push_back(img_[i]);
    }
  }
  std::sort(im.begin(), im.end());
  im.erase(std::unique(im.begin(), im.end()), im.end());
  return im;
}

std::size_t PartialTransformation::domain_size() const {
  std::size_t k = 0;
  for (int i = 0; i < n_; ++i) {
    k += img_[i] != 0;
  }
  return k;
}

std::size_t PartialTransformation::image_size() const { return image().size(); }

bool PartialTransformation::is_identity() const {
  for (int i = 0; i < n_; ++i) {
    if (img_[i] != i + 1) {
      return false;
    }
  }
  return true;
}

PartialTransformation PartialTransformation::operator*(
    const PartialTransformation& rhs) const {
  if (n_ != rhs.n_) {
    throw std::invalid_argument("cannot compose transformations of degree " +
                                std::to_string(n_) + " and " +
                                std::to_string(rhs.n_));
  }
  PartialTransformation out(n_);
  for (int i = 0; i < n_; ++i) {
    auto y = img_[i];
    out.img_[i] = y == 0 ? 0 : rhs.img_[y - 1];
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const PartialTransformation& t) {
  return os << to_two_row(t);
}

std::string to_two_row(const PartialTransformation& t) {
  std::ostringstream os;
  os << '[';
  for (int i = 1; i <= t.degree(); ++i) {
    if (i > 1) {
      os << ' ';
    }
    os << i;
  }
  os << " / ";
  for (int i = 1; i <= t.degree(); ++i) {
    if (i > 1) {
      os << ' ';
    }
    auto y = t.apply(i);
    if (y) {
      os << *y;
    } else {
      os << '-';
    }
  }
  os << ']';
  return os.str();
}

PartialTransformation parse_two_row(const std::string& text) {
  auto fail = [&](const std::string& why) -> void {
    throw std::invalid_argument("bad two-row notation \"" + text + "\": " +
                                why);
  };
  auto lb = text.find('[');
  auto rb = text.rfind(']');
  auto slash = text.find('/');
  if (lb == std::string::npos || rb == std::string::npos ||
      slash == std::string::npos || !(lb < slash && slash < rb)) {
    fail("expected \"[top / bottom]\"");
  }
  auto tokens = [](const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) {
      out.push_back(tok);
    }
    return out;
  };
  auto top = tokens(text.substr(lb + 1, slash - lb - 1));
  auto bot = tokens(text.substr(slash + 1, rb - slash - 1));
  if (top.empty() || top.size() != bot.size()) {
    fail("rows must be non-empty and of equal length");
  }
  int n = static_cast<int>(top.size());
  for (int i = 0; i < n; ++i) {
    if (top[i] != std::to_string(i + 1)) {
      fail("top row must be 1.." + std::to_string(n));
    }
  }
  std::vector<int> images(n, 0);
  for (int i = 0; i < n; ++i) {
    if (bot[i] == "-") {
      continue;
    }
    std::size_t pos = 0;
    int y = 0;
    try {
      y = std::stoi(bot[i], &pos);
    } catch (const std::exception&) {
      fail("bad image token \"" + bot[i] + "\"");
    }
    if (pos != bot[i].size() || y < 1 || y > n) {
      fail("bad image token \"" + bot[i] + "\"");
    }
    images[i] = y;
  }
  return PartialTransformation(n, images);
}

bool is_interval(const std::vector<ChainPoint>& points, int n) {
  validate_chain_size(n);
  if (points.empty()) {
    return true;
  }
  auto [lo, hi] = std::minmax_element(points.begin(), points.end());
  if (*lo < 1 || *hi > n) {
    throw std::invalid_argument("point outside the chain");
  }
  std::vector<bool> seen(n + 1, false);
  std::size_t distinct = 0;
  for (ChainPoint p : points) {
    if (!seen[p]) {
      seen[p] = true;
      ++distinct;
    }
  }
  return static_cast<std::size_t>(*hi - *lo + 1) == distinct;
}

namespace {

enum class Direction { preserving, reversing };

bool is_monotone_dir(const PartialTransformation& t, Direction d) {
  ChainPoint prev_img = 0;
  bool have_prev = false;
  for (int x = 1; x <= t.degree(); ++x) {
    auto y = t.apply(x);
    if (!y) {
      continue;
    }
    if (have_prev) {
      if (d == Direction::preserving ? *y < prev_img : *y > prev_img) {
        return false;
      }
    }
    prev_img = *y;
    have_prev = true;
  }
  return true;
}

}  // namespace

bool is_order_preserving(const PartialTransformation& t) {
  return is_monotone_dir(t, Direction::preserving);
}

bool is_order_reversing(const PartialTransformation& t) {
  return is_monotone_dir(t, Direction::reversing);
}

bool is_monotone(const PartialTransformation& t) {
  return is_order_preserving(t) || is_order_reversing(t);
}

bool in_family(const PartialTransformation& t, Family f) {
  const int n = t.degree();
  switch (f) {
    case Family::PT:
      return true;
    case Family::T:
      return t.is_full();
    case Family::PO:
      return is_order_preserving(t);
    case Family::O:
      return t.is_full() && is_order_preserving(t);
    case Family::PM:
      return is_monotone(t);
    case Family::M:
      return t.is_full() && is_monotone(t);
    case Family::PIO:
      return is_order_preserving(t) && is_interval(t.domain(), n) &&
             is_interval(t.image(), n);
    case Family::IO:
      return t.is_full() && is_order_preserving(t) &&
             is_interval(t.image(), n);
    case Family::PIM:
      return is_monotone(t) && is_interval(t.domain(), n) &&
             is_interval(t.image(), n);
    case Family::IM:
      return t.is_full() && is_monotone(t) && is_interval(t.image(), n);
    case Family::PIM_R:
      return is_order_reversing(t) && is_interval(t.domain(), n) &&
             is_interval(t.image(), n);
    case Family::IM_R:
      return t.is_full() && is_order_reversing(t) &&
             is_interval(t.image(), n);
  }
  return false;
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
  os << '{';
  for (std::size_t b = 0; b < p.blocks.size(); ++b) {
    if (b > 0) {
      os << ", ";
    }
    os << '{';
    for (std::size_t i = 0; i < p.blocks[b].size(); ++i) {
      if (i > 0) {
        os << ' ';
      }
      os << p.blocks[b][i];
    }
    os << '}';
  }
  return os << '}';
}

Partition kernel(const PartialTransformation& t) {
  if (t.is_zero()) {
    throw std::invalid_argument(
        "the empty transformation has no kernel (empty domain)");
  }
  std::map<ChainPoint, std::vector<ChainPoint>> fibers;
  for (int x = 1; x <= t.degree(); ++x) {
    if (auto y = t.apply(x)) {
      fibers[*y].push_back(x);
    }
  }
  Partition p;
  for (auto& [value, block] : fibers) {
    p.blocks.push_back(std::move(block));
  }
  std::sort(p.blocks.begin(), p.blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return p;
}

Partition merged_pair_partition(int i, int n) {
  validate_chain_size(n);
  if (i < 1 || i > n - 1) {
    throw std::invalid_argument("merged pair index " + std::to_string(i) +
                                " outside [1, " + std::to_string(n - 1) + "]");
  }
  Partition p;
  for (int x = 1; x <= n; ++x) {
    if (x == i) {
      p.blocks.push_back({x, x + 1});
      ++x;
    } else {
      p.blocks.push_back({x});
    }
  }
  return p;
}

bool refines(const Partition& p, const Partition& q) {
  std::map<ChainPoint, std::size_t> block_of;
  for (std::size_t b = 0; b < q.blocks.size(); ++b) {
    for (ChainPoint x : q.blocks[b]) {
      block_of[x] = b;
    }
  }
  for (const auto& block : p.blocks) {
    auto it = block_of.find(block.front());
    if (it == block_of.end()) {
      return false;
    }
    for (ChainPoint x : block) {
      auto jt = block_of.find(x);
      if (jt == block_of.end() || jt->second != it->second) {
        return false;
      }
    }
  }
  return true;
}

PartialTransformation generator(Gen kind, int i, int n) {
  validate_chain_size(n);
  auto check_range = [&](int lo, int hi, const char* name) {
    if (i < lo || i > hi) {
      throw std::invalid_argument(std::string("generator ") + name +
                                  " index " + std::to_string(i) +
                                  " outside [" + std::to_string(lo) + ", " +
                                  std::to_string(hi) + "] for n = " +
                                  std::to_string(n));
    }
  };
  std::vector<int> img(n, 0);
  switch (kind) {
    case Gen::a:
      // 1..i fixed, then i+1..n shifted down by one.
      check_range(1, n - 1, "a");
      for (int x = 1; x <= n; ++x) {
        img[x - 1] = x <= i ? x : x - 1;
      }
      break;
    case Gen::b:
      // 1..i shifted up by one, then i+1..n fixed.
      check_range(1, n - 1, "b");
      for (int x = 1; x <= n; ++x) {
        img[x - 1] = x <= i ? x + 1 : x;
      }
      break;
    case Gen::c:
      // Order-reversing, collapses {n-i, n-i+1} onto i; image {1..n-1}.
      check_range(1, n / 2, "c");
      for (int x = 1; x <= n; ++x) {
        if (x <= n - i - 1) {
          img[x - 1] = n - x;
        } else if (x == n - i || x == n - i + 1) {
          img[x - 1] = i;
        } else {
          img[x - 1] = n - x + 1;
        }
      }
      break;
    case Gen::e:
      // Partial identity on the prefix interval [1, i].
      check_range(1, n - 1, "e");
      for (int x = 1; x <= i; ++x) {
        img[x - 1] = x;
      }
      break;
    case Gen::f:
      // Partial identity on the suffix interval [i, n].
      check_range(2, n, "f");
      for (int x = i; x <= n; ++x) {
        img[x - 1] = x;
      }
      break;
    case Gen::h:
      return PartialTransformation::reversal(n);
    case Gen::id:
      return PartialTransformation::identity(n);
    case Gen::zero:
      return PartialTransformation::zero(n);
  }
  return PartialTransformation(n, img);
}

}  // namespace chainmon
