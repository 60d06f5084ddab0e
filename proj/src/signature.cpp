#include "zeck/signature.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "zeck/bigint.hpp"

namespace zeck {

BigInt parse_bigint(const std::string& text) {
  std::string s;
  for (char ch : text) {
    if (ch != ' ' && ch != '\t') s.push_back(ch);
  }
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (s.size() == start ||
      !std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                   [](char ch) { return ch >= '0' && ch <= '9'; })) {
    throw std::invalid_argument("not an integer: '" + text + "'");
  }
  BigInt value(s.substr(start));
  return s[0] == '-' ? BigInt(-value) : value;
}

Signature::Signature(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw SignatureError("signature is empty");
  if (coeffs_.size() > kMaxDepth) {
    throw SignatureError("signature depth " + std::to_string(coeffs_.size()) +
                         " exceeds the maximum of " + std::to_string(kMaxDepth));
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] < 0) {
      throw SignatureError("coefficient c_" + std::to_string(i + 1) + " is negative");
    }
  }
  if (coeffs_.front() == 0) throw SignatureError("leading coefficient c_1 must be at least 1");
  if (coeffs_.back() == 0) throw SignatureError("trailing coefficient c_t must be at least 1");
}

std::int64_t Signature::total() const {
  return std::accumulate(coeffs_.begin(), coeffs_.end(), std::int64_t{0});
}

std::int64_t Signature::prefix_sum(std::size_t k) const {
  k = std::min(k, coeffs_.size());
  return std::accumulate(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(k),
                         std::int64_t{0});
}

std::string Signature::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out << ',';
    out << coeffs_[i];
  }
  return out.str();
}

Signature parse_signature(std::string_view text) {
  std::string compact;
  for (char ch : text) {
    if (ch != ' ' && ch != '\t' && ch != '\n' && ch != '\r') compact.push_back(ch);
  }
  if (compact.empty()) throw SignatureError("signature text is empty");

  std::vector<std::int64_t> coeffs;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = compact.find(',', pos);
    std::string_view field(compact.data() + pos,
                           (comma == std::string::npos ? compact.size() : comma) - pos);
    if (field.empty()) throw SignatureError("signature has an empty field");
    if (field.front() == '-') {
      throw SignatureError("coefficient c_" + std::to_string(coeffs.size() + 1) +
                           " is negative");
    }
    std::int64_t value = 0;
    auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || end != field.data() + field.size()) {
      throw SignatureError("signature field '" + std::string(field) + "' is not an integer");
    }
    coeffs.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return Signature(std::move(coeffs));
}

bool is_weakly_decreasing(const Signature& sig) {
  const auto& c = sig.coeffs();
  return std::is_sorted(c.rbegin(), c.rend());
}

bool is_all_ones(const Signature& sig) {
  const auto& c = sig.coeffs();
  return std::all_of(c.begin(), c.end(), [](std::int64_t v) { return v == 1; });
}

std::vector<Block> allowable_blocks(const Signature& sig) {
  std::vector<Block> blocks;
  for (std::size_t k = 1; k <= sig.depth(); ++k) {
    for (std::int64_t last = 0; last < sig.c(k); ++last) {
      Block b(sig.coeffs().begin(), sig.coeffs().begin() + static_cast<std::ptrdiff_t>(k - 1));
      b.push_back(last);
      blocks.push_back(std::move(b));
    }
  }
  return blocks;
}

bool is_allowable_block(const Signature& sig, const Block& block) {
  if (block.empty() || block.size() > sig.depth()) return false;
  for (std::size_t i = 0; i + 1 < block.size(); ++i) {
    if (block[i] != sig.coeffs()[i]) return false;
  }
  return block.back() >= 0 && block.back() < sig.c(block.size());
}

IncreaseProfile increase_profile(const Signature& sig) {
  IncreaseProfile prof;
  for (std::size_t p = 1; p < sig.depth(); ++p) {
    if (sig.c(p) < sig.c(p + 1)) {
      prof.p = p;
      break;
    }
  }
  if (prof.p == 0) {
    throw SignatureError("signature " + sig.to_string() + " is weakly decreasing");
  }
  for (std::size_t k = prof.p - 1; k >= 1; --k) {
    if (sig.c(k) > sig.c(prof.p)) {
      prof.k = k;
      break;
    }
  }
  prof.ell = prof.p - prof.k;
  return prof;
}

std::vector<Signature> enumerate_signatures(std::size_t max_depth, std::int64_t max_coeff) {
  std::vector<Signature> out;
  for (std::size_t t = 1; t <= max_depth; ++t) {
    std::vector<std::int64_t> c(t, 0);
    // Odometer over all entries in 0..max_coeff, last position fastest.
    bool done = false;
    while (!done) {
      if (c.front() >= 1 && c.back() >= 1) out.emplace_back(c);
      std::size_t pos = t;
      while (true) {
        if (pos == 0) {
          done = true;
          break;
        }
        --pos;
        if (c[pos] < max_coeff) {
          ++c[pos];
          break;
        }
        c[pos] = 0;
      }
    }
  }
  return out;
}

}  // namespace zeck
