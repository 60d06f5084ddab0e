#include "zeck/representation.hpp"

#include <algorithm>
#include <sstream>

namespace zeck {

const BigInt& Place::value() const {
  if (!value_) throw std::logic_error("infinity place has no finite value");
  return *value_;
}

int Place::compare(std::int64_t c) const {
  if (!value_) return 1;
  if (*value_ < c) return -1;
  return *value_ == c ? 0 : 1;
}

// ---------------------------------------------------------------------------

Representation::Representation(SequencePtr seq, const std::vector<BigInt>& msd_first)
    : seq_(std::move(seq)), lsd_(msd_first.rbegin(), msd_first.rend()) {
  if (!seq_) throw RepresentationError("representation needs a sequence");
  if (lsd_.empty()) throw RepresentationError("representation has no digits");
  for (const auto& d : lsd_) {
    if (d < 0) throw RepresentationError("representation entries must be non-negative");
  }
  normalize();
}

Representation::Representation(SequencePtr seq, std::vector<BigInt> lsd, int)
    : seq_(std::move(seq)), lsd_(std::move(lsd)) {
  normalize();
}

Representation Representation::from_lsd(SequencePtr seq, std::vector<BigInt> lsd_first) {
  if (lsd_first.empty()) lsd_first.emplace_back(0);
  for (const auto& d : lsd_first) {
    if (d < 0) throw RepresentationError("representation entries must be non-negative");
  }
  return Representation(std::move(seq), std::move(lsd_first), 0);
}

Representation Representation::monomial(SequencePtr seq, const BigInt& coeff, Index index) {
  if (index < 0) throw RepresentationError("monomial index must be non-negative");
  std::vector<BigInt> lsd(static_cast<std::size_t>(index) + 1);
  lsd.back() = coeff;
  return from_lsd(std::move(seq), std::move(lsd));
}

void Representation::normalize() {
  while (lsd_.size() > 1 && lsd_.back() == 0) lsd_.pop_back();
  if (lsd_.empty()) lsd_.emplace_back(0);
}

BigInt Representation::digit(Index i) const {
  if (i < 0) throw std::out_of_range("digit index must be non-negative");
  return i < static_cast<Index>(lsd_.size()) ? lsd_[static_cast<std::size_t>(i)] : BigInt(0);
}

Place Representation::at(Index i) const {
  if (i >= 0) return Place(digit(i));
  if (i < seq_->first_index()) {
    throw std::out_of_range("index " + std::to_string(i) + " lies below the infinity places");
  }
  return Place::infinity();
}

std::vector<BigInt> Representation::msd_first() const { return {lsd_.rbegin(), lsd_.rend()}; }

BigInt Representation::value() const {
  std::vector<BigInt> h = seq_->terms(top_index());
  BigInt total = 0;
  for (std::size_t i = 0; i < lsd_.size(); ++i) {
    if (lsd_[i] != 0) total += lsd_[i] * h[i];
  }
  return total;
}

BigInt Representation::summand_count() const {
  BigInt total = 0;
  for (const auto& d : lsd_) total += d;
  return total;
}

namespace {

std::string render(const std::vector<BigInt>& lsd) {
  std::ostringstream out;
  out << '[';
  for (std::size_t k = lsd.size(); k-- > 0;) {
    out << lsd[k];
    if (k) out << ',';
  }
  out << ']';
  return out.str();
}

}  // namespace

std::string Representation::to_string() const { return render(lsd_); }

std::vector<BigInt> parse_digits(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (ch != ' ' && ch != '\t' && ch != '\n') s.push_back(ch);
  }
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') throw RepresentationError("unbalanced brackets in '" + s + "'");
    s = s.substr(1, s.size() - 2);
  }
  if (s.empty()) throw RepresentationError("representation literal has no digits");
  std::vector<BigInt> digits;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = s.find(',', pos);
    std::string field = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      digits.push_back(parse_bigint(field));
    } catch (const std::invalid_argument&) {
      throw RepresentationError("representation entry '" + field + "' is not an integer");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return digits;
}

Representation parse_representation(SequencePtr seq, std::string_view text) {
  return Representation(std::move(seq), parse_digits(text));
}

// ---------------------------------------------------------------------------

std::int64_t borrow_delta(const Signature& sig, Index i) {
  if (i < 1) throw RepresentationError("borrow/carry index must be at least 1");
  return -1 + sig.prefix_sum(static_cast<std::size_t>(i));
}

Representation borrow(const Representation& r, Index i) {
  if (i < 1) {
    throw RepresentationError(
        "cannot borrow from index " + std::to_string(i) +
        ": H_0 differs from c_1 H_-1 + ... under the ideal initial conditions");
  }
  if (r.digit(i) < 1) {
    throw RepresentationError("cannot borrow from index " + std::to_string(i) +
                              ": the entry there is 0");
  }
  const Signature& sig = r.signature();
  std::vector<BigInt> lsd = r.lsd();
  lsd[static_cast<std::size_t>(i)] -= 1;
  for (std::size_t j = 1; j <= sig.depth() && static_cast<Index>(j) <= i; ++j) {
    lsd[static_cast<std::size_t>(i) - j] += sig.c(j);
  }
  return Representation::from_lsd(r.sequence(), std::move(lsd));
}

namespace {

/// First offset 1..t at which a carry to j is blocked, or 0 when none is.
std::size_t carry_obstruction(const Representation& r, Index j) {
  const Signature& sig = r.signature();
  for (std::size_t i = 1; i <= sig.depth(); ++i) {
    if (r.at(j - static_cast<Index>(i)).compare(sig.c(i)) < 0) return i;
  }
  return 0;
}

}  // namespace

bool able_to_carry(const Representation& r, Index j) {
  if (j < 1) return false;
  return carry_obstruction(r, j) == 0;
}

Representation carry(const Representation& r, Index j) {
  if (j < 1) {
    throw RepresentationError("cannot carry to index " + std::to_string(j) +
                              ": carries need an index of at least 1");
  }
  if (std::size_t off = carry_obstruction(r, j); off != 0) {
    throw RepresentationError("cannot carry to index " + std::to_string(j) + ": offset " +
                              std::to_string(off) + " (index " +
                              std::to_string(j - static_cast<Index>(off)) + ") is below c_" +
                              std::to_string(off));
  }
  const Signature& sig = r.signature();
  std::vector<BigInt> lsd = r.lsd();
  if (static_cast<Index>(lsd.size()) <= j) lsd.resize(static_cast<std::size_t>(j) + 1);
  lsd[static_cast<std::size_t>(j)] += 1;
  for (std::size_t i = 1; i <= sig.depth() && static_cast<Index>(i) <= j; ++i) {
    lsd[static_cast<std::size_t>(j) - i] -= sig.c(i);
  }
  return Representation::from_lsd(r.sequence(), std::move(lsd));
}

// ---------------------------------------------------------------------------

namespace {

struct BlockScan {
  std::vector<Block> blocks;
  /// Top index of the block that failed to close, if any.
  std::optional<Index> failed_at;
};

BlockScan scan_blocks(const Representation& r) {
  const Signature& sig = r.signature();
  const std::size_t t = sig.depth();
  BlockScan scan;
  Index start = r.top_index();
  while (start >= 0) {
    Block block;
    Index pos = start;
    std::size_t p = 1;
    bool closed = false;
    while (pos >= 0) {
      const BigInt d = r.digit(pos);
      if (d < sig.c(p)) {
        block.push_back(static_cast<std::int64_t>(d));
        closed = true;
        break;
      }
      if (d == sig.c(p) && p < t) {
        block.push_back(sig.c(p));
        ++p;
        --pos;
        continue;
      }
      break;  // excess, or a full match of c_1..c_t
    }
    if (!closed) {
      scan.failed_at = start;
      return scan;
    }
    scan.blocks.push_back(std::move(block));
    start = pos - 1;
  }
  return scan;
}

}  // namespace

BlockDecomposition block_decomposition(const Representation& r) {
  BlockScan scan = scan_blocks(r);
  BlockDecomposition out;
  out.blocks = std::move(scan.blocks);
  if (scan.failed_at) {
    out.mli = *scan.failed_at + 1;
    for (Index i = *scan.failed_at; i >= 0; --i) out.suffix.push_back(r.digit(i));
  }
  return out;
}

LegalityReport legality(const Representation& r) {
  LegalityReport rep;
  BlockScan scan = scan_blocks(r);
  if (!scan.failed_at) return rep;

  const Signature& sig = r.signature();
  const std::size_t t = sig.depth();
  const Index s = *scan.failed_at + 1;
  rep.mli = s;

  std::size_t j = 0;
  for (std::size_t i = 1; i <= t; ++i) {
    const int cmp = r.at(s - static_cast<Index>(i)).compare(sig.c(i));
    if (cmp > 0) {
      j = i;
      break;
    }
    if (cmp < 0) {
      throw std::logic_error("legality scan of " + r.to_string() +
                             " found a closable block at the m.l.i.");
    }
  }
  if (j == 0) {
    j = t;
    rep.violation_by_equality = true;
  }
  rep.violation_index = s - static_cast<Index>(j);
  rep.sli = *rep.violation_index + 1;
  rep.violation_prefix.assign(sig.coeffs().begin(),
                              sig.coeffs().begin() + static_cast<std::ptrdiff_t>(j - 1));

  if (std::size_t ell = carry_obstruction(r, s); ell != 0) {
    rep.coi = s - static_cast<Index>(ell);
    for (std::size_t e = ell - 1; e >= 1; --e) {
      if (r.at(s - static_cast<Index>(e)).compare(sig.c(e)) > 0) {
        rep.rei = s - static_cast<Index>(e);
        break;
      }
    }
    if (!rep.rei) {
      throw std::logic_error("no rightmost excess index left of the c.o.i. in " + r.to_string());
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------

SignedRepresentation::SignedRepresentation(SequencePtr seq, const std::vector<BigInt>& msd_first)
    : seq_(std::move(seq)), lsd_(msd_first.rbegin(), msd_first.rend()) {
  if (!seq_) throw RepresentationError("representation needs a sequence");
  if (lsd_.empty()) throw RepresentationError("representation has no digits");
  normalize();
}

SignedRepresentation::SignedRepresentation(const Representation& r)
    : seq_(r.sequence()), lsd_(r.lsd()) {}

SignedRepresentation::SignedRepresentation(SequencePtr seq, std::vector<BigInt> lsd, int)
    : seq_(std::move(seq)), lsd_(std::move(lsd)) {
  normalize();
}

void SignedRepresentation::normalize() {
  while (lsd_.size() > 1 && lsd_.back() == 0) lsd_.pop_back();
  if (lsd_.empty()) lsd_.emplace_back(0);
}

BigInt SignedRepresentation::digit(Index i) const {
  if (i < 0) throw std::out_of_range("digit index must be non-negative");
  return i < static_cast<Index>(lsd_.size()) ? lsd_[static_cast<std::size_t>(i)] : BigInt(0);
}

BigInt SignedRepresentation::value() const {
  std::vector<BigInt> h = seq_->terms(top_index());
  BigInt total = 0;
  for (std::size_t i = 0; i < lsd_.size(); ++i) total += lsd_[i] * h[i];
  return total;
}

BigInt SignedRepresentation::summand_count() const {
  BigInt total = 0;
  for (const auto& d : lsd_) total += d;
  return total;
}

bool SignedRepresentation::has_negative() const {
  return std::any_of(lsd_.begin(), lsd_.end(), [](const BigInt& d) { return d < 0; });
}

std::string SignedRepresentation::to_string() const { return render(lsd_); }

SignedRepresentation SignedRepresentation::borrow(Index i) const {
  if (i < 1) throw RepresentationError("borrow index must be at least 1");
  std::vector<BigInt> lsd = lsd_;
  if (static_cast<Index>(lsd.size()) <= i) lsd.resize(static_cast<std::size_t>(i) + 1);
  lsd[static_cast<std::size_t>(i)] -= 1;
  const Signature& sig = signature();
  for (std::size_t j = 1; j <= sig.depth() && static_cast<Index>(j) <= i; ++j) {
    lsd[static_cast<std::size_t>(i) - j] += sig.c(j);
  }
  return SignedRepresentation(seq_, std::move(lsd), 0);
}

SignedRepresentation SignedRepresentation::carry(Index i) const {
  if (i < 1) throw RepresentationError("carry index must be at least 1");
  std::vector<BigInt> lsd = lsd_;
  if (static_cast<Index>(lsd.size()) <= i) lsd.resize(static_cast<std::size_t>(i) + 1);
  lsd[static_cast<std::size_t>(i)] += 1;
  const Signature& sig = signature();
  for (std::size_t j = 1; j <= sig.depth() && static_cast<Index>(j) <= i; ++j) {
    lsd[static_cast<std::size_t>(i) - j] -= sig.c(j);
  }
  return SignedRepresentation(seq_, std::move(lsd), 0);
}

Representation SignedRepresentation::to_representation() const {
  if (has_negative()) {
    throw RepresentationError("representation " + to_string() + " has a negative entry");
  }
  return Representation::from_lsd(seq_, lsd_);
}

}  // namespace zeck
