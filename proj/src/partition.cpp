#include "qsig/partition.hpp"

#include <cctype>
#include <charconv>

#include "qsig/errors.hpp"

namespace qsig {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw InvalidInput("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw InvalidInput("partition parts must be nonincreasing");
    size_ += parts_[i];
  }
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tok = text.substr(pos, end - pos);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.remove_prefix(1);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.remove_suffix(1);
    int v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || p != tok.data() + tok.size())
      throw InvalidInput("cannot parse partition '" + std::string(text) + "'");
    parts.push_back(v);
    pos = end + 1;
  }
  return Partition(std::move(parts));
}

Partition Partition::column(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

Partition Partition::row(int n) { return Partition(n > 0 ? std::vector<int>{n} : std::vector<int>{}); }

Partition Partition::conjugate() const {
  std::vector<int> out(parts_.empty() ? 0 : static_cast<std::size_t>(parts_[0]), 0);
  for (int p : parts_)
    for (int c = 0; c < p; ++c) ++out[static_cast<std::size_t>(c)];
  return Partition(std::move(out));
}

std::string Partition::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

BigInt syt_count_hook(const Partition& shape) {
  Partition conj = shape.conjugate();
  BigInt num = 1, den = 1;
  for (int k = 2; k <= shape.size(); ++k) num *= k;
  for (int r = 0; r < shape.rows(); ++r)
    for (int c = 0; c < shape[r]; ++c) den *= (shape[r] - c - 1) + (conj[c] - r - 1) + 1;
  BigInt q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

}  // namespace qsig
