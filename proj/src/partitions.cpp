#include "hallmod/partitions.hpp"

#include <algorithm>
#include <sstream>

#include "hallmod/error.hpp"

namespace hallmod {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotDoubled: return "NotDoubled";
    case ErrorCode::PoleAtPoint: return "PoleAtPoint";
    case ErrorCode::ZeroBase: return "ZeroBase";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::LengthExceedsVars: return "LengthExceedsVars";
    case ErrorCode::DivergentProduct: return "DivergentProduct";
    case ErrorCode::EvenPrimeUnsupported: return "EvenPrimeUnsupported";
    case ErrorCode::SizeBound: return "SizeBound";
    case ErrorCode::NotASubmodule: return "NotASubmodule";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::FormMismatch: return "FormMismatch";
    case ErrorCode::InsufficientMass: return "InsufficientMass";
    case ErrorCode::DivergentMeasure: return "DivergentMeasure";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1]))
      throw Error(ErrorCode::InvalidArgument, "not a partition");
  }
}

int Partition::weight() const {
  int w = 0;
  for (int p : parts_) w += p;
  return w;
}

int Partition::nlambda() const {
  int n = 0;
  for (int i = 0; i < length(); ++i) n += i * parts_[i];
  return n;
}

int Partition::multiplicity(int k) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

std::map<int, int> Partition::multiplicities() const {
  std::map<int, int> m;
  for (int p : parts_) ++m[p];
  return m;
}

bool Partition::contains(const Partition& mu) const {
  if (mu.length() > length()) return false;
  for (int i = 0; i < mu.length(); ++i)
    if (mu.parts_[i] > parts_[i]) return false;
  return true;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < length(); ++i) os << (i ? "," : "") << parts_[i];
  os << ')';
  return os.str();
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> c(lambda.largest(), 0);
  for (int p : lambda.parts())
    for (int k = 0; k < p; ++k) ++c[k];
  return Partition(std::move(c));
}

WeightNMult weight_n_mult(const Partition& lambda) {
  return {lambda.weight(), lambda.nlambda(), lambda.multiplicities()};
}

int conj_dot(const Partition& lambda, const Partition& nu) {
  Partition lc = conjugate(lambda), nc = conjugate(nu);
  int s = 0;
  for (int i = 0; i < std::min(lc.length(), nc.length()); ++i) s += lc[i] * nc[i];
  return s;
}

Partition double_interleave(const Partition& lambda) {
  std::vector<int> out;
  for (int p : lambda.parts()) {
    out.push_back(p);
    out.push_back(p);
  }
  return Partition(std::move(out));
}

Partition halve_doubled(const Partition& mu) {
  std::vector<int> out;
  const auto& p = mu.parts();
  for (std::size_t i = 0; i < p.size(); i += 2) {
    if (i + 1 >= p.size() || p[i] != p[i + 1])
      throw Error(ErrorCode::NotDoubled, mu.to_string() + " has an odd multiplicity");
    out.push_back(p[i]);
  }
  return Partition(std::move(out));
}

int nskew(const Partition& lambda, const Partition& mu) {
  Partition lc = conjugate(lambda), mc = conjugate(mu);
  int n = 0;
  for (int i = 0; i < lc.length(); ++i) {
    int d = lc[i] - mc[i];
    n += d * (d - 1) / 2;
  }
  return n;
}

Partition parse_partition(const std::string& text) {
  std::vector<int> parts;
  std::string s;
  for (char ch : text)
    if (ch != ' ' && ch != '(' && ch != ')' && ch != '[' && ch != ']') s += ch;
  if (s.empty()) return Partition();
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw Error(ErrorCode::ParseError, "bad partition '" + text + "'");
    parts.push_back(std::stoi(item));
  }
  std::vector<int> sorted = parts;
  std::sort(sorted.rbegin(), sorted.rend());
  if (sorted != parts) throw Error(ErrorCode::ParseError, "parts of '" + text + "' are not weakly decreasing");
  return Partition(std::move(parts));
}

namespace {

void descend(int remaining, int max_part, int max_length, std::vector<int>& cur,
             std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (max_length == 0) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    descend(remaining - p, p, max_length - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int weight, int max_length) {
  std::vector<Partition> out;
  std::vector<int> cur;
  descend(weight, weight, max_length < 0 ? weight : max_length, cur, out);
  return out;
}

std::vector<Partition> iterate(const PartitionBounds& b) {
  int wmax = b.max_weight;
  if (wmax < 0) {
    if (b.max_part < 0 || b.max_length < 0)
      throw Error(ErrorCode::InvalidArgument, "partition bounds are not finite");
    wmax = b.max_part * b.max_length;
  }
  std::vector<Partition> out;
  for (int w = 0; w <= wmax; ++w) {
    std::vector<int> cur;
    int mp = b.max_part < 0 ? w : std::min(w, b.max_part);
    int ml = b.max_length < 0 ? w : b.max_length;
    descend(w, mp, ml, cur, out);
  }
  return out;
}

std::vector<Partition> remove_horizontal_strip(const Partition& lambda, int r) {
  // μ_i ranges over [λ_{i+1}, λ_i] with Σ(λ_i - μ_i) = r.
  std::vector<Partition> out;
  int n = lambda.length();
  std::vector<int> mu(n);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == n) {
      if (left == 0) out.emplace_back(mu);
      return;
    }
    int lo = lambda[i + 1], hi = lambda[i];
    for (int m = hi; m >= lo; --m) {
      int take = hi - m;
      if (take > left) break;
      mu[i] = m;
      self(self, i + 1, left - take);
    }
  };
  rec(rec, 0, r);
  return out;
}

}  // namespace hallmod
