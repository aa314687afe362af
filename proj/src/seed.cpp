#include "quivermut/seed.hpp"

#include "quivermut/errors.hpp"

namespace quivermut {

Seed::Seed(ExchangeMatrix b) : Seed(b, make_ring(b.n(), b.m())) {}

Seed::Seed(ExchangeMatrix b, RingPtr ring) : b_(std::move(b)), ring_(std::move(ring)) {
  if (ring_->nx() < b_.n() || ring_->ny() < b_.m()) throw InvalidInput("ring too small for the exchange matrix");
  reset_cluster();
}

void Seed::reset_cluster() {
  cluster_.clear();
  frozen_.clear();
  for (std::size_t i = 0; i < n(); ++i) cluster_.push_back(x(i));
  for (std::size_t i = 0; i < m(); ++i) frozen_.push_back(y(i));
}

RationalFunction Seed::x(std::size_t k) const {
  if (k >= ring_->nx()) throw IndexOutOfRange("no initial variable x" + std::to_string(k));
  return RationalFunction::variable(ring_->size(), k);
}

RationalFunction Seed::y(std::size_t k) const {
  if (k >= ring_->ny()) throw IndexOutOfRange("no frozen variable y" + std::to_string(k));
  return RationalFunction::variable(ring_->size(), ring_->nx() + k);
}

std::vector<ClusterVariable> Seed::exchangeable_variables() const {
  std::vector<ClusterVariable> out;
  for (const auto& v : cluster_) out.emplace_back(v, ring_);
  return out;
}

std::vector<ClusterVariable> Seed::frozen_variables() const {
  std::vector<ClusterVariable> out;
  for (const auto& v : frozen_) out.emplace_back(v, ring_);
  return out;
}

std::vector<std::string> Seed::cluster_strings() const {
  std::vector<std::string> out;
  for (const auto& v : cluster_) out.push_back(render(v));
  return out;
}

void Seed::check_index(std::size_t k) const {
  if (k >= b_.rows()) throw IndexOutOfRange("mutation index " + std::to_string(k) + " out of range");
  if (k >= n()) throw FrozenIndex("cannot mutate at frozen vertex " + std::to_string(k));
}

void Seed::mutate_in_place(std::size_t k) {
  check_index(k);
  auto v = exchange(cluster_, frozen_, b_, k);
  b_.mutate_in_place(k);
  cluster_[k] = std::move(v);
}

void Seed::mutate_in_place(const std::vector<std::size_t>& ks) {
  for (auto k : ks) check_index(k);
  for (auto k : ks) mutate_in_place(k);
}

Seed Seed::mutate(std::size_t k) const {
  Seed s(*this);
  s.mutate_in_place(k);
  return s;
}

Seed Seed::mutate(const std::vector<std::size_t>& ks) const {
  Seed s(*this);
  s.mutate_in_place(ks);
  return s;
}

std::vector<Seed> Seed::mutation_seeds(const std::vector<std::size_t>& ks) const {
  for (auto k : ks) check_index(k);
  std::vector<Seed> out;
  Seed s(*this);
  for (auto k : ks) {
    s = s.mutate(k);
    out.push_back(s);
  }
  return out;
}

std::vector<ExchangeMatrix> Seed::mutation_matrices(const std::vector<std::size_t>& ks) const {
  for (auto k : ks) check_index(k);
  std::vector<ExchangeMatrix> out{b_};
  for (auto k : ks) out.push_back(out.back().mutate(k));
  return out;
}

std::vector<RationalFunction> Seed::mutation_variables(const std::vector<std::size_t>& ks) const {
  for (auto k : ks) check_index(k);
  std::vector<RationalFunction> out;
  Seed s(*this);
  for (auto k : ks) {
    s.mutate_in_place(k);
    out.push_back(s.cluster_[k]);
  }
  return out;
}

void Seed::set_cluster(const std::vector<RationalFunction>& values) {
  if (values.size() != n())
    throw InvalidInput("cluster needs " + std::to_string(n()) + " values, got " + std::to_string(values.size()));
  for (const auto& v : values)
    if (v.nvars() != ring_->size()) throw InvalidInput("value does not belong to the seed's ring");
  cluster_ = values;
}

void Seed::set_cluster(const std::vector<std::string>& values) {
  std::vector<RationalFunction> parsed;
  for (const auto& s : values) parsed.push_back(parse_rational_function(s, *ring_));
  set_cluster(parsed);
}

Seed Seed::principal_extension() const {
  if (m() > 0) throw InvalidInput("principal extension needs a seed without frozen variables");
  // y names are appended after the x names, so existing values only need widening
  if (ring_->ny() != 0 && ring_->ny() != n()) throw InvalidInput("ring already has an incompatible set of frozen names");
  RingPtr ring = ring_->ny() == n() ? ring_ : make_ring(ring_->nx(), n());
  Seed s(b_.principal_extension(), ring);
  if (ring == ring_) {
    s.cluster_ = cluster_;
  } else {
    for (std::size_t i = 0; i < n(); ++i) s.cluster_[i] = cluster_[i].extended(ring->size());
  }
  return s;
}

Seed Seed::principal_restriction() const {
  bool uses_y = false;
  for (const auto& v : cluster_)
    for (std::size_t i = ring_->nx(); i < ring_->size(); ++i)
      uses_y = uses_y || v.numerator().involves(i) || v.denominator().involves(i);
  if (uses_y) {
    Seed s(b_.principal_restriction(), ring_);
    s.cluster_ = cluster_;
    return s;
  }
  auto ring = make_ring(ring_->nx(), 0);
  Seed s(b_.principal_restriction(), ring);
  for (std::size_t i = 0; i < n(); ++i) s.cluster_[i] = cluster_[i].extended(ring->size());
  return s;
}

std::string Seed::description() const {
  std::string out = "A seed for a cluster algebra of rank " + std::to_string(n());
  if (m() > 0) out += " with " + std::to_string(m()) + " frozen variable" + (m() == 1 ? "" : "s");
  if (type_) out += " of type " + *type_;
  return out;
}

}  // namespace quivermut
