#include "caystir/stirling.hpp"

#include <nlohmann/json.hpp>
#include <stdexcept>
#include <utility>

namespace caystir {

const BigInt StirlingFunction::zero_ = 0;

StirlingFunction::StirlingFunction(int threshold, int m_floor,
                                   std::map<int, BigInt> seed, BigInt tail)
    : threshold_(threshold),
      m_floor_(m_floor),
      seed_(std::move(seed)),
      seed_tail_(std::move(tail)) {
  if (threshold_ < 0) throw std::invalid_argument("threshold must be >= 0");
  if (m_floor_ > threshold_ + 1)
    throw std::invalid_argument("seed floor above threshold row");
  for (const auto& [m, v] : seed_)
    if (m > threshold_)
      throw std::invalid_argument("seed key exceeds threshold");
}

StirlingFunction StirlingFunction::classical() {
  return StirlingFunction(1, 1, {{1, 1}}, 0);
}

StirlingFunction StirlingFunction::transposition_ball() {
  return StirlingFunction(2, 2, {{2, 1}}, 2);
}

const StirlingFunction::Row& StirlingFunction::row(int n) {
  while (threshold_ + static_cast<int>(rows_.size()) < n) {
    const int rn = threshold_ + static_cast<int>(rows_.size()) + 1;
    const auto parent = [&](int m) -> const BigInt& {
      // value of row rn-1 at m, without materializing anything new
      if (m > rn - 1) return zero_;
      if (rn - 1 == threshold_) {
        if (m < m_floor_) return seed_tail_;
        const auto it = seed_.find(m);
        return it == seed_.end() ? zero_ : it->second;
      }
      const Row& pr = rows_[static_cast<size_t>(rn - 2 - threshold_)];
      if (m < pr.low) return pr.tail;
      return pr.v[static_cast<size_t>(m - pr.low)];
    };
    Row r;
    r.low = m_floor_ - (rn - threshold_);
    r.v.reserve(static_cast<size_t>(rn - r.low + 1));
    for (int m = r.low; m <= rn; ++m)
      r.v.push_back(parent(m - 1) + BigInt(rn - 1) * parent(m));
    // The zone below the window must already be constant: its value is the
    // recurrence image of two parent-tail cells. Cross-check against the
    // lowest materialized cell before declaring it this row's tail.
    r.tail = parent(r.low - 2) + BigInt(rn - 1) * parent(r.low - 1);
    if (r.tail != r.v.front())
      throw std::logic_error(
          "stirling row did not become constant at its declared floor");
    rows_.push_back(std::move(r));
  }
  return rows_[static_cast<size_t>(n - 1 - threshold_)];
}

BigInt StirlingFunction::eval(int n, int m) {
  if (n < threshold_)
    throw std::domain_error("eval below the seed threshold row");
  if (m > n) return zero_;
  if (n == threshold_) {
    if (m < m_floor_) return seed_tail_;
    const auto it = seed_.find(m);
    return it == seed_.end() ? zero_ : it->second;
  }
  const Row& r = row(n);
  if (m < r.low) return r.tail;
  return r.v[static_cast<size_t>(m - r.low)];
}

BigInt StirlingFunction::eval_r(int n, int r) {
  if (r < 0) return zero_;
  return eval(n, n - r);
}

void StirlingFunction::warm_up(int n) {
  if (n > threshold_) row(n);
}

std::string StirlingFunction::to_json() const {
  nlohmann::json j;
  j["threshold"] = threshold_;
  j["m_floor"] = m_floor_;
  j["tail"] = seed_tail_.str();
  nlohmann::json seed = nlohmann::json::object();
  for (const auto& [m, v] : seed_) seed[std::to_string(m)] = v.str();
  j["seed"] = std::move(seed);
  return j.dump(2);
}

StirlingFunction StirlingFunction::from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  std::map<int, BigInt> seed;
  for (const auto& [key, val] : j.at("seed").items())
    seed[std::stoi(key)] = BigInt(val.get<std::string>());
  return StirlingFunction(j.at("threshold").get<int>(),
                          j.at("m_floor").get<int>(), std::move(seed),
                          BigInt(j.at("tail").get<std::string>()));
}

}  // namespace caystir
