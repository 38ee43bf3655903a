#include "planar_gw/gw_table.hpp"

#include <json.hpp>

#include <array>
#include <fstream>
#include <mutex>
#include <sstream>

namespace planar_gw::gw {

std::string to_string(const GWKey& key) {
  return std::to_string(key.d) + "," + std::to_string(key.r) + "," + std::to_string(key.s) + "," +
         std::to_string(key.theta);
}

void validate(const GWKey& key) {
  if (key.d < 1) throw std::invalid_argument("degree d must be >= 1, got " + std::to_string(key.d));
  if (key.r < 0 || key.s < 0 || key.theta < 0) {
    throw std::invalid_argument("r, s, theta must be nonnegative: (" + to_string(key) + ")");
  }
}

int expected_codim(int d, int n) {
  if (d < 1) throw std::invalid_argument("expected_codim: d must be >= 1");
  if (n < 0) throw std::invalid_argument("expected_codim: n must be >= 0");
  // c_1(T_P2).beta + (dim P2 - 3)(1 - g) + n + dim G(3,4) with g = 0.
  constexpr int kFiberDim = 2;
  constexpr int kBaseDim = 3;
  return 3 * d + (kFiberDim - 3) + n + kBaseDim;
}

BigInt binomial(int n, int k) {
  if (n < 0) throw std::invalid_argument("binomial: negative n");
  if (k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

// ---------------------------------------------------------------------------
// MemoTable

MemoTable::MemoTable(const MemoTable& other) {
  std::shared_lock lock(other.mutex_);
  values_ = other.values_;
  computed_ = other.computed_;
}

MemoTable& MemoTable::operator=(const MemoTable& other) {
  if (this == &other) return *this;
  std::scoped_lock lock(mutex_);
  std::shared_lock other_lock(other.mutex_);
  values_ = other.values_;
  computed_ = other.computed_;
  return *this;
}

std::optional<Rational> MemoTable::find(const GWKey& key) const {
  std::shared_lock lock(mutex_);
  if (auto it = values_.find(key); it != values_.end()) return it->second;
  return std::nullopt;
}

void MemoTable::store(const GWKey& key, const Rational& value) {
  std::scoped_lock lock(mutex_);
  auto [it, inserted] = values_.try_emplace(key, value);
  if (!inserted && it->second != value) {
    throw IntegrityError("conflicting values for N(" + to_string(key) + "): " + planar_gw::to_string(it->second) +
                         " vs " + planar_gw::to_string(value));
  }
}

std::size_t MemoTable::size() const {
  std::shared_lock lock(mutex_);
  return values_.size();
}

std::vector<std::pair<GWKey, Rational>> MemoTable::entries() const {
  std::shared_lock lock(mutex_);
  return {values_.begin(), values_.end()};
}

std::size_t MemoTable::computed_count() const {
  std::shared_lock lock(mutex_);
  return computed_;
}

void MemoTable::note_computed() {
  std::scoped_lock lock(mutex_);
  ++computed_;
}

// ---------------------------------------------------------------------------
// Recursion

namespace {

constexpr std::array<GWKey, 5> kInitialOnes{{
    {1, 0, 2, 1},
    {1, 2, 1, 1},
    {1, 1, 1, 2},
    {1, 2, 0, 3},
    {2, 2, 3, 0},
}};

bool trivially_zero(const GWKey& key) { return !key.balanced() || key.s > 3 || key.theta > 3; }

Rational initial_value(const GWKey& key) {
  for (const auto& one : kInitialOnes) {
    if (one == key) return 1;
  }
  return 0;
}

// Right-hand side of the recursion at a key with r >= 3.
Rational recursion_step(const GWKey& key, MemoTable& memo) {
  const auto [d, r, s, theta] = key;
  const BigInt dd = d;
  Rational total = Rational(2 * dd) * n_planar({d, r - 1, s, theta + 1}, memo) -
                   Rational(2 * dd * dd) * n_planar({d, r - 2, s, theta + 2}, memo);

  for (int d1 = 1; d1 < d; ++d1) {
    const int d2 = d - d1;
    const BigInt b1 = d1;
    const BigInt b2 = d2;
    for (int r1 = 0; r1 <= r - 1; ++r1) {
      const int r2 = r - 1 - r1;
      const BigInt weight = b1 * b1 * b2 * b2 * binomial(r - 3, r1 - 1) - b1 * b1 * b1 * b2 * binomial(r - 3, r1);
      if (weight == 0) continue;
      for (int s1 = 0; s1 <= s; ++s1) {
        const int s2 = s - s1;
        const BigInt w = weight * binomial(s, s1);
        for (int theta1 = 0; theta1 <= theta + 3; ++theta1) {
          const int theta2 = theta + 3 - theta1;
          const Rational left = n_planar({d1, r1, s1, theta1}, memo);
          if (left == 0) continue;
          const Rational right = n_planar({d2, r2, s2, theta2}, memo);
          if (right == 0) continue;
          total += Rational(w) * left * right;
        }
      }
    }
  }
  return total;
}

Rational rule_value(const GWKey& key, MemoTable& memo) {
  if (trivially_zero(key)) return 0;
  return key.r <= 2 ? initial_value(key) : recursion_step(key, memo);
}

}  // namespace

Rational n_planar(const GWKey& key, MemoTable& memo) {
  validate(key);
  if (trivially_zero(key)) return 0;
  if (auto hit = memo.find(key)) return *hit;
  Rational value = rule_value(key, memo);
  memo.store(key, value);
  memo.note_computed();
  return value;
}

Rational reduce_point_insertion(const GWKey& key, MemoTable& memo) {
  validate(key);
  if (key.s < 1) throw std::invalid_argument("reduce_point_insertion: needs s >= 1, got (" + to_string(key) + ")");
  const auto [d, r, s, theta] = key;
  return n_planar({d, r + 1, s - 1, theta + 1}, memo) - Rational(d) * n_planar({d, r, s - 1, theta + 2}, memo);
}

Rational gw_invariant(int d, int theta_total, std::span<const int> insertions, MemoTable& memo) {
  if (d < 1) throw std::invalid_argument("gw_invariant: d must be >= 1");
  if (theta_total < 0) throw std::invalid_argument("gw_invariant: theta_total must be >= 0");
  int k = 0;
  int r = 0;
  int s = 0;
  bool has_base_only = false;
  for (const int m : insertions) {
    switch (m) {
      case 0: has_base_only = true; break;
      case 1: ++k; break;
      case 2: ++r; break;
      case 3: ++s; break;
      default: throw std::invalid_argument("gw_invariant: insertion exponent must be in 0..3, got " + std::to_string(m));
    }
  }
  // A class pulled back from the base carries no fiber information: string axiom.
  if (has_base_only) return 0;
  BigInt factor;
  mpz_pow_ui(factor.get_mpz_t(), BigInt(d).get_mpz_t(), static_cast<unsigned long>(k));
  return Rational(factor) * n_planar({d, r, s, theta_total}, memo);
}

std::vector<std::pair<GWKey, Rational>> full_table(int d_max, MemoTable& memo) {
  if (d_max < 1) throw std::invalid_argument("full_table: d_max must be >= 1");
  std::vector<std::pair<GWKey, Rational>> out;
  for (int d = 1; d <= d_max; ++d) {
    for (int s = 0; s <= 3; ++s) {
      for (int theta = 0; theta <= 3; ++theta) {
        const int r = 3 * d + 2 - 2 * s - theta;
        if (r < 0) continue;
        const GWKey key{d, r, s, theta};
        out.emplace_back(key, n_planar(key, memo));
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cache file

void save_cache(const std::filesystem::path& path, const MemoTable& memo) {
  nlohmann::json values = nlohmann::json::object();
  for (const auto& [key, value] : memo.entries()) values[to_string(key)] = planar_gw::to_string(value);
  const nlohmann::json doc = {{"schema", kCacheSchema}, {"values", values}};
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write cache file " + path.string());
  out << doc.dump() << '\n';
}

namespace {

GWKey parse_key(const std::string& text) {
  std::array<int, 4> parts{};
  std::istringstream in(text);
  for (int k = 0; k < 4; ++k) {
    std::string field;
    if (!std::getline(in, field, ',') || field.empty()) throw std::runtime_error("malformed cache key '" + text + "'");
    std::size_t used = 0;
    try {
      parts[k] = std::stoi(field, &used);
    } catch (const std::exception&) {
      throw std::runtime_error("malformed cache key '" + text + "'");
    }
    if (used != field.size()) throw std::runtime_error("malformed cache key '" + text + "'");
  }
  if (in.peek() != std::char_traits<char>::eof()) throw std::runtime_error("malformed cache key '" + text + "'");
  return {parts[0], parts[1], parts[2], parts[3]};
}

}  // namespace

std::size_t load_cache(const std::filesystem::path& path, MemoTable& memo) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read cache file " + path.string());
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("cache file " + path.string() + " is not valid JSON: " + e.what());
  }
  if (!doc.is_object() || doc.value("schema", "") != kCacheSchema || !doc.contains("values") ||
      !doc["values"].is_object()) {
    throw std::runtime_error("cache file " + path.string() + " does not follow schema " + kCacheSchema);
  }

  std::vector<std::pair<GWKey, Rational>> loaded;
  for (const auto& [text, value] : doc["values"].items()) {
    if (!value.is_string()) throw std::runtime_error("cache value for '" + text + "' is not a string");
    GWKey key = parse_key(text);
    try {
      validate(key);
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error(std::string("cache key: ") + e.what());
    }
    Rational v;
    try {
      v = parse_rational(value.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error(std::string("cache value: ") + e.what());
    }
    if (trivially_zero(key)) {
      if (v != 0) throw IntegrityError("cache entry N(" + text + ") = " + planar_gw::to_string(v) + " must vanish");
      continue;
    }
    memo.store(key, v);
    loaded.emplace_back(key, v);
  }

  for (const auto& [key, v] : loaded) {
    const Rational expected = rule_value(key, memo);
    if (expected != v) {
      throw IntegrityError("cache entry N(" + to_string(key) + ") = " + planar_gw::to_string(v) +
                           " disagrees with its defining relation (" + planar_gw::to_string(expected) + ")");
    }
  }
  return loaded.size();
}

}  // namespace planar_gw::gw
