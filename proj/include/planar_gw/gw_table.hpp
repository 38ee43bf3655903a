#pragma once

// Genus-0 invariants N_d(r, s, theta) of planar curves in P^3: degree-d
// rational curves lying in some plane, meeting r general lines and s general
// points, with the base class a^theta imposed on the family of planes.
// Evaluated through the WDVV-derived recursion and memoized exactly.

#include "planar_gw/rational.hpp"

#include <compare>
#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <shared_mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace planar_gw::gw {

struct GWKey {
  int d = 1;
  int r = 0;
  int s = 0;
  int theta = 0;

  /// r + 2s + theta equals the virtual dimension 3d + 2.
  constexpr bool balanced() const { return r + 2 * s + theta == 3 * d + 2; }

  friend constexpr auto operator<=>(const GWKey&, const GWKey&) = default;
};

std::string to_string(const GWKey& key);  // "d,r,s,theta"

/// Throws std::invalid_argument unless d >= 1 and r, s, theta >= 0.
void validate(const GWKey& key);

/// A memoized value disagreed with another source for the same key.
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Virtual dimension 3d + 2 + n of genus-0, n-pointed planar maps of degree d.
int expected_codim(int d, int n);

/// C(n, k), zero when k < 0 or k > n. Negative n throws.
BigInt binomial(int n, int k);

/// Write-once store of N-values. Readers may run concurrently; writers are
/// serialized, and a second write of a different value for a key throws
/// IntegrityError.
class MemoTable {
 public:
  MemoTable() = default;
  MemoTable(const MemoTable& other);
  MemoTable& operator=(const MemoTable& other);

  std::optional<Rational> find(const GWKey& key) const;
  void store(const GWKey& key, const Rational& value);

  std::size_t size() const;
  std::vector<std::pair<GWKey, Rational>> entries() const;

  /// Entries produced by evaluating the recursion, as opposed to loaded.
  std::size_t computed_count() const;
  void note_computed();

 private:
  mutable std::shared_mutex mutex_;
  std::map<GWKey, Rational> values_;
  std::size_t computed_ = 0;
};

/// N_d(r, s, theta). Rule order: balance, then s/theta bounds, then the
/// initial table for r <= 2, then the recursion for r >= 3.
Rational n_planar(const GWKey& key, MemoTable& memo);

/// N_d(r+1, s-1, theta+1) - d N_d(r, s-1, theta+2): one point condition H^3
/// rewritten as a H^2 - a^2 H + a^3, with the a^3 term dropping out by the
/// string axiom. Requires s >= 1.
Rational reduce_point_insertion(const GWKey& key, MemoTable& memo);

/// <a^theta_1 H^m_1, ..., a^theta_n H^m_n>_d with the a-powers summed into
/// theta_total. Each H insertion contributes a factor d; an insertion with
/// m = 0 makes the whole invariant vanish (d >= 1).
Rational gw_invariant(int d, int theta_total, std::span<const int> insertions, MemoTable& memo);

/// All balanced keys with d <= d_max, s <= 3, theta <= 3, sorted by (d, s, theta).
std::vector<std::pair<GWKey, Rational>> full_table(int d_max, MemoTable& memo);

// Cache file: {"schema":"planar-gw-memo-v1","values":{"d,r,s,theta":"n",...}}.
inline constexpr const char* kCacheSchema = "planar-gw-memo-v1";

void save_cache(const std::filesystem::path& path, const MemoTable& memo);

/// Seeds `memo` from a cache file, then checks every loaded entry against
/// its defining rule (vanishing, initial table, or one recursion step)
/// evaluated on the loaded values. Throws IntegrityError on any mismatch and
/// std::runtime_error on a malformed file. Returns the number of entries.
std::size_t load_cache(const std::filesystem::path& path, MemoTable& memo);

}  // namespace planar_gw::gw
