#pragma once

#include <memory>
#include <string>
#include <vector>

namespace polyns {

/// Key-value document backing a model's data block. Parsed from JSON; typed
/// getters report missing keys and type mismatches by name (DataError).
class Dataset {
 public:
  Dataset();
  ~Dataset();
  Dataset(const Dataset&);
  Dataset(Dataset&&) noexcept;
  Dataset& operator=(const Dataset&);
  Dataset& operator=(Dataset&&) noexcept;

  static Dataset from_file(const std::string& path);
  static Dataset from_text(const std::string& text, const std::string& origin);

  bool empty() const;
  bool has(const std::string& key) const;

  long long get_int(const std::string& key) const;
  double get_real(const std::string& key) const;
  std::vector<long long> get_int_array(const std::string& key) const;
  std::vector<double> get_real_array(const std::string& key) const;

  long long get_int_or(const std::string& key, long long fallback) const;
  double get_real_or(const std::string& key, double fallback) const;

  const std::string& origin() const { return origin_; }

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  std::string origin_;
};

}  // namespace polyns
