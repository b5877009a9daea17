#include "polyns/dataset.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "polyns/errors.hpp"

namespace polyns {

struct Dataset::Impl {
  nlohmann::json doc = nlohmann::json::object();
};

Dataset::Dataset() : impl_(std::make_unique<Impl>()) {}
Dataset::~Dataset() = default;
Dataset::Dataset(const Dataset& other)
    : impl_(std::make_unique<Impl>(*other.impl_)), origin_(other.origin_) {}
Dataset::Dataset(Dataset&&) noexcept = default;
Dataset& Dataset::operator=(const Dataset& other) {
  impl_ = std::make_unique<Impl>(*other.impl_);
  origin_ = other.origin_;
  return *this;
}
Dataset& Dataset::operator=(Dataset&&) noexcept = default;

Dataset Dataset::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("data file not found: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return from_text(buffer.str(), path);
}

Dataset Dataset::from_text(const std::string& text, const std::string& origin) {
  Dataset data;
  data.origin_ = origin;
  try {
    data.impl_->doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DataError("failed to parse " + origin + ": " + e.what());
  }
  if (!data.impl_->doc.is_object())
    throw DataError(origin + ": top-level value must be a key-value object");
  return data;
}

bool Dataset::empty() const { return impl_->doc.empty(); }

bool Dataset::has(const std::string& key) const {
  return impl_->doc.contains(key);
}

namespace {

[[noreturn]] void missing(const std::string& origin, const std::string& key) {
  throw DataError(origin + ": missing required key \"" + key + "\"");
}

[[noreturn]] void mismatch(const std::string& origin, const std::string& key,
                           const char* wanted) {
  throw DataError(origin + ": key \"" + key + "\" is not " + wanted);
}

}  // namespace

long long Dataset::get_int(const std::string& key) const {
  if (!has(key)) missing(origin_, key);
  const auto& v = impl_->doc.at(key);
  if (!v.is_number_integer()) mismatch(origin_, key, "an integer");
  return v.get<long long>();
}

double Dataset::get_real(const std::string& key) const {
  if (!has(key)) missing(origin_, key);
  const auto& v = impl_->doc.at(key);
  if (!v.is_number()) mismatch(origin_, key, "a number");
  return v.get<double>();
}

std::vector<long long> Dataset::get_int_array(const std::string& key) const {
  if (!has(key)) missing(origin_, key);
  const auto& v = impl_->doc.at(key);
  if (!v.is_array()) mismatch(origin_, key, "an integer array");
  std::vector<long long> out;
  out.reserve(v.size());
  for (const auto& item : v) {
    if (!item.is_number_integer()) mismatch(origin_, key, "an integer array");
    out.push_back(item.get<long long>());
  }
  return out;
}

std::vector<double> Dataset::get_real_array(const std::string& key) const {
  if (!has(key)) missing(origin_, key);
  const auto& v = impl_->doc.at(key);
  if (!v.is_array()) mismatch(origin_, key, "a numeric array");
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& item : v) {
    if (!item.is_number()) mismatch(origin_, key, "a numeric array");
    out.push_back(item.get<double>());
  }
  return out;
}

long long Dataset::get_int_or(const std::string& key, long long fallback) const {
  return has(key) ? get_int(key) : fallback;
}

double Dataset::get_real_or(const std::string& key, double fallback) const {
  return has(key) ? get_real(key) : fallback;
}

}  // namespace polyns
