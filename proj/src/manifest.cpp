#include "polyns/manifest.hpp"

#include <cctype>
#include <cstdio>
#include <sstream>

#include "polyns/errors.hpp"
#include "polyns/io_util.hpp"

namespace polyns {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

struct TomlValue {
  enum class Kind { String, Integer, Float, Boolean } kind;
  std::string str;
  long long integer = 0;
  double real = 0.0;
  bool boolean = false;
  std::uint64_t unsigned_integer = 0;
};

TomlValue parse_value(const std::string& raw, const std::string& where) {
  TomlValue v{};
  const std::string s = trim(raw);
  if (s.empty()) throw DataError(where + ": empty value");
  if (s.front() == '"') {
    if (s.size() < 2 || s.back() != '"')
      throw DataError(where + ": unterminated string");
    v.kind = TomlValue::Kind::String;
    for (std::size_t i = 1; i + 1 < s.size(); ++i) {
      if (s[i] == '\\' && i + 2 < s.size()) {
        ++i;
        v.str.push_back(s[i]);
      } else {
        v.str.push_back(s[i]);
      }
    }
    return v;
  }
  if (s == "true" || s == "false") {
    v.kind = TomlValue::Kind::Boolean;
    v.boolean = s == "true";
    return v;
  }
  const bool looks_float = s.find_first_of(".eE") != std::string::npos ||
                           s == "inf" || s == "-inf" || s == "nan";
  errno = 0;
  char* end = nullptr;
  if (looks_float) {
    v.kind = TomlValue::Kind::Float;
    v.real = std::strtod(s.c_str(), &end);
  } else {
    v.kind = TomlValue::Kind::Integer;
    if (!s.empty() && s.front() == '-') {
      v.integer = std::strtoll(s.c_str(), &end, 10);
      v.unsigned_integer = static_cast<std::uint64_t>(v.integer);
    } else {
      v.unsigned_integer = std::strtoull(s.c_str(), &end, 10);
      v.integer = static_cast<long long>(v.unsigned_integer);
    }
  }
  if (end == nullptr || *end != '\0' || errno == ERANGE)
    throw DataError(where + ": cannot parse value \"" + s + "\"");
  return v;
}

long long as_int(const TomlValue& v, const std::string& where) {
  if (v.kind != TomlValue::Kind::Integer)
    throw DataError(where + ": expected an integer");
  return v.integer;
}

std::uint64_t as_uint(const TomlValue& v, const std::string& where) {
  if (v.kind != TomlValue::Kind::Integer)
    throw DataError(where + ": expected an integer");
  return v.unsigned_integer;
}

double as_real(const TomlValue& v, const std::string& where) {
  if (v.kind == TomlValue::Kind::Float) return v.real;
  if (v.kind == TomlValue::Kind::Integer) return static_cast<double>(v.integer);
  throw DataError(where + ": expected a number");
}

bool as_bool(const TomlValue& v, const std::string& where) {
  if (v.kind != TomlValue::Kind::Boolean)
    throw DataError(where + ": expected true or false");
  return v.boolean;
}

std::string as_string(const TomlValue& v, const std::string& where) {
  if (v.kind != TomlValue::Kind::String)
    throw DataError(where + ": expected a quoted string");
  return v.str;
}

}  // namespace

std::string manifest_to_string(const CliInvocation& inv,
                               std::span<const std::string> override_notes) {
  if (!inv.num_repeats)
    throw std::logic_error("manifest_to_string: invocation is not resolved");
  std::ostringstream out;
  out << "# run manifest: replay with --from-toml <this file>\n";
  for (const auto& note : override_notes)
    out << "# command line overrode " << note << "\n";
  out << "model_name = " << quote(inv.model_name) << "\n\n";
  out << "[sampler]\n";
  out << "nlive = " << inv.nlive << "\n";
  out << "num_repeats = " << *inv.num_repeats << "\n";
  out << "precision = " << format_double(inv.precision) << "\n";
  out << "seed = " << inv.sampler_seed << "\n";
  out << "no_feedback = " << (inv.no_feedback ? "true" : "false") << "\n";
  out << "no_write = " << (inv.no_write ? "true" : "false") << "\n";
  out << "no_derived = " << (inv.no_derived ? "true" : "false") << "\n\n";
  out << "[random]\n";
  out << "seed = " << inv.model_seed << "\n\n";
  out << "[data]\n";
  out << "file = " << quote(inv.data_file) << "\n\n";
  out << "[output]\n";
  out << "json_file = " << quote(inv.json_file) << "\n";
  out << "chain_dir = " << quote(inv.chain_dir) << "\n";
  return out.str();
}

CliInvocation manifest_from_string(const std::string& text,
                                   const std::string& origin) {
  CliInvocation inv;
  std::istringstream in(text);
  std::string line;
  std::string table;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string s = trim(line);
    if (s.empty() || s.front() == '#') continue;
    const std::string where = origin + ":" + std::to_string(line_no);
    if (s.front() == '[') {
      if (s.back() != ']') throw DataError(where + ": malformed table header");
      table = trim(s.substr(1, s.size() - 2));
      if (table != "sampler" && table != "random" && table != "data" &&
          table != "output")
        throw DataError(where + ": unknown table [" + table + "]");
      continue;
    }
    const auto eq = s.find('=');
    if (eq == std::string::npos)
      throw DataError(where + ": expected key = value");
    const std::string key = trim(s.substr(0, eq));
    const TomlValue value = parse_value(s.substr(eq + 1), where);

    const std::string qualified = table.empty() ? key : table + "." + key;
    if (qualified == "model_name") {
      inv.model_name = as_string(value, where);
    } else if (qualified == "sampler.nlive") {
      inv.nlive = static_cast<int>(as_int(value, where));
    } else if (qualified == "sampler.num_repeats") {
      inv.num_repeats = static_cast<int>(as_int(value, where));
    } else if (qualified == "sampler.precision") {
      inv.precision = as_real(value, where);
    } else if (qualified == "sampler.seed") {
      inv.sampler_seed = as_uint(value, where);
    } else if (qualified == "sampler.no_feedback") {
      inv.no_feedback = as_bool(value, where);
    } else if (qualified == "sampler.no_write") {
      inv.no_write = as_bool(value, where);
    } else if (qualified == "sampler.no_derived") {
      inv.no_derived = as_bool(value, where);
    } else if (qualified == "random.seed") {
      inv.model_seed = as_uint(value, where);
    } else if (qualified == "data.file") {
      inv.data_file = as_string(value, where);
    } else if (qualified == "output.json_file") {
      inv.json_file = as_string(value, where);
    } else if (qualified == "output.chain_dir") {
      inv.chain_dir = as_string(value, where);
    } else {
      throw DataError(where + ": unknown key \"" + qualified + "\"");
    }
  }
  return inv;
}

void write_manifest(const CliInvocation& invocation, const std::string& path,
                    std::span<const std::string> override_notes) {
  write_text_atomic(path, manifest_to_string(invocation, override_notes));
}

CliInvocation read_manifest(const std::string& path) {
  return manifest_from_string(read_text_file(path), path);
}

}  // namespace polyns
