#include "options.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include <CLI11.hpp>

#include <diosum/rational.hpp>

namespace diosum::cli {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

bool given(const std::vector<std::string>& args, const std::string& key) {
  const std::string flag = "--" + key;
  return std::any_of(args.begin(), args.end(),
                     [&](const std::string& a) { return a == flag || a.rfind(flag + "=", 0) == 0; });
}

}  // namespace

std::vector<std::string> split_spec_list(const std::vector<std::string>& values) {
  std::vector<std::string> out;
  for (const auto& value : values) {
    bool fresh = true;
    for (auto piece : split(value, ',')) {
      piece = trim(piece);
      const bool starts_spec = !piece.empty() && std::isalpha(static_cast<unsigned char>(piece[0]));
      if (fresh || starts_spec) {
        out.push_back(piece);
        fresh = false;
      } else {
        out.back() += "," + piece;
      }
    }
  }
  return out;
}

std::vector<IrrationalSpec> parse_specs(const std::vector<std::string>& values) {
  std::vector<IrrationalSpec> specs;
  for (const auto& s : split_spec_list(values)) specs.push_back(parse_spec(s));
  if (specs.empty()) throw std::invalid_argument("--alpha is required");
  return specs;
}

std::vector<std::uint64_t> parse_n_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  for (const auto& piece : split(text, ',')) out.push_back(parse_count(trim(piece)));
  return out;
}

std::vector<std::uint64_t> parse_n_geom(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3 || parts[2].empty() || parts[2][0] != 'x')
    throw std::invalid_argument("--N-geom expects a:b:xR, got " + text);
  const std::uint64_t a = parse_count(parts[0]);
  const std::uint64_t b = parse_count(parts[1]);
  const Rational ratio = parse_rational(parts[2].substr(1));
  if (ratio <= 1) throw std::invalid_argument("--N-geom ratio must exceed 1");
  std::vector<std::uint64_t> out;
  for (Rational v = Rational(to_bigint(a)); v <= Rational(to_bigint(b)); v *= ratio) {
    const std::uint64_t n = to_u64(floor(v));
    if (out.empty() || out.back() != n) out.push_back(n);
  }
  return out;
}

Weight parse_weight(const std::string& text) {
  if (text == "one" || text == "1") return Weight::one;
  if (text == "inverse-n" || text == "1/n") return Weight::inverse_n;
  if (text == "linf") return Weight::linf;
  throw std::invalid_argument("unknown weight " + text + " (one, inverse-n, linf)");
}

std::string weight_name(Weight w) {
  switch (w) {
    case Weight::one: return "one";
    case Weight::inverse_n: return "inverse-n";
    case Weight::linf: return "linf";
  }
  return "";
}

void apply_config(std::vector<std::string>& args) {
  std::string path;
  for (auto it = args.begin(); it != args.end(); ++it) {
    if (*it == "--config") {
      if (it + 1 == args.end()) throw std::invalid_argument("--config needs a file");
      path = *(it + 1);
      args.erase(it, it + 2);
      break;
    }
    if (it->rfind("--config=", 0) == 0) {
      path = it->substr(9);
      args.erase(it);
      break;
    }
  }
  if (path.empty()) return;

  const auto sub = std::find_if(args.begin(), args.end(), [](const std::string& a) { return a.rfind('-', 0) != 0; });
  if (sub == args.end()) throw std::invalid_argument("--config needs a subcommand");

  std::vector<std::string> injected;
  for (const auto& item : CLI::ConfigINI().from_file(path)) {
    if (!item.parents.empty() && item.parents != std::vector<std::string>{*sub}) continue;
    const std::string& key = item.name;
    // the two grid spellings override each other
    if (key == "N" || key == "N-geom") {
      if (given(args, "N") || given(args, "N-geom")) continue;
    } else if (given(args, key)) {
      continue;
    }
    std::string value;
    for (std::size_t i = 0; i < item.inputs.size(); ++i) value += (i ? "," : "") + item.inputs[i];
    if (value == "false") continue;
    injected.push_back("--" + key);
    if (value != "true") injected.push_back(value);
  }
  args.insert(sub + 1, injected.begin(), injected.end());
}

}  // namespace diosum::cli
