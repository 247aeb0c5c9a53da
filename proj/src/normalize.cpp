#include "slp/normalize.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace slp {
namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool is_alpha(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z');
}

bool is_quad_char(char c) { return is_digit(c) || c == '.'; }

bool is_host_char(char c) { return is_alpha(c) || is_digit(c) || c == '-' || c == '.'; }

// Exactly four octets of 1-3 digits, each <= 255.
bool is_dotted_quad(std::string_view run) {
  int octets = 0;
  std::size_t i = 0;
  while (i <= run.size()) {
    std::size_t j = i;
    while (j < run.size() && is_digit(run[j])) ++j;
    const std::size_t digits = j - i;
    if (digits < 1 || digits > 3) return false;
    int value = 0;
    for (std::size_t k = i; k < j; ++k) value = value * 10 + (run[k] - '0');
    if (value > 255) return false;
    ++octets;
    if (j == run.size()) break;
    if (run[j] != '.') return false;
    i = j + 1;
    if (i > run.size()) return false;
  }
  return octets == 4;
}

bool is_hostname(std::string_view run, const std::vector<std::string>& tlds) {
  std::size_t label_count = 0;
  std::size_t start = 0;
  std::string_view last_label;
  for (std::size_t i = 0; i <= run.size(); ++i) {
    if (i == run.size() || run[i] == '.') {
      if (i == start) return false;  // empty label
      last_label = run.substr(start, i - start);
      ++label_count;
      start = i + 1;
    }
  }
  if (label_count < 2) return false;
  return std::find(tlds.begin(), tlds.end(), last_label) != tlds.end();
}

template <typename RunChar, typename Replace>
NormalizationReport replace_runs(std::string_view raw, RunChar run_char, Replace replace) {
  NormalizationReport report;
  report.output.reserve(raw.size());
  std::size_t i = 0;
  while (i < raw.size()) {
    if (!run_char(raw[i])) {
      report.output.push_back(raw[i]);
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < raw.size() && run_char(raw[j])) ++j;
    const std::string_view run = raw.substr(i, j - i);
    if (!replace(run, report)) report.output.append(run);
    i = j;
  }
  return report;
}

}  // namespace

const std::vector<std::string>& default_tlds() {
  static const std::vector<std::string> tlds = {
      "com", "net", "org", "io", "edu", "gov", "ru", "de", "uk", "info", "local",
  };
  return tlds;
}

std::vector<std::string> load_tld_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read TLD list: " + path);
  std::vector<std::string> tlds;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
      line.pop_back();
    }
    std::size_t begin = 0;
    while (begin < line.size() && (line[begin] == ' ' || line[begin] == '\t')) ++begin;
    if (begin < line.size()) tlds.push_back(line.substr(begin));
  }
  return tlds;
}

NormalizationReport normalize_ips(std::string_view raw) {
  return replace_runs(raw, is_quad_char, [](std::string_view run, NormalizationReport& report) {
    if (!is_dotted_quad(run)) return false;
    report.output.append("1.1.1.1");
    ++report.ip_replacements;
    return true;
  });
}

NormalizationReport normalize_domains(std::string_view raw, const std::vector<std::string>& tlds) {
  return replace_runs(raw, is_host_char, [&](std::string_view run, NormalizationReport& report) {
    if (!is_hostname(run, tlds)) return false;
    report.output.append("example.com");
    ++report.domain_replacements;
    return true;
  });
}

std::string normalize(std::string_view raw, const std::vector<std::string>& tlds) {
  return normalize_domains(normalize_ips(raw).output, tlds).output;
}

}  // namespace slp
