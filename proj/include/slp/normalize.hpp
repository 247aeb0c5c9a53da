#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace slp {

struct NormalizationReport {
  std::string output;
  std::size_t ip_replacements = 0;
  std::size_t domain_replacements = 0;
};

/// Built-in top-level-domain allow list used by normalize_domains().
const std::vector<std::string>& default_tlds();

/// Reads a TLD allow list from a UTF-8 text file, one TLD per line.
/// Blank lines are skipped. Throws std::runtime_error when the file
/// cannot be read.
std::vector<std::string> load_tld_list(const std::string& path);

/// Replaces every standalone dotted-quad IPv4 literal with "1.1.1.1".
/// An address only counts when each octet is 1-3 digits and <= 255 and
/// the quad is not embedded in a longer digit/dot run, so "999.1.1.1"
/// and version strings like "1.2.3.4.5" are left alone.
NormalizationReport normalize_ips(std::string_view raw);

/// Replaces every hostname of the form label(.label)+ whose final label
/// is in `tlds` with "example.com". Hostnames are recognised lexically:
/// a maximal run of [A-Za-z0-9.-] delimited by whitespace or other
/// punctuation. Replacement of "example.com" by itself still counts.
NormalizationReport normalize_domains(std::string_view raw,
                                      const std::vector<std::string>& tlds = default_tlds());

/// normalize_domains after normalize_ips. Idempotent.
std::string normalize(std::string_view raw,
                      const std::vector<std::string>& tlds = default_tlds());

}  // namespace slp
