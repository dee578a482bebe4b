#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "vcw/verify.hpp"
#include "vcw/weighting.hpp"

namespace vcw {

struct CertificateFormat {
  bool trace = false;  // per-stage detail
};

// Line-oriented text, stable key order. The first line is "vcw-certificate 1";
// each edge weight appears as "weight u v w".
void write_certificate_text(std::ostream& out, const Certificate& cert,
                            CertificateFormat format = {});

// Same content as a JSON document.
void write_certificate_json(std::ostream& out, const Certificate& cert,
                            CertificateFormat format = {});

// Plain "u v w" lines.
void write_weights(std::ostream& out, const Graph& g, const EdgeWeighting& w);

// Accepts a plain weight file ("u v w" per line, '#' comments) or a text
// certificate (its "weight u v w" lines). Throws ParseError with line numbers.
std::vector<WeightEntry> read_weight_entries(std::istream& in);
std::vector<WeightEntry> read_weight_file(const std::string& path);

}  // namespace vcw
